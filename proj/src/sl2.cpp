#include "gaudin/sl2.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gaudin/errors.hpp"

namespace gaudin {

TensorConfig::TensorConfig(Prime p, std::vector<int> m) : p_(p), m_(std::move(m)), total_(0) {
    if (m_.empty()) throw InvalidInput("tensor product needs at least one factor");
    for (int ms : m_) {
        if (ms < 1) throw InvalidInput("highest weights must be positive");
        total_ += ms;
    }
    if (static_cast<std::uint64_t>(total_) >= p_.value())
        throw PreconditionError("hypothesis p > |m| fails: p = " + std::to_string(p_.value()) +
                                ", |m| = " + std::to_string(total_));
}

namespace {

void enumerate_level(const std::vector<int>& m, std::size_t pos, int remaining, MultiIndex& cur,
                     std::vector<MultiIndex>& out) {
    if (pos == m.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int tail = 0;
    for (std::size_t s = pos + 1; s < m.size(); ++s) tail += m[s];
    for (int j = std::min(m[pos], remaining); j >= 0 && remaining - j <= tail; --j) {
        cur[pos] = j;
        enumerate_level(m, pos + 1, remaining - j, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

WeightSpace::WeightSpace(const TensorConfig& config, int k) : k_(k) {
    if (k < 0 || k > config.total()) return;
    MultiIndex cur(config.n(), 0);
    enumerate_level(config.weights(), 0, k, cur, basis_);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> WeightSpace::position(const MultiIndex& j) const {
    auto it = index_.find(j);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<MultiIndex> basis_of_weight_space(const TensorConfig& config, int k) {
    if (k < 0 || k > config.total())
        throw InvalidInput("weight level " + std::to_string(k) + " outside [0, " +
                           std::to_string(config.total()) + "]");
    return WeightSpace(config, k).basis();
}

WeightVector::WeightVector(TensorConfig config, int k, FpVec coords)
    : config_(std::move(config)), k_(k), coords_(std::move(coords)) {
    if (coords_.size() != WeightSpace(config_, k_).dim())
        throw InvalidInput("coordinate count does not match the weight space dimension");
}

WeightVector WeightVector::zero(const TensorConfig& config, int k) {
    return WeightVector(config, k, FpVec(WeightSpace(config, k).dim(), config.prime().zero()));
}

WeightVector WeightVector::basis_vector(const TensorConfig& config, const MultiIndex& j) {
    const int k = std::accumulate(j.begin(), j.end(), 0);
    WeightSpace space(config, k);
    auto pos = space.position(j);
    if (!pos) throw InvalidInput("multi-index outside the weight space");
    FpVec coords(space.dim(), config.prime().zero());
    coords[*pos] = config.prime().one();
    return WeightVector(config, k, std::move(coords));
}

Fp WeightVector::coeff(const MultiIndex& j) const {
    auto pos = WeightSpace(config_, k_).position(j);
    return pos ? coords_[*pos] : config_.prime().zero();
}

void WeightVector::require_compatible(const WeightVector& o) const {
    if (!(config_ == o.config_) || k_ != o.k_)
        throw InvalidInput("weight vectors from different spaces");
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

WeightVector& WeightVector::operator*=(const Fp& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

WeightVector act_e(const WeightVector& v) {
    const auto& cfg = v.config();
    const auto& m = cfg.weights();
    const Prime p = cfg.prime();
    WeightSpace src(cfg, v.level());
    WeightSpace dst(cfg, v.level() - 1);
    FpVec out(dst.dim(), p.zero());
    for (std::size_t b = 0; b < src.dim(); ++b) {
        if (v.coords()[b].is_zero()) continue;
        MultiIndex j = src.basis()[b];
        for (std::size_t s = 0; s < cfg.n(); ++s) {
            if (j[s] == 0) continue;
            const int js = j[s];
            --j[s];
            out[*dst.position(j)] += p(js * (m[s] - js + 1)) * v.coords()[b];
            ++j[s];
        }
    }
    return WeightVector(cfg, v.level() - 1, std::move(out));
}

WeightVector act_f(const WeightVector& v) {
    const auto& cfg = v.config();
    const auto& m = cfg.weights();
    WeightSpace src(cfg, v.level());
    WeightSpace dst(cfg, v.level() + 1);
    FpVec out(dst.dim(), cfg.prime().zero());
    for (std::size_t b = 0; b < src.dim(); ++b) {
        if (v.coords()[b].is_zero()) continue;
        MultiIndex j = src.basis()[b];
        for (std::size_t s = 0; s < cfg.n(); ++s) {
            if (j[s] == m[s]) continue;
            ++j[s];
            out[*dst.position(j)] += v.coords()[b];
            --j[s];
        }
    }
    return WeightVector(cfg, v.level() + 1, std::move(out));
}

WeightVector act_h(const WeightVector& v) {
    const auto& cfg = v.config();
    return cfg.prime()(cfg.total() - 2 * v.level()) * v;
}

namespace {

template <class Action>
GfMatrix matrix_of(const TensorConfig& config, int k, int shift, Action action) {
    WeightSpace src(config, k);
    WeightSpace dst(config, k + shift);
    GfMatrix out(config.prime(), dst.dim(), src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c) {
        const WeightVector image = action(WeightVector::basis_vector(config, src.basis()[c]));
        for (std::size_t r = 0; r < dst.dim(); ++r) out(r, c) = image.coords()[r];
    }
    return out;
}

} // namespace

GfMatrix e_matrix(const TensorConfig& config, int k) {
    return matrix_of(config, k, -1, [](const WeightVector& v) { return act_e(v); });
}

GfMatrix f_matrix(const TensorConfig& config, int k) {
    return matrix_of(config, k, 1, [](const WeightVector& v) { return act_f(v); });
}

GfMatrix h_matrix(const TensorConfig& config, int k) {
    return matrix_of(config, k, 0, [](const WeightVector& v) { return act_h(v); });
}

std::vector<WeightVector> singular_subspace(const TensorConfig& config, int k) {
    if (k < 0 || k > config.total())
        throw InvalidInput("weight level " + std::to_string(k) + " out of range");
    std::vector<WeightVector> out;
    for (auto& v : e_matrix(config, k).kernel()) out.emplace_back(config, k, std::move(v));
    return out;
}

WeightVector casimir_on_pair(const WeightVector& v, std::size_t i, std::size_t j) {
    const auto& cfg = v.config();
    if (i == j || i >= cfg.n() || j >= cfg.n())
        throw InvalidInput("Casimir needs two distinct factor indices in range");
    const auto& m = cfg.weights();
    const Prime p = cfg.prime();
    const Fp half = p(2).inv();
    WeightSpace space(cfg, v.level());
    FpVec out(space.dim(), p.zero());
    for (std::size_t b = 0; b < space.dim(); ++b) {
        const Fp c = v.coords()[b];
        if (c.is_zero()) continue;
        const MultiIndex& jj = space.basis()[b];
        // e in slot a, f in slot b
        auto hop = [&](std::size_t a, std::size_t bb) {
            if (jj[a] == 0 || jj[bb] == m[bb]) return;
            MultiIndex target = jj;
            --target[a];
            ++target[bb];
            out[*space.position(target)] += p(jj[a] * (m[a] - jj[a] + 1)) * c;
        };
        hop(i, j);
        hop(j, i);
        out[b] += p((m[i] - 2 * jj[i]) * (m[j] - 2 * jj[j])) * half * c;
    }
    return WeightVector(cfg, v.level(), std::move(out));
}

GfMatrix casimir_matrix(const TensorConfig& config, int k, std::size_t i, std::size_t j) {
    return matrix_of(config, k, 0, [&](const WeightVector& v) { return casimir_on_pair(v, i, j); });
}

void require_valid_points(const TensorConfig& config, const FpVec& z) {
    if (z.size() != config.n())
        throw InvalidInput("expected " + std::to_string(config.n()) + " points, got " +
                           std::to_string(z.size()));
    for (const auto& x : z)
        if (!(x.prime() == config.prime())) throw ContextError("point from a different field");
    if (!pairwise_distinct(z)) throw InvalidInput("points z must be pairwise distinct");
}

GfMatrix gaudin_hamiltonian(const TensorConfig& config, const FpVec& z, std::size_t s, int k) {
    require_valid_points(config, z);
    if (s >= config.n()) throw InvalidInput("Hamiltonian index out of range");
    WeightSpace space(config, k);
    GfMatrix out(config.prime(), space.dim(), space.dim());
    for (std::size_t l = 0; l < config.n(); ++l) {
        if (l == s) continue;
        out += casimir_matrix(config, k, s, l) * (z[s] - z[l]).inv();
    }
    return out;
}

WeightVector apply(const GfMatrix& op, const WeightVector& v, int target_level) {
    return WeightVector(v.config(), target_level, op * v.coords());
}

} // namespace gaudin
