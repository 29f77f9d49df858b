// Command-line front end: every command prints JSON, one document per run or
// one line per z-tuple when --z is omitted.
//
// Exit status: 0 when every assertion held, 1 on a failed assertion, 2 when
// the input violates a hypothesis or the large-search guardrail.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaudin/acceptance.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/pipeline.hpp"

namespace {

using namespace gaudin;

constexpr int kMaxSmallK = 3;
constexpr std::int64_t kMaxSmallP = 101;

struct Options {
    std::int64_t p = 0;
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> z;
    int k = 1;
    std::string out;
    unsigned jobs = 1;
    bool force_large = false;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InvalidInput("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Prime parse_prime(const Options& o) {
    if (o.p < 3) throw InvalidInput("p must be an odd prime, got " + std::to_string(o.p));
    if (o.p > kMaxSmallP && !o.force_large)
        throw PreconditionError("p = " + std::to_string(o.p) + " exceeds " + std::to_string(kMaxSmallP) +
                                "; pass --force-large to search anyway");
    return Prime(static_cast<std::uint64_t>(o.p));
}

TensorConfig parse_config(const Options& o, Prime p) {
    if (o.m.empty()) throw InvalidInput("--m is required");
    std::vector<int> m;
    for (auto v : o.m) {
        if (v < 1 || v >= static_cast<std::int64_t>(p.value()))
            throw InvalidInput("highest weights must satisfy 1 <= m_s < p");
        m.push_back(static_cast<int>(v));
    }
    return TensorConfig(p, std::move(m));
}

// Points are reduced mod p first; distinctness is checked on the residues.
std::optional<FpVec> parse_points(const Options& o, const TensorConfig& config) {
    if (o.z.empty()) return std::nullopt;
    FpVec z = to_field(o.z, config.prime());
    require_valid_points(config, z);
    return z;
}

void check_k(const Options& o) {
    if (o.k < 0) throw InvalidInput("k must be nonnegative");
    if (o.k > kMaxSmallK && !o.force_large)
        throw PreconditionError("k = " + std::to_string(o.k) + " exceeds " + std::to_string(kMaxSmallK) +
                                "; pass --force-large to search anyway");
}

// Runs `one` on the given tuple or streams it over every distinct tuple.
template <typename F>
bool run_points(const Options& o, const TensorConfig& config, std::ostream& os, F one) {
    if (auto z = parse_points(o, config)) {
        const RunResult r = one(*z);
        os << r.doc.dump(2) << '\n';
        return r.passed;
    }
    bool passed = true;
    for (const auto& z : distinct_tuples(config.prime(), config.n())) {
        const RunResult r = one(z);
        os << r.doc.dump() << '\n';
        passed = passed && r.passed;
    }
    return passed;
}

bool dispatch(const std::string& command, const Options& o) {
    Output out(o.out);
    std::ostream& os = out.stream();
    if (command == "suite") {
        Json criteria = Json::array();
        bool passed = true;
        for (int id = 1; id <= kCriterionCount; ++id) {
            const CriterionResult r = run_criterion(id, o.jobs);
            std::cerr << format_line(r) << std::endl;
            criteria.push_back({{"id", r.id},
                                {"title", r.title},
                                {"passed", r.passed},
                                {"detail", r.detail},
                                {"seconds", r.seconds},
                                {"budget", r.budget}});
            passed = passed && r.passed;
        }
        os << Json{{"criteria", criteria}, {"passed", passed}}.dump(2) << '\n';
        return passed;
    }
    const Prime p = parse_prime(o);
    if (command == "census") {
        if (p.value() <= 4) throw PreconditionError("census needs p > n + 1 = 4");
        const RunResult r = run_census(p, o.jobs);
        os << r.doc.dump(2) << '\n';
        return r.passed;
    }
    const TensorConfig config = parse_config(o, p);
    if (command == "k1")
        return run_points(o, config, os, [&](const FpVec& z) { return run_k1(config, z); });
    check_k(o);
    auto problem = [&](const FpVec& z) { return BetheProblem(config, o.k, z); };
    if (command == "solve")
        return run_points(o, config, os, [&](const FpVec& z) { return run_solve(problem(z), o.jobs); });
    if (command == "verify")
        return run_points(o, config, os, [&](const FpVec& z) { return run_verify(problem(z), o.jobs); });
    return run_points(o, config, os, [&](const FpVec& z) { return run_wronski(problem(z), o.jobs); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bethe ansatz for the sl2 Gaudin model over F_p"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_m, bool needs_k) {
        sub->add_option("--p", o.p, "odd prime")->required();
        if (needs_m) {
            sub->add_option("--m", o.m, "highest weights, comma separated")->delimiter(',')->required();
            sub->add_option("--z", o.z, "points, comma separated; omit to sweep all tuples")->delimiter(',');
        }
        if (needs_k) sub->add_option("--k", o.k, "number of Bethe parameters")->required();
        sub->add_option("--out", o.out, "write JSON here instead of stdout");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_flag("--force-large", o.force_large, "allow k > 3 or p > 101");
    };
    add_common(app.add_subcommand("solve", "list solutions of the Bethe equations"), true, true);
    add_common(app.add_subcommand("verify", "check Bethe vectors are singular eigenvectors"), true, true);
    add_common(app.add_subcommand("wronski", "build and invert the Wronskian pair of each solution"), true, true);
    add_common(app.add_subcommand("census", "fiber sizes of the Wronski map on monic cubics"), false, false);
    add_common(app.add_subcommand("k1", "the Bethe algebra for one Bethe parameter"), true, false);
    auto* suite = app.add_subcommand("suite", "run every acceptance criterion");
    suite->add_option("--out", o.out, "write JSON here instead of stdout");
    suite->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, o) ? 0 : 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return 1;
    }
}
