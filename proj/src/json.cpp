#include "gaudin/json.hpp"

#include <string>

namespace gaudin {

namespace {

Json counts_json(const std::map<unsigned, std::uint64_t>& m) {
    Json out = Json::object();
    for (const auto& [size, count] : m) out[std::to_string(size)] = count;
    return out;
}

} // namespace

Json to_json(const FpVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.value());
    return out;
}

Json to_json(const Poly& f) { return to_json(f.coeffs()); }

Json to_json(const GfMatrix& a) {
    Json out = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(to_json(a.row(r)));
    return out;
}

Json to_json(const WeightVector& v) {
    Json coords = Json::array();
    const WeightSpace space(v.config(), v.level());
    for (std::size_t i = 0; i < space.dim(); ++i)
        if (!v.coords()[i].is_zero()) coords.push_back(Json::array({space.basis()[i], v.coords()[i].value()}));
    return Json{{"k", v.level()}, {"coords", coords}};
}

Json to_json(const std::vector<BetheSolution>& sols) {
    Json out = Json::array();
    for (const auto& s : sols) out.push_back(to_json(s.t));
    return out;
}

Json to_json(const BetheVectorReport& rep) {
    Json failures = Json::array();
    for (const auto& f : rep.failures)
        failures.push_back({{"check", f.check}, {"index", f.index}, {"detail", f.detail}});
    return Json{{"nonzero", rep.nonzero},     {"singular", rep.singular},
                {"relations", rep.relations}, {"eigen", rep.eigen},
                {"eigenvalues", to_json(rep.eigenvalues)},
                {"vector", to_json(rep.vector)},
                {"failures", failures}};
}

Json to_json(const CensusRecord& rec) {
    return Json{{"p", rec.p},
                {"counts", counts_json(rec.counts)},
                {"predicted", counts_json(rec.predicted)},
                {"agrees", rec.agrees}};
}

Json to_json(const Verification& v) { return Json{{"passed", v.passed()}, {"failures", v.failures}}; }

Json to_json(const Eigenline& e) {
    return Json{{"root", e.root.value()},
                {"multiplicity", e.multiplicity},
                {"w_coords", to_json(e.w_coords)},
                {"vector", to_json(e.vector)},
                {"eigenvalues", to_json(e.eigenvalues)}};
}

Json to_json(const CoincidenceEntry& e) {
    return Json{{"root", e.root.value()},
                {"multiplicity", e.multiplicity},
                {"checked", e.checked},
                {"expansions_agree", e.expansions_agree},
                {"matches_bethe_vector", e.matches_bethe_vector},
                {"proportional", e.proportional}};
}

} // namespace gaudin
