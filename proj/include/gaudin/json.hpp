#pragma once

#include <vector>

#include <json.hpp>

#include "gaudin/bethe.hpp"
#include "gaudin/k1.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/wronski.hpp"

namespace gaudin {

using Json = nlohmann::ordered_json;

// Field elements serialize as their representatives in [0, p), polynomials as
// coefficient lists with the constant term first, matrices row by row.
Json to_json(const FpVec& v);
Json to_json(const Poly& f);
Json to_json(const GfMatrix& a);
/// {"k": level, "coords": [[J, c], ...]} over the nonzero coordinates.
Json to_json(const WeightVector& v);
Json to_json(const std::vector<BetheSolution>& sols);
Json to_json(const BetheVectorReport& rep);
Json to_json(const CensusRecord& rec);
Json to_json(const Verification& v);
Json to_json(const Eigenline& e);
Json to_json(const CoincidenceEntry& e);

} // namespace gaudin
