#pragma once

#include <json.hpp>

#include "mixlab/group.hpp"
#include "mixlab/largeness.hpp"
#include "mixlab/ramsey.hpp"
#include "mixlab/systems.hpp"

namespace mixlab {

using Json = nlohmann::ordered_json;

// Malformed input raises ErrorKind::Schema naming the offending field.

Json to_json(const BigInt& z);  // number when it fits in 64 bits, else a decimal string
BigInt bigint_from_json(const Json& j);
Json to_json(const Rational& q);  // always "num/den"
Rational rational_from_json(const Json& j);

Json to_json(const GroupCtx& ctx);
GroupCtx group_from_json(const Json& j);
Json to_json(const GroupElement& g);
GroupElement element_from_json(const GroupCtx& ctx, const Json& j);
Json to_json(const IndexSet& alpha);
IndexSet index_set_from_json(const Json& j);
Json to_json(const Tuple& tuple);
Tuple tuple_from_json(const GroupCtx& ctx, const Json& j);

Json to_json(const CylinderPattern& p);
CylinderPattern pattern_from_json(const GroupCtx& coords, const Json& j);

/// {"group", "m", "d", "K", "columns": [[column t of component j, ...], ...]}.
Json to_json(const SeedMatrix& seed);
SeedMatrix seed_from_json(const Json& j);

Json to_json(const SimplexArray& arr);
SimplexArray simplex_from_json(const Json& j);

Json to_json(const HomogeneousCert& cert);
HomogeneousCert homogeneous_from_json(const Json& j);
Json to_json(const RLimitEstimate& est);
RLimitEstimate rlimit_from_json(const Json& j);
Json to_json(const LargenessCert& cert);
LargenessCert largeness_from_json(const GroupCtx& ctx, const Json& j);

/// Field access with schema errors instead of nlohmann exceptions.
const Json& require(const Json& obj, const char* key);
std::size_t size_from_json(const Json& j, const char* what);

}  // namespace mixlab
