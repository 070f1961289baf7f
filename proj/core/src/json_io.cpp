#include "mixlab/json_io.hpp"

#include <algorithm>

#include "mixlab/error.hpp"

namespace mixlab {

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object()) raise(ErrorKind::Schema, std::string("expected an object holding \"") + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) raise(ErrorKind::Schema, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    raise(ErrorKind::Schema, std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Json to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const Error& e) {
      raise(ErrorKind::Schema, e.what());
    }
  }
  raise(ErrorKind::Schema, "expected an integer, got " + j.dump());
}

Json to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      raise(ErrorKind::Schema, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(bigint_from_json(j));
  raise(ErrorKind::Schema, "expected a rational string \"num/den\", got " + j.dump());
}

Json to_json(const GroupCtx& ctx) {
  Json j;
  j["kind"] = to_string(ctx.kind);
  if (ctx.kind == GroupKind::IntVec) j["d"] = ctx.dim;
  return j;
}

GroupCtx group_from_json(const Json& j) {
  const Json& kind = require(j, "kind");
  if (!kind.is_string()) raise(ErrorKind::Schema, "group kind must be a string");
  const auto name = kind.get<std::string>();
  if (name == "Int") return GroupCtx::integers();
  if (name == "FinSupportIntSeq") return GroupCtx::finite_support();
  if (name == "IntVec") return GroupCtx::lattice(size_from_json(require(j, "d"), "group dimension"));
  raise(ErrorKind::Schema, "unknown group kind \"" + name + "\"");
}

Json to_json(const GroupElement& g) {
  Json j = Json::array();
  for (const auto& c : g.coords()) j.push_back(to_json(c));
  return j;
}

GroupElement element_from_json(const GroupCtx& ctx, const Json& j) {
  std::vector<BigInt> coords;
  if (j.is_array()) {
    for (const auto& c : j) coords.push_back(bigint_from_json(c));
  } else if (ctx.kind == GroupKind::Int) {
    coords.push_back(bigint_from_json(j));
  } else {
    raise(ErrorKind::Schema, "group element must be an array of integers");
  }
  try {
    return make_element(ctx, std::move(coords));
  } catch (const Error& e) {
    raise(ErrorKind::Schema, e.what());
  }
}

Json to_json(const IndexSet& alpha) {
  Json j = Json::array();
  for (auto k : alpha) j.push_back(k);
  return j;
}

IndexSet index_set_from_json(const Json& j) {
  if (!j.is_array()) raise(ErrorKind::Schema, "index set must be an array");
  IndexSet alpha;
  for (const auto& k : j) alpha.push_back(size_from_json(k, "index"));
  if (!std::is_sorted(alpha.begin(), alpha.end()) ||
      std::adjacent_find(alpha.begin(), alpha.end()) != alpha.end() ||
      (!alpha.empty() && alpha.front() == 0)) {
    raise(ErrorKind::Schema, "index set " + j.dump() + " must be strictly increasing and 1-based");
  }
  return alpha;
}

Json to_json(const Tuple& tuple) {
  Json j = Json::array();
  for (const auto& g : tuple) j.push_back(to_json(g));
  return j;
}

Tuple tuple_from_json(const GroupCtx& ctx, const Json& j) {
  if (!j.is_array()) raise(ErrorKind::Schema, "tuple must be an array of group elements");
  Tuple out;
  for (const auto& g : j) out.push_back(element_from_json(ctx, g));
  return out;
}

Json to_json(const CylinderPattern& p) {
  Json constraints = Json::array();
  for (const auto& [g, sym] : p.constraints()) {
    Json c;
    c["coord"] = to_json(g);
    c["sym"] = sym;
    constraints.push_back(std::move(c));
  }
  Json j;
  j["constraints"] = std::move(constraints);
  return j;
}

CylinderPattern pattern_from_json(const GroupCtx& coords, const Json& j) {
  const Json& list = require(j, "constraints");
  if (!list.is_array()) raise(ErrorKind::Schema, "\"constraints\" must be an array");
  std::vector<std::pair<GroupElement, int>> items;
  for (const auto& c : list) {
    const Json& sym = require(c, "sym");
    if (!sym.is_number_integer()) raise(ErrorKind::Schema, "\"sym\" must be an integer");
    items.emplace_back(element_from_json(coords, require(c, "coord")), sym.get<int>());
  }
  try {
    return CylinderPattern::from_constraints(coords, items);
  } catch (const Error& e) {
    raise(ErrorKind::Schema, e.what());
  }
}

Json to_json(const SeedMatrix& seed) {
  Json j;
  j["group"] = to_json(seed.ctx());
  j["m"] = seed.m();
  j["d"] = seed.d();
  j["K"] = seed.horizon();
  Json columns = Json::array();
  for (std::size_t jj = 0; jj < seed.d(); ++jj) {
    Json component = Json::array();
    for (std::size_t t = 0; t < seed.m(); ++t) {
      Json column = Json::array();
      for (std::size_t k = 1; k <= seed.horizon(); ++k) column.push_back(to_json(seed.at(jj, t, k)));
      component.push_back(std::move(column));
    }
    columns.push_back(std::move(component));
  }
  j["columns"] = std::move(columns);
  return j;
}

SeedMatrix seed_from_json(const Json& j) {
  const GroupCtx ctx = group_from_json(require(j, "group"));
  const std::size_t m = size_from_json(require(j, "m"), "m");
  const std::size_t d = size_from_json(require(j, "d"), "d");
  const Json& columns = require(j, "columns");
  if (!columns.is_array() || columns.size() != d) {
    raise(ErrorKind::Schema, "\"columns\" must hold d component arrays");
  }
  std::vector<std::vector<std::vector<GroupElement>>> entries;
  for (const auto& component : columns) {
    if (!component.is_array() || component.size() != m) {
      raise(ErrorKind::Schema, "each component of \"columns\" must hold m columns");
    }
    auto& out = entries.emplace_back();
    for (const auto& column : component) out.push_back(tuple_from_json(ctx, column));
  }
  try {
    return SeedMatrix::from_columns(ctx, std::move(entries));
  } catch (const Error& e) {
    raise(ErrorKind::Schema, e.what());
  }
}

Json to_json(const SimplexArray& arr) {
  Json j;
  j["m"] = arr.m();
  j["N"] = arr.n();
  Json values = Json::array();
  IndexSet alpha = first_subset(arr.m());
  std::size_t i = 0;
  do {
    Json v;
    v["alpha"] = to_json(alpha);
    v["x"] = to_json(arr.values()[i++]);
    values.push_back(std::move(v));
  } while (next_colex(alpha, arr.n()));
  j["values"] = std::move(values);
  return j;
}

SimplexArray simplex_from_json(const Json& j) {
  const std::size_t m = size_from_json(require(j, "m"), "m");
  const std::size_t n = size_from_json(require(j, "N"), "N");
  if (m == 0 || n < m) raise(ErrorKind::Schema, "simplex array needs 1 <= m <= N");
  const Json& values = require(j, "values");
  if (!values.is_array() || values.size() != binomial(n, m)) {
    raise(ErrorKind::Schema, "\"values\" must hold C(N, m) entries");
  }
  std::vector<std::optional<Rational>> slots(values.size());
  for (const auto& v : values) {
    IndexSet alpha = index_set_from_json(require(v, "alpha"));
    if (alpha.size() != m || !is_index_set(alpha, n)) {
      raise(ErrorKind::Schema, "alpha " + to_string(alpha) + " outside [N]^(m)");
    }
    auto& slot = slots[colex_rank(alpha)];
    if (slot) raise(ErrorKind::Schema, "alpha " + to_string(alpha) + " listed twice");
    slot = rational_from_json(require(v, "x"));
  }
  std::vector<Rational> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return SimplexArray(m, n, std::move(out));
}

Json to_json(const HomogeneousCert& cert) {
  Json j;
  j["S"] = to_json(cert.subset);
  j["color"] = cert.color;
  j["size"] = cert.size();
  return j;
}

HomogeneousCert homogeneous_from_json(const Json& j) {
  HomogeneousCert cert;
  cert.subset = index_set_from_json(require(j, "S"));
  cert.color = static_cast<std::uint32_t>(size_from_json(require(j, "color"), "color"));
  if (size_from_json(require(j, "size"), "size") != cert.subset.size()) {
    raise(ErrorKind::Schema, "homogeneous certificate size does not match |S|");
  }
  return cert;
}

Json to_json(const RLimitEstimate& est) {
  Json j;
  j["S"] = to_json(est.subset);
  j["value"] = to_json(est.value);
  j["epsilon"] = to_json(est.epsilon);
  j["max_deviation"] = to_json(est.max_deviation);
  j["min_index"] = est.min_index();
  j["exhaustive"] = est.exhaustive;
  return j;
}

RLimitEstimate rlimit_from_json(const Json& j) {
  RLimitEstimate est;
  est.subset = index_set_from_json(require(j, "S"));
  est.value = rational_from_json(require(j, "value"));
  est.epsilon = rational_from_json(require(j, "epsilon"));
  est.max_deviation = rational_from_json(require(j, "max_deviation"));
  const Json& exhaustive = require(j, "exhaustive");
  if (!exhaustive.is_boolean()) raise(ErrorKind::Schema, "\"exhaustive\" must be a boolean");
  est.exhaustive = exhaustive.get<bool>();
  return est;
}

namespace {

Json sigma_element_json(const SigmaElement& e) {
  Json j;
  j["alpha"] = to_json(e.alpha);
  j["value"] = to_json(e.value);
  return j;
}

CertKind cert_kind_from_string(const std::string& s) {
  for (auto k : {CertKind::RefutesSigmaStar, CertKind::EvidenceSigmaStar, CertKind::RefutesIPStar,
                 CertKind::EvidenceIPStar}) {
    if (to_string(k) == s) return k;
  }
  raise(ErrorKind::Schema, "unknown certificate kind \"" + s + "\"");
}

}  // namespace

Json to_json(const LargenessCert& cert) {
  Json j;
  j["kind"] = to_string(cert.kind);
  j["m"] = cert.m;
  j["battery_size"] = cert.battery_size;
  if (cert.is_refutation()) {
    j["refuted_index"] = cert.refuted_index;
    j["refuted_horizon"] = cert.refuted_horizon;
    Json elems = Json::array();
    for (const auto& e : cert.refutation) elems.push_back(sigma_element_json(e));
    j["refutation"] = std::move(elems);
  } else {
    Json ws = Json::array();
    for (const auto& w : cert.witnesses) {
      Json wj;
      wj["seed"] = w.seed_index;
      wj["alpha"] = to_json(w.alpha);
      wj["value"] = to_json(w.value);
      ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
  }
  return j;
}

LargenessCert largeness_from_json(const GroupCtx& ctx, const Json& j) {
  const Json& kind = require(j, "kind");
  if (!kind.is_string()) raise(ErrorKind::Schema, "certificate kind must be a string");
  LargenessCert cert;
  cert.kind = cert_kind_from_string(kind.get<std::string>());
  cert.m = size_from_json(require(j, "m"), "m");
  cert.battery_size = size_from_json(require(j, "battery_size"), "battery_size");
  if (cert.is_refutation()) {
    cert.refuted_index = size_from_json(require(j, "refuted_index"), "refuted_index");
    cert.refuted_horizon = size_from_json(require(j, "refuted_horizon"), "refuted_horizon");
    for (const auto& e : require(j, "refutation")) {
      cert.refutation.push_back(
          {index_set_from_json(require(e, "alpha")), tuple_from_json(ctx, require(e, "value"))});
    }
  } else {
    for (const auto& w : require(j, "witnesses")) {
      cert.witnesses.push_back({size_from_json(require(w, "seed"), "seed"),
                                index_set_from_json(require(w, "alpha")),
                                tuple_from_json(ctx, require(w, "value"))});
    }
  }
  return cert;
}

}  // namespace mixlab
