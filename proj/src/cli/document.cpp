#include "toric/cli/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace toric::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ToricError(ErrorKind::Parse, where + ": " + what);
}

Rational rational_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ToricError& e) {
      fail(where, e.detail());
    }
  }
  fail(where, "expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Integer integer_at(const Json& j, const std::string& where) {
  const Rational q = rational_at(j, where);
  if (denominator(q) != 1) fail(where, "expected an integer, got " + to_string(q));
  return numerator(q);
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::size_t index_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

LatticeVector lattice_at(const Json& j, std::size_t rank, const std::string& where) {
  array_at(j, where);
  if (j.size() != rank) fail(where, "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(j.size()));
  std::vector<Integer> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(integer_at(j[i], where + "/" + std::to_string(i)));
  return LatticeVector(std::move(c));
}

RationalVector rational_vector_at(const Json& j, std::size_t rank, const std::string& where) {
  array_at(j, where);
  if (j.size() != rank) fail(where, "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(j.size()));
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_at(j[i], where + "/" + std::to_string(i)));
  return RationalVector(std::move(c));
}

const std::set<std::string> kKnownKeys = {"name",    "description", "lattice_rank", "rays",
                                          "max_cones", "divisor",   "inequalities", "valuations", "m_range"};

}  // namespace

InputDocument parse_input(const Json& doc) {
  if (!doc.is_object()) fail("/", "input must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kKnownKeys.count(key)) fail("/" + key, "unknown field");

  InputDocument in;
  in.echo = doc;
  const bool fan_mode = doc.contains("rays") || doc.contains("max_cones");
  in.polytope_mode = doc.contains("inequalities");
  if (fan_mode == in.polytope_mode) fail("/", "give exactly one of {rays, max_cones} (fan mode) or inequalities (polytope mode)");

  if (in.polytope_mode) {
    if (doc.contains("divisor")) fail("/divisor", "not allowed in polytope mode; the offsets are the divisor");
    const auto& ineqs = array_at(doc["inequalities"], "/inequalities");
    if (ineqs.empty()) fail("/inequalities", "empty");
    std::optional<std::size_t> rank;
    if (doc.contains("lattice_rank")) rank = index_at(doc["lattice_rank"], "/lattice_rank");
    std::vector<HalfSpace> hs;
    for (std::size_t k = 0; k < ineqs.size(); ++k) {
      const std::string where = "/inequalities/" + std::to_string(k);
      const auto& e = ineqs[k];
      if (!e.is_object() || !e.contains("normal") || !e.contains("offset"))
        fail(where, "expected {\"normal\": [...], \"offset\": q}");
      if (!rank) rank = array_at(e["normal"], where + "/normal").size();
      hs.push_back({lattice_at(e["normal"], *rank, where + "/normal"), rational_at(e["offset"], where + "/offset")});
    }
    if (*rank == 0) fail("/lattice_rank", "must be positive");
    ToricDivisor d = divisor_from_polytope(Polytope(*rank, std::move(hs)));
    in.fan = d.fan_ptr();
    in.divisor = d.coeffs();
  } else {
    for (const char* key : {"lattice_rank", "rays", "max_cones"})
      if (!doc.contains(key)) fail(std::string("/") + key, "missing");
    auto fan = std::make_shared<Fan>();
    fan->rank = index_at(doc["lattice_rank"], "/lattice_rank");
    if (fan->rank == 0) fail("/lattice_rank", "must be positive");
    const auto& rays = array_at(doc["rays"], "/rays");
    for (std::size_t i = 0; i < rays.size(); ++i)
      fan->rays.push_back(lattice_at(rays[i], fan->rank, "/rays/" + std::to_string(i)));
    const auto& cones = array_at(doc["max_cones"], "/max_cones");
    for (std::size_t k = 0; k < cones.size(); ++k) {
      const std::string where = "/max_cones/" + std::to_string(k);
      std::vector<std::size_t> cone;
      for (std::size_t i = 0; i < array_at(cones[k], where).size(); ++i)
        cone.push_back(index_at(cones[k][i], where + "/" + std::to_string(i)));
      fan->max_cones.push_back(std::move(cone));
    }
    if (doc.contains("divisor")) {
      const auto& div = array_at(doc["divisor"], "/divisor");
      if (div.size() != fan->rays.size())
        fail("/divisor", std::to_string(div.size()) + " coefficients for " + std::to_string(fan->rays.size()) + " rays");
      std::vector<Rational> b;
      for (std::size_t i = 0; i < div.size(); ++i) b.push_back(rational_at(div[i], "/divisor/" + std::to_string(i)));
      in.divisor = std::move(b);
    }
    in.fan = std::move(fan);
  }

  if (doc.contains("valuations")) {
    const auto& vals = array_at(doc["valuations"], "/valuations");
    for (std::size_t k = 0; k < vals.size(); ++k)
      in.valuations.push_back(rational_vector_at(vals[k], in.fan->rank, "/valuations/" + std::to_string(k)));
  }
  if (doc.contains("m_range")) {
    const auto& r = array_at(doc["m_range"], "/m_range");
    if (r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
      fail("/m_range", "expected [lo, hi] integers");
    in.m_lo = r[0].get<std::int64_t>();
    in.m_hi = r[1].get<std::int64_t>();
    if (in.m_lo < 1 || in.m_hi < in.m_lo) fail("/m_range", "need 1 <= lo <= hi");
  }
  return in;
}

InputDocument load_input(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ToricError(ErrorKind::Parse, "cannot read " + path.string());
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ToricError(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return parse_input(doc);
}

ToricDivisor chosen_divisor(const InputDocument& in) {
  if (in.divisor) return ToricDivisor(in.fan, *in.divisor);
  return anticanonical(in.fan);
}

Json fan_to_json(const Fan& fan, const std::optional<std::vector<Rational>>& divisor) {
  Json j;
  j["lattice_rank"] = fan.rank;
  j["rays"] = Json::array();
  for (const auto& r : fan.rays) j["rays"].push_back(to_json(r));
  j["max_cones"] = fan.max_cones;
  if (divisor) {
    j["divisor"] = Json::array();
    for (const auto& b : *divisor) j["divisor"].push_back(to_json(b));
  }
  return j;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(to_json(c));
  return j;
}

Json to_json(const LatticeVector& v) {
  Json j = Json::array();
  for (const auto& c : v) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      j.push_back(c.convert_to<std::int64_t>());
    else
      j.push_back(c.str());
  }
  return j;
}

Json to_json(const FanDiagnostics& d) {
  Json j;
  j["ok"] = d.ok();
  j["diagnostics"] = Json::array();
  for (const auto& item : d.items) j["diagnostics"].push_back({{"kind", to_string(item.kind)}, {"message", item.message}});
  return j;
}

Json to_json(const Certificate& c) {
  return {{"name", c.name}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"slack", to_json(c.slack)}, {"pass", c.pass}};
}

Json to_json(const ThresholdReport& r) {
  Json j;
  j["alpha"] = to_json(r.alpha.alpha);
  j["alpha_witness"] = {{"vertex", to_json(r.alpha.witness_vertex)}, {"ray", r.alpha.witness_ray}};
  j["alpha_via_rays"] = to_json(r.alpha.alpha_via_rays);
  j["per_vertex_lct"] = Json::array();
  for (const auto& pv : r.alpha.per_vertex_lct)
    j["per_vertex_lct"].push_back({{"vertex", to_json(pv.vertex)}, {"lct", pv.lct ? to_json(*pv.lct) : Json("inf")}});
  j["delta"] = to_json(r.delta.delta);
  j["barycenter"] = to_json(r.delta.barycenter);
  j["delta_rays"] = r.delta.delta_rays;
  j["delta_via_rays"] = to_json(r.delta.delta_via_rays);
  j["certificates"] = Json::array();
  for (const auto& c : r.certificates) j["certificates"].push_back(to_json(c));
  return j;
}

Json to_json(const KStabilityReport& r) {
  Json j;
  j["q_fano"] = r.is_q_fano;
  j["barycenter"] = to_json(r.barycenter);
  j["k_semistable"] = r.k_semistable;
  j["uniformly_k_stable"] = r.uniformly_k_stable;
  j["delta"] = to_json(r.delta);
  j["c"] = r.c ? to_json(*r.c) : Json(nullptr);
  j["alpha"] = to_json(r.alpha);
  j["alpha_criterion_fires"] = r.alpha_criterion_fires;
  j["volume_bound"] = Json::array();
  for (const auto& t : r.theorem_d_checks)
    j["volume_bound"].push_back(
        {{"v", to_json(t.valuation)}, {"lhs", to_json(t.lhs)}, {"rhs", to_json(t.rhs)}, {"pass", t.pass}});
  return j;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace toric::cli
