#include "tropcount/io.hpp"

#include <fstream>
#include <stdexcept>

namespace tropcount {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return Json::parse(in);
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q(j.get<std::string>());
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in " + j.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw std::invalid_argument("expected a rational as \"p/q\"");
}

Json vec_to_json(const LatticeVec& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(integer_to_json(c));
  return out;
}

LatticeVec vec_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return LatticeVec(std::move(c));
}

Json vec_to_json(const RationalVec& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(rational_string(c));
  return out;
}

RationalVec rational_vec_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return RationalVec(std::move(c));
}

Json degree_to_json(const Degree& d) {
  Json out = Json::array();
  for (const auto& e : d.ends()) out.push_back(Json{{"direction", vec_to_json(e.direction)}, {"weight", integer_to_json(e.weight)}});
  return out;
}

Degree degree_from_json(const Json& j) {
  std::vector<End> ends;
  for (const auto& e : j)
    ends.push_back(End{vec_from_json(e.at("direction")), e.contains("weight") ? integer_from_json(e["weight"]) : 1});
  return Degree(std::move(ends));
}

namespace {

std::vector<LatticeVec> basis_from_json(const Json& j) {
  std::vector<LatticeVec> out;
  for (const auto& v : j) out.push_back(vec_from_json(v));
  return out;
}

Json basis_to_json(const std::vector<LatticeVec>& b) {
  Json out = Json::array();
  for (const auto& v : b) out.push_back(vec_to_json(v));
  return out;
}

}  // namespace

Json constraint_to_json(const AffineConstraint& c) {
  return Json{{"L_basis", basis_to_json(c.directions)}, {"offset", vec_to_json(c.offset)}, {"codim", c.codim()}};
}

AffineConstraint constraint_from_json(const Json& j) {
  auto basis = j.contains("L_basis") ? basis_from_json(j["L_basis"]) : std::vector<LatticeVec>{};
  return make_constraint(basis, rational_vec_from_json(j.at("offset")));
}

ConstraintSpec constraint_spec_from_json(const Json& j, std::size_t rank) {
  ConstraintSpec s;
  s.directions = j.contains("L_basis") ? basis_from_json(j["L_basis"]) : std::vector<LatticeVec>{};
  if (!s.directions.empty()) s.directions = saturate(s.directions, rank);
  s.codim = j.contains("codim") ? j["codim"].get<std::size_t>() : rank - s.directions.size() - 1;
  if (s.codim + s.directions.size() + 1 != rank) throw std::invalid_argument("codim must equal n - dim L - 1");
  return s;
}

Json degree_set_to_json(const DegreeSet& s) {
  Json out = Json::array();
  for (const auto& c : s) {
    Json member = Json::array();
    for (const auto& [v, k] : c.values()) member.push_back(Json{{"ray", vec_to_json(v)}, {"count", integer_to_json(k)}});
    out.push_back(std::move(member));
  }
  return out;
}

DegreeSet degree_set_from_json(const Json& j) {
  DegreeSet out;
  for (const auto& member : j) {
    std::map<LatticeVec, Integer> values;
    for (const auto& e : member) values[vec_from_json(e.at("ray"))] += integer_from_json(e.at("count"));
    out.emplace_back(std::move(values));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json type_to_json(const CombType& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges) {
    Json je{{"tail", e.tail}};
    if (e.bounded()) je["head"] = e.head;
    je["direction"] = vec_to_json(e.direction);
    je["weight"] = integer_to_json(e.weight);
    edges.push_back(std::move(je));
  }
  return Json{{"key", t.key},
              {"degenerate_line", t.degenerate_line},
              {"vertices", t.vertex_count},
              {"edges", std::move(edges)},
              {"markings", t.markings}};
}

Json solution_to_json(const Solution& s) {
  Json lengths = Json::array();
  for (const auto& l : s.lengths) lengths.push_back(rational_string(l));
  Json params = Json::array();
  for (const auto& t : s.mark_params) params.push_back(rational_string(t));
  return Json{{"root_position", vec_to_json(s.root_position)}, {"lengths", lengths}, {"mark_params", params}};
}

Json multiplicity_to_json(const Multiplicity& m) {
  Json deltas = Json::array();
  for (const auto& d : m.deltas) deltas.push_back(integer_to_json(d));
  return Json{{"w", integer_to_json(m.w)},
              {"d_index", integer_to_json(m.d_index)},
              {"deltas", deltas},
              {"total", integer_to_json(m.total)}};
}

Json polytope_to_json(const Polytope& p) {
  Json ineq = Json::array();
  for (const auto& q : p.inequalities)
    ineq.push_back(Json{{"normal", vec_to_json(q.normal)}, {"constant", rational_string(q.constant)}});
  return Json{{"inequalities", ineq}};
}

Polytope polytope_from_json(const Json& j) {
  Polytope p;
  for (const auto& q : j.at("inequalities"))
    p.inequalities.push_back(Inequality{vec_from_json(q.at("normal")), rational_from_json(q.at("constant"))});
  return p;
}

Json fan_to_json(const Fan& f) { return Json{{"rays", basis_to_json(f.rays)}, {"cones", f.cones}}; }

Fan fan_from_json(const Json& j) {
  Fan f;
  f.rays = basis_from_json(j.at("rays"));
  f.cones = j.at("cones").get<std::vector<std::vector<int>>>();
  return f;
}

RefinementCertificate certificate_from_json(const Json& j) {
  RefinementCertificate c;
  c.cones = j.at("cones").get<std::vector<std::vector<int>>>();
  if (j.contains("rays")) c.rays = basis_from_json(j["rays"]);
  return c;
}

Json resolution_report_to_json(const ResolutionReport& r) {
  Json v = Json::array();
  for (const auto& item : r.violations) v.push_back(Json{{"check", std::string(1, item.check)}, {"detail", item.detail}});
  return Json{{"valid", r.valid}, {"violations", v}};
}

namespace {

std::vector<RayConstraint> ray_constraints_from_json(const Json& j) {
  std::vector<RayConstraint> out;
  for (const auto& c : j) {
    RayConstraint rc;
    for (const auto& x : c.at("coeffs")) rc.coeffs.push_back(integer_from_json(x));
    rc.target = integer_from_json(c.at("target"));
    out.push_back(std::move(rc));
  }
  return out;
}

}  // namespace

Problem problem_from_json(const Json& j) {
  Problem p;
  p.rank = j.at("rank").get<std::size_t>();
  const auto& ds = j.at("degree_source");
  const std::string kind = ds.at("kind").get<std::string>();
  auto& src = p.degree_source;
  if (ds.contains("max_weight")) src.max_weight = integer_from_json(ds["max_weight"]);
  if (kind == "explicit") {
    src.kind = DegreeSource::Kind::explicit_degrees;
    if (ds.contains("degree")) src.degrees.push_back(degree_from_json(ds["degree"]));
    if (ds.contains("degrees"))
      for (const auto& d : ds["degrees"]) src.degrees.push_back(degree_from_json(d));
  } else if (kind == "flag3") {
    src.kind = DegreeSource::Kind::flag3;
    const auto& c = ds.at("class");
    src.s = integer_from_json(c.at(0));
    src.t = integer_from_json(c.at(1));
  } else if (kind == "octahedron") {
    src.kind = DegreeSource::Kind::octahedron;
    const auto& c = ds.at("class");
    src.a = integer_from_json(c.is_array() ? c.at(0) : c);
  } else if (kind == "coarse") {
    src.kind = DegreeSource::Kind::coarse;
    src.rays = basis_from_json(ds.at("rays"));
    if (ds.contains("linear_constraints")) src.ray_constraints = ray_constraints_from_json(ds["linear_constraints"]);
    if (ds.contains("cap")) src.cap = integer_from_json(ds["cap"]);
  } else {
    throw std::invalid_argument("unknown degree_source kind: " + kind);
  }

  const auto& cs = j.at("constraints");
  const std::string ckind = cs.at("kind").get<std::string>();
  if (ckind == "explicit") {
    p.constraints.kind = ConstraintSource::Kind::explicit_list;
    for (const auto& c : cs.at("list")) p.constraints.constraints.push_back(constraint_from_json(c));
  } else if (ckind == "generate") {
    p.constraints.kind = ConstraintSource::Kind::generate;
    for (const auto& c : cs.at("items")) p.constraints.spec.push_back(constraint_spec_from_json(c, p.rank));
    if (cs.contains("seed")) p.constraints.seed = cs["seed"].get<std::uint64_t>();
    if (cs.contains("bound")) p.constraints.bound = cs["bound"].get<std::uint64_t>();
    if (cs.contains("retries")) p.constraints.retries = cs["retries"].get<std::uint64_t>();
  } else {
    throw std::invalid_argument("unknown constraints kind: " + ckind);
  }

  if (j.contains("options")) {
    const auto& o = j["options"];
    if (o.contains("workers")) p.options.workers = o["workers"].get<unsigned>();
    if (o.contains("long")) p.options.long_run = o["long"].get<bool>();
    if (o.contains("odd_insertions")) p.options.odd_insertions = o["odd_insertions"].get<unsigned>();
  }
  if (j.contains("divisor_insertions")) {
    DivisorInsertions d;
    for (const auto& x : j["divisor_insertions"].at("pairings")) d.pairings.push_back(integer_from_json(x));
    d.exponents = j["divisor_insertions"].at("exponents").get<std::vector<unsigned long>>();
    p.divisor = std::move(d);
  }
  return p;
}

Json problem_to_json(const Problem& p) {
  Json ds;
  const auto& src = p.degree_source;
  switch (src.kind) {
    case DegreeSource::Kind::explicit_degrees: {
      ds["kind"] = "explicit";
      Json list = Json::array();
      for (const auto& d : src.degrees) list.push_back(degree_to_json(d));
      ds["degrees"] = list;
      break;
    }
    case DegreeSource::Kind::flag3:
      ds["kind"] = "flag3";
      ds["class"] = Json::array({integer_to_json(src.s), integer_to_json(src.t)});
      break;
    case DegreeSource::Kind::octahedron:
      ds["kind"] = "octahedron";
      ds["class"] = integer_to_json(src.a);
      break;
    case DegreeSource::Kind::coarse: {
      ds["kind"] = "coarse";
      ds["rays"] = basis_to_json(src.rays);
      Json lc = Json::array();
      for (const auto& c : src.ray_constraints) {
        Json coeffs = Json::array();
        for (const auto& x : c.coeffs) coeffs.push_back(integer_to_json(x));
        lc.push_back(Json{{"coeffs", coeffs}, {"target", integer_to_json(c.target)}});
      }
      ds["linear_constraints"] = lc;
      if (src.cap) ds["cap"] = integer_to_json(*src.cap);
      break;
    }
  }
  if (src.max_weight) ds["max_weight"] = integer_to_json(*src.max_weight);

  Json cs;
  if (p.constraints.kind == ConstraintSource::Kind::explicit_list) {
    cs["kind"] = "explicit";
    Json list = Json::array();
    for (const auto& c : p.constraints.constraints) list.push_back(constraint_to_json(c));
    cs["list"] = list;
  } else {
    cs["kind"] = "generate";
    Json items = Json::array();
    for (const auto& s : p.constraints.spec) items.push_back(Json{{"codim", s.codim}, {"L_basis", basis_to_json(s.directions)}});
    cs["items"] = items;
    cs["seed"] = p.constraints.seed;
    cs["bound"] = p.constraints.bound;
    cs["retries"] = p.constraints.retries;
  }
  Json out{{"rank", p.rank},
           {"degree_source", ds},
           {"constraints", cs},
           {"options", Json{{"workers", p.options.workers},
                            {"long", p.options.long_run},
                            {"odd_insertions", p.options.odd_insertions}}}};
  if (p.divisor) {
    Json pairings = Json::array();
    for (const auto& x : p.divisor->pairings) pairings.push_back(integer_to_json(x));
    out["divisor_insertions"] = Json{{"pairings", pairings}, {"exponents", p.divisor->exponents}};
  }
  return out;
}

Json report_to_json(const CountReport& r) {
  Json per_degree = Json::array();
  for (const auto& d : r.per_degree) {
    Json curves = Json::array();
    for (const auto& c : d.curves)
      curves.push_back(Json{{"type", type_to_json(c.type)},
                            {"solution", solution_to_json(c.solution)},
                            {"multiplicity", multiplicity_to_json(c.multiplicity)}});
    per_degree.push_back(Json{{"degree", degree_to_json(d.degree)},
                              {"dimension_ok", d.dimension_ok},
                              {"types", d.type_count},
                              {"search_nodes", d.stats.nodes},
                              {"curves", curves},
                              {"subtotal", integer_to_json(d.subtotal)}});
  }
  Json constraints = Json::array();
  for (const auto& c : r.constraints) constraints.push_back(constraint_to_json(c));
  return Json{{"total", integer_to_json(r.total)},
              {"tropical_total", integer_to_json(r.tropical_total)},
              {"seed", r.seed},
              {"genericity_retries", r.genericity_retries},
              {"constraints", constraints},
              {"per_degree", per_degree},
              {"notes", r.notes},
              {"seconds", r.seconds}};
}

}  // namespace tropcount
