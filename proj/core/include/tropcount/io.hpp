#pragma once

// JSON encodings. Rationals are "p/q" strings; integers that do not fit in 64 bits are strings.

#include <filesystem>

#include <json.hpp>

#include "tropcount/degrees.hpp"
#include "tropcount/engine.hpp"
#include "tropcount/toric.hpp"

namespace tropcount {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);
std::string rational_string(const Rational& q);
Rational rational_from_json(const Json& j);

Json vec_to_json(const LatticeVec& v);
LatticeVec vec_from_json(const Json& j);
Json vec_to_json(const RationalVec& v);
RationalVec rational_vec_from_json(const Json& j);

Json degree_to_json(const Degree& d);
Degree degree_from_json(const Json& j);

Json constraint_to_json(const AffineConstraint& c);
AffineConstraint constraint_from_json(const Json& j);
ConstraintSpec constraint_spec_from_json(const Json& j, std::size_t rank);

Json degree_set_to_json(const DegreeSet& s);
DegreeSet degree_set_from_json(const Json& j);

Json type_to_json(const CombType& t);
Json solution_to_json(const Solution& s);
Json multiplicity_to_json(const Multiplicity& m);

Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);
Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);
RefinementCertificate certificate_from_json(const Json& j);
Json resolution_report_to_json(const ResolutionReport& r);

Json problem_to_json(const Problem& p);
Problem problem_from_json(const Json& j);
Json report_to_json(const CountReport& r);

}  // namespace tropcount
