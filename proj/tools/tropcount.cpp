#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropcount/io.hpp"

using namespace tropcount;

namespace {

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << '\n';
}

Integer parse_integer(const std::string& s) {
  Integer v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
  return v;
}

Problem constraint_problem(const Json& j) {
  if (j.contains("degree_source")) return problem_from_json(j);
  // A bare generator description: {rank, items, seed?, bound?} with nothing to validate against.
  Problem p;
  p.rank = j.at("rank").get<std::size_t>();
  p.degree_source.kind = DegreeSource::Kind::explicit_degrees;
  p.constraints.kind = ConstraintSource::Kind::generate;
  for (const auto& c : j.at("items")) p.constraints.spec.push_back(constraint_spec_from_json(c, p.rank));
  if (j.contains("seed")) p.constraints.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("bound")) p.constraints.bound = j["bound"].get<std::uint64_t>();
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of rational tropical curves through affine constraints"};
  app.require_subcommand(1);

  std::string problem_file, out_file;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool long_run = false;
  auto* count = app.add_subcommand("count", "count curves for a problem and print the report");
  count->add_option("--problem", problem_file, "problem JSON")->required()->check(CLI::ExistingFile);
  count->add_option("--seed", seed, "constraint seed (overrides the problem)");
  count->add_option("--workers", workers, "worker threads (overrides the problem)");
  count->add_flag("--long", long_run, "allow long-running problems");
  count->add_option("--out", out_file, "write the report here instead of stdout");

  std::string degree_file;
  std::size_t marks = 0;
  auto* types = app.add_subcommand("types", "list canonical marked combinatorial types");
  types->add_option("--degree", degree_file, "degree JSON")->required()->check(CLI::ExistingFile);
  types->add_option("--marks", marks, "number of markings")->required();

  std::string spec_file;
  std::uint64_t spec_seed = 1;
  auto* constraints = app.add_subcommand("constraints", "emit a general constraint tuple");
  constraints->add_option("--spec", spec_file, "problem or generator spec JSON")->required()->check(CLI::ExistingFile);
  constraints->add_option("--seed", spec_seed, "seed")->required();

  unsigned long plane_degree = 0;
  auto* oracle = app.add_subcommand("oracle", "Kontsevich numbers of rational plane curves");
  oracle->add_option("--plane-degree", plane_degree, "degree d >= 1")->required()->check(CLI::PositiveNumber);

  auto* toric = app.add_subcommand("toric", "fans and small resolutions");
  toric->require_subcommand(1);
  std::string fan_file, cert_file;
  auto* verify = toric->add_subcommand("verify", "check a small-resolution certificate");
  verify->add_option("--fan", fan_file, "fan JSON, or a polytope JSON whose normal fan is used")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--cert", cert_file, "certificate JSON")->required()->check(CLI::ExistingFile);
  std::string polytope_file, builtin;
  std::string lambda_text = "1";
  auto* fan = toric->add_subcommand("fan", "normal fan of a polytope");
  auto* poly_opt = fan->add_option("--polytope", polytope_file, "polytope JSON")->check(CLI::ExistingFile);
  fan->add_option("--builtin", builtin, "gc3 or octahedron")
      ->check(CLI::IsMember({"gc3", "octahedron"}))
      ->excludes(poly_opt);
  fan->add_option("--lambda", lambda_text, "scale for built-in polytopes");

  auto* preset = app.add_subcommand("preset", "emit a problem skeleton");
  preset->require_subcommand(1);
  std::vector<std::string> flag_class;
  auto* flag3 = preset->add_subcommand("flag3", "flag manifold class (s, t) through s + t points");
  flag3->add_option("--class", flag_class, "S,T")->required()->delimiter(',')->expected(2);
  std::string octa_class;
  auto* octahedron = preset->add_subcommand("octahedron", "octahedron class a through a points");
  octahedron->add_option("--class", octa_class, "A")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      Problem p = problem_from_json(read_json_file(problem_file));
      if (count->count("--seed") > 0) p.constraints.seed = seed;
      if (count->count("--workers") > 0) p.options.workers = workers;
      if (long_run) p.options.long_run = true;
      emit(report_to_json(count_invariant(p)), out_file);
    } else if (*types) {
      Degree d = degree_from_json(read_json_file(degree_file));
      Json out = Json::array();
      for (const auto& t : enumerate_types(d, marks)) out.push_back(type_to_json(t));
      emit(out, "");
    } else if (*constraints) {
      Problem p = constraint_problem(read_json_file(spec_file));
      p.constraints.seed = spec_seed;
      p.options.long_run = true;
      CountReport r = count_invariant(p);
      Json list = Json::array();
      for (const auto& c : r.constraints) list.push_back(constraint_to_json(c));
      emit(Json{{"seed", spec_seed}, {"genericity_retries", r.genericity_retries}, {"constraints", list}}, "");
    } else if (*oracle) {
      std::cout << kontsevich_oracle(plane_degree).get_str() << '\n';
    } else if (*verify) {
      Json fj = read_json_file(fan_file);
      Fan f = fj.contains("inequalities") ? normal_fan(polytope_from_json(fj)) : fan_from_json(fj);
      ResolutionReport r = verify_small_resolution(f, certificate_from_json(read_json_file(cert_file)));
      emit(resolution_report_to_json(r), "");
      return r.valid ? 0 : 2;
    } else if (*fan) {
      Rational lambda(lambda_text);
      lambda.canonicalize();
      Polytope poly;
      if (!polytope_file.empty())
        poly = polytope_from_json(read_json_file(polytope_file));
      else if (builtin == "gc3")
        poly = builtin_gc3(lambda);
      else if (builtin == "octahedron")
        poly = builtin_octahedron(lambda);
      else
        throw std::invalid_argument("give --polytope or --builtin");
      emit(fan_to_json(normal_fan(poly)), "");
    } else if (*flag3) {
      emit(problem_to_json(preset_flag3_problem(parse_integer(flag_class[0]), parse_integer(flag_class[1]))), "");
    } else if (*octahedron) {
      emit(problem_to_json(preset_octahedron_problem(parse_integer(octa_class))), "");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
