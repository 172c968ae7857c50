// Command-line front end: posets and maps flow as JSON on stdin/stdout so
// commands compose in pipelines.

#include "posetcyl/cdindex.hpp"
#include "posetcyl/constructions.hpp"
#include "posetcyl/cylinder.hpp"
#include "posetcyl/homology.hpp"
#include "posetcyl/json_io.hpp"
#include "posetcyl/ncpoly.hpp"
#include "posetcyl/poset.hpp"
#include "posetcyl/subdivision.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace posetcyl;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct CheckFailure {
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw Error("cannot open input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot open output file " + path);
  f << text;
}

json parse_json(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw Error("empty input");
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

struct RankedInput {
  Poset poset;
  RankFunction rank;
};

RankedInput ranked_from_json(const json& j) {
  std::optional<RankFunction> rank;
  Poset p = poset_from_json(j, &rank);
  if (!rank) rank = natural_rank(p);
  return {std::move(p), std::move(*rank)};
}

RankedInput read_ranked(const std::string& path) { return ranked_from_json(parse_json(read_input(path))); }

std::string poset_json_text(const Poset& p, const RankFunction& r) {
  return poset_to_json(p, &r).dump(2) + "\n";
}

int require_q(const Poset& p, const std::string& q_arg, const char* cmd) {
  if (q_arg.rfind("q=", 0) != 0) throw Error(std::string(cmd) + ": expected q=<label>");
  std::string label = q_arg.substr(2);
  auto idx = p.index_of(label);
  if (!idx) throw Error(std::string(cmd) + ": unknown label '" + label + "'");
  return *idx;
}

int run_build(const std::string& family, const std::vector<std::string>& params,
              const std::string& in_path, const std::string& out_path, const std::string& format) {
  auto int_param = [&](size_t i) {
    if (params.size() <= i) throw Error("build " + family + ": missing integer parameter");
    try {
      return std::stoi(params[i]);
    } catch (const std::exception&) {
      throw Error("build " + family + ": bad integer parameter '" + params[i] + "'");
    }
  };
  // Unary constructions read one poset (file parameter, -i, or stdin);
  // binary ones read two (two files, or one file with the left operand piped).
  auto one_input = [&]() -> RankedInput {
    if (!params.empty()) return read_ranked(params[0]);
    return read_ranked(in_path);
  };
  auto two_inputs = [&]() -> std::pair<RankedInput, RankedInput> {
    if (params.size() >= 2) return {read_ranked(params[0]), read_ranked(params[1])};
    if (params.size() == 1) return {read_ranked(in_path), read_ranked(params[0])};
    throw Error("build " + family + ": needs two operands");
  };

  RankedPoset out{boolean_algebra(0)};
  if (family == "boolean") {
    out = boolean_algebra(int_param(0));
  } else if (family == "polygon") {
    out = face_lattice_polygon(int_param(0));
  } else if (family == "cube") {
    out = face_lattice_cube(int_param(0));
  } else if (family == "crosspolytope") {
    out = face_lattice_crosspolytope(int_param(0));
  } else if (family == "subdivided_interval") {
    out = subdivided_interval(int_param(0));
  } else if (family == "pyramid") {
    auto in = one_input();
    out = pyramid(in.poset, in.rank);
  } else if (family == "prism") {
    auto in = one_input();
    out = prism(in.poset, in.rank);
  } else if (family == "bipyramid") {
    auto in = one_input();
    out = bipyramid(in.poset, in.rank);
  } else if (family == "dual") {
    auto in = one_input();
    Poset d = dual(in.poset);
    RankFunction r = natural_rank(d);
    out = {std::move(d), std::move(r)};
  } else if (family == "semisuspension") {
    auto in = one_input();
    if (!is_near_eulerian(in.poset, in.rank)) throw Error("build semisuspension: input is not near-Eulerian");
    auto [sigma, zhat] = semisuspension(in.poset);
    (void)zhat;
    RankFunction r = natural_rank(sigma);
    out = {std::move(sigma), std::move(r)};
  } else if (family == "product") {
    auto [left, right] = two_inputs();
    out = direct_product(left.poset, left.rank, right.poset, right.rank);
  } else if (family == "star") {
    auto [left, right] = two_inputs();
    out = star_product(left.poset, left.rank, right.poset, right.rank);
  } else {
    throw Error("build: unknown family '" + family + "'");
  }
  if (format == "dot")
    write_output(out_path, to_dot(out.poset, &out.rank));
  else
    write_output(out_path, poset_json_text(out.poset, out.rank));
  return kExitOk;
}

int run_check(const std::string& what, const std::string& q_arg, const std::string& method_name,
              const std::string& in_path, const std::string& out_path) {
  std::ostringstream report;
  bool pass = false;
  if (what == "sfs") {
    PosetMap m = map_from_json(parse_json(read_input(in_path)));
    SfsMethod method = SfsMethod::FiberSum;
    if (method_name == "eq32") method = SfsMethod::CumulativeSum;
    else if (method_name == "near") method = SfsMethod::NearEulerian;
    else if (!method_name.empty() && method_name != "eq31")
      throw Error("check sfs: unknown method '" + method_name + "'");
    auto r = check_sfs(m, method);
    if (!r.admissible()) throw Error("check sfs: " + to_string(r.status) +
                                     (r.witness.empty() ? "" : " (" + r.witness + ")"));
    pass = r.ok();
    report << (pass ? "PASS" : "FAIL") << " sfs";
    if (!pass) report << " witness: " << r.witness;
    report << "\n";
  } else {
    auto in = ranked_from_json(parse_json(read_input(in_path)));
    if (what == "eulerian" || what == "lower-eulerian") {
      auto witness = locally_eulerian_witness(in.poset, in.rank);
      bool shape_ok = what == "eulerian"
                          ? in.poset.unique_min() && in.poset.unique_max()
                          : static_cast<bool>(in.poset.unique_min());
      pass = shape_ok && !witness;
      report << (pass ? "PASS" : "FAIL") << " " << what;
      if (!shape_ok)
        report << " witness: no unique " << (in.poset.unique_min() ? "maximum" : "minimum");
      else if (witness)
        report << " witness: interval [" << in.poset.label(witness->lo) << ","
               << in.poset.label(witness->hi) << "] has alternating sum " << witness->sum;
      report << "\n";
    } else if (what == "near-eulerian") {
      pass = is_near_eulerian(in.poset, in.rank);
      report << (pass ? "PASS" : "FAIL") << " near-eulerian\n";
    } else if (what == "graded") {
      pass = is_graded(in.poset);
      report << (pass ? "PASS" : "FAIL") << " graded\n";
    } else if (what == "gorenstein-star") {
      if (!is_eulerian(in.poset, in.rank) || rank_of(in.poset) < 1)
        throw Error("check gorenstein-star: input is not Eulerian of positive rank");
      auto witness = gorenstein_witness(in.poset, in.rank);
      pass = !witness;
      report << (pass ? "PASS" : "FAIL") << " gorenstein-star";
      if (witness) report << " witness: " << *witness;
      report << "\n";
    } else if (what == "join-admissible") {
      int q = require_q(in.poset, q_arg, "check join-admissible");
      pass = true;
      for (int z = 0; z < in.poset.size() && pass; ++z)
        if (!join(in.poset, z, q)) {
          pass = false;
          report << "FAIL join-admissible witness: no join of " << in.poset.label(z) << " and "
                 << in.poset.label(q) << "\n";
        }
      if (pass) report << "PASS join-admissible\n";
    } else {
      throw Error("check: unknown property '" + what + "'");
    }
  }
  write_output(out_path, report.str());
  return pass ? kExitOk : kExitCheckFailed;
}

int run_cyl(const std::string& in_path, const std::string& out_path) {
  PosetMap m = map_from_json(parse_json(read_input(in_path)));
  JoinTriple t = cyl(m);
  write_output(out_path, triple_to_json(t).dump(2) + "\n");
  return kExitOk;
}

int run_map(const std::string& q_arg, const std::string& in_path, const std::string& out_path) {
  json j = parse_json(read_input(in_path));
  JoinTriple t;
  if (j.contains("q") && q_arg.empty()) {
    t = triple_from_json(j);
  } else {
    std::optional<RankFunction> rank;
    t.gamma = poset_from_json(j.contains("poset") ? j.at("poset") : j, &rank);
    t.rank = rank ? *rank : natural_rank(t.gamma);
    t.q = require_q(t.gamma, q_arg, "map");
  }
  PosetMap m = map(t);
  write_output(out_path, map_to_json(m).dump(2) + "\n");
  return kExitOk;
}

int run_square(const std::string& in_path, const std::string& out_path) {
  json j = parse_json(read_input(in_path));
  if (j.contains("sigma")) {
    SfsSquare sq = square_from_json(j);
    PosetMap phi = cyl_square(sq);
    json out = map_to_json(phi);
    out["q"] = phi.source.label(sq.sigma.source.size() + *sq.sigma.target.unique_min());
    out["q_prime"] =
        phi.target.label(sq.sigma_prime.source.size() + *sq.sigma_prime.target.unique_min());
    write_output(out_path, out.dump(2) + "\n");
    return kExitOk;
  }
  if (j.contains("q") && j.contains("q_prime")) {
    PosetMap phi = map_from_json(j);
    JoinTriple t{phi.source, phi.source_rank, 0};
    JoinTriple tp{phi.target, phi.target_rank, 0};
    auto q = phi.source.index_of(j.at("q").get<std::string>());
    auto qp = phi.target.index_of(j.at("q_prime").get<std::string>());
    if (!q || !qp) throw Error("square: unknown distinguished label");
    t.q = *q;
    tp.q = *qp;
    SfsSquare sq = map_square(phi, t, tp);
    write_output(out_path, square_to_json(sq).dump(2) + "\n");
    return kExitOk;
  }
  throw Error("square: expected a square object or a map with q and q_prime");
}

int run_cdindex(const std::string& in_path, const std::string& out_path) {
  auto in = read_ranked(in_path);
  write_output(out_path, cd_index(in.poset, in.rank).to_string() + "\n");
  return kExitOk;
}

int run_localcd(const std::string& in_path, const std::string& out_path) {
  auto in = read_ranked(in_path);
  write_output(out_path, local_cd_index(in.poset, in.rank).to_string() + "\n");
  return kExitOk;
}

int run_verify_formula(const std::string& q_arg, const std::string& in_path,
                       const std::string& out_path) {
  auto in = read_ranked(in_path);
  JoinTriple t{in.poset, in.rank, require_q(in.poset, q_arg, "verify-formula")};
  NCPoly lhs = cd_index(t.gamma, t.rank);
  NCPoly rhs = cd_formula_rhs(t);
  std::ostringstream report;
  report << "lhs: " << lhs.to_string() << "\n";
  report << "rhs: " << rhs.to_string() << "\n";
  bool pass = lhs == rhs;
  report << (pass ? "PASS" : "FAIL") << "\n";
  write_output(out_path, report.str());
  return pass ? kExitOk : kExitCheckFailed;
}

int run_dot(const std::string& in_path, const std::string& out_path) {
  json j = parse_json(read_input(in_path));
  std::optional<RankFunction> rank;
  Poset p = poset_from_json(j, &rank);
  if (!rank) {
    try {
      rank = natural_rank(p);
    } catch (const Error&) {
      rank.reset();  // layout without layers
    }
  }
  write_output(out_path, to_dot(p, rank ? &*rank : nullptr));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite poset calculator: subdivisions, mapping cylinders, cd-indices"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "json", method, family, what, q_arg;
  std::vector<std::string> params;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("-i", in_path, "input file (default: stdin)");
    cmd->add_option("-o", out_path, "output file (default: stdout)");
  };

  auto* build = app.add_subcommand("build", "construct a poset from a named family");
  build->add_option("family", family)->required();
  build->add_option("params", params, "family parameters or operand files");
  build->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
  add_io(build);

  auto* check = app.add_subcommand("check", "verify a property, print PASS/FAIL with witness");
  check->add_option("what", what)->required();
  check->add_option("q", q_arg, "q=<label> for join-admissible");
  check->add_option("--method", method, "eq31|eq32|near for sfs")
      ->check(CLI::IsMember({"eq31", "eq32", "near"}));
  add_io(check);

  auto* cyl_cmd = app.add_subcommand("cyl", "mapping cylinder triple of a subdivision map");
  add_io(cyl_cmd);

  auto* map_cmd = app.add_subcommand("map", "subdivision map of a triple (or poset with q=<label>)");
  map_cmd->add_option("q", q_arg, "q=<label>");
  add_io(map_cmd);

  auto* square_cmd = app.add_subcommand("square", "glue a square into a map, or split one back");
  add_io(square_cmd);

  auto* cd_cmd = app.add_subcommand("cdindex", "cd-index of an Eulerian poset");
  add_io(cd_cmd);

  auto* local_cmd = app.add_subcommand("localcd", "local cd-index of a near-Eulerian poset");
  add_io(local_cmd);

  auto* verify_cmd = app.add_subcommand("verify-formula",
                                        "compare the cd-index with its cylinder decomposition");
  verify_cmd->add_option("q", q_arg, "q=<label>")->required();
  add_io(verify_cmd);

  auto* dot_cmd = app.add_subcommand("dot", "Hasse diagram in DOT format");
  add_io(dot_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return run_build(family, params, in_path, out_path, format);
    if (check->parsed()) return run_check(what, q_arg, method, in_path, out_path);
    if (cyl_cmd->parsed()) return run_cyl(in_path, out_path);
    if (map_cmd->parsed()) return run_map(q_arg, in_path, out_path);
    if (square_cmd->parsed()) return run_square(in_path, out_path);
    if (cd_cmd->parsed()) return run_cdindex(in_path, out_path);
    if (local_cmd->parsed()) return run_localcd(in_path, out_path);
    if (verify_cmd->parsed()) return run_verify_formula(q_arg, in_path, out_path);
    if (dot_cmd->parsed()) return run_dot(in_path, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
