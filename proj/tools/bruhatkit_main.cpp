#include "bruhatkit/json_io.hpp"
#include "bruhatkit/typea.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace bruhatkit;

Rat parse_rational(const std::string& tok) {
  const auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(tok));
    const long long num = std::stoll(tok.substr(0, slash));
    const long long den = std::stoll(tok.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + tok + "'");
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

SplitElement parse_h(const std::string& spec, const RootSystem& rs) {
  RatVec coords;
  for (const auto& tok : split_commas(spec)) coords.push_back(parse_rational(tok));
  if (static_cast<int>(coords.size()) != rs.rank())
    throw std::invalid_argument("--H needs " + std::to_string(rs.rank()) + " coordinates");
  SplitElement h = rs.split_element(std::move(coords));
  if (!h.chamber_closure_flag)
    throw std::invalid_argument("--H lies outside cl a+ (negative coweight coordinate)");
  return h;
}

SimpleSubset parse_theta(const std::string& spec, const RootSystem& rs) {
  SimpleSubset theta;
  if (spec.empty()) return theta;
  for (const auto& tok : split_commas(spec)) {
    const int i = std::stoi(tok);
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("theta index out of range: " + tok);
    theta.add(i - 1);
  }
  return theta;
}

std::vector<int> parse_composition(const std::string& spec) {
  std::vector<int> c;
  for (const auto& tok : split_commas(spec)) c.push_back(std::stoi(tok));
  if (c.empty()) throw std::invalid_argument("empty composition");
  return c;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << j.dump(2) << "\n";
}

void emit_table(const Json& j, const std::string& out_path) {
  std::ostringstream os;
  for (const auto& [key, val] : j.items()) os << key << ": " << val.dump() << "\n";
  if (out_path.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream f(out_path);
  f << os.str();
}

struct CommonOpts {
  std::string series = "A";
  int rank = 2;
  std::string out;
  std::string format = "json";
};

void add_system_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--series", o.series, "Root-system series (A..G)")->required();
  cmd->add_option("--rank", o.rank, "Rank")->required();
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
  cmd->add_option("--format", o.format, "json|table")->check(CLI::IsMember({"json", "table"}));
}

void write_report(const Json& j, const CommonOpts& o) {
  if (o.format == "table")
    emit_table(j, o.out);
  else
    emit(j, o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bruhatkit: Bruhat decompositions of flag manifolds, exact and numerical"};
  app.require_subcommand(1);

  CommonOpts roots_o, weyl_o, cosets_o, dec_o;
  std::string cosets_left, cosets_right;
  std::size_t membership_limit = 5000;
  std::string dec_h, dec_theta, dec_csv;

  auto* cmd_roots = app.add_subcommand("roots", "Build a root system");
  add_system_opts(cmd_roots, roots_o);

  auto* cmd_weyl = app.add_subcommand("weyl", "Generate the Weyl group");
  add_system_opts(cmd_weyl, weyl_o);

  auto* cmd_cosets = app.add_subcommand("cosets", "Enumerate W_Delta \\ W / W_Theta");
  add_system_opts(cmd_cosets, cosets_o);
  cmd_cosets->add_option("--left", cosets_left, "Delta as 1-based simple-root indices");
  cmd_cosets->add_option("--right", cosets_right, "Theta as 1-based simple-root indices");
  cmd_cosets->add_option("--membership-limit", membership_limit,
                         "Omit the membership map above this group order");

  auto* cmd_dec = app.add_subcommand("decompose", "Generalized Bruhat decomposition");
  add_system_opts(cmd_dec, dec_o);
  cmd_dec->add_option("--H", dec_h, "Split element, fundamental-coweight coordinates")->required();
  cmd_dec->add_option("--theta", dec_theta, "Flag type Theta, 1-based indices");
  cmd_dec->add_option("--csv", dec_csv, "Write a cell-dimension histogram CSV");

  int fp_n = 3, fp_trials = 100;
  std::uint64_t fp_seed = 1, verify_seed = 0;
  std::string fp_mults, fp_flag, fp_out;
  auto* cmd_fix = app.add_subcommand("fixpoints", "Enumerate fixed components in SL(n,R)");
  cmd_fix->add_option("--n", fp_n, "Matrix size")->required();
  cmd_fix->add_option("--mults", fp_mults, "Eigenvalue multiplicities, e.g. 2,1")->required();
  cmd_fix->add_option("--flag", fp_flag, "Flag block sizes, e.g. 1,1,1")->required();
  cmd_fix->add_option("--seed", fp_seed, "Sample seed");
  cmd_fix->add_option("--out", fp_out, "Output path (default: stdout)");

  std::string v_mults, v_flag, v_out, v_curves;
  int v_n = 3;
  auto* cmd_verify = app.add_subcommand("verify", "Dynamical verification run");
  cmd_verify->add_option("--n", v_n, "Matrix size")->required();
  cmd_verify->add_option("--mults", v_mults, "Eigenvalue multiplicities")->required();
  cmd_verify->add_option("--flag", v_flag, "Flag block sizes")->required();
  cmd_verify->add_option("--trials", fp_trials, "Number of random trials")->required();
  cmd_verify->add_option("--seed", verify_seed, "RNG seed (required for reproducibility)")
      ->required();
  cmd_verify->add_option("--out", v_out, "Output path (default: stdout)");
  cmd_verify->add_option("--curves", v_curves, "Write convergence curves CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_roots->parsed()) {
      const RootSystem rs = RootSystem::build(series_from_char(roots_o.series.at(0)), roots_o.rank);
      write_report(root_system_json(rs), roots_o);
    } else if (cmd_weyl->parsed()) {
      const RootSystem rs = RootSystem::build(series_from_char(weyl_o.series.at(0)), weyl_o.rank);
      const WeylGroup weyl = WeylGroup::generate(rs);
      write_report(weyl_summary_json(weyl), weyl_o);
    } else if (cmd_cosets->parsed()) {
      const RootSystem rs =
          RootSystem::build(series_from_char(cosets_o.series.at(0)), cosets_o.rank);
      const WeylGroup weyl = WeylGroup::generate(rs);
      const auto table =
          weyl.double_cosets(parse_theta(cosets_left, rs), parse_theta(cosets_right, rs));
      write_report(coset_table_json(weyl, table, membership_limit), cosets_o);
    } else if (cmd_dec->parsed()) {
      const RootSystem rs = RootSystem::build(series_from_char(dec_o.series.at(0)), dec_o.rank);
      const WeylGroup weyl = WeylGroup::generate(rs);
      const auto gd =
          generalized_decomposition(rs, weyl, parse_h(dec_h, rs), parse_theta(dec_theta, rs));
      write_report(decomposition_json(rs, weyl, gd), dec_o);
      if (!dec_csv.empty()) {
        std::map<int, int> hist;
        for (const auto& cell : gd.cells) hist[cell.total_dim]++;
        std::ofstream f(dec_csv);
        f << "total_dim,count\n";
        for (const auto& [d, c] : hist) f << d << "," << c << "\n";
      }
    } else if (cmd_fix->parsed()) {
      const auto mults = parse_composition(fp_mults);
      const flagdyn::FlagType type{fp_n, parse_composition(fp_flag)};
      (void)type.partial_sums();  // validates the composition
      const auto flow = flagdyn::SplitFlow::from_multiplicities(mults);
      if (flow.h_diag.size() != fp_n) throw std::invalid_argument("--mults must sum to n");
      const auto comps = flagdyn::enumerate_fixed_components(flow, type, fp_seed);
      Json j;
      j["n"] = fp_n;
      j["multiplicities"] = mults;
      j["flag_type"] = type.blocks;
      j["seed"] = fp_seed;
      j["components"] = components_json(comps);
      emit(j, fp_out);
    } else if (cmd_verify->parsed()) {
      const auto mults = parse_composition(v_mults);
      const flagdyn::FlagType type{v_n, parse_composition(v_flag)};
      (void)type.partial_sums();
      const auto flow = flagdyn::SplitFlow::from_multiplicities(mults);
      if (flow.h_diag.size() != v_n) throw std::invalid_argument("--mults must sum to n");

      const TypeABridge bridge = build_typea_bridge(mults, type.blocks);
      std::vector<std::pair<flagdyn::Assignment, int>> predicted;
      for (const auto& e : bridge.entries) predicted.emplace_back(e.assignment, e.fix_dim);

      const auto rep = flagdyn::verify_corollary(flow, type, fp_trials, verify_seed, &predicted,
                                                 bridge.cosets.count());
      emit(verify_report_json(rep), v_out);
      if (!v_curves.empty()) {
        std::ofstream f(v_curves);
        f << "flag_index,k,step_distance\n";
        std::mt19937_64 rng(verify_seed);
        for (int i = 0; i < 8; ++i) {
          const auto b = flagdyn::random_flag(type, rng);
          const auto lim = flagdyn::limit_point(flow, b, -1, nullptr, 500, 1e-9, true);
          for (std::size_t k = 0; k < lim.curve.size(); ++k)
            f << i << "," << (k + 1) << "," << lim.curve[k] << "\n";
        }
      }
      if (!rep.violations.empty()) return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
