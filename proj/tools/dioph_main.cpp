// Command line front end: solve single instances, run the brute-force
// oracle, cross-check, sweep parameter grids and explore x^a = y^b.
//
// Exit codes: 0 success, 1 verification discrepancy, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dioph/report.hpp"
#include "dioph/sweep.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

dioph::Int parse_int(const std::string& text, const std::string& name) {
  try {
    return dioph::Int(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(name + " must be a decimal integer, got '" + text + "'");
  }
}

dioph::Int parse_positive(const std::string& text, const std::string& name) {
  dioph::Int v = parse_int(text, name);
  if (v < 1) throw UsageError(name + " must be >= 1");
  return v;
}

struct InstanceFlags {
  std::string n = "1", m = "1", k = "1", l = "1", c = "1";

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "exponent of x on the left")->required();
    cmd->add_option("--m", m, "exponent of y on the left")->required();
    cmd->add_option("--k", k, "exponent of x on the right")->required();
    cmd->add_option("--l", l, "exponent of y on the right")->required();
    cmd->add_option("--c", c, "right-hand coefficient")->required();
  }

  dioph::EquationParams params() const {
    return {parse_positive(n, "n"), parse_positive(m, "m"),
            parse_positive(k, "k"), parse_positive(l, "l"),
            parse_positive(c, "c")};
  }
};

dioph::Int bound_or_default(const std::string& bound_flag) {
  if (bound_flag.empty()) return dioph::default_bound();
  return parse_positive(bound_flag, "bound");
}

int run_solve(const InstanceFlags& flags, const std::string& bound_flag,
              bool json) {
  const auto rep =
      dioph::report_instance(flags.params(), bound_or_default(bound_flag),
                             std::nullopt);
  if (json)
    std::cout << dioph::to_json(rep).dump() << "\n";
  else
    std::cout << dioph::render_table(rep);
  return 0;
}

int run_brute(const InstanceFlags& flags, const std::string& xmax,
              const std::string& ymax, bool coprime,
              const std::string& gcdmax, bool json) {
  const dioph::EquationParams p = flags.params();
  dioph::SearchBox box{parse_positive(xmax, "xmax"), parse_positive(ymax, "ymax"),
                       coprime, std::nullopt};
  if (!gcdmax.empty()) box.gcd_max = parse_positive(gcdmax, "gcdmax");

  const auto found = dioph::brute_force(p, box);
  if (json) {
    nlohmann::json j;
    j["params"] = dioph::to_json(p);
    j["box"] = {{"xmax", box.x_max.get_str()},
                {"ymax", box.y_max.get_str()},
                {"coprime", box.coprime_only}};
    if (box.gcd_max) j["box"]["gcdmax"] = box.gcd_max->get_str();
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& [x, y] : found)
      sols.push_back({{"x", x.get_str()}, {"y", y.get_str()}});
    j["solutions"] = std::move(sols);
    j["count"] = found.size();
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [x, y] : found)
      std::cout << "(" << x << ", " << y << ")\n";
    std::cout << found.size() << " solution(s) in the box\n";
  }
  return 0;
}

int run_crosscheck(const InstanceFlags& flags, const std::string& box_flag,
                   const std::string& bound_flag, bool json) {
  const dioph::EquationParams p = flags.params();
  const dioph::SearchBox box = dioph::square_box(parse_positive(box_flag, "box"));
  const auto rep = dioph::report_instance(p, bound_or_default(bound_flag), box);
  if (json)
    std::cout << dioph::to_json(rep).dump() << "\n";
  else
    std::cout << dioph::render_table(rep);
  return rep.check->ok() ? 0 : 1;
}

struct SweepFlags {
  std::string nmin = "1", nmax = "5";
  std::string mmin = "1", mmax = "5";
  std::string kmin = "1", kmax = "4";
  std::string lmin = "1", lmax = "4";
  std::string cmin = "1", cmax = "12";
  std::string box = "300";
  std::string bound;
  std::string out = "sweep.jsonl";
};

int run_sweep(const SweepFlags& f) {
  dioph::SweepSpec spec;
  spec.n_lo = parse_positive(f.nmin, "nmin");
  spec.n_hi = parse_positive(f.nmax, "nmax");
  spec.m_lo = parse_positive(f.mmin, "mmin");
  spec.m_hi = parse_positive(f.mmax, "mmax");
  spec.k_lo = parse_positive(f.kmin, "kmin");
  spec.k_hi = parse_positive(f.kmax, "kmax");
  spec.l_lo = parse_positive(f.lmin, "lmin");
  spec.l_hi = parse_positive(f.lmax, "lmax");
  spec.c_lo = parse_positive(f.cmin, "cmin");
  spec.c_hi = parse_positive(f.cmax, "cmax");
  spec.box = parse_positive(f.box, "box");
  spec.bound = bound_or_default(f.bound);
  spec.out_path = f.out;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::ofstream out(spec.out_path, std::ios::trunc);
  if (!out) throw UsageError("cannot write output path '" + spec.out_path + "'");
  const auto totals = dioph::run_sweep(spec, out);
  out.close();

  std::cout << totals.instances << " instance(s), " << totals.certified
            << " certified, " << totals.bounded << " bounded, "
            << totals.soundness_failures + totals.completeness_failures
            << " discrepancy(ies) -> " << spec.out_path << "\n";
  return totals.ok() ? 0 : 1;
}

int run_powereq(const std::string& a_flag, const std::string& b_flag,
                const std::string& tmax_flag, bool json) {
  const dioph::Int a = parse_positive(a_flag, "a");
  const dioph::Int b = parse_positive(b_flag, "b");
  const dioph::Int tmax = parse_positive(tmax_flag, "tmax");
  const auto param = dioph::parametrize(a, b);
  const auto family = dioph::enumerate_solutions(param, tmax);

  if (json) {
    nlohmann::json j = dioph::to_json(param);
    nlohmann::json sols = nlohmann::json::array();
    dioph::Int t = 1;
    for (const auto& [x, y] : family) {
      sols.push_back({{"t", t.get_str()}, {"x", x.get_str()}, {"y", y.get_str()}});
      ++t;
    }
    j["solutions"] = std::move(sols);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "x^" << a << " = y^" << b << ": d=" << param.d
              << " a1=" << param.a1 << " b1=" << param.b1 << " family "
              << dioph::family_string(param) << "\n";
    dioph::Int t = 1;
    for (const auto& [x, y] : family) {
      std::cout << "  t=" << t << ": (" << x << ", " << y << ")\n";
      ++t;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified solver for x^n + y^m = c * x^k * y^l over positive integers"};
  app.require_subcommand(1);

  InstanceFlags solve_flags, brute_flags, check_flags;
  std::string solve_bound, check_bound, check_box = "300";
  bool solve_json = false, brute_json = false, check_json = false,
       powereq_json = false;
  std::string xmax = "100", ymax = "100", gcdmax;
  bool brute_coprime = false;
  SweepFlags sweep_flags;
  std::string pe_a, pe_b, pe_tmax = "10";

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "classify and solve one instance");
  solve_flags.attach(solve_cmd);
  solve_cmd->add_option("--bound", solve_bound,
                        "fallback bound (default 200; DIOPH_DEFAULT_BOUND overrides)");
  solve_cmd->add_flag("--json", solve_json, "emit JSON instead of a table");

  CLI::App* brute_cmd =
      app.add_subcommand("brute", "exhaustive oracle search in a box");
  brute_flags.attach(brute_cmd);
  brute_cmd->add_option("--xmax", xmax, "box width")->required();
  brute_cmd->add_option("--ymax", ymax, "box height")->required();
  brute_cmd->add_flag("--coprime", brute_coprime, "keep only gcd(x,y) = 1");
  brute_cmd->add_option("--gcdmax", gcdmax, "keep only gcd(x,y) <= this");
  brute_cmd->add_flag("--json", brute_json, "emit JSON");

  CLI::App* check_cmd = app.add_subcommand(
      "crosscheck", "solve, then verify against brute force on a box");
  check_flags.attach(check_cmd);
  check_cmd->add_option("--box", check_box, "square box side (default 300)");
  check_cmd->add_option("--bound", check_bound, "fallback bound");
  check_cmd->add_flag("--json", check_json, "emit JSON");

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "replay a parameter grid with cross-checks, JSONL output");
  sweep_cmd->add_option("--nmin", sweep_flags.nmin, "n range start");
  sweep_cmd->add_option("--nmax", sweep_flags.nmax, "n range end");
  sweep_cmd->add_option("--mmin", sweep_flags.mmin, "m range start");
  sweep_cmd->add_option("--mmax", sweep_flags.mmax, "m range end");
  sweep_cmd->add_option("--kmin", sweep_flags.kmin, "k range start");
  sweep_cmd->add_option("--kmax", sweep_flags.kmax, "k range end");
  sweep_cmd->add_option("--lmin", sweep_flags.lmin, "l range start");
  sweep_cmd->add_option("--lmax", sweep_flags.lmax, "l range end");
  sweep_cmd->add_option("--cmin", sweep_flags.cmin, "c range start");
  sweep_cmd->add_option("--cmax", sweep_flags.cmax, "c range end");
  sweep_cmd->add_option("--box", sweep_flags.box, "oracle box side");
  sweep_cmd->add_option("--bound", sweep_flags.bound, "fallback bound");
  sweep_cmd->add_option("--out", sweep_flags.out, "JSONL output path");

  CLI::App* pe_cmd =
      app.add_subcommand("powereq", "the solution family of x^a = y^b");
  pe_cmd->add_option("--a", pe_a, "left exponent")->required();
  pe_cmd->add_option("--b", pe_b, "right exponent")->required();
  pe_cmd->add_option("--tmax", pe_tmax, "members to list (default 10)");
  pe_cmd->add_flag("--json", powereq_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_flags, solve_bound, solve_json);
    if (brute_cmd->parsed())
      return run_brute(brute_flags, xmax, ymax, brute_coprime, gcdmax, brute_json);
    if (check_cmd->parsed())
      return run_crosscheck(check_flags, check_box, check_bound, check_json);
    if (sweep_cmd->parsed()) return run_sweep(sweep_flags);
    if (pe_cmd->parsed()) return run_powereq(pe_a, pe_b, pe_tmax, powereq_json);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
