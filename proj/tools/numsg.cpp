// numsg: command-line front end for the numsg library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "numsg/analysis.hpp"
#include "numsg/plotdata.hpp"
#include "numsg/scan.hpp"
#include "numsg/table1.hpp"

namespace {

using numsg::json;

constexpr int kDomainError = 2;

std::vector<std::int64_t> parse_list(const std::string& text) {
  auto v = numsg::scan::detail::parse_line(text);
  if (v.empty()) throw numsg::error(numsg::errc::empty_input, "no generators given");
  return v;
}

std::string opt_real(const std::optional<double>& v) { return v ? fmt::format("{:.3f}", *v) : "-"; }

void print_report(std::ostream& out, const numsg::AnalysisReport& r) {
  out << fmt::format("S = <{}>\n", fmt::join(r.generators, ","));
  if (r.raw_generators != r.generators) out << fmt::format("  input      {}\n", fmt::join(r.raw_generators, ","));
  out << fmt::format("  d1 = {}  edim = {}  F = {}  genus = {}\n", r.multiplicity, r.edim, r.frobenius, r.genus);
  out << fmt::format("  symmetric = {}  complete intersection = {}  presentation size = {}\n", r.symmetric,
                     r.complete_intersection, r.presentation_beta1);
  if (r.syzygy) {
    const auto& p = *r.syzygy;
    out << fmt::format("  beta1 = {}  beta2 = {}  2B6 = {}  g = {}\n", p.beta1, p.beta2, p.two_b6, p.g);
    out << fmt::format("  x = {}\n  y = {}\n", fmt::join(p.x, " "), fmt::join(p.y, " "));
  }
  if (r.identities) out << fmt::format("  power identities: {}\n", r.identities->all_zero() ? "exact" : "FAILED");
  if (r.bounds) {
    const auto& b = *r.bounds;
    out << fmt::format("  b = {:.6f}  u_m = {:.6f}  K = {:.6f}\n", b.theorem.b, b.theorem.u_m, b.theorem.k);
    out << fmt::format("  g6w2 = {}  g6w = {}  g6 = {:.3f}  q6 = {:.3f}  gtilde6 = {:.3f}  gbar6 = {:.3f}\n",
                       opt_real(b.g6w2), opt_real(b.g6w), b.theorem.g6, b.q6, b.gtilde6, b.gbar6);
    out << fmt::format("  windows: B6 {}  beta2-beta1 {} (upper {:.3f})  beta1 {}\n",
                       b.windows.b6_window.pass() ? "ok" : "VIOLATED", b.windows.gap_window.pass() ? "ok" : "VIOLATED",
                       b.windows.gap_upper, b.windows.beta1_window.pass() ? "ok" : "VIOLATED");
  }
  if (r.decomposition) {
    const auto& d = *r.decomposition;
    out << fmt::format("  gluing {}: a1 = {}  d6 = {}  base = <{}>", to_string(d.kind), d.a1, d.d6,
                       fmt::join(d.inner5->generators(), ","));
    if (d.inner4) out << fmt::format("  a2 = {}  q5 = {}  inner = <{}>", *d.a2, *d.q5, fmt::join(d.inner4->generators(), ","));
    out << "\n";
  } else if (r.edim == 6) {
    out << "  gluing: none\n";
  }
}

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw numsg::error(numsg::errc::io_error, "cannot write " + path);
  f << j.dump(2) << "\n";
  if (!f) throw numsg::error(numsg::errc::io_error, "write failed for " + path);
}

int run_analyze(const std::string& gens, bool as_json) {
  const auto report = numsg::analyze(parse_list(gens));
  if (as_json) {
    std::cout << numsg::to_json(report).dump(2) << "\n";
  } else {
    print_report(std::cout, report);
  }
  return 0;
}

int run_table1(std::optional<double> tolerance, bool as_json) {
  const auto rows = numsg::table1::evaluate_all(numsg::table1::Tolerance{tolerance});
  bool all = true;
  for (const auto& r : rows) all = all && r.pass();
  if (as_json) {
    std::cout << json{{"pass", all}, {"rows", numsg::table1::to_json(rows)}}.dump(2) << "\n";
    return all ? 0 : 1;
  }
  std::cout << fmt::format("{:<5}", "");
  for (const auto& c : rows.front().cells) std::cout << fmt::format("{:>20}", c.column);
  std::cout << "\n";
  for (const auto& r : rows) {
    std::cout << fmt::format("{:<5}", r.name);
    for (const auto& c : r.cells) {
      std::cout << fmt::format("{:>20}", fmt::format("{}{}/{}", c.pass ? "" : "*", c.computed, c.published));
    }
    std::cout << fmt::format("  {}\n", r.pass() ? "pass" : "FAIL");
  }
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.pass();
  std::cout << fmt::format("{}/{} rows pass (computed/published, * marks a mismatch)\n", passed, rows.size());
  return all ? 0 : 1;
}

int run_scan(const std::string& mode, const std::string& input, const numsg::scan::Options& opt,
             const std::string& out, bool as_json) {
  numsg::scan::Result res;
  if (mode == "glued") {
    res = numsg::scan::scan_glued(opt);
  } else if (mode == "file") {
    if (input.empty()) throw numsg::error(numsg::errc::file_not_found, "--mode file needs --input");
    res = numsg::scan::scan_file(input, opt.threads);
  } else {
    throw numsg::error(numsg::errc::domain_error, "unknown mode " + mode);
  }
  const json j = numsg::scan::to_json(res);
  if (!out.empty()) emit(j, out);
  if (as_json && out.empty()) emit(j, "");
  const auto& s = res.summary;
  std::ostream& log = (as_json && out.empty()) ? std::cerr : std::cout;
  log << fmt::format("scan {}: {} inputs, {} analyzed, {} skipped, {} theorem violations, {} window violations\n", res.mode,
                     s.inputs, s.analyzed, s.skipped, s.theorem_violations, s.window_violations);
  for (const auto& r : res.records) {
    if (!r.skipped && !r.theorem_ok()) {
      std::cerr << "THEOREM VIOLATION (bug): " << numsg::scan::to_json(r).dump() << "\n";
    }
  }
  if (s.window_violations > 0) {
    log << fmt::format("*** OPEN WINDOW VIOLATED at records {} ***\n", fmt::join(s.window_violation_indices, ","));
  }
  return s.theorem_violations > 0 ? 1 : 0;
}

int run_plotdata(int figure, std::optional<double> step, const std::string& out) {
  const double h = step.value_or(numsg::plot::default_step(figure));
  std::ostringstream buf;
  numsg::plot::write(buf, figure, h);
  if (out.empty() || out == "-") {
    std::cout << buf.str();
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw numsg::error(numsg::errc::io_error, "cannot write " + out);
  f << buf.str();
  if (!f) throw numsg::error(numsg::errc::io_error, "write failed for " + out);
  return 0;
}

int run_glue(std::int64_t a, const std::string& base_text, std::int64_t d, bool as_json) {
  const numsg::Semigroup base = numsg::Semigroup::make(parse_list(base_text));
  const numsg::Semigroup glued = numsg::glue(a, base, d);
  const std::int64_t f_base = numsg::frobenius(base);
  const std::int64_t f_glued = numsg::frobenius(glued);
  const std::int64_t predicted = numsg::frobenius_of_gluing(a, f_base, d);
  const auto report = numsg::analyze(glued);
  if (as_json) {
    json j;
    j["a"] = a;
    j["d"] = d;
    j["base"] = base.generators();
    j["base_frobenius"] = f_base;
    j["glued_frobenius"] = f_glued;
    j["frobenius_law_holds"] = predicted == f_glued;
    j["report"] = numsg::to_json(report);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << fmt::format("F(base) = {}  F(glued) = {}  a F(base) + (a-1) d = {}  {}\n", f_base, f_glued, predicted,
                             predicted == f_glued ? "ok" : "MISMATCH");
    print_report(std::cout, report);
  }
  return predicted == f_glued ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups of embedding dimension <= 6: syzygies, Betti numbers and degree bounds"};
  app.require_subcommand(1);
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "Analyze one semigroup given as a comma-separated generator list");
  std::string gens;
  analyze->add_option("generators", gens, "Generators, e.g. 7,9,11,12,13,15")->required();
  analyze->add_flag("--json", as_json, "Emit JSON");

  auto* table = app.add_subcommand("table1", "Recompute the V1..V12 reference table");
  std::optional<double> tolerance;
  table->add_option("--tolerance", tolerance, "Absolute tolerance for real-valued cells");
  table->add_flag("--json", as_json, "Emit JSON");

  auto* scan = app.add_subcommand("scan", "Check theorems and flag window violations over many semigroups");
  std::string mode = "glued";
  std::string input;
  std::string out;
  numsg::scan::Options opt;
  scan->add_option("--mode", mode, "glued or file")->check(CLI::IsMember({"glued", "file"}));
  scan->add_option("--input", input, "Generator list file, one semigroup per line");
  scan->add_option("--count", opt.count, "Number of glued semigroups");
  scan->add_option("--seed", opt.seed, "Random seed");
  scan->add_option("--dmax", opt.dmax, "Largest generator of the random bases");
  scan->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  scan->add_option("--out", out, "Write the JSON records here");
  scan->add_flag("--json", as_json, "Emit JSON on stdout");

  auto* plot = app.add_subcommand("plotdata", "Write figure data as CSV");
  int figure = 1;
  std::optional<double> step;
  std::string plot_out;
  plot->add_option("--figure", figure, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  plot->add_option("--step", step, "Grid step (log10 units for figure 3)");
  plot->add_option("--out", plot_out, "Output CSV path (default stdout)");

  auto* gl = app.add_subcommand("glue", "Build <a S, d> and analyze it");
  std::int64_t a = 0;
  std::int64_t d = 0;
  std::string base;
  gl->add_option("-a", a, "Scaling factor")->required();
  gl->add_option("--base", base, "Base generators, comma-separated")->required();
  gl->add_option("-d", d, "Glued element")->required();
  gl->add_flag("--json", as_json, "Emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(gens, as_json);
    if (*table) return run_table1(tolerance, as_json);
    if (*scan) return run_scan(mode, input, opt, out, as_json);
    if (*plot) return run_plotdata(figure, step, plot_out);
    if (*gl) return run_glue(a, base, d, as_json);
  } catch (const numsg::error& e) {
    if (as_json) {
      std::cout << json{{"error", std::string(numsg::to_string(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return 0;
}
