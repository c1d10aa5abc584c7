// weilrep: verification suites, character tables, kernels and Gauss sums.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "weilrep/suites.hpp"

namespace {

using weilrep::Json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << text;
}

int cmd_verify(int p, int N, const std::string& suite, std::uint64_t seed, const std::string& format,
               bool timing, const std::string& out_path) {
  weilrep::SuiteOptions options{p, N, seed, weilrep::max_checks_from_env()};
  const auto reports = weilrep::run_suites(suite, options);
  if (format == "csv") {
    emit(weilrep::reports_to_csv(reports), out_path);
  } else {
    emit(weilrep::reports_to_json(suite, options, reports, timing).dump(2) + "\n", out_path);
  }
  if (timing) {
    for (const auto& r : reports)
      std::cerr << r.suite << ": " << r.checks_run << " checks, " << r.failures.size() << " failures, "
                << r.wall_time << " s\n";
  }
  for (const auto& r : reports)
    if (!r.ok()) return 1;
  return 0;
}

int cmd_chartable(int p, int N, const std::string& elements_path, const std::string& format, std::uint64_t seed,
                  const std::string& out_path) {
  const weilrep::SympSpace space(p, N);
  std::vector<weilrep::SpMatrix> elements;
  if (!elements_path.empty()) {
    std::ifstream in(elements_path);
    if (!in) throw std::runtime_error("cannot open " + elements_path);
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      weilrep::SpMatrix g(weilrep::Matrix::parse(line, p));
      if (g.n() != space.dim()) throw std::invalid_argument("element has the wrong size: " + line);
      elements.push_back(std::move(g));
    }
  } else if (N == 1) {
    elements = weilrep::enumerate_sp(space);
  } else {
    throw std::invalid_argument("chartable with N >= 2 needs --elements FILE");
  }

  weilrep::WeilKernelTable table(space, seed);
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "g,in_U,ch_rho,trace_check\n";
  bool all_ok = true;
  for (const auto& g : elements) {
    const bool u = weilrep::in_U(g);
    const weilrep::CycNum trace = weilrep::rho(table, g).trace();
    const weilrep::CycNum value = u ? weilrep::character_rho(g) : trace;
    const bool ok = value == trace;
    all_ok = all_ok && ok;
    Json row;
    row["g"] = g.to_string();
    row["in_U"] = u;
    row["ch_rho"] = weilrep::to_json(value, true);
    row["trace_check"] = ok;
    csv << weilrep::csv_escape(g.to_string()) << ',' << (u ? "true" : "false") << ','
        << weilrep::csv_escape(weilrep::to_json(value).dump()) << ',' << (ok ? "true" : "false") << '\n';
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    Json j;
    j["p"] = p;
    j["N"] = N;
    j["rows"] = std::move(rows);
    emit(j.dump(2) + "\n", out_path);
  } else {
    emit(csv.str(), out_path);
  }
  return all_ok ? 0 : 1;
}

int cmd_kernel(int p, int N, const std::string& g_text, std::uint64_t seed, bool with_complex,
               const std::string& out_path) {
  const weilrep::SympSpace space(p, N);
  weilrep::SpMatrix g(weilrep::Matrix::parse(g_text, p));
  if (g.n() != space.dim()) throw std::invalid_argument("g must be " + std::to_string(space.dim()) + "x" +
                                                        std::to_string(space.dim()));
  if (space.num_vectors() > weilrep::kMaxExhaustiveVectors)
    throw weilrep::ResourceError("resource bound exceeded: p^(2N) too large");
  weilrep::WeilKernelTable table(space, seed);
  const auto& entry = table.entry(g);
  Json j = weilrep::to_json(entry.kernel, with_complex);
  Json out;
  out["p"] = p;
  out["N"] = N;
  out["g"] = g.to_string();
  out["via"] = entry.factors ? "factorization(" + entry.factors->first.to_string() + "," +
                                   entry.factors->second.to_string() + ")"
                             : std::string("ansatz");
  out["values"] = std::move(j["values"]);
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

int cmd_gauss(int p, bool with_complex) {
  const weilrep::CycNum e = weilrep::gauss_sum(p);
  Json j;
  j["p"] = p;
  j["gauss_sum"] = weilrep::to_json(e, with_complex);
  j["square"] = weilrep::to_json(e * e, with_complex);
  j["legendre_minus_one"] = weilrep::legendre_mod(-1, p);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Heisenberg and Weil representations of Sp(2N, F_p)"};
  app.require_subcommand(1);

  int p = 3;
  int N = 1;
  std::uint64_t seed = 42;
  std::string suite = "all";
  std::string format = "json";
  std::string out_path;
  std::string g_text;
  std::string elements_path;
  bool timing = false;
  bool with_complex = false;

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its report");
  verify->add_option("--p", p, "Odd prime")->required();
  verify->add_option("--N", N, "Half-dimension of V")->capture_default_str();
  verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
  verify->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  verify->add_option("--out", out_path, "Write report to FILE instead of stdout");
  verify->add_flag("--timing", timing, "Include wall_time in the report and print timings to stderr");

  auto* chartable = app.add_subcommand("chartable", "Character table of the Weil representation");
  chartable->add_option("--p", p, "Odd prime")->required();
  chartable->add_option("--N", N, "Half-dimension of V")->capture_default_str();
  chartable->add_option("--elements", elements_path, "File with one matrix per line (needed for N >= 2)");
  chartable->add_option("--format", format, "csv|json")->check(CLI::IsMember({"json", "csv"}));
  chartable->add_option("--seed", seed, "RNG seed")->capture_default_str();
  chartable->add_option("--out", out_path, "Output file (default stdout)");

  auto* kernel = app.add_subcommand("kernel", "Dump the invariant kernel K_g");
  kernel->add_option("--p", p, "Odd prime")->required();
  kernel->add_option("--N", N, "Half-dimension of V")->capture_default_str();
  kernel->add_option("--g", g_text, "Matrix, rows split by ';' and entries by ','")->required();
  kernel->add_option("--seed", seed, "RNG seed")->capture_default_str();
  kernel->add_flag("--complex", with_complex, "Add numerical complex values");
  kernel->add_option("--out", out_path, "Output file (default stdout)");

  auto* gauss = app.add_subcommand("gauss", "Quadratic Gauss sum of F_p");
  gauss->add_option("--p", p, "Odd prime")->required();
  gauss->add_flag("--complex", with_complex, "Add numerical complex values");

  CLI11_PARSE(app, argc, argv);

  try {
    weilrep::require_odd_prime(p);
    if (*verify) return cmd_verify(p, N, suite, seed, format, timing, out_path);
    if (*chartable) return cmd_chartable(p, N, elements_path, chartable->count("--format") ? format : "csv", seed,
                                         out_path);
    if (*kernel) return cmd_kernel(p, N, g_text, seed, with_complex, out_path);
    if (*gauss) return cmd_gauss(p, with_complex);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
