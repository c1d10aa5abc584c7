// Acceptance criteria 1-12. Prints one PASS/FAIL line per criterion.
// Every comparison is exact equality in Q(ζ_p); the tolerance is zero throughout.
//
// Usage: weilrep_acceptance <path-to-weilrep-cli> <scratch-dir>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "weilrep/deligne.hpp"
#include "weilrep/suites.hpp"

using namespace weilrep;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

class Collector {
 public:
  void add(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += what + (ok ? "" : " [FAILED]");
  }
  Result result() const { return {ok_, detail_}; }

 private:
  bool ok_ = true;
  std::string detail_;
};

SuiteReport suite(const std::string& name, int p, int N) {
  SuiteOptions o;
  o.p = p;
  o.N = N;
  o.seed = 42;
  return run_suites(name, o).front();
}

// Suite ran exactly `expected` checks and none failed.
void suite_exact(Collector& c, const std::string& name, int p, int N, std::size_t expected) {
  const SuiteReport r = suite(name, p, N);
  std::ostringstream what;
  what << name << "(" << p << "," << N << ") " << r.checks_run << " checks, " << r.failures.size() << " failures";
  if (!r.failures.empty()) what << ", first " << r.failures.front().check;
  c.add(r.ok() && r.checks_run == expected, what.str());
}

std::vector<SpMatrix> U_of(const std::vector<SpMatrix>& G) {
  std::vector<SpMatrix> out;
  for (const auto& g : G)
    if (in_U(g)) out.push_back(g);
  return out;
}

std::size_t W_size(const SympSpace& s) {
  const auto U = U_of(enumerate_sp(s));
  std::size_t n = 0;
  for (const auto& g : U)
    for (const auto& h : U) n += in_U(g * h);
  return n;
}

std::size_t invertible_sl2(int p) {
  std::size_t n = 0;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < p; ++z) n += mod_p(-x * x - y * z, p) != 0;
  return n;
}

SpMatrix minus_identity(int p, int N) { return SpMatrix(Matrix::identity(p, 2 * N).scaled(-1)); }

Result multiplicativity() {
  Collector c;
  suite_exact(c, "multiplicativity", 3, 1, 24 * 24);
  suite_exact(c, "multiplicativity", 5, 1, 120 * 120);
  suite_exact(c, "multiplicativity", 3, 2, 1000);
  return c.result();
}

Result egorov() {
  Collector c;
  suite_exact(c, "egorov", 3, 1, 24 * 27);
  suite_exact(c, "egorov", 5, 1, 120 * 125);
  return c.result();
}

Result characters() {
  Collector c;
  for (int p : {3, 5, 7}) {
    const SympSpace s(p, 1);
    WeilKernelTable table(s);
    const auto G = enumerate_sp(s);
    const auto U = U_of(G);
    std::size_t bad = 0;
    for (const auto& g : U) {
      const CycNum ch = character_rho(g);
      bad += !(ch == rho(table, g).trace()) || !(ch == table.kernel(g)[0] * mpq_class(p));
    }
    c.add(bad == 0, "ch_rho p=" + std::to_string(p) + " on all " + std::to_string(U.size()) + " of U");

    Rng rng(42 + p);
    std::size_t tau_bad = 0;
    for (int i = 0; i < 200; ++i) {
      const SpMatrix& g = U[uniform_below(rng, U.size())];
      const HeisElement h = heis_element_at(s, uniform_below(rng, s.num_vectors() * p));
      tau_bad += !(character_tau(g, h) == (rho(table, g) * schrodinger_pi(s, h)).trace());
    }
    c.add(tau_bad == 0, "ch_tau p=" + std::to_string(p) + " 200 samples");
    c.add(rho(table, SpMatrix::identity(s)).trace() == CycNum(p, p), "Tr rho(I)=q p=" + std::to_string(p));
  }
  const SpMatrix w(Matrix::from_rows(3, {{0, 1}, {2, 0}}));
  c.add(character_rho(minus_identity(3, 1)) == CycNum(3, -1), "ch_rho(-I)=-1");
  c.add(character_rho(w) == CycNum(3, 1), "ch_rho(w)=+1");
  WeilKernelTable t32(SympSpace(3, 2));
  c.add(rho(t32, SpMatrix::identity(SympSpace(3, 2))).trace() == CycNum(3, 9), "Tr rho(I)=q^2 at N=2");
  return c.result();
}

Result gauss() {
  Collector c;
  for (int p : {3, 5, 7, 11}) {
    CycNum direct(p);
    for (std::int64_t z = 0; z < p; ++z) direct += psi(z * z, p);
    const long expected = (p % 4 == 1 ? 1 : -1) * p;
    c.add(direct * direct == CycNum(p, expected), "e^2 p=" + std::to_string(p));
  }
  // gauss suite: 4 + (p − 1) scalar checks plus one per symplectic element.
  suite_exact(c, "gauss", 3, 1, 3 + 2 + invertible_sl2(3));
  suite_exact(c, "gauss", 3, 2, 3 + 2 + 200);
  return c.result();
}

Result cocycle() {
  Collector c;
  suite_exact(c, "cocycle", 3, 1, 3 * W_size(SympSpace(3, 1)));
  suite_exact(c, "cocycle", 5, 1, 3 * W_size(SympSpace(5, 1)));
  suite_exact(c, "cocycle", 3, 2, 3 * 500);
  return c.result();
}

Result cayley_identities() {
  Collector c;
  for (int p : {3, 5}) {
    const SympSpace s(p, 1);
    suite_exact(c, "cayley", p, 1, U_of(enumerate_sp(s)).size() + W_size(s));
  }
  suite_exact(c, "cayley", 3, 2, 500 + 500);
  return c.result();
}

Result stone_von_neumann() {
  Collector c;
  const std::tuple<int, int, std::size_t> cases[] = {{3, 1, 27 * 27}, {5, 1, 125 * 125}, {3, 2, 2000}};
  for (auto [p, N, pairs] : cases) {
    const SympSpace s(p, N);
    Rng rng(42);
    const auto r = verify_stone_von_neumann(s, rng, 2000);
    const long order = static_cast<long>(s.num_vectors()) * p;
    std::ostringstream what;
    what << "(" << p << "," << N << ") " << r.pairs_checked << " pairs, sum |Tr|^2/|H| = "
         << (r.character_norm_sum * mpq_class(1, order)).to_string();
    c.add(r.ok() && r.pairs_checked == pairs && r.character_norm_sum == CycNum(p, order), what.str());
  }
  return c.result();
}

Result weyl_algebra() {
  Collector c;
  for (auto [p, N] : {std::pair{3, 1}, {5, 1}, {3, 2}}) suite_exact(c, "weyl-algebra", p, N, 50 * 3);
  return c.result();
}

Result deligne() {
  Collector c;
  suite_exact(c, "deligne", 3, 1, 24 * 2 + 24 * 24);
  suite_exact(c, "deligne", 5, 1, 120 * 2 + 120 * 120);
  return c.result();
}

Result product() {
  Collector c;
  const SympSpace s1(3, 1), s(3, 2);
  WeilKernelTable t1(s1), t2(s1), t(s);
  const auto G = enumerate_sp(s1);
  std::size_t pairs = 0, bad = 0;
  for (const auto& g1 : G)
    for (const auto& g2 : G) {
      ++pairs;
      bad += !product_check(t1, t2, t, g1, g2);
    }
  c.add(bad == 0 && pairs == 576,
        std::to_string(pairs) + " pairs, " + std::to_string(pairs * s.num_vectors()) + " scalar comparisons");
  c.add(t.kernel(minus_identity(3, 2))[0] == CycNum(3, mpq_class(1, 9)), "K(-I) = 1/9 on V1 x V2");
  return c.result();
}

Result unitarity_linearity() {
  Collector c;
  for (int p : {3, 5}) {
    const SympSpace s(p, 1);
    WeilKernelTable table(s);
    const auto G = enumerate_sp(s);
    std::map<SpMatrix, Operator> R;
    for (const auto& g : G) R.emplace(g, rho(table, g));
    const Operator id = Operator::identity(p, s.rep_dim());
    std::size_t unitary_bad = 0, hom_bad = 0;
    for (const auto& g : G) {
      unitary_bad += !(R.at(g) * R.at(g).conj_transpose() == id);
      for (const auto& h : G) hom_bad += !(R.at(g) * R.at(h) == R.at(g * h));
    }
    c.add(unitary_bad == 0, "unitary p=" + std::to_string(p) + " " + std::to_string(G.size()));
    c.add(hom_bad == 0, "rho(g)rho(h)=rho(gh) p=" + std::to_string(p) + " " + std::to_string(G.size() * G.size()));
  }
  return c.result();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Result determinism(const std::string& cli, const std::filesystem::path& scratch) {
  Collector c;
  std::filesystem::create_directories(scratch);
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const auto out = scratch / ("verify_all_" + std::to_string(run) + ".json");
    const std::string cmd = "\"" + cli + "\" verify --suite all --p 3 --N 1 --seed 42 --out \"" + out.string() + "\"";
    const int status = std::system(cmd.c_str());
    c.add(status == 0, "run " + std::to_string(run + 1) + " exit " + std::to_string(status));
    outputs.push_back(slurp(out));
  }
  c.add(!outputs[0].empty() && outputs[0] == outputs[1],
        "byte-identical reports (" + std::to_string(outputs[0].size()) + " bytes)");
  return c.result();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <weilrep-cli> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path scratch = argv[2];

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"multiplicativity K_gh = K_g * K_h", multiplicativity},
      {"Egorov identity", egorov},
      {"character formulas", characters},
      {"Gauss sums", gauss},
      {"nu cocycle on W", cocycle},
      {"Cayley identities", cayley_identities},
      {"Stone-von Neumann", stone_von_neumann},
      {"Weyl transform algebra isomorphism", weyl_algebra},
      {"Schrodinger realization", deligne},
      {"product property", product},
      {"unitarity and exact linearity", unitarity_linearity},
      {"determinism of verify --suite all", [&] { return determinism(cli, scratch); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !r.ok;
    std::printf("%s  %2zu  %-36s tol=exact  %6.2fs  %s\n", r.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
