#include "weilrep/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

namespace weilrep {

namespace {

struct Outcome {
  bool ok = true;
  std::string expected;
  std::string actual;
};

Outcome holds(bool ok) { return {ok, ok ? "" : "true", ok ? "" : "false"}; }

Outcome same(const CycNum& expected, const CycNum& actual) {
  if (expected == actual) return {};
  return {false, expected.to_string(), actual.to_string()};
}

class Checker {
 public:
  Checker(SuiteReport& report, std::optional<std::size_t> cap) : report_(report), cap_(cap) {}

  bool full() const { return cap_ && report_.checks_run >= *cap_; }

  void check(const std::string& what, const std::string& inputs, const std::function<Outcome()>& body) {
    if (full()) return;
    char id[32];
    std::snprintf(id, sizeof id, "%08zu", report_.checks_run);
    ++report_.checks_run;
    Outcome outcome;
    try {
      outcome = body();
    } catch (const std::exception& e) {
      outcome = {false, "no exception", e.what()};
    }
    if (!outcome.ok)
      report_.failures.push_back({report_.suite + "/" + what + "/" + id, inputs, outcome.expected, outcome.actual});
  }

 private:
  SuiteReport& report_;
  std::optional<std::size_t> cap_;
};

bool exhaustive(const SuiteOptions& o) { return o.N == 1 && o.p <= 5; }

void require_vector_cap(const SympSpace& space) {
  if (space.num_vectors() > kMaxExhaustiveVectors)
    throw ResourceError("resource bound exceeded: p^(2N) = " + std::to_string(space.num_vectors()) +
                        " > " + std::to_string(kMaxExhaustiveVectors));
}

// Independent deterministic stream per suite.
Rng suite_rng(const SuiteOptions& o, const std::string& suite) {
  std::uint64_t h = o.seed;
  for (char c : suite) h = h * 1099511628211ULL + static_cast<unsigned char>(c);
  return Rng(h);
}

std::string pair_inputs(const SpMatrix& g, const SpMatrix& h) { return "g=" + g.to_string() + " h=" + h.to_string(); }

std::string heis_inputs(const HeisElement& h) {
  std::ostringstream out;
  out << "v=(";
  for (std::size_t i = 0; i < h.v.size(); ++i) out << (i ? "," : "") << h.v[i];
  out << ") z=" << h.z;
  return out.str();
}

std::vector<SpMatrix> group_elements(const SympSpace& space, Rng& rng, std::size_t samples) {
  if (space.N() == 1 && space.p() <= 5) return enumerate_sp(space);
  std::vector<SpMatrix> out;
  for (std::size_t i = 0; i < samples; ++i) out.push_back(random_sp(space, rng));
  return out;
}

SpMatrix random_in_U(const SympSpace& space, Rng& rng) {
  for (;;) {
    SpMatrix g = random_sp(space, rng);
    if (in_U(g)) return g;
  }
}

// Pairs (g, h) with g, h, gh ∈ U.
std::vector<std::pair<SpMatrix, SpMatrix>> pairs_in_W(const SympSpace& space, Rng& rng, bool all,
                                                      std::size_t samples) {
  std::vector<std::pair<SpMatrix, SpMatrix>> out;
  if (all) {
    std::vector<SpMatrix> U;
    for (auto& g : enumerate_sp(space))
      if (in_U(g)) U.push_back(g);
    for (const auto& g : U)
      for (const auto& h : U)
        if (in_U(g * h)) out.emplace_back(g, h);
    return out;
  }
  while (out.size() < samples) {
    SpMatrix g = random_in_U(space, rng);
    SpMatrix h = random_in_U(space, rng);
    if (in_U(g * h)) out.emplace_back(std::move(g), std::move(h));
  }
  return out;
}

CycNum random_cycnum(int p, Rng& rng) {
  std::vector<mpq_class> coeffs(p - 1);
  for (auto& c : coeffs) {
    if (uniform_below(rng, 3) == 0) continue;
    const long num = static_cast<long>(uniform_below(rng, 9)) - 4;
    const long den = static_cast<long>(uniform_below(rng, 3)) + 1;
    c = mpq_class(num, den);
  }
  return CycNum::from_coeffs(p, std::move(coeffs));
}

// --- suites ------------------------------------------------------------------

void cayley_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  Rng rng = suite_rng(o, "cayley");
  const Matrix I = Matrix::identity(o.p, space.dim());

  std::vector<SpMatrix> singles;
  if (exhaustive(o)) {
    for (auto& g : enumerate_sp(space))
      if (in_U(g)) singles.push_back(g);
  } else {
    for (int i = 0; i < 500; ++i) singles.push_back(random_in_U(space, rng));
  }
  for (const auto& g : singles) {
    check.check("kappa-properties", "g=" + g.to_string(), [&] {
      const Matrix k = cayley(g.matrix());
      const Matrix gm_inv = (g.matrix() - I).inverse();
      bool ok = is_in_sp_lie(k);
      ok = ok && in_U(k) && cayley(k) == g.matrix();
      ok = ok && cayley(g.inverse().matrix()) == -k;
      ok = ok && k + I == (g.matrix() * gm_inv).scaled(2);
      ok = ok && (g.matrix() + I) * gm_inv == gm_inv * (g.matrix() + I);
      return holds(ok);
    });
  }

  for (const auto& [g, h] : pairs_in_W(space, rng, exhaustive(o), 500)) {
    check.check("cayley-identities", pair_inputs(g, h), [&] {
      const Matrix kg = cayley(g.matrix());
      const Matrix kh = cayley(h.matrix());
      const Matrix kgh = cayley((g * h).matrix());
      const Matrix s = kg + kh;
      if (!s.invertible()) return Outcome{false, "kappa(g)+kappa(h) invertible", "singular"};
      const Matrix si = s.inverse();
      const bool first = kgh == (I + kg) * si * (I - kg) + kg;
      const bool second = kgh == (I + kg) * si * (I + kh) - I;
      // With the outer factors exchanged the same expression gives κ(hg).
      const bool mirrored = cayley((h * g).matrix()) == (I + kh) * si * (I + kg) - I;
      return holds(first && second && mirrored);
    });
  }
}

void heisenberg_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  require_vector_cap(space);
  Rng rng = suite_rng(o, "heisenberg");
  const StoneVonNeumannReport svn = verify_stone_von_neumann(space, rng, 2000);
  const std::string params = "pairs=" + std::to_string(svn.pairs_checked);
  check.check("pi-homomorphism", params, [&] { return holds(svn.homomorphism); });
  check.check("central-character", "", [&] { return holds(svn.central_character); });
  check.check("irreducibility", "", [&] {
    return same(CycNum(o.p, static_cast<long>(space.num_vectors() * o.p)), svn.character_norm_sum);
  });

  const std::size_t order = space.num_vectors() * static_cast<std::size_t>(o.p);
  const Operator id = Operator::identity(o.p, space.rep_dim());
  for (std::size_t i = 0; i < order && !check.full(); ++i) {
    const HeisElement h = heis_element_at(space, i);
    check.check("pi-unitary-trace", heis_inputs(h), [&] {
      const Operator m = schrodinger_pi(space, h);
      const bool zero_v = std::all_of(h.v.begin(), h.v.end(), [](int x) { return x == 0; });
      const CycNum expected_trace =
          zero_v ? psi(h.z, o.p) * mpq_class(static_cast<long>(space.rep_dim())) : CycNum(o.p);
      if (m * m.conj_transpose() != id) return Outcome{false, "unitary", "not unitary"};
      return same(expected_trace, m.trace());
    });
  }
}

void weyl_algebra_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  require_vector_cap(space);
  Rng rng = suite_rng(o, "weyl-algebra");
  const std::size_t n = space.rep_dim();
  auto random_operator = [&] {
    Operator A(o.p, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) A(r, c) = random_cycnum(o.p, rng);
    return A;
  };
  for (int i = 0; i < 50 && !check.full(); ++i) {
    const Operator A = random_operator();
    const Operator B = random_operator();
    Kernel f(space);
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = random_cycnum(o.p, rng);
    const std::string inputs = "pair=" + std::to_string(i);
    check.check("operator-round-trip", inputs, [&] { return holds(weyl_inverse(weyl_transform(space, A)) == A); });
    check.check("kernel-round-trip", inputs, [&] { return holds(weyl_transform(space, weyl_inverse(f)) == f); });
    check.check("algebra-isomorphism", inputs, [&] {
      return holds(weyl_transform(space, A * B) ==
                   v_convolve(weyl_transform(space, A), weyl_transform(space, B)));
    });
  }
}

void multiplicativity_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  require_vector_cap(space);
  Rng rng = suite_rng(o, "multiplicativity");
  WeilKernelTable table(space, o.seed);
  auto run = [&](const SpMatrix& g, const SpMatrix& h) {
    check.check("kernel-multiplicative", pair_inputs(g, h), [&] {
      return holds(table.kernel(g * h) == v_convolve(table.kernel(g), table.kernel(h)));
    });
  };
  if (exhaustive(o)) {
    const auto G = enumerate_sp(space);
    for (const auto& g : G)
      for (const auto& h : G) run(g, h);
  } else {
    for (int i = 0; i < 1000 && !check.full(); ++i) {
      const SpMatrix g = random_sp(space, rng);
      const SpMatrix h = random_sp(space, rng);
      run(g, h);
    }
  }
}

void egorov_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  require_vector_cap(space);
  Rng rng = suite_rng(o, "egorov");
  WeilKernelTable table(space, o.seed);
  const std::size_t order = space.num_vectors() * static_cast<std::size_t>(o.p);
  if (exhaustive(o)) {
    for (const auto& g : enumerate_sp(space))
      for (std::size_t i = 0; i < order; ++i) {
        const HeisElement h = heis_element_at(space, i);
        check.check("egorov", "g=" + g.to_string() + " " + heis_inputs(h),
                    [&] { return holds(egorov_check(table, g, h)); });
      }
  } else {
    for (int i = 0; i < 1000 && !check.full(); ++i) {
      const SpMatrix g = random_sp(space, rng);
      const HeisElement h = heis_element_at(space, uniform_below(rng, order));
      check.check("egorov", "g=" + g.to_string() + " " + heis_inputs(h),
                  [&] { return holds(egorov_check(table, g, h)); });
    }
  }
}

void characters_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  require_vector_cap(space);
  Rng rng = suite_rng(o, "characters");
  WeilKernelTable table(space, o.seed);
  const mpq_class q_n(static_cast<long>(space.rep_dim()));

  check.check("trace-identity", "", [&] {
    return same(CycNum(o.p, q_n), rho(table, SpMatrix::identity(space)).trace());
  });

  std::vector<SpMatrix> U;
  if (exhaustive(o)) {
    for (auto& g : enumerate_sp(space))
      if (in_U(g)) U.push_back(g);
  } else {
    for (int i = 0; i < 200; ++i) U.push_back(random_in_U(space, rng));
  }
  for (const auto& g : U) {
    check.check("ch-rho", "g=" + g.to_string(), [&] {
      const CycNum formula = character_rho(g);
      const Outcome trace = same(formula, rho(table, g).trace());
      if (!trace.ok) return trace;
      return same(formula, table.kernel(g)[0] * q_n);
    });
  }

  const std::size_t order = space.num_vectors() * static_cast<std::size_t>(o.p);
  for (int i = 0; i < 200 && !check.full(); ++i) {
    const SpMatrix g = random_in_U(space, rng);
    const HeisElement h = heis_element_at(space, uniform_below(rng, order));
    check.check("ch-tau", "g=" + g.to_string() + " " + heis_inputs(h), [&] {
      return same(character_tau(g, h), (rho(table, g) * schrodinger_pi(space, h)).trace());
    });
  }

  for (const auto& g : group_elements(space, rng, 100)) {
    check.check("rho-unitary", "g=" + g.to_string(), [&] {
      const Operator r = rho(table, g);
      return holds(r * r.conj_transpose() == Operator::identity(o.p, space.rep_dim()));
    });
  }
}

void gauss_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  require_vector_cap(space);
  Rng rng = suite_rng(o, "gauss");
  const int p = o.p;
  const CycNum e = gauss_sum(p);
  const int sigma_m1 = legendre_mod(-1, p);

  check.check("gauss-square", "p=" + std::to_string(p), [&] { return same(CycNum(p, sigma_m1 * p), e * e); });
  check.check("gauss-norm", "p=" + std::to_string(p), [&] { return same(CycNum(p, p), conj(e) * e); });
  check.check("psi-orthogonality", "p=" + std::to_string(p), [&] {
    CycNum s(p);
    for (int z = 0; z < p; ++z) s += psi(z, p);
    return same(CycNum(p), s);
  });
  for (int a = 1; a < p; ++a) {
    check.check("gauss-twist", "a=" + std::to_string(a), [&] {
      CycNum s(p);
      for (std::int64_t z = 0; z < p; ++z) s += psi(a * z * z, p);
      return same(e * mpq_class(legendre_mod(a, p)), s);
    });
  }

  const CycNum e2n = e.pow(2 * o.N);
  auto run = [&](const Matrix& a) {
    check.check("symplectic-gauss", "a=" + a.to_string(), [&] {
      return same(e2n * mpq_class(legendre_mod(a.det(), p)), symplectic_gauss_sum(SpLieElement(a)));
    });
  };
  if (exhaustive(o)) {
    // sp(2) = sl(2): [[x, y], [z, −x]].
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y)
        for (int z = 0; z < p; ++z) {
          const Matrix a = Matrix::from_rows(p, {{x, y}, {z, -x}});
          if (a.invertible()) run(a);
        }
  } else {
    // a = −J·S for a random symmetric S.
    const Matrix J = symplectic_form(p, o.N);
    const int n = space.dim();
    for (int count = 0; count < 200 && !check.full();) {
      Matrix S(p, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const auto v = static_cast<std::int64_t>(uniform_below(rng, p));
          S.set(i, j, v);
          S.set(j, i, v);
        }
      const Matrix a = -(J * S);
      if (!a.invertible()) continue;
      run(a);
      ++count;
    }
  }
}

void cocycle_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  require_vector_cap(space);
  Rng rng = suite_rng(o, "cocycle");
  for (const auto& [g, h] : pairs_in_W(space, rng, exhaustive(o), 500)) {
    if (check.full()) break;
    const std::string inputs = pair_inputs(g, h);
    check.check("nu-cocycle", inputs, [&] { return holds(nu_cocycle_check(g, h)); });
    check.check("completion-of-squares", inputs, [&] { return holds(completion_of_squares_check(g, h)); });
    check.check("ansatz-multiplicative", inputs, [&] {
      return holds(ansatz_kernel(g * h) == v_convolve(ansatz_kernel(g), ansatz_kernel(h)));
    });
  }
}

void deligne_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace space(o.p, o.N);
  require_vector_cap(space);
  Rng rng = suite_rng(o, "deligne");
  WeilKernelTable table(space, o.seed);
  const auto G = group_elements(space, rng, 100);
  std::map<SpMatrix, SchrodingerKernel> direct;
  for (const auto& g : G) {
    const SchrodingerKernel d = deligne_kernel_direct(table, g);
    direct.emplace(g, d);
    check.check("routes-agree", "g=" + g.to_string(),
                [&] { return holds(deligne_kernel_fourier(table, g).values == d.values); });
    check.check("matches-rho", "g=" + g.to_string(), [&] { return holds(d.values == rho(table, g)); });
  }
  auto compose = [&](const SpMatrix& g, const SpMatrix& h) {
    check.check("composition", pair_inputs(g, h), [&] {
      const auto& dg = direct.at(g);
      const auto& dh = direct.at(h);
      return holds(kernel_compose(dg, dh).values == deligne_kernel_direct(table, g * h).values);
    });
  };
  if (exhaustive(o)) {
    for (const auto& g : G)
      for (const auto& h : G) compose(g, h);
  } else {
    for (int i = 0; i < 100 && !check.full(); ++i)
      compose(G[uniform_below(rng, G.size())], G[uniform_below(rng, G.size())]);
  }
}

void product_suite(const SuiteOptions& o, Checker& check) {
  const SympSpace factor(o.p, o.N);
  const SympSpace whole(o.p, 2 * o.N);
  if (whole.num_vectors() > kMaxExhaustiveVectors)
    throw ResourceError("resource bound exceeded: p^(4N) = " + std::to_string(whole.num_vectors()) + " > " +
                        std::to_string(kMaxExhaustiveVectors));
  Rng rng = suite_rng(o, "product");
  WeilKernelTable t1(factor, o.seed), t2(factor, o.seed), t(whole, o.seed);
  auto run = [&](const SpMatrix& g1, const SpMatrix& g2) {
    check.check("product-property", "g1=" + g1.to_string() + " g2=" + g2.to_string(),
                [&] { return holds(product_check(t1, t2, t, g1, g2)); });
  };
  if (o.N == 1 && o.p == 3) {
    const auto G = enumerate_sp(factor);
    for (const auto& g1 : G)
      for (const auto& g2 : G) run(g1, g2);
  } else {
    for (int i = 0; i < 20 && !check.full(); ++i) {
      const SpMatrix g1 = random_sp(factor, rng);
      const SpMatrix g2 = random_sp(factor, rng);
      run(g1, g2);
    }
  }
}

using SuiteFn = void (*)(const SuiteOptions&, Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"cayley", cayley_suite},       {"heisenberg", heisenberg_suite},
      {"weyl-algebra", weyl_algebra_suite}, {"multiplicativity", multiplicativity_suite},
      {"egorov", egorov_suite},       {"characters", characters_suite},
      {"gauss", gauss_suite},         {"cocycle", cocycle_suite},
      {"deligne", deligne_suite},     {"product", product_suite},
  };
  return suites;
}

SuiteReport run_one(const std::string& name, SuiteFn fn, const SuiteOptions& o) {
  SuiteReport report;
  report.suite = name;
  report.p = o.p;
  report.N = o.N;
  report.seed = o.seed;
  const auto start = std::chrono::steady_clock::now();
  Checker checker(report, o.max_checks);
  fn(o, checker);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) { return a.check < b.check; });
  return report;
}

Json report_json(const SuiteReport& r, bool include_timing) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json j;
    j["check"] = f.check;
    j["inputs"] = f.inputs;
    j["expected"] = f.expected;
    j["actual"] = f.actual;
    failures.push_back(std::move(j));
  }
  Json j;
  j["suite"] = r.suite;
  j["parameters"] = {{"p", r.p}, {"N", r.N}, {"seed", r.seed}};
  j["checks_run"] = r.checks_run;
  j["failures"] = std::move(failures);
  if (include_timing) j["wall_time"] = r.wall_time;
  return j;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options) {
  require_odd_prime(options.p);
  if (options.N < 1) throw std::invalid_argument("N must be positive");
  std::vector<SuiteReport> reports;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) reports.push_back(run_one(suite, fn, options));
  }
  if (reports.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return reports;
}

Json reports_to_json(const std::string& name, const SuiteOptions& options,
                     const std::vector<SuiteReport>& reports, bool include_timing) {
  if (name != "all" && reports.size() == 1) return report_json(reports.front(), include_timing);
  Json suites = Json::array();
  Json failures = Json::array();
  std::size_t checks = 0;
  double wall = 0;
  for (const auto& r : reports) {
    Json j = report_json(r, include_timing);
    for (const auto& f : j["failures"]) failures.push_back(f);
    checks += r.checks_run;
    wall += r.wall_time;
    suites.push_back(std::move(j));
  }
  Json out;
  out["suite"] = name;
  out["parameters"] = {{"p", options.p}, {"N", options.N}, {"seed", options.seed}};
  out["checks_run"] = checks;
  out["failures"] = std::move(failures);
  if (include_timing) out["wall_time"] = wall;
  out["suites"] = std::move(suites);
  return out;
}

std::string reports_to_csv(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  out << "suite,p,N,seed,checks_run,failures\n";
  for (const auto& r : reports)
    out << r.suite << ',' << r.p << ',' << r.N << ',' << r.seed << ',' << r.checks_run << ','
        << r.failures.size() << '\n';
  return out.str();
}

std::optional<std::size_t> max_checks_from_env() {
  const char* raw = std::getenv("WEILREP_MAX_CHECKS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') throw std::invalid_argument("WEILREP_MAX_CHECKS must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace weilrep
