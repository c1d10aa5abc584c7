#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "weilrep/cyclotomic.hpp"

using namespace weilrep;

namespace {

CycNum coeffs(int p, std::vector<long> c) {
  std::vector<mpq_class> q(c.begin(), c.end());
  return CycNum::from_coeffs(p, q);
}

CycNum random_cyc(int p, std::mt19937_64& rng) {
  std::vector<mpq_class> q(p - 1);
  for (auto& c : q) c = mpq_class(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
  return CycNum::from_coeffs(p, q);
}

// Oracle: evaluate with ζ = exp(2πi/p) in double precision.
std::complex<double> numeric(const CycNum& x) {
  std::complex<double> s = 0;
  const double two_pi = 2 * std::acos(-1.0);
  for (int i = 0; i < x.p() - 1; ++i)
    s += x.coeffs()[i].get_d() * std::polar(1.0, two_pi * i / x.p());
  return s;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("psi examples") {
  CHECK(psi(0, 3) == CycNum(3, 1));
  CHECK(psi(2, 3) == coeffs(3, {-1, -1}));
  CHECK(psi(1, 5) == coeffs(5, {0, 1, 0, 0}));
  CHECK(psi(Fp(4, 5)) == coeffs(5, {-1, -1, -1, -1}));
}

TEST_CASE("conj examples") {
  CHECK(conj(CycNum(3, 1)) == CycNum(3, 1));
  CHECK(conj(psi(1, 3)) == coeffs(3, {-1, -1}));
  CHECK(conj(coeffs(3, {1, 2})) == coeffs(3, {-1, -2}));
}

TEST_CASE("gauss sum examples") {
  // Direct summation: ψ(0) + ψ(1) + ψ(1) = 1 + 2ζ.
  CHECK(gauss_sum(3) == coeffs(3, {1, 2}));
  CHECK(gauss_sum(3) * gauss_sum(3) == CycNum(3, -3));
  CHECK(gauss_sum(5) * gauss_sum(5) == CycNum(5, 5));
  for (int p : {3, 5, 7, 11, 13}) {
    CAPTURE(p);
    CycNum direct(p);
    for (long z = 0; z < p; ++z) direct += psi(z * z, p);
    CHECK(gauss_sum(p) == direct);
    CHECK(gauss_sum(p) * gauss_sum(p) == CycNum(p, legendre_mod(-1, p) * p));
    CHECK(conj(gauss_sum(p)) * gauss_sum(p) == CycNum(p, p));
  }
}

TEST_CASE("embed_complex examples") {
  CHECK(near(embed_complex(CycNum(3, 1)), {1.0, 0.0}));
  CHECK(near(embed_complex(gauss_sum(3)), {0.0, std::sqrt(3.0)}));
  CHECK(near(embed_complex(psi(1, 3) + psi(2, 3)), {-1.0, 0.0}));
  for (int p : {3, 5, 7, 11}) CHECK(std::abs(std::abs(embed_complex(gauss_sum(p))) - std::sqrt(p)) < 1e-12);
}

TEST_CASE("character identities") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    CycNum total(p);
    for (int z = 0; z < p; ++z) {
      total += psi(z, p);
      CHECK(conj(psi(z, p)) == psi(-z, p));
      for (int w = 0; w < p; ++w) CHECK(psi(z + w, p) == psi(z, p) * psi(w, p));
    }
    CHECK(total.is_zero());
    CHECK(psi(1, p) != CycNum(p, 1));
    for (long a = 1; a < p; ++a) {
      CycNum twisted(p);
      for (long z = 0; z < p; ++z) twisted += psi(a * z * z, p);
      CHECK(twisted == gauss_sum(p) * mpq_class(legendre_mod(a, p)));
    }
  }
}

TEST_CASE("ring operations agree with the numerical embedding") {
  std::mt19937_64 rng(7);
  for (int p : {3, 5, 7}) {
    for (int trial = 0; trial < 50; ++trial) {
      const CycNum x = random_cyc(p, rng), y = random_cyc(p, rng), z = random_cyc(p, rng);
      CHECK(near(numeric(x * y), numeric(x) * numeric(y)));
      CHECK(near(numeric(x + y), numeric(x) + numeric(y)));
      CHECK(near(numeric(conj(x)), std::conj(numeric(x))));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(conj(conj(x)) == x);
      CHECK(conj(x * y) == conj(x) * conj(y));
      CHECK(x - x == CycNum(p));
    }
  }
}

TEST_CASE("lifted sums reproduce ordinary arithmetic") {
  std::mt19937_64 rng(11);
  for (int p : {3, 5, 7}) {
    std::vector<CycNum> a, b;
    for (int i = 0; i < 12; ++i) {
      a.push_back(random_cyc(p, rng));
      b.push_back(i % 3 == 0 ? psi(static_cast<long>(rng() % p), p) * mpq_class(1, 9) : random_cyc(p, rng));
    }
    const LiftedArray la(p, a), lb(p, b);
    CycAccumulator acc(p);
    CycNum expected(p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int shift = static_cast<int>(i % p);
      acc.add_product(la[i], lb[i], shift);
      expected += a[i] * b[i] * psi(shift, p);
    }
    CHECK(acc.take(la.den() * lb.den()) == expected);
    // Monomials lift to a single term.
    const CycNum m = psi(p - 1, p) * mpq_class(-2, 3);
    const CycNum ms[] = {m};
    const LiftedArray lm(p, ms);
    CHECK(lm[0].terms.size() == 1);
  }
}

TEST_CASE("canonical form") {
  CHECK(CycNum(5, mpq_class(2, 4)).coeffs()[0] == mpq_class(1, 2));
  CHECK(coeffs(5, {1, 1, 1, 1}) + psi(4, 5) == CycNum(5));
  CHECK(psi(1, 7).pow(7) == CycNum(7, 1));
  CHECK(coeffs(3, {1, 2}).to_string() == "1 + 2*z");
  CHECK(CycNum(3).to_string() == "0");
  CHECK_THROWS_AS(CycNum(3) + CycNum(5), std::invalid_argument);
  CHECK_THROWS_AS(CycNum::from_coeffs(5, {1, 2}), std::invalid_argument);
}
