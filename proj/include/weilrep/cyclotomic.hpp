#pragma once

// Exact arithmetic in Q(ζ_p).
//
// A CycNum stores c_0 + c_1 ζ + ... + c_{p-2} ζ^{p-2} with rational c_i.
// ζ^{p-1} is always rewritten as −(1 + ζ + ... + ζ^{p-2}), so two values are
// equal iff their coefficient arrays are equal.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weilrep/field.hpp"

namespace weilrep {

class CycNum {
 public:
  explicit CycNum(int p);  // zero
  CycNum(int p, const mpq_class& rational);
  CycNum(int p, long rational) : CycNum(p, mpq_class(rational)) {}

  /// Takes p − 1 coefficients in the basis 1, ζ, ..., ζ^{p-2}.
  static CycNum from_coeffs(int p, std::vector<mpq_class> coeffs);
  /// ζ^k for any integer k.
  static CycNum zeta_power(int p, std::int64_t k);

  int p() const { return p_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True iff the value lies in Q; then coeffs()[0] is that rational.
  bool is_rational() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const mpq_class& r);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const mpq_class& r) { return a *= r; }
  friend CycNum operator*(const mpq_class& r, CycNum a) { return a *= r; }
  CycNum operator-() const;

  CycNum pow(unsigned e) const;

  bool operator==(const CycNum& o) const;

  /// Human-readable form such as "1/3 + 2*z - z^2".
  std::string to_string() const;

 private:
  void check_same_field(const CycNum& o) const;

  int p_;
  std::vector<mpq_class> coeffs_;
};

/// ψ(z) = ζ^z.
CycNum psi(Fp z);
CycNum psi(std::int64_t z, int p);

/// Complex conjugation, the automorphism ζ ↦ ζ^{-1}.
CycNum conj(const CycNum& x);

/// 𝔢 = Σ_{z ∈ F_p} ψ(z²).
CycNum gauss_sum(int p);

/// Numerical value with ζ = exp(2πi/p). Display only.
std::complex<double> embed_complex(const CycNum& x);

// --- Bulk arithmetic -------------------------------------------------------
//
// LiftedArray rewrites a batch of values over one common denominator as sparse
// integer vectors in Z[x]/(x^p − 1); CycAccumulator sums products of those and
// maps back to Q(ζ_p) once.

/// Integer numerator over Z[x]/(x^p − 1); terms are (exponent, coefficient).
struct SparseCyc {
  std::vector<std::pair<int, mpz_class>> terms;
};

class LiftedArray {
 public:
  LiftedArray(int p, std::span<const CycNum> values);

  int p() const { return p_; }
  const mpz_class& den() const { return den_; }
  std::size_t size() const { return entries_.size(); }
  const SparseCyc& operator[](std::size_t i) const { return entries_[i]; }

 private:
  int p_;
  mpz_class den_;
  std::vector<SparseCyc> entries_;
};

class CycAccumulator {
 public:
  explicit CycAccumulator(int p);

  /// acc += x^shift · a
  void add(const SparseCyc& a, int shift = 0);
  /// acc += x^shift · a · b
  void add_product(const SparseCyc& a, const SparseCyc& b, int shift = 0);

  /// Returns acc / den as a canonical CycNum and resets to zero.
  CycNum take(const mpz_class& den);

 private:
  int p_;
  std::vector<mpz_class> acc_;
};

}  // namespace weilrep
