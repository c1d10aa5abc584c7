#pragma once

// The symplectic space (V, ω), the group Sp(V, ω), its Lie algebra, and the
// Cayley transform.
//
// Coordinates: e_1..e_N span L, e_{N+1}..e_{2N} span L′, and
// ω(u, v) = uᵀ J v with J = [[0, I_N], [−I_N, 0]].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilrep/field.hpp"

namespace weilrep {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n), portable across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Vector of residues mod p.
using Vec = std::vector<int>;

class SympSpace {
 public:
  SympSpace(int p, int N);

  const PrimeField& field() const { return field_; }
  int p() const { return field_.p(); }
  int N() const { return N_; }
  int dim() const { return 2 * N_; }

  /// |V| = p^{2N}.
  std::size_t num_vectors() const { return num_vectors_; }
  /// |L′| = p^N, the dimension of the Heisenberg representation.
  std::size_t rep_dim() const { return rep_dim_; }

  /// Lexicographic enumeration of V, first coordinate most significant.
  Vec vector_at(std::size_t index) const;
  std::size_t index_of(const Vec& v) const;

  int omega(const Vec& u, const Vec& v) const;

  Vec add(const Vec& u, const Vec& v) const;
  Vec sub(const Vec& u, const Vec& v) const;
  Vec neg(const Vec& u) const;

  bool operator==(const SympSpace& o) const { return field_ == o.field_ && N_ == o.N_; }

 private:
  void check_dim(const Vec& v) const;

  PrimeField field_;
  int N_;
  std::size_t num_vectors_;
  std::size_t rep_dim_;
};

/// Square matrix over F_p; used for End(V) intermediates.
class Matrix {
 public:
  Matrix(int p, int n);

  static Matrix identity(int p, int n);
  static Matrix from_rows(int p, const std::vector<std::vector<std::int64_t>>& rows);
  /// Parses "a,b;c,d": rows split by ';', entries by ','. Entries must lie in [0, p).
  static Matrix parse(std::string_view text, int p);

  int p() const { return p_; }
  int n() const { return n_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, std::int64_t value);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(std::int64_t c) const;

  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  int det() const;
  bool invertible() const { return det() != 0; }
  /// Throws DomainError when singular.
  Matrix inverse() const;

  /// Inverse of parse().
  std::string to_string() const;

  auto operator<=>(const Matrix&) const = default;

 private:
  void check_compatible(const Matrix& o) const;

  int p_;
  int n_;
  std::vector<int> entries_;
};

/// J = [[0, I_N], [−I_N, 0]].
Matrix symplectic_form(int p, int N);

bool is_symplectic(const Matrix& g);
/// a ∈ sp(V) iff J·a is symmetric.
bool is_in_sp_lie(const Matrix& a);

/// Element of G = Sp(V, ω); validated on construction.
class SpMatrix {
 public:
  /// Throws std::invalid_argument unless gᵀJg = J.
  explicit SpMatrix(Matrix g);
  static SpMatrix identity(const SympSpace& space);

  const Matrix& matrix() const { return g_; }
  operator const Matrix&() const { return g_; }  // NOLINT(google-explicit-constructor)
  int p() const { return g_.p(); }
  int n() const { return g_.n(); }

  SpMatrix operator*(const SpMatrix& o) const;
  SpMatrix inverse() const;
  std::string to_string() const { return g_.to_string(); }

  auto operator<=>(const SpMatrix&) const = default;

 private:
  struct Trusted {};
  SpMatrix(Matrix g, Trusted) : g_(std::move(g)) {}

  Matrix g_;
};

/// Element of sp(V); validated on construction.
class SpLieElement {
 public:
  explicit SpLieElement(Matrix a);
  const Matrix& matrix() const { return a_; }
  operator const Matrix&() const { return a_; }  // NOLINT(google-explicit-constructor)

  bool operator==(const SpLieElement&) const = default;

 private:
  Matrix a_;
};

/// g ∈ O, i.e. det(g − I) ≠ 0.
bool in_U(const Matrix& g);

/// κ(g) = (g + I)(g − I)^{-1}. Throws DomainError when g − I is singular.
Matrix cayley(const Matrix& g);
SpLieElement cayley(const SpMatrix& g);

/// All of Sp(2, F_p) = SL(2, F_p), in lexicographic order of entries.
/// Throws std::invalid_argument for N ≥ 2.
std::vector<SpMatrix> enumerate_sp(const SympSpace& space);

/// T_{u,λ}: v ↦ v + λ·ω(v, u)·u.
Matrix transvection(const SympSpace& space, const Vec& u, int lambda);

/// Product of 10·N random transvections (u ≠ 0 uniform, λ uniform in F_p).
SpMatrix random_sp(const SympSpace& space, Rng& rng);

/// (s, s^{-1} g) if both lie in U.
std::optional<std::pair<SpMatrix, SpMatrix>> try_factor_in_U(const SpMatrix& g, const SpMatrix& s);

/// Writes g = g₁·g₂ with g₁, g₂ ∈ U by rejection sampling.
std::pair<SpMatrix, SpMatrix> factor_in_U(const SpMatrix& g, Rng& rng);

}  // namespace weilrep
