#pragma once

// The Heisenberg group H = V × F_p, its Schrödinger model on S(L′), and the
// Weyl transform identifying End(S(L′)) with the twisted convolution algebra
// on S(V).
//
// Index orders are fixed: an Operator's rows/columns run over L′ ≅ F_p^N and a
// Kernel's entries run over V ≅ F_p^{2N}, both lexicographic with the first
// coordinate most significant.

#include <cstddef>
#include <span>
#include <vector>

#include "weilrep/cyclotomic.hpp"
#include "weilrep/symplectic.hpp"

namespace weilrep {

struct HeisElement {
  Vec v;
  int z = 0;

  bool operator==(const HeisElement&) const = default;
};

/// (v, z)·(v′, z′) = (v + v′, z + z′ + ½ω(v, v′)).
HeisElement h_mul(const SympSpace& space, const HeisElement& a, const HeisElement& b);
HeisElement h_inv(const SympSpace& space, const HeisElement& a);
/// g·(v, z) = (gv, z).
HeisElement h_act(const Matrix& g, const HeisElement& h);
/// Enumerates H with the V-index most significant, then z.
HeisElement heis_element_at(const SympSpace& space, std::size_t index);

/// Dense square matrix over Q(ζ_p).
class Operator {
 public:
  Operator(int p, std::size_t dim);
  static Operator identity(int p, std::size_t dim);

  int p() const { return p_; }
  std::size_t dim() const { return dim_; }

  const CycNum& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  CycNum& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  std::span<const CycNum> entries() const { return entries_; }

  Operator operator*(const Operator& o) const;
  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator scaled(const CycNum& c) const;

  CycNum trace() const;
  Operator conj_transpose() const;

  bool operator==(const Operator& o) const = default;

 private:
  void check_compatible(const Operator& o) const;

  int p_;
  std::size_t dim_;
  std::vector<CycNum> entries_;
};

/// Function on V (the V-restriction of a ψ^{-1}-equivariant function on H).
class Kernel {
 public:
  explicit Kernel(const SympSpace& space);
  static Kernel delta(const SympSpace& space, const Vec& u);

  const SympSpace& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  const CycNum& operator[](std::size_t i) const { return values_[i]; }
  CycNum& operator[](std::size_t i) { return values_[i]; }
  const CycNum& at(const Vec& v) const { return values_[space_.index_of(v)]; }
  std::span<const CycNum> values() const { return values_; }

  bool operator==(const Kernel& o) const { return space_ == o.space_ && values_ == o.values_; }

 private:
  SympSpace space_;
  std::vector<CycNum> values_;
};

/// Monomial matrix ψ(exponent[x])·δ_{column[x]} in row x.
struct MonomialMatrix {
  std::vector<std::size_t> column;
  std::vector<int> exponent;
};

/// Coordinates of the L′-point with the given index.
Vec rep_point(const SympSpace& space, std::size_t index);
std::size_t rep_index(const SympSpace& space, std::span<const int> x);

/// π(v, z) = ψ(z − ½ω(l, l′))·M_l·T_{l′} for v = l + l′, where
/// [M_l f](x) = ψ(ω(x, l)) f(x) and [T_{l′} f](x) = f(x + l′).
MonomialMatrix schrodinger_monomial(const SympSpace& space, const HeisElement& h);
Operator schrodinger_pi(const SympSpace& space, const HeisElement& h);

struct StoneVonNeumannReport {
  std::size_t pairs_checked = 0;
  bool homomorphism = true;
  bool central_character = true;
  bool irreducible = true;
  /// Σ_{h ∈ H} |Tr π(h)|²; equals |H| exactly for an irreducible π.
  CycNum character_norm_sum;

  bool ok() const { return homomorphism && central_character && irreducible; }
};

/// Exhaustive homomorphism check when N = 1 and p ≤ 5, otherwise `samples`
/// seeded random pairs. Central character and irreducibility are always exact
/// over all of H.
StoneVonNeumannReport verify_stone_von_neumann(const SympSpace& space, Rng& rng,
                                               std::size_t samples = 2000);

/// Â(v) = q^{-N}·Tr(A·π((v, 0)^{-1})).
Kernel weyl_transform(const SympSpace& space, const Operator& A);
/// π(f) = Σ_v f(v)·π(v, 0).
Operator weyl_inverse(const Kernel& f);

/// (f ∗ g)(v) = Σ_{v₁+v₂=v} ψ(½ω(v₁, v₂)) f(v₁) g(v₂); the product that the
/// Weyl transform carries composition to.
Kernel v_convolve(const Kernel& f, const Kernel& g);

}  // namespace weilrep
