#pragma once

// The Weil representation in its invariant presentation.
//
// For g ∈ U the kernel is the ansatz K_g(v) = ν(g)·ψ(¼ω(κ(g)v, v)) with
// ν(g) = 𝔢^{2N}/q^{2N}·σ(det(κ(g) + I)). Outside U the kernel is obtained from
// a factorization g = g₁g₂ with g₁, g₂ ∈ U as K_{g₁} ∗ K_{g₂}, and
// ρ(g) = π(K_g). No basis-dependent formula for ρ(g) appears anywhere.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "weilrep/heisenberg.hpp"

namespace weilrep {

/// Throws DomainError for g ∉ U.
CycNum nu(const SpMatrix& g);
Kernel ansatz_kernel(const SpMatrix& g);

/// Memoized K: G → S(V). Safe to share between threads.
class WeilKernelTable {
 public:
  struct Entry {
    Kernel kernel;
    /// Set when g ∉ U; the pair the kernel was built from.
    std::optional<std::pair<SpMatrix, SpMatrix>> factors;
  };

  explicit WeilKernelTable(SympSpace space, std::uint64_t seed = 42);

  const SympSpace& space() const { return space_; }
  std::uint64_t seed() const { return seed_; }

  const Entry& entry(const SpMatrix& g);
  const Kernel& kernel(const SpMatrix& g) { return entry(g).kernel; }

  /// Seeded per g, so the factorization does not depend on query order.
  std::pair<SpMatrix, SpMatrix> factorization(const SpMatrix& g) const;

 private:
  SympSpace space_;
  std::uint64_t seed_;
  std::mutex mutex_;
  std::map<SpMatrix, Entry> cache_;
};

/// K_{g₁} ∗ K_{g₂} for g₁, g₂ ∈ U.
Kernel kernel_from_factors(const SpMatrix& g1, const SpMatrix& g2);

const Kernel& weil_kernel(WeilKernelTable& table, const SpMatrix& g);
Operator rho(WeilKernelTable& table, const SpMatrix& g);

/// ρ(g)π(h)ρ(g)^{-1} = π(g·h), checked as ρ(g)π(h) = π(g·h)ρ(g).
bool egorov_check(WeilKernelTable& table, const SpMatrix& g, const HeisElement& h);

/// ch_ρ(g) = 𝔢^{2N}/q^N·σ(det(κ(g) + I)) on U.
CycNum character_rho(const SpMatrix& g);
/// ch_τ(g, v, z) = ch_ρ(g)·ψ(¼ω(κ(g)v, v) + z) on U × H.
CycNum character_tau(const SpMatrix& g, const HeisElement& h);

/// 𝒢_a = Σ_{v ∈ V} ψ(¼ω(av, v)).
CycNum symplectic_gauss_sum(const SpLieElement& a);

/// ν(g)·ν(h)·𝒢_{κ(g)+κ(h)} = ν(gh); requires g, h, gh ∈ U.
bool nu_cocycle_check(const SpMatrix& g, const SpMatrix& h);

/// K̃_g ∗ K̃_h = ψ(¼ω(b·, ·))·𝒢_{κ(g)+κ(h)} with
/// b = κ(g) + [I + κ(g)][κ(g) + κ(h)]^{-1}[I − κ(g)] and K̃_g(v) = ψ(¼ω(κ(g)v, v)).
/// Requires g, h, gh ∈ U.
bool completion_of_squares_check(const SpMatrix& g, const SpMatrix& h);

/// Block embedding Sp(V₁) × Sp(V₂) → Sp(V₁ × V₂) with ω = ω₁ + ω₂:
/// (a₁, b₁) ⊕ (a₂, b₂) ↦ (a₁, a₂, b₁, b₂).
SpMatrix embed_pair(const SpMatrix& g1, const SpMatrix& g2);
Vec embed_vectors(const SympSpace& s1, const Vec& v1, const SympSpace& s2, const Vec& v2);

/// K^V(i(g₁, g₂))(v₁, v₂) = K^{V₁}(g₁)(v₁)·K^{V₂}(g₂)(v₂) for every (v₁, v₂).
bool product_check(WeilKernelTable& t1, WeilKernelTable& t2, WeilKernelTable& product,
                   const SpMatrix& g1, const SpMatrix& g2);

}  // namespace weilrep
