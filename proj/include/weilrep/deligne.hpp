#pragma once

// Matrix coefficients of ρ(g) in the Schrödinger realization on S(L′),
// computed from the invariant kernel K_g in two independent ways.

#include "weilrep/weil.hpp"

namespace weilrep {

/// values(x, y) = ⟨δ_x | ρ(g) δ_y⟩ for x, y ∈ L′ (row x, column y).
struct SchrodingerKernel {
  SpMatrix g;
  Operator values;
};

/// Σ_{l ∈ L} K_g(y − x + l)·ψ(½ω(x + y, l)).
SchrodingerKernel deligne_kernel_direct(WeilKernelTable& table, const SpMatrix& g);

/// Restricts K_g to the bundle L′ × L, takes the non-normalized Fourier
/// transform along the L fibres (pairing ψ(½ω(b, l)), b ∈ L′), one coordinate
/// at a time, and pulls back along (x, y) ↦ (y − x, x + y).
SchrodingerKernel deligne_kernel_fourier(WeilKernelTable& table, const SpMatrix& g);

/// (A∘B)(x, y) = Σ_t A(x, t)·B(t, y); the group element of the result is the product.
SchrodingerKernel kernel_compose(const SchrodingerKernel& a, const SchrodingerKernel& b);

}  // namespace weilrep
