#include "weilrep/deligne.hpp"

#include <stdexcept>

namespace weilrep {

namespace {

// Index in V of l + a with l ∈ L, a ∈ L′ given by their L′/L point indices.
std::size_t bundle_index(const SympSpace& space, std::size_t l_index, std::size_t a_index) {
  return l_index * space.rep_dim() + a_index;
}

std::size_t rep_combine(const SympSpace& space, const Vec& x, const Vec& y, int sign) {
  Vec s(space.N());
  for (int i = 0; i < space.N(); ++i) s[i] = x[i] + sign * y[i];
  return rep_index(space, s);
}

}  // namespace

SchrodingerKernel deligne_kernel_direct(WeilKernelTable& table, const SpMatrix& g) {
  const SympSpace& space = table.space();
  const int p = space.p();
  const std::size_t n = space.rep_dim();
  const std::int64_t half = space.field().half();
  const LiftedArray k(p, table.kernel(g).values());

  Operator out(p, n);
  CycAccumulator acc(p);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const Vec x = rep_point(space, xi);
    for (std::size_t yi = 0; yi < n; ++yi) {
      const Vec y = rep_point(space, yi);
      const std::size_t diff = rep_combine(space, y, x, -1);
      const Vec sum = rep_point(space, rep_combine(space, x, y, +1));
      for (std::size_t li = 0; li < n; ++li) {
        const Vec l = rep_point(space, li);
        // ω(b, l) = −b·l for b ∈ L′, l ∈ L.
        std::int64_t dot = 0;
        for (int i = 0; i < space.N(); ++i) dot += std::int64_t{sum[i]} * l[i];
        acc.add(k[bundle_index(space, li, diff)], mod_p(-half * dot, p));
      }
      out(xi, yi) = acc.take(k.den());
    }
  }
  return {g, std::move(out)};
}

SchrodingerKernel deligne_kernel_fourier(WeilKernelTable& table, const SpMatrix& g) {
  const SympSpace& space = table.space();
  const int p = space.p();
  const int N = space.N();
  const std::size_t n = space.rep_dim();
  const std::int64_t half = space.field().half();
  const Kernel& kernel = table.kernel(g);

  // F[a·n + l] = K(l + a): a function on L′ × L, fibre coordinate in L.
  std::vector<CycNum> F;
  F.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t l = 0; l < n; ++l) F.push_back(kernel[bundle_index(space, l, a)]);

  // One-dimensional transforms along each L coordinate:
  // F(.., b_i, ..) ← Σ_{l_i} F(.., l_i, ..)·ψ(−½·b_i·l_i).
  std::size_t stride = n;
  for (int i = 0; i < N; ++i) {
    stride /= p;
    const LiftedArray lifted(p, F);
    CycAccumulator acc(p);
    std::vector<CycNum> next(F.size(), CycNum(p));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t bi = (b / stride) % p;
        const std::size_t base = b - bi * stride;
        for (std::size_t li = 0; li < static_cast<std::size_t>(p); ++li) {
          const std::int64_t e = -half * static_cast<std::int64_t>(bi * li);
          acc.add(lifted[a * n + base + li * stride], mod_p(e, p));
        }
        next[a * n + b] = acc.take(lifted.den());
      }
    }
    F = std::move(next);
  }

  Operator out(p, n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const Vec x = rep_point(space, xi);
    for (std::size_t yi = 0; yi < n; ++yi) {
      const Vec y = rep_point(space, yi);
      out(xi, yi) = F[rep_combine(space, y, x, -1) * n + rep_combine(space, x, y, +1)];
    }
  }
  return {g, std::move(out)};
}

SchrodingerKernel kernel_compose(const SchrodingerKernel& a, const SchrodingerKernel& b) {
  if (a.values.dim() != b.values.dim() || a.values.p() != b.values.p())
    throw std::invalid_argument("kernel_compose: dimension mismatch");
  return {a.g * b.g, a.values * b.values};
}

}  // namespace weilrep
