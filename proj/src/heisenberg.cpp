#include "weilrep/heisenberg.hpp"

#include <stdexcept>

namespace weilrep {

HeisElement h_mul(const SympSpace& space, const HeisElement& a, const HeisElement& b) {
  const std::int64_t z =
      std::int64_t{a.z} + b.z + std::int64_t{space.field().half()} * space.omega(a.v, b.v);
  return {space.add(a.v, b.v), mod_p(z, space.p())};
}

HeisElement h_inv(const SympSpace& space, const HeisElement& a) {
  return {space.neg(a.v), mod_p(-std::int64_t{a.z}, space.p())};
}

HeisElement h_act(const Matrix& g, const HeisElement& h) { return {g.apply(h.v), h.z}; }

HeisElement heis_element_at(const SympSpace& space, std::size_t index) {
  const auto p = static_cast<std::size_t>(space.p());
  return {space.vector_at(index / p), static_cast<int>(index % p)};
}

// --- Operator --------------------------------------------------------------

Operator::Operator(int p, std::size_t dim) : p_(p), dim_(dim), entries_(dim * dim, CycNum(p)) {}

Operator Operator::identity(int p, std::size_t dim) {
  Operator op(p, dim);
  for (std::size_t i = 0; i < dim; ++i) op(i, i) = CycNum(p, 1);
  return op;
}

void Operator::check_compatible(const Operator& o) const {
  if (p_ != o.p_ || dim_ != o.dim_) throw std::invalid_argument("operator shape mismatch");
}

Operator Operator::operator*(const Operator& o) const {
  check_compatible(o);
  const LiftedArray a(p_, entries_);
  const LiftedArray b(p_, o.entries_);
  const mpz_class den = a.den() * b.den();
  Operator out(p_, dim_);
  CycAccumulator acc(p_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      for (std::size_t t = 0; t < dim_; ++t) acc.add_product(a[r * dim_ + t], b[t * dim_ + c]);
      out(r, c) = acc.take(den);
    }
  }
  return out;
}

Operator Operator::operator+(const Operator& o) const {
  check_compatible(o);
  Operator out(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += o.entries_[k];
  return out;
}

Operator Operator::operator-(const Operator& o) const {
  check_compatible(o);
  Operator out(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= o.entries_[k];
  return out;
}

Operator Operator::scaled(const CycNum& c) const {
  Operator out(*this);
  for (auto& e : out.entries_) e *= c;
  return out;
}

CycNum Operator::trace() const {
  CycNum t(p_);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Operator Operator::conj_transpose() const {
  Operator out(p_, dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(r, c) = conj((*this)(c, r));
  return out;
}

// --- Kernel ----------------------------------------------------------------

Kernel::Kernel(const SympSpace& space) : space_(space), values_(space.num_vectors(), CycNum(space.p())) {}

Kernel Kernel::delta(const SympSpace& space, const Vec& u) {
  Kernel k(space);
  k.values_[space.index_of(u)] = CycNum(space.p(), 1);
  return k;
}

// --- Schrödinger model -----------------------------------------------------

Vec rep_point(const SympSpace& space, std::size_t index) {
  Vec x(space.N());
  for (int i = space.N() - 1; i >= 0; --i) {
    x[i] = static_cast<int>(index % space.p());
    index /= space.p();
  }
  return x;
}

std::size_t rep_index(const SympSpace& space, std::span<const int> x) {
  std::size_t index = 0;
  for (int c : x) index = index * space.p() + mod_p(c, space.p());
  return index;
}

MonomialMatrix schrodinger_monomial(const SympSpace& space, const HeisElement& h) {
  const int p = space.p();
  const int N = space.N();
  const std::size_t n = space.rep_dim();
  // l = v[0..N), l′ = v[N..2N). For x ∈ L′: ω(x, l) = −x·l and ω(l, l′) = l·l′.
  std::int64_t l_dot_lp = 0;
  for (int i = 0; i < N; ++i) l_dot_lp += std::int64_t{h.v[i]} * h.v[N + i];
  const std::int64_t base = h.z - std::int64_t{space.field().half()} * mod_p(l_dot_lp, p);

  MonomialMatrix m{std::vector<std::size_t>(n), std::vector<int>(n)};
  Vec shifted(N);
  for (std::size_t r = 0; r < n; ++r) {
    const Vec x = rep_point(space, r);
    std::int64_t x_dot_l = 0;
    for (int i = 0; i < N; ++i) {
      x_dot_l += std::int64_t{x[i]} * h.v[i];
      shifted[i] = x[i] + h.v[N + i];
    }
    m.column[r] = rep_index(space, shifted);
    m.exponent[r] = mod_p(base - x_dot_l, p);
  }
  return m;
}

Operator schrodinger_pi(const SympSpace& space, const HeisElement& h) {
  const MonomialMatrix m = schrodinger_monomial(space, h);
  Operator op(space.p(), space.rep_dim());
  for (std::size_t r = 0; r < m.column.size(); ++r)
    op(r, m.column[r]) = CycNum::zeta_power(space.p(), m.exponent[r]);
  return op;
}

StoneVonNeumannReport verify_stone_von_neumann(const SympSpace& space, Rng& rng, std::size_t samples) {
  const int p = space.p();
  const std::size_t order = space.num_vectors() * static_cast<std::size_t>(p);
  StoneVonNeumannReport report{0, true, true, true, CycNum(p)};

  auto check_pair = [&](const HeisElement& a, const HeisElement& b) {
    ++report.pairs_checked;
    if (schrodinger_pi(space, a) * schrodinger_pi(space, b) != schrodinger_pi(space, h_mul(space, a, b)))
      report.homomorphism = false;
  };
  if (space.N() == 1 && p <= 5) {
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        check_pair(heis_element_at(space, i), heis_element_at(space, j));
  } else {
    for (std::size_t s = 0; s < samples; ++s) {
      const auto a = heis_element_at(space, uniform_below(rng, order));
      const auto b = heis_element_at(space, uniform_below(rng, order));
      check_pair(a, b);
    }
  }

  const Vec zero(space.dim(), 0);
  const Operator id = Operator::identity(p, space.rep_dim());
  for (int z = 0; z < p; ++z) {
    if (schrodinger_pi(space, {zero, z}) != id.scaled(psi(z, p))) report.central_character = false;
  }

  for (std::size_t i = 0; i < order; ++i) {
    const CycNum t = schrodinger_pi(space, heis_element_at(space, i)).trace();
    report.character_norm_sum += t * conj(t);
  }
  report.irreducible = report.character_norm_sum == CycNum(p, static_cast<long>(order));
  return report;
}

// --- Weyl transform --------------------------------------------------------

Kernel weyl_transform(const SympSpace& space, const Operator& A) {
  if (A.p() != space.p() || A.dim() != space.rep_dim())
    throw std::invalid_argument("weyl_transform: operator does not act on S(L')");
  const LiftedArray a(space.p(), A.entries());
  const mpz_class den = a.den() * static_cast<unsigned long>(space.rep_dim());
  const std::size_t n = space.rep_dim();
  Kernel out(space);
  CycAccumulator acc(space.p());
  for (std::size_t idx = 0; idx < space.num_vectors(); ++idx) {
    // (v, 0)^{-1} = (−v, 0); Tr(A·M) = Σ_r M[r][col(r)]·A[col(r)][r].
    const MonomialMatrix m = schrodinger_monomial(space, {space.neg(space.vector_at(idx)), 0});
    for (std::size_t r = 0; r < n; ++r) acc.add(a[m.column[r] * n + r], m.exponent[r]);
    out[idx] = acc.take(den);
  }
  return out;
}

Operator weyl_inverse(const Kernel& f) {
  const SympSpace& space = f.space();
  const int p = space.p();
  const std::size_t n = space.rep_dim();
  const LiftedArray lifted(p, f.values());
  std::vector<CycAccumulator> acc(n * n, CycAccumulator(p));
  for (std::size_t idx = 0; idx < space.num_vectors(); ++idx) {
    if (lifted[idx].terms.empty()) continue;
    const MonomialMatrix m = schrodinger_monomial(space, {space.vector_at(idx), 0});
    for (std::size_t r = 0; r < n; ++r) acc[r * n + m.column[r]].add(lifted[idx], m.exponent[r]);
  }
  Operator out(p, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = acc[r * n + c].take(lifted.den());
  return out;
}

Kernel v_convolve(const Kernel& f, const Kernel& g) {
  if (!(f.space() == g.space())) throw std::invalid_argument("v_convolve: kernels on different spaces");
  const SympSpace& space = f.space();
  const int p = space.p();
  const int dim = space.dim();
  const std::size_t size = space.num_vectors();
  const LiftedArray lf(p, f.values());
  const LiftedArray lg(p, g.values());
  const mpz_class den = lf.den() * lg.den();
  const std::int64_t half = space.field().half();

  std::vector<Vec> points(size);
  for (std::size_t i = 0; i < size; ++i) points[i] = space.vector_at(i);

  Kernel out(space);
  CycAccumulator acc(p);
  for (std::size_t vi = 0; vi < size; ++vi) {
    const Vec& v = points[vi];
    for (std::size_t i1 = 0; i1 < size; ++i1) {
      if (lf[i1].terms.empty()) continue;
      const Vec& v1 = points[i1];
      std::size_t i2 = 0;
      std::int64_t w = 0;
      for (int k = 0; k < dim; ++k) {
        int c = v[k] - v1[k];
        if (c < 0) c += p;
        i2 = i2 * p + c;
      }
      if (lg[i2].terms.empty()) continue;
      // ω(v₁, v − v₁) = ω(v₁, v).
      const int N = space.N();
      for (int k = 0; k < N; ++k) w += std::int64_t{v1[k]} * v[N + k] - std::int64_t{v1[N + k]} * v[k];
      acc.add_product(lf[i1], lg[i2], mod_p(half * mod_p(w, p), p));
    }
    out[vi] = acc.take(den);
  }
  return out;
}

}  // namespace weilrep
