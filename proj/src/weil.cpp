#include "weilrep/weil.hpp"

#include <stdexcept>

namespace weilrep {

namespace {

SympSpace space_of(const Matrix& g) { return SympSpace(g.p(), g.n() / 2); }

// 𝔢^{2N}/q^{k} as a CycNum (rational, since 𝔢² = ±p).
CycNum gauss_power_over_q(int p, int N, int k) {
  CycNum c = gauss_sum(p).pow(2 * N);
  mpz_class q_pow;
  mpz_ui_pow_ui(q_pow.get_mpz_t(), p, k);
  return c * mpq_class(1, q_pow);
}

int quadratic_phase(const SympSpace& space, const Matrix& a, const Vec& v) {
  return mod_p(std::int64_t{space.field().quarter()} * space.omega(a.apply(v), v), space.p());
}

void require_U(const Matrix& g, const char* what) {
  if (!in_U(g)) throw DomainError(std::string(what) + ": g - I is singular for g = " + g.to_string());
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

CycNum nu(const SpMatrix& g) {
  require_U(g, "nu");
  const SympSpace space = space_of(g);
  const Matrix k = cayley(g.matrix());
  const int sigma = legendre_mod((k + Matrix::identity(g.p(), g.n())).det(), g.p());
  return gauss_power_over_q(g.p(), space.N(), 2 * space.N()) * mpq_class(sigma);
}

Kernel ansatz_kernel(const SpMatrix& g) {
  const CycNum scale = nu(g);
  const SympSpace space = space_of(g);
  const Matrix k = cayley(g.matrix());
  const mpq_class& r = scale.coeffs()[0];  // ν is rational
  Kernel out(space);
  for (std::size_t i = 0; i < space.num_vectors(); ++i) {
    out[i] = CycNum::zeta_power(space.p(), quadratic_phase(space, k, space.vector_at(i))) * r;
  }
  return out;
}

Kernel kernel_from_factors(const SpMatrix& g1, const SpMatrix& g2) {
  return v_convolve(ansatz_kernel(g1), ansatz_kernel(g2));
}

WeilKernelTable::WeilKernelTable(SympSpace space, std::uint64_t seed) : space_(std::move(space)), seed_(seed) {}

std::pair<SpMatrix, SpMatrix> WeilKernelTable::factorization(const SpMatrix& g) const {
  std::uint64_t h = splitmix64(seed_);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) h = splitmix64(h ^ static_cast<std::uint64_t>(g.matrix()(i, j)));
  Rng rng(h);
  return factor_in_U(g, rng);
}

const WeilKernelTable::Entry& WeilKernelTable::entry(const SpMatrix& g) {
  if (g.p() != space_.p() || g.n() != space_.dim())
    throw std::invalid_argument("WeilKernelTable: element of the wrong group");
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(g); it != cache_.end()) return it->second;
  }
  Entry e{Kernel(space_), std::nullopt};
  if (in_U(g)) {
    e.kernel = ansatz_kernel(g);
  } else {
    auto f = factorization(g);
    e.kernel = kernel_from_factors(f.first, f.second);
    e.factors = std::move(f);
  }
  std::lock_guard lock(mutex_);
  // A concurrent insert of the same g computed the same value; keep the first.
  return cache_.try_emplace(g, std::move(e)).first->second;
}

const Kernel& weil_kernel(WeilKernelTable& table, const SpMatrix& g) { return table.kernel(g); }

Operator rho(WeilKernelTable& table, const SpMatrix& g) { return weyl_inverse(table.kernel(g)); }

bool egorov_check(WeilKernelTable& table, const SpMatrix& g, const HeisElement& h) {
  const SympSpace& space = table.space();
  const Operator r = rho(table, g);
  return r * schrodinger_pi(space, h) == schrodinger_pi(space, h_act(g, h)) * r;
}

CycNum character_rho(const SpMatrix& g) {
  require_U(g, "character_rho");
  const SympSpace space = space_of(g);
  const Matrix k = cayley(g.matrix());
  const int sigma = legendre_mod((k + Matrix::identity(g.p(), g.n())).det(), g.p());
  return gauss_power_over_q(g.p(), space.N(), space.N()) * mpq_class(sigma);
}

CycNum character_tau(const SpMatrix& g, const HeisElement& h) {
  const CycNum ch = character_rho(g);
  const SympSpace space = space_of(g);
  const int phase = quadratic_phase(space, cayley(g.matrix()), h.v) + h.z;
  return ch * psi(phase, g.p());
}

CycNum symplectic_gauss_sum(const SpLieElement& a) {
  const SympSpace space = space_of(a.matrix());
  const int p = space.p();
  std::vector<long> counts(p, 0);
  for (std::size_t i = 0; i < space.num_vectors(); ++i)
    ++counts[quadratic_phase(space, a.matrix(), space.vector_at(i))];
  std::vector<mpq_class> coeffs(p - 1);
  for (int i = 0; i < p - 1; ++i) coeffs[i] = counts[i] - counts[p - 1];
  return CycNum::from_coeffs(p, std::move(coeffs));
}

bool nu_cocycle_check(const SpMatrix& g, const SpMatrix& h) {
  const SpMatrix gh = g * h;
  require_U(g, "nu_cocycle_check");
  require_U(h, "nu_cocycle_check");
  require_U(gh, "nu_cocycle_check");
  const SpLieElement sum(cayley(g.matrix()) + cayley(h.matrix()));
  return nu(g) * nu(h) * symplectic_gauss_sum(sum) == nu(gh);
}

bool completion_of_squares_check(const SpMatrix& g, const SpMatrix& h) {
  const SpMatrix gh = g * h;
  require_U(g, "completion_of_squares_check");
  require_U(h, "completion_of_squares_check");
  require_U(gh, "completion_of_squares_check");
  const SympSpace space = space_of(g);
  const Matrix I = Matrix::identity(g.p(), g.n());
  const Matrix kg = cayley(g.matrix());
  const Matrix kh = cayley(h.matrix());
  const Matrix b = kg + (I + kg) * (kg + kh).inverse() * (I - kg);

  auto unnormalized = [&](const Matrix& a) {
    Kernel k(space);
    for (std::size_t i = 0; i < space.num_vectors(); ++i)
      k[i] = CycNum::zeta_power(space.p(), quadratic_phase(space, a, space.vector_at(i)));
    return k;
  };
  const Kernel lhs = v_convolve(unnormalized(kg), unnormalized(kh));
  const CycNum gauss = symplectic_gauss_sum(SpLieElement(kg + kh));
  const Kernel phase = unnormalized(b);
  for (std::size_t i = 0; i < space.num_vectors(); ++i)
    if (lhs[i] != phase[i] * gauss) return false;
  return true;
}

namespace {

// Coordinate of V₁ × V₂ that coordinate i of the factor lands on.
int embedded_coord(int i, int Nf, int offset, int N) { return i < Nf ? offset + i : N + offset + (i - Nf); }

}  // namespace

SpMatrix embed_pair(const SpMatrix& g1, const SpMatrix& g2) {
  if (g1.p() != g2.p()) throw std::invalid_argument("embed_pair: mismatched p");
  const int N1 = g1.n() / 2, N2 = g2.n() / 2, N = N1 + N2;
  Matrix g(g1.p(), 2 * N);
  for (int i = 0; i < 2 * N1; ++i)
    for (int j = 0; j < 2 * N1; ++j)
      g.set(embedded_coord(i, N1, 0, N), embedded_coord(j, N1, 0, N), g1.matrix()(i, j));
  for (int i = 0; i < 2 * N2; ++i)
    for (int j = 0; j < 2 * N2; ++j)
      g.set(embedded_coord(i, N2, N1, N), embedded_coord(j, N2, N1, N), g2.matrix()(i, j));
  return SpMatrix(std::move(g));
}

Vec embed_vectors(const SympSpace& s1, const Vec& v1, const SympSpace& s2, const Vec& v2) {
  const int N1 = s1.N(), N2 = s2.N(), N = N1 + N2;
  Vec v(2 * N);
  for (int i = 0; i < 2 * N1; ++i) v[embedded_coord(i, N1, 0, N)] = v1[i];
  for (int i = 0; i < 2 * N2; ++i) v[embedded_coord(i, N2, N1, N)] = v2[i];
  return v;
}

bool product_check(WeilKernelTable& t1, WeilKernelTable& t2, WeilKernelTable& product,
                   const SpMatrix& g1, const SpMatrix& g2) {
  const SympSpace& s1 = t1.space();
  const SympSpace& s2 = t2.space();
  const SympSpace& s = product.space();
  if (s.p() != s1.p() || s.p() != s2.p() || s.N() != s1.N() + s2.N())
    throw std::invalid_argument("product_check: V must equal V1 x V2");
  const Kernel& k1 = t1.kernel(g1);
  const Kernel& k2 = t2.kernel(g2);
  const Kernel& k = product.kernel(embed_pair(g1, g2));
  for (std::size_t i = 0; i < s1.num_vectors(); ++i) {
    const Vec v1 = s1.vector_at(i);
    for (std::size_t j = 0; j < s2.num_vectors(); ++j) {
      const Vec v2 = s2.vector_at(j);
      if (k.at(embed_vectors(s1, v1, s2, v2)) != k1[i] * k2[j]) return false;
    }
  }
  return true;
}

}  // namespace weilrep
