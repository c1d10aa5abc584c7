#include "weilrep/symplectic.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace weilrep {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % n + 1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % n;
}

SympSpace::SympSpace(int p, int N) : field_(p), N_(N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  rep_dim_ = 1;
  for (int i = 0; i < N; ++i) rep_dim_ *= static_cast<std::size_t>(p);
  num_vectors_ = rep_dim_ * rep_dim_;
}

void SympSpace::check_dim(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(dim()))
    throw std::invalid_argument("vector dimension mismatch");
}

Vec SympSpace::vector_at(std::size_t index) const {
  Vec v(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    v[i] = static_cast<int>(index % p());
    index /= p();
  }
  return v;
}

std::size_t SympSpace::index_of(const Vec& v) const {
  check_dim(v);
  std::size_t index = 0;
  for (int x : v) index = index * p() + x;
  return index;
}

int SympSpace::omega(const Vec& u, const Vec& v) const {
  check_dim(u);
  check_dim(v);
  std::int64_t s = 0;
  for (int i = 0; i < N_; ++i) {
    s += std::int64_t{u[i]} * v[N_ + i] - std::int64_t{u[N_ + i]} * v[i];
  }
  return mod_p(s, p());
}

Vec SympSpace::add(const Vec& u, const Vec& v) const {
  check_dim(u);
  check_dim(v);
  Vec w(dim());
  for (int i = 0; i < dim(); ++i) w[i] = mod_p(std::int64_t{u[i]} + v[i], p());
  return w;
}

Vec SympSpace::sub(const Vec& u, const Vec& v) const {
  check_dim(u);
  check_dim(v);
  Vec w(dim());
  for (int i = 0; i < dim(); ++i) w[i] = mod_p(std::int64_t{u[i]} - v[i], p());
  return w;
}

Vec SympSpace::neg(const Vec& u) const {
  check_dim(u);
  Vec w(dim());
  for (int i = 0; i < dim(); ++i) w[i] = mod_p(-std::int64_t{u[i]}, p());
  return w;
}

// --- Matrix ----------------------------------------------------------------

Matrix::Matrix(int p, int n) : p_(p), n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

Matrix Matrix::identity(int p, int n) {
  Matrix m(p, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(int p, const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(p, n);
  for (int i = 0; i < n; ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (int j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::parse(std::string_view text, int p) {
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    std::vector<std::int64_t> entries;
    std::size_t pos = 0;
    while (pos <= row.size()) {
      std::size_t comma = row.find(',', pos);
      if (comma == std::string_view::npos) comma = row.size();
      std::string_view cell = row.substr(pos, comma - pos);
      while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
      while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size())
        throw std::invalid_argument("bad matrix entry '" + std::string(cell) + "'");
      if (value < 0 || value >= p)
        throw std::invalid_argument("matrix entry " + std::to_string(value) + " not in [0, p)");
      entries.push_back(value);
      pos = comma + 1;
    }
    rows.push_back(std::move(entries));
    start = end + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw std::invalid_argument("matrix must be square");
  return from_rows(p, rows);
}

void Matrix::set(int i, int j, std::int64_t value) {
  entries_[static_cast<std::size_t>(i) * n_ + j] = mod_p(value, p_);
}

void Matrix::check_compatible(const Matrix& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("matrix shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_compatible(o);
  Matrix m(p_, n_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = mod_p(std::int64_t{entries_[k]} + o.entries_[k], p_);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_compatible(o);
  Matrix m(p_, n_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = mod_p(std::int64_t{entries_[k]} - o.entries_[k], p_);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_compatible(o);
  Matrix m(p_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n_; ++k) s += std::int64_t{(*this)(i, k)} * o(k, j);
      m.set(i, j, s);
    }
  }
  return m;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(std::int64_t c) const {
  Matrix m(p_, n_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = mod_p(mod_p(c, p_) * std::int64_t{entries_[k]}, p_);
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("vector dimension mismatch");
  Vec w(n_);
  for (int i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n_; ++j) s += std::int64_t{(*this)(i, j)} * v[j];
    w[i] = mod_p(s, p_);
  }
  return w;
}

Matrix Matrix::transpose() const {
  Matrix m(p_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.set(i, j, (*this)(j, i));
  return m;
}

int Matrix::det() const {
  std::vector<std::int64_t> a(entries_.begin(), entries_.end());
  std::int64_t d = 1;
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int r = c; r < n_; ++r)
      if (a[r * n_ + c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int k = 0; k < n_; ++k) std::swap(a[c * n_ + k], a[pivot * n_ + k]);
      d = -d;
    }
    d = mod_p(d * a[c * n_ + c], p_);
    const std::int64_t inv = inv_mod(a[c * n_ + c], p_);
    for (int r = c + 1; r < n_; ++r) {
      const std::int64_t f = a[r * n_ + c] * inv % p_;
      if (f == 0) continue;
      for (int k = c; k < n_; ++k) a[r * n_ + k] = mod_p(a[r * n_ + k] - f * a[c * n_ + k], p_);
    }
  }
  return mod_p(d, p_);
}

Matrix Matrix::inverse() const {
  const int w = 2 * n_;
  std::vector<std::int64_t> a(static_cast<std::size_t>(n_) * w, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) a[i * w + j] = (*this)(i, j);
    a[i * w + n_ + i] = 1;
  }
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int r = c; r < n_; ++r)
      if (a[r * w + c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("matrix is singular");
    if (pivot != c)
      for (int k = 0; k < w; ++k) std::swap(a[c * w + k], a[pivot * w + k]);
    const std::int64_t inv = inv_mod(a[c * w + c], p_);
    for (int k = 0; k < w; ++k) a[c * w + k] = a[c * w + k] * inv % p_;
    for (int r = 0; r < n_; ++r) {
      if (r == c || a[r * w + c] == 0) continue;
      const std::int64_t f = a[r * w + c];
      for (int k = 0; k < w; ++k) a[r * w + k] = mod_p(a[r * w + k] - f * a[c * w + k], p_);
    }
  }
  Matrix m(p_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.set(i, j, a[i * w + n_ + j]);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) {
    if (i > 0) out << ';';
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out << ',';
      out << (*this)(i, j);
    }
  }
  return out.str();
}

Matrix symplectic_form(int p, int N) {
  Matrix J(p, 2 * N);
  for (int i = 0; i < N; ++i) {
    J.set(i, N + i, 1);
    J.set(N + i, i, -1);
  }
  return J;
}

bool is_symplectic(const Matrix& g) {
  if (g.n() % 2 != 0) return false;
  const Matrix J = symplectic_form(g.p(), g.n() / 2);
  return g.transpose() * J * g == J;
}

bool is_in_sp_lie(const Matrix& a) {
  if (a.n() % 2 != 0) return false;
  const Matrix Ja = symplectic_form(a.p(), a.n() / 2) * a;
  return Ja == Ja.transpose();
}

SpMatrix::SpMatrix(Matrix g) : g_(std::move(g)) {
  if (!is_symplectic(g_)) throw std::invalid_argument("matrix is not symplectic: " + g_.to_string());
}

SpMatrix SpMatrix::identity(const SympSpace& space) {
  return SpMatrix(Matrix::identity(space.p(), space.dim()), Trusted{});
}

SpMatrix SpMatrix::operator*(const SpMatrix& o) const { return SpMatrix(g_ * o.g_, Trusted{}); }

SpMatrix SpMatrix::inverse() const {
  // g^{-1} = −J gᵀ J for symplectic g.
  const Matrix J = symplectic_form(g_.p(), g_.n() / 2);
  return SpMatrix(-(J * g_.transpose() * J), Trusted{});
}

SpLieElement::SpLieElement(Matrix a) : a_(std::move(a)) {
  if (!is_in_sp_lie(a_)) throw std::invalid_argument("matrix is not in sp(V): " + a_.to_string());
}

bool in_U(const Matrix& g) { return (g - Matrix::identity(g.p(), g.n())).invertible(); }

Matrix cayley(const Matrix& g) {
  const Matrix I = Matrix::identity(g.p(), g.n());
  const Matrix gm = g - I;
  if (!gm.invertible()) throw DomainError("Cayley transform undefined: g - I is singular");
  return (g + I) * gm.inverse();
}

SpLieElement cayley(const SpMatrix& g) { return SpLieElement(cayley(g.matrix())); }

std::vector<SpMatrix> enumerate_sp(const SympSpace& space) {
  if (space.N() != 1) throw std::invalid_argument("enumerate_sp supports N = 1 only; use random_sp");
  const int p = space.p();
  std::vector<SpMatrix> out;
  out.reserve(static_cast<std::size_t>(p) * (p * p - 1));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (mod_p(std::int64_t{a} * d - std::int64_t{b} * c, p) == 1)
            out.emplace_back(Matrix::from_rows(p, {{a, b}, {c, d}}));
  return out;
}

Matrix transvection(const SympSpace& space, const Vec& u, int lambda) {
  // T = I + λ·u·(Ju)ᵀ, since (Ju)·v = ω(v, u).
  const int n = space.dim();
  const Vec Ju = symplectic_form(space.p(), space.N()).apply(u);
  Matrix T = Matrix::identity(space.p(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      T.set(i, j, T(i, j) + std::int64_t{lambda} * u[i] % space.p() * Ju[j]);
  return T;
}

SpMatrix random_sp(const SympSpace& space, Rng& rng) {
  Matrix g = Matrix::identity(space.p(), space.dim());
  for (int step = 0; step < 10 * space.N(); ++step) {
    Vec u;
    do {
      u = space.vector_at(uniform_below(rng, space.num_vectors()));
    } while (space.index_of(u) == 0);
    const int lambda = static_cast<int>(uniform_below(rng, space.p()));
    g = transvection(space, u, lambda) * g;
  }
  return SpMatrix(std::move(g));
}

std::optional<std::pair<SpMatrix, SpMatrix>> try_factor_in_U(const SpMatrix& g, const SpMatrix& s) {
  if (!in_U(s)) return std::nullopt;
  SpMatrix rest = s.inverse() * g;
  if (!in_U(rest)) return std::nullopt;
  return std::pair{s, std::move(rest)};
}

std::pair<SpMatrix, SpMatrix> factor_in_U(const SpMatrix& g, Rng& rng) {
  constexpr int kMaxAttempts = 10'000;
  const SympSpace space(g.p(), g.n() / 2);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (auto f = try_factor_in_U(g, random_sp(space, rng))) return *f;
  }
  if (space.N() == 1) {
    for (const auto& s : enumerate_sp(space))
      if (auto f = try_factor_in_U(g, s)) return *f;
  }
  throw std::runtime_error("factor_in_U: no factorization found for " + g.to_string());
}

}  // namespace weilrep
