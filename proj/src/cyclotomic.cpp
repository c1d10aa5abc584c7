#include "weilrep/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace weilrep {

namespace {

// Folds a length-p vector over Z[x]/(x^p − 1) (or Q[x]/(x^p − 1)) into the
// basis 1..ζ^{p-2}.
template <typename T>
std::vector<mpq_class> reduce_cyclic(const std::vector<T>& cyc, int p) {
  std::vector<mpq_class> out(p - 1);
  for (int i = 0; i < p - 1; ++i) out[i] = mpq_class(cyc[i] - cyc[p - 1]);
  return out;
}

}  // namespace

CycNum::CycNum(int p) : p_(p), coeffs_(p - 1) { require_odd_prime(p); }

CycNum::CycNum(int p, const mpq_class& rational) : CycNum(p) {
  coeffs_[0] = rational;
  coeffs_[0].canonicalize();
}

CycNum CycNum::from_coeffs(int p, std::vector<mpq_class> coeffs) {
  CycNum x(p);
  if (coeffs.size() != static_cast<std::size_t>(p - 1))
    throw std::invalid_argument("CycNum needs p - 1 coefficients");
  for (auto& c : coeffs) c.canonicalize();
  x.coeffs_ = std::move(coeffs);
  return x;
}

CycNum CycNum::zeta_power(int p, std::int64_t k) {
  CycNum x(p);
  int e = mod_p(k, p);
  if (e < p - 1) {
    x.coeffs_[e] = 1;
  } else {
    for (auto& c : x.coeffs_) c = -1;
  }
  return x;
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& c) { return sgn(c) == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const mpq_class& c) { return sgn(c) == 0; });
}

void CycNum::check_same_field(const CycNum& o) const {
  if (o.p_ != p_) throw std::invalid_argument("CycNum: mismatched p");
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same_field(o);
  for (int i = 0; i < p_ - 1; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same_field(o);
  for (int i = 0; i < p_ - 1; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  check_same_field(o);
  std::vector<mpq_class> cyc(p_);
  for (int i = 0; i < p_ - 1; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < p_ - 1; ++j) {
      if (sgn(o.coeffs_[j]) == 0) continue;
      cyc[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce_cyclic(cyc, p_);
  return *this;
}

CycNum& CycNum::operator*=(const mpq_class& r) {
  mpq_class factor(r);
  factor.canonicalize();
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum x(*this);
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

CycNum CycNum::pow(unsigned e) const {
  CycNum result(p_, 1);
  CycNum base(*this);
  for (; e > 0; e >>= 1) {
    if (e & 1U) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

bool CycNum::operator==(const CycNum& o) const {
  return p_ == o.p_ && coeffs_ == o.coeffs_;
}

std::string CycNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < p_ - 1; ++i) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0 || !unit) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  return first ? "0" : out.str();
}

CycNum psi(Fp z) { return CycNum::zeta_power(z.modulus(), z.value()); }

CycNum psi(std::int64_t z, int p) { return CycNum::zeta_power(p, z); }

CycNum conj(const CycNum& x) {
  const int p = x.p();
  std::vector<mpq_class> cyc(p);
  for (int i = 0; i < p - 1; ++i) cyc[(p - i) % p] = x.coeffs()[i];
  return CycNum::from_coeffs(p, reduce_cyclic(cyc, p));
}

CycNum gauss_sum(int p) {
  require_odd_prime(p);
  std::vector<mpz_class> cyc(p);
  for (std::int64_t z = 0; z < p; ++z) cyc[z * z % p] += 1;
  return CycNum::from_coeffs(p, reduce_cyclic(cyc, p));
}

std::complex<double> embed_complex(const CycNum& x) {
  const int p = x.p();
  long double re = 0, im = 0;
  for (int i = 0; i < p - 1; ++i) {
    const long double c = x.coeffs()[i].get_d();
    const long double angle = 2 * std::numbers::pi_v<long double> * i / p;
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

LiftedArray::LiftedArray(int p, std::span<const CycNum> values)
    : p_(p), den_(1), entries_(values.size()) {
  for (const auto& x : values) {
    if (x.p() != p) throw std::invalid_argument("LiftedArray: mismatched p");
    for (const auto& c : x.coeffs())
      if (sgn(c) != 0) mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), c.get_den_mpz_t());
  }

  std::vector<mpz_class> num(p);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto& coeffs = values[k].coeffs();
    for (int i = 0; i < p - 1; ++i) {
      num[i] = den_ / coeffs[i].get_den() * coeffs[i].get_num();
    }
    num[p - 1] = 0;
    // Any constant may be added to all p cyclic coordinates; subtracting the
    // most frequent one gives the sparsest representative (monomials become
    // single terms).
    std::map<mpz_class, int> freq;
    for (const auto& n : num) ++freq[n];
    auto mode = std::max_element(freq.begin(), freq.end(), [](const auto& a, const auto& b) {
                  return a.second < b.second;
                })->first;
    auto& terms = entries_[k].terms;
    for (int i = 0; i < p; ++i) {
      mpz_class t = num[i] - mode;
      if (sgn(t) != 0) terms.emplace_back(i, std::move(t));
    }
  }
}

CycAccumulator::CycAccumulator(int p) : p_(p), acc_(p) {}

void CycAccumulator::add(const SparseCyc& a, int shift) {
  for (const auto& [i, c] : a.terms) acc_[(i + shift) % p_] += c;
}

void CycAccumulator::add_product(const SparseCyc& a, const SparseCyc& b, int shift) {
  for (const auto& [i, x] : a.terms) {
    for (const auto& [j, y] : b.terms) {
      auto& slot = acc_[(i + j + shift) % p_];
      mpz_addmul(slot.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
  }
}

CycNum CycAccumulator::take(const mpz_class& den) {
  std::vector<mpq_class> coeffs(p_ - 1);
  for (int i = 0; i < p_ - 1; ++i) {
    coeffs[i] = mpq_class(acc_[i] - acc_[p_ - 1], den);
  }
  for (auto& a : acc_) a = 0;
  return CycNum::from_coeffs(p_, std::move(coeffs));
}

}  // namespace weilrep
