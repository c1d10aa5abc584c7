#include "weilrep/field.hpp"

namespace weilrep {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

int mod_p(std::int64_t a, int p) {
  std::int64_t r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(std::int64_t a, int p) {
  std::int64_t r0 = p, r1 = mod_p(a, p);
  if (r1 == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return mod_p(s0, p);
}

int legendre_mod(std::int64_t a, int p) {
  int x = mod_p(a, p);
  if (x == 0) throw DomainError("Legendre character is undefined at 0");
  // Euler's criterion.
  std::int64_t base = x, result = 1;
  for (int e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result == 1 ? 1 : -1;
}

Fp::Fp(std::int64_t value, int p) : value_(mod_p(value, p)), p_(p) {}

Fp Fp::operator+(Fp o) const { return Fp(std::int64_t{value_} + o.value_, p_); }
Fp Fp::operator-(Fp o) const { return Fp(std::int64_t{value_} - o.value_, p_); }
Fp Fp::operator*(Fp o) const { return Fp(std::int64_t{value_} * o.value_, p_); }
Fp Fp::operator/(Fp o) const { return *this * fp_inv(o); }
Fp Fp::operator-() const { return Fp(-std::int64_t{value_}, p_); }

Fp fp_inv(Fp a) { return Fp(inv_mod(a.value(), a.modulus()), a.modulus()); }

int legendre(Fp a) { return legendre_mod(a.value(), a.modulus()); }

PrimeField::PrimeField(int p) : p_(p) {
  require_odd_prime(p);
  half_ = inv_mod(2, p);
  quarter_ = inv_mod(4, p);
}

}  // namespace weilrep
