#pragma once

// Prime-field arithmetic for odd p and the Legendre character.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weilrep {

/// Raised when an operation is evaluated outside its domain
/// (inverse of zero, σ(0), Cayley transform of g with g − I singular, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_odd_prime(std::int64_t p);

/// Throws std::invalid_argument("p must be an odd prime") unless p is one.
void require_odd_prime(std::int64_t p);

// Raw residue helpers; every argument is reduced first.
int mod_p(std::int64_t a, int p);
int inv_mod(std::int64_t a, int p);
int legendre_mod(std::int64_t a, int p);

/// Residue class in F_p.
class Fp {
 public:
  Fp(std::int64_t value, int p);

  int value() const { return value_; }
  int modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator/(Fp o) const;
  Fp operator-() const;

  bool operator==(const Fp&) const = default;

 private:
  int value_;
  int p_;
};

Fp fp_inv(Fp a);

/// σ(a) ∈ {+1, −1}; throws DomainError for a = 0.
int legendre(Fp a);

/// F_p together with ½ and ¼.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  Fp operator()(std::int64_t a) const { return Fp(a, p_); }
  int half() const { return half_; }
  int quarter() const { return quarter_; }

  bool operator==(const PrimeField&) const = default;

 private:
  int p_;
  int half_;
  int quarter_;
};

}  // namespace weilrep
