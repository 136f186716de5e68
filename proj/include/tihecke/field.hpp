#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <variant>

#include "tihecke/errors.hpp"
#include "tihecke/laurent.hpp"
#include "tihecke/localized.hpp"

namespace tihecke {

using Rational = boost::multiprecision::cpp_rational;

// Scalar in the ground field K: either an exact rational or a residue mod a
// prime p > 3 (so that 0, 1 and -1 are three distinct forbidden values).
class FieldScalar {
 public:
  struct Residue {
    Int value;    // canonical representative in [0, p)
    Int modulus;  // prime > 3
    bool operator==(const Residue& o) const { return value == o.value && modulus == o.modulus; }
  };

  FieldScalar() : v_(Rational(0)) {}
  explicit FieldScalar(Rational q) : v_(std::move(q)) {}

  static FieldScalar rational(const Int& num, const Int& den = 1) {
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
    return FieldScalar(Rational(num, den));
  }

  static FieldScalar residue(Int value, const Int& p) {
    if (p <= 3) fail(errc::invalid_spec, "prime fields require p > 3, got p=" + p.str());
    if (!boost::multiprecision::miller_rabin_test(p, 32))
      fail(errc::invalid_spec, "modulus " + p.str() + " is not prime");
    value %= p;
    if (value < 0) value += p;
    return FieldScalar(Residue{std::move(value), p});
  }

  bool is_modular() const { return std::holds_alternative<Residue>(v_); }
  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const Residue& as_residue() const { return std::get<Residue>(v_); }

  bool is_zero() const {
    return is_modular() ? as_residue().value == 0 : as_rational() == 0;
  }
  bool is_one() const { return is_modular() ? as_residue().value == 1 : as_rational() == 1; }
  bool is_minus_one() const {
    return is_modular() ? as_residue().value == as_residue().modulus - 1 : as_rational() == -1;
  }

  FieldScalar zero_like() const { return is_modular() ? FieldScalar(Residue{0, as_residue().modulus}) : FieldScalar(Rational(0)); }
  FieldScalar one_like() const { return is_modular() ? FieldScalar(Residue{1, as_residue().modulus}) : FieldScalar(Rational(1)); }
  FieldScalar from_int(const Int& n) const {
    if (!is_modular()) return FieldScalar(Rational(n));
    Int v = n % as_residue().modulus;
    if (v < 0) v += as_residue().modulus;
    return FieldScalar(Residue{std::move(v), as_residue().modulus});
  }

  friend FieldScalar operator+(const FieldScalar& x, const FieldScalar& y) {
    x.check_same_field(y);
    if (x.is_modular()) {
      const auto& p = x.as_residue().modulus;
      return FieldScalar(Residue{(x.as_residue().value + y.as_residue().value) % p, p});
    }
    return FieldScalar(x.as_rational() + y.as_rational());
  }
  friend FieldScalar operator-(const FieldScalar& x, const FieldScalar& y) {
    x.check_same_field(y);
    if (x.is_modular()) {
      const auto& p = x.as_residue().modulus;
      Int v = (x.as_residue().value - y.as_residue().value) % p;
      if (v < 0) v += p;
      return FieldScalar(Residue{std::move(v), p});
    }
    return FieldScalar(x.as_rational() - y.as_rational());
  }
  FieldScalar operator-() const { return zero_like() - *this; }
  friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
    x.check_same_field(y);
    if (x.is_modular()) {
      const auto& p = x.as_residue().modulus;
      return FieldScalar(Residue{(x.as_residue().value * y.as_residue().value) % p, p});
    }
    return FieldScalar(x.as_rational() * y.as_rational());
  }
  friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) {
    x.check_same_field(y);
    if (y.is_zero()) fail(errc::division_by_zero, "field division by zero");
    if (!x.is_modular()) return FieldScalar(x.as_rational() / y.as_rational());
    return x * y.inverse();
  }
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
  FieldScalar& operator/=(const FieldScalar& o) { return *this = *this / o; }

  FieldScalar inverse() const {
    if (is_zero()) fail(errc::not_invertible, "inverse of zero");
    if (!is_modular()) return FieldScalar(Rational(1) / as_rational());
    // Extended Euclid on (value, p).
    Int a = as_residue().value, m = as_residue().modulus;
    Int x0 = 0, x1 = 1, r0 = m, r1 = a;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = x0 - q * x1;
      x0 = x1;
      x1 = tmp;
    }
    Int inv = x0 % m;
    if (inv < 0) inv += m;
    return FieldScalar(Residue{std::move(inv), m});
  }

  FieldScalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldScalar r = one_like(), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

  bool operator==(const FieldScalar& o) const { return v_ == o.v_; }
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  std::string to_string() const {
    if (is_modular()) return as_residue().value.str() + " (mod " + as_residue().modulus.str() + ")";
    return as_rational().str();
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.to_string(); }

 private:
  explicit FieldScalar(Residue r) : v_(std::move(r)) {}

  void check_same_field(const FieldScalar& o) const {
    if (is_modular() != o.is_modular() ||
        (is_modular() && as_residue().modulus != o.as_residue().modulus))
      fail(errc::mixed_fields, to_string() + " vs " + o.to_string());
  }

  std::variant<Rational, Residue> v_;
};

inline bool is_zero(const FieldScalar& x) { return x.is_zero(); }

// Evaluation of a Laurent polynomial at lambda; lambda must be nonzero when
// negative exponents occur.
inline FieldScalar eval(const Laurent& p, const FieldScalar& lambda) {
  FieldScalar acc = lambda.zero_like();
  for (const auto& [e, c] : p.terms()) {
    if (e < 0 && lambda.is_zero()) fail(errc::not_invertible, "negative exponent at lambda=0");
    acc += lambda.from_int(c) * lambda.pow(e);
  }
  return acc;
}

// Ring homomorphism A_{+-1} -> K sending u to lambda; defined only for
// lambda outside {0, 1, -1}.
inline FieldScalar specialize(const Localized& x, const FieldScalar& lambda) {
  if (lambda.is_zero() || lambda.is_one() || lambda.is_minus_one())
    fail(errc::forbidden_specialization, "lambda=" + lambda.to_string() + " must avoid {0,1,-1}");
  FieldScalar num = eval(x.num(), lambda);
  FieldScalar den = (lambda + lambda.one_like()).pow(static_cast<long>(x.a())) *
                    (lambda - lambda.one_like()).pow(static_cast<long>(x.b()));
  if (den.is_zero()) fail(errc::not_invertible, "denominator vanishes at lambda=" + lambda.to_string());
  return num / den;
}

}  // namespace tihecke
