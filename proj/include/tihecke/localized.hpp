#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "tihecke/errors.hpp"
#include "tihecke/laurent.hpp"

namespace tihecke {

// Element of A_{+-1} = Z[u,u^{-1},(u+1)^{-1},(u-1)^{-1}] kept in normal form:
// num / ((u+1)^a (u-1)^b) with (u+1) not dividing num when a > 0 and (u-1)
// not dividing num when b > 0. Zero is stored as 0/1.
class Localized {
 public:
  Localized() = default;
  Localized(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Localized(Laurent num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  Localized(Laurent num, unsigned a, unsigned b) : num_(std::move(num)), a_(a), b_(b) { normalize(); }

  // 1 / ((u+1)^a (u-1)^b)
  static Localized inverse_denominator(unsigned a, unsigned b) { return Localized(Laurent(1), a, b); }

  const Laurent& num() const { return num_; }
  unsigned a() const { return a_; }
  unsigned b() const { return b_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return a_ == 0 && b_ == 0 && num_.is_one(); }
  // Membership in the subrings, read off the normal form.
  bool in_A() const { return a_ == 0 && b_ == 0; }
  bool in_A_minus1() const { return b_ == 0; }
  bool in_A_1() const { return a_ == 0; }

  const Laurent& as_laurent() const {
    if (!in_A()) fail(errc::not_polynomial, "denominator present: " + to_string());
    return num_;
  }

  friend Localized operator+(const Localized& x, const Localized& y) {
    const unsigned a = std::max(x.a_, y.a_), b = std::max(x.b_, y.b_);
    Laurent n = x.num_ * u_plus_1().pow(a - x.a_) * u_minus_1().pow(b - x.b_) +
                y.num_ * u_plus_1().pow(a - y.a_) * u_minus_1().pow(b - y.b_);
    return Localized(std::move(n), a, b);
  }
  friend Localized operator-(const Localized& x, const Localized& y) { return x + (-y); }
  Localized operator-() const {
    Localized r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend Localized operator*(const Localized& x, const Localized& y) {
    return Localized(x.num_ * y.num_, x.a_ + y.a_, x.b_ + y.b_);
  }
  Localized& operator+=(const Localized& o) { return *this = *this + o; }
  Localized& operator-=(const Localized& o) { return *this = *this - o; }
  Localized& operator*=(const Localized& o) { return *this = *this * o; }

  // Exact division within A_{+-1}; throws NotDivisible when the quotient
  // leaves the ring.
  friend Localized exact_div(const Localized& x, const Localized& y) {
    if (y.is_zero()) fail(errc::division_by_zero, "exact_div by zero");
    if (x.is_zero()) return Localized{};
    // Strip every (u+-1) factor from y's numerator; those move into the
    // denominator exponents of the quotient.
    Laurent core = y.num_;
    unsigned alpha = 0, beta = 0;
    while (auto q = core.deflated(-1)) {
      core = *q;
      ++alpha;
    }
    while (auto q = core.deflated(1)) {
      core = *q;
      ++beta;
    }
    auto quot = exact_div(x.num_, core);
    if (!quot) fail(errc::not_divisible, x.to_string() + " by " + y.to_string());
    const long da = static_cast<long>(y.a_) - static_cast<long>(x.a_) - static_cast<long>(alpha);
    const long db = static_cast<long>(y.b_) - static_cast<long>(x.b_) - static_cast<long>(beta);
    Laurent n = std::move(*quot);
    if (da > 0) n *= u_plus_1().pow(static_cast<unsigned>(da));
    if (db > 0) n *= u_minus_1().pow(static_cast<unsigned>(db));
    return Localized(std::move(n), da < 0 ? static_cast<unsigned>(-da) : 0u,
                     db < 0 ? static_cast<unsigned>(-db) : 0u);
  }

  bool operator==(const Localized& o) const { return a_ == o.a_ && b_ == o.b_ && num_ == o.num_; }
  bool operator!=(const Localized& o) const { return !(*this == o); }

  // Factorization num = +-u^k (u+1)^p (u-1)^q when this element is a unit of
  // A_{+-1}; nullopt otherwise. Exponents are net of the denominator.
  struct UnitFactors {
    int sign;  // +1 or -1
    long u_exp;
    long plus1_exp;
    long minus1_exp;
  };
  std::optional<UnitFactors> unit_factors() const {
    if (is_zero()) return std::nullopt;
    Laurent core = num_;
    long p = -static_cast<long>(a_), q = -static_cast<long>(b_);
    while (auto d = core.deflated(-1)) {
      core = *d;
      ++p;
    }
    while (auto d = core.deflated(1)) {
      core = *d;
      ++q;
    }
    if (core.term_count() != 1) return std::nullopt;
    const auto& [exp, c] = *core.terms().begin();
    if (c != 1 && c != -1) return std::nullopt;
    return UnitFactors{c < 0 ? -1 : 1, exp, p, q};
  }

  std::string to_string() const {
    if (in_A()) return num_.to_string();
    std::string s = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    s += "/(";
    if (a_ > 0) s += a_ == 1 ? "(u+1)" : "(u+1)^" + std::to_string(a_);
    if (b_ > 0) s += b_ == 1 ? "(u-1)" : "(u-1)^" + std::to_string(b_);
    s += ")";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Localized& x) { return os << x.to_string(); }

 private:
  void normalize() {
    if (num_.is_zero()) {
      a_ = b_ = 0;
      return;
    }
    while (a_ > 0) {
      auto q = num_.deflated(-1);
      if (!q) break;
      num_ = std::move(*q);
      --a_;
    }
    while (b_ > 0) {
      auto q = num_.deflated(1);
      if (!q) break;
      num_ = std::move(*q);
      --b_;
    }
  }

  Laurent num_;
  unsigned a_ = 0;
  unsigned b_ = 0;
};

inline bool is_zero(const Localized& x) { return x.is_zero(); }

}  // namespace tihecke
