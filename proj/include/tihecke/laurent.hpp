#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tihecke/errors.hpp"

namespace tihecke {

using Int = boost::multiprecision::cpp_int;

// Integer-coefficient Laurent polynomial in u, stored sparsely as a map from
// exponent to nonzero coefficient. The empty map is zero.
class Laurent {
 public:
  using terms_type = std::map<int, Int>;

  Laurent() = default;
  Laurent(long c) { set(0, Int(c)); }  // NOLINT(google-explicit-constructor)
  explicit Laurent(Int c) { set(0, std::move(c)); }

  static Laurent monomial(Int coeff, int exp) {
    Laurent p;
    p.set(exp, std::move(coeff));
    return p;
  }
  // u^exp
  static Laurent u(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  const terms_type& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  // Lowest/highest exponent with nonzero coefficient; callers must check is_zero first.
  int min_exp() const {
    if (is_zero()) fail(errc::internal, "min_exp of zero polynomial");
    return terms_.begin()->first;
  }
  int max_exp() const {
    if (is_zero()) fail(errc::internal, "max_exp of zero polynomial");
    return terms_.rbegin()->first;
  }

  void set(int exp, Int coeff) {
    if (coeff == 0)
      terms_.erase(exp);
    else
      terms_[exp] = std::move(coeff);
  }

  void add_term(int exp, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // Multiplication by u^k.
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  Laurent pow(unsigned n) const {
    Laurent r(1);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  // The bar involution: c*u^n -> c*(-u)^{-n}.
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, (e % 2 == 0) ? c : -c);
    return r;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // True iff every exponent is >= 0 (the polynomial lies in Z[u]).
  bool is_polynomial_in_u() const { return is_zero() || min_exp() >= 0; }
  // True iff every exponent is <= 0 (lies in Z[u^{-1}]).
  bool is_polynomial_in_u_inverse() const { return is_zero() || max_exp() <= 0; }

  // Coefficient of u^0, defined only on Z[u^{-1}].
  Int at_u_inverse_zero() const {
    if (!is_polynomial_in_u_inverse())
      fail(errc::positive_exponent_present, "u^" + std::to_string(max_exp()) + " present in " + to_string());
    return coeff(0);
  }

  // Exact quotient by (u - root) with root in {1,-1}, or nullopt if not divisible.
  std::optional<Laurent> deflated(int root) const {
    if (is_zero()) return Laurent{};
    const int lo = min_exp(), hi = max_exp();
    if (lo == hi) return std::nullopt;  // a monomial is never divisible by (u -+ 1)
    std::vector<Int> a(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : terms_) a[static_cast<std::size_t>(e - lo)] = c;
    // p = u^lo * P(u) with P(0) != 0; (u - root) divides p iff it divides P.
    std::vector<Int> b(a.size() - 1);
    // P = (u - root) * Q: a_0 = -root*b_0; a_i = b_{i-1} - root*b_i; a_d = b_{d-1}.
    b[0] = -root * a[0];  // root^2 == 1
    for (std::size_t i = 1; i + 1 < a.size(); ++i) b[i] = -root * (a[i] - b[i - 1]);
    if (a.back() != b.back()) return std::nullopt;
    Laurent q;
    for (std::size_t i = 0; i < b.size(); ++i) q.set(lo + static_cast<int>(i), b[i]);
    return q;
  }

  // Exact division in Z[u,u^{-1}]; nullopt when the quotient does not exist.
  friend std::optional<Laurent> exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "exact_div by zero");
    if (a.is_zero()) return Laurent{};
    const int ma = a.min_exp(), mb = b.min_exp();
    const int da = a.max_exp() - ma, db = b.max_exp() - mb;
    if (da < db) return std::nullopt;
    std::vector<Int> rem(static_cast<std::size_t>(da + 1)), bb(static_cast<std::size_t>(db + 1));
    for (const auto& [e, c] : a.terms_) rem[static_cast<std::size_t>(e - ma)] = c;
    for (const auto& [e, c] : b.terms_) bb[static_cast<std::size_t>(e - mb)] = c;
    const Int& lead = bb.back();
    std::vector<Int> q(static_cast<std::size_t>(da - db + 1));
    for (int k = da - db; k >= 0; --k) {
      Int& top = rem[static_cast<std::size_t>(k + db)];
      if (top == 0) continue;
      Int qk = top / lead;
      if (qk * lead != top) return std::nullopt;
      q[static_cast<std::size_t>(k)] = qk;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= qk * bb[static_cast<std::size_t>(j)];
    }
    for (const Int& c : rem)
      if (c != 0) return std::nullopt;
    Laurent out;
    for (std::size_t i = 0; i < q.size(); ++i) out.set(ma - mb + static_cast<int>(i), q[i]);
    return out;
  }

  // Monomials ascending by exponent, e.g. "u^{-1}+1-u".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      Int abs = c < 0 ? Int(-c) : c;
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? "-" : "+";
      }
      if (e == 0) {
        s += abs.str();
      } else {
        if (abs != 1) s += abs.str() + "*";
        s += e == 1 ? "u" : "u^{" + std::to_string(e) + "}";
      }
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

 private:
  terms_type terms_;
};

inline bool is_zero(const Laurent& p) { return p.is_zero(); }

// u + 1 and u - 1, the two deflation divisors of the localizations.
inline const Laurent& u_plus_1() {
  static const Laurent p = Laurent::u() + Laurent(1);
  return p;
}
inline const Laurent& u_minus_1() {
  static const Laurent p = Laurent::u() - Laurent(1);
  return p;
}

}  // namespace tihecke
