#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace tihecke {

inline bool is_zero(long long v) { return v == 0; }

// Sparse linear combination over scalar ring R, keyed by basis index. The
// Tag parameter keeps Hecke-basis and a-basis vectors from mixing.
template <class R, class Tag>
class LinComb {
 public:
  using map_type = std::map<std::int32_t, R>;

  LinComb() = default;

  static LinComb unit(std::int32_t key, R coeff = R(1)) {
    LinComb v;
    v.set(key, std::move(coeff));
    return v;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }

  R coeff(std::int32_t key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? R(0) : it->second;
  }

  void set(std::int32_t key, R coeff) {
    if (is_zero(coeff))
      terms_.erase(key);
    else
      terms_[key] = std::move(coeff);
  }

  void add_term(std::int32_t key, const R& coeff) {
    if (is_zero(coeff)) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb operator-() const {
    LinComb r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  friend LinComb operator*(const R& c, const LinComb& v) {
    LinComb r;
    for (const auto& [k, x] : v.terms_) {
      R p = c * x;
      if (!is_zero(p)) r.terms_.emplace(k, std::move(p));
    }
    return r;
  }

  void add_scaled(const R& c, const LinComb& v) {
    for (const auto& [k, x] : v.terms_) add_term(k, c * x);
  }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

 private:
  map_type terms_;
};

}  // namespace tihecke
