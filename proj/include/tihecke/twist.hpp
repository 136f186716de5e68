#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tihecke/coxeter.hpp"
#include "tihecke/errors.hpp"

namespace tihecke {

// s |x w = sw when sw = ws*, else sws*. w must be a twisted involution.
inline std::int32_t twist_product(const GroupTable& W, int s, std::int32_t w) {
  if (W.star(w) != W.inverse(w))
    fail(errc::not_twisted_involution, W.word_name(w) + " does not satisfy w* = w^{-1}");
  std::int32_t sw = W.lmul(s, w);
  std::int32_t ws = W.rmul(w, W.star_gen(s));
  if (sw == npos || ws == npos) fail(errc::truncated_table, "twist product leaves the enumerated ball");
  if (sw == ws) return sw;
  std::int32_t out = W.rmul(sw, W.star_gen(s));
  if (out == npos) fail(errc::truncated_table, "twist product leaves the enumerated ball");
  return out;
}

struct TwistEntry {
  std::int32_t group_index;
  int rho;
  int ell_star;
  int eps;                               // (-1)^rho
  std::vector<std::uint8_t> expr;        // canonical (ShortLex-least) reduced I*-expression
  std::int32_t sigma;                    // group index of sigma_z = product of expr
  std::vector<std::uint8_t> completion;  // reduced word of z extending expr
};

// Enumerated set of twisted involutions, indexed by BFS order under the
// twist product (which sorts by rho).
class TwistTable {
 public:
  std::int32_t size() const { return static_cast<std::int32_t>(entries_.size()); }
  const TwistEntry& entry(std::int32_t z) const { return entries_[z]; }
  const std::vector<TwistEntry>& entries() const { return entries_; }

  // Twist index of a group element, or npos if it is not in I*.
  std::int32_t index_of_group(std::int32_t w) const { return group_to_twist_[w]; }
  bool contains_group(std::int32_t w) const { return group_to_twist_[w] != npos; }

  std::int32_t group_index(std::int32_t z) const { return entries_[z].group_index; }
  int rho(std::int32_t z) const { return entries_[z].rho; }
  int ell_star(std::int32_t z) const { return entries_[z].ell_star; }
  int eps(std::int32_t z) const { return entries_[z].eps; }
  std::int32_t sigma(std::int32_t z) const { return entries_[z].sigma; }

  friend TwistTable enumerate_twisted(const GroupTable& W);

 private:
  std::vector<TwistEntry> entries_;
  std::vector<std::int32_t> group_to_twist_;
};

// Generators s whose twist product lowers rho, i.e. l(sz) < l(z) (Lemma on
// the rank function: rho(s |x z) = rho(z) - 1 iff l(sz) = l(z) - 1).
inline std::vector<int> twist_descents(const GroupTable& W, std::int32_t z_group) {
  std::vector<int> out;
  for (int s = 0; s < W.rank(); ++s) {
    std::int32_t sz = W.lmul(s, z_group);
    if (sz != npos && W.length(sz) < W.length(z_group)) out.push_back(s);
  }
  return out;
}

namespace detail {

// Unwinds the canonical expression: expr applied innermost-first, recording
// at each peel whether the single-letter branch (sw = ws*) fired.
inline int count_commuting_steps(const GroupTable& W, std::int32_t z_group, std::span<const std::uint8_t> expr) {
  int count = 0;
  std::int32_t cur = z_group;
  for (auto s : expr) {
    cur = twist_product(W, s, cur);
    std::int32_t scur = W.lmul(s, cur);
    std::int32_t curs = W.rmul(cur, W.star_gen(s));
    if (scur == curs) ++count;
  }
  return count;
}

// Reduced word of the element of a reduced I*-expression, per the
// truncation lemma: the twist letter is kept, and the sws* branch appends
// the starred letter after the inner word.
inline std::vector<std::uint8_t> completion_of_expr(const GroupTable& W, std::span<const std::uint8_t> expr) {
  if (expr.empty()) return {};
  const int s = expr[0];
  // Element of the tail expression.
  std::int32_t inner = 0;
  for (auto it = expr.rbegin(); it != expr.rend() - 1; ++it) inner = twist_product(W, *it, inner);
  std::vector<std::uint8_t> rest = completion_of_expr(W, expr.subspan(1));
  std::vector<std::uint8_t> out;
  out.reserve(rest.size() + 2);
  out.push_back(static_cast<std::uint8_t>(s));
  out.insert(out.end(), rest.begin(), rest.end());
  std::int32_t si = W.lmul(s, inner);
  std::int32_t is = W.rmul(inner, W.star_gen(s));
  if (si != is) out.push_back(static_cast<std::uint8_t>(W.star_gen(s)));
  return out;
}

}  // namespace detail

inline TwistTable enumerate_twisted(const GroupTable& W) {
  if (W.truncated()) fail(errc::truncated_table, "twisted involutions require a fully enumerated group");
  TwistTable T;
  T.group_to_twist_.assign(W.size(), npos);

  // BFS from the identity through the twist product.
  std::vector<std::int32_t> order{0};
  std::vector<int> rho{0};
  T.group_to_twist_[0] = 0;
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(order.size()); ++i) {
    for (int s = 0; s < W.rank(); ++s) {
      std::int32_t nxt = twist_product(W, s, order[i]);
      if (T.group_to_twist_[nxt] != npos) continue;
      T.group_to_twist_[nxt] = static_cast<std::int32_t>(order.size());
      order.push_back(nxt);
      rho.push_back(rho[i] + 1);
    }
  }

  // Reachability must agree with the defining condition w* = w^{-1}.
  for (std::int32_t w = 0; w < W.size(); ++w) {
    const bool is_twisted = W.star(w) == W.inverse(w);
    if (is_twisted != (T.group_to_twist_[w] != npos))
      fail(errc::internal, "twist BFS missed " + W.word_name(w));
  }

  T.entries_.resize(order.size());
  for (std::int32_t z = 0; z < static_cast<std::int32_t>(order.size()); ++z) {
    TwistEntry& e = T.entries_[z];
    e.group_index = order[z];
    e.rho = rho[z];
    e.eps = (e.rho % 2 == 0) ? 1 : -1;

    // Canonical expression: repeatedly peel the least twist descent.
    std::int32_t cur = e.group_index;
    while (cur != 0) {
      auto desc = twist_descents(W, cur);
      e.expr.push_back(static_cast<std::uint8_t>(desc.front()));
      cur = twist_product(W, desc.front(), cur);
    }
    if (static_cast<int>(e.expr.size()) != e.rho)
      fail(errc::internal, "descent walk length disagrees with BFS depth at " + W.word_name(e.group_index));

    e.ell_star = detail::count_commuting_steps(W, e.group_index, e.expr);
    e.sigma = W.element_of_word(e.expr);
    if (W.length(e.sigma) != e.rho)
      fail(errc::internal, "sigma_z is not reduced at " + W.word_name(e.group_index));

    e.completion = detail::completion_of_expr(W, e.expr);
    if (static_cast<int>(e.completion.size()) != W.length(e.group_index) ||
        W.element_of_word(e.completion) != e.group_index)
      fail(errc::internal, "completion word mismatch at " + W.word_name(e.group_index));
  }
  return T;
}

// Checks that expr is a reduced I*-expression for z (every step raises rho)
// and returns the number of commuting steps; independent of the expression.
inline int ell_star_of_expr(const GroupTable& W, const TwistTable& T, std::int32_t z, std::span<const std::uint8_t> expr) {
  std::int32_t cur = 0;
  int r = 0;
  for (auto it = expr.rbegin(); it != expr.rend(); ++it) {
    std::int32_t nxt = twist_product(W, *it, cur);
    if (T.rho(T.index_of_group(nxt)) != r + 1)
      fail(errc::not_reduced_expression, "step " + std::to_string(*it + 1) + " does not raise rho");
    cur = nxt;
    ++r;
  }
  if (cur != T.group_index(z))
    fail(errc::not_reduced_expression, "expression yields " + W.word_name(cur) + ", not " +
                                           W.word_name(T.group_index(z)));
  return detail::count_commuting_steps(W, cur, expr);
}

inline std::vector<std::uint8_t> completion_word(const GroupTable& W, std::span<const std::uint8_t> expr) {
  return detail::completion_of_expr(W, expr);
}

// One random reduced I*-expression of z, built by a seeded descent walk.
inline std::vector<std::uint8_t> sample_reduced_expr(const GroupTable& W, std::int32_t z_group, std::mt19937_64& rng) {
  std::vector<std::uint8_t> expr;
  std::int32_t cur = z_group;
  while (cur != 0) {
    auto desc = twist_descents(W, cur);
    int pick = desc[std::uniform_int_distribution<std::size_t>(0, desc.size() - 1)(rng)];
    expr.push_back(static_cast<std::uint8_t>(pick));
    cur = twist_product(W, pick, cur);
  }
  return expr;
}

// Number of reduced I*-expressions of every z (DP over descents).
inline std::vector<unsigned long long> count_reduced_exprs(const GroupTable& W, const TwistTable& T) {
  std::vector<unsigned long long> cnt(T.size(), 0);
  cnt[0] = 1;
  for (std::int32_t z = 1; z < T.size(); ++z)
    for (int s : twist_descents(W, T.group_index(z))) {
      std::int32_t down = T.index_of_group(twist_product(W, s, T.group_index(z)));
      cnt[z] += cnt[down];
    }
  return cnt;
}

// All reduced I*-expressions of z, capped (DFS over descent trees).
inline void all_reduced_exprs(const GroupTable& W, std::int32_t z_group, std::size_t cap,
                              std::vector<std::uint8_t>& prefix, std::vector<std::vector<std::uint8_t>>& out) {
  if (out.size() >= cap) return;
  if (z_group == 0) {
    out.push_back(prefix);
    return;
  }
  for (int s : twist_descents(W, z_group)) {
    prefix.push_back(static_cast<std::uint8_t>(s));
    all_reduced_exprs(W, twist_product(W, s, z_group), cap, prefix, out);
    prefix.pop_back();
    if (out.size() >= cap) return;
  }
}

inline std::vector<std::vector<std::uint8_t>> all_reduced_exprs(const GroupTable& W, std::int32_t z_group,
                                                                std::size_t cap = 100000) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> prefix;
  all_reduced_exprs(W, z_group, cap, prefix, out);
  return out;
}

// For each z, the set of group elements sigma'_z over all reduced
// I*-expressions sigma' of z. Computed by the layer DP
// Sigma(z) = union over descents s of s * Sigma(s |x z).
inline std::vector<std::vector<std::int32_t>> sigma_value_sets(const GroupTable& W, const TwistTable& T) {
  std::vector<std::vector<std::int32_t>> sets(T.size());
  sets[0] = {0};
  for (std::int32_t z = 1; z < T.size(); ++z) {
    std::vector<std::int32_t> acc;
    for (int s : twist_descents(W, T.group_index(z))) {
      std::int32_t down = T.index_of_group(twist_product(W, s, T.group_index(z)));
      for (std::int32_t v : sets[down]) acc.push_back(W.lmul(s, v));
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    sets[z] = std::move(acc);
  }
  return sets;
}

}  // namespace tihecke
