#pragma once

#include <cstdint>
#include <span>

#include "tihecke/coxeter.hpp"
#include "tihecke/errors.hpp"
#include "tihecke/laurent.hpp"
#include "tihecke/lincomb.hpp"
#include "tihecke/localized.hpp"

namespace tihecke {

struct HeckeTag {};

// Element of the Hecke algebra with parameter u^2 in the standard basis
// {T_w}, keyed by group index.
template <class R>
using HeckeElt = LinComb<R, HeckeTag>;

template <class R>
R scalar_from(const Laurent& p) = delete;
template <>
inline Laurent scalar_from<Laurent>(const Laurent& p) {
  return p;
}
template <>
inline Localized scalar_from<Localized>(const Laurent& p) {
  return Localized(p);
}

// T_s * T_w = T_{sw} when l(sw) > l(w), else (u^2-1) T_w + u^2 T_{sw}.
template <class R>
HeckeElt<R> mult_Ts_left(const GroupTable& W, int s, const HeckeElt<R>& h) {
  static const Laurent u2 = Laurent::u(2);
  static const Laurent u2m1 = Laurent::u(2) - Laurent(1);
  HeckeElt<R> out;
  for (const auto& [w, c] : h.terms()) {
    std::int32_t sw = W.lmul(s, w);
    if (sw == npos) fail(errc::truncated_table, "Hecke product leaves the enumerated ball");
    if (W.length(sw) > W.length(w)) {
      out.add_term(sw, c);
    } else {
      out.add_term(w, scalar_from<R>(u2m1) * c);
      out.add_term(sw, scalar_from<R>(u2) * c);
    }
  }
  return out;
}

// T_w * h along the canonical reduced word of w (last letter acts first).
template <class R>
HeckeElt<R> mult_Tw_left(const GroupTable& W, std::int32_t w, HeckeElt<R> h) {
  const auto& word = W.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = mult_Ts_left(W, *it, h);
  return h;
}

template <class R>
HeckeElt<R> mult_word_left(const GroupTable& W, std::span<const std::uint8_t> word, HeckeElt<R> h) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = mult_Ts_left(W, *it, h);
  return h;
}

// X_empty = sum over star-fixed x of u^{-l(x)} T_x. Refuses truncated tables
// unless the caller explicitly accepts the cutoff approximation.
template <class R>
HeckeElt<R> x_empty(const GroupTable& W, bool allow_truncated = false) {
  if (W.truncated() && !allow_truncated)
    fail(errc::truncated_table, "X_empty of a length-cutoff table requires allow_truncated");
  HeckeElt<R> out;
  for (std::int32_t x : W.star_fixed()) out.set(x, scalar_from<R>(Laurent::u(-W.length(x))));
  return out;
}

}  // namespace tihecke
