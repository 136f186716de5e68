#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tihecke/coxeter.hpp"
#include "tihecke/errors.hpp"
#include "tihecke/hecke.hpp"
#include "tihecke/laurent.hpp"
#include "tihecke/lincomb.hpp"
#include "tihecke/localized.hpp"
#include "tihecke/twist.hpp"

namespace tihecke {

struct ModuleTag {};

// Element of the involution module in the basis {a_z}, keyed by twist index.
template <class R>
using ModuleElt = LinComb<R, ModuleTag>;

// The four-case action of T_s on the a-basis:
//   sw = ws* > w:  u a_w + (u+1) a_{sw}
//   sw = ws* < w:  (u^2-u-1) a_w + (u^2-u) a_{sw}
//   sw != ws* > w: a_{sws*}
//   sw != ws* < w: (u^2-1) a_w + u^2 a_{sws*}
// where >/< compares l(sw) against l(w).
template <class R>
ModuleElt<R> act_Ts(const GroupTable& W, const TwistTable& T, int s, const ModuleElt<R>& m) {
  static const Laurent c_u = Laurent::u();
  static const Laurent c_up1 = Laurent::u() + Laurent(1);
  static const Laurent c_u2mum1 = Laurent::u(2) - Laurent::u() - Laurent(1);
  static const Laurent c_u2mu = Laurent::u(2) - Laurent::u();
  static const Laurent c_u2m1 = Laurent::u(2) - Laurent(1);
  static const Laurent c_u2 = Laurent::u(2);

  ModuleElt<R> out;
  for (const auto& [z, c] : m.terms()) {
    const std::int32_t w = T.group_index(z);
    const std::int32_t sw = W.lmul(s, w);
    const std::int32_t ws = W.rmul(w, W.star_gen(s));
    const bool ascent = W.length(sw) > W.length(w);
    if (sw == ws) {
      const std::int32_t tz = T.index_of_group(sw);
      if (ascent) {
        out.add_term(z, scalar_from<R>(c_u) * c);
        out.add_term(tz, scalar_from<R>(c_up1) * c);
      } else {
        out.add_term(z, scalar_from<R>(c_u2mum1) * c);
        out.add_term(tz, scalar_from<R>(c_u2mu) * c);
      }
    } else {
      const std::int32_t tz = T.index_of_group(W.rmul(sw, W.star_gen(s)));
      if (ascent) {
        out.add_term(tz, c);
      } else {
        out.add_term(z, scalar_from<R>(c_u2m1) * c);
        out.add_term(tz, scalar_from<R>(c_u2) * c);
      }
    }
  }
  return out;
}

template <class R>
ModuleElt<R> act_word(const GroupTable& W, const TwistTable& T, std::span<const std::uint8_t> word, ModuleElt<R> m) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = act_Ts(W, T, *it, m);
  return m;
}

// Structure polynomials of T_x a_1 = sum_z L_z^x a_z, with the bar-sign
// twists Ltilde, the u^{-1}-leading integers n_z^x, and the fibration pi.
class LTable {
 public:
  using Row = ModuleElt<Laurent>;

  const Row& row(std::int32_t x) const { return rows_[x]; }            // L_z^x over z
  const Row& ltilde_row(std::int32_t x) const { return ltilde_[x]; }   // Ltilde_z^x over z
  std::int32_t pi(std::int32_t x) const { return pi_[x]; }             // twist index
  std::int32_t size() const { return static_cast<std::int32_t>(rows_.size()); }

  Laurent L(std::int32_t x, std::int32_t z) const { return rows_[x].coeff(z); }
  Laurent Ltilde(std::int32_t x, std::int32_t z) const { return ltilde_[x].coeff(z); }
  // n_z^x = Ltilde_z^x at u^{-1} = 0; either 0 or 1, with 1 exactly at pi(x).
  int n(std::int32_t x, std::int32_t z) const { return z == pi_[x] ? 1 : 0; }

  // Derives Ltilde, n and pi from raw L rows, validating that every entry
  // lies in Z[u] and that the u^{-1}-leading integers are {0,1}-unique.
  static LTable from_rows(const GroupTable& W, const TwistTable& T, std::vector<Row> rows) {
    if (static_cast<std::int32_t>(rows.size()) != W.size())
      fail(errc::bad_io, "row count " + std::to_string(rows.size()) + " != |W| = " + std::to_string(W.size()));
    LTable L;
    L.rows_ = std::move(rows);
    L.ltilde_.resize(W.size());
    L.pi_.assign(W.size(), npos);
    for (std::int32_t x = 0; x < W.size(); ++x) {
      const int xsign = W.length(x) % 2 == 0 ? 1 : -1;
      Row lt;
      std::int32_t pi = npos;
      for (const auto& [z, poly] : L.rows_[x].terms()) {
        if (!poly.is_polynomial_in_u())
          fail(errc::not_polynomial, "L_{" + W.word_name(T.group_index(z)) + "}^{" + W.word_name(x) +
                                         "} = " + poly.to_string() + " is not in Z[u]");
        Laurent tl = poly.bar();
        if (xsign * T.eps(z) < 0) tl = -tl;
        const Int head = tl.at_u_inverse_zero();
        if (head != 0) {
          if (head != 1 || pi != npos)
            fail(errc::pi_not_unique, "n_z^x not {0,1}-unique at x=" + W.word_name(x));
          pi = z;
        }
        lt.set(z, std::move(tl));
      }
      if (pi == npos) fail(errc::pi_not_unique, "no z with n_z^x = 1 at x=" + W.word_name(x));
      L.ltilde_[x] = std::move(lt);
      L.pi_[x] = pi;
    }
    return L;
  }

 private:
  std::vector<Row> rows_;
  std::vector<Row> ltilde_;
  std::vector<std::int32_t> pi_;
};

inline LTable compute_L_table(const GroupTable& W, const TwistTable& T) {
  // Indices are sorted by length, so the length-(l-1) prefix row of the
  // canonical word is always available.
  std::vector<LTable::Row> rows(W.size());
  rows[0] = LTable::Row::unit(0);
  for (std::int32_t x = 1; x < W.size(); ++x) {
    const int s = W.word(x).front();
    const std::int32_t prefix = W.lmul(s, x);
    rows[x] = act_Ts(W, T, s, rows[prefix]);
  }
  return LTable::from_rows(W, T, std::move(rows));
}

// mu(a_z) = sum_x Ltilde_z^x T_x (column z of the Ltilde table).
inline HeckeElt<Laurent> mu_of_az(const LTable& L, std::int32_t z) {
  HeckeElt<Laurent> out;
  for (std::int32_t x = 0; x < L.size(); ++x) {
    Laurent c = L.Ltilde(x, z);
    if (!c.is_zero()) out.set(x, std::move(c));
  }
  return out;
}

// Linear extension of z -> mu(a_z) to arbitrary module elements.
template <class R>
HeckeElt<R> mu(const LTable& L, const ModuleElt<R>& m) {
  HeckeElt<R> out;
  for (const auto& [z, c] : m.terms()) {
    const HeckeElt<Laurent> col = mu_of_az(L, z);
    for (const auto& [x, lt] : col.terms()) out.add_term(x, c * scalar_from<R>(lt));
  }
  return out;
}

struct XiTag {};
// Coefficients of a_z = sum_w xi_z^w T_{sigma_w} a_1, keyed by twist index w.
using XiRow = LinComb<Localized, XiTag>;

// Inverts the triangular relation T_{sigma_z} a_1 = (u+1)^{l*(z)} a_z + ...
// by back-substitution up the rho-filtration. Every coefficient must land
// in A_{-1}.
inline std::vector<XiRow> compute_xi_table(const GroupTable& W, const TwistTable& T, const LTable& L) {
  std::vector<XiRow> xi(T.size());
  for (std::int32_t z = 0; z < T.size(); ++z) {
    const auto& lrow = L.row(T.sigma(z));
    const Laurent lead = lrow.coeff(z);
    if (lead != u_plus_1().pow(static_cast<unsigned>(T.ell_star(z))))
      fail(errc::internal, "leading coefficient of T_{sigma_z} a_1 is " + lead.to_string() + " at z=" +
                               W.word_name(T.group_index(z)));
    XiRow row = XiRow::unit(z);
    for (const auto& [w, c] : lrow.terms()) {
      if (w == z) continue;
      if (w > z) fail(errc::internal, "support above rho filtration at z=" + W.word_name(T.group_index(z)));
      row.add_scaled(-Localized(c), xi[w]);
    }
    const Localized leadinv = Localized::inverse_denominator(static_cast<unsigned>(T.ell_star(z)), 0);
    XiRow scaled;
    for (const auto& [w, c] : row.terms()) {
      Localized v = leadinv * c;
      if (!v.in_A_minus1())
        fail(errc::denominator_outside_A_minus1,
             "xi_{" + W.word_name(T.group_index(z)) + "}^{" + W.word_name(T.group_index(w)) + "} = " + v.to_string());
      scaled.set(w, std::move(v));
    }
    xi[z] = std::move(scaled);
  }
  return xi;
}

// Expansion of a single a_z in the {T_{sigma_w} a_1} basis.
inline XiRow express_az_in_Tsigma(const GroupTable& W, const TwistTable& T, const LTable& L, std::int32_t z) {
  return compute_xi_table(W, T, L)[z];
}

// The u = 0 degeneration: T_s a_w = a_{sw} if sw = ws* > w, a_{sws*} if
// sw != ws* > w, and -a_w if sw < w.
inline ModuleElt<long long> zero_hecke_act(const GroupTable& W, const TwistTable& T, int s,
                                           const ModuleElt<long long>& m) {
  ModuleElt<long long> out;
  for (const auto& [z, c] : m.terms()) {
    const std::int32_t w = T.group_index(z);
    const std::int32_t sw = W.lmul(s, w);
    const std::int32_t ws = W.rmul(w, W.star_gen(s));
    if (W.length(sw) < W.length(w)) {
      out.add_term(z, -c);
    } else if (sw == ws) {
      out.add_term(T.index_of_group(sw), c);
    } else {
      out.add_term(T.index_of_group(W.rmul(sw, W.star_gen(s))), c);
    }
  }
  return out;
}

inline ModuleElt<long long> zero_hecke_act_word(const GroupTable& W, const TwistTable& T,
                                                std::span<const std::uint8_t> word, ModuleElt<long long> m) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = zero_hecke_act(W, T, *it, m);
  return m;
}

}  // namespace tihecke
