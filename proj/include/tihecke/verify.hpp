#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tihecke/coxeter.hpp"
#include "tihecke/errors.hpp"
#include "tihecke/field.hpp"
#include "tihecke/hecke.hpp"
#include "tihecke/invmod.hpp"
#include "tihecke/linalg.hpp"
#include "tihecke/twist.hpp"

namespace tihecke {

struct CheckReport {
  std::string check;
  std::string group;
  bool pass = false;
  std::string witness;  // concrete counterexample when failed
  std::string detail;   // summary statistics when passed
  double wall_ms = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::optional<FieldScalar> lambda;  // single specialization point; default is the 20-value battery
  long full_determinant_limit = 48;   // purity computes the full |W| x |W| determinant up to here
};

// Immutable bundle of the tables every check reads.
struct VerifyContext {
  GroupTable W;
  TwistTable T;
  LTable L;

  static VerifyContext build(const CoxeterSpec& spec, const EnumerateOptions& opts = {}) {
    VerifyContext ctx{enumerate_group(spec, opts), {}, {}};
    ctx.T = enumerate_twisted(ctx.W);
    ctx.L = compute_L_table(ctx.W, ctx.T);
    return ctx;
  }

  std::string zname(std::int32_t z) const { return W.word_name(T.group_index(z)); }
};

// The 20-value specialization battery: fixed rationals plus seeded residues
// in F_5, F_7 and F_101.
inline std::vector<FieldScalar> default_lambdas(std::uint64_t seed) {
  std::vector<FieldScalar> out;
  const std::pair<long, long> rats[] = {{2, 1},  {-2, 1}, {1, 2},  {-1, 2}, {3, 1},  {-3, 1},
                                        {1, 3},  {-1, 3}, {5, 7},  {-5, 7}, {7, 5},  {-7, 5}};
  for (auto [n, d] : rats) out.push_back(FieldScalar::rational(n, d));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::pair<long, int> primes[] = {{5, 2}, {7, 3}, {101, 3}};
  for (auto [p, count] : primes) {
    std::uniform_int_distribution<long> pick(2, p - 2);
    for (int i = 0; i < count; ++i) out.push_back(FieldScalar::residue(pick(rng), p));
  }
  return out;
}

namespace checks {

using Body = std::function<void(const VerifyContext&, const VerifyOptions&, CheckReport&)>;

inline CheckReport run_body(const std::string& name, const VerifyContext& ctx, const VerifyOptions& opts,
                            const Body& body) {
  CheckReport rep;
  rep.check = name;
  rep.group = ctx.W.spec().display_name();
  rep.pass = true;
  const auto t0 = std::chrono::steady_clock::now();
  body(ctx, opts, rep);
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline void set_fail(CheckReport& rep, std::string witness) {
  if (!rep.pass) return;  // keep the first witness
  rep.pass = false;
  rep.witness = std::move(witness);
}

// rho(z) = (l(z) + l*(z)) / 2 for every twisted involution.
inline void rho_formula(const VerifyContext& ctx, const VerifyOptions&, CheckReport& rep) {
  for (const auto& e : ctx.T.entries())
    if (2 * e.rho != ctx.W.length(e.group_index) + e.ell_star)
      set_fail(rep, "z=" + ctx.W.word_name(e.group_index) + " rho=" + std::to_string(e.rho) + " l=" +
                        std::to_string(ctx.W.length(e.group_index)) + " l*=" + std::to_string(e.ell_star));
  rep.detail = std::to_string(ctx.T.size()) + " twisted involutions";
}

// The twist-product BFS reaches exactly {w : w* = w^{-1}}.
inline void twist_closure(const VerifyContext& ctx, const VerifyOptions&, CheckReport& rep) {
  for (std::int32_t w = 0; w < ctx.W.size(); ++w) {
    const bool defining = ctx.W.star(w) == ctx.W.inverse(w);
    if (defining != ctx.T.contains_group(w))
      set_fail(rep, "w=" + ctx.W.word_name(w) + (defining ? " satisfies" : " violates") +
                        " w*=w^{-1} but BFS says otherwise");
  }
  rep.detail = "|I*| = " + std::to_string(ctx.T.size()) + " of |W| = " + std::to_string(ctx.W.size());
}

// Quadratic and braid relations as operators on every basis vector of M.
inline void action(const VerifyContext& ctx, const VerifyOptions&, CheckReport& rep) {
  const GroupTable& W = ctx.W;
  const TwistTable& T = ctx.T;
  for (std::int32_t z = 0; z < T.size() && rep.pass; ++z) {
    const auto az = ModuleElt<Laurent>::unit(z);
    for (int s = 0; s < W.rank(); ++s) {
      auto twice = act_Ts(W, T, s, act_Ts(W, T, s, az));
      auto via = (Laurent::u(2) - Laurent(1)) * act_Ts(W, T, s, az) + Laurent::u(2) * az;
      if (twice != via) set_fail(rep, "quadratic relation fails at s=" + std::to_string(s + 1) + " z=" + ctx.zname(z));
    }
    for (int i = 0; i < W.rank(); ++i)
      for (int j = i + 1; j < W.rank(); ++j) {
        const int m = W.spec().matrix[i][j];
        if (m == 0) continue;
        std::vector<std::uint8_t> left, right;
        for (int k = 0; k < m; ++k) {
          left.push_back(static_cast<std::uint8_t>(k % 2 == 0 ? i : j));
          right.push_back(static_cast<std::uint8_t>(k % 2 == 0 ? j : i));
        }
        if (act_word(W, T, left, az) != act_word(W, T, right, az))
          set_fail(rep, "braid relation fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") z=" + ctx.zname(z));
      }
  }
  rep.detail = "quadratic and braid relations on " + std::to_string(ctx.T.size()) + " basis vectors";
}

// T_{sigma_z} a_1 = (u+1)^{l*(z)} a_z + terms in u Z[u] supported on w with
// rho(w) < rho(z) admitting sigma'_w < sigma_z in Bruhat order.
inline void triangular(const VerifyContext& ctx, const VerifyOptions&, CheckReport& rep) {
  const auto sigma_sets = sigma_value_sets(ctx.W, ctx.T);
  for (std::int32_t z = 0; z < ctx.T.size(); ++z) {
    const auto& row = ctx.L.row(ctx.T.sigma(z));
    const Laurent expect_lead = u_plus_1().pow(static_cast<unsigned>(ctx.T.ell_star(z)));
    if (row.coeff(z) != expect_lead)
      set_fail(rep, "z=" + ctx.zname(z) + " leading coefficient " + row.coeff(z).to_string() + " != " +
                        expect_lead.to_string());
    for (const auto& [w, poly] : row.terms()) {
      if (w == z) continue;
      if (ctx.T.rho(w) >= ctx.T.rho(z))
        set_fail(rep, "z=" + ctx.zname(z) + " support at w=" + ctx.zname(w) + " with rho(w) >= rho(z)");
      if (!poly.is_polynomial_in_u() || poly.coeff(0) != 0)
        set_fail(rep, "z=" + ctx.zname(z) + " w=" + ctx.zname(w) + " coefficient " + poly.to_string() +
                          " is not in u*Z[u]");
      bool bruhat_ok = false;
      for (std::int32_t v : sigma_sets[w])
        if (v != ctx.T.sigma(z) && ctx.W.bruhat_leq(v, ctx.T.sigma(z))) {
          bruhat_ok = true;
          break;
        }
      if (!bruhat_ok)
        set_fail(rep, "z=" + ctx.zname(z) + " w=" + ctx.zname(w) + " has no reduced expression with sigma'_w < sigma_z");
    }
  }
  rep.detail = "triangularity over " + std::to_string(ctx.T.size()) + " rows";
}

// Rows of two reduced I*-expressions of the same z differ by u Z[u] terms
// below the rho filtration.
inline void sigma_congruence(const VerifyContext& ctx, const VerifyOptions& opts, CheckReport& rep) {
  std::mt19937_64 rng(opts.seed + 1);
  long compared = 0;
  for (std::int32_t z = 0; z < ctx.T.size(); ++z) {
    auto exprs = all_reduced_exprs(ctx.W, ctx.T.group_index(z), 16);
    for (int i = 0; i < 8; ++i) exprs.push_back(sample_reduced_expr(ctx.W, ctx.T.group_index(z), rng));
    const auto& base = ctx.L.row(ctx.T.sigma(z));
    for (const auto& expr : exprs) {
      ++compared;
      const auto diff = base - ctx.L.row(ctx.W.element_of_word(expr));
      for (const auto& [w, poly] : diff.terms()) {
        if (ctx.T.rho(w) >= ctx.T.rho(z))
          set_fail(rep, "z=" + ctx.zname(z) + " rows differ at w=" + ctx.zname(w) + " with rho(w) >= rho(z)");
        if (poly.coeff(0) != 0 || !poly.is_polynomial_in_u())
          set_fail(rep, "z=" + ctx.zname(z) + " row difference " + poly.to_string() + " not in u*Z[u]");
      }
    }
  }
  rep.detail = std::to_string(compared) + " expression pairs compared";
}

// l* is independent of the reduced I*-expression; exhaustive when few,
// otherwise 50 seeded samples.
inline void ell_star_independence(const VerifyContext& ctx, const VerifyOptions& opts, CheckReport& rep) {
  std::mt19937_64 rng(opts.seed + 2);
  const auto counts = count_reduced_exprs(ctx.W, ctx.T);
  long examined = 0;
  for (std::int32_t z = 0; z < ctx.T.size(); ++z) {
    std::vector<std::vector<std::uint8_t>> exprs;
    if (counts[z] <= 50) {
      exprs = all_reduced_exprs(ctx.W, ctx.T.group_index(z), 50);
    } else {
      for (int i = 0; i < 50; ++i) exprs.push_back(sample_reduced_expr(ctx.W, ctx.T.group_index(z), rng));
    }
    for (const auto& expr : exprs) {
      ++examined;
      int got = ell_star_of_expr(ctx.W, ctx.T, z, expr);
      if (got != ctx.T.ell_star(z))
        set_fail(rep, "z=" + ctx.zname(z) + " expression gives l*=" + std::to_string(got) + " != " +
                          std::to_string(ctx.T.ell_star(z)));
    }
  }
  rep.detail = std::to_string(examined) + " reduced expressions examined";
}

// The change of basis between {a_z} and {T_{sigma_z} a_1} is triangular with
// diagonal (u+1)^{+-l*(z)}; the two directions multiply to the identity.
inline void basis_change(const VerifyContext& ctx, const VerifyOptions&, CheckReport& rep) {
  std::vector<XiRow> xi;
  try {
    xi = compute_xi_table(ctx.W, ctx.T, ctx.L);
  } catch (const Error& e) {
    set_fail(rep, e.what());
    return;
  }
  unsigned total_ell_star = 0;
  Matrix<Laurent> forward(ctx.T.size(), std::vector<Laurent>(ctx.T.size()));
  for (std::int32_t z = 0; z < ctx.T.size(); ++z) {
    total_ell_star += static_cast<unsigned>(ctx.T.ell_star(z));
    const auto& row = ctx.L.row(ctx.T.sigma(z));
    for (const auto& [w, poly] : row.terms()) {
      forward[z][w] = poly;
      if (w > z) set_fail(rep, "forward matrix entry above the diagonal at z=" + ctx.zname(z) + " w=" + ctx.zname(w));
    }
    if (row.coeff(z) != u_plus_1().pow(static_cast<unsigned>(ctx.T.ell_star(z))))
      set_fail(rep, "forward diagonal at z=" + ctx.zname(z) + " is " + row.coeff(z).to_string());
    if (xi[z].coeff(z) != Localized::inverse_denominator(static_cast<unsigned>(ctx.T.ell_star(z)), 0))
      set_fail(rep, "inverse diagonal at z=" + ctx.zname(z) + " is " + xi[z].coeff(z).to_string());
    for (const auto& [w, v] : xi[z].terms()) {
      if (!v.in_A_minus1()) set_fail(rep, "xi at z=" + ctx.zname(z) + " w=" + ctx.zname(w) + " outside A_{-1}");
      if (w > z) set_fail(rep, "inverse matrix entry above the diagonal at z=" + ctx.zname(z));
    }
  }
  // product of the two directions
  for (std::int32_t z = 0; z < ctx.T.size() && rep.pass; ++z) {
    LinComb<Localized, ModuleTag> acc;
    for (const auto& [w, v] : xi[z].terms())
      for (const auto& [y, poly] : ctx.L.row(ctx.T.sigma(w)).terms()) acc.add_term(y, v * Localized(poly));
    LinComb<Localized, ModuleTag> unit;
    unit.set(z, Localized(1));
    if (acc != unit) set_fail(rep, "xi * forward != identity at z=" + ctx.zname(z));
  }
  // determinant of the triangular forward matrix, cross-checked by Bareiss
  const Laurent expected_det = u_plus_1().pow(total_ell_star);
  const Laurent det = bareiss_determinant(std::move(forward));
  if (det != expected_det)
    set_fail(rep, "forward determinant " + det.to_string() + " != (u+1)^" + std::to_string(total_ell_star));
  rep.detail = "determinant (u+1)^" + std::to_string(total_ell_star) + ", both triangular factors verified";
}

// mu intertwines every T_s, sends a_1 to X_empty, and {mu(a_z)} are
// A_{+-1}-independent via the triangular sigma-row submatrix.
inline void mu_isomorphism(const VerifyContext& ctx, const VerifyOptions&, CheckReport& rep) {
  for (std::int32_t z = 0; z < ctx.T.size() && rep.pass; ++z) {
    const auto az = ModuleElt<Laurent>::unit(z);
    for (int s = 0; s < ctx.W.rank(); ++s) {
      if (mu(ctx.L, act_Ts(ctx.W, ctx.T, s, az)) != mult_Ts_left(ctx.W, s, mu_of_az(ctx.L, z)))
        set_fail(rep, "mu fails to intertwine T_" + std::to_string(s + 1) + " at z=" + ctx.zname(z));
    }
  }
  if (mu_of_az(ctx.L, 0) != x_empty<Laurent>(ctx.W)) set_fail(rep, "mu(a_1) != X_empty");
  for (std::int32_t i = 0; i < ctx.T.size(); ++i) {
    const Laurent expect = (Laurent(1) - Laurent::u(-1)).pow(static_cast<unsigned>(ctx.T.ell_star(i)));
    for (std::int32_t j = 0; j < ctx.T.size(); ++j) {
      const Laurent entry = ctx.L.Ltilde(ctx.T.sigma(i), j);
      if (j == i && entry != expect && entry != -expect)
        set_fail(rep, "sigma-row diagonal at z=" + ctx.zname(i) + " is " + entry.to_string());
      if (j > i && !entry.is_zero())
        set_fail(rep, "sigma-row submatrix not triangular at (" + ctx.zname(i) + "," + ctx.zname(j) + ")");
    }
  }
  rep.detail = "intertwining, mu(a_1) = X_empty, and triangular independence certificate";
}

// Prop-2.21 shape: with rows ordered sigma_{z_1},...,sigma_{z_m} then the
// complement, the matrix A_u = [bar(L_z^x)] has a lower triangular top block
// with diagonal (1-u^{-1})^{l*(z_i)}, and D_1 A_u D_2 recovers Ltilde.
inline void au_matrix(const VerifyContext& ctx, const VerifyOptions&, CheckReport& rep) {
  const std::int32_t m = ctx.T.size();
  for (std::int32_t i = 0; i < m; ++i) {
    const std::int32_t x = ctx.T.sigma(i);
    for (std::int32_t j = 0; j < m; ++j) {
      const Laurent entry = ctx.L.L(x, j).bar();
      if (j > i && !entry.is_zero()) {
        set_fail(rep, "A_u not lower triangular at (" + ctx.zname(i) + "," + ctx.zname(j) + ")");
      }
      if (j == i) {
        const Laurent expect = (Laurent(1) - Laurent::u(-1)).pow(static_cast<unsigned>(ctx.T.ell_star(i)));
        if (entry != expect)
          set_fail(rep, "A_u diagonal at z=" + ctx.zname(i) + " is " + entry.to_string() + " != " +
                            expect.to_string());
      }
    }
  }
  // sign-diagonal factorization against Ltilde, over all rows
  for (std::int32_t x = 0; x < ctx.W.size() && rep.pass; ++x) {
    const int d1 = ctx.W.length(x) % 2 == 0 ? 1 : -1;
    for (std::int32_t j = 0; j < m; ++j) {
      Laurent lhs = ctx.L.Ltilde(x, j);
      Laurent rhs = ctx.L.L(x, j).bar();
      if (d1 * ctx.T.eps(j) < 0) rhs = -rhs;
      if (lhs != rhs) set_fail(rep, "D1 A_u D2 != Ltilde at x=" + ctx.W.word_name(x) + " z=" + ctx.zname(j));
      if (!lhs.is_polynomial_in_u_inverse())
        set_fail(rep, "Ltilde outside Z[u^{-1}] at x=" + ctx.W.word_name(x) + " z=" + ctx.zname(j));
    }
  }
  rep.detail = "top " + std::to_string(m) + "x" + std::to_string(m) + " block triangular with diagonal (1-u^{-1})^{l*}";
}

// Rank of the specialized coefficient matrix of {Y_{K,z}} equals |I*|.
inline void specialization(const VerifyContext& ctx, const VerifyOptions& opts, CheckReport& rep) {
  const std::vector<FieldScalar> lambdas =
      opts.lambda ? std::vector<FieldScalar>{*opts.lambda} : default_lambdas(opts.seed);
  for (const FieldScalar& lam : lambdas) {
    if (lam.is_zero() || lam.is_one() || lam.is_minus_one())
      fail(errc::forbidden_specialization, "lambda=" + lam.to_string() + " must avoid {0,1,-1}");
    Matrix<FieldScalar> mat(ctx.W.size(), std::vector<FieldScalar>(ctx.T.size(), lam.zero_like()));
    for (std::int32_t x = 0; x < ctx.W.size(); ++x)
      for (const auto& [z, poly] : ctx.L.ltilde_row(x).terms()) mat[x][z] = eval(poly, lam);
    const std::size_t rank = field_rank(std::move(mat));
    if (rank != static_cast<std::size_t>(ctx.T.size()))
      set_fail(rep, "rank " + std::to_string(rank) + " != " + std::to_string(ctx.T.size()) + " at lambda=" +
                        lam.to_string());
  }
  rep.detail = std::to_string(lambdas.size()) + " specialization points, rank always " + std::to_string(ctx.T.size());
}

// {Y_z} plus the complement of {T_{sigma_z}} form a basis of H over A_{+-1}:
// the change-of-basis determinant is a unit +-u^a (u+1)^b (u-1)^c.
inline void purity(const VerifyContext& ctx, const VerifyOptions& opts, CheckReport& rep) {
  const std::int32_t n = ctx.W.size(), m = ctx.T.size();
  if (ctx.W.truncated()) fail(errc::truncated_table, "purity requires a finite group");

  // Rows: sigma_{z_i} ascending, then the complement ascending. Columns:
  // Y_{z_j} for j < m, then unit columns for the complement elements in row
  // order, making the matrix [[A, 0], [B, I]].
  std::vector<std::int32_t> rows;
  rows.reserve(n);
  std::vector<bool> is_sigma(n, false);
  for (std::int32_t z = 0; z < m; ++z) {
    rows.push_back(ctx.T.sigma(z));
    is_sigma[ctx.T.sigma(z)] = true;
  }
  for (std::int32_t w = 0; w < n; ++w)
    if (!is_sigma[w]) rows.push_back(w);
  std::vector<std::int32_t> row_of(n);
  for (std::int32_t r = 0; r < n; ++r) row_of[rows[r]] = r;

  // Triangular shortcut: Laplace expansion along the unit columns reduces
  // the determinant to +-det(A), and A is lower triangular.
  Laurent diag_product(1);
  for (std::int32_t i = 0; i < m; ++i) {
    for (std::int32_t j = i + 1; j < m; ++j)
      if (!ctx.L.Ltilde(ctx.T.sigma(i), j).is_zero())
        set_fail(rep, "sigma block not triangular at (" + ctx.zname(i) + "," + ctx.zname(j) + ")");
    diag_product *= ctx.L.Ltilde(ctx.T.sigma(i), i);
  }

  Laurent det = diag_product;
  std::string method = "unit-column reduction to the triangular sigma block";
  if (n <= opts.full_determinant_limit) {
    method = "full " + std::to_string(n) + "x" + std::to_string(n) + " Bareiss determinant";
    Matrix<Laurent> mat(n, std::vector<Laurent>(n));
    for (std::int32_t j = 0; j < m; ++j)
      for (std::int32_t x = 0; x < n; ++x) mat[row_of[x]][j] = ctx.L.Ltilde(x, j);
    for (std::int32_t k = m; k < n; ++k) mat[k][k] = Laurent(1);
    det = bareiss_determinant(std::move(mat));
    if (det != diag_product && det != -diag_product)
      set_fail(rep, "full determinant " + det.to_string() + " differs from the triangular product " +
                        diag_product.to_string());
  }

  const auto unit = Localized(det).unit_factors();
  if (!unit) {
    Laurent core = det;
    long b = 0, c = 0;
    while (auto q = core.deflated(-1)) {
      core = *q;
      ++b;
    }
    while (auto q = core.deflated(1)) {
      core = *q;
      ++c;
    }
    set_fail(rep, "determinant " + det.to_string() + " has non-unit factor " + core.to_string());
  } else {
    rep.detail = method + "; det = " + std::string(unit->sign < 0 ? "-" : "") + "u^{" +
                 std::to_string(unit->u_exp) + "}(u+1)^" + std::to_string(unit->plus1_exp) + "(u-1)^" +
                 std::to_string(unit->minus1_exp);
  }
}

// pi(sigma_z) = z, pi is surjective, n_z^x is {0,1}-unique, and the 0-Hecke
// identity T_{sigma_z} a_1 = a_z holds in M_0.
inline void pi_section(const VerifyContext& ctx, const VerifyOptions&, CheckReport& rep) {
  std::vector<bool> hit(ctx.T.size(), false);
  for (std::int32_t x = 0; x < ctx.W.size(); ++x) {
    std::int32_t found = npos;
    bool unique = true;
    for (const auto& [z, poly] : ctx.L.ltilde_row(x).terms()) {
      const Int head = poly.at_u_inverse_zero();
      if (head == 0) continue;
      if (head != 1 || found != npos) unique = false;
      found = z;
    }
    if (!unique || found == npos || found != ctx.L.pi(x)) {
      set_fail(rep, "n_z^x not {0,1}-unique at x=" + ctx.W.word_name(x));
      continue;
    }
    hit[found] = true;
  }
  for (std::int32_t z = 0; z < ctx.T.size(); ++z) {
    if (!hit[z]) set_fail(rep, "pi misses z=" + ctx.zname(z));
    if (ctx.L.pi(ctx.T.sigma(z)) != z)
      set_fail(rep, "pi(sigma_z) = " + ctx.zname(ctx.L.pi(ctx.T.sigma(z))) + " != z = " + ctx.zname(z));
    const auto got = zero_hecke_act_word(ctx.W, ctx.T, ctx.W.word(ctx.T.sigma(z)), ModuleElt<long long>::unit(0, 1));
    if (got != ModuleElt<long long>::unit(z, 1)) set_fail(rep, "0-Hecke identity fails at z=" + ctx.zname(z));
  }
  rep.detail = "pi surjective with section sigma over " + std::to_string(ctx.T.size()) + " fibers";
}

}  // namespace checks

inline const std::vector<std::pair<std::string, checks::Body>>& check_registry() {
  static const std::vector<std::pair<std::string, checks::Body>> reg = {
      {"rho_formula", checks::rho_formula},
      {"twist_closure", checks::twist_closure},
      {"action", checks::action},
      {"triangular", checks::triangular},
      {"sigma_congruence", checks::sigma_congruence},
      {"ell_star_independence", checks::ell_star_independence},
      {"basis_change", checks::basis_change},
      {"mu_isomorphism", checks::mu_isomorphism},
      {"au_matrix", checks::au_matrix},
      {"specialization", checks::specialization},
      {"purity", checks::purity},
      {"pi_section", checks::pi_section},
  };
  return reg;
}

inline std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& [name, body] : check_registry()) names.push_back(name);
  return names;
}

inline CheckReport run_check(const VerifyContext& ctx, const std::string& name, const VerifyOptions& opts = {}) {
  for (const auto& [reg_name, body] : check_registry())
    if (reg_name == name) return checks::run_body(name, ctx, opts, body);
  fail(errc::invalid_spec, "unknown check '" + name + "'; known: " + [] {
    std::string s;
    for (const auto& n : check_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
}

inline std::vector<CheckReport> run_all_checks(const VerifyContext& ctx, const VerifyOptions& opts = {}) {
  std::vector<CheckReport> reports;
  for (const auto& [name, body] : check_registry()) reports.push_back(checks::run_body(name, ctx, opts, body));
  return reports;
}

}  // namespace tihecke
