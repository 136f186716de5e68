#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"
#include "tihecke/serialize.hpp"
#include "tihecke/verify.hpp"

using namespace tihecke;

TEST_CASE("every check passes on the standard suite") {
  for (const auto& spec : testutil::verify_suite()) {
    VerifyContext ctx = VerifyContext::build(spec);
    CAPTURE(spec.display_name());
    for (const auto& rep : run_all_checks(ctx)) {
      CAPTURE(rep.check, rep.witness);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("check reports carry names, groups and details") {
  VerifyContext ctx = VerifyContext::build(CoxeterSpec::preset("B2"));
  CheckReport rep = run_check(ctx, "purity");
  CHECK(rep.check == "purity");
  CHECK(rep.group == "B2");
  CHECK(rep.pass);
  CHECK(rep.detail.find("det = ") != std::string::npos);
  json j = report_to_json(rep);
  CHECK(j["pass"].get<bool>());
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(report_to_json(rep, true).contains("wall_ms"));
}

TEST_CASE("unknown check names are rejected") {
  VerifyContext ctx = VerifyContext::build(CoxeterSpec::preset("A1"));
  bool threw = false;
  try {
    run_check(ctx, "bogus");
  } catch (const Error& e) {
    threw = e.code() == errc::invalid_spec;
  }
  CHECK(threw);
}

TEST_CASE("a corrupted table yields a failing report with a witness") {
  VerifyContext ctx = VerifyContext::build(CoxeterSpec::preset("A2"));

  // Plant a u^2 term above the rho filtration in the row of sigma_z for
  // z = s1: support at the long element violates the triangular theorem.
  std::vector<LTable::Row> rows;
  for (std::int32_t x = 0; x < ctx.W.size(); ++x) rows.push_back(ctx.L.row(x));
  const std::int32_t z1 = ctx.T.index_of_group(ctx.W.element_of_word(ctx.W.parse_word("1")));
  const std::int32_t ztop = ctx.T.index_of_group(ctx.W.element_of_word(ctx.W.parse_word("1.2.1")));
  rows[ctx.T.sigma(z1)].add_term(ztop, Laurent::u(2));
  ctx.L = LTable::from_rows(ctx.W, ctx.T, std::move(rows));

  CheckReport rep = run_check(ctx, "triangular");
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness.find("rho") != std::string::npos);
}

TEST_CASE("specialization rejects forbidden lambda") {
  VerifyContext ctx = VerifyContext::build(CoxeterSpec::preset("A1"));
  VerifyOptions opts;
  opts.lambda = FieldScalar::rational(1);
  bool threw = false;
  try {
    run_check(ctx, "specialization", opts);
  } catch (const Error& e) {
    threw = e.code() == errc::forbidden_specialization;
  }
  CHECK(threw);
}

TEST_CASE("specialization works at a single requested point") {
  VerifyContext ctx = VerifyContext::build(CoxeterSpec::preset("A2"));
  VerifyOptions opts;
  opts.lambda = FieldScalar::rational(2);
  CHECK(run_check(ctx, "specialization", opts).pass);
  opts.lambda = FieldScalar::residue(3, 7);
  CHECK(run_check(ctx, "specialization", opts).pass);
}

TEST_CASE("purity uses the reduction above the full-determinant limit") {
  VerifyContext ctx = VerifyContext::build(CoxeterSpec::preset("A3"));
  VerifyOptions opts;
  opts.full_determinant_limit = 10;  // |W| = 24 exceeds it
  CheckReport rep = run_check(ctx, "purity", opts);
  CHECK(rep.pass);
  CHECK(rep.detail.find("unit-column reduction") != std::string::npos);
  CheckReport full = run_check(ctx, "purity");
  CHECK(full.pass);
  CHECK(full.detail.find("Bareiss") != std::string::npos);
  // both routes factor the determinant identically
  CHECK(rep.detail.substr(rep.detail.find("det = ")) == full.detail.substr(full.detail.find("det = ")));
}

TEST_CASE("default lambda battery has 20 admissible points") {
  auto lams = default_lambdas(42);
  CHECK(lams.size() == 20);
  for (const auto& lam : lams) {
    CHECK_FALSE(lam.is_zero());
    CHECK_FALSE(lam.is_one());
    CHECK_FALSE(lam.is_minus_one());
  }
  auto again = default_lambdas(42);
  for (std::size_t i = 0; i < lams.size(); ++i) CHECK(lams[i] == again[i]);
}

TEST_CASE("the rho-sorted order is what makes the forward matrix triangular") {
  // In reverse order some entry lands above the diagonal, so a check that
  // skipped the sort would be testing a different (false) statement.
  VerifyContext ctx = VerifyContext::build(CoxeterSpec::preset("A2"));
  const std::int32_t m = ctx.T.size();
  bool found_violation = false;
  for (std::int32_t zi = 0; zi < m; ++zi) {
    const auto& row = ctx.L.row(ctx.T.sigma(m - 1 - zi));
    for (const auto& [w, poly] : row.terms())
      if (m - 1 - w > zi && !poly.is_zero()) found_violation = true;
  }
  CHECK(found_violation);
}
