#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "testutil.hpp"
#include "tihecke/errors.hpp"
#include "tihecke/field.hpp"
#include "tihecke/laurent.hpp"
#include "tihecke/localized.hpp"

using namespace tihecke;

namespace {
Laurent U(int e) { return Laurent::u(e); }

bool throws_with(errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}
}  // namespace

TEST_CASE("laurent basics") {
  Laurent p = U(1) + Laurent(1);
  CHECK(p.to_string() == "1+u");
  CHECK((p * p).to_string() == "1+2*u+u^{2}");
  CHECK(Laurent{}.is_zero());
  CHECK((p - p).is_zero());
  CHECK(Laurent(1).is_one());
  CHECK((U(-1) * U(1)).is_one());
  CHECK(p.pow(0).is_one());
  CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("localized inverse pair and deflation") {
  // (u+1) * 1/(u+1) = 1
  Localized x(u_plus_1());
  Localized inv = Localized::inverse_denominator(1, 0);
  CHECK((x * inv).is_one());

  // (u^2-1)/(u+1) = u-1
  Localized q = exact_div(Localized(U(2) - Laurent(1)), Localized(u_plus_1()));
  CHECK(q == Localized(u_minus_1()));

  // (u+1)+(u-1) = 2u
  CHECK(Localized(u_plus_1()) + Localized(u_minus_1()) == Localized(U(1) * Laurent(2)));

  // quotient leaving the ring
  CHECK(throws_with(errc::not_divisible, [] { exact_div(Localized(u_plus_1()), Localized(U(1) + Laurent(2))); }));
  CHECK(throws_with(errc::division_by_zero, [] { exact_div(Localized(1), Localized(0)); }));
}

TEST_CASE("bar involution on monomials") {
  CHECK(U(1).bar() == -U(-1));
  CHECK((U(1) + Laurent(1)).bar() == Laurent(1) - U(-1));
  CHECK(U(2).bar() == U(-2));
}

TEST_CASE("bar is an involution on random polynomials") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    Laurent p = testutil::random_laurent(rng);
    CHECK(p.bar().bar() == p);
  }
}

TEST_CASE("normal form uniqueness") {
  std::mt19937_64 rng(7);
  int tried = 0;
  while (tried < 200) {
    Laurent p = testutil::random_laurent(rng);
    if (p.is_zero() || p.deflated(-1)) continue;  // want (u+1) not dividing p
    ++tried;
    std::uniform_int_distribution<unsigned> d(0, 3);
    unsigned a = d(rng), b = d(rng);
    Localized raw(p * u_plus_1(), a + 1, b);
    Localized expect(p, a, b);
    CHECK(raw == expect);
    CHECK(raw.a() == a);
  }
}

TEST_CASE("specialization examples") {
  FieldScalar two = FieldScalar::rational(2);
  CHECK(specialize(Localized(u_plus_1()), two) == FieldScalar::rational(3));
  CHECK(specialize(Localized::inverse_denominator(1, 0), two) == FieldScalar::rational(1, 3));
  CHECK(throws_with(errc::forbidden_specialization,
                    [] { specialize(Localized(u_plus_1()), FieldScalar::rational(1)); }));
  CHECK(throws_with(errc::forbidden_specialization,
                    [] { specialize(Localized(1), FieldScalar::rational(-1)); }));
  CHECK(throws_with(errc::forbidden_specialization, [] { specialize(Localized(1), FieldScalar::rational(0)); }));
  // In F_7, lambda = 6 is -1 and stays forbidden.
  CHECK(throws_with(errc::forbidden_specialization,
                    [] { specialize(Localized(1), FieldScalar::residue(6, 7)); }));
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937_64 rng(99);
  const FieldScalar lams[] = {FieldScalar::rational(2), FieldScalar::rational(-3),
                              FieldScalar::rational(5, 7), FieldScalar::residue(3, 7),
                              FieldScalar::residue(5, 7)};
  for (const auto& lam : lams) {
    for (int i = 0; i < 50; ++i) {
      Localized x = testutil::random_localized(rng);
      Localized y = testutil::random_localized(rng);
      CHECK(specialize(x * y, lam) == specialize(x, lam) * specialize(y, lam));
      CHECK(specialize(x + y, lam) == specialize(x, lam) + specialize(y, lam));
    }
  }
}

TEST_CASE("evaluation at u^{-1}=0") {
  CHECK((Laurent(1) - U(-1)).at_u_inverse_zero() == 1);
  CHECK(U(-1).at_u_inverse_zero() == 0);
  CHECK(throws_with(errc::positive_exponent_present, [] { (U(1) + Laurent(1)).at_u_inverse_zero(); }));
}

TEST_CASE("unit recognition in the localized ring") {
  // -u^3 (u+1) / (u-1)^2
  Localized x(-(U(3) * u_plus_1()), 0, 2);
  auto f = x.unit_factors();
  REQUIRE(f);
  CHECK(f->sign == -1);
  CHECK(f->u_exp == 3);
  CHECK(f->plus1_exp == 1);
  CHECK(f->minus1_exp == -2);
  CHECK_FALSE(Localized(U(1) + Laurent(2)).unit_factors());
  CHECK_FALSE(Localized(0).unit_factors());
}

TEST_CASE("field scalar guards") {
  CHECK(throws_with(errc::invalid_spec, [] { FieldScalar::residue(1, 3); }));
  CHECK(throws_with(errc::invalid_spec, [] { FieldScalar::residue(1, 9); }));
  CHECK(throws_with(errc::division_by_zero,
                    [] { FieldScalar::rational(1) / FieldScalar::rational(0); }));
  CHECK(throws_with(errc::mixed_fields,
                    [] { FieldScalar::rational(1) + FieldScalar::residue(1, 5); }));
  CHECK(FieldScalar::residue(3, 5).inverse() == FieldScalar::residue(2, 5));
  CHECK(FieldScalar::rational(-7, 2).pow(-2) == FieldScalar::rational(4, 49));
}
