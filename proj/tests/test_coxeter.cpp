#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <set>

#include "tihecke/coxeter.hpp"
#include "tihecke/errors.hpp"

using namespace tihecke;

namespace {

bool throws_with(errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

GroupTable enumerate(const std::string& preset) { return enumerate_group(CoxeterSpec::preset(preset)); }

// Subword criterion: {x : x <= w} is exactly the set of products of
// subsequences of any fixed reduced word of w.
std::set<std::int32_t> bruhat_below_by_subwords(const GroupTable& W, std::int32_t w) {
  const auto& word = W.word(w);
  std::set<std::int32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    std::int32_t cur = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (mask & (1u << i)) cur = W.rmul(cur, word[i]);
    out.insert(cur);
  }
  return out;
}

bool tables_equal(const GroupTable& a, const GroupTable& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  for (std::int32_t w = 0; w < a.size(); ++w) {
    if (a.length(w) != b.length(w) || a.inverse(w) != b.inverse(w) || a.star(w) != b.star(w) ||
        a.word(w) != b.word(w))
      return false;
    for (int s = 0; s < a.rank(); ++s)
      if (a.rmul(w, s) != b.rmul(w, s) || a.lmul(s, w) != b.lmul(s, w)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("group sizes of small types") {
  CHECK(enumerate("A1").size() == 2);
  GroupTable a2 = enumerate("A2");
  CHECK(a2.size() == 6);
  CHECK(a2.max_length() == 3);
  CHECK(enumerate("A3").size() == 24);
  CHECK(enumerate("B2").size() == 8);
  CHECK(enumerate("B3").size() == 48);
  CHECK(enumerate("D4").size() == 192);
  CHECK(enumerate("I2(5)").size() == 10);
  CHECK(enumerate("I2(6)").size() == 12);
  CHECK(enumerate("F4").size() == 1152);
}

TEST_CASE("canonical words are ShortLex least") {
  GroupTable W = enumerate("A2");
  std::int32_t w0 = W.element_of_word(std::vector<std::uint8_t>{0, 1, 0});
  CHECK(W.element_of_word(std::vector<std::uint8_t>{1, 0, 1}) == w0);
  CHECK(W.word(w0) == std::vector<std::uint8_t>{0, 1, 0});
  CHECK(W.word_name(w0) == "1.2.1");
  CHECK(W.word_name(0) == "e");
  CHECK(W.parse_word("1.2.1") == std::vector<std::uint8_t>{0, 1, 0});
  CHECK(W.parse_word("e").empty());
}

TEST_CASE("bruhat order agrees with the subword criterion") {
  for (const char* name : {"A2", "A3", "B2"}) {
    GroupTable W = enumerate(name);
    for (std::int32_t w = 0; w < W.size(); ++w) {
      auto below = bruhat_below_by_subwords(W, w);
      for (std::int32_t x = 0; x < W.size(); ++x) {
        CAPTURE(name, x, w);
        CHECK(W.bruhat_leq(x, w) == (below.count(x) > 0));
      }
    }
  }
}

TEST_CASE("bruhat spot checks in A2") {
  GroupTable W = enumerate("A2");
  std::int32_t s1 = W.element_of_word(std::vector<std::uint8_t>{0});
  std::int32_t s1s2 = W.element_of_word(std::vector<std::uint8_t>{0, 1});
  std::int32_t s2s1 = W.element_of_word(std::vector<std::uint8_t>{1, 0});
  std::int32_t w0 = W.element_of_word(std::vector<std::uint8_t>{0, 1, 0});
  for (std::int32_t w = 0; w < W.size(); ++w) CHECK(W.bruhat_leq(0, w));
  CHECK(W.bruhat_leq(s1, w0));
  CHECK_FALSE(W.bruhat_leq(s1s2, s2s1));
}

TEST_CASE("star fixed elements") {
  GroupTable a1 = enumerate("A1");
  CHECK(a1.star_fixed().size() == 2);

  GroupTable a2 = enumerate("A2");
  CHECK(a2.star_fixed().size() == 6);  // identity star fixes everything

  GroupTable a2f = enumerate_group(CoxeterSpec::preset("A2").with_star_one_based({2, 1}));
  auto fixed = a2f.star_fixed();
  REQUIRE(fixed.size() == 2);
  CHECK(fixed[0] == 0);
  CHECK(a2f.length(fixed[1]) == 3);
}

TEST_CASE("star is a length-preserving automorphism") {
  GroupTable W = enumerate_group(CoxeterSpec::preset("A3").with_star_one_based({3, 2, 1}));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int32_t> pick(0, W.size() - 1);
  for (int i = 0; i < 200; ++i) {
    std::int32_t x = pick(rng), y = pick(rng);
    CHECK(W.star(W.mul(x, y)) == W.mul(W.star(x), W.star(y)));
    CHECK(W.length(W.star(x)) == W.length(x));
    CHECK(W.inverse(W.inverse(x)) == x);
  }
}

TEST_CASE("exchange condition: multiplying by a generator changes length") {
  GroupTable W = enumerate("B2");
  for (std::int32_t w = 0; w < W.size(); ++w)
    for (int s = 0; s < W.rank(); ++s) {
      CHECK(W.length(W.lmul(s, w)) != W.length(w));
      CHECK(std::abs(W.length(W.lmul(s, w)) - W.length(w)) == 1);
    }
}

TEST_CASE("generic and permutation backends build identical tables") {
  for (const char* name : {"A1", "A2", "A3", "A4"}) {
    CoxeterSpec spec = CoxeterSpec::preset(name);
    EnumerateOptions gen, perm;
    gen.backend = EnumerateOptions::Backend::geometric;
    perm.backend = EnumerateOptions::Backend::perm_a;
    CAPTURE(name);
    CHECK(tables_equal(enumerate_group(spec, gen), enumerate_group(spec, perm)));
  }
}

TEST_CASE("signed permutation backend matches generic for type B") {
  for (const char* name : {"B2", "B3"}) {
    CoxeterSpec spec = CoxeterSpec::preset(name);
    EnumerateOptions gen, sp;
    gen.backend = EnumerateOptions::Backend::geometric;
    sp.backend = EnumerateOptions::Backend::signed_perm_b;
    CAPTURE(name);
    CHECK(tables_equal(enumerate_group(spec, gen), enumerate_group(spec, sp)));
  }
}

TEST_CASE("dihedral backend matches generic on crystallographic rank 2") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CoxeterSpec spec = CoxeterSpec::preset(name);
    EnumerateOptions gen, dih;
    gen.backend = EnumerateOptions::Backend::geometric;
    dih.backend = EnumerateOptions::Backend::dihedral;
    CAPTURE(name);
    CHECK(tables_equal(enumerate_group(spec, gen), enumerate_group(spec, dih)));
  }
}

TEST_CASE("infinite groups need a cutoff") {
  CoxeterSpec affine = CoxeterSpec::from_matrix({{1, 0}, {0, 1}});
  EnumerateOptions opts;
  opts.max_elements = 100;
  CHECK(throws_with(errc::group_too_large, [&] { enumerate_group(affine, opts); }));

  EnumerateOptions cut;
  cut.length_cutoff = 5;
  GroupTable ball = enumerate_group(affine, cut);
  CHECK(ball.truncated());
  CHECK(ball.size() == 11);  // 1 + 2 per length 1..5
  CHECK(ball.max_length() == 5);
  // products at the boundary are unknown
  std::int32_t far = ball.size() - 1;
  int out_edges = 0;
  for (int s = 0; s < 2; ++s) out_edges += ball.rmul(far, s) == npos ? 1 : 0;
  CHECK(out_edges == 1);
}

TEST_CASE("spec validation names the violated invariant") {
  CHECK(throws_with(errc::invalid_spec, [] { CoxeterSpec::from_matrix({{1, 3}, {3, 2}}); }));
  CHECK(throws_with(errc::invalid_spec, [] { CoxeterSpec::from_matrix({{1, 1}, {1, 1}}); }));
  CHECK(throws_with(errc::invalid_spec, [] { CoxeterSpec::from_matrix({{1, 3}, {4, 1}}); }));
  // star must preserve the matrix: swapping the ends of B3 does not
  CHECK(throws_with(errc::invalid_spec, [] { CoxeterSpec::preset("B3").with_star_one_based({3, 2, 1}); }));
  CHECK(throws_with(errc::invalid_spec, [] { CoxeterSpec::preset("A2").with_star_one_based({1, 1}); }));
  CHECK(throws_with(errc::invalid_spec, [] { CoxeterSpec::preset("Z9"); }));
  // H3 is outside the crystallographic backend
  CHECK(throws_with(errc::unsupported_matrix, [] { enumerate_group(CoxeterSpec::preset("H3")); }));
}
