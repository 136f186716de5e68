#pragma once

#include <random>
#include <string>
#include <vector>

#include "tihecke/coxeter.hpp"
#include "tihecke/field.hpp"
#include "tihecke/laurent.hpp"
#include "tihecke/localized.hpp"

namespace testutil {

// Diagram flip i -> n+1-i when it is compatible with the matrix.
inline std::vector<tihecke::CoxeterSpec> specs_with_stars(const std::string& preset) {
  using tihecke::CoxeterSpec;
  std::vector<CoxeterSpec> out{CoxeterSpec::preset(preset)};
  const int n = out[0].rank();
  if (n < 2) return out;
  std::vector<int> flip(n);
  for (int i = 0; i < n; ++i) flip[i] = n - i;
  try {
    out.push_back(out[0].with_star_one_based(flip));
  } catch (const tihecke::Error&) {
    // flip incompatible with this matrix
  }
  return out;
}

// The acceptance groups crossed with their available stars.
inline std::vector<tihecke::CoxeterSpec> acceptance_suite() {
  std::vector<tihecke::CoxeterSpec> out;
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "I2(5)", "I2(6)"})
    for (auto& spec : specs_with_stars(name)) out.push_back(std::move(spec));
  return out;
}

// Acceptance groups plus D4 with an order-2 fork flip.
inline std::vector<tihecke::CoxeterSpec> verify_suite() {
  auto out = acceptance_suite();
  out.push_back(tihecke::CoxeterSpec::preset("D4"));
  out.push_back(tihecke::CoxeterSpec::preset("D4").with_star_one_based({1, 2, 4, 3}));
  return out;
}

inline tihecke::Laurent random_laurent(std::mt19937_64& rng, int max_terms = 6, int exp_lo = -8, int exp_hi = 8,
                                       int coeff_lo = -99, int coeff_hi = 99) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(exp_lo, exp_hi);
  std::uniform_int_distribution<int> coeff(coeff_lo, coeff_hi);
  tihecke::Laurent p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term(exp(rng), coeff(rng));
  return p;
}

inline tihecke::Localized random_localized(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> denom(0, 3);
  return tihecke::Localized(random_laurent(rng), denom(rng), denom(rng));
}

}  // namespace testutil
