#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "decim/algebra.hpp"

using decim::Exponents;
using decim::MultiPoly;
using decim::MultiRational;
using decim::OmegaClass;
using decim::Rational;
using decim::UniSeries;
using decim::Var;
using decim::VarBlock;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
  MultiPoly p;
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < terms; ++i) {
    Exponents e{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                static_cast<std::uint32_t>(rng() % 3)};
    const auto num = static_cast<std::int64_t>(rng() % 9) - 4;
    p += MultiPoly::monomial(e, Rational(num, 1 + static_cast<std::int64_t>(rng() % 3)));
  }
  return p;
}

Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("polynomial ring identities on random inputs") {
  std::mt19937_64 rng(123);
  for (int rep = 0; rep < 60; ++rep) {
    const MultiPoly a = random_poly(rng);
    const MultiPoly b = random_poly(rng);
    const MultiPoly c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(0) == MultiPoly::constant(1));
  }
}

TEST_CASE("differentiation obeys the product rule") {
  std::mt19937_64 rng(456);
  for (int rep = 0; rep < 40; ++rep) {
    const MultiPoly a = random_poly(rng);
    const MultiPoly b = random_poly(rng);
    for (const Var v : {Var::X1, Var::X2, Var::Y1, Var::Y2, Var::Z}) {
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
    for (const VarBlock block : {VarBlock::X, VarBlock::Y}) {
      CHECK((a * b).euler(block) == a.euler(block) * b + a * b.euler(block));
      CHECK((a + b).euler(block) == a.euler(block) + b.euler(block));
    }
  }
}

TEST_CASE("the Euler operator scales a monomial by its block degree") {
  const MultiPoly m = MultiPoly::monomial(Exponents{2, 1, 3, 0, 4}, rat(7, 2));
  CHECK(m.euler(VarBlock::X) == m * rat(3));
  CHECK(m.euler(VarBlock::Y) == m * rat(3));
  CHECK(MultiPoly::constant(5).euler(VarBlock::X).is_zero());
  // matches the sum of variable-weighted partial derivatives
  std::mt19937_64 rng(789);
  for (int rep = 0; rep < 30; ++rep) {
    const MultiPoly a = random_poly(rng);
    CHECK(a.euler(VarBlock::X) == MultiPoly::variable(Var::X1) * a.derivative(Var::X1) +
                                      MultiPoly::variable(Var::X2) * a.derivative(Var::X2));
    CHECK(a.euler(VarBlock::Y) == MultiPoly::variable(Var::Y1) * a.derivative(Var::Y1) +
                                      MultiPoly::variable(Var::Y2) * a.derivative(Var::Y2));
  }
}

TEST_CASE("rational function arithmetic is semantic") {
  std::mt19937_64 rng(1011);
  for (int rep = 0; rep < 25; ++rep) {
    MultiPoly den1 = random_poly(rng);
    MultiPoly den2 = random_poly(rng);
    if (den1.is_zero()) den1 = MultiPoly::constant(1);
    if (den2.is_zero()) den2 = MultiPoly::constant(1);
    const MultiPoly num1 = random_poly(rng);
    const MultiPoly num2 = random_poly(rng);
    const MultiRational f(num1, den1);
    const MultiRational g(num2, den2);
    CHECK(f.semantically_equal(MultiRational(num1 * den2, den1 * den2)));
    CHECK((f + g).semantically_equal(MultiRational(num1 * den2 + num2 * den1, den1 * den2)));
    CHECK((f * g).semantically_equal(MultiRational(num1 * num2, den1 * den2)));
    // quotient rule, cross-checked against the product-rule expansion
    const MultiRational ef = f.euler(VarBlock::X);
    CHECK(ef.semantically_equal(
        MultiRational(num1.euler(VarBlock::X) * den1 - num1 * den1.euler(VarBlock::X),
                      den1 * den1)));
  }
  CHECK_THROWS_AS(MultiRational(MultiPoly::constant(1), MultiPoly()), std::domain_error);
}

TEST_CASE("series coefficients satisfy the defining convolution") {
  std::mt19937_64 rng(1213);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Rational> num(1 + rng() % 5), den(1 + rng() % 5);
    for (auto& c : num) c = rat(static_cast<std::int64_t>(rng() % 11) - 5, 1 + rng() % 4);
    for (auto& c : den) c = rat(static_cast<std::int64_t>(rng() % 11) - 5, 1 + rng() % 4);
    if (den[0] == 0) den[0] = rat(1);
    const UniSeries series(num, den);
    const auto coeffs = series.coefficients(30);
    // den * coeffs == num holds with the original arrays: the constructor's
    // rescaling multiplies both sides by the same constant.
    for (std::size_t n = 0; n <= 30; ++n) {
      Rational lhs(0);
      for (std::size_t k = 0; k < den.size() && k <= n; ++k) lhs += den[k] * coeffs[n - k];
      CHECK(lhs == (n < num.size() ? num[n] : Rational(0)));
    }
  }
}

TEST_CASE("series product matches coefficient convolution") {
  const UniSeries geo({rat(1)}, {rat(1), rat(-1)});           // 1/(1-z)
  const UniSeries geo2 = geo * geo;                           // 1/(1-z)^2
  for (std::uint64_t n = 0; n <= 20; ++n) {
    CHECK(geo.coefficient(n) == rat(1));
    CHECK(geo2.coefficient(n) == rat(static_cast<std::int64_t>(n) + 1));
  }
  const UniSeries left({rat(0), rat(1)}, {rat(1), rat(-1)});  // z/(1-z)
  const UniSeries right({rat(0), rat(1), rat(1)}, decim::convolve({rat(1), rat(-1)},
                                                                  {rat(1), rat(1)}));
  CHECK(left.semantically_equal(right));
  CHECK_FALSE(left.semantically_equal(geo));
  CHECK_THROWS_WITH_AS(UniSeries({rat(1)}, {rat(0), rat(1)}), "no power series at this point",
                       std::domain_error);
  CHECK_THROWS_AS(UniSeries({rat(1)}, {}), std::domain_error);
}

TEST_CASE("class generating functions expand to the enumerated counts") {
  constexpr std::uint32_t kZMax = 10;
  for (const OmegaClass cls : {OmegaClass::Omega1, OmegaClass::Omega2, OmegaClass::Omega3,
                               OmegaClass::Omega4}) {
    const auto expansion = decim::expand_z_truncated(decim::g_omega(cls), kZMax);
    const auto counted = decim::enumerate_configs(kZMax, cls);
    for (const auto& [exps, coeff] : expansion) {
      const decim::ConfigKey key{exps.e[0], exps.e[1], exps.e[2], exps.e[3], exps.e[4]};
      const auto it = counted.find(key);
      REQUIRE(it != counted.end());
      CHECK(Rational(it->second) == coeff);
    }
    for (const auto& [key, count] : counted) {
      CHECK(expansion.count(Exponents{key[0], key[1], key[2], key[3], key[4]}) == 1);
    }
  }
}

TEST_CASE("combined form equals the sum of the four class forms") {
  CHECK(decim::g_master().semantically_equal(decim::g_master_class_sum()));
}

TEST_CASE("low-order coefficients of the combined form") {
  const auto expansion = decim::expand_z_truncated(decim::g_master(), 2);
  // no empty configuration: constant term vanishes
  CHECK(expansion.count(Exponents{0, 0, 0, 0, 0}) == 0);
  // modulus 1: only a = 1 with the empty prefix
  CHECK(expansion.at(Exponents{1, 0, 0, 0, 1}) == rat(1));
  // modulus 2: a = 11 | a = 2 with prefix epsilon or 1
  CHECK(expansion.at(Exponents{2, 0, 0, 0, 2}) == rat(1));
  CHECK(expansion.at(Exponents{0, 1, 0, 0, 2}) == rat(1));
  CHECK(expansion.at(Exponents{0, 1, 1, 0, 2}) == rat(1));
  std::size_t z2_terms = 0;
  for (const auto& [exps, coeff] : expansion) {
    if (exps[Var::Z] == 2) ++z2_terms;
  }
  CHECK(z2_terms == 3);
}

TEST_CASE("substitution turns the master form into the probability series") {
  const MultiRational g = decim::g_master();
  const UniSeries at_half = decim::evaluate(g, {rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)});
  const auto coeffs = at_half.coefficients(50);
  CHECK(coeffs[0] == rat(0));
  for (std::size_t t = 1; t <= 50; ++t) CHECK(coeffs[t] == rat(1));

  const UniSeries at_third = decim::evaluate(g, {rat(2, 3), rat(1, 3)}, {rat(2, 3), rat(1, 3)});
  const auto third = at_third.coefficients(30);
  for (std::size_t t = 1; t <= 30; ++t) CHECK(third[t] == rat(1));
}

TEST_CASE("expansion rejects denominators with constant-z structure") {
  const MultiRational bad(MultiPoly::constant(1),
                          MultiPoly::constant(1) - MultiPoly::variable(Var::X1));
  CHECK_THROWS_AS(decim::expand_z_truncated(bad, 5), std::domain_error);
}

TEST_CASE("canonical text form") {
  const MultiPoly p = MultiPoly::constant(1) -
                      MultiPoly::monomial(Exponents{0, 1, 0, 1, 2}, rat(1));
  CHECK(p.to_string() == "1 - x2*y2*z^2");
  CHECK(MultiPoly().to_string() == "0");
  CHECK(MultiPoly::monomial(Exponents{0, 0, 0, 0, 2}, rat(-3, 2)).to_string() == "-3/2*z^2");
}
