#pragma once

#include "decim/rational.hpp"
#include "decim/wordclass.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace decim {

// Closed variable set (x1, x2, y1, y2, z): x counts cyclic-part letters,
// y counts prefix letters, z carries the modulus.
enum class Var : std::size_t { X1 = 0, X2 = 1, Y1 = 2, Y2 = 3, Z = 4 };

enum class VarBlock { X, Y };

struct Exponents {
  std::array<std::uint32_t, 5> e{};

  constexpr Exponents() = default;
  constexpr Exponents(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1, std::uint32_t y2,
                      std::uint32_t z)
      : e{x1, x2, y1, y2, z} {}

  std::uint32_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
  auto operator<=>(const Exponents&) const = default;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored zero coefficient, so equal polynomials compare equal.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(Rational value);
  static MultiPoly variable(Var v);
  static MultiPoly monomial(Exponents exps, Rational coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponents& exps) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(const MultiPoly& lhs, const Rational& scalar);
  MultiPoly operator-() const;

  MultiPoly pow(std::uint32_t n) const;
  MultiPoly derivative(Var v) const;
  // Sum over the block of v * d/dv: scales each term by its block degree.
  MultiPoly euler(VarBlock block) const;

  // Substitutes numbers for x1, x2, y1, y2; returns coefficients by z power.
  std::vector<Rational> substitute_xy(const std::array<Rational, 4>& values) const;

  // Canonical dump in sorted exponent order, e.g. "1 - x2*y2*z^2".
  std::string to_string() const;

  bool operator==(const MultiPoly&) const = default;

 private:
  void add_term(const Exponents& exps, const Rational& coeff);
  std::map<Exponents, Rational> terms_;
};

// Ratio of multivariate polynomials. Not reduced; equality is semantic.
class MultiRational {
 public:
  MultiRational() : num_(), den_(MultiPoly::constant(1)) {}
  MultiRational(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  friend MultiRational operator+(const MultiRational& lhs, const MultiRational& rhs);
  friend MultiRational operator*(const MultiRational& lhs, const MultiRational& rhs);
  MultiRational operator-() const;

  // Quotient rule: E(N/D) = (E(N) D - N E(D)) / D^2.
  MultiRational euler(VarBlock block) const;

  // Cross-multiplied polynomial equality (no GCD needed).
  bool semantically_equal(const MultiRational& other) const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

// Univariate power series in z given as num(z)/den(z) with den(0) = 1.
// Coefficients come from the recurrence c_n = num_n - sum_{k>=1} den_k c_{n-k}.
class UniSeries {
 public:
  UniSeries(std::vector<Rational> num, std::vector<Rational> den);

  const std::vector<Rational>& num() const { return num_; }
  const std::vector<Rational>& den() const { return den_; }

  Rational coefficient(std::uint64_t n) const;
  std::vector<Rational> coefficients(std::uint64_t up_to) const;
  // Appends coefficients so `cache` covers 0..up_to; cache must be a prefix.
  void extend_coefficients(std::vector<Rational>& cache, std::uint64_t up_to) const;

  UniSeries operator*(const UniSeries& other) const;
  bool semantically_equal(const UniSeries& other) const;

 private:
  std::vector<Rational> num_;
  std::vector<Rational> den_;
};

// Dense polynomial product; trailing zeros trimmed.
std::vector<Rational> convolve(const std::vector<Rational>& lhs,
                               const std::vector<Rational>& rhs);

// Per-class generating function G_Omega(x, y, z): the coefficient of
// x1^n1 x2^n2 y1^m1 y2^m2 z^t counts configurations with those letter counts.
MultiRational g_omega(OmegaClass cls);

// Combined closed form of the full generating function G over all words.
MultiRational g_master();

// The same function assembled as the sum of the four class forms.
MultiRational g_master_class_sum();

// Substitutes x = (x1, x2), y = (y1, y2); requires den(0, z=0) != 0.
UniSeries evaluate(const MultiRational& f, std::pair<Rational, Rational> x,
                   std::pair<Rational, Rational> y);

// Multivariate z-power series of f up to z-degree z_max, by geometric
// expansion of the denominator (every non-constant term must carry z).
std::map<Exponents, Rational> expand_z_truncated(const MultiRational& f, std::uint32_t z_max);

}  // namespace decim
