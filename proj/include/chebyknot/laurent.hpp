#pragma once

// Exact Laurent polynomials in the bracket variable A, and the quarter-integer
// t-polynomials that carry Jones polynomials after A = t^(-1/4).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace chebyknot {

using Coeff = std::int64_t;

/// Integer-coefficient Laurent polynomial in A. Coefficients are never zero in
/// storage; the zero polynomial has no terms. All arithmetic is checked and
/// throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)

  /// c * A^e
  static LaurentPoly monomial(int exponent, Coeff coeff = 1);
  /// -A^2 - A^-2, the value of a disjoint unknot.
  static LaurentPoly delta();
  static LaurentPoly delta_power(unsigned k);

  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  const std::map<int, Coeff>& terms() const { return terms_; }
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// Adds c * A^e in place.
  void add_term(int exponent, Coeff coeff);

  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned k) const;
  /// A -> A^-1
  LaurentPoly mirror() const;
  /// Multiplies by A^shift.
  LaurentPoly shifted(int shift) const;

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "-A^5 - A^-3 + A^-7", highest exponent first; "0" for zero.
  std::string to_string() const;
  /// [[exponent, coefficient], ...] sorted by descending exponent.
  nlohmann::json to_json() const;

 private:
  std::map<int, Coeff> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly delta_power(unsigned k);

/// Coefficients from the highest exponent down to the lowest, stepping by the
/// gcd of the exponent gaps, interior zeros included. Throws
/// std::invalid_argument("empty polynomial") on zero.
std::vector<Coeff> coefficient_string(const LaurentPoly& p);

/// Polynomial in t with exponents in (1/4)Z, stored as numerators over 4.
class QuarterPoly {
 public:
  QuarterPoly() = default;

  static QuarterPoly from_numerators(std::map<int, Coeff> terms);

  const std::map<int, Coeff>& numerators() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every exponent is an integer.
  bool integral() const;
  /// Coefficient of t^(numerator/4).
  Coeff coeff_quarter(int numerator) const;

  friend bool operator==(const QuarterPoly&, const QuarterPoly&) = default;

  /// "t - t^2 + t^(3/2)", ascending exponent.
  std::string to_string() const;
  /// [[numerator, denominator, coefficient], ...] ascending.
  nlohmann::json to_json() const;

 private:
  std::map<int, Coeff> terms_;
};

/// (-A^-3)^writhe * bracket with A = t^(-1/4).
QuarterPoly jones_normalize(const LaurentPoly& bracket, int writhe);

namespace checked {
Coeff add(Coeff a, Coeff b);
Coeff mul(Coeff a, Coeff b);
}  // namespace checked

}  // namespace chebyknot
