#include "chebyknot/laurent.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chebyknot {

namespace checked {

Coeff add(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("Laurent coefficient overflow in addition");
  }
  return out;
}

Coeff mul(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("Laurent coefficient overflow in multiplication");
  }
  return out;
}

}  // namespace checked

namespace {

void accumulate(std::map<int, Coeff>& terms, int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second = checked::add(it->second, coeff);
    if (it->second == 0) terms.erase(it);
  }
}

int checked_exponent(long long e) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min()) {
    throw std::overflow_error("Laurent exponent overflow");
  }
  return static_cast<int>(e);
}

// Shared by both renderings: sign-separated monomials.
void render_term(std::ostringstream& out, bool first, Coeff c, const std::string& mono) {
  Coeff mag = c < 0 ? -c : c;
  if (first) {
    if (c < 0) out << '-';
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    out << mag;
  } else {
    if (mag != 1) out << mag;
    out << mono;
  }
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::delta() {
  LaurentPoly p;
  p.terms_ = {{-2, -1}, {2, -1}};
  return p;
}

LaurentPoly LaurentPoly::delta_power(unsigned k) { return delta().pow(k); }

Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, Coeff coeff) { accumulate(terms_, exponent, coeff); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, checked::mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      accumulate(out.terms_, checked_exponent(static_cast<long long>(e1) + e2),
                 checked::mul(c1, c2));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, checked::mul(c, -1));
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(checked_exponent(-static_cast<long long>(e)), c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(checked_exponent(static_cast<long long>(e) + shift), c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    if (it->first == 1) {
      mono = "A";
    } else if (it->first != 0) {
      mono = "A^" + std::to_string(it->first);
    }
    render_term(out, first, it->second, mono);
    first = false;
  }
  return out.str();
}

nlohmann::json LaurentPoly::to_json() const {
  auto arr = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    arr.push_back({it->first, it->second});
  }
  return arr;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly delta_power(unsigned k) { return LaurentPoly::delta_power(k); }

std::vector<Coeff> coefficient_string(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("empty polynomial");
  const auto& terms = p.terms();
  int stride = 0;
  int prev = terms.begin()->first;
  for (const auto& [e, c] : terms) {
    stride = std::gcd(stride, e - prev);
    prev = e;
  }
  if (stride == 0) return {terms.begin()->second};
  std::vector<Coeff> out;
  for (int e = p.max_exponent(); e >= p.min_exponent(); e -= stride) out.push_back(p.coeff(e));
  return out;
}

QuarterPoly QuarterPoly::from_numerators(std::map<int, Coeff> terms) {
  QuarterPoly q;
  for (auto& [e, c] : terms) {
    if (c != 0) q.terms_.emplace(e, c);
  }
  return q;
}

bool QuarterPoly::integral() const {
  for (const auto& [e, c] : terms_) {
    if (e % 4 != 0) return false;
  }
  return true;
}

Coeff QuarterPoly::coeff_quarter(int numerator) const {
  auto it = terms_.find(numerator);
  return it == terms_.end() ? 0 : it->second;
}

std::string QuarterPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [num, c] : terms_) {
    std::string mono;
    if (num != 0) {
      int g = std::gcd(num < 0 ? -num : num, 4);
      int n = num / g;
      int d = 4 / g;
      if (d == 1) {
        mono = n == 1 ? "t" : "t^" + std::to_string(n);
      } else {
        mono = "t^(" + std::to_string(n) + "/" + std::to_string(d) + ")";
      }
    }
    render_term(out, first, c, mono);
    first = false;
  }
  return out.str();
}

nlohmann::json QuarterPoly::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [num, c] : terms_) arr.push_back({num, 4, c});
  return arr;
}

QuarterPoly jones_normalize(const LaurentPoly& bracket, int writhe) {
  // (-A^-3)^w = (-1)^w A^(-3w)
  LaurentPoly factor = LaurentPoly::monomial(-3 * writhe, (writhe % 2 == 0) ? 1 : -1);
  LaurentPoly v = factor * bracket;
  std::map<int, Coeff> t_terms;
  for (const auto& [e, c] : v.terms()) t_terms.emplace(-e, c);
  return QuarterPoly::from_numerators(std::move(t_terms));
}

}  // namespace chebyknot
