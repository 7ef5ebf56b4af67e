#include "lorhol/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lorhol {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  // gmp accepts things like "0x10" and "+ 3"; restrict to [-]digits[/digits].
  std::size_t i = 0;
  if (text[i] == '-' || text[i] == '+') ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  bool denom_digit = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_slash ? denom_digit : seen_digit) = true;
    } else if (ch == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
  }
  if (!seen_digit || (seen_slash && !denom_digit))
    throw std::invalid_argument("malformed rational literal: " + std::string(text));

  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return q_.get_str(10); }

bool Rational::is_integer() const { return q_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / q_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lorhol
