#include "moonforge/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include <boost/integer/common_factor_rt.hpp>

#include "moonforge/errors.hpp"

namespace moonforge {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw ValidationError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt Rational::floor() const {
  BigInt q, r;
  boost::multiprecision::divide_qr(num_, den_, q, r);
  // divide_qr truncates toward zero.
  if (r.sign() < 0) --q;
  return q;
}

BigInt Rational::ceil() const {
  BigInt f = floor();
  return is_integer() ? f : f + 1;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.num_.sign() < 0) r.num_ = -r.num_;
  return r;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw ValidationError("reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw ValidationError("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt to_bigint(std::string_view digits) { return BigInt(std::string(digits)); }

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return ParseError("invalid rational '" + std::string(text) + "': " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view p = body.substr(0, slash);
    std::string_view q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw fail("expected p/q with decimal digits");
    BigInt den = to_bigint(q);
    if (den == 0) throw fail("zero denominator");
    value = Rational(to_bigint(p), std::move(den));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail("empty decimal");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw fail("expected a finite decimal a.b");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = whole.empty() ? BigInt(0) : to_bigint(whole);
    num *= scale;
    if (!frac.empty()) num += to_bigint(frac);
    value = Rational(std::move(num), std::move(scale));
  } else {
    if (!all_digits(body)) throw fail("expected an integer, p/q or a.b");
    value = Rational(to_bigint(body));
  }
  return negative ? -value : value;
}

}  // namespace moonforge
