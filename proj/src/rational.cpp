#include "lamono/exact/rational.hpp"

#include <cctype>

#include "lamono/error.hpp"

namespace lamono {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational literal '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InternalError, "division by zero in Q(i)");
  const Rational norm = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / norm;
  Rational i = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::strong_ordering compare(const GaussianRational& a, const GaussianRational& b) {
  if (auto c = compare(a.re, b.re); c != 0) return c;
  return compare(a.im, b.im);
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  return "(" + to_string(z.re) + ")+(" + to_string(z.im) + ")i";
}

}  // namespace lamono
