#include "tropkp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace tropkp {

Rational frac(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(std::span<const long> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
  }
  if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
    std::string digits(s.substr(0, dot_pos));
    std::string fraction(s.substr(dot_pos + 1));
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (!is_integer_text(digits) || (!fraction.empty() && !is_integer_text(fraction)) ||
        (!fraction.empty() && (fraction[0] == '-' || fraction[0] == '+')))
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    bool neg = digits[0] == '-';
    mpz_class whole = parse_integer(neg ? std::string_view(digits).substr(1) : digits);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fraction.size(); ++i) scale *= 10;
    mpz_class part = fraction.empty() ? mpz_class(0) : parse_integer(fraction);
    Rational q(whole * scale + part, scale);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  if (!is_integer_text(s)) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  return Rational(parse_integer(s));
}

Rational pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0) {
    if (e < 0) throw DomainError("zero raised to a negative power");
    return Rational(0);
  }
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), m);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

Rational exact_sqrt(const Rational& q) {
  if (q < 0) throw DomainError("square root of negative rational " + q.get_str());
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    throw DomainError("rational " + q.get_str() + " is not a perfect square");
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational(num, den);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const long> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rational(a[i]) * b[i];
  return s;
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LogRational::LogRational(Rational arg) : arg_(std::move(arg)) {
  if (arg_ <= 0) throw DomainError("LogRational needs a positive argument, got " + arg_.get_str());
}

double LogRational::approx() const {
  return std::log(arg_.get_d());
}

LogRational LogRational::operator+(const LogRational& o) const { return LogRational(arg_ * o.arg_); }
LogRational LogRational::operator-(const LogRational& o) const { return LogRational(arg_ / o.arg_); }
LogRational LogRational::operator-() const { return LogRational(1 / arg_); }
LogRational LogRational::operator*(long m) const { return LogRational(pow(arg_, m)); }
LogRational& LogRational::operator+=(const LogRational& o) {
  arg_ *= o.arg_;
  return *this;
}

}  // namespace tropkp
