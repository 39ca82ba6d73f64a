#pragma once

// Exact scalar layer: GMP rationals, lattice vectors and the log-domain
// wrapper used for limit period data.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropkp/error.hpp"

namespace tropkp {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<long>;

/// p/q in lowest terms; mpq_class(p, q) alone is not canonicalized.
Rational frac(long p, long q);

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string to_string(const Rational& q);
std::string to_string(std::span<const Rational> v);
std::string to_string(std::span<const long> v);

/// Accepts "p/q", "p", or a terminating decimal such as "-1.25".
Rational parse_rational(std::string_view text);

/// q^e for any integer e; throws DomainError for 0^e with e < 0.
Rational pow(const Rational& q, long e);

/// Exact square root; throws DomainError if q is not a perfect square.
Rational exact_sqrt(const Rational& q);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const long> a, std::span<const Rational> b);

long binomial(long n, long k);

// A real number log(q) stored through its positive argument q. Sums become
// products and integer multiples become powers, so exponentials stay exact.
class LogRational {
 public:
  LogRational() : arg_(1) {}
  explicit LogRational(Rational arg);

  static LogRational zero() { return LogRational(); }

  const Rational& arg() const { return arg_; }
  Rational exp() const { return arg_; }
  /// exp(value / 2); requires a perfect-square argument.
  Rational exp_half() const { return exact_sqrt(arg_); }
  double approx() const;

  LogRational operator+(const LogRational& o) const;
  LogRational operator-(const LogRational& o) const;
  LogRational operator-() const;
  LogRational operator*(long m) const;
  LogRational& operator+=(const LogRational& o);

  bool operator==(const LogRational& o) const { return arg_ == o.arg_; }

 private:
  Rational arg_;
};

// Signed variant for logarithms of possibly negative rationals: only the
// exponentiated value sign * |arg| is ever consumed downstream.
struct SignedLog {
  LogRational magnitude;
  int sign = 1;

  Rational exp() const { return sign < 0 ? Rational(-magnitude.arg()) : magnitude.arg(); }
};

}  // namespace tropkp
