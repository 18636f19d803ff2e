#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace frobcov {

/// Arbitrary-precision rational used by the exact flavor of the lattice code.
using Rational = mpq_class;

/// Numeric policy shared by the exact and floating lattice routines.
///
/// `eps` is the absolute slack used for strict comparisons; it is zero for
/// rationals so that every test is decided exactly.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double eps() { return 1e-9; }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static double round(double v) { return std::nearbyint(v); }
  static double from_int(long long v) { return static_cast<double>(v); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational eps() { return Rational(0); }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational abs(const Rational& v) { return ::abs(v); }
  static Rational round(const Rational& v) {
    // floor(v + 1/2)
    Rational shifted = v + Rational(1, 2);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return Rational(q);
  }
  static Rational from_int(long long v) { return Rational(static_cast<long>(v)); }
};

/// Parses "p", "p/q" or a decimal literal ("1.25") into an exact rational.
Rational parse_rational(const std::string& text);

/// Formats a rational as "p" or "p/q".
std::string to_string(const Rational& q);

}  // namespace frobcov
