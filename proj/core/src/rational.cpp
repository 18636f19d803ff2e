#include "frobcov/rational.hpp"

#include <algorithm>

#include "frobcov/common.hpp"

namespace frobcov {

Rational parse_rational(const std::string& raw) {
  std::string text = raw;
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  if (text.empty()) throw PreconditionError("empty rational literal");
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      Rational q(text, 10);
      if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + raw + "'");
      q.canonicalize();
      return q;
    }
    if (text.find('/') != std::string::npos) {
      throw PreconditionError("mixed decimal/fraction literal '" + raw + "'");
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw PreconditionError("malformed decimal '" + raw + "'");
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw PreconditionError("malformed rational '" + raw + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace frobcov
