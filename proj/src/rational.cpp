// rational.cpp — parsing and formatting for exact rationals.
#include "knaster/rational.hpp"

#include <limits>
#include <stdexcept>

#include "knaster/error.hpp"

namespace knaster {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) fail("RationalParse", "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    fail("RationalParse", "cannot parse rational from '" + text + "'");
  }
}

std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {
std::int64_t to_i64(const BigInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    fail("CountOverflow", "rational component exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}
}  // namespace

std::int64_t num_i64(const Rational& q) { return to_i64(numerator(q)); }
std::int64_t den_i64(const Rational& q) { return to_i64(denominator(q)); }

}  // namespace knaster
