#include "ortholat/rational.hpp"

#include <cctype>

#include "ortholat/error.hpp"

namespace ortholat {

Rat parse_rat(const std::string& text) {
  if (text.empty()) raise(errc::parse_error, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) raise(errc::parse_error, "zero denominator in '" + text + "'");
      return Rat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::size_t frac_len = text.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+")
        raise(errc::parse_error, "bad rational literal '" + text + "'");
      BigInt num(digits);
      BigInt den = 1;
      for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
      return Rat(num, den);
    }
    return Rat(BigInt(text));
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    raise(errc::parse_error, "bad rational literal '" + text + "'");
  }
}

std::string rat_str(const Rat& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_grade(const Rat& value) { return value >= 0 && value <= 1; }

Rat make_grade(const Rat& value) {
  if (!is_grade(value)) raise(errc::out_of_range, "grade " + rat_str(value) + " outside [0,1]");
  return value;
}

}  // namespace ortholat
