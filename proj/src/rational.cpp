#include "webtrace/rational.hpp"

#include <cctype>

#include "webtrace/errors.hpp"

namespace webtrace {

Rat make_rat(long num, long den) {
  if (den == 0) {
    throw Error(ErrorCode::invalid_argument, "rational with zero denominator");
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// Consumes one optional minus sign (ASCII '-' or the three-byte UTF-8
// encoding of U+2212) followed by at least one digit; returns the digits
// with a normalized '-' prefix, or empty on malformed input.
std::string scan_signed_digits(std::string_view text, std::size_t& pos) {
  std::string out;
  if (pos < text.size() && text[pos] == '-') {
    out.push_back('-');
    pos += 1;
  } else if (text.substr(pos, 3) == "\xe2\x88\x92") {
    out.push_back('-');
    pos += 3;
  }
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    out.push_back(text[pos]);
    ++pos;
    ++digits;
  }
  if (digits == 0) return {};
  return out;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw Error(ErrorCode::parse,
                "malformed rational '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  std::string num = scan_signed_digits(text, pos);
  if (num.empty()) fail();
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = scan_signed_digits(text, pos);
    if (den.empty()) fail();
  }
  if (pos != text.size()) fail();
  Int n(num), d(den);
  if (d == 0) {
    throw Error(ErrorCode::parse,
                "zero denominator in rational '" + std::string(text) + "'");
  }
  Rat q(n);
  q /= Rat(d);
  return q;
}

std::string format_rational(const Rat& value) {
  // mpq_class::get_str is canonical provided the value is, and every value
  // in the library is produced canonicalized.
  return value.get_str();
}

}  // namespace webtrace
