#include "rootspace/rational.hpp"

#include <charconv>

#include "rootspace/error.hpp"

namespace rootspace {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IllegalType: return "IllegalType";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::EmptyI: return "EmptyI";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::NotAffineType: return "NotAffineType";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::InfiniteOrbit: return "InfiniteOrbit";
    case ErrorKind::NoSingleStep: return "NoSingleStep";
    case ErrorKind::NotAPositiveRoot: return "NotAPositiveRoot";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotDominantIntegralOnJ: return "NotDominantIntegralOnJ";
    case ErrorKind::JEqualsWholeSet: return "JEqualsWholeSet";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::NoWordFound: return "NoWordFound";
    case ErrorKind::Unclassified: return "Unclassified";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::size_t offset) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    const std::size_t pos = offset + static_cast<std::size_t>(ptr - text.data());
    throw Error(ErrorKind::Parse,
                "invalid rational at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
  }
  return value;
}

Rational parse_at(std::string_view text, std::size_t offset) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, offset));
  const auto num = parse_int(text.substr(0, slash), offset);
  const auto den = parse_int(text.substr(slash + 1), offset + slash + 1);
  if (den == 0) {
    throw Error(ErrorKind::Parse, "zero denominator at position " + std::to_string(offset + slash + 1));
  }
  return Rational(num, den);
}

}  // namespace

Rational parse_rational(std::string_view text) { return parse_at(text, 0); }

RationalVec parse_rational_list(std::string_view text) {
  RationalVec out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_at(piece, start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace rootspace
