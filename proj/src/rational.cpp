#include "tropmoment/rational.hpp"

#include <cctype>

#include "tropmoment/error.hpp"

namespace tropmoment {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NonPositiveImaginaryPart: return "NonPositiveImaginaryPart";
    case ErrorCode::NegativeOrder: return "NegativeOrder";
    case ErrorCode::AtDivisor: return "AtDivisor";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::DomainError, "rational", "zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s, true)) {
      throw Error(ErrorCode::ParseError, "rational",
                  "expected \"p/q\" or \"p\", got \"" + std::string(text) + "\"");
    }
    return Rational(parse_integer(s));
  }
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::ParseError, "rational",
                "expected \"p/q\" or \"p\", got \"" + std::string(text) + "\"");
  }
  const Integer d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "rational",
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return make_rational(parse_integer(num), d);
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& value) { return value - Rational(floor(value)); }

double to_double(const Rational& value) { return value.get_d(); }

Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

}  // namespace tropmoment
