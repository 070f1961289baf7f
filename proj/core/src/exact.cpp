#include "mixlab/exact.hpp"

#include <cctype>

#include "mixlab/error.hpp"

namespace mixlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::DomainMismatch: return "domain_mismatch";
    case ErrorKind::OutOfRange: return "out_of_range";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Guard: return "guard";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) raise(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text)) {
    raise(ErrorKind::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return make_rational(parse_bigint(text.substr(0, slash)),
                       parse_bigint(text.substr(slash + 1)));
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

BigInt floor_div(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::int64_t to_int64(const BigInt& z) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!z.fits_slong_p()) {
    raise(ErrorKind::Guard, "integer does not fit in 64 bits: " + z.get_str());
  }
  return z.get_si();
}

std::uint64_t to_uint64(const BigInt& z) {
  if (!z.fits_ulong_p()) {
    raise(ErrorKind::Guard, "integer does not fit in unsigned 64 bits: " + z.get_str());
  }
  return z.get_ui();
}

}  // namespace mixlab
