#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gia {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline bool fits_int64(const BigInt& v) {
  static const BigInt lo("-9223372036854775808");
  static const BigInt hi("9223372036854775807");
  return v >= lo && v <= hi;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) return v < 0 ? INT64_MIN : INT64_MAX;
  return static_cast<std::int64_t>(std::stoll(v.get_str()));
}

inline BigInt from_uint64(std::uint64_t v) { return BigInt(std::to_string(v)); }

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt power(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace gia
