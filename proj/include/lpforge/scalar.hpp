#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>

#include "lpforge/errors.hpp"

namespace lpforge {

// Exact rational scalar. All certificate arithmetic for integer p runs on
// this type; the floating path uses plain double.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long long num, long long den = 1) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  const BigInt n(static_cast<long>(num)), d(static_cast<long>(den));
  Rat r{n, d};
  r.canonicalize();
  return r;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  Rat r{num, den};
  r.canonicalize();
  return r;
}

// The norm exponent p: an exact integer (rational arithmetic stays exact)
// or a floating real >= 1.
class Exponent {
 public:
  static Exponent integer(long k) {
    if (k < 1) throw ParameterError("exponent p must be >= 1");
    Exponent e;
    e.exact_ = true;
    e.int_value_ = k;
    e.real_value_ = static_cast<double>(k);
    return e;
  }

  static Exponent real(double v) {
    if (!(v >= 1.0)) throw ParameterError("exponent p must be >= 1");
    Exponent e;
    e.exact_ = false;
    e.real_value_ = v;
    return e;
  }

  // Parses "2" as an exact integer exponent and "2.5" as a floating one.
  static Exponent parse(const std::string& text);

  bool is_integer() const { return exact_; }

  long integer_value() const {
    if (!exact_) throw ParameterError("operation requires an integer exponent p");
    return int_value_;
  }

  double value() const { return real_value_; }

  // The p >= 2 regime required by the convexity operations.
  bool convexity_ready() const { return real_value_ >= 2.0; }

  bool operator==(const Exponent& o) const {
    return exact_ == o.exact_ && real_value_ == o.real_value_;
  }

 private:
  Exponent() = default;
  bool exact_ = true;
  long int_value_ = 1;
  double real_value_ = 1.0;
};

inline Exponent Exponent::parse(const std::string& text) {
  std::size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size()) throw ParameterError("malformed exponent: " + text);
  if (text.find_first_of(".eE") == std::string::npos)
    return Exponent::integer(static_cast<long>(v));
  return Exponent::real(v);
}

// --- scalar trait helpers; S is Rat on the exact path, double otherwise ---

template <class S>
inline constexpr bool is_exact_scalar_v = std::is_same_v<S, Rat>;

inline double to_double(double v) { return v; }
inline double to_double(const Rat& v) { return v.get_d(); }

template <class S>
S scalar_from_int(long long k) {
  if constexpr (is_exact_scalar_v<S>)
    return make_rat(k);
  else
    return static_cast<double>(k);
}

// k/d as a scalar, exact in rational mode.
template <class S>
S scalar_ratio(long long k, long long d) {
  if constexpr (is_exact_scalar_v<S>)
    return make_rat(k, d);
  else
    return static_cast<double>(k) / static_cast<double>(d);
}

inline double abs_scalar(double v) { return std::fabs(v); }
inline Rat abs_scalar(const Rat& v) { return abs(v); }

// |v|^p. Exact for rational v with integer p.
inline double pow_abs(double v, const Exponent& p) {
  return std::pow(std::fabs(v), p.value());
}

inline Rat pow_abs(const Rat& v, const Exponent& p) {
  const unsigned long k = static_cast<unsigned long>(p.integer_value());
  const BigInt abs_num = abs(v.get_num());
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), abs_num.get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), k);
  return Rat{num, den};  // already canonical
}

// Exact p-th root of a nonnegative rational, when one exists.
inline std::optional<Rat> exact_pth_root(const Rat& v, const Exponent& p) {
  if (!p.is_integer()) return std::nullopt;
  if (sgn(v) < 0) throw ParameterError("p-th root of a negative rational");
  const unsigned long k = static_cast<unsigned long>(p.integer_value());
  BigInt num, den;
  const bool num_exact =
      mpz_root(num.get_mpz_t(), v.get_num().get_mpz_t(), k) != 0;
  const bool den_exact =
      mpz_root(den.get_mpz_t(), v.get_den().get_mpz_t(), k) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  return Rat(std::move(num), std::move(den));
}

// p-th root on the floating path.
inline double pth_root(double v, const Exponent& p) {
  if (v < 0.0) throw ParameterError("p-th root of a negative value");
  if (v == 0.0) return 0.0;
  return std::pow(v, 1.0 / p.value());
}

}  // namespace lpforge
