#pragma once

// Exact arithmetic substrate: big integers and rationals (GMP), binomials,
// cyclotomic canonical forms for elements of Q(zeta_m), half-integer Gamma
// binomials and values of the form rational * pi^-k.

#include <gmpxx.h>

#include <array>
#include <complex>
#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace walkarea {

using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero outside 0 <= k <= n. Throws std::domain_error for n < 0.
BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Dense integer polynomial; entry i multiplies x^i.
using IntPoly = std::vector<BigInt>;

/// m-th cyclotomic polynomial, obtained by dividing x^m - 1 by Phi_d for
/// every proper divisor d of m.
IntPoly cyclotomic_polynomial(int m);

std::string format_poly(const IntPoly& p, char var = 'x');

/// Element of Q(zeta_m), zeta_m = exp(2 pi i / m), stored as its remainder
/// modulo Phi_m. The remainder is unique, so operator== is exact equality of
/// the complex values.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(int order);

  static CyclotomicNumber rational(int order, const Rational& value);
  /// zeta_m^exponent, exponent taken modulo m.
  static CyclotomicNumber root_power(int order, long exponent);

  int order() const { return order_; }
  /// deg Phi_m; the length of coeffs().
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Complex conjugation, zeta -> zeta^-1.
  CyclotomicNumber conj() const;
  /// The value when it lies in Q.
  std::optional<Rational> to_rational() const;
  std::complex<double> to_complex() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& s);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Reduces a dense residue vector of length m (coefficient of zeta^i at i).
  static CyclotomicNumber from_residues(int order, std::vector<Rational> dense);

 private:
  CyclotomicNumber(int order, std::shared_ptr<const IntPoly> phi, std::vector<Rational> coeffs)
      : order_(order), phi_(std::move(phi)), coeffs_(std::move(coeffs)) {}
  void require_same_order(const CyclotomicNumber& o) const;

  int order_;
  std::shared_ptr<const IntPoly> phi_;
  std::vector<Rational> coeffs_;
};

std::string to_string(const CyclotomicNumber& z);

struct LaurentTerm {
  long exponent;
  Rational coeff;
};

/// Canonical form of sum coeff * zeta_m^exponent (exponents reduced mod m).
CyclotomicNumber cyclo_reduce(std::span<const LaurentTerm> terms, int order);

/// Integer combination of m-th roots of unity with exponents modulo m, i.e.
/// an element of Z[x]/(x^m - 1). Used to build long products cheaply before a
/// single reduction modulo Phi_m.
class RootOfUnitySum {
 public:
  explicit RootOfUnitySum(int order);
  static RootOfUnitySum one(int order);

  int order() const { return static_cast<int>(c_.size()); }
  void add_term(long exponent, const BigInt& coeff);
  /// *this *= (zeta^e1 - zeta^e2)
  void multiply_difference(long e1, long e2);
  RootOfUnitySum& operator+=(const RootOfUnitySum& o);
  const std::vector<BigInt>& residues() const { return c_; }

  CyclotomicNumber reduce(const Rational& scale = Rational(1)) const;

 private:
  std::vector<BigInt> c_;
};

/// A value in Z/2, stored as twice the value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(long integer) : twice_(2 * integer) {}
  static constexpr HalfInt from_twice(long twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Throws std::domain_error for a proper half-integer.
  long as_integer() const;
  constexpr double to_double() const { return static_cast<double>(twice_) / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  long twice_ = 0;
};

std::string to_string(HalfInt h);

/// Exact value c0 + c1/pi + c2/pi^2.
class PiRational {
 public:
  static constexpr int kMaxPower = 2;

  PiRational() = default;
  explicit PiRational(const Rational& value, int inverse_pi_power = 0);

  const Rational& coefficient(int inverse_pi_power) const;
  bool is_zero() const;
  double to_double() const;

  PiRational& operator+=(const PiRational& o);
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  /// Throws std::domain_error if a power of 1/pi above 2 would appear.
  friend PiRational operator*(const PiRational& a, const PiRational& b);
  friend bool operator==(const PiRational& a, const PiRational& b) { return a.c_ == b.c_; }

 private:
  std::array<Rational, kMaxPower + 1> c_{};
};

std::string to_string(const PiRational& v);

/// Gamma(h) / sqrt(pi) for a proper half-integer h.
Rational gamma_half_over_sqrt_pi(HalfInt h);

/// Generalized binomial Gamma(n+1) / (Gamma(x+1) Gamma(n-x+1)) for x in Z/2.
/// Integer x gives binomial(n, x); a half-integer x gives rational/pi.
PiRational gamma_half_binomial(long n, HalfInt x);

}  // namespace walkarea
