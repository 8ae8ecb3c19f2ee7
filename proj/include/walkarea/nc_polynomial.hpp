#pragma once

// Polynomials in the noncommutative torus generators u, v with vu = Q uv.
// Coefficients are Laurent polynomials in the formal symbol Q over the
// Gaussian rationals. Monomials are kept in normal order u^m v^n.

#include <map>
#include <string>
#include <utility>

#include "walkarea/exact.hpp"

namespace walkarea {

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& z);

/// Laurent polynomial in Q: exponent -> coefficient, zeros never stored.
class QLaurent {
 public:
  QLaurent() = default;
  static QLaurent monomial(long exponent, GaussianRational coeff);

  void add(long exponent, const GaussianRational& coeff);
  const std::map<long, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QLaurent& operator+=(const QLaurent& o);
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  /// Multiplies by Q^shift.
  QLaurent shifted(long shift) const;
  friend bool operator==(const QLaurent&, const QLaurent&) = default;

 private:
  std::map<long, GaussianRational> terms_;
};

class NCPolynomial {
 public:
  using Exponents = std::pair<long, long>;  // (power of u, power of v)

  NCPolynomial() = default;
  static NCPolynomial one();
  /// coeff * u^m v^n
  static NCPolynomial monomial(long m, long n, GaussianRational coeff = Rational(1));
  static NCPolynomial u(long power = 1) { return monomial(power, 0); }
  static NCPolynomial v(long power = 1) { return monomial(0, power); }

  void add(long m, long n, const QLaurent& coeff);
  const std::map<Exponents, QLaurent>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  QLaurent coefficient(long m, long n) const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  /// Uses u^a v^b u^c v^d = Q^{bc} u^{a+c} v^{b+d}.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  NCPolynomial scaled(const GaussianRational& c) const;
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  NCPolynomial pow(int k) const;

 private:
  std::map<Exponents, QLaurent> terms_;
};

/// Coefficient of u^0 v^0 in a * b, without forming the full product.
QLaurent constant_term_of_product(const NCPolynomial& a, const NCPolynomial& b);

std::string to_string(const QLaurent& p);
std::string to_string(const NCPolynomial& p);

}  // namespace walkarea
