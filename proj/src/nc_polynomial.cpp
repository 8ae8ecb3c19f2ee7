#include "walkarea/nc_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace walkarea {

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return z.re.get_str();
  if (z.re == 0) return z.im.get_str() + "i";
  return "(" + z.re.get_str() + (z.im > 0 ? "+" : "") + z.im.get_str() + "i)";
}

QLaurent QLaurent::monomial(long exponent, GaussianRational coeff) {
  QLaurent p;
  p.add(exponent, coeff);
  return p;
}

void QLaurent::add(long exponent, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  }
  return out;
}

QLaurent QLaurent::shifted(long shift) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

NCPolynomial NCPolynomial::one() {
  return monomial(0, 0);
}

NCPolynomial NCPolynomial::monomial(long m, long n, GaussianRational coeff) {
  NCPolynomial p;
  p.add(m, n, QLaurent::monomial(0, std::move(coeff)));
  return p;
}

void NCPolynomial::add(long m, long n, const QLaurent& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({m, n}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent NCPolynomial::coefficient(long m, long n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? QLaurent{} : it->second;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [mn, c] : o.terms_) add(mn.first, mn.second, c);
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      // v^{b} u^{c} = Q^{bc} u^{c} v^{b}
      out.add(ea.first + eb.first, ea.second + eb.second, (ca * cb).shifted(ea.second * eb.first));
    }
  }
  return out;
}

NCPolynomial NCPolynomial::scaled(const GaussianRational& c) const {
  NCPolynomial out;
  const QLaurent k = QLaurent::monomial(0, c);
  for (const auto& [mn, coeff] : terms_) out.add(mn.first, mn.second, coeff * k);
  return out;
}

NCPolynomial NCPolynomial::pow(int k) const {
  if (k < 0) throw std::domain_error("NCPolynomial::pow: negative exponent");
  NCPolynomial result = one();
  NCPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

QLaurent constant_term_of_product(const NCPolynomial& a, const NCPolynomial& b) {
  QLaurent out;
  for (const auto& [ea, ca] : a.terms()) {
    auto it = b.terms().find({-ea.first, -ea.second});
    if (it == b.terms().end()) continue;
    out += (ca * it->second).shifted(ea.second * -ea.first);
  }
  return out;
}

std::string to_string(const QLaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    os << to_string(c);
    if (e != 0) os << "*Q^" << e;
    first = false;
  }
  return os.str();
}

std::string to_string(const NCPolynomial& p) {
  if (p.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mn, c] : p.terms()) {
    if (!first) os << " + ";
    os << "[" << to_string(c) << "] u^" << mn.first << " v^" << mn.second;
    first = false;
  }
  return os.str();
}

}  // namespace walkarea
