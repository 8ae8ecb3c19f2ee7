#include "walkarea/exact.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace walkarea {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative top entry " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// Exact quotient of a by the monic polynomial b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t t = 0; t <= db; ++t) a[i - db + t] -= c * b[t];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

std::shared_ptr<const IntPoly> cached_phi(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const IntPoly>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto p = std::make_shared<const IntPoly>(cyclotomic_polynomial(m));
  cache.emplace(m, p);
  return p;
}

}  // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw std::domain_error("cyclotomic_polynomial: order must be positive");
  IntPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

std::string format_poly(const IntPoly& p, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

CyclotomicNumber::CyclotomicNumber(int order) {
  if (order < 1) throw std::domain_error("CyclotomicNumber: order must be positive");
  order_ = order;
  phi_ = cached_phi(order);
  coeffs_.assign(phi_->size() - 1, Rational(0));
}

CyclotomicNumber CyclotomicNumber::rational(int order, const Rational& value) {
  CyclotomicNumber z(order);
  z.coeffs_[0] = value;
  return z;
}

CyclotomicNumber CyclotomicNumber::root_power(int order, long exponent) {
  std::vector<Rational> dense(static_cast<std::size_t>(order), Rational(0));
  dense[static_cast<std::size_t>(mod(exponent, order))] = 1;
  return from_residues(order, std::move(dense));
}

CyclotomicNumber CyclotomicNumber::from_residues(int order, std::vector<Rational> v) {
  if (order < 1 || v.size() != static_cast<std::size_t>(order)) {
    throw std::invalid_argument("from_residues: residue vector length must equal the order");
  }
  auto phi = cached_phi(order);
  const std::size_t d = phi->size() - 1;
  for (std::size_t i = v.size(); i-- > d;) {
    if (v[i] == 0) continue;
    const Rational c = v[i];
    for (std::size_t t = 0; t <= d; ++t) v[i - d + t] -= c * (*phi)[t];
  }
  v.resize(d);
  return CyclotomicNumber(order, std::move(phi), std::move(v));
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& o) const {
  if (order_ != o.order_) throw std::invalid_argument("cyclotomic numbers of different orders");
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

CyclotomicNumber CyclotomicNumber::conj() const {
  std::vector<Rational> dense(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    dense[static_cast<std::size_t>(mod(-static_cast<long>(i), order_))] += coeffs_[i];
  }
  return from_residues(order_, std::move(dense));
}

std::optional<Rational> CyclotomicNumber::to_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> s{0.0, 0.0};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
    s += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return s;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  require_same_order(o);
  std::vector<Rational> dense(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      dense[(i + j) % static_cast<std::size_t>(order_)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  *this = from_residues(order_, std::move(dense));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string to_string(const CyclotomicNumber& z) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << z.coeffs()[i].get_str();
  }
  os << "] (order " << z.order() << ")";
  return os.str();
}

CyclotomicNumber cyclo_reduce(std::span<const LaurentTerm> terms, int order) {
  std::vector<Rational> dense(static_cast<std::size_t>(order), Rational(0));
  for (const auto& t : terms) dense[static_cast<std::size_t>(mod(t.exponent, order))] += t.coeff;
  return CyclotomicNumber::from_residues(order, std::move(dense));
}

// ---------------------------------------------------------------------------

RootOfUnitySum::RootOfUnitySum(int order) {
  if (order < 1) throw std::domain_error("RootOfUnitySum: order must be positive");
  c_.assign(static_cast<std::size_t>(order), 0);
}

RootOfUnitySum RootOfUnitySum::one(int order) {
  RootOfUnitySum s(order);
  s.c_[0] = 1;
  return s;
}

void RootOfUnitySum::add_term(long exponent, const BigInt& coeff) {
  c_[static_cast<std::size_t>(mod(exponent, order()))] += coeff;
}

void RootOfUnitySum::multiply_difference(long e1, long e2) {
  const long m = order();
  std::vector<BigInt> out(c_.size(), 0);
  const long s1 = mod(e1, m);
  const long s2 = mod(e2, m);
  for (long i = 0; i < m; ++i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    out[static_cast<std::size_t>((i + s1) % m)] += c;
    out[static_cast<std::size_t>((i + s2) % m)] -= c;
  }
  c_ = std::move(out);
}

RootOfUnitySum& RootOfUnitySum::operator+=(const RootOfUnitySum& o) {
  if (o.order() != order()) throw std::invalid_argument("root sums of different orders");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicNumber RootOfUnitySum::reduce(const Rational& scale) const {
  std::vector<Rational> dense(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) dense[i] = Rational(c_[i]) * scale;
  return CyclotomicNumber::from_residues(order(), std::move(dense));
}

// ---------------------------------------------------------------------------

long HalfInt::as_integer() const {
  if (!is_integer()) throw std::domain_error("half-integer used where an integer is required");
  return twice_ / 2;
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

PiRational::PiRational(const Rational& value, int inverse_pi_power) {
  if (inverse_pi_power < 0 || inverse_pi_power > kMaxPower) {
    throw std::domain_error("PiRational: power of 1/pi outside {0,1,2}");
  }
  c_[static_cast<std::size_t>(inverse_pi_power)] = value;
}

const Rational& PiRational::coefficient(int k) const {
  if (k < 0 || k > kMaxPower) throw std::out_of_range("PiRational: power of 1/pi outside {0,1,2}");
  return c_[static_cast<std::size_t>(k)];
}

bool PiRational::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0;
}

double PiRational::to_double() const {
  constexpr double pi = std::numbers::pi;
  return c_[0].get_d() + c_[1].get_d() / pi + c_[2].get_d() / (pi * pi);
}

PiRational& PiRational::operator+=(const PiRational& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PiRational operator*(const PiRational& a, const PiRational& b) {
  PiRational r;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      if (i + j > static_cast<std::size_t>(PiRational::kMaxPower)) {
        throw std::domain_error("PiRational product exceeds pi^-2");
      }
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

std::string to_string(const PiRational& v) {
  std::ostringstream os;
  bool first = true;
  static constexpr const char* suffix[] = {"", "/pi", "/pi^2"};
  for (int k = 0; k <= PiRational::kMaxPower; ++k) {
    const Rational& c = v.coefficient(k);
    if (c == 0) continue;
    if (!first) os << " + ";
    os << c.get_str() << suffix[k];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Rational gamma_half_over_sqrt_pi(HalfInt h) {
  if (h.is_integer()) throw std::domain_error("gamma_half_over_sqrt_pi: argument is an integer");
  // h = t + 1/2
  const long t = (h.twice() - 1) / 2;
  if (t >= 0) {
    // Gamma(t + 1/2) = (2t)! / (4^t t!) sqrt(pi)
    BigInt den = factorial(t);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * t));
    Rational r(factorial(2 * t), den);
    r.canonicalize();
    return r;
  }
  // Gamma(1/2 - s) = (-4)^s s! / (2s)! sqrt(pi)
  const long s = -t;
  BigInt num = factorial(s);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * s));
  if (s % 2 == 1) num = -num;
  Rational r(num, factorial(2 * s));
  r.canonicalize();
  return r;
}

PiRational gamma_half_binomial(long n, HalfInt x) {
  if (n < 0) throw std::domain_error("gamma_half_binomial: negative top entry");
  if (x.is_integer()) return PiRational(Rational(binomial(n, x.as_integer())), 0);
  // Gamma(x+1) and Gamma(n-x+1) both sit at half-integers, never at poles.
  const Rational g1 = gamma_half_over_sqrt_pi(x + HalfInt(1));
  const Rational g2 = gamma_half_over_sqrt_pi(HalfInt(n) - x + HalfInt(1));
  return PiRational(Rational(factorial(n)) / (g1 * g2), 1);
}

}  // namespace walkarea
