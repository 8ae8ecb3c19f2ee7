#include "walkarea/apery.hpp"

#include <stdexcept>

namespace walkarea {

std::string to_string(AperyId id) {
  switch (id) {
    case AperyId::A081085: return "A081085";
    case AperyId::A143583: return "A143583";
    case AperyId::A006077: return "A006077";
  }
  return "?";
}

AperyId parse_apery(std::string_view name) {
  for (auto id : {AperyId::A081085, AperyId::A143583, AperyId::A006077}) {
    if (name == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown sequence '" + std::string(name) +
                              "' (expected A081085, A143583 or A006077)");
}

AperyBinding apery_binding(AperyId id) {
  switch (id) {
    case AperyId::A081085: return {cluster_spec(WalkFamily::SquareR2), Flux(1, 2)};
    case AperyId::A143583: return {cluster_spec(WalkFamily::SquareR4), Flux(1, 2)};
    case AperyId::A006077: return {cluster_spec(WalkFamily::TriangularChiral), Flux(1, 3)};
  }
  throw std::invalid_argument("unknown sequence");
}

namespace {

BigInt pow_int(long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

BigInt closed_a081085(long n) {
  BigInt first = 0;
  for (long k = 0; k <= n; ++k) first += binomial(n, k) * binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k);
  BigInt second = 0;
  for (long k = 0; 2 * k <= n; ++k) {
    const BigInt c = binomial(2 * k, k);
    second += pow_int(4, static_cast<unsigned long>(n - 2 * k)) * binomial(n, 2 * k) * c * c;
  }
  if (first != second) throw std::logic_error("A081085: closed forms disagree at n = " + std::to_string(n));
  return first;
}

BigInt closed_a143583(long n) {
  BigInt first = 0;
  for (long k = 0; k <= n; ++k) {
    first += binomial(2 * k, k) * binomial(4 * k, 2 * k) * binomial(2 * n - 2 * k, n - k) *
             binomial(4 * n - 4 * k, 2 * n - 2 * k);
  }
  const BigInt den = binomial(2 * n, n);
  if (first % den != 0) throw std::logic_error("A143583: first form is not an integer");
  first /= den;
  BigInt second = 0;
  for (long k = 0; k <= n; ++k) {
    const BigInt c = binomial(2 * k, k);
    second += pow_int(4, static_cast<unsigned long>(n - k)) * binomial(2 * n - 2 * k, n - k) * c * c;
  }
  if (first != second) throw std::logic_error("A143583: closed forms disagree at n = " + std::to_string(n));
  return first;
}

BigInt closed_a006077(long n) {
  BigInt first = 0;
  BigInt second = 0;
  for (long k = 0; 3 * k <= n; ++k) {
    const BigInt p3 = pow_int(3, static_cast<unsigned long>(n - 3 * k));
    const int sign = k % 2 == 0 ? 1 : -1;
    first += sign * p3 * binomial(n, 3 * k) * binomial(2 * k, k) * binomial(3 * k, k);
    // n! / ((n-3k)! k! k! k!)
    const BigInt kf = factorial(k);
    second += sign * p3 * (factorial(n) / (factorial(n - 3 * k) * kf * kf * kf));
  }
  if (first != second) throw std::logic_error("A006077: closed forms disagree at n = " + std::to_string(n));
  return first;
}

}  // namespace

BigInt apery_closed(AperyId id, int n) {
  if (n < 0) throw std::domain_error("apery_closed: n must be >= 0");
  switch (id) {
    case AperyId::A081085: return closed_a081085(n);
    case AperyId::A143583: return closed_a143583(n);
    case AperyId::A006077: return closed_a006077(n);
  }
  throw std::invalid_argument("unknown sequence");
}

AperyRecurrence apery_recurrence(AperyId id, long n) {
  const BigInt m(n);
  const BigInt alpha = (m + 1) * (m + 1);
  switch (id) {
    case AperyId::A081085: return {alpha, 12 * m * (m + 1) + 4, 32 * m * m};
    case AperyId::A143583: return {alpha, 32 * m * (m + 1) + 12, 256 * m * m};
    case AperyId::A006077: return {alpha, 9 * m * (m + 1) + 3, 27 * m * m};
  }
  throw std::invalid_argument("unknown sequence");
}

std::vector<BigInt> apery_recurrence_extend(AperyId id, const BigInt& b1, const BigInt& b2, int count) {
  if (count < 0) throw std::domain_error("apery_recurrence_extend: negative count");
  std::vector<BigInt> out{b1, b2};
  for (long n = 2; static_cast<int>(out.size()) < count; ++n) {
    const auto rec = apery_recurrence(id, n);
    const BigInt num = rec.beta * out[n - 1] - rec.gamma * out[n - 2];
    if (num % rec.alpha != 0) {
      throw std::logic_error(to_string(id) + ": recurrence gives a non-integer term b(" + std::to_string(n + 1) +
                             ")");
    }
    out.push_back(num / rec.alpha);
  }
  out.resize(static_cast<std::size_t>(count));
  return out;
}

std::vector<BigInt> apery_recurrence_extend(AperyId id, int count) {
  return apery_recurrence_extend(id, apery_closed(id, 1), apery_closed(id, 2), count);
}

namespace {

BigInt integer_value(const CyclotomicNumber& z, const std::string& what) {
  const auto q = z.to_rational();
  if (!q) throw std::logic_error(what + ": cluster value is not rational (" + to_string(z) + ")");
  if (q->get_den() != 1) throw std::logic_error(what + ": cluster value " + q->get_str() + " is not an integer");
  return q->get_num();
}

}  // namespace

BigInt apery_via_cluster(AperyId id, int n, const ClusterOptions& opts) {
  const auto b = apery_binding(id);
  return integer_value(cluster_value(b.spec, n, b.flux, opts), to_string(id));
}

BigInt apery_r1_cluster(int n, const ClusterOptions& opts) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("r = 1 binding needs an even walk length n >= 2");
  return integer_value(cluster_value(ClusterSpec{2, Family::Power, 1}, n, Flux(1, 2), opts), "r = 1 binding");
}

}  // namespace walkarea
