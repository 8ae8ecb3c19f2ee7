#pragma once

// Test-side reference computations, written without the library's
// algorithms so that frozen expectations do not depend on the code under
// test.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "walkarea/exact.hpp"
#include "walkarea/spectral.hpp"

namespace oracle {

using walkarea::BigInt;

// All tuples with positive ends, zero runs <= g-2, summing to n.
inline std::vector<std::vector<int>> brute_compositions(int n, int g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int zeros) -> void {
    if (left == 0) {
      if (!cur.empty() && cur.back() > 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      if (v == 0 && (cur.empty() || zeros + 1 > g - 2)) continue;
      cur.push_back(v);
      self(self, left - v, v == 0 ? zeros + 1 : 0);
      cur.pop_back();
    }
  };
  rec(rec, n, 0);
  return out;
}

inline BigInt fact(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

// Exponent table of 2 sin(pi t + pi s p/q) written directly from the
// family definitions: each part l_i at position i contributes its sine
// factors at shifts i + m.
inline std::vector<int> exponents_by_shift(walkarea::Family f, int r, const std::vector<int>& parts) {
  std::vector<int> shifts;
  if (f == walkarea::Family::Power) shifts.assign(r, 0);
  if (f == walkarea::Family::Product) {
    for (int s = 0; s < r; ++s) shifts.push_back(s);
  }
  if (f == walkarea::Family::Mixed) {
    shifts.assign(r / 2, 0);
    shifts.insert(shifts.end(), r / 2, 1);
  }
  std::map<int, int> e;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int m : shifts) e[static_cast<int>(i) + m] += parts[i];
  }
  std::vector<int> v(e.empty() ? 0 : e.rbegin()->first + 1, 0);
  for (auto [s, x] : e) v[s] = x;
  return v;
}

// int_0^1 dt prod_s (2 sin(pi t + pi s p/q))^{e_s}, as a map A -> coefficient
// of e^{i pi A p/q}. Each factor is -i (z w^s - z^-1 w^-s) with z = e^{i pi t},
// w = e^{i pi p/q}; only the z^0 part survives the t integral.
inline std::map<long, BigInt> integral_spectrum(walkarea::Family f, int r, const std::vector<int>& parts) {
  const auto e = exponents_by_shift(f, r, parts);
  std::map<std::pair<long, long>, BigInt> poly{{{0, 0}, 1}};  // (z exponent, w exponent)
  long degree = 0;
  for (std::size_t s = 0; s < e.size(); ++s) {
    for (int rep = 0; rep < e[s]; ++rep) {
      std::map<std::pair<long, long>, BigInt> next;
      for (const auto& [k, c] : poly) {
        next[{k.first + 1, k.second + static_cast<long>(s)}] += c;
        next[{k.first - 1, k.second - static_cast<long>(s)}] -= c;
      }
      poly.swap(next);
      ++degree;
    }
  }
  // (-i)^degree with degree even
  const int sign = (degree / 2) % 2 == 0 ? 1 : -1;
  std::map<long, BigInt> out;
  for (const auto& [k, c] : poly) {
    if (k.first == 0 && c != 0) out[k.second] += sign * c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Floating evaluation of (1/q) sum_k prod_i b(k+i-1)^{l_i}.
inline std::complex<double> numeric_trig_sum(walkarea::Family f, int r, long p, long q,
                                             const std::vector<int>& parts) {
  auto b = [&](long k) {
    auto s = [&](long m) { return 2.0 * std::sin(std::numbers::pi * static_cast<double>(m * p) / q); };
    double v = 1;
    if (f == walkarea::Family::Power) v = std::pow(s(k), r);
    if (f == walkarea::Family::Product) {
      for (int j = 0; j < r; ++j) v *= s(k + j);
    }
    if (f == walkarea::Family::Mixed) v = std::pow(s(k), r / 2) * std::pow(s(k + 1), r / 2);
    return v;
  };
  double total = 0;
  for (long k = 1; k <= q; ++k) {
    double term = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) term *= std::pow(b(k + static_cast<long>(i)), parts[i]);
    total += term;
  }
  return total / static_cast<double>(q);
}

// sum_A c(A) cos(pi A p/q) (the spectra are symmetric).
inline double numeric_substitution(const std::map<long, BigInt>& s, long p, long q) {
  double v = 0;
  for (const auto& [a, c] : s) v += c.get_d() * std::cos(std::numbers::pi * static_cast<double>(a * p) / q);
  return v;
}

inline double gamma_binomial(double n, double x) {
  // poles of Gamma(x+1) or Gamma(n-x+1) give zero
  auto pole = [](double y) { return y <= 0 && std::floor(y) == y; };
  if (pole(x + 1) || pole(n - x + 1)) return 0;
  return std::tgamma(n + 1) / (std::tgamma(x + 1) * std::tgamma(n - x + 1));
}

}  // namespace oracle
