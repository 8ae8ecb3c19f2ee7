#include "walkarea/binomial_sums.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace walkarea {

std::vector<int> window_exponents(Family family, int r, std::span<const int> parts) {
  SpectralSpec{family, r, Flux(1, 1)}.validate();
  const int j = static_cast<int>(parts.size());
  auto part = [&](int i) { return (i >= 0 && i < j) ? parts[static_cast<std::size_t>(i)] : 0; };

  std::vector<int> e;
  switch (family) {
    case Family::Power:
      for (int i = 0; i < j; ++i) e.push_back(r * part(i));
      break;
    case Family::Product:
      // b(k+i) covers shifts i .. i+r-1
      for (int s = 0; s < j + r - 1; ++s) {
        int sum = 0;
        for (int i = s - r + 1; i <= s; ++i) sum += part(i);
        e.push_back(sum);
      }
      break;
    case Family::Mixed:
      for (int s = 0; s <= j; ++s) e.push_back(r / 2 * (part(s - 1) + part(s)));
      break;
  }
  while (e.size() < 2) e.push_back(0);
  return e;
}

void require_even_degree(Family family, int r, std::span<const int> parts) {
  SpectralSpec{family, r, Flux(1, 1)}.validate();
  long total = 0;
  for (int l : parts) {
    if (l < 0) throw std::domain_error("parts must be non-negative");
    total += l;
  }
  if ((static_cast<long>(r) * total) % 2 != 0) {
    throw std::domain_error("r * (l_1 + ... + l_j) must be even (r = " + std::to_string(r) +
                            ", sum of parts = " + std::to_string(total) + ")");
  }
}

bool has_closed_area_bound(Family family, int r) {
  return family == Family::Power || (family == Family::Product && r == 2);
}

namespace {

// Parity of A = sum_s s * (2 k_s): twice k_s has the parity of e_s.
int derived_parity(const std::vector<int>& e) {
  long odd = 0;
  for (std::size_t s = 1; s < e.size(); s += 2) odd += e[s];
  return static_cast<int>(odd % 2);
}

// max of sum_s s * K_s subject to sum K_s = 0, |K_s| <= e_s, K_s = e_s mod 2,
// where K_s is twice k_s.
long max_linear_area(const std::vector<int>& e) {
  long total = 0;
  long value = 0;
  for (std::size_t s = 0; s < e.size(); ++s) {
    total += e[s];
    value -= static_cast<long>(s) * e[s];
  }
  long raise = total;  // total increase needed to bring sum K_s from -E to 0
  for (std::size_t s = e.size(); s-- > 0 && raise > 0;) {
    const long step = std::min<long>(raise, 2L * e[s]);
    value += static_cast<long>(s) * step;
    raise -= step;
  }
  return value;
}

long closed_bound(Family family, int r, int g, long n) {
  if (family == Family::Power) return static_cast<long>(g - 1) * r * ((n * n) / 4);
  // Product, r = 2
  const long sq = n * n;
  return (sq + 1) / 2 + static_cast<long>(g - 2) * (sq / 2);
}

}  // namespace

AreaSupport binomial_support_bound(Family family, int r, std::span<const int> parts) {
  const auto e = window_exponents(family, r, parts);
  std::vector<int> rev(e.rbegin(), e.rend());
  const long hi = std::max(max_linear_area(e), max_linear_area(rev));
  return AreaSupport{-hi, hi, derived_parity(e), 2};
}

AreaSupport area_support(Family family, int r, const Composition& c) {
  const auto& parts = c.parts();
  if (!has_closed_area_bound(family, r)) return binomial_support_bound(family, r, parts);
  const long b = closed_bound(family, r, c.g(), c.total());
  return AreaSupport{-b, b, derived_parity(window_exponents(family, r, parts)), 2};
}

AreaSupport area_support(Family family, int r, int g, int n) {
  if (n < 1) throw std::domain_error("area_support: n must be >= 1");
  std::optional<AreaSupport> acc;
  GCompositions gen(n, g);
  while (auto c = gen.next()) {
    const AreaSupport s = area_support(family, r, *c);
    if (!acc) {
      acc = s;
      continue;
    }
    acc->a_min = std::min(acc->a_min, s.a_min);
    acc->a_max = std::max(acc->a_max, s.a_max);
    if (acc->parity != s.parity) acc->step = 1;
  }
  if (acc->step == 1) acc->parity = 0;
  return *acc;
}

// ---------------------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

// Rows up to this size keep every term and partial sum below 2^127.
constexpr int kNativeRowLimit = 128;

const std::vector<std::vector<u128>>& pascal_u128() {
  static const auto rows = [] {
    std::vector<std::vector<u128>> t(kNativeRowLimit + 1);
    for (int n = 0; n <= kNativeRowLimit; ++n) {
      t[n].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return rows;
}

BigInt to_bigint(u128 v) {
  BigInt hi(static_cast<unsigned long>(v >> 64));
  BigInt lo(static_cast<unsigned long>(v & ~static_cast<unsigned long>(0)));
  hi <<= 64;
  return hi + lo;
}

struct BigRows {
  std::vector<std::vector<BigInt>> rows;
  explicit BigRows(int max_n) : rows(static_cast<std::size_t>(max_n) + 1) {
    for (int n = 0; n <= max_n; ++n) {
      rows[n].resize(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) rows[n][k] = binomial(n, k);
    }
  }
};

// Nested sum over k_3..k_S with the first two binomials closing the sums.
// K values are twice the k_i of the summand; A = 2a - e_1 - D1 where a is the first
// binomial's lower entry and D1 = sum (i-2) K_i.
template <class Num, class Choose>
class NestedSum {
 public:
  NestedSum(const std::vector<int>& e, long bound, Choose choose)
      : e_(e), bound_(bound), choose_(choose), acc_(static_cast<std::size_t>(2 * bound + 1), Num(0)) {}

  // Runs the sums with the outermost free index restricted to its values
  // at positions [first, last) of its range.
  void run(std::size_t first, std::size_t last) {
    if (e_.size() <= 2) {
      leaf(Num(1), 0, 0);
      return;
    }
    const int top = e_[2];
    std::size_t idx = 0;
    for (int K = -top; K <= top; K += 2, ++idx) {
      if (idx < first || idx >= last) continue;
      descend(3, choose_(top, (top + K) / 2), 1L * K, 2L * K, K);
    }
  }

  std::vector<Num>& accumulator() { return acc_; }

 private:
  // d1 = sum (s-1) K_s, d2 = sum s K_s, sk = sum K_s over 0-based shifts s >= 2
  void descend(std::size_t s, const Num& prod, long d1, long d2, long sk) {
    if (s == e_.size()) {
      (void)d2;
      leaf(prod, d1, sk);
      return;
    }
    const int top = e_[s];
    const long w = static_cast<long>(s);
    for (int K = -top; K <= top; K += 2) {
      descend(s + 1, prod * choose_(top, (top + K) / 2), d1 + (w - 1) * K, d2 + w * K, sk + K);
    }
  }

  void leaf(const Num& prod, long d1, long sk) {
    const long e0 = e_[0];
    const long e1 = e_[1];
    const long twice_t = e0 + e1 - sk;
    if (twice_t % 2 != 0) throw std::logic_error("binomial sum: half-integer lower entry");
    const long t = twice_t / 2;
    const long a_lo = std::max(0L, t - e1);
    const long a_hi = std::min(e0, t);
    for (long a = a_lo; a <= a_hi; ++a) {
      const long b = t - a;
      // lower entries, measured from the binomial centres, sum to zero
      if ((2 * a - e0) + (2 * b - e1) + sk != 0) {
        throw std::logic_error("binomial sum: lower entries do not sum to zero");
      }
      const long area = 2 * a - e0 - d1;
      if (area < -bound_ || area > bound_) throw std::logic_error("binomial sum: A outside support");
      acc_[static_cast<std::size_t>(area + bound_)] +=
          prod * choose_(static_cast<int>(e0), static_cast<int>(a)) *
          choose_(static_cast<int>(e1), static_cast<int>(b));
    }
  }

  const std::vector<int>& e_;
  long bound_;
  Choose choose_;
  std::vector<Num> acc_;
};

template <class Num, class Choose>
std::vector<Num> run_nested(const std::vector<int>& e, long bound, Choose choose, int threads) {
  const std::size_t outer = e.size() > 2 ? static_cast<std::size_t>(e[2]) + 1 : 1;
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, outer);
  if (workers == 1) {
    NestedSum<Num, Choose> sum(e, bound, choose);
    sum.run(0, outer);
    return std::move(sum.accumulator());
  }
  std::vector<NestedSum<Num, Choose>> parts;
  parts.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) parts.emplace_back(e, bound, choose);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = outer * w / workers;
      const std::size_t last = outer * (w + 1) / workers;
      pool.emplace_back([&parts, w, first, last] { parts[w].run(first, last); });
    }
  }
  auto out = std::move(parts[0].accumulator());
  for (std::size_t w = 1; w < workers; ++w) {
    const auto& other = parts[w].accumulator();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other[i];
  }
  return out;
}

}  // namespace

AreaSpectrum binomial_spectrum(Family family, int r, std::span<const int> parts, int threads) {
  require_even_degree(family, r, parts);
  const auto e = window_exponents(family, r, parts);
  const AreaSupport support = binomial_support_bound(family, r, parts);
  const long bound = support.a_max;

  SpectrumMeta meta;
  meta.source = to_string(family);
  meta.r = r;
  meta.n = std::accumulate(parts.begin(), parts.end(), 0);
  meta.parts.assign(parts.begin(), parts.end());
  meta.support = support;
  AreaSpectrum out(std::move(meta));

  const int degree = std::accumulate(e.begin(), e.end(), 0);
  if (degree <= kNativeRowLimit) {
    const auto& rows = pascal_u128();
    auto choose = [&rows](int n, int k) -> u128 { return rows[n][k]; };
    const auto acc = run_nested<u128>(e, bound, choose, threads);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] != 0) out.add(static_cast<long>(i) - bound, to_bigint(acc[i]));
    }
  } else {
    const BigRows table(*std::max_element(e.begin(), e.end()));
    auto choose = [&table](int n, int k) -> const BigInt& { return table.rows[n][k]; };
    const auto acc = run_nested<BigInt>(e, bound, choose, threads);
    for (std::size_t i = 0; i < acc.size(); ++i) out.add(static_cast<long>(i) - bound, acc[i]);
  }
  return out;
}

BigInt spectrum_total(const AreaSpectrum& s) {
  return s.total();
}

PiRational odd_parity_tail(int r, std::span<const int> parts, long a_max) {
  if (r % 2 != 0) throw std::domain_error("odd_parity_tail: r must be even");
  if (a_max <= 0 || a_max % 2 == 0) throw std::domain_error("odd_parity_tail: A_max must be odd and positive");
  require_even_degree(Family::Power, r, parts);
  const auto e = window_exponents(Family::Power, r, parts);

  PiRational total;
  // Inner k sums are over integers (r even); only the first two entries
  // become half-integers.
  struct Frame {
    PiRational prod;
    long d1, d2;
  };
  std::vector<Frame> stack;
  std::vector<Frame> leaves;
  auto recurse = [&](auto&& self, std::size_t s, const PiRational& prod, long d1, long d2) -> void {
    if (s >= e.size()) {
      leaves.push_back({prod, d1, d2});
      return;
    }
    const int top = e[s];
    const long w = static_cast<long>(s);
    for (int K = -top; K <= top; K += 2) {
      self(self, s + 1, prod * PiRational(Rational(binomial(top, (top + K) / 2))), d1 + (w - 1) * K,
           d2 + w * K);
    }
  };
  recurse(recurse, 2, PiRational(Rational(1)), 0, 0);

  for (long area = -a_max; area <= a_max; area += 2) {
    for (const auto& leaf : leaves) {
      const HalfInt x1 = HalfInt::from_twice(e[0] + area + leaf.d1);
      const HalfInt x2 = HalfInt::from_twice(e[1] - area - leaf.d2);
      total += gamma_half_binomial(e[0], x1) * gamma_half_binomial(e[1], x2) * leaf.prod;
    }
  }
  return total;
}

}  // namespace walkarea
