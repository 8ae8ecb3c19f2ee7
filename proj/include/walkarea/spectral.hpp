#pragma once

// Spectral-function families b_{p/q}(k) and the exact trigonometric sums
//   (1/q) sum_{k=1..q} prod_i b(k+i-1)^{l_i}.
// Every factor is 2 sin(pi m p/q) = -i (zeta^{pm} - zeta^{-pm}), zeta = e^{i pi/q}.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walkarea/exact.hpp"

namespace walkarea {

enum class Family {
  Power,    // (2 sin(pi k p/q))^r
  Product,  // prod_{s<r} 2 sin(pi (k+s) p/q)
  Mixed,    // (2 sin(pi k p/q))^{r/2} (2 sin(pi (k+1) p/q))^{r/2}, r even
};

std::string to_string(Family f);
/// Accepts "power", "product", "mixed"; throws std::invalid_argument.
Family parse_family(std::string_view name);

/// Reduced rational flux p/q, p and q positive and coprime.
class Flux {
 public:
  Flux(long p, long q);
  long p() const { return p_; }
  long q() const { return q_; }
  friend bool operator==(const Flux&, const Flux&) = default;

 private:
  long p_;
  long q_;
};

struct SpectralSpec {
  Family family;
  int r;
  Flux flux;

  /// Throws std::domain_error for r < 1 or odd r with the Mixed family.
  void validate() const;
};

/// Order of the cyclotomic field used for spectral values at denominator q:
/// lcm(2q, 4), the smallest field holding both e^{i pi/q} and i.
int spectral_order(long q);

/// Shifts m such that b(k) = prod_m 2 sin(pi (k+m) p/q), with multiplicity.
std::vector<int> sine_shifts(Family family, int r);

/// b_{p/q}(k) exactly, as an element of order spectral_order(q).
CyclotomicNumber spectral_value(const SpectralSpec& spec, long k);

/// (1/q) sum_{k=1..q} prod_i b(k+i-1)^{l_i}. Parts may be any non-negative
/// integers; an all-zero product contributes 1.
CyclotomicNumber trig_cluster_sum(const SpectralSpec& spec, std::span<const int> parts);

}  // namespace walkarea
