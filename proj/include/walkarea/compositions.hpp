#pragma once

// g-compositions of n: ordered parts summing to n, first and last part
// positive, with at most g-2 consecutive zero parts in between. There are
// g^(n-1) of them. Each carries an exclusion-statistics weight c_g.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walkarea/exact.hpp"

namespace walkarea {

class Composition {
 public:
  /// Validates the g-composition rules; throws std::domain_error otherwise.
  Composition(std::vector<int> parts, int g);

  const std::vector<int>& parts() const { return parts_; }
  int g() const { return g_; }
  int total() const { return total_; }
  std::size_t size() const { return parts_.size(); }
  Composition reversed() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int g_;
  int total_;
};

std::string to_string(const Composition& c);

/// Streams the g-compositions of n in lexicographic order of their parts,
/// starting from (1, 0, ..., 1, 0, ..., 1) and ending with (n).
class GCompositions {
 public:
  /// Throws std::domain_error unless n >= 1 and g >= 2.
  GCompositions(int n, int g);

  std::optional<Composition> next();

 private:
  void complete_greedily();

  int n_;
  int g_;
  std::vector<int> parts_;
  std::vector<int> zero_run_;  // zero-run length ending at each position
  int remaining_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Materialized list; fine for small n.
std::vector<Composition> g_compositions(int n, int g);

/// c_g by the product-of-binomials form. Parts beyond j are zero.
Rational exclusion_weight(const Composition& c);
/// The factorial-ratio form of the same weight.
Rational exclusion_weight_factorial_form(const Composition& c);

}  // namespace walkarea
