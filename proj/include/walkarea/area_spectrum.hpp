#pragma once

// AreaSpectrum: finite map from area index A to a big-integer count. A is the
// exponent in e^{i pi A p/q}; its relation to the geometric area depends on
// the walk (see cluster.hpp).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walkarea/exact.hpp"
#include "walkarea/spectral.hpp"

namespace walkarea {

/// Closed interval [a_min, a_max]. With step 2 only values of the given
/// parity belong to it; step 1 admits both parities.
struct AreaSupport {
  long a_min = 0;
  long a_max = 0;
  int parity = 0;  // 0 even, 1 odd
  int step = 2;

  bool contains(long a) const;
  friend bool operator==(const AreaSupport&, const AreaSupport&) = default;
};

/// Descriptive metadata carried alongside the counts.
struct SpectrumMeta {
  std::string source;      // "power", "product", "mixed", a walk id, or an oracle name
  int r = 0;
  int g = 0;
  int n = 0;               // parts total or cluster order
  std::vector<int> parts;  // empty for walk tables
  std::optional<AreaSupport> support;

  friend bool operator==(const SpectrumMeta&, const SpectrumMeta&) = default;
};

class AreaSpectrum {
 public:
  AreaSpectrum() = default;
  explicit AreaSpectrum(SpectrumMeta meta) : meta_(std::move(meta)) {}

  /// Adds `count` at A; entries that become zero are erased.
  void add(long a, const BigInt& count);
  BigInt at(long a) const;
  const std::map<long, BigInt>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  SpectrumMeta& meta() { return meta_; }
  const SpectrumMeta& meta() const { return meta_; }

  BigInt total() const;
  bool symmetric() const;
  bool all_nonnegative() const;
  /// Smallest and largest A with a nonzero count.
  std::optional<std::pair<long, long>> realized_range() const;
  /// Every nonzero A inside `s` with the right parity.
  bool within(const AreaSupport& s) const;

  /// Same counts at -A.
  AreaSpectrum mirrored() const;

  /// Sum_A count(A) zeta_{2q}^{pA}, expressed in the field of order `order`
  /// (a multiple of 2q).
  CyclotomicNumber substitute(const Flux& flux, int order) const;

  /// Counts only; metadata is not compared.
  bool same_counts(const AreaSpectrum& o) const { return entries_ == o.entries_; }
  friend bool operator==(const AreaSpectrum& a, const AreaSpectrum& b) {
    return a.entries_ == b.entries_ && a.meta_ == b.meta_;
  }

 private:
  std::map<long, BigInt> entries_;
  SpectrumMeta meta_;
};

std::string to_string(const AreaSpectrum& s);

}  // namespace walkarea
