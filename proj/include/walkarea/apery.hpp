#pragma once

// Apery-like sequences reached by the cluster coefficients at special flux.
// Terms are indexed as b(1), b(2), ... throughout.

#include <string>
#include <string_view>
#include <vector>

#include "walkarea/cluster.hpp"
#include "walkarea/exact.hpp"

namespace walkarea {

enum class AperyId { A081085, A143583, A006077 };

std::string to_string(AperyId id);
AperyId parse_apery(std::string_view name);

/// The walk and flux whose cluster coefficient gives the sequence.
struct AperyBinding {
  ClusterSpec spec;
  Flux flux;
};
AperyBinding apery_binding(AperyId id);

/// Closed-form sum. For A081085 and A143583 two independent sums are
/// evaluated and must agree (std::logic_error otherwise).
BigInt apery_closed(AperyId id, int n);

/// Three-term recurrence alpha(n) b(n+1) = beta(n) b(n) - gamma(n) b(n-1).
struct AperyRecurrence {
  BigInt alpha, beta, gamma;
};
AperyRecurrence apery_recurrence(AperyId id, long n);

/// b(1) .. b(count), seeded with b(1), b(2) from the closed form.
std::vector<BigInt> apery_recurrence_extend(AperyId id, int count);
/// Extends from explicit seeds b(1), b(2). Throws std::logic_error if a
/// term is not an integer.
std::vector<BigInt> apery_recurrence_extend(AperyId id, const BigInt& b1, const BigInt& b2, int count);

/// b(n) as the cluster coefficient at the bound flux. Throws
/// std::logic_error if the value is not a rational integer.
BigInt apery_via_cluster(AperyId id, int n, const ClusterOptions& opts = {});

/// Power r = 1, g = 2 cluster at flux 1/2 for walk length n (n even);
/// equals the A081085 term b(n/2).
BigInt apery_r1_cluster(int n, const ClusterOptions& opts = {});

}  // namespace walkarea
