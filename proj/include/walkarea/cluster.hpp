#pragma once

// Area-counting tables C_N(A) assembled from g-compositions, exclusion
// weights and per-composition binomial spectra:
//     C_N(A) = g n sum_{compositions} c_g(l) * spectrum(l)(A),   N = g n.

#include <optional>
#include <string>
#include <string_view>

#include "walkarea/area_spectrum.hpp"
#include "walkarea/compositions.hpp"
#include "walkarea/exact.hpp"
#include "walkarea/spectral.hpp"

namespace walkarea {

enum class WalkFamily { SquareR2, SquareR4, SquareR4Mixed, TriangularChiral };

/// The cluster data of a walk: exclusion g and spectral family with r.
struct ClusterSpec {
  int g = 2;
  Family family = Family::Power;
  int r = 2;

  friend bool operator==(const ClusterSpec&, const ClusterSpec&) = default;
};

ClusterSpec cluster_spec(WalkFamily w);
/// Steps per unit of n (the N = g n walk length factor).
int step_factor(WalkFamily w);

/// "square-r2", "square-r4", "square-r4-mixed", "triangular-chiral".
std::string to_string(WalkFamily w);
WalkFamily parse_walk(std::string_view id);

struct ClusterOptions {
  int threads = 1;
  /// Overrides the default cap on n (12 for g = 2, 9 for g >= 3).
  std::optional<int> max_n;
};

int default_max_n(int g);

/// C_N(A) for a general ClusterSpec. Throws std::domain_error if n is outside
/// [1, cap] or the degree r n is odd.
AreaSpectrum cluster_spectrum(const ClusterSpec& spec, int n, const ClusterOptions& opts = {});
AreaSpectrum cluster_spectrum(WalkFamily w, int n, const ClusterOptions& opts = {});

BigInt cluster_total(WalkFamily w, int n, const ClusterOptions& opts = {});
/// C(g n, n) C(r n, r n / 2).
BigInt expected_cluster_total(const ClusterSpec& spec, int n);

/// Sum_A C_N(A) zeta^{pA} with zeta = e^{i pi / q}, in Q(zeta_{2q}).
CyclotomicNumber cluster_value(const ClusterSpec& spec, int n, const Flux& flux,
                               const ClusterOptions& opts = {});
CyclotomicNumber cluster_value(WalkFamily w, int n, const Flux& flux, const ClusterOptions& opts = {});

}  // namespace walkarea
