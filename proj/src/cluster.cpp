#include "walkarea/cluster.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "walkarea/binomial_sums.hpp"

namespace walkarea {

ClusterSpec cluster_spec(WalkFamily w) {
  switch (w) {
    case WalkFamily::SquareR2: return {2, Family::Power, 2};
    case WalkFamily::SquareR4: return {2, Family::Power, 4};
    case WalkFamily::SquareR4Mixed: return {2, Family::Mixed, 4};
    case WalkFamily::TriangularChiral: return {3, Family::Product, 2};
  }
  throw std::invalid_argument("unknown walk family");
}

int step_factor(WalkFamily w) {
  return cluster_spec(w).g;
}

std::string to_string(WalkFamily w) {
  switch (w) {
    case WalkFamily::SquareR2: return "square-r2";
    case WalkFamily::SquareR4: return "square-r4";
    case WalkFamily::SquareR4Mixed: return "square-r4-mixed";
    case WalkFamily::TriangularChiral: return "triangular-chiral";
  }
  return "?";
}

WalkFamily parse_walk(std::string_view id) {
  for (auto w : {WalkFamily::SquareR2, WalkFamily::SquareR4, WalkFamily::SquareR4Mixed,
                 WalkFamily::TriangularChiral}) {
    if (id == to_string(w)) return w;
  }
  throw std::invalid_argument("unknown walk '" + std::string(id) +
                              "' (expected square-r2, square-r4, square-r4-mixed or triangular-chiral)");
}

int default_max_n(int g) {
  return g <= 2 ? 12 : 9;
}

namespace {

using Weights = std::map<std::vector<int>, Rational>;

// Reversed compositions share one spectrum (spectra are symmetric in A),
// so weights are pooled on the lexicographically smaller orientation.
Weights pooled_weights(int n, int g) {
  Weights w;
  GCompositions gen(n, g);
  while (auto c = gen.next()) {
    std::vector<int> key = c->parts();
    std::vector<int> rev(key.rbegin(), key.rend());
    if (rev < key) key.swap(rev);
    w[key] += exclusion_weight(*c);
  }
  return w;
}

void add_weighted(std::map<long, Rational>& acc, const AreaSpectrum& s, const Rational& weight) {
  for (const auto& [a, c] : s.entries()) acc[a] += weight * c;
}

}  // namespace

AreaSpectrum cluster_spectrum(const ClusterSpec& spec, int n, const ClusterOptions& opts) {
  SpectralSpec{spec.family, spec.r, Flux(1, 1)}.validate();
  if (spec.g < 2) throw std::domain_error("cluster: g must be >= 2");
  const int cap = opts.max_n.value_or(default_max_n(spec.g));
  if (n < 1) throw std::domain_error("cluster: n must be >= 1");
  if (n > cap) {
    throw std::domain_error("cluster: n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                            " for g = " + std::to_string(spec.g) +
                            " (raise it with --max-n; cost grows like g^(n-1))");
  }
  if ((spec.r * n) % 2 != 0) {
    throw std::domain_error("cluster: r * n must be even (r = " + std::to_string(spec.r) +
                            ", n = " + std::to_string(n) + ")");
  }

  const Weights weights = pooled_weights(n, spec.g);
  std::vector<const Weights::value_type*> items;
  items.reserve(weights.size());
  for (const auto& kv : weights) items.push_back(&kv);

  const int workers = std::clamp(opts.threads, 1, static_cast<int>(items.size()));
  std::vector<std::map<long, Rational>> partial(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  auto work = [&](std::size_t id) {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& [parts, weight] = *items[i];
      add_weighted(partial[id], binomial_spectrum(spec.family, spec.r, parts), weight);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, static_cast<std::size_t>(id));
  }

  std::map<long, Rational> total;
  for (const auto& p : partial) {
    for (const auto& [a, v] : p) total[a] += v;
  }

  SpectrumMeta meta;
  meta.source = "cluster";
  meta.r = spec.r;
  meta.g = spec.g;
  meta.n = n;
  meta.support = area_support(spec.family, spec.r, spec.g, n);
  AreaSpectrum out(std::move(meta));
  const Rational scale(spec.g * n);
  for (auto& [a, v] : total) {
    Rational c = v * scale;
    c.canonicalize();
    if (c.get_den() != 1) {
      throw std::logic_error("cluster: non-integer count " + c.get_str() + " at A = " + std::to_string(a));
    }
    out.add(a, c.get_num());
  }
  return out;
}

AreaSpectrum cluster_spectrum(WalkFamily w, int n, const ClusterOptions& opts) {
  auto s = cluster_spectrum(cluster_spec(w), n, opts);
  s.meta().source = to_string(w);
  return s;
}

BigInt cluster_total(WalkFamily w, int n, const ClusterOptions& opts) {
  return cluster_spectrum(w, n, opts).total();
}

BigInt expected_cluster_total(const ClusterSpec& spec, int n) {
  return binomial(static_cast<long>(spec.g) * n, n) *
         binomial(static_cast<long>(spec.r) * n, static_cast<long>(spec.r) * n / 2);
}

CyclotomicNumber cluster_value(const ClusterSpec& spec, int n, const Flux& flux, const ClusterOptions& opts) {
  return cluster_spectrum(spec, n, opts).substitute(flux, static_cast<int>(2 * flux.q()));
}

CyclotomicNumber cluster_value(WalkFamily w, int n, const Flux& flux, const ClusterOptions& opts) {
  return cluster_value(cluster_spec(w), n, flux, opts);
}

}  // namespace walkarea
