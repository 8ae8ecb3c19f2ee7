#include "walkarea/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "walkarea/apery.hpp"
#include "walkarea/binomial_sums.hpp"
#include "walkarea/cluster.hpp"
#include "walkarea/compositions.hpp"
#include "walkarea/oracles.hpp"
#include "walkarea/spectral.hpp"

namespace walkarea {

namespace {

using Body = std::function<std::string()>;  // empty string means pass

CheckResult run_check(std::string name, std::string identity, const Body& body) {
  CheckResult r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = r.detail.empty();
    if (r.passed) r.detail = "ok";
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

BigInt ipow(long b, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

struct FamilyR {
  Family family;
  int r;
};

std::vector<FamilyR> spectral_grid() {
  std::vector<FamilyR> out;
  for (int r = 1; r <= 4; ++r) out.push_back({Family::Power, r});
  for (int r = 1; r <= 4; ++r) out.push_back({Family::Product, r});
  out.push_back({Family::Mixed, 2});
  out.push_back({Family::Mixed, 4});
  return out;
}

// Part lists with positive ends and zero runs of length <= 2.
std::vector<std::vector<int>> part_lists(int max_total) {
  std::vector<std::vector<int>> out;
  for (int n = 1; n <= max_total; ++n) {
    for (const auto& c : g_compositions(n, 4)) out.push_back(c.parts());
  }
  return out;
}

int parts_total(const std::vector<int>& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

std::string fail_at(const std::string& what, const std::string& where) {
  return what + " at " + where;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  if (opts.suite != "core" && opts.suite != "full") {
    throw std::invalid_argument("unknown suite '" + opts.suite + "' (expected core or full)");
  }
  if (opts.max_n < 1) throw std::invalid_argument("max-n must be >= 1");
  const bool full = opts.suite == "full";
  const int cap = opts.max_n;
  auto sized = [cap](int full_size) { return std::min(full_size, cap); };
  ClusterOptions copts;
  copts.threads = opts.threads;

  std::vector<CheckResult> out;

  out.push_back(run_check("composition-count", "number of g-compositions of n is g^(n-1)", [&]() -> std::string {
    const int top = full ? 10 : std::min(10, cap + 2);
    for (int g = 2; g <= 4; ++g) {
      for (int n = 1; n <= top; ++n) {
        long count = 0;
        GCompositions gen(n, g);
        while (gen.next()) ++count;
        if (BigInt(count) != ipow(g, n - 1)) {
          return fail_at("count " + std::to_string(count), "g=" + std::to_string(g) + " n=" + std::to_string(n));
        }
      }
    }
    return {};
  }));

  out.push_back(run_check("weight-sum", "g n sum c_g = C(gn, n), both c_g forms agree", [&]() -> std::string {
    const int top = full ? 8 : std::min(8, cap + 1);
    for (int g = 2; g <= 4; ++g) {
      for (int n = 1; n <= top; ++n) {
        Rational sum = 0;
        for (const auto& c : g_compositions(n, g)) {
          const Rational w = exclusion_weight(c);
          if (w <= 0 || w != exclusion_weight_factorial_form(c)) return fail_at("weight forms", to_string(c));
          sum += w;
        }
        sum *= g * n;
        if (sum != Rational(binomial(static_cast<long>(g) * n, n))) {
          return fail_at("sum " + sum.get_str(), "g=" + std::to_string(g) + " n=" + std::to_string(n));
        }
      }
    }
    return {};
  }));

  out.push_back(run_check("trig-binomial-identity",
                          "(1/q) sum_k prod b^l = sum_A C(A) e^{i pi A p/q} whenever r sum(l)/2 < q",
                          [&]() -> std::string {
    const int max_total = full ? 4 : std::min(4, cap);
    const std::vector<long> qs = full ? std::vector<long>{5, 7, 9, 11} : std::vector<long>{5, 7};
    long checked = 0;
    for (const auto& fr : spectral_grid()) {
      for (const auto& parts : part_lists(max_total)) {
        const int total = parts_total(parts);
        if ((fr.r * total) % 2 != 0) continue;
        const auto spec_spectrum = binomial_spectrum(fr.family, fr.r, parts);
        for (long q : qs) {
          if (fr.r * total >= 2 * q) continue;
          for (long p : {1L, 2L}) {
            if (std::gcd(p, q) != 1) continue;
            const Flux flux(p, q);
            const auto lhs = trig_cluster_sum({fr.family, fr.r, flux}, parts);
            const auto rhs = spec_spectrum.substitute(flux, spectral_order(q));
            if (!(lhs == rhs)) {
              return fail_at("mismatch", to_string(fr.family) + " r=" + std::to_string(fr.r) + " parts " +
                                             to_string(Composition(parts, 4)) + " p/q=" + std::to_string(p) + "/" +
                                             std::to_string(q));
            }
            ++checked;
          }
        }
      }
    }
    // outside the range the two sides may differ
    const std::vector<int> parts{1, 1};
    const Flux half(1, 2);
    const auto lhs = trig_cluster_sum({Family::Power, 2, half}, parts);
    const auto rhs = binomial_spectrum(Family::Power, 2, parts).substitute(half, spectral_order(2));
    if (lhs.to_rational() != Rational(0) || rhs.to_rational() != Rational(2)) {
      return "violation case Power r=2 (1,1) p/q=1/2 expected 0 vs 2, got " + to_string(lhs) + " vs " +
             to_string(rhs);
    }
    if (checked == 0) return "empty grid";
    return {};
  }));

  out.push_back(run_check("spectrum-total", "sum_A C(A) = C(r sum l, r sum l / 2)", [&]() -> std::string {
    const int max_total = full ? 5 : std::min(5, cap + 1);
    for (const auto& fr : spectral_grid()) {
      for (const auto& parts : part_lists(max_total)) {
        const int deg = fr.r * parts_total(parts);
        if (deg % 2 != 0) continue;
        const auto s = binomial_spectrum(fr.family, fr.r, parts);
        if (s.total() != binomial(deg, deg / 2)) {
          return fail_at("total " + s.total().get_str(), to_string(fr.family) + " r=" + std::to_string(fr.r));
        }
      }
    }
    return {};
  }));

  out.push_back(run_check("oracle-agreement", "cluster table = NC trace = geometric enumeration",
                          [&]() -> std::string {
    const int n_small = sized(4);
    for (auto w : {WalkFamily::SquareR2, WalkFamily::TriangularChiral}) {
      for (int n = 1; n <= n_small; ++n) {
        const int steps = step_factor(w) * n;
        const auto c = cluster_spectrum(w, n, copts);
        if (!c.same_counts(nc_trace_spectrum(w, steps))) return fail_at("nc trace", to_string(w) + " n=" + std::to_string(n));
        if (!c.same_counts(geometric_walk_spectrum(w, steps, opts.threads))) {
          return fail_at("geometric", to_string(w) + " n=" + std::to_string(n));
        }
      }
    }
    for (auto w : {WalkFamily::SquareR4, WalkFamily::SquareR4Mixed}) {
      for (int n = 1; n <= sized(3); ++n) {
        if (!cluster_spectrum(w, n, copts).same_counts(nc_trace_spectrum(w, step_factor(w) * n))) {
          return fail_at("nc trace", to_string(w) + " n=" + std::to_string(n));
        }
      }
    }
    return {};
  }));

  out.push_back(run_check("walk-point-values", "triangular n=1 {-1:3, 1:3}, n=2 areas {0,+-2,+-4}, totals",
                          [&]() -> std::string {
    const auto t1 = cluster_spectrum(WalkFamily::TriangularChiral, 1, copts);
    if (t1.entries() != std::map<long, BigInt>{{-1, 3}, {1, 3}}) return "triangular n=1: " + to_string(t1);
    const auto t2 = cluster_spectrum(WalkFamily::TriangularChiral, 2, copts);
    std::vector<long> support;
    for (const auto& [a, c] : t2.entries()) support.push_back(a);
    if (support != std::vector<long>{-4, -2, 0, 2, 4}) return "triangular n=2: " + to_string(t2);
    for (int n = 1; n <= sized(8); ++n) {
      const BigInt c = binomial(2 * n, n);
      if (cluster_total(WalkFamily::SquareR2, n, copts) != c * c) return fail_at("square total", "n=" + std::to_string(n));
      const BigInt tri = factorial(3 * n) / (factorial(n) * factorial(n) * factorial(n));
      if (cluster_total(WalkFamily::TriangularChiral, n, copts) != tri) {
        return fail_at("triangular total", "n=" + std::to_string(n));
      }
    }
    return {};
  }));

  out.push_back(run_check("apery-agreement", "closed form = recurrence = cluster value at special flux",
                          [&]() -> std::string {
    const std::vector<std::pair<AperyId, std::vector<long>>> printed{
        {AperyId::A081085, {4, 20, 112, 676, 4304, 28496}},
        {AperyId::A143583, {12, 164, 2352, 34596, 516912, 7806224}},
        {AperyId::A006077, {3, 9, 21, 9, -297, -2421}}};
    for (const auto& [id, values] : printed) {
      const auto rec = apery_recurrence_extend(id, 50);
      for (int n = 1; n <= 50; ++n) {
        if (apery_closed(id, n) != rec[n - 1]) return fail_at(to_string(id) + " recurrence", "n=" + std::to_string(n));
      }
      for (int n = 1; n <= 6; ++n) {
        if (rec[n - 1] != values[n - 1]) return fail_at(to_string(id) + " printed term", "n=" + std::to_string(n));
      }
      const int top = id == AperyId::A006077 ? sized(7) : sized(8);
      for (int n = 1; n <= top; ++n) {
        if (apery_via_cluster(id, n, copts) != rec[n - 1]) {
          return fail_at(to_string(id) + " cluster", "n=" + std::to_string(n));
        }
      }
    }
    for (int n = 2; n <= 2 * sized(4); n += 2) {
      if (apery_r1_cluster(n, copts) != apery_closed(AperyId::A081085, n / 2)) {
        return fail_at("r=1 binding", "n=" + std::to_string(n));
      }
    }
    return {};
  }));

  out.push_back(run_check("flux-one", "p/q=1 totals with sign; triangular at 1/2", [&]() -> std::string {
    const Flux one(1, 1);
    const Flux half(1, 2);
    for (int n = 1; n <= sized(8); ++n) {
      const BigInt c2 = binomial(2 * n, n);
      const BigInt tri = binomial(3 * n, n) * c2 * (n % 2 == 0 ? 1 : -1);
      const std::vector<std::pair<WalkFamily, BigInt>> cases{
          {WalkFamily::SquareR2, c2 * c2}, {WalkFamily::SquareR4, c2 * binomial(4 * n, 2 * n)},
          {WalkFamily::TriangularChiral, tri}};
      for (const auto& [w, expect] : cases) {
        if (cluster_value(w, n, one, copts).to_rational() != Rational(expect)) {
          return fail_at(to_string(w) + " at p/q=1", "n=" + std::to_string(n));
        }
      }
      const BigInt at_half = n % 2 == 0 ? binomial(3 * n / 2, n / 2) * binomial(n, n / 2) : BigInt(0);
      if (cluster_value(WalkFamily::TriangularChiral, n, half, copts).to_rational() != Rational(at_half)) {
        return fail_at("triangular at p/q=1/2", "n=" + std::to_string(n));
      }
    }
    return {};
  }));

  out.push_back(run_check("odd-area-tail", "odd-A Gamma-continued sum for (1,1) tends to C(4,2)",
                          [&]() -> std::string {
    const std::vector<int> parts{1, 1};
    const PiRational first(Rational(512, 9), 2);
    const PiRational second = first + PiRational(Rational(512, 225), 2);
    if (!(odd_parity_tail(2, parts, 1) == first)) return "A_max=1: " + to_string(odd_parity_tail(2, parts, 1));
    if (!(odd_parity_tail(2, parts, 3) == second)) return "A_max=3: " + to_string(odd_parity_tail(2, parts, 3));
    const double far = odd_parity_tail(2, parts, 201).to_double();
    if (std::abs(far - 6.0) / 6.0 > 1e-6) return "A_max=201: " + std::to_string(far);
    return {};
  }));

  out.push_back(run_check("support-symmetry", "spectra within area bounds, step 2, symmetric in A",
                          [&]() -> std::string {
    for (auto w : {WalkFamily::SquareR2, WalkFamily::SquareR4, WalkFamily::SquareR4Mixed,
                   WalkFamily::TriangularChiral}) {
      const auto spec = cluster_spec(w);
      const int top = sized(spec.g == 2 ? 8 : 7);
      for (int n = 1; n <= top; ++n) {
        const auto s = cluster_spectrum(w, n, copts);
        const auto support = area_support(spec.family, spec.r, spec.g, n);
        if (!s.within(support) || support.step != 2 || !s.symmetric() || !s.all_nonnegative()) {
          return fail_at("support", to_string(w) + " n=" + std::to_string(n));
        }
      }
      for (int n = 1; n <= std::min(top, 6); ++n) {
        for (const auto& c : g_compositions(n, spec.g)) {
          const auto s = binomial_spectrum(spec.family, spec.r, c.parts());
          if (!s.within(area_support(spec.family, spec.r, c)) || !s.symmetric()) {
            return fail_at("composition support", to_string(w) + " " + to_string(c));
          }
        }
      }
    }
    return {};
  }));

  return out;
}

}  // namespace walkarea
