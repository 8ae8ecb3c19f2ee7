#include "walkarea/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

namespace walkarea {

NCPolynomial hamiltonian(WalkFamily w) {
  using P = NCPolynomial;
  const P u_plus = P::u(1) + P::u(-1);
  switch (w) {
    case WalkFamily::SquareR2:
      return P::u(1) + P::v(1) + P::u(-1) + P::v(-1);
    case WalkFamily::SquareR4: {
      const P sq = u_plus * u_plus;
      return sq * P::v(1) + P::v(-1) * sq;
    }
    case WalkFamily::SquareR4Mixed:
      return u_plus * P::v(1) * u_plus + u_plus * P::v(-1) * u_plus;
    case WalkFamily::TriangularChiral: {
      const GaussianRational i = GaussianRational::i();
      return (P::u(1).scaled(-i) + P::u(-1).scaled(i)) * P::v(1) + P::v(-2);
    }
  }
  throw std::invalid_argument("unknown walk family");
}

int area_index_per_q_exponent(WalkFamily w) {
  return w == WalkFamily::SquareR2 ? 2 : 1;
}

AreaSpectrum nc_trace_spectrum(WalkFamily w, int steps) {
  if (steps < 1) throw std::domain_error("nc_trace_spectrum: steps must be >= 1");
  const NCPolynomial h = hamiltonian(w);
  const NCPolynomial left = h.pow((steps + 1) / 2);
  const NCPolynomial right = steps % 2 == 0 ? left : h.pow(steps / 2);
  const QLaurent trace = constant_term_of_product(left, right);

  SpectrumMeta meta;
  meta.source = "nctrace:" + to_string(w);
  meta.r = cluster_spec(w).r;
  meta.g = cluster_spec(w).g;
  meta.n = steps;
  AreaSpectrum out(std::move(meta));
  const long scale = area_index_per_q_exponent(w);
  for (const auto& [e, c] : trace.terms()) {
    if (c.im != 0) {
      throw std::logic_error("nc trace: imaginary coefficient " + to_string(c) + " at Q^" + std::to_string(e));
    }
    if (c.re.get_den() != 1) {
      throw std::logic_error("nc trace: non-integer coefficient " + c.re.get_str() + " at Q^" + std::to_string(e));
    }
    out.add(scale * e, c.re.get_num());
  }
  return out;
}

std::vector<LatticeStep> walk_step_table(WalkFamily w) {
  switch (w) {
    case WalkFamily::SquareR2:
      return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    case WalkFamily::TriangularChiral:
      return {{1, 0}, {0, 1}, {-1, -1}};
    default:
      throw std::invalid_argument("no geometric step table for " + to_string(w));
  }
}

namespace {

class Enumerator {
 public:
  Enumerator(const std::vector<LatticeStep>& table, int steps, bool triangular)
      : table_(table), steps_(steps), triangular_(triangular), used_(table.size(), 0) {}

  void from_first_step(std::size_t first) {
    const auto& s = table_[first];
    ++used_[first];
    walk(1, s.dx, s.dy, 0, s.coefficient);
    --used_[first];
  }

  const std::map<long, long>& counts() const { return counts_; }

 private:
  bool reachable(int done, long x, long y) const {
    const int rem = steps_ - done;
    if (!triangular_) return std::labs(x) + std::labs(y) <= rem;
    // closed iff each hop type is used steps/3 times
    const int per = steps_ / 3;
    return std::all_of(used_.begin(), used_.end(), [per](int c) { return c <= per; });
  }

  void walk(int done, long x, long y, long shoelace, long weight) {
    if (!reachable(done, x, y)) return;
    if (done == steps_) {
      if (x == 0 && y == 0) counts_[shoelace] += weight;
      return;
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
      const auto& s = table_[i];
      ++used_[i];
      walk(done + 1, x + s.dx, y + s.dy, shoelace + x * s.dy - y * s.dx, weight * s.coefficient);
      --used_[i];
    }
  }

  const std::vector<LatticeStep>& table_;
  int steps_;
  bool triangular_;
  std::vector<int> used_;
  std::map<long, long> counts_;
};

}  // namespace

AreaSpectrum geometric_walk_spectrum(WalkFamily w, int steps, int threads, int max_steps) {
  const auto table = walk_step_table(w);
  if (steps < 1) throw std::domain_error("geometric oracle: steps must be >= 1");
  if (steps > max_steps) {
    throw std::domain_error("geometric oracle: " + std::to_string(steps) + " steps exceeds the cap " +
                            std::to_string(max_steps) + " (" + std::to_string(table.size()) + "^N sequences)");
  }
  const bool triangular = w == WalkFamily::TriangularChiral;

  SpectrumMeta meta;
  meta.source = "geometric:" + to_string(w);
  meta.r = cluster_spec(w).r;
  meta.g = cluster_spec(w).g;
  meta.n = steps;
  AreaSpectrum out(std::move(meta));
  if (triangular && steps % 3 != 0) return out;

  const int workers = std::clamp(threads, 1, static_cast<int>(table.size()));
  std::vector<Enumerator> parts(static_cast<std::size_t>(workers), Enumerator(table, steps, triangular));
  auto work = [&](int id) {
    for (std::size_t first = static_cast<std::size_t>(id); first < table.size(); first += workers) {
      parts[static_cast<std::size_t>(id)].from_first_step(first);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  for (const auto& p : parts) {
    for (const auto& [s, c] : p.counts()) {
      if (!triangular && s % 2 != 0) {
        throw std::logic_error("geometric oracle: odd shoelace sum on the square lattice");
      }
      out.add(s, BigInt(c));
    }
  }
  return out;
}

}  // namespace walkarea
