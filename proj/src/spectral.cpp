#include "walkarea/spectral.hpp"

#include <numeric>
#include <stdexcept>

namespace walkarea {

std::string to_string(Family f) {
  switch (f) {
    case Family::Power: return "power";
    case Family::Product: return "product";
    case Family::Mixed: return "mixed";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "power") return Family::Power;
  if (name == "product") return Family::Product;
  if (name == "mixed") return Family::Mixed;
  throw std::invalid_argument("unknown spectral family '" + std::string(name) +
                              "' (expected power, product or mixed)");
}

Flux::Flux(long p, long q) : p_(p), q_(q) {
  if (p <= 0 || q <= 0) throw std::domain_error("flux p/q needs positive p and q");
  if (std::gcd(p, q) != 1) {
    throw std::domain_error("flux p/q must be reduced: gcd(" + std::to_string(p) + ", " +
                            std::to_string(q) + ") != 1");
  }
}

void SpectralSpec::validate() const {
  if (r < 1) throw std::domain_error("spectral function needs r >= 1");
  if (family == Family::Mixed && r % 2 != 0) {
    throw std::domain_error("mixed spectral function is defined for even r only");
  }
}

int spectral_order(long q) {
  return static_cast<int>(std::lcm(2 * q, 4L));
}

std::vector<int> sine_shifts(Family family, int r) {
  std::vector<int> shifts;
  switch (family) {
    case Family::Power:
      shifts.assign(static_cast<std::size_t>(r), 0);
      break;
    case Family::Product:
      for (int s = 0; s < r; ++s) shifts.push_back(s);
      break;
    case Family::Mixed:
      shifts.assign(static_cast<std::size_t>(r / 2), 0);
      shifts.insert(shifts.end(), static_cast<std::size_t>(r / 2), 1);
      break;
  }
  return shifts;
}

namespace {

// Multiplies `acc` by 2 sin(pi t p/q) = omega^{3M/4} (zeta^{pt} - zeta^{-pt}),
// omega = e^{2 pi i/M}, zeta = omega^{M/2q}.
void multiply_two_sine(RootOfUnitySum& acc, const Flux& flux, long t) {
  const long m = acc.order();
  const long minus_i = 3 * m / 4;
  const long step = m / (2 * flux.q());
  const long e = flux.p() * t * step;
  acc.multiply_difference(minus_i + e, minus_i - e);
}

}  // namespace

CyclotomicNumber spectral_value(const SpectralSpec& spec, long k) {
  spec.validate();
  const int m = spectral_order(spec.flux.q());
  auto acc = RootOfUnitySum::one(m);
  for (int s : sine_shifts(spec.family, spec.r)) multiply_two_sine(acc, spec.flux, k + s);
  return acc.reduce();
}

CyclotomicNumber trig_cluster_sum(const SpectralSpec& spec, std::span<const int> parts) {
  spec.validate();
  for (int l : parts) {
    if (l < 0) throw std::domain_error("trig_cluster_sum: negative part");
  }
  const long q = spec.flux.q();
  const int m = spectral_order(q);
  const auto shifts = sine_shifts(spec.family, spec.r);

  RootOfUnitySum total(m);
  for (long k = 1; k <= q; ++k) {
    auto term = RootOfUnitySum::one(m);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (int rep = 0; rep < parts[i]; ++rep) {
        for (int s : shifts) multiply_two_sine(term, spec.flux, k + static_cast<long>(i) + s);
      }
    }
    total += term;
  }
  return total.reduce(Rational(1, q));
}

}  // namespace walkarea
