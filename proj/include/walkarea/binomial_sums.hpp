#pragma once

// Area spectra from nested binomial sums.
//
// Every family reduces to an integral
//     int_0^1 dt prod_s (2 sin(pi t + pi s p/q))^{e_s},
// where e_s (the window exponent at shift s) collects the parts whose
// spectral factors land on shift s. Expanding each power and integrating
// over t gives
//     sum_A e^{i pi A p/q} sum_{k_3..k_S} C(e_1, e_1/2 + A/2 + sum (i-2) k_i)
//                                        C(e_2, e_2/2 - A/2 - sum (i-1) k_i)
//                                        prod_{i>=3} C(e_i, e_i/2 + k_i)
// (1-based i, k_i in steps of 1 from -e_i/2). The coefficient of
// e^{i pi A p/q} is the spectrum entry at A. The identity with the discrete
// trig sum holds while r * sum(l) / 2 < q.

#include <span>
#include <vector>

#include "walkarea/area_spectrum.hpp"
#include "walkarea/compositions.hpp"
#include "walkarea/exact.hpp"
#include "walkarea/spectral.hpp"

namespace walkarea {

/// Exponent of 2 sin(pi t + pi s p/q) for s = 0, 1, ...; absent parts count
/// as zero and the table is padded to at least two shifts.
std::vector<int> window_exponents(Family family, int r, std::span<const int> parts);

/// Throws std::domain_error unless r * sum(parts) is even (and r even for
/// the Mixed family).
void require_even_degree(Family family, int r, std::span<const int> parts);

/// Whether a closed-form area bound is known (Power, and Product with r = 2).
bool has_closed_area_bound(Family family, int r);

/// Support of one composition's spectrum: the closed bound where known, the
/// binomial-support bound otherwise; parity derived from the window table.
AreaSupport area_support(Family family, int r, const Composition& parts);

/// Support across all g-compositions of n. When compositions disagree on
/// parity (Power r odd, Product r = 3) the result has step 1.
AreaSupport area_support(Family family, int r, int g, int n);

/// Largest |A| admitted by the binomial supports alone, with derived parity.
AreaSupport binomial_support_bound(Family family, int r, std::span<const int> parts);

/// Exact spectrum of one composition. `threads` > 1 splits the outermost
/// k sum.
AreaSpectrum binomial_spectrum(Family family, int r, std::span<const int> parts, int threads = 1);

BigInt spectrum_total(const AreaSpectrum& s);

/// Partial sum over odd A, |A| <= a_max, of the Power-family summand with
/// the first two binomials continued to half-integer entries via Gamma.
/// Requires r even and a_max odd and positive.
PiRational odd_parity_tail(int r, std::span<const int> parts, long a_max);

}  // namespace walkarea
