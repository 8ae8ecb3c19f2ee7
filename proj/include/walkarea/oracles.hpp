#pragma once

// Independent checks on the cluster tables:
//  - the constant term of H^N in the noncommutative torus, read as a
//    Laurent polynomial in Q (Q^area weighting);
//  - brute-force enumeration of step sequences with shoelace areas.
//
// Area-index conventions (A as in cluster.hpp):
//   square-r2: A = 2 * (Q exponent) = twice the enclosed area;
//   square-r4, square-r4-mixed, triangular-chiral: A = Q exponent.

#include <vector>

#include "walkarea/area_spectrum.hpp"
#include "walkarea/cluster.hpp"
#include "walkarea/nc_polynomial.hpp"

namespace walkarea {

NCPolynomial hamiltonian(WalkFamily w);

/// A per unit of Q exponent.
int area_index_per_q_exponent(WalkFamily w);

/// Constant term of H^N mapped to area indices. Throws std::logic_error on a
/// nonzero imaginary part or a non-integer coefficient.
AreaSpectrum nc_trace_spectrum(WalkFamily w, int steps);

struct LatticeStep {
  int dx;
  int dy;
  long coefficient = 1;
};

/// Single-hop moves for the geometric oracle: unit square steps, or
/// U = (1,0), V = (0,1), W = (-1,-1) in triangular lattice coordinates.
/// Throws std::invalid_argument for the r = 4 families.
std::vector<LatticeStep> walk_step_table(WalkFamily w);

/// Default cap on the number of steps for exhaustive enumeration.
inline constexpr int kGeometricMaxSteps = 12;

/// Closed walks of `steps` hops binned by A = S, the shoelace sum
/// S = sum (x dy - y dx). S is twice the area of a square walk and the area
/// in elementary triangles of a triangular one. Threads split the first hop.
AreaSpectrum geometric_walk_spectrum(WalkFamily w, int steps, int threads = 1,
                                     int max_steps = kGeometricMaxSteps);

}  // namespace walkarea
