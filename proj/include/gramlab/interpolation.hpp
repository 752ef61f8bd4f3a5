#pragma once

// Minimal-norm bounded interpolation on disk nodes: feasibility through
// positive semidefiniteness of the scaled Pick matrix, bisection for the
// extremal norm, certified lower bounds for the interpolation constant,
// and the classical upper bounds that sandwich it.

#include <cstdint>
#include <vector>

#include "gramlab/disk_geometry.hpp"
#include "gramlab/spectral.hpp"

namespace gramlab {

struct PickProblem {
  PickProblem(PointSequence nodes_in, std::vector<Complex> targets_in);

  PointSequence nodes;
  std::vector<Complex> targets;
};

// True iff [(t^2 - w_i conj(w_j)) / (1 - z_i conj(z_j))] is positive
// semidefinite, i.e. the data admits an interpolant of sup norm <= t.
// Monotone nondecreasing in t.
bool pick_feasible(const PickProblem& prob, double t);

// Smallest feasible t, to absolute tol, by bisection on [max|w|, hi] with
// hi found by doubling. Throws NoConvergence if doubling passes 1e6.
double min_norm(const PickProblem& prob, double tol = 1e-8);

// Max of min_norm over unimodular data: every +-1 pattern when n <= 12,
// plus `trials` seeded random unit-modulus vectors. A certified lower
// bound for the interpolation constant of the node set.
double interp_constant_lower(const PointSequence& seq, std::size_t trials,
                             std::uint64_t seed, double tol = 1e-8);

// ((1 + sqrt(1 - delta^2)) / delta)^2, an upper bound for the
// interpolation constant of any sequence with separation delta.
double earl_bound(double delta);

struct SsBounds {
  double m_lower_gram = 1.0;  // max(sqrt||G||, sqrt||G^-1||) <= M
  double m_upper_ss = 1.0;    // M <= sqrt(||G|| ||G^-1||)
};

SsBounds ss_bounds(const SpectralSummary& summary);

struct InterpolationEstimates {
  double m_lower_search = 1.0;
  double m_lower_gram = 1.0;
  double m_upper_ss = 1.0;
  double m_upper_earl = 1.0;
};

InterpolationEstimates interpolation_estimates(const PointSequence& seq,
                                               std::size_t trials,
                                               std::uint64_t seed,
                                               double tol = 1e-8);

}  // namespace gramlab
