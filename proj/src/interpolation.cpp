#include "gramlab/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gramlab/errors.hpp"

namespace gramlab {

PickProblem::PickProblem(PointSequence nodes_in,
                         std::vector<Complex> targets_in)
    : nodes(std::move(nodes_in)), targets(std::move(targets_in)) {
  if (nodes.size() != targets.size()) {
    throw InvalidSpec("node and target counts differ");
  }
}

bool pick_feasible(const PickProblem& prob, double t) {
  if (t < 0.0 || std::isnan(t)) {
    throw std::invalid_argument("feasibility requires t >= 0");
  }
  const auto n = static_cast<Eigen::Index>(prob.nodes.size());
  if (n == 0) return true;

  Eigen::MatrixXcd pick(n, n);
  const double t2 = t * t;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex zi = prob.nodes[static_cast<std::size_t>(i)];
      const Complex zj = prob.nodes[static_cast<std::size_t>(j)];
      const Complex wi = prob.targets[static_cast<std::size_t>(i)];
      const Complex wj = prob.targets[static_cast<std::size_t>(j)];
      pick(i, j) = (t2 - wi * std::conj(wj)) / (1.0 - zi * std::conj(zj));
    }
  }
  // Exact Hermitian symmetrization; the formula is Hermitian in exact
  // arithmetic but rounding can differ across the diagonal.
  pick = ((pick + pick.adjoint()) / 2.0).eval();

  const Eigen::VectorXd eigs = hermitian_eigs(pick);
  const double positive_trace = eigs.cwiseMax(0.0).sum();
  return eigs(0) >= -1e-10 * positive_trace;
}

double min_norm(const PickProblem& prob, double tol) {
  double lo = 0.0;
  for (const Complex& w : prob.targets) lo = std::max(lo, std::abs(w));
  if (pick_feasible(prob, lo)) return lo;

  double hi = lo;
  while (!pick_feasible(prob, hi)) {
    hi *= 2.0;
    if (hi > 1e6) {
      throw NoConvergence("no feasible interpolation norm below 1e6");
    }
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pick_feasible(prob, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double interp_constant_lower(const PointSequence& seq, std::size_t trials,
                             std::uint64_t seed, double tol) {
  const std::size_t n = seq.size();
  if (n == 0) return 1.0;

  double best = 0.0;
  if (n <= 12) {
    // Sign patterns are extreme points of the unimodular data ball and
    // recover the two-point extremal exactly.
    const std::size_t patterns = std::size_t{1} << n;
    std::vector<Complex> w(n);
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = ((mask >> i) & 1u) ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
      }
      best = std::max(best, min_norm(PickProblem(seq, w), tol));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<Complex> w(n);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = std::polar(1.0, angle(rng));
    }
    best = std::max(best, min_norm(PickProblem(seq, w), tol));
  }
  return best;
}

double earl_bound(double delta) {
  if (std::isnan(delta) || delta <= 0.0 || delta > 1.0) {
    throw InvalidDelta("separation must lie in (0, 1]");
  }
  const double root = std::sqrt((1.0 - delta) * (1.0 + delta));
  const double base = (1.0 + root) / delta;
  return base * base;
}

SsBounds ss_bounds(const SpectralSummary& summary) {
  SsBounds out;
  const double c1 = summary.norm_g();
  const double c2 = summary.inv_norm_g;
  out.m_lower_gram = std::sqrt(std::max(c1, c2));
  out.m_upper_ss = std::sqrt(c1 * c2);
  return out;
}

InterpolationEstimates interpolation_estimates(const PointSequence& seq,
                                               std::size_t trials,
                                               std::uint64_t seed,
                                               double tol) {
  InterpolationEstimates out;
  const SpectralSummary summary = spectral_summary(seq, {});
  const SsBounds bounds = ss_bounds(summary);
  out.m_lower_gram = bounds.m_lower_gram;
  out.m_upper_ss = bounds.m_upper_ss;
  out.m_upper_earl = earl_bound(separation_profile(seq).delta_min);
  out.m_lower_search = interp_constant_lower(seq, trials, seed, tol);
  return out;
}

}  // namespace gramlab
