#pragma once

// Hermitian eigenvalues, operator and Schatten-p norms, singular values of
// G - I, and the tail/rank chain that witnesses decay of corner norms.

#include <Eigen/Core>

#include <limits>
#include <map>
#include <vector>

#include "gramlab/disk_geometry.hpp"

namespace gramlab {

inline constexpr double kPInf = std::numeric_limits<double>::infinity();

struct EigenPairs {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // columns matching values
};

// Dense Hermitian eigendecomposition. Input must be Hermitian to 1e-12
// entrywise. Each pair satisfies ||M v - lambda v|| <= tol ||M||; throws
// NoConvergence if the backend fails or that bound is violated.
EigenPairs hermitian_eig_full(const Eigen::MatrixXcd& m, double tol = 1e-10);

// Eigenvalues only, ascending.
Eigen::VectorXd hermitian_eigs(const Eigen::MatrixXcd& m, double tol = 1e-10);

// Inverse through the same eigendecomposition that feeds the norms.
// Throws IllConditioned when cond(m) exceeds cond_cap.
Eigen::MatrixXcd hermitian_inverse(const Eigen::MatrixXcd& m,
                                   double cond_cap = 1e12);

// (sum |lambda_k|^p)^(1/p) over eigenvalues of Hermitian h; max |lambda_k|
// for p = kPInf. Throws InvalidP for p < 1.
double schatten_norm(const Eigen::MatrixXcd& h, double p);

// sum_n ||h e_n||^p, the standard-basis column power sum. For p >= 2 it
// lower-bounds ||h||_p^p and for 0 < p <= 2 it upper-bounds it, with
// equality at p = 2.
double zhu_column_sum(const Eigen::MatrixXcd& h, double p);

struct SpectralSummary {
  std::vector<double> eigs_g;        // ascending
  std::vector<double> sv_g_minus_i;  // nonincreasing, >= 0
  double op_norm_g_minus_i = 0.0;
  double inv_norm_g = 1.0;  // 1 / min eigenvalue; +inf if not positive
  double cond_g = 1.0;
  std::map<double, double> schatten;  // keyed by requested p

  double norm_g() const { return eigs_g.empty() ? 1.0 : eigs_g.back(); }
};

SpectralSummary spectral_summary(const PointSequence& seq,
                                 const std::vector<double>& ps);

// Row N of the truncation chain, N = 0..n-2. The tail is the subsequence
// from index N on, whose Gram matrix is the corresponding corner of G.
// Each row satisfies
//   sv_{2N+1}(G - I) <= ||tail - I|| <= ||tail^-1|| - 1
//                    <= earl_bound(tail delta_min)^2 - 1,
// the first by a rank-2N cutoff (a matrix copying the first N rows and
// columns of G - I has rank at most 2N), the others by the norm gap and
// the interpolation bound on the tail.
struct TailRow {
  std::size_t offset = 0;     // N
  double lambda_odd = 0.0;    // sv_{2N+1}(G - I); NaN when 2N+1 > n
  double tail_op_norm = 0.0;
  double tail_inv_bound = 0.0;
  double earl_tail_bound = 0.0;
};

// Requires n >= 3 (TooShort otherwise). The caller is responsible for
// passing a delta-sorted sequence; see sort_by_delta.
std::vector<TailRow> tail_chain(const PointSequence& seq);

}  // namespace gramlab
