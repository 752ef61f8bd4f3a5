#pragma once

// Gram matrix of the disk's normalized reproducing kernels, the diagonal
// corrector D with entries 1/B_j(a_j), corner truncations, and residuals of
// the exact inverse identities they satisfy.

#include <Eigen/Core>

#include "gramlab/disk_geometry.hpp"

namespace gramlab {

// <g_j, g_i> = sqrt(1-|a_i|^2) sqrt(1-|a_j|^2) / (1 - conj(a_j) a_i).
// Exactly 1 on the diagonal.
Complex gram_entry(const PointSequence& seq, Eigen::Index i, Eigen::Index j);

// Hermitian, unit diagonal, positive definite for distinct points. The
// upper triangle is computed and mirrored so Hermitian symmetry is exact.
Eigen::MatrixXcd build_gram(const PointSequence& seq);

// Diagonal of D: entries 1/B_j(a_j); |D_jj| = 1/delta_j >= 1.
Eigen::VectorXcd build_corrector(const PointSequence& seq);

// Corner of g with the first `drop` rows and columns removed. Entrywise
// equal to build_gram of the corresponding tail subsequence.
Eigen::MatrixXcd truncate(const Eigen::MatrixXcd& g, Eigen::Index drop);

// ||(G - I) e_n||^2 = sum over j != n of |G_jn|^2.
double column_deficiency(const Eigen::MatrixXcd& g, Eigen::Index n);

// Relative Frobenius residual of G^-1 = D* G^t D (plain transpose, not the
// conjugate). Throws IllConditioned when cond(G) exceeds cond_cap.
double koosis_residual(const PointSequence& seq, double cond_cap = 1e12);

// Residual of the centered form G^-1 - I = D* (G^t - I) D + (D* D - I);
// the bracket is diagonal with entries 1/delta_j^2 - 1.
double koosis_centered_residual(const PointSequence& seq,
                                double cond_cap = 1e12);

}  // namespace gramlab
