#include "gramlab/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gramlab/errors.hpp"
#include "gramlab/gram.hpp"
#include "gramlab/interpolation.hpp"

namespace gramlab {

namespace {

void require_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix is not square");
  }
  if (m.size() > 0 && (m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("matrix is not Hermitian to 1e-12 entrywise");
  }
}

}  // namespace

EigenPairs hermitian_eig_full(const Eigen::MatrixXcd& m, double tol) {
  require_hermitian(m);
  if (m.rows() == 0) return {Eigen::VectorXd(0), Eigen::MatrixXcd(0, 0)};

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("hermitian eigensolver did not converge");
  }
  EigenPairs out{solver.eigenvalues(), solver.eigenvectors()};

  const double scale = out.values.cwiseAbs().maxCoeff();
  if (scale > 0.0) {
    const double resid =
        (m * out.vectors - out.vectors * out.values.asDiagonal().toDenseMatrix()
                                             .cast<Complex>())
            .colwise()
            .norm()
            .maxCoeff();
    if (resid > tol * scale) {
      throw NoConvergence("eigenpair residual exceeds tolerance");
    }
  }
  return out;
}

Eigen::VectorXd hermitian_eigs(const Eigen::MatrixXcd& m, double tol) {
  return hermitian_eig_full(m, tol).values;
}

Eigen::MatrixXcd hermitian_inverse(const Eigen::MatrixXcd& m,
                                   double cond_cap) {
  const EigenPairs eig = hermitian_eig_full(m);
  if (m.rows() == 0) return m;
  const double lo = eig.values.cwiseAbs().minCoeff();
  const double hi = eig.values.cwiseAbs().maxCoeff();
  if (lo <= 0.0 || hi / lo > cond_cap) {
    throw IllConditioned("condition number exceeds cap");
  }
  return eig.vectors * eig.values.cwiseInverse().asDiagonal() *
         eig.vectors.adjoint();
}

double schatten_norm(const Eigen::MatrixXcd& h, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw InvalidP("schatten norm requires p in [1, inf]");
  }
  require_hermitian(h);
  if (h.rows() == 0) return 0.0;
  const Eigen::VectorXd abs_eigs = hermitian_eigs(h).cwiseAbs();
  if (p == kPInf) return abs_eigs.maxCoeff();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < abs_eigs.size(); ++k) {
    sum += std::pow(abs_eigs(k), p);
  }
  return std::pow(sum, 1.0 / p);
}

double zhu_column_sum(const Eigen::MatrixXcd& h, double p) {
  if (std::isnan(p) || p <= 0.0) {
    throw InvalidP("column power sum requires p > 0");
  }
  if (p == kPInf) {
    return h.size() == 0 ? 0.0 : h.colwise().norm().maxCoeff();
  }
  double sum = 0.0;
  for (Eigen::Index j = 0; j < h.cols(); ++j) {
    sum += std::pow(h.col(j).norm(), p);
  }
  return sum;
}

SpectralSummary spectral_summary(const PointSequence& seq,
                                 const std::vector<double>& ps) {
  SpectralSummary out;
  const Eigen::MatrixXcd g = build_gram(seq);
  const Eigen::VectorXd eigs = hermitian_eigs(g);
  out.eigs_g.assign(eigs.data(), eigs.data() + eigs.size());

  // G - I shares eigenvectors with G, so its singular values are the
  // shifted absolute eigenvalues.
  out.sv_g_minus_i.resize(out.eigs_g.size());
  for (std::size_t k = 0; k < out.eigs_g.size(); ++k) {
    out.sv_g_minus_i[k] = std::abs(out.eigs_g[k] - 1.0);
  }
  std::sort(out.sv_g_minus_i.begin(), out.sv_g_minus_i.end(),
            std::greater<double>());

  if (!out.eigs_g.empty()) {
    out.op_norm_g_minus_i = out.sv_g_minus_i.front();
    const double lo = out.eigs_g.front();
    out.inv_norm_g = lo > 0.0 ? 1.0 / lo : kPInf;
    out.cond_g = lo > 0.0 ? out.eigs_g.back() / lo : kPInf;
  }

  for (double p : ps) {
    if (std::isnan(p) || p < 1.0) {
      throw InvalidP("schatten norm requires p in [1, inf]");
    }
    double value = 0.0;
    if (p == kPInf) {
      value = out.op_norm_g_minus_i;
    } else {
      double sum = 0.0;
      for (double sv : out.sv_g_minus_i) sum += std::pow(sv, p);
      value = std::pow(sum, 1.0 / p);
    }
    out.schatten[p] = value;
  }
  return out;
}

std::vector<TailRow> tail_chain(const PointSequence& seq) {
  const std::size_t n = seq.size();
  if (n < 3) throw TooShort("tail chain requires at least 3 points");

  const Eigen::MatrixXcd g = build_gram(seq);
  std::vector<double> sv(n);
  {
    const Eigen::VectorXd eigs = hermitian_eigs(g);
    for (std::size_t k = 0; k < n; ++k) sv[k] = std::abs(eigs(k) - 1.0);
    std::sort(sv.begin(), sv.end(), std::greater<double>());
  }

  std::vector<TailRow> rows;
  rows.reserve(n - 1);
  for (std::size_t offset = 0; offset + 2 <= n; ++offset) {
    TailRow row;
    row.offset = offset;
    row.lambda_odd = (2 * offset + 1 <= n)
                         ? sv[2 * offset]
                         : std::numeric_limits<double>::quiet_NaN();

    const Eigen::MatrixXcd corner =
        truncate(g, static_cast<Eigen::Index>(offset));
    const Eigen::VectorXd eigs = hermitian_eigs(corner);
    row.tail_op_norm = (eigs.array() - 1.0).abs().maxCoeff();
    row.tail_inv_bound = eigs(0) > 0.0 ? 1.0 / eigs(0) - 1.0 : kPInf;

    const double tail_delta =
        separation_profile(seq.tail(offset)).delta_min;
    const double m = earl_bound(tail_delta);
    row.earl_tail_bound = m * m - 1.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gramlab
