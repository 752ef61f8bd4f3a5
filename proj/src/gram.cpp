#include "gramlab/gram.hpp"

#include <cmath>
#include <stdexcept>

#include "gramlab/errors.hpp"
#include "gramlab/spectral.hpp"

namespace gramlab {

Complex gram_entry(const PointSequence& seq, Eigen::Index i, Eigen::Index j) {
  const auto n = static_cast<Eigen::Index>(seq.size());
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::out_of_range("gram_entry: index out of range");
  }
  if (i == j) return Complex(1.0, 0.0);
  const Complex ai = seq[static_cast<std::size_t>(i)];
  const Complex aj = seq[static_cast<std::size_t>(j)];
  const double si = std::sqrt(one_minus_norm_sq(ai));
  const double sj = std::sqrt(one_minus_norm_sq(aj));
  return si * sj / (1.0 - std::conj(aj) * ai);
}

Eigen::MatrixXcd build_gram(const PointSequence& seq) {
  const auto n = static_cast<Eigen::Index>(seq.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = Complex(1.0, 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Complex value = gram_entry(seq, i, j);
      g(i, j) = value;
      g(j, i) = std::conj(value);
    }
  }
  return g;
}

Eigen::VectorXcd build_corrector(const PointSequence& seq) {
  const SeparationProfile profile = separation_profile(seq);
  const auto n = static_cast<Eigen::Index>(seq.size());
  Eigen::VectorXcd d(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    d(j) = 1.0 / profile.b_values[static_cast<std::size_t>(j)];
  }
  return d;
}

Eigen::MatrixXcd truncate(const Eigen::MatrixXcd& g, Eigen::Index drop) {
  if (drop < 0 || drop > g.rows()) {
    throw std::out_of_range("truncate: drop count out of range");
  }
  const Eigen::Index m = g.rows() - drop;
  return g.bottomRightCorner(m, m);
}

double column_deficiency(const Eigen::MatrixXcd& g, Eigen::Index n) {
  if (n < 0 || n >= g.cols()) {
    throw std::out_of_range("column_deficiency: index out of range");
  }
  double sum = 0.0;
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    if (j != n) sum += std::norm(g(j, n));
  }
  return sum;
}

namespace {

// D* M D for diagonal D given by its entries.
Eigen::MatrixXcd conjugate_by_diagonal(const Eigen::VectorXcd& d,
                                       const Eigen::MatrixXcd& m) {
  return d.conjugate().asDiagonal() * m * d.asDiagonal();
}

}  // namespace

double koosis_residual(const PointSequence& seq, double cond_cap) {
  if (seq.empty()) return 0.0;
  const Eigen::MatrixXcd g = build_gram(seq);
  const Eigen::MatrixXcd inv = hermitian_inverse(g, cond_cap);
  const Eigen::VectorXcd d = build_corrector(seq);
  const Eigen::MatrixXcd rhs = conjugate_by_diagonal(d, g.transpose());
  return (inv - rhs).norm() / inv.norm();
}

double koosis_centered_residual(const PointSequence& seq, double cond_cap) {
  if (seq.empty()) return 0.0;
  const auto n = static_cast<Eigen::Index>(seq.size());
  const Eigen::MatrixXcd g = build_gram(seq);
  const Eigen::MatrixXcd inv = hermitian_inverse(g, cond_cap);
  const Eigen::VectorXcd d = build_corrector(seq);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);

  const Eigen::MatrixXcd lhs = inv - eye;
  Eigen::MatrixXcd rhs = conjugate_by_diagonal(d, g.transpose() - eye);
  rhs += (d.cwiseAbs2().array() - 1.0).matrix().cast<Complex>().asDiagonal();

  const double denom = lhs.norm();
  const double num = (lhs - rhs).norm();
  return denom > 0.0 ? num / denom : num;
}

}  // namespace gramlab
