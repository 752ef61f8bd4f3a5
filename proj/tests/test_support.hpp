#pragma once

// Shared test helpers: seeded random sequences with a separation floor,
// random Hermitian matrices, and a characteristic-polynomial bisection
// oracle for small Hermitian eigenproblems. The oracle is independent of
// the library's eigensolver path: it evaluates det(M - x I) from Newton
// power sums and brackets sign changes.

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "gramlab/disk_geometry.hpp"

namespace testsupport {

using gramlab::Complex;
using gramlab::PointSequence;

// Radii with a random decay ratio and uniform random phases. Resamples
// until the separation floor is met; random phases spread the points, so
// this terminates quickly for n up to ~12 and floors up to ~0.1.
inline PointSequence random_sequence(std::mt19937_64& rng, std::size_t n,
                                     double delta_floor) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const double ratio = 0.35 + 0.3 * unit(rng);
    std::vector<Complex> pts;
    double radius = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      radius *= ratio;
      pts.push_back(std::polar(1.0 - radius, 2.0 * M_PI * unit(rng)));
    }
    PointSequence seq(std::move(pts));
    if (gramlab::separation_profile(seq).delta_min >= delta_floor) return seq;
  }
  throw std::runtime_error("random_sequence: separation floor unreachable");
}

inline Eigen::MatrixXcd random_hermitian(std::mt19937_64& rng,
                                         Eigen::Index n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return (a + a.adjoint()) / 2.0;
}

// det(M - x I) for real x via the monic characteristic polynomial,
// with coefficients recovered from tr(M^k) by Newton's identities.
class CharPoly {
 public:
  explicit CharPoly(const Eigen::MatrixXcd& m) {
    const Eigen::Index n = m.rows();
    std::vector<double> power_sums(static_cast<std::size_t>(n) + 1, 0.0);
    Eigen::MatrixXcd mk = Eigen::MatrixXcd::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
      mk = (mk * m).eval();
      power_sums[static_cast<std::size_t>(k)] = mk.trace().real();
    }
    // e_k = (1/k) sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<double> elementary(static_cast<std::size_t>(n) + 1, 0.0);
    elementary[0] = 1.0;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
      double acc = 0.0;
      for (std::size_t i = 1; i <= k; ++i) {
        const double sign = (i % 2 == 1) ? 1.0 : -1.0;
        acc += sign * elementary[k - i] * power_sums[i];
      }
      elementary[k] = acc / static_cast<double>(k);
    }
    // det(M - xI) = sum_k (-1)^(n-k) e_{n-k} ... expressed monic in x.
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
      const std::size_t degree = static_cast<std::size_t>(n) - k;
      const double sign = (degree % 2 == 0) ? 1.0 : -1.0;
      coeffs_[degree] = sign * elementary[k];
    }
  }

  double operator()(double x) const {
    double value = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      value = value * x + coeffs_[k];
    }
    return value;
  }

 private:
  std::vector<double> coeffs_;  // coeffs_[k] multiplies x^k
};

// All real roots of det(M - x I) for Hermitian M with simple spectrum,
// found by sampling a Gershgorin interval and bisecting sign changes.
inline std::vector<double> oracle_eigs(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return {};
  double bound = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) row += std::abs(m(i, j));
    bound = std::max(bound, row);
  }
  const CharPoly poly(m);
  const double lo = -bound - 1.0;
  const double hi = bound + 1.0;
  const int samples = 20000;

  std::vector<double> roots;
  double prev_x = lo;
  double prev_f = poly(prev_x);
  for (int s = 1; s <= samples; ++s) {
    const double x = lo + (hi - lo) * s / samples;
    const double f = poly(x);
    if ((prev_f < 0.0 && f > 0.0) || (prev_f > 0.0 && f < 0.0) || f == 0.0) {
      double a = prev_x;
      double b = x;
      double fa = prev_f;
      for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (a + b);
        const double fm = poly(mid);
        if ((fa < 0.0) == (fm < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

}  // namespace testsupport
