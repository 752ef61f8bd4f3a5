#pragma once

// Points in the open unit disk, the pseudohyperbolic metric, Blaschke
// factors, per-point separation constants, and test-sequence generators.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace gramlab {

using Complex = std::complex<double>;

// Points closer than this (Euclidean) are treated as coincident and rejected.
inline constexpr double kDuplicateTol = 1e-14;

// Distinct points closer than this (pseudohyperbolic) make the Gram matrix
// numerically singular; reports attach a conditioning warning.
inline constexpr double kConditioningRho = 1e-6;

bool in_unit_disk(Complex z);

// |(a - b) / (1 - conj(b) a)|, the Moebius-invariant metric on the disk.
double pseudo_dist(Complex a, Complex b);

// 1 - |z|^2, compensated so the result keeps full relative precision for
// points hugging the boundary.
double one_minus_norm_sq(Complex z);

// 1 - pseudo_dist(a, b)^2, evaluated through the identity
// (1 - |a|^2)(1 - |b|^2) / |1 - conj(b) a|^2, which stays accurate where
// the direct subtraction cancels (points near the boundary or far apart
// in the metric).
double metric_gap_sq(Complex a, Complex b);

// (zero - z) / (1 - conj(zero) z). Unnormalized: no unimodular prefactor,
// so products of factors keep the phases that make the inverse identity
// D* G^t D exact (validated by the closed-form two-point case).
Complex blaschke_factor(Complex zero, Complex z);

// Ordered list of distinct points in the open disk. Validates on
// construction and is immutable afterwards.
class PointSequence {
 public:
  PointSequence() = default;
  explicit PointSequence(std::vector<Complex> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Complex& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Complex>& points() const { return points_; }

  // Subsequence with the first `drop` points removed.
  PointSequence tail(std::size_t drop) const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Complex> points_;
};

// Per-point separation data. delta[j] is the modulus of the Blaschke
// product over all other points, evaluated at point j; it is accumulated
// in log space so long sequences do not underflow.
struct SeparationProfile {
  std::vector<double> log_delta;  // sum of log rho(a_j, a_k), k != j; <= 0
  std::vector<double> delta;      // exp(log_delta), in (0, 1]
  std::vector<Complex> b_values;  // product of Blaschke factors at a_j
  double delta_min = 1.0;         // min over j; 1 for n <= 1

  // 1 - delta_j and 1 - delta_j^2 via expm1, accurate near delta = 1.
  std::vector<double> one_minus_delta() const;
  std::vector<double> one_minus_delta_sq() const;
};

SeparationProfile separation_profile(const PointSequence& seq);

// Permutation of seq with delta_j nondecreasing; stable in the original
// index. The delta_j themselves do not depend on the ordering.
PointSequence sort_by_delta(const PointSequence& seq);

double min_pairwise_rho(const PointSequence& seq);

struct GeneratorSpec {
  enum class Family { Geometric, Supergeometric, RatioProfile, Explicit };

  Family family = Family::Explicit;
  double sigma = 0.5;   // (0, 1)
  double q = 2.0;       // > 1, supergeometric only
  double gamma = 1.0;   // > 0, ratio-profile only
  std::size_t count = 0;
  std::vector<Complex> points;    // explicit family
  std::vector<Complex> rotation;  // optional unit-modulus phases, one per point
};

GeneratorSpec::Family family_from_string(const std::string& name);
std::string family_to_string(GeneratorSpec::Family family);

// Radii:
//   geometric       a_k = 1 - sigma^k,          k = 1..count
//   supergeometric  a_k = 1 - sigma^(q^k),      k = 1..count
//   ratio-profile   r_1 = sigma, 1 - r_{k+1} = (1 - r_k) (k+1)^-gamma
//   explicit        pass-through
// Throws InvalidSpec on bad parameters, on points that leave the open disk
// at double precision, and on collisions within kDuplicateTol.
PointSequence generate(const GeneratorSpec& spec);

}  // namespace gramlab
