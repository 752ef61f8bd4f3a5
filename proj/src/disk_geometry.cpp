#include "gramlab/disk_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gramlab/errors.hpp"

namespace gramlab {

bool in_unit_disk(Complex z) { return std::norm(z) < 1.0; }

double pseudo_dist(Complex a, Complex b) {
  return std::abs((a - b) / (1.0 - std::conj(b) * a));
}

double one_minus_norm_sq(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  // split each square exactly; the 1 - p1 - p2 cancellation is then exact
  // by Sterbenz and only the final rounding remains
  const double p1 = re * re;
  const double e1 = std::fma(re, re, -p1);
  const double p2 = im * im;
  const double e2 = std::fma(im, im, -p2);
  return ((1.0 - p1) - p2) - (e1 + e2);
}

double metric_gap_sq(Complex a, Complex b) {
  return one_minus_norm_sq(a) * one_minus_norm_sq(b) /
         std::norm(1.0 - std::conj(b) * a);
}

Complex blaschke_factor(Complex zero, Complex z) {
  return (zero - z) / (1.0 - std::conj(zero) * z);
}

PointSequence::PointSequence(std::vector<Complex> points)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!in_unit_disk(points_[i])) {
      throw InvalidPoint("point " + std::to_string(i + 1) +
                         " is not strictly inside the unit disk");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (std::abs(points_[i] - points_[j]) < kDuplicateTol) {
        throw DuplicatePoints("points " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " coincide");
      }
    }
  }
}

PointSequence PointSequence::tail(std::size_t drop) const {
  if (drop > size()) {
    throw std::out_of_range("tail: drop exceeds sequence length");
  }
  return PointSequence(
      std::vector<Complex>(points_.begin() + static_cast<std::ptrdiff_t>(drop),
                           points_.end()));
}

std::vector<double> SeparationProfile::one_minus_delta() const {
  std::vector<double> out(log_delta.size());
  for (std::size_t j = 0; j < log_delta.size(); ++j) {
    out[j] = -std::expm1(log_delta[j]);
  }
  return out;
}

std::vector<double> SeparationProfile::one_minus_delta_sq() const {
  std::vector<double> out(log_delta.size());
  for (std::size_t j = 0; j < log_delta.size(); ++j) {
    out[j] = -std::expm1(2.0 * log_delta[j]);
  }
  return out;
}

SeparationProfile separation_profile(const PointSequence& seq) {
  const std::size_t n = seq.size();
  SeparationProfile profile;
  profile.log_delta.assign(n, 0.0);
  profile.delta.assign(n, 1.0);
  profile.b_values.assign(n, Complex(1.0, 0.0));
  profile.delta_min = 1.0;

  for (std::size_t j = 0; j < n; ++j) {
    double log_d = 0.0;
    Complex b(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      const double rho = pseudo_dist(seq[j], seq[k]);
      if (rho == 0.0) {
        throw DuplicatePoints("points " + std::to_string(j + 1) + " and " +
                              std::to_string(k + 1) +
                              " have zero pseudohyperbolic distance");
      }
      log_d += std::log(rho);
      b *= blaschke_factor(seq[k], seq[j]);
    }
    profile.log_delta[j] = log_d;
    profile.delta[j] = std::exp(log_d);
    profile.b_values[j] = b;
    profile.delta_min = std::min(profile.delta_min, profile.delta[j]);
  }
  return profile;
}

PointSequence sort_by_delta(const PointSequence& seq) {
  const SeparationProfile profile = separation_profile(seq);
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&profile](std::size_t a, std::size_t b) {
                     return profile.delta[a] < profile.delta[b];
                   });
  std::vector<Complex> sorted;
  sorted.reserve(seq.size());
  for (std::size_t idx : order) sorted.push_back(seq[idx]);
  return PointSequence(std::move(sorted));
}

double min_pairwise_rho(const PointSequence& seq) {
  double best = 1.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      best = std::min(best, pseudo_dist(seq[i], seq[j]));
    }
  }
  return best;
}

GeneratorSpec::Family family_from_string(const std::string& name) {
  if (name == "geometric") return GeneratorSpec::Family::Geometric;
  if (name == "supergeometric") return GeneratorSpec::Family::Supergeometric;
  if (name == "ratio-profile") return GeneratorSpec::Family::RatioProfile;
  if (name == "explicit") return GeneratorSpec::Family::Explicit;
  throw InvalidSpec("unknown family '" + name + "'");
}

std::string family_to_string(GeneratorSpec::Family family) {
  switch (family) {
    case GeneratorSpec::Family::Geometric: return "geometric";
    case GeneratorSpec::Family::Supergeometric: return "supergeometric";
    case GeneratorSpec::Family::RatioProfile: return "ratio-profile";
    case GeneratorSpec::Family::Explicit: return "explicit";
  }
  throw InvalidSpec("unknown family enum value");
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidSpec(message);
}

std::vector<double> radii_for(const GeneratorSpec& spec) {
  std::vector<double> radii;
  radii.reserve(spec.count);
  switch (spec.family) {
    case GeneratorSpec::Family::Geometric:
      for (std::size_t k = 1; k <= spec.count; ++k) {
        radii.push_back(1.0 - std::pow(spec.sigma, static_cast<double>(k)));
      }
      break;
    case GeneratorSpec::Family::Supergeometric:
      for (std::size_t k = 1; k <= spec.count; ++k) {
        radii.push_back(
            1.0 - std::pow(spec.sigma, std::pow(spec.q, static_cast<double>(k))));
      }
      break;
    case GeneratorSpec::Family::RatioProfile: {
      // The stated ratio k^-gamma is 1 at k = 1, which would repeat the
      // first radius; the recurrence therefore starts the exponent at 2.
      double gap = 1.0 - spec.sigma;
      radii.push_back(spec.sigma);
      for (std::size_t k = 1; k < spec.count; ++k) {
        gap *= std::pow(static_cast<double>(k + 1), -spec.gamma);
        radii.push_back(1.0 - gap);
      }
      break;
    }
    case GeneratorSpec::Family::Explicit:
      break;
  }
  return radii;
}

}  // namespace

PointSequence generate(const GeneratorSpec& spec) {
  std::vector<Complex> pts;
  if (spec.family == GeneratorSpec::Family::Explicit) {
    pts = spec.points;
  } else {
    require(spec.count >= 1, "count must be a positive integer");
    require(spec.sigma > 0.0 && spec.sigma < 1.0, "sigma must lie in (0, 1)");
    if (spec.family == GeneratorSpec::Family::Supergeometric) {
      require(spec.q > 1.0, "q must exceed 1");
    }
    if (spec.family == GeneratorSpec::Family::RatioProfile) {
      require(spec.gamma > 0.0, "gamma must be positive");
    }
    for (double r : radii_for(spec)) pts.emplace_back(r, 0.0);
  }

  if (!spec.rotation.empty()) {
    require(spec.rotation.size() == pts.size(),
            "rotation list must match the number of points");
    for (std::size_t k = 0; k < pts.size(); ++k) {
      require(std::abs(std::abs(spec.rotation[k]) - 1.0) <= 1e-12,
              "rotation " + std::to_string(k + 1) + " is not unit modulus");
      pts[k] *= spec.rotation[k];
    }
  }

  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!in_unit_disk(pts[k])) {
      throw InvalidSpec("generated point " + std::to_string(k + 1) +
                        " is not strictly inside the unit disk at double "
                        "precision");
    }
  }
  try {
    return PointSequence(std::move(pts));
  } catch (const DuplicatePoints& e) {
    throw InvalidSpec(std::string("generated points collide: ") + e.what());
  }
}

}  // namespace gramlab
