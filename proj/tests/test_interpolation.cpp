#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gramlab/errors.hpp"
#include "gramlab/interpolation.hpp"
#include "test_support.hpp"

using namespace gramlab;

namespace {

const double kRoot3 = std::sqrt(3.0);

PointSequence seq_of(std::initializer_list<Complex> pts) {
  return PointSequence(std::vector<Complex>(pts));
}

PickProblem two_point_sign_problem() {
  return PickProblem(seq_of({Complex(0, 0), Complex(0.5, 0)}),
                     {Complex(1, 0), Complex(-1, 0)});
}

}  // namespace

TEST_CASE("feasibility threshold of the two-point sign problem") {
  // determinant closed form: feasible iff t^2 >= 7 + 4 sqrt3
  const PickProblem prob = two_point_sign_problem();
  CHECK(pick_feasible(prob, 4.0));
  CHECK_FALSE(pick_feasible(prob, 3.0));
  CHECK(pick_feasible(prob, 3.7400));
  CHECK_FALSE(pick_feasible(prob, 3.7200));
}

TEST_CASE("feasibility edge cases") {
  CHECK(pick_feasible(PickProblem(seq_of({Complex(0.3, 0)}), {Complex(2, 0)}),
                      2.0));
  CHECK(pick_feasible(
      PickProblem(seq_of({Complex(0, 0), Complex(0.5, 0)}),
                  {Complex(0, 0), Complex(0, 0)}),
      0.0));
  CHECK_THROWS_AS(pick_feasible(two_point_sign_problem(), -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      PickProblem(seq_of({Complex(0.3, 0)}), {Complex(1, 0), Complex(2, 0)}),
      InvalidSpec);
}

TEST_CASE("feasibility is monotone in t") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSequence nodes = testsupport::random_sequence(rng, 5, 0.05);
    std::vector<Complex> w;
    for (std::size_t k = 0; k < 5; ++k) {
      w.push_back(std::polar(0.5 + unit(rng), 2.0 * M_PI * unit(rng)));
    }
    const PickProblem prob(nodes, w);
    bool was_feasible = false;
    for (double t = 0.25; t <= 64.0; t *= 2.0) {
      const bool now = pick_feasible(prob, t);
      if (was_feasible) CHECK(now);
      was_feasible = now;
    }
    CHECK(was_feasible);
  }
}

TEST_CASE("minimal norms on reference problems") {
  CHECK(min_norm(two_point_sign_problem(), 1e-9) ==
        doctest::Approx(2.0 + kRoot3).epsilon(1e-6));
  CHECK(min_norm(PickProblem(seq_of({Complex(0.3, 0)}), {Complex(2, 0)})) ==
        2.0);
  // data equal to the nodes: the identity map is the unique extremal
  CHECK(min_norm(PickProblem(seq_of({Complex(0, 0), Complex(0.5, 0)}),
                             {Complex(0, 0), Complex(0.5, 0)}),
                 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("minimal norm scaling and rotation invariance") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const PointSequence nodes = testsupport::random_sequence(rng, 4, 0.05);
    std::vector<Complex> w;
    for (std::size_t k = 0; k < 4; ++k) {
      w.push_back(std::polar(0.5 + unit(rng), 2.0 * M_PI * unit(rng)));
    }
    const double base = min_norm(PickProblem(nodes, w), 1e-10);

    const Complex c = std::polar(0.5 + 1.5 * unit(rng),
                                 2.0 * M_PI * unit(rng));
    std::vector<Complex> scaled = w;
    for (Complex& v : scaled) v *= c;
    CHECK(min_norm(PickProblem(nodes, scaled), 1e-10) ==
          doctest::Approx(std::abs(c) * base).epsilon(1e-8));

    const Complex u = std::polar(1.0, 2.0 * M_PI * unit(rng));
    std::vector<Complex> rotated = w;
    for (Complex& v : rotated) v *= u;
    CHECK(std::abs(min_norm(PickProblem(nodes, rotated), 1e-10) - base) <=
          1e-8 * std::max(base, 1.0));
  }
}

TEST_CASE("min_norm reports hopeless problems") {
  // barely-distinct nodes with large opposite data need norm beyond the cap
  const PointSequence nodes =
      seq_of({Complex(0.3, 0), Complex(0.3 + 2e-13, 0)});
  CHECK_THROWS_AS(
      min_norm(PickProblem(nodes, {Complex(1e5, 0), Complex(-1e5, 0)})),
      NoConvergence);
}

TEST_CASE("lower search recovers the two-point extremal") {
  CHECK(interp_constant_lower(seq_of({Complex(0, 0), Complex(0.5, 0)}), 0, 0,
                              1e-9) ==
        doctest::Approx(2.0 + kRoot3).epsilon(1e-6));
  CHECK(interp_constant_lower(seq_of({Complex(0.3, 0)}), 4, 1) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("earl bound values and domain") {
  CHECK(earl_bound(1.0) == 1.0);
  CHECK(earl_bound(0.5) == doctest::Approx(7.0 + 4.0 * kRoot3).epsilon(1e-12));
  CHECK(earl_bound(0.8) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_THROWS_AS(earl_bound(0.0), InvalidDelta);
  CHECK_THROWS_AS(earl_bound(-0.2), InvalidDelta);
  CHECK_THROWS_AS(earl_bound(1.1), InvalidDelta);
}

TEST_CASE("norm-product bounds") {
  const SpectralSummary two =
      spectral_summary(seq_of({Complex(0, 0), Complex(0.5, 0)}), {});
  const SsBounds bounds = ss_bounds(two);
  CHECK(bounds.m_upper_ss == doctest::Approx(2.0 + kRoot3).epsilon(1e-9));

  const SsBounds single =
      ss_bounds(spectral_summary(seq_of({Complex(0.3, 0)}), {}));
  CHECK(single.m_lower_gram == 1.0);
  CHECK(single.m_upper_ss == 1.0);

  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSequence seq = testsupport::random_sequence(rng, 6, 0.02);
    const SsBounds b = ss_bounds(spectral_summary(seq, {}));
    CHECK(b.m_lower_gram <= b.m_upper_ss + 1e-10);
  }
}

TEST_CASE("sandwich between search lower bound and both upper bounds") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 8; ++trial) {
    const PointSequence seq = testsupport::random_sequence(
        rng, 4 + trial % 3, trial < 4 ? 0.1 : 0.05);
    const InterpolationEstimates est = interpolation_estimates(seq, 8, trial);
    CHECK(est.m_lower_search <=
          std::min(est.m_upper_ss, est.m_upper_earl) + 1e-6);
    CHECK(est.m_lower_gram <= est.m_upper_earl + 1e-6);
    CHECK(est.m_lower_gram <= est.m_upper_ss + 1e-10);
  }
  // the three-point reference case sits inside its bounds as well
  const InterpolationEstimates est = interpolation_estimates(
      seq_of({Complex(0, 0), Complex(0.5, 0), Complex(0.75, 0)}), 0, 0);
  CHECK(est.m_lower_search <= est.m_upper_ss + 1e-6);
  CHECK(est.m_upper_ss == doctest::Approx(10.2529202).epsilon(1e-6));
  CHECK(est.m_upper_earl == doctest::Approx(97.9897949).epsilon(1e-6));
}

TEST_CASE("appending a point cannot shrink the lower search bound") {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 5; ++trial) {
    const PointSequence longer = testsupport::random_sequence(rng, 5, 0.05);
    const PointSequence shorter = PointSequence(std::vector<Complex>(
        longer.points().begin(), longer.points().end() - 1));
    const double small = interp_constant_lower(shorter, 0, 0, 1e-9);
    const double large = interp_constant_lower(longer, 0, 0, 1e-9);
    CHECK(small <= large + 1e-7);
  }
}
