#pragma once

// Named quantitative checks over a point sequence: exact matrix identities,
// column-defect bands, norm-gap and truncation-chain inequalities, and the
// Schatten-vs-separation ratio diagnostics. Produces a deterministic report.

#include <string>
#include <vector>

#include "gramlab/disk_geometry.hpp"
#include "gramlab/spectral.hpp"

namespace gramlab {

struct VerifierConfig {
  double tol_identity = 1e-9;
  double tol_ineq = 1e-10;
  std::vector<double> ps = {2.0, 3.0, 4.0, kPInf};
  double cond_cap = 1e12;
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double value = 0.0;  // residual, slack, or ratio, depending on the check
  std::string note;
  bool diagnostic = false;  // diagnostic rows never fail a report
};

struct VerificationReport {
  std::size_t n = 0;
  double delta_min = 1.0;
  double cond_g = 1.0;
  std::vector<std::string> warnings;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// -log(d^2) / (1 - d^2), the constant tying the column defect to
// 1 - delta_n^2 on both sides. Every pseudohyperbolic factor for index n
// lies in [delta_min, 1), where -log x / (1 - x) is at most this value
// and at least 1. Equals 1 at d = 1.
double band_constant(double delta_min);

// Exact column identity ||(G-I)e_n||^2 = sum_{j!=n} (1 - rho_jn^2), plus
// the band 1/C <= ||(G-I)e_n||^2 / (1 - delta_n^2) <= C.
std::vector<CheckResult> check_column_defect(const PointSequence& seq,
                                             const VerifierConfig& cfg);

// ||G - I|| <= ||G^-1|| - 1. Skipped above the conditioning cap.
CheckResult check_norm_gap(const PointSequence& seq,
                           const VerifierConfig& cfg);

// Hilbert-Schmidt identity, both Zhu directions per requested p, and the
// separation-band lower bound on the column power sum.
std::vector<CheckResult> check_schatten_bounds(const PointSequence& seq,
                                               const VerifierConfig& cfg);

// Truncation chain inequalities per row plus the even/odd singular value
// pairing sums. Requires a delta-sorted sequence of size >= 3 (TooShort).
std::vector<CheckResult> check_tail_decay(const PointSequence& seq,
                                          const VerifierConfig& cfg);

// Diagnostic: ratio ||G-I||_p / ||sqrt(1-delta_n)||_p per p >= 2, with the
// derivable hard lower bound asserted and the asymptotic reference band
// reported in the note only.
std::vector<CheckResult> check_ratio_band(const PointSequence& seq,
                                          const VerifierConfig& cfg);

// All checks in fixed registry order. Errors become Skipped rows; sizes
// too small for a check become vacuous passes. The tail checks run on a
// delta-sorted copy, so the whole report is permutation invariant.
VerificationReport run_suite(const PointSequence& seq,
                             const VerifierConfig& cfg = {});

}  // namespace gramlab
