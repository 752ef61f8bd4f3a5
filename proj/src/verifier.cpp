#include "gramlab/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gramlab/errors.hpp"
#include "gramlab/gram.hpp"
#include "gramlab/interpolation.hpp"

namespace gramlab {

namespace {

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string p_tag(double p) { return p == kPInf ? "inf" : num(p); }

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

// sum_{j != n} (1 - rho_jn^2), the independent side of the column identity.
double column_gap_sum(const PointSequence& seq, std::size_t n) {
  double sum = 0.0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (j != n) sum += metric_gap_sq(seq[n], seq[j]);
  }
  return sum;
}

std::vector<CheckResult> pairing_rows(const std::vector<double>& sv,
                                      const VerifierConfig& cfg) {
  std::vector<CheckResult> rows;
  for (double p : cfg.ps) {
    CheckResult row;
    row.name = "tail_pairing_p=" + p_tag(p);
    double even = 0.0;
    double odd = 0.0;
    for (std::size_t k = 0; k < sv.size(); ++k) {
      // 1-based index k+1; even-indexed values are dominated pairwise by
      // the odd-indexed ones, so their p-sum is at most twice as large.
      const bool is_odd = (k % 2 == 0);
      const double term = p == kPInf ? sv[k] : std::pow(sv[k], p);
      if (p == kPInf) {
        (is_odd ? odd : even) = std::max(is_odd ? odd : even, term);
      } else {
        (is_odd ? odd : even) += term;
      }
    }
    row.value = 2.0 * odd - even;
    row.status = row.value >= -cfg.tol_ineq ? CheckStatus::Pass
                                            : CheckStatus::Fail;
    row.note = "even_sum=" + num(even) + " odd_sum=" + num(odd);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "UNKNOWN";
}

bool VerificationReport::passed() const {
  for (const CheckResult& check : checks) {
    if (!check.diagnostic && check.status == CheckStatus::Fail) return false;
  }
  return true;
}

double band_constant(double delta_min) {
  if (std::isnan(delta_min) || delta_min <= 0.0 || delta_min > 1.0) {
    throw InvalidDelta("band constant requires delta in (0, 1]");
  }
  if (delta_min == 1.0) return 1.0;
  const double log_d = std::log(delta_min);
  return -2.0 * log_d / -std::expm1(2.0 * log_d);
}

std::vector<CheckResult> check_column_defect(const PointSequence& seq,
                                             const VerifierConfig& cfg) {
  const std::size_t n = seq.size();
  const Eigen::MatrixXcd g = build_gram(seq);
  const SeparationProfile profile = separation_profile(seq);
  const std::vector<double> gap_sq = profile.one_minus_delta_sq();
  const double band = band_constant(profile.delta_min);

  CheckResult exact{"column_defect_exact"};
  CheckResult banded{"column_defect_band"};
  banded.note = "C(delta_min)=" + num(band);
  double ratio_lo = kPInf;
  double ratio_hi = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double defect =
        column_deficiency(g, static_cast<Eigen::Index>(k));
    const double gaps = column_gap_sum(seq, k);
    exact.value = std::max(exact.value, rel_diff(defect, gaps));

    if (gap_sq[k] > 0.0) {
      const double ratio = defect / gap_sq[k];
      ratio_lo = std::min(ratio_lo, ratio);
      ratio_hi = std::max(ratio_hi, ratio);
      const double violation =
          std::max({ratio - band, 1.0 / band - ratio, 0.0});
      banded.value = std::max(banded.value, violation);
    }
  }
  exact.status =
      exact.value <= cfg.tol_identity ? CheckStatus::Pass : CheckStatus::Fail;
  banded.status =
      banded.value <= cfg.tol_ineq ? CheckStatus::Pass : CheckStatus::Fail;
  if (ratio_hi > 0.0) {
    banded.note += " ratio_range=[" + num(ratio_lo) + "," + num(ratio_hi) + "]";
  } else {
    banded.note += " vacuous";
  }
  return {exact, banded};
}

CheckResult check_norm_gap(const PointSequence& seq,
                           const VerifierConfig& cfg) {
  CheckResult row{"norm_gap"};
  const SpectralSummary summary = spectral_summary(seq, {});
  if (summary.cond_g > cfg.cond_cap) {
    row.status = CheckStatus::Skipped;
    row.note = "cond(G)=" + num(summary.cond_g) + " exceeds cap";
    return row;
  }
  row.value = (summary.inv_norm_g - 1.0) - summary.op_norm_g_minus_i;
  row.status =
      row.value >= -cfg.tol_ineq ? CheckStatus::Pass : CheckStatus::Fail;
  row.note = "op=" + num(summary.op_norm_g_minus_i) +
             " inv=" + num(summary.inv_norm_g);
  return row;
}

std::vector<CheckResult> check_schatten_bounds(const PointSequence& seq,
                                               const VerifierConfig& cfg) {
  const std::size_t n = seq.size();
  const Eigen::MatrixXcd g = build_gram(seq);
  const SeparationProfile profile = separation_profile(seq);
  const std::vector<double> gap_sq = profile.one_minus_delta_sq();
  const double band = band_constant(profile.delta_min);

  std::vector<double> sv(n);
  std::vector<double> col(n);
  if (n > 0) {
    const Eigen::VectorXd eigs = hermitian_eigs(g);
    for (std::size_t k = 0; k < n; ++k) {
      sv[k] = std::abs(eigs(static_cast<Eigen::Index>(k)) - 1.0);
      col[k] =
          std::sqrt(column_deficiency(g, static_cast<Eigen::Index>(k)));
    }
  }

  std::vector<CheckResult> rows;

  {
    // Frobenius two ways: spectrum vs entries.
    CheckResult row{"hs_identity"};
    double from_eigs = 0.0;
    double from_cols = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      from_eigs += sv[k] * sv[k];
      from_cols += col[k] * col[k];
    }
    row.value = rel_diff(from_eigs, from_cols);
    row.status = row.value <= cfg.tol_identity ? CheckStatus::Pass
                                               : CheckStatus::Fail;
    row.note = "S2^2=" + num(from_eigs);
    rows.push_back(row);
  }

  for (double p : cfg.ps) {
    CheckResult row{"zhu_direction_p=" + p_tag(p)};
    double norm_pow = 0.0;
    double colsum = 0.0;
    if (p == kPInf) {
      for (std::size_t k = 0; k < n; ++k) {
        norm_pow = std::max(norm_pow, sv[k]);
        colsum = std::max(colsum, col[k]);
      }
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        norm_pow += std::pow(sv[k], p);
        colsum += std::pow(col[k], p);
      }
    }
    if (p == 2.0) {
      row.value = rel_diff(norm_pow, colsum);
      row.status = row.value <= cfg.tol_identity ? CheckStatus::Pass
                                                 : CheckStatus::Fail;
      row.note = "equality at p=2";
    } else if (p > 2.0) {
      row.value = norm_pow - colsum;
      row.status = row.value >= -cfg.tol_ineq ? CheckStatus::Pass
                                              : CheckStatus::Fail;
      row.note = "column sum below norm power";
    } else {
      row.value = colsum - norm_pow;
      row.status = row.value >= -cfg.tol_ineq ? CheckStatus::Pass
                                              : CheckStatus::Fail;
      row.note = "norm power below column sum";
    }
    rows.push_back(row);
  }

  for (double p : cfg.ps) {
    if (p < 2.0) continue;
    CheckResult row{"schatten_lower_band_p=" + p_tag(p)};
    double colsum = 0.0;
    double target = 0.0;
    if (p == kPInf) {
      for (std::size_t k = 0; k < n; ++k) {
        colsum = std::max(colsum, col[k]);
        target = std::max(target, std::sqrt(gap_sq[k] / band));
      }
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        colsum += std::pow(col[k], p);
        target += std::pow(gap_sq[k] / band, p / 2.0);
      }
    }
    row.value = colsum - target;
    row.status =
        row.value >= -cfg.tol_ineq ? CheckStatus::Pass : CheckStatus::Fail;
    row.note = "C(delta_min)=" + num(band);
    rows.push_back(row);
  }

  return rows;
}

std::vector<CheckResult> check_tail_decay(const PointSequence& seq,
                                          const VerifierConfig& cfg) {
  const std::size_t n = seq.size();
  if (n < 3) throw TooShort("tail decay requires at least 3 points");

  const std::vector<TailRow> chain = tail_chain(seq);

  CheckResult row{"tail_chain"};
  double worst = kPInf;
  for (const TailRow& r : chain) {
    if (!std::isnan(r.lambda_odd)) {
      worst = std::min(worst, r.tail_op_norm - r.lambda_odd);
    }
    worst = std::min(worst, r.tail_inv_bound - r.tail_op_norm);
    worst = std::min(worst, r.earl_tail_bound - r.tail_inv_bound);
  }
  row.value = worst;
  row.status =
      row.value >= -cfg.tol_ineq ? CheckStatus::Pass : CheckStatus::Fail;
  row.note = "rows=" + std::to_string(chain.size()) +
             " final_earl_bound=" + num(chain.back().earl_tail_bound);

  std::vector<double> sv;
  {
    const Eigen::VectorXd eigs = hermitian_eigs(build_gram(seq));
    sv.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      sv[k] = std::abs(eigs(static_cast<Eigen::Index>(k)) - 1.0);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
  }

  std::vector<CheckResult> rows{row};
  for (CheckResult& pairing : pairing_rows(sv, cfg)) {
    rows.push_back(std::move(pairing));
  }
  return rows;
}

std::vector<CheckResult> check_ratio_band(const PointSequence& seq,
                                          const VerifierConfig& cfg) {
  const std::size_t n = seq.size();
  const SeparationProfile profile = separation_profile(seq);
  const std::vector<double> gap = profile.one_minus_delta();
  const double band = band_constant(profile.delta_min);
  const double hard_lower = 1.0 / std::sqrt(band);

  std::vector<double> sv(n);
  if (n > 0) {
    const Eigen::VectorXd eigs = hermitian_eigs(build_gram(seq));
    for (std::size_t k = 0; k < n; ++k) {
      sv[k] = std::abs(eigs(static_cast<Eigen::Index>(k)) - 1.0);
    }
  }

  std::vector<CheckResult> rows;
  for (double p : cfg.ps) {
    if (p < 2.0) continue;
    CheckResult row{"ratio_band_p=" + p_tag(p)};
    row.diagnostic = true;

    double schatten = 0.0;
    double lp_gap = 0.0;
    if (p == kPInf) {
      for (std::size_t k = 0; k < n; ++k) {
        schatten = std::max(schatten, sv[k]);
        lp_gap = std::max(lp_gap, std::sqrt(gap[k]));
      }
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        schatten += std::pow(sv[k], p);
        lp_gap += std::pow(gap[k], p / 2.0);
      }
      schatten = std::pow(schatten, 1.0 / p);
      lp_gap = std::pow(lp_gap, 1.0 / p);
    }

    if (lp_gap == 0.0) {
      row.status = CheckStatus::Skipped;
      row.note = "no separation gap";
      rows.push_back(row);
      continue;
    }
    row.value = schatten / lp_gap;
    row.status = row.value >= hard_lower - cfg.tol_ineq ? CheckStatus::Pass
                                                        : CheckStatus::Fail;
    const double ref_upper =
        4.0 * std::sqrt(2.0) * (p == kPInf ? 1.0 : std::pow(2.0, 1.0 / p));
    row.note = "hard_lower=" + num(hard_lower) + " asymptotic_refs=[" +
               num(std::sqrt(2.0)) + "," + num(ref_upper) + "]";
    rows.push_back(row);
  }
  return rows;
}

VerificationReport run_suite(const PointSequence& seq,
                             const VerifierConfig& cfg) {
  if (cfg.tol_identity <= 0.0 || cfg.tol_ineq <= 0.0 || cfg.cond_cap <= 0.0) {
    throw InvalidSpec("verifier tolerances must be positive");
  }
  VerificationReport report;
  report.n = seq.size();

  const SeparationProfile profile = separation_profile(seq);
  report.delta_min = profile.delta_min;
  const SpectralSummary summary = spectral_summary(seq, cfg.ps);
  report.cond_g = summary.cond_g;

  const double min_rho = min_pairwise_rho(seq);
  if (seq.size() >= 2 && min_rho < kConditioningRho) {
    report.warnings.push_back(
        "min pairwise pseudohyperbolic distance " + num(min_rho) +
        " is below " + num(kConditioningRho) + "; expect ill conditioning");
  }

  {
    CheckResult row{"gram_psd"};
    if (seq.empty()) {
      row.note = "vacuous (n = 0)";
    } else {
      row.value = summary.eigs_g.front();
      row.status = row.value > 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
      row.note = "min eigenvalue";
    }
    report.checks.push_back(row);
  }

  const bool conditioned = summary.cond_g <= cfg.cond_cap;
  for (const char* name : {"koosis_identity", "koosis_centered"}) {
    CheckResult row{name};
    if (!conditioned) {
      row.status = CheckStatus::Skipped;
      row.note = "cond(G)=" + num(summary.cond_g) + " exceeds cap";
    } else {
      row.value = std::string(name) == "koosis_identity"
                      ? koosis_residual(seq, cfg.cond_cap)
                      : koosis_centered_residual(seq, cfg.cond_cap);
      row.status = row.value <= cfg.tol_identity ? CheckStatus::Pass
                                                 : CheckStatus::Fail;
      row.note = "relative Frobenius residual";
    }
    report.checks.push_back(row);
  }

  for (CheckResult& row : check_column_defect(seq, cfg)) {
    report.checks.push_back(std::move(row));
  }
  report.checks.push_back(check_norm_gap(seq, cfg));

  {
    CheckResult row{"trace_identity"};
    double trace = 0.0;
    for (double eig : summary.eigs_g) trace += eig;
    row.value = rel_diff(trace, static_cast<double>(report.n));
    row.status = row.value <= cfg.tol_identity ? CheckStatus::Pass
                                               : CheckStatus::Fail;
    report.checks.push_back(row);
  }

  {
    CheckResult row{"schatten_monotone"};
    std::vector<double> ordered = cfg.ps;
    std::sort(ordered.begin(), ordered.end());
    double worst = kPInf;
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
      worst = std::min(worst, summary.schatten.at(ordered[i]) -
                                  summary.schatten.at(ordered[i + 1]));
    }
    row.value = ordered.size() < 2 ? 0.0 : worst;
    row.status =
        row.value >= -cfg.tol_ineq ? CheckStatus::Pass : CheckStatus::Fail;
    report.checks.push_back(row);
  }

  for (CheckResult& row : check_schatten_bounds(seq, cfg)) {
    report.checks.push_back(std::move(row));
  }

  if (seq.size() >= 3) {
    // Chain rows need a delta-sorted view; everything they measure is
    // otherwise permutation invariant, so sorting here keeps the whole
    // report independent of input order.
    for (CheckResult& row : check_tail_decay(sort_by_delta(seq), cfg)) {
      report.checks.push_back(std::move(row));
    }
  } else {
    CheckResult row{"tail_chain"};
    row.note = "vacuous (n < 3)";
    report.checks.push_back(row);
    std::vector<double> sv = summary.sv_g_minus_i;
    for (CheckResult& pairing : pairing_rows(sv, cfg)) {
      report.checks.push_back(std::move(pairing));
    }
  }

  for (CheckResult& row : check_ratio_band(seq, cfg)) {
    report.checks.push_back(std::move(row));
  }

  return report;
}

}  // namespace gramlab
