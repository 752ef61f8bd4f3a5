// gramlab: generate point sequences in the unit disk, analyze the Gram
// matrix of their normalized kernels, verify the identities and bounds it
// satisfies, and sweep generator parameters into CSV datasets.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gramlab/disk_geometry.hpp"
#include "gramlab/errors.hpp"
#include "gramlab/gram.hpp"
#include "gramlab/interpolation.hpp"
#include "gramlab/sequence_io.hpp"
#include "gramlab/spectral.hpp"
#include "gramlab/verifier.hpp"

namespace {

using namespace gramlab;

std::vector<std::string> split_commas(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& arg : args) {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

std::vector<double> parse_p_list(const std::vector<std::string>& args) {
  std::vector<double> ps;
  for (const std::string& token : split_commas(args)) {
    const double p = parse_p(token);
    if (p < 1.0) throw ParseError("p must be at least 1, got '" + token + "'");
    ps.push_back(p);
  }
  return ps;
}

std::vector<double> parse_real_list(const std::vector<std::string>& args) {
  std::vector<double> out;
  for (const std::string& token : split_commas(args)) {
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
      throw ParseError("bad number '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

// "4..12", "7", or comma lists thereof.
std::vector<std::size_t> parse_count_ranges(
    const std::vector<std::string>& args) {
  std::vector<std::size_t> counts;
  for (const std::string& token : split_commas(args)) {
    const auto dots = token.find("..");
    long lo = 0;
    long hi = 0;
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stol(token);
      } else {
        lo = std::stol(token.substr(0, dots));
        hi = std::stol(token.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw ParseError("bad count range '" + token + "'");
    }
    if (lo < 0 || hi < lo) throw ParseError("bad count range '" + token + "'");
    for (long c = lo; c <= hi; ++c) counts.push_back(static_cast<std::size_t>(c));
  }
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  return counts;
}

std::vector<Complex> parse_complex_list(const std::vector<std::string>& args) {
  std::vector<Complex> out;
  for (const std::string& token : split_commas(args)) {
    out.push_back(parse_complex(token));
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + out_path + "'");
  out << text;
}

struct GenerateArgs {
  std::string family;
  double sigma = 0.5;
  double q = 2.0;
  double gamma = 1.0;
  std::size_t count = 0;
  std::vector<std::string> points;
  std::vector<std::string> rotation;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  GeneratorSpec spec;
  spec.family = family_from_string(args.family);
  spec.sigma = args.sigma;
  spec.q = args.q;
  spec.gamma = args.gamma;
  spec.count = args.count;
  spec.points = parse_complex_list(args.points);
  spec.rotation = parse_complex_list(args.rotation);
  if (spec.family == GeneratorSpec::Family::Explicit && spec.count == 0) {
    spec.count = spec.points.size();
  }
  emit(write_points_json(generate(spec)), args.out);
  return 0;
}

struct AnalyzeArgs {
  std::string file;
  std::vector<std::string> ps{"2", "inf"};
  std::size_t trials = 16;
  std::uint64_t seed = 0;
  std::string out;
};

int run_analyze(const AnalyzeArgs& args) {
  const PointSequence seq = load_sequence_file(args.file).realize();
  const std::vector<double> ps = parse_p_list(args.ps);

  const SeparationProfile profile = separation_profile(seq);
  const std::vector<double> gap = profile.one_minus_delta();
  const std::vector<double> gap_sq = profile.one_minus_delta_sq();
  const SpectralSummary summary = spectral_summary(seq, ps);
  const InterpolationEstimates est =
      interpolation_estimates(seq, args.trials, args.seed);

  std::string csv = "quantity,index,p,value\n";
  auto scalar = [&csv](const std::string& name, double value) {
    csv += name + ",,," + fmt17(value) + "\n";
  };
  auto indexed = [&csv](const std::string& name, std::size_t index,
                        double value) {
    csv += name + "," + std::to_string(index) + ",," + fmt17(value) + "\n";
  };
  auto per_p = [&csv](const std::string& name, double p, double value) {
    csv += name + ",," + p_to_string(p) + "," + fmt17(value) + "\n";
  };

  scalar("n", static_cast<double>(seq.size()));
  scalar("delta_min", profile.delta_min);
  scalar("min_rho", min_pairwise_rho(seq));
  for (std::size_t j = 0; j < seq.size(); ++j) {
    indexed("delta", j + 1, profile.delta[j]);
  }
  for (std::size_t j = 0; j < seq.size(); ++j) {
    indexed("log_delta", j + 1, profile.log_delta[j]);
  }
  for (std::size_t j = 0; j < seq.size(); ++j) {
    indexed("one_minus_delta_sq", j + 1, gap_sq[j]);
  }
  for (std::size_t k = 0; k < summary.eigs_g.size(); ++k) {
    indexed("eig_G", k + 1, summary.eigs_g[k]);
  }
  for (std::size_t k = 0; k < summary.sv_g_minus_i.size(); ++k) {
    indexed("sv_G_minus_I", k + 1, summary.sv_g_minus_i[k]);
  }
  scalar("op_norm_G_minus_I", summary.op_norm_g_minus_i);
  scalar("inv_norm_G", summary.inv_norm_g);
  scalar("cond_G", summary.cond_g);
  for (double p : ps) {
    per_p("schatten", p, summary.schatten.at(p));
  }
  for (double p : ps) {
    double lp = 0.0;
    if (p == kPInf) {
      for (double g : gap) lp = std::max(lp, std::sqrt(g));
    } else {
      for (double g : gap) lp += std::pow(g, p / 2.0);
      lp = std::pow(lp, 1.0 / p);
    }
    per_p("lp_sqrt_gap", p, lp);
    if (lp > 0.0) per_p("ratio", p, summary.schatten.at(p) / lp);
  }
  scalar("m_lower_search", est.m_lower_search);
  scalar("m_lower_gram", est.m_lower_gram);
  scalar("m_upper_ss", est.m_upper_ss);
  scalar("m_upper_earl", est.m_upper_earl);

  emit(csv, args.out);
  return 0;
}

struct VerifyArgs {
  std::string file;
  std::vector<std::string> ps{"2", "3", "4", "inf"};
  double tol = 1e-9;
  double tol_ineq = 1e-10;
  double cond_cap = 1e12;
  std::uint64_t seed = 0;
  std::string suite;
  std::string out;
};

int run_verify(const VerifyArgs& args) {
  const PointSequence seq = load_sequence_file(args.file).realize();
  VerifierConfig cfg;
  cfg.tol_identity = args.tol;
  cfg.tol_ineq = args.tol_ineq;
  cfg.cond_cap = args.cond_cap;
  cfg.ps = parse_p_list(args.ps);

  VerificationReport report = run_suite(seq, cfg);
  if (!args.suite.empty()) {
    std::vector<CheckResult> kept;
    for (CheckResult& check : report.checks) {
      if (check.name.find(args.suite) != std::string::npos) {
        kept.push_back(std::move(check));
      }
    }
    report.checks = std::move(kept);
  }

  std::cout << report_to_text(report);
  if (!args.out.empty()) emit(report_to_json(report), args.out);
  return report.passed() ? 0 : 1;
}

struct SweepArgs {
  std::string family;
  std::vector<std::string> sigmas{"0.5"};
  std::vector<std::string> qs{"2"};
  std::vector<std::string> gammas{"1"};
  std::vector<std::string> counts;
  std::vector<std::string> ps{"2"};
  std::string out;
};

int run_sweep(const SweepArgs& args) {
  const GeneratorSpec::Family family = family_from_string(args.family);
  if (family == GeneratorSpec::Family::Explicit) {
    throw ParseError("sweep requires a parametric family");
  }
  std::vector<double> sigmas = parse_real_list(args.sigmas);
  std::vector<double> shapes =
      family == GeneratorSpec::Family::Supergeometric
          ? parse_real_list(args.qs)
          : parse_real_list(args.gammas);
  if (family == GeneratorSpec::Family::Geometric) shapes = {0.0};
  const std::vector<std::size_t> counts = parse_count_ranges(args.counts);
  std::vector<double> ps = parse_p_list(args.ps);
  if (counts.empty()) throw ParseError("sweep requires --counts");
  std::sort(sigmas.begin(), sigmas.end());
  std::sort(shapes.begin(), shapes.end());
  std::sort(ps.begin(), ps.end());

  std::string csv =
      "family,sigma,q,gamma,count,n,delta_min,sum_one_minus_delta_sq,p,"
      "schatten_norm,lp_sqrt_gap,ratio,tail_op_head,tail_inv_head,"
      "tail_earl_head\n";

  for (double sigma : sigmas) {
    for (double shape : shapes) {
      for (std::size_t count : counts) {
        GeneratorSpec spec;
        spec.family = family;
        spec.sigma = sigma;
        spec.count = count;
        std::string q_col;
        std::string gamma_col;
        if (family == GeneratorSpec::Family::Supergeometric) {
          spec.q = shape;
          q_col = fmt17(shape);
        } else if (family == GeneratorSpec::Family::RatioProfile) {
          spec.gamma = shape;
          gamma_col = fmt17(shape);
        }

        PointSequence seq;
        try {
          seq = generate(spec);
        } catch (const Error& e) {
          throw ParseError("instance family=" + args.family +
                           " sigma=" + fmt17(sigma) +
                           " count=" + std::to_string(count) + ": " + e.what());
        }
        const PointSequence sorted = sort_by_delta(seq);
        const SeparationProfile profile = separation_profile(seq);
        const std::vector<double> gap = profile.one_minus_delta();
        const std::vector<double> gap_sq = profile.one_minus_delta_sq();
        const SpectralSummary summary = spectral_summary(seq, ps);

        double gap_sq_sum = 0.0;
        for (double g : gap_sq) gap_sq_sum += g;

        std::string tail_cols = ",,";
        if (seq.size() >= 3) {
          const TailRow head = tail_chain(sorted).front();
          tail_cols = fmt17(head.tail_op_norm) + "," +
                      fmt17(head.tail_inv_bound) + "," +
                      fmt17(head.earl_tail_bound);
        } else {
          tail_cols = ",,";
        }

        for (double p : ps) {
          double lp = 0.0;
          if (p == kPInf) {
            for (double g : gap) lp = std::max(lp, std::sqrt(g));
          } else {
            for (double g : gap) lp += std::pow(g, p / 2.0);
            lp = std::pow(lp, 1.0 / p);
          }
          const double schatten = summary.schatten.at(p);
          csv += args.family + "," + fmt17(sigma) + "," + q_col + "," +
                 gamma_col + "," + std::to_string(count) + "," +
                 std::to_string(seq.size()) + "," + fmt17(profile.delta_min) +
                 "," + fmt17(gap_sq_sum) + "," + p_to_string(p) + "," +
                 fmt17(schatten) + "," + fmt17(lp) + "," +
                 (lp > 0.0 ? fmt17(schatten / lp) : "") + "," + tail_cols +
                 "\n";
        }
      }
    }
  }
  emit(csv, args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gram matrices of normalized reproducing kernels for finite point "
      "sequences in the unit disk"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand("generate", "write a sequence file");
  gen->add_option("--family", gen_args.family,
                  "geometric|supergeometric|ratio-profile|explicit")
      ->required();
  gen->add_option("--sigma", gen_args.sigma, "base radius parameter in (0,1)");
  gen->add_option("--q", gen_args.q, "supergeometric exponent ratio, > 1");
  gen->add_option("--gamma", gen_args.gamma, "ratio-profile decay, > 0");
  gen->add_option("--count", gen_args.count, "number of points");
  gen->add_option("--points", gen_args.points,
                  "explicit points, e.g. 0.3 or 0.1+0.2i");
  gen->add_option("--rotation", gen_args.rotation,
                  "unit-modulus phases, one per point");
  gen->add_option("--out", gen_args.out, "output path (default stdout)");

  AnalyzeArgs an_args;
  CLI::App* an = app.add_subcommand("analyze", "CSV report for one sequence");
  an->add_option("file", an_args.file, "sequence file")->required();
  an->add_option("--p", an_args.ps, "Schatten exponents (reals and 'inf')");
  an->add_option("--trials", an_args.trials,
                 "random unimodular targets for the lower search");
  an->add_option("--seed", an_args.seed, "RNG seed");
  an->add_option("--out", an_args.out, "output path (default stdout)");

  VerifyArgs ver_args;
  CLI::App* ver = app.add_subcommand("verify", "run the check suite");
  ver->add_option("file", ver_args.file, "sequence file")->required();
  ver->add_option("--p", ver_args.ps, "Schatten exponents (reals and 'inf')");
  ver->add_option("--tol", ver_args.tol, "identity tolerance");
  ver->add_option("--tol-ineq", ver_args.tol_ineq, "inequality slack");
  ver->add_option("--cond-cap", ver_args.cond_cap, "conditioning cap");
  ver->add_option("--seed", ver_args.seed, "RNG seed");
  ver->add_option("--suite", ver_args.suite, "substring filter on check names");
  ver->add_option("--out", ver_args.out, "JSON report path");

  SweepArgs sw_args;
  CLI::App* sw = app.add_subcommand("sweep", "CSV dataset over parameters");
  sw->add_option("--family", sw_args.family,
                 "geometric|supergeometric|ratio-profile")
      ->required();
  sw->add_option("--sigma", sw_args.sigmas, "sigma values (comma lists ok)");
  sw->add_option("--q", sw_args.qs, "q values (supergeometric)");
  sw->add_option("--gamma", sw_args.gammas, "gamma values (ratio-profile)");
  sw->add_option("--counts", sw_args.counts, "counts, e.g. 4..12 or 4,8,12")
      ->required();
  sw->add_option("--p", sw_args.ps, "Schatten exponents (reals and 'inf')");
  sw->add_option("--out", sw_args.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_generate(gen_args);
    if (an->parsed()) return run_analyze(an_args);
    if (ver->parsed()) return run_verify(ver_args);
    if (sw->parsed()) return run_sweep(sw_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
