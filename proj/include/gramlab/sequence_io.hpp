#pragma once

// Sequence files (JSON with explicit re/im fields), report serialization,
// and the number formatting shared by every machine-readable output.

#include <optional>
#include <string>

#include "gramlab/disk_geometry.hpp"
#include "gramlab/verifier.hpp"

namespace gramlab {

// 17 significant digits: enough to round-trip any double exactly.
std::string fmt17(double x);

// "inf" or a plain decimal rendering; used for p values in names and CSV.
std::string p_to_string(double p);
double parse_p(const std::string& token);

// "0.3", "-0.25", "0.3+0.2i", "1e-3-2e-4i"; also accepts 'j'.
Complex parse_complex(const std::string& token);

// Exactly one of the two variants is present.
struct SequenceFile {
  std::optional<std::vector<Complex>> points;
  std::optional<GeneratorSpec> generator;

  PointSequence realize() const;
};

SequenceFile parse_sequence_file(const std::string& text);
SequenceFile load_sequence_file(const std::string& path);

// Canonical points-variant file, LF line endings, 17 significant digits.
std::string write_points_json(const PointSequence& seq);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace gramlab
