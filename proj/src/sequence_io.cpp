#include "gramlab/sequence_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gramlab/errors.hpp"

namespace gramlab {

namespace {

using nlohmann::json;

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

double get_number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ParseError(where + ": missing numeric field '" + key + "'");
  }
  return j.at(key).get<double>();
}

std::vector<Complex> parse_point_array(const json& arr,
                                       const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Complex> pts;
  pts.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string label = where + "[" + std::to_string(k + 1) + "]";
    const json& item = arr[k];
    if (!item.is_object()) throw ParseError(label + ": expected an object");
    const double re = get_number(item, "re", label);
    const double im =
        item.contains("im") ? get_number(item, "im", label) : 0.0;
    pts.emplace_back(re, im);
  }
  return pts;
}

}  // namespace

std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string p_to_string(double p) { return p == kPInf ? "inf" : fmt17(p); }

double parse_p(const std::string& token) {
  if (token == "inf" || token == "Inf" || token == "INF") return kPInf;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || std::isnan(value)) {
    throw ParseError("bad p value '" + token + "'");
  }
  return value;
}

Complex parse_complex(const std::string& token) {
  const char* s = token.c_str();
  char* end = nullptr;
  const double first = std::strtod(s, &end);
  if (end == s) throw ParseError("bad complex value '" + token + "'");
  if (*end == '\0') return Complex(first, 0.0);
  if ((*end == 'i' || *end == 'j') && end[1] == '\0') {
    return Complex(0.0, first);
  }
  const char* rest = end;
  const double second = std::strtod(rest, &end);
  if (end == rest || !(*end == 'i' || *end == 'j') || end[1] != '\0') {
    throw ParseError("bad complex value '" + token + "'");
  }
  return Complex(first, second);
}

PointSequence SequenceFile::realize() const {
  if (points.has_value()) return PointSequence(*points);
  if (generator.has_value()) return generate(*generator);
  throw ParseError("sequence file holds neither points nor a generator");
}

SequenceFile parse_sequence_file(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be an object");

  const bool has_points = root.contains("points");
  const bool has_generator = root.contains("generator");
  if (has_points == has_generator) {
    throw ParseError("exactly one of 'points' or 'generator' is required");
  }

  SequenceFile file;
  if (has_points) {
    file.points = parse_point_array(root.at("points"), "points");
    return file;
  }

  const json& gen = root.at("generator");
  if (!gen.is_object()) throw ParseError("'generator' must be an object");
  if (!gen.contains("family") || !gen.at("family").is_string()) {
    throw ParseError("generator: missing string field 'family'");
  }
  GeneratorSpec spec;
  try {
    spec.family = family_from_string(gen.at("family").get<std::string>());
  } catch (const InvalidSpec& e) {
    throw ParseError(std::string("generator: ") + e.what());
  }
  if (gen.contains("sigma")) spec.sigma = get_number(gen, "sigma", "generator");
  if (gen.contains("q")) spec.q = get_number(gen, "q", "generator");
  if (gen.contains("gamma")) spec.gamma = get_number(gen, "gamma", "generator");
  if (gen.contains("count")) {
    const double count = get_number(gen, "count", "generator");
    if (count < 0 || count != std::floor(count)) {
      throw ParseError("generator: count must be a nonnegative integer");
    }
    spec.count = static_cast<std::size_t>(count);
  }
  if (gen.contains("points")) {
    spec.points = parse_point_array(gen.at("points"), "generator.points");
    if (spec.count == 0) spec.count = spec.points.size();
  }
  if (gen.contains("rotation")) {
    spec.rotation = parse_point_array(gen.at("rotation"), "generator.rotation");
  }
  return file.generator = spec, file;
}

SequenceFile load_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sequence_file(buffer.str());
}

std::string write_points_json(const PointSequence& seq) {
  std::string out = "{\n  \"points\": [";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    out += k == 0 ? "\n" : ",\n";
    out += "    {\"re\": " + fmt17(seq[k].real()) +
           ", \"im\": " + fmt17(seq[k].imag()) + "}";
  }
  out += seq.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(report.n) + ",\n";
  out += "  \"delta_min\": " + fmt17(report.delta_min) + ",\n";
  out += "  \"cond_g\": " + fmt17(report.cond_g) + ",\n";
  out += std::string("  \"passed\": ") + (report.passed() ? "true" : "false") +
         ",\n";
  out += "  \"warnings\": [";
  for (std::size_t k = 0; k < report.warnings.size(); ++k) {
    out += k == 0 ? "" : ", ";
    out += "\"" + json_escape(report.warnings[k]) + "\"";
  }
  out += "],\n  \"checks\": [";
  for (std::size_t k = 0; k < report.checks.size(); ++k) {
    const CheckResult& check = report.checks[k];
    out += k == 0 ? "\n" : ",\n";
    out += "    {\"name\": \"" + json_escape(check.name) + "\", \"status\": \"" +
           to_string(check.status) + "\", \"value\": " + fmt17(check.value) +
           ", \"diagnostic\": " + (check.diagnostic ? "true" : "false") +
           ", \"note\": \"" + json_escape(check.note) + "\"}";
  }
  out += report.checks.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string report_to_text(const VerificationReport& report) {
  std::string out = "sequence: n=" + std::to_string(report.n) +
                    " delta_min=" + fmt17(report.delta_min) +
                    " cond_G=" + fmt17(report.cond_g) + "\n";
  for (const std::string& warning : report.warnings) {
    out += "warning: " + warning + "\n";
  }
  std::size_t passes = 0;
  std::size_t fails = 0;
  std::size_t skips = 0;
  for (const CheckResult& check : report.checks) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-7s %-28s %-24s %s\n",
                  to_string(check.status).c_str(), check.name.c_str(),
                  fmt17(check.value).c_str(), check.note.c_str());
    out += line;
    switch (check.status) {
      case CheckStatus::Pass: ++passes; break;
      case CheckStatus::Fail: ++fails; break;
      case CheckStatus::Skipped: ++skips; break;
    }
  }
  out += "overall: " + std::string(report.passed() ? "PASS" : "FAIL") + " (" +
         std::to_string(passes) + " pass, " + std::to_string(fails) +
         " fail, " + std::to_string(skips) + " skipped)\n";
  return out;
}

}  // namespace gramlab
