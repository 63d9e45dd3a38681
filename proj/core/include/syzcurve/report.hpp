#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzcurve/arrangements.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/fileformat.hpp"

namespace syzcurve {

struct PointRecord {
  std::string point;
  int count = 1;
  std::vector<int> incident;  // 1-based component numbers
  std::string label;
  long mu = 0;
  long tau = 0;
  int multiplicity = 0;
  int branches = 0;
  bool quasi_homogeneous = false;

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

struct AnalysisReport {
  std::string input;
  std::string field;
  int degree = 0;
  int mdr = 0;
  long tau = 0;
  std::vector<int> exponents;
  std::vector<int> relation_degrees;
  std::string cls;
  int m = 0;
  int type_k = 0;
  std::string subtype;
  std::string resolution;
  std::optional<WeakCombinatorics> weak;
  std::string points_field;
  std::vector<PointRecord> points;
  std::optional<double> timing_ms;
  std::vector<std::string> warnings;

  std::string to_json(int indent = 2) const;
  static AnalysisReport from_json(const std::string& text);
  std::string to_text() const;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  bool aggregate = false;
  bool timing = true;
  std::string input_name;
};

AnalysisReport analyze(const InputFile& in, const AnalyzeOptions& opts = {});

enum class ZieglerVariant { LatticeMdr, LatticeAr, WeakMdr, WeakAr };

ZieglerVariant parse_variant(const std::string& s);
std::string variant_name(ZieglerVariant v);

struct ZieglerReport {
  std::string variant;
  bool is_pair = false;
  bool same_combinatorics = false;
  std::string reason;
  AnalysisReport a, b;

  std::string to_json(int indent = 2) const;
  std::string to_text() const;
};

ZieglerReport ziegler(const InputFile& a, const InputFile& b, ZieglerVariant v, const AnalyzeOptions& opts = {});

// 2 parse, 3 field tower, 4 non-reduced, 5 catalog validation, 1 otherwise.
int exit_code(ErrorCode code);

}  // namespace syzcurve
