#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzcurve/arrangements.hpp"

namespace syzcurve {

// Line-oriented input:
//   # comment
//   field <g> : <minpoly in g>        (optional, default QQ)
//   component <line|conic|curve> : <poly>
//   curve : <poly>                    (raw mode, exclusive with components)
struct InputFile {
  NumberField field = NumberField::rationals();
  std::vector<HomogPoly> polys;
  std::vector<ComponentKind> kinds;
  bool raw_curve = false;

  HomogPoly curve() const;
  Arrangement arrangement() const;  // throws InvalidArgument in raw mode
};

// ParseError carries line and column.
InputFile parse_input(std::string_view text);
InputFile read_input(const std::string& path);

std::string write_input(const Arrangement& a, const std::string& comment = "");

}  // namespace syzcurve
