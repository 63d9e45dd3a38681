#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "syzcurve/upoly.hpp"

namespace syzcurve {

// Splitting of a univariate polynomial over its field into linear factors,
// irreducible quadratics, and leftover factors of degree >= 3. Roots are found
// numerically in every complex embedding, recognized as field elements, and
// accepted only after exact verification.
struct LowDegreeFactorization {
  std::vector<std::pair<FieldElement, int>> roots;
  std::vector<std::pair<UPoly, int>> quadratics;  // monic, no roots in the field
  std::vector<std::pair<UPoly, int>> others;
};

LowDegreeFactorization factor_low_degree(const UPoly& p);

// Distinct roots in the field, sorted.
std::vector<FieldElement> roots_in_field(const UPoly& p);

std::optional<FieldElement> sqrt_in_field(const FieldElement& a);

// Squarefree integer D with q = D * (rational square); q != 0.
Integer squarefree_kernel(const Rational& q);

}  // namespace syzcurve
