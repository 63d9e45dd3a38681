#pragma once

#include <array>
#include <string>

#include "syzcurve/polyring.hpp"

namespace syzcurve {

using ProjPoint = std::array<FieldElement, 3>;

struct LocalInvariants {
  long mu = 0;
  long tau = 0;
  int multiplicity = 0;
  int branches = 0;  // 0 when unknown
  bool quasi_homogeneous = false;
};

struct SingTypeLabel {
  enum class Kind { A, D4, X9, Ordinary, Other };
  Kind kind = Kind::Other;
  int parameter = 0;  // k for A_k, m for OrdinaryM
  std::string note;

  std::string name() const;
};

long local_milnor(const BivariatePoly& g);
long local_tjurina(const BivariatePoly& g);

// Moves p to (0:0:1) and works in the affine chart z = 1.
LocalInvariants local_invariants_at(const HomogPoly& f, const ProjPoint& p, int branches = 0);

SingTypeLabel classify_local(const LocalInvariants& inv);

// dim K[u,v] / (I + m^n) for the ideal generated by `gens`.
long truncated_colength(const std::vector<BivariatePoly>& gens, int n);

}  // namespace syzcurve
