#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzcurve/arrangements.hpp"

namespace syzcurve {

// Expected analysis data for a catalog entry; unset fields are not checked.
struct Golden {
  std::optional<CurveClass> cls;
  std::optional<int> m;
  std::vector<int> exponents;
  std::optional<std::vector<int>> relations;
  std::optional<int> mdr;
  std::optional<long> tau;
  std::optional<Subtype> subtype;
  std::vector<int> degree_counts;
  std::map<std::string, int> singularities;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::function<Arrangement()> build;
  Golden expected;
  bool extended = false;         // slow to analyze
  bool quasi_homogeneous = false;  // all singular points quasi-homogeneous
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

// xyz(x^n-y^n)(y^n-z^n)(x^n-z^n) over Q(zeta_n), n in 2..6.
Arrangement full_monomial(int n);
std::pair<Arrangement, Arrangement> triangular_pair();

Arrangement orchard10(const FieldElement& s, const FieldElement& t);
Arrangement orchard12(const FieldElement& s, const FieldElement& t);

// Lines Z/n, triples {a,b,c} with a+b+c = 0 mod n.
struct CyclicModel {
  int n = 0;
  std::vector<std::array<int, 3>> triples;
  std::vector<std::pair<int, int>> doubles;

  LeviGraph levi() const;
};

CyclicModel cyclic_model(int n);
long orchard_triple_count(int n);

}  // namespace syzcurve
