#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syzcurve/localsing.hpp"
#include "syzcurve/syzygy.hpp"
#include "syzcurve/upoly.hpp"

namespace syzcurve {

enum class ComponentKind { Line, Conic, OtherSmooth };

std::string component_kind_name(ComponentKind k);

struct Component {
  ComponentKind kind;
  HomogPoly poly;
};

// Distinct smooth components over one field.
class Arrangement {
 public:
  Arrangement() = default;
  // Kinds default from the degree. Throws InvalidComponent, MixedFields,
  // DuplicateComponents.
  explicit Arrangement(const std::vector<HomogPoly>& polys, const std::vector<ComponentKind>& kinds = {});

  const NumberField& field() const { return field_; }
  const std::vector<Component>& components() const { return comps_; }
  std::size_t size() const { return comps_.size(); }
  int degree() const;
  HomogPoly product() const;
  bool is_line_arrangement() const;
  // Same components with coefficients moved into ext (they must be rational).
  Arrangement over(const NumberField& ext) const;

 private:
  NumberField field_;
  std::vector<Component> comps_;
};

struct SingularPoint {
  ProjPoint point;           // unset for conjugate pairs
  bool conjugate_pair = false;
  std::string pair_description;
  std::vector<int> incident;                   // sorted component indices
  std::map<std::pair<int, int>, int> contacts;  // pairwise intersection multiplicities
  LocalInvariants local;
  SingTypeLabel label;

  int count() const { return conjugate_pair ? 2 : 1; }
  std::string point_string() const;
};

struct PointOptions {
  bool aggregate = false;   // allow conjugate-pair records over extended fields
  bool adjoin_sqrt = true;  // adjoin one square root when the field is Q
};

struct SingularLocus {
  NumberField field;  // field the points live in
  std::vector<SingularPoint> points;
  std::vector<std::string> notes;

  std::size_t point_count() const;
};

SingularLocus singular_points(const Arrangement& a, const PointOptions& opts = {});

struct WeakCombinatorics {
  std::vector<int> degree_counts;        // entry i-1 counts components of degree i
  std::map<std::string, int> sing_counts;

  int count(const std::string& key) const;
  std::string to_string() const;
  friend bool operator==(const WeakCombinatorics&, const WeakCombinatorics&) = default;
};

// Key used in WeakCombinatorics::sing_counts.
std::string singularity_key(const SingularPoint& p);

WeakCombinatorics weak_combinatorics(const SingularLocus& locus, const Arrangement& a);
WeakCombinatorics weak_combinatorics(const Arrangement& a, const PointOptions& opts = {});

// Bipartite incidence graph; point vertices listed by their incident components.
struct LeviGraph {
  int components = 0;
  std::vector<std::vector<int>> points;

  std::size_t edge_count() const;
};

LeviGraph levi_graph(const SingularLocus& locus, const Arrangement& a);
LeviGraph levi_graph(const Arrangement& a, const PointOptions& opts = {});

bool levi_isomorphic(const LeviGraph& g, const LeviGraph& h);
bool lattice_isomorphic(const Arrangement& a, const Arrangement& b, const PointOptions& opts = {});

enum class PairVariant { Mdr, ArModule };

struct PairVerdict {
  bool is_pair = false;
  std::string reason;
};

// Shared final step: combinatorics already compared, AR data supplied.
PairVerdict pair_verdict(bool same_combinatorics, const std::string& combinatorics, const CurveAnalysis& a,
                         const CurveAnalysis& b, PairVariant v);

PairVerdict ziegler_pair(const Arrangement& a, const Arrangement& b, PairVariant v, const PointOptions& opts = {});
PairVerdict weak_ziegler_pair(const Arrangement& a, const Arrangement& b, PairVariant v, const PointOptions& opts = {});

}  // namespace syzcurve
