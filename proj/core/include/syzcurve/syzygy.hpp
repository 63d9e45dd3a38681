#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syzcurve/exactla.hpp"
#include "syzcurve/polyring.hpp"

namespace syzcurve {

struct SyzygyVector {
  int degree = 0;
  std::array<HomogPoly, 3> comps;

  // a*f_x + b*f_y + c*f_z
  HomogPoly pairing(const HomogPoly& f) const;
  bool is_syzygy_of(const HomogPoly& f) const { return pairing(f).is_zero(); }
};

// Degree data of the minimal resolution 0 -> (+) S(-e_j) -> (+) S(-d_i) -> AR(f) -> 0.
struct Resolution {
  std::vector<int> generator_degrees;
  std::vector<int> relation_degrees;

  int m() const { return static_cast<int>(generator_degrees.size()); }
  // dim of the graded piece of degree r predicted by the shifts.
  long hilbert(int r) const;
  // e.g. "0 -> S(-7)+S(-6) -> S(-6)+S(-5)^2+S(-4) -> AR(f)"
  std::string display() const;
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

enum class CurveClass { Smooth, Free, NearlyFree, MSyzygy };
enum class Subtype { None, TwoA, TwoB };

std::string subtype_name(Subtype s);

struct CurveAnalysis {
  int d = 0;
  int mdr = 0;
  long tau = 0;
  Resolution resolution;
  CurveClass cls = CurveClass::Smooth;
  int m = 2;
  int type_k = 0;
  Subtype subtype = Subtype::None;
  std::vector<std::string> warnings;

  const std::vector<int>& exponents() const { return resolution.generator_degrees; }
  std::string class_name() const;
};

struct FreenessVerdict {
  bool holds = false;
  std::vector<int> exponents;
};

struct SaitoResult {
  bool passes = false;
  FieldElement constant;
  HomogPoly determinant;
};

// Jacobian map S_r^3 -> S_{r+d-1}, (a,b,c) -> a f_x + b f_y + c f_z. Columns
// are the three copies of graded::basis(r), rows graded::basis(r+d-1).
Matrix jacobian_matrix(const HomogPoly& f, int r);

// Caches graded ranks and the generator search for one curve.
class SyzygyAnalyzer {
 public:
  explicit SyzygyAnalyzer(const HomogPoly& f);

  const HomogPoly& curve() const { return f_; }
  int degree() const { return d_; }

  std::size_t ar_dimension(int r);
  int mdr();
  const std::vector<SyzygyVector>& generators();
  const Resolution& resolution();
  // True if the search ended through Saito's criterion.
  bool certified_free();
  // tau from the Hilbert polynomial of the resolution.
  long tau();
  // tau as the stable value of dim (S/J_f)_k starting at k = 3d-5.
  long tau_stabilized();
  // Euler-characteristic check at `probes` consecutive degrees above all shifts.
  bool certificate(int probes = 3);
  CurveAnalysis classify();

 private:
  HomogPoly f_;         // over the integral model field
  IntegralModel model_;
  int d_;
  std::array<IntRow, 3> grad_;  // integral dense coordinates of the partials
  std::map<int, std::size_t> rank_cache_;
  bool searched_ = false;
  bool free_by_saito_ = false;
  std::vector<SyzygyVector> gens_;
  std::vector<std::pair<int, IntRow>> gen_rows_;
  Resolution res_;

  std::size_t jacobian_rank(int r);
  void search();
  SyzygyVector to_vector(int r, const IntRow& row) const;
  IntRow shift(const IntRow& g, int e, const Monomial& n) const;
};

std::size_t ar_dimension(const HomogPoly& f, int r);
int mdr(const HomogPoly& f);
std::vector<int> minimal_generator_degrees(const HomogPoly& f);
std::vector<int> syzygy_degrees(const HomogPoly& f);
long total_tjurina(const HomogPoly& f);
FreenessVerdict is_free(const HomogPoly& f);
FreenessVerdict is_nearly_free(const HomogPoly& f);
SaitoResult saito_check(const HomogPoly& f, const SyzygyVector& r1, const SyzygyVector& r2);
CurveAnalysis classify(const HomogPoly& f);

// Same criteria, reusing an analyzer.
FreenessVerdict is_free(SyzygyAnalyzer& a);
FreenessVerdict is_nearly_free(SyzygyAnalyzer& a);

}  // namespace syzcurve
