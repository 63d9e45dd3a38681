#include "syzcurve/report.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

namespace syzcurve {

using json = nlohmann::ordered_json;

namespace {

struct Full {
  AnalysisReport report;
  CurveAnalysis analysis;
  std::optional<Arrangement> arrangement;
  std::optional<SingularLocus> locus;
};

json weak_json(const WeakCombinatorics& w) {
  json s = json::object();
  for (const auto& [k, v] : w.sing_counts) s[k] = v;
  return {{"degrees", w.degree_counts}, {"singularities", s}};
}

json report_json(const AnalysisReport& r) {
  json j;
  j["input"] = r.input;
  j["field"] = r.field;
  j["degree"] = r.degree;
  j["mdr"] = r.mdr;
  j["tau"] = r.tau;
  j["exponents"] = r.exponents;
  j["relation_degrees"] = r.relation_degrees;
  j["class"] = r.cls;
  j["m"] = r.m;
  j["type_k"] = r.type_k;
  j["subtype"] = r.subtype;
  j["resolution"] = r.resolution;
  if (r.weak) {
    j["weak_combinatorics"] = weak_json(*r.weak);
    j["points_field"] = r.points_field;
    json pts = json::array();
    for (const auto& p : r.points)
      pts.push_back({{"point", p.point},
                     {"count", p.count},
                     {"components", p.incident},
                     {"label", p.label},
                     {"mu", p.mu},
                     {"tau", p.tau},
                     {"multiplicity", p.multiplicity},
                     {"branches", p.branches},
                     {"quasi_homogeneous", p.quasi_homogeneous}});
    j["points"] = pts;
  }
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  j["warnings"] = r.warnings;
  return j;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

Full analyze_full(const InputFile& in, const AnalyzeOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Full out;
  AnalysisReport& r = out.report;
  r.input = opts.input_name;
  r.field = in.field.describe();
  HomogPoly f = in.curve();
  if (!in.raw_curve) {
    out.arrangement = in.arrangement();
    f = out.arrangement->product();
  }
  out.analysis = classify(f);
  const CurveAnalysis& c = out.analysis;
  r.degree = c.d;
  r.mdr = c.mdr;
  r.tau = c.tau;
  r.exponents = c.resolution.generator_degrees;
  r.relation_degrees = c.resolution.relation_degrees;
  r.cls = c.class_name();
  r.m = c.m;
  r.type_k = c.type_k;
  r.subtype = subtype_name(c.subtype);
  r.resolution = c.resolution.display();
  r.warnings = c.warnings;
  if (out.arrangement) {
    PointOptions po;
    po.aggregate = opts.aggregate;
    out.locus = singular_points(*out.arrangement, po);
    r.weak = weak_combinatorics(*out.locus, *out.arrangement);
    r.points_field = out.locus->field.describe();
    bool other = false;
    for (const auto& p : out.locus->points) {
      PointRecord pr;
      pr.point = p.point_string();
      pr.count = p.count();
      for (int i : p.incident) pr.incident.push_back(i + 1);
      pr.label = singularity_key(p);
      pr.mu = p.local.mu;
      pr.tau = p.local.tau;
      pr.multiplicity = p.local.multiplicity;
      pr.branches = p.local.branches;
      pr.quasi_homogeneous = p.local.quasi_homogeneous;
      r.points.push_back(pr);
      if (p.label.kind == SingTypeLabel::Kind::Other) other = true;
    }
    for (const auto& n : out.locus->notes) r.warnings.push_back(n);
    if (other) r.warnings.push_back("some singularity types identified by invariants (mu, tau, mult, branches) only");
  }
  if (opts.timing)
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

std::string AnalysisReport::to_json(int indent) const { return report_json(*this).dump(indent); }

AnalysisReport AnalysisReport::from_json(const std::string& text) {
  json j = json::parse(text);
  AnalysisReport r;
  r.input = j.at("input").get<std::string>();
  r.field = j.at("field").get<std::string>();
  r.degree = j.at("degree").get<int>();
  r.mdr = j.at("mdr").get<int>();
  r.tau = j.at("tau").get<long>();
  r.exponents = j.at("exponents").get<std::vector<int>>();
  r.relation_degrees = j.at("relation_degrees").get<std::vector<int>>();
  r.cls = j.at("class").get<std::string>();
  r.m = j.at("m").get<int>();
  r.type_k = j.at("type_k").get<int>();
  r.subtype = j.at("subtype").get<std::string>();
  r.resolution = j.at("resolution").get<std::string>();
  if (j.contains("weak_combinatorics")) {
    WeakCombinatorics w;
    const json& wj = j.at("weak_combinatorics");
    w.degree_counts = wj.at("degrees").get<std::vector<int>>();
    for (const auto& [k, v] : wj.at("singularities").items()) w.sing_counts[k] = v.get<int>();
    r.weak = w;
    r.points_field = j.at("points_field").get<std::string>();
    for (const auto& p : j.at("points")) {
      PointRecord pr;
      pr.point = p.at("point").get<std::string>();
      pr.count = p.at("count").get<int>();
      pr.incident = p.at("components").get<std::vector<int>>();
      pr.label = p.at("label").get<std::string>();
      pr.mu = p.at("mu").get<long>();
      pr.tau = p.at("tau").get<long>();
      pr.multiplicity = p.at("multiplicity").get<int>();
      pr.branches = p.at("branches").get<int>();
      pr.quasi_homogeneous = p.at("quasi_homogeneous").get<bool>();
      r.points.push_back(pr);
    }
  }
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  if (!input.empty()) os << "input: " << input << "\n";
  os << "field: " << field << "\n";
  os << "degree: " << degree << "\n";
  os << "class: " << cls << "\n";
  os << "exponents: (" << join(exponents) << ")\n";
  os << "relation degrees: (" << join(relation_degrees) << ")\n";
  os << "mdr: " << mdr << "\n";
  os << "tau: " << tau << "\n";
  os << "m: " << m << "\n";
  os << "type k: " << type_k << "\n";
  os << "subtype: " << subtype << "\n";
  os << "resolution: " << resolution << "\n";
  if (weak) {
    os << "weak combinatorics: " << weak->to_string() << "\n";
    os << "points over: " << points_field << "\n";
    for (const auto& p : points) {
      os << "  " << p.point << (p.count > 1 ? " [x" + std::to_string(p.count) + "]" : "") << " components {"
         << join(p.incident) << "} " << p.label << " mu=" << p.mu << " tau=" << p.tau << " mult=" << p.multiplicity
         << " branches=" << p.branches << (p.quasi_homogeneous ? " qh" : " non-qh") << "\n";
    }
  }
  if (timing_ms) os << "timing: " << *timing_ms << " ms\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

AnalysisReport analyze(const InputFile& in, const AnalyzeOptions& opts) { return analyze_full(in, opts).report; }

ZieglerVariant parse_variant(const std::string& s) {
  if (s == "lattice-mdr") return ZieglerVariant::LatticeMdr;
  if (s == "lattice-ar") return ZieglerVariant::LatticeAr;
  if (s == "weak-mdr") return ZieglerVariant::WeakMdr;
  if (s == "weak-ar") return ZieglerVariant::WeakAr;
  throw Error(ErrorCode::InvalidArgument, "unknown variant '" + s + "'");
}

std::string variant_name(ZieglerVariant v) {
  switch (v) {
    case ZieglerVariant::LatticeMdr: return "lattice-mdr";
    case ZieglerVariant::LatticeAr: return "lattice-ar";
    case ZieglerVariant::WeakMdr: return "weak-mdr";
    case ZieglerVariant::WeakAr: return "weak-ar";
  }
  return "?";
}

ZieglerReport ziegler(const InputFile& a, const InputFile& b, ZieglerVariant v, const AnalyzeOptions& opts) {
  if (a.raw_curve || b.raw_curve)
    throw Error(ErrorCode::InvalidArgument, "pair comparison needs declared components");
  const bool lattice = v == ZieglerVariant::LatticeMdr || v == ZieglerVariant::LatticeAr;
  if (lattice && (!a.arrangement().is_line_arrangement() || !b.arrangement().is_line_arrangement()))
    throw Error(ErrorCode::NotLineArrangement, "Ziegler pairs are defined for line arrangements");
  AnalyzeOptions oa = opts, ob = opts;
  oa.input_name = opts.input_name.empty() ? "A" : opts.input_name;
  ob.input_name = "B";
  Full fa = analyze_full(a, oa), fb = analyze_full(b, ob);
  ZieglerReport z;
  z.variant = variant_name(v);
  bool same;
  std::string what;
  if (lattice) {
    same = levi_isomorphic(levi_graph(*fa.locus, *fa.arrangement), levi_graph(*fb.locus, *fb.arrangement));
    what = "intersection lattice";
  } else {
    same = *fa.report.weak == *fb.report.weak;
    what = "weak-combinatorics";
  }
  PairVariant pv = v == ZieglerVariant::LatticeMdr || v == ZieglerVariant::WeakMdr ? PairVariant::Mdr : PairVariant::ArModule;
  PairVerdict verdict = pair_verdict(same, what, fa.analysis, fb.analysis, pv);
  z.is_pair = verdict.is_pair;
  z.same_combinatorics = same;
  z.reason = verdict.reason;
  z.a = fa.report;
  z.b = fb.report;
  return z;
}

std::string ZieglerReport::to_json(int indent) const {
  json j;
  j["variant"] = variant;
  j["verdict"] = is_pair ? "IsPair" : "NotPair";
  j["same_combinatorics"] = same_combinatorics;
  j["reason"] = reason;
  j["a"] = report_json(a);
  j["b"] = report_json(b);
  return j.dump(indent);
}

std::string ZieglerReport::to_text() const {
  std::ostringstream os;
  os << "variant: " << variant << "\n";
  os << "verdict: " << (is_pair ? "IsPair" : "NotPair") << "\n";
  os << "reason: " << reason << "\n";
  for (const auto* r : {&a, &b}) {
    os << "[" << r->input << "] " << r->cls << " mdr=" << r->mdr << " tau=" << r->tau << "  " << r->resolution << "\n";
    if (r->weak) os << "    weak combinatorics: " << r->weak->to_string() << "\n";
  }
  return os.str();
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::UnknownSymbol:
    case ErrorCode::ReducibleMinpoly:
    case ErrorCode::ProvablyReducible:
      return 2;
    case ErrorCode::FieldTowerUnsupported:
      return 3;
    case ErrorCode::NotReduced:
    case ErrorCode::DuplicateComponents:
      return 4;
    case ErrorCode::ConstraintViolated:
    case ErrorCode::DegeneratePoint:
    case ErrorCode::DuplicateLines:
    case ErrorCode::UnknownName:
      return 5;
    default:
      return 1;
  }
}

}  // namespace syzcurve
