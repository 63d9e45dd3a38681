#include <gtest/gtest.h>

#include <json.hpp>

#include "syzcurve/catalog.hpp"
#include "syzcurve/fileformat.hpp"
#include "syzcurve/report.hpp"

using namespace syzcurve;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError(ErrorCode::SyntaxError, "", 0);
}

AnalyzeOptions no_timing() {
  AnalyzeOptions o;
  o.timing = false;
  return o;
}

}  // namespace

TEST(FileFormat, ParsesComponentsAndField) {
  InputFile in = parse_input(
      "# dual Hesse fragment\n"
      "field w : w^2+w+1\n"
      "component line : x - w*y\n"
      "component conic : x^2 - y*z   # trailing comment\n");
  EXPECT_EQ(in.field.degree(), 2);
  ASSERT_EQ(in.polys.size(), 2u);
  EXPECT_EQ(in.kinds[1], ComponentKind::Conic);
  EXPECT_FALSE(in.raw_curve);
  EXPECT_EQ(in.arrangement().degree(), 3);
}

TEST(FileFormat, RawCurve) {
  InputFile in = parse_input("curve : x*y*z\n");
  EXPECT_TRUE(in.raw_curve);
  EXPECT_EQ(in.curve().degree(), 3);
  EXPECT_THROW(in.arrangement(), Error);
  EXPECT_EQ(parse_failure("curve : x\ncomponent line : y\n").line(), 2u);
  EXPECT_EQ(parse_failure("component line : y\ncurve : x\n").line(), 2u);
}

TEST(FileFormat, ErrorPositions) {
  ParseError e = parse_failure("component line : x\ncomponent line : y+*z\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 20u);
  EXPECT_EQ(parse_failure("component line x\n").line(), 1u);
  EXPECT_EQ(parse_failure("\n\nbogus thing : x\n").line(), 3u);
  EXPECT_EQ(parse_failure("component ellipse : x^2\n").line(), 1u);
  EXPECT_EQ(parse_failure("component line : x\nfield r : r^2-2\n").line(), 2u);
  EXPECT_EQ(parse_failure("# nothing\n").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_failure("component line : x+y^2\n").code(), ErrorCode::NotHomogeneous);
  EXPECT_EQ(parse_failure("component line : x+q\n").code(), ErrorCode::UnknownSymbol);
}

TEST(FileFormat, WriteReadRoundTrip) {
  for (const auto& e : catalog()) {
    Arrangement a = e.build();
    InputFile in = parse_input(write_input(a, e.name));
    ASSERT_EQ(in.polys.size(), a.size()) << e.name;
    EXPECT_EQ(in.field, a.field()) << e.name;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(in.polys[i], a.components()[i].poly) << e.name;
      EXPECT_EQ(in.kinds[i], a.components()[i].kind) << e.name;
    }
  }
}

TEST(Report, TriangleReport) {
  AnalysisReport r = analyze(parse_input("component line : x\ncomponent line : y\ncomponent line : z\n"), no_timing());
  EXPECT_EQ(r.cls, "Free");
  EXPECT_EQ(r.exponents, (std::vector<int>{1, 1}));
  EXPECT_EQ(r.tau, 3);
  ASSERT_TRUE(r.weak.has_value());
  EXPECT_EQ(r.weak->count("A_1"), 3);
  EXPECT_FALSE(r.timing_ms.has_value());
}

TEST(Report, JsonSchemaAndRoundTrip) {
  for (const char* name : {"wzz-1", "naive-terao-1", "two-conics-one-point"}) {
    InputFile in = parse_input(write_input(catalog_entry(name).build()));
    AnalysisReport r = analyze(in, no_timing());
    std::string text = r.to_json();
    auto j = nlohmann::json::parse(text);
    for (const char* key : {"degree", "field", "mdr", "tau", "exponents", "relation_degrees", "class", "type_k",
                            "subtype", "weak_combinatorics", "warnings"})
      EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_TRUE(j["weak_combinatorics"].contains("degrees"));
    EXPECT_TRUE(j["weak_combinatorics"].contains("singularities"));
    EXPECT_TRUE(j["exponents"].is_array());
    EXPECT_EQ(AnalysisReport::from_json(text), r) << name;
    // deterministic
    EXPECT_EQ(analyze(in, no_timing()).to_json(), text);
  }
  AnalysisReport timed = analyze(parse_input("curve : x*y\n"));
  ASSERT_TRUE(timed.timing_ms.has_value());
  EXPECT_EQ(AnalysisReport::from_json(timed.to_json()), timed);
}

TEST(Report, TextAndJsonAgree) {
  AnalysisReport r = analyze(parse_input(write_input(catalog_entry("wzz-1").build())), no_timing());
  std::string text = r.to_text();
  auto j = nlohmann::json::parse(r.to_json());
  EXPECT_NE(text.find("tau: " + std::to_string(j["tau"].get<long>())), std::string::npos);
  EXPECT_NE(text.find("mdr: " + std::to_string(j["mdr"].get<int>())), std::string::npos);
  EXPECT_NE(text.find("resolution: " + j["resolution"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.find("subtype: " + j["subtype"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.find("class: " + j["class"].get<std::string>()), std::string::npos);
  for (auto& [k, v] : j["weak_combinatorics"]["singularities"].items())
    EXPECT_NE(text.find(k + ": " + std::to_string(v.get<int>())), std::string::npos) << k;
}

TEST(Report, ZieglerVariants) {
  InputFile a = parse_input(write_input(catalog_entry("orchard10-1").build()));
  InputFile b = parse_input(write_input(catalog_entry("orchard10-2").build()));
  ZieglerReport z = ziegler(a, b, ZieglerVariant::LatticeAr, no_timing());
  EXPECT_TRUE(z.is_pair);
  EXPECT_TRUE(z.same_combinatorics);
  EXPECT_FALSE(ziegler(a, b, ZieglerVariant::LatticeMdr, no_timing()).is_pair);  // mdr 5 both
  EXPECT_FALSE(ziegler(a, a, ZieglerVariant::LatticeAr, no_timing()).is_pair);
  auto j = nlohmann::json::parse(z.to_json());
  EXPECT_EQ(j["verdict"], "IsPair");

  InputFile conics = parse_input("component conic : x^2-y*z\ncomponent conic : x^2+z^2-y*z\n");
  InputFile lines = parse_input("component line : x\ncomponent line : y\n");
  try {
    ziegler(lines, conics, ZieglerVariant::LatticeMdr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLineArrangement);
  }
  ZieglerReport w = ziegler(lines, conics, ZieglerVariant::WeakMdr, no_timing());
  EXPECT_FALSE(w.is_pair);
  EXPECT_FALSE(w.same_combinatorics);
  EXPECT_EQ(parse_variant("weak-ar"), ZieglerVariant::WeakAr);
  EXPECT_THROW(parse_variant("strong"), Error);
}

TEST(Report, ExitCodes) {
  EXPECT_EQ(exit_code(ErrorCode::SyntaxError), 2);
  EXPECT_EQ(exit_code(ErrorCode::FieldTowerUnsupported), 3);
  EXPECT_EQ(exit_code(ErrorCode::NotReduced), 4);
  EXPECT_EQ(exit_code(ErrorCode::DegeneratePoint), 5);
  EXPECT_EQ(exit_code(ErrorCode::ConstraintViolated), 5);
  EXPECT_EQ(exit_code(ErrorCode::BudgetExceeded), 1);
}
