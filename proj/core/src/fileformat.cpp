#include "syzcurve/fileformat.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"

namespace syzcurve {

namespace {

std::string_view trim(std::string_view s, std::size_t& lead) {
  lead = 0;
  while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
  std::size_t end = s.size();
  while (end > lead && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(lead, end - lead);
}

[[noreturn]] void fail(const std::string& msg, std::size_t line, std::size_t col) {
  ParseError e(ErrorCode::SyntaxError, msg, 0);
  e.set_location(line, col);
  throw e;
}

}  // namespace

HomogPoly InputFile::curve() const {
  HomogPoly f = HomogPoly::constant(field.one());
  for (const auto& p : polys) f = f * p;
  return f;
}

Arrangement InputFile::arrangement() const {
  if (raw_curve) throw Error(ErrorCode::InvalidArgument, "raw curve input has no declared components");
  return Arrangement(polys, kinds);
}

InputFile parse_input(std::string_view text) {
  InputFile in;
  bool seen_field = false, seen_body = false, seen_component = false;
  std::size_t lineno = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    std::size_t lead;
    std::string_view line = trim(raw, lead);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected ':'", lineno, lead + 1);
    std::size_t hlead;
    std::string_view head = trim(line.substr(0, colon), hlead);
    std::size_t blead;
    std::string_view body = trim(line.substr(colon + 1), blead);
    const std::size_t body_col = lead + colon + 1 + blead + 1;
    std::istringstream words{std::string(head)};
    std::string kw, arg, extra;
    words >> kw >> arg >> extra;
    if (!extra.empty()) fail("unexpected '" + extra + "'", lineno, lead + 1);
    if (body.empty()) fail("missing expression after ':'", lineno, lead + colon + 2);

    auto parse_at = [&](auto&& fn) {
      try {
        return fn();
      } catch (ParseError& e) {
        e.set_location(lineno, body_col + e.offset());
        throw;
      }
    };

    if (kw == "field") {
      if (seen_field) fail("field declared twice", lineno, lead + 1);
      if (seen_body) fail("field must precede components", lineno, lead + 1);
      if (arg.empty()) fail("field needs a generator name", lineno, lead + 1);
      seen_field = true;
      auto coeffs = parse_at([&] { return parse_univariate(body, arg); });
      in.field = NumberField::adjoin_root(arg, coeffs);
    } else if (kw == "component" || kw == "curve") {
      ComponentKind k = ComponentKind::OtherSmooth;
      if (kw == "component") {
        if (arg == "line") k = ComponentKind::Line;
        else if (arg == "conic") k = ComponentKind::Conic;
        else if (arg == "curve") k = ComponentKind::OtherSmooth;
        else fail("component kind must be line, conic or curve", lineno, lead + 1);
        if (in.raw_curve) fail("'curve :' input cannot also declare components", lineno, lead + 1);
        seen_component = true;
      } else {
        if (!arg.empty()) fail("unexpected '" + arg + "'", lineno, lead + 1);
        if (seen_component || in.raw_curve) fail("'curve :' must be the only polynomial", lineno, lead + 1);
        in.raw_curve = true;
      }
      seen_body = true;
      in.polys.push_back(parse_at([&] { return parse_poly(body, in.field); }));
      in.kinds.push_back(k);
    } else {
      fail("unknown keyword '" + kw + "'", lineno, lead + 1);
    }
  }
  if (in.polys.empty()) fail("no components or curve given", lineno, 1);
  return in;
}

InputFile read_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str());
}

std::string write_input(const Arrangement& a, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  if (a.field().degree() > 1) out << "field " << a.field().generator_name() << " : " << a.field().minpoly_string() << "\n";
  for (const auto& c : a.components())
    out << "component " << component_kind_name(c.kind) << " : " << c.poly.to_string() << "\n";
  return out.str();
}

}  // namespace syzcurve
