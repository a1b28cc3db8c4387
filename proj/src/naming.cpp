#include "lzeta/naming.hpp"

#include <charconv>
#include <regex>

#include "lzeta/error.hpp"

namespace lzeta {

namespace {

std::int64_t parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorKind::InvalidArgument, "not an integer: '" + std::string(s) + "'");
  return v;
}

std::size_t parse_index(const std::string& s) { return static_cast<std::size_t>(parse_int(s)); }

std::string side_name(const EGCurve& curve, std::size_t comp) {
  return comp == 0 ? "ext-left" : (comp + 1 == curve.components.size() ? "ext-right" : "int-" + std::to_string(comp));
}

}  // namespace

FieldElement parse_value(const Field& k, std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') fail(ErrorKind::InvalidArgument, "unterminated coefficient list");
    text = text.substr(1, text.size() - 2);
    std::vector<std::int64_t> coeffs;
    while (!text.empty()) {
      const auto comma = text.find(',');
      coeffs.push_back(parse_int(text.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return k.element(coeffs);
  }
  return k.element(parse_int(text));
}

CentralChar parse_zeta(const Field& k, std::string_view text) {
  if (text == "basic-even") return basic_central_char(k, Parity::Even);
  if (text == "basic-odd") return basic_central_char(k, Parity::Odd);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorKind::InvalidArgument, "zeta must be basic-even, basic-odd or <c>:<v>");
  const FieldElement v = parse_value(k, text.substr(colon + 1));
  if (v.is_zero()) fail(ErrorKind::InvalidArgument, "zeta value at p^{-1} must be nonzero");
  return smooth_char(parse_int(text.substr(0, colon)), v);
}

EGPoint parse_curve_point(const EGCurve& curve, std::string_view text) {
  static const std::regex node_re(R"(node-(\d+))");
  static const std::regex ext_re(R"(ext-(left|right):(z1|t)=(.+))");
  static const std::regex int_re(R"(int-(\d+):x=(.+))");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, node_re)) return node_point(curve, parse_index(m[1]));
  if (std::regex_match(s, m, ext_re)) {
    const std::size_t comp = m[1] == "left" ? 0 : curve.components.size() - 1;
    const ChartKind kind = curve.components[comp].chart;
    if (m[2] != chart_name(kind))
      fail(ErrorKind::ParityMismatch, "chart '" + m[2].str() + "' does not exist on the " +
                                          to_string(curve.parity) + " curve");
    return red_point(curve, comp, parse_value(*curve.field, m[3].str()));
  }
  if (std::regex_match(s, m, int_re)) {
    const std::size_t comp = parse_index(m[1]);
    if (comp >= curve.components.size() || curve.components[comp].exterior())
      fail(ErrorKind::UnknownPoint, "no interior component " + m[1].str());
    return red_point(curve, comp, parse_value(*curve.field, m[2].str()));
  }
  fail(ErrorKind::UnknownPoint, "unrecognised curve point '" + s + "'");
}

SatakePoint parse_satake_point(const SatakeSpace& space, std::string_view text) {
  static const std::regex re(R"(comp-(\d+):(x|y|z1)=(.+))");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) fail(ErrorKind::UnknownPoint, "unrecognised Satake point '" + s + "'");
  const std::size_t comp = parse_index(m[1]);
  if (comp >= space.components.size()) fail(ErrorKind::UnknownPoint, "no component " + m[1].str());
  const FieldElement v = parse_value(*space.field, m[3].str());
  const FieldElement zero = space.field->zero();
  const bool crossed = space.components[comp].shape == ComponentShape::CrossedLines;
  if (crossed && m[2] == "x") return {comp, CrossedCoords{v, zero}};
  if (crossed && m[2] == "y") return {comp, CrossedCoords{zero, v}};
  if (!crossed && m[2] == "z1") return {comp, LineCoord{v}};
  fail(ErrorKind::UnknownPoint, "coordinate '" + m[2].str() + "' does not exist on component " + m[1].str());
}

std::string point_name(const EGCurve& curve, const EGPoint& x) {
  if (auto* n = std::get_if<NodePoint>(&x.where)) return "node-" + std::to_string(n->node);
  const auto& red = std::get<RedPoint>(x.where);
  const EGComponent& comp = curve.components.at(red.component);
  return side_name(curve, red.component) + ":" + chart_name(comp.chart) + "=" + red.value.field()->format(red.value);
}

std::string point_name(const SatakeSpace&, const SatakePoint& v) {
  const std::string head = "comp-" + std::to_string(v.component) + ":";
  if (auto* c = std::get_if<CrossedCoords>(&v.coords)) {
    if (c->x.is_zero() && !c->y.is_zero()) return head + "y=" + c->y.field()->format(c->y);
    return head + "x=" + c->x.field()->format(c->x);
  }
  const auto& z1 = std::get<LineCoord>(v.coords).z1;
  return head + "z1=" + z1.field()->format(z1);
}

}  // namespace lzeta
