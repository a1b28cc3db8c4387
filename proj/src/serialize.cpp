#include "lzeta/serialize.hpp"

#include <sstream>

#include "lzeta/naming.hpp"

namespace lzeta {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

const char* shape_name(ComponentShape s) { return s == ComponentShape::CrossedLines ? "crossed" : "line"; }

}  // namespace

Json to_json(const FieldElement& a) {
  Json out = Json::array();
  for (auto c : a.coeffs()) out.push_back(c);
  return out;
}

Json to_json(const TorusChar& chi) { return {{"a", chi.a}, {"b", chi.b}}; }

Json to_json(const OrbitGamma& gamma) { return {{"rep", to_json(gamma.rep)}, {"regular", gamma.regular}}; }

Json to_json(const SmoothChar& chi) { return {{"c", chi.c}, {"v", to_json(chi.v)}}; }

Json to_json(const SerreWeight& w) {
  Json out{{"r", w.r}, {"a", w.a}, {"text", to_string(w)}};
  if (w.formal()) out["formal"] = true;
  return out;
}

Json to_json(const SatakeSpace& space) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < space.components.size(); ++i) {
    const auto& c = space.components[i];
    Json j{{"index", i}, {"gamma", to_json(c.gamma)}, {"shape", shape_name(c.shape)}};
    if (c.shape == ComponentShape::CrossedLines) j["order"] = to_json(c.first);
    j["z2"] = to_json(c.z2);
    comps.push_back(std::move(j));
  }
  return {{"p", space.field->p()},
          {"n", space.field->degree()},
          {"zeta", to_json(space.zeta)},
          {"components", std::move(comps)}};
}

Json to_json(const SatakeSpace& space, const SatakePoint& v) {
  Json out{{"name", point_name(space, v)}, {"component", v.component}};
  if (auto* c = std::get_if<CrossedCoords>(&v.coords)) {
    out["x"] = to_json(c->x);
    out["y"] = to_json(c->y);
  } else {
    out["z1"] = to_json(std::get<LineCoord>(v.coords).z1);
  }
  return out;
}

Json to_json(const SimpleDesc& m) {
  return std::visit(overloaded{
                        [](const RegStd& r) -> Json {
                          return {{"kind", "regstd"},
                                  {"x", to_json(r.x)},
                                  {"y", to_json(r.y)},
                                  {"z2", to_json(r.z2)},
                                  {"chi", to_json(r.chi)}};
                        },
                        [](const NonRegStd& n) -> Json {
                          return {{"kind", "nonregstd"}, {"z1", to_json(n.z1)}, {"z2", to_json(n.z2)},
                                  {"chi", to_json(n.chi)}};
                        },
                        [](const HChar& h) -> Json {
                          return {{"kind", "char"}, {"eps", h.eps}, {"c", to_json(h.c)}, {"chi", to_json(h.chi)}};
                        },
                    },
                    m);
}

Json to_json(const HeckeModuleDesc& m) {
  if (auto* s = std::get_if<SSum>(&m)) {
    Json members = Json::array();
    for (const auto& x : s->members) members.push_back(to_json(x));
    return {{"kind", "ssum"}, {"members", std::move(members)}};
  }
  return std::visit(overloaded{[](const SSum&) { return Json(); },
                               [](const auto& x) { return to_json(SimpleDesc{x}); }},
                    m);
}

Json to_json(const EGCurve& curve) {
  Json comps = Json::array();
  for (const auto& c : curve.components) {
    Json j{{"index", c.index},
           {"name", c.exterior() ? (c.index == 0 ? "ext-left" : "ext-right") : "int-" + std::to_string(c.index)},
           {"label", Json::array({to_json(c.left), to_json(c.right)})},
           {"chart", chart_name(c.chart)}};
    j["left_node"] = c.left_node ? Json(*c.left_node) : Json();
    j["right_node"] = c.right_node ? Json(*c.right_node) : Json();
    comps.push_back(std::move(j));
  }
  Json nodes = Json::array();
  for (const auto& n : curve.nodes) {
    const auto [w1, w2] = node_weights(curve, n.index);
    Json j{{"index", n.index},
           {"name", "node-" + std::to_string(n.index)},
           {"weights", Json::array({to_json(w1), to_json(w2)})},
           {"kind", n.smooth ? "smooth" : "double"}};
    j["components"] = Json::array();
    if (n.left_component) j["components"].push_back(*n.left_component);
    if (n.right_component) j["components"].push_back(*n.right_component);
    nodes.push_back(std::move(j));
  }
  Json exc = Json::array();
  for (const auto& x : exceptional_points(curve)) exc.push_back(point_name(curve, x));
  return {{"p", curve.p()},
          {"n", curve.field->degree()},
          {"parity", to_string(curve.parity)},
          {"zeta", to_json(curve.zeta)},
          {"to_basic", to_json(curve.to_basic)},
          {"components", std::move(comps)},
          {"nodes", std::move(nodes)},
          {"exceptional", std::move(exc)}};
}

Json to_json(const EGCurve& curve, const EGPoint& x) {
  Json out{{"name", point_name(curve, x)}};
  if (auto* n = std::get_if<NodePoint>(&x.where)) {
    const auto [w1, w2] = node_weights(curve, n->node);
    out["node"] = n->node;
    out["weights"] = Json::array({to_json(w1), to_json(w2)});
  } else {
    const auto& red = std::get<RedPoint>(x.where);
    out["component"] = red.component;
    out["chart"] = chart_name(curve.components[red.component].chart);
    out["value"] = to_json(red.value);
  }
  out["exceptional"] = x.exceptional;
  return out;
}

Json to_json(const GaloisRepDesc& rho) {
  if (auto* red = std::get_if<ReducibleRep>(&rho))
    return {{"kind", "reducible"}, {"chars", Json::array({to_json(red->first), to_json(red->second)})}};
  const auto& irr = std::get<IrreducibleRep>(rho);
  const auto [w1, w2] = serre_weights(irr);
  return {{"kind", "irreducible"},
          {"r", irr.r},
          {"eta", to_json(irr.eta)},
          {"weights", Json::array({to_json(w1), to_json(w2)})}};
}

Json to_json(const Constituent& c) {
  return std::visit(overloaded{
                        [](const PSConst& ps) -> Json {
                          return {{"kind", "ps"}, {"r", ps.r}, {"x", to_json(ps.x)}, {"eta", to_json(ps.eta)}};
                        },
                        [](const SSConst& ss) -> Json {
                          return {{"kind", "ss"}, {"r", ss.r}, {"eta", to_json(ss.eta)}};
                        },
                        [](const CharConst& ch) -> Json { return {{"kind", "char"}, {"eta", to_json(ch.eta)}}; },
                        [](const StConst& st) -> Json { return {{"kind", "st"}, {"eta", to_json(st.eta)}}; },
                    },
                    c);
}

Json to_json(const Lmap& map) {
  Json comps = Json::array();
  const Twist back = twist_of(inverse(map.to_basic));
  for (const auto& d : map.pieces) {
    // Report pieces against the components of the requested space.
    const SatakeComponent& bc = map.basic_space.components[d.source];
    const TorusChar first = twist_char(bc.first, back.r, map.space.q());
    const std::size_t src = *map.space.find(orbit_of(first, map.space.q()));
    const bool swapped_order = map.space.components[src].first != first;
    Json pieces = Json::array();
    for (const auto& piece : d.pieces) {
      SourceLine line = piece.line;
      if (swapped_order && line != SourceLine::Z1) line = line == SourceLine::X ? SourceLine::Y : SourceLine::X;
      const EGComponent& tc = map.curve.components[piece.target_component];
      pieces.push_back({{"line", to_string(line)},
                        {"kind", to_string(piece.kind)},
                        {"formula", piece.formula()},
                        {"target_component", piece.target_component},
                        {"target_chart", chart_name(tc.chart)},
                        {"centre_node", piece.centre_node},
                        {"inverted", piece.inverted}});
    }
    comps.push_back({{"source_component", src},
                     {"gamma", to_json(map.space.components[src].gamma)},
                     {"origin_node", d.origin_node},
                     {"pieces", std::move(pieces)}});
  }
  return {{"p", map.curve.p()},
          {"n", map.field->degree()},
          {"parity", to_string(map.curve.parity)},
          {"zeta", to_json(map.space.zeta)},
          {"to_basic", to_json(map.to_basic)},
          {"components", std::move(comps)}};
}

Json to_json(const TheoremReport& report, const Lmap& map) {
  Json fib = Json::array();
  for (const auto& v : report.fiber) fib.push_back(point_name(map.space, v));
  return {{"point", point_name(map.curve, report.point)},
          {"case", report.case_tag},
          {"fiber", std::move(fib)},
          {"extension", report.field.get() != map.field.get()},
          {"ramified", report.ramified},
          {"lhs", to_json(HeckeModuleDesc{report.lhs})},
          {"rhs", to_json(HeckeModuleDesc{report.rhs})},
          {"pass", report.pass}};
}

std::string to_dot(const EGCurve& curve) {
  std::ostringstream os;
  os << "graph X_zeta {\n";
  os << "  label=\"p=" << curve.p() << " " << to_string(curve.parity) << "\";\n";
  os << "  node [shape=circle];\n";
  for (const auto& n : curve.nodes) {
    const auto [w1, w2] = node_weights(curve, n.index);
    os << "  n" << n.index << " [label=\"node-" << n.index << "\\n{" << to_string(w1) << ", " << to_string(w2)
       << "}\"" << (n.smooth ? ", shape=doublecircle" : "") << "];\n";
  }
  for (const auto& c : curve.components) {
    std::string a = c.left_node ? "n" + std::to_string(*c.left_node) : "end" + std::to_string(c.index);
    std::string b = c.right_node ? "n" + std::to_string(*c.right_node) : "end" + std::to_string(c.index);
    if (!c.left_node || !c.right_node)
      os << "  end" << c.index << " [shape=point, label=\"\"];\n";
    std::string label = "comp-" + std::to_string(c.index) + ": " + to_string(c.left) + " | " + to_string(c.right);
    for (char& ch : label)
      if (ch == '"') ch = '\'';
    if (c.exterior()) {
      const char* chart = chart_name(c.chart);
      const char* val = curve.parity == Parity::Even ? "1" : "2";
      label += std::string("\\nexceptional ") + chart + "=" + val + ", " + chart + "=-" + val;
    }
    os << "  " << a << " -- " << b << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lzeta
