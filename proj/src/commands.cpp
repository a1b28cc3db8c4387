#include "lzeta/commands.hpp"

#include <sstream>

#include "lzeta/naming.hpp"
#include "lzeta/suite.hpp"

namespace lzeta {

namespace {

constexpr std::size_t kTwistSamples = 24;

struct Setting {
  FieldPtr base;      // F_{p^n}
  FieldPtr field;     // where the computation happens
  bool extended = false;
  CentralChar zeta;   // over `field`
};

Setting make_setting(const RunConfig& cfg, const std::string& zeta_text) {
  Setting s;
  s.base = Field::make(cfg.p, cfg.n);
  const CentralChar zeta = parse_zeta(*s.base, zeta_text);
  s.field = s.base;
  s.zeta = zeta;
  if (reduce_to_basic(zeta).needs_ext) {
    const QuadraticExtension& ext = s.base->quadratic_extension();
    s.field = ext.field;
    s.zeta = lift(zeta, ext.embedding);
    s.extended = true;
  }
  return s;
}

Json header(const RunConfig& cfg, const Setting& s) {
  Json h{{"p", cfg.p}, {"n", cfg.n}, {"zeta", to_json(s.zeta)}, {"parity", to_string(parity_of(s.zeta))}};
  if (s.extended) h["working_degree"] = s.field->degree();
  return h;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void require_format(const RunConfig& cfg, std::initializer_list<OutputFormat> allowed) {
  for (auto f : allowed)
    if (f == cfg.format) return;
  fail(ErrorKind::InvalidArgument, "output format not available for '" + cfg.command + "'");
}

std::string module_text(const HeckeModuleDesc& m) { return to_json(m).dump(); }

RunOutput cmd_orbits(const RunConfig& cfg) {
  require_format(cfg, {OutputFormat::Json, OutputFormat::Tsv});
  Field::make(cfg.p, 1);  // rejects unsupported primes
  const int p = static_cast<int>(cfg.p);
  std::optional<int> only;
  if (cfg.zeta) only = parse_zeta(*Field::make(cfg.p, cfg.n), *cfg.zeta).c;
  Json fibers = Json::array();
  std::ostringstream tsv;
  tsv << "e\tparity\ta\tb\tregular\n";
  std::size_t total = 0;
  for (int e = 0; e < p - 1; ++e) {
    if (only && *only != e) continue;
    const auto fib = fiber_of_restriction(p, e);
    std::size_t nonreg = 0;
    Json orbits = Json::array();
    for (const auto& g : fib) {
      nonreg += g.regular ? 0 : 1;
      orbits.push_back(to_json(g));
      tsv << e << '\t' << (e % 2 ? "odd" : "even") << '\t' << g.rep.a << '\t' << g.rep.b << '\t'
          << (g.regular ? 1 : 0) << '\n';
    }
    total += fib.size();
    fibers.push_back({{"e", e},
                      {"parity", e % 2 ? "odd" : "even"},
                      {"count", fib.size()},
                      {"nonregular", nonreg},
                      {"orbits", std::move(orbits)}});
  }
  tsv << "total\t\t\t\t" << total << '\n';
  if (cfg.format == OutputFormat::Tsv) return {tsv.str()};
  return {dump({{"p", p}, {"fibers", std::move(fibers)}, {"total", total}})};
}

RunOutput cmd_satake(const RunConfig& cfg) {
  require_format(cfg, {OutputFormat::Json, OutputFormat::Tsv});
  const Setting s = make_setting(cfg, cfg.zeta.value_or("basic-even"));
  const SatakeSpace space = build_space(s.field, s.zeta);
  std::vector<SatakePoint> pts;
  if (cfg.point) pts.push_back(parse_satake_point(space, *cfg.point));
  else pts = enumerate_points(space);

  if (cfg.format == OutputFormat::Tsv) {
    std::ostringstream os;
    os << "point\tlength\tasph\n";
    for (const auto& v : pts) {
      const HeckeModuleDesc m = asph(space, v);
      os << point_name(space, v) << '\t' << length(m) << '\t' << module_text(m) << '\n';
    }
    return {os.str()};
  }
  Json out = header(cfg, s);
  out["space"] = to_json(space);
  Json points = Json::array();
  for (const auto& v : pts) {
    Json j = to_json(space, v);
    const HeckeModuleDesc m = asph(space, v);
    j["asph"] = to_json(m);
    j["length"] = length(m);
    j["theta"] = to_json(theta(space, v));
    points.push_back(std::move(j));
  }
  out["points"] = std::move(points);
  return {dump(out)};
}

RunOutput cmd_curve(const RunConfig& cfg) {
  const Setting s = make_setting(cfg, cfg.zeta.value_or("basic-even"));
  const EGCurve curve = build_curve(s.field, s.zeta);
  if (cfg.format == OutputFormat::Dot) return {to_dot(curve)};
  std::vector<EGPoint> pts;
  if (cfg.point) pts.push_back(parse_curve_point(curve, *cfg.point));
  else pts = enumerate_points(curve);
  if (cfg.format == OutputFormat::Tsv) {
    std::ostringstream os;
    os << "point\texceptional\trep\n";
    for (const auto& x : pts)
      os << point_name(curve, x) << '\t' << (x.exceptional ? 1 : 0) << '\t'
         << to_json(rep_of_point(x, curve).rep).dump() << '\n';
    return {os.str()};
  }
  Json out = header(cfg, s);
  out["curve"] = to_json(curve);
  Json points = Json::array();
  for (const auto& x : pts) {
    Json j = to_json(curve, x);
    const RepOfPoint rho = rep_of_point(x, curve);
    j["rep"] = to_json(rho.rep);
    j["rep_extension"] = rho.extension;
    points.push_back(std::move(j));
  }
  out["points"] = std::move(points);
  return {dump(out)};
}

Lmap make_map(const Setting& s) { return build_map(build_space(s.field, s.zeta), build_curve(s.field, s.zeta)); }

RunOutput cmd_map(const RunConfig& cfg) {
  require_format(cfg, {OutputFormat::Json, OutputFormat::Tsv});
  const Setting s = make_setting(cfg, cfg.zeta.value_or("basic-even"));
  const Lmap map = make_map(s);
  if (cfg.point) {
    const SatakePoint v = parse_satake_point(map.space, *cfg.point);
    const EGPoint x = eval(v, map);
    if (cfg.format == OutputFormat::Tsv) return {point_name(map.space, v) + '\t' + point_name(map.curve, x) + '\n'};
    Json out = header(cfg, s);
    out["source"] = to_json(map.space, v);
    out["image"] = to_json(map.curve, x);
    return {dump(out)};
  }
  const Json desc = to_json(map);
  if (cfg.format == OutputFormat::Tsv) {
    std::ostringstream os;
    os << "source_component\tline\tkind\tformula\ttarget_component\tcentre_node\tinverted\n";
    for (const auto& c : desc["components"])
      for (const auto& piece : c["pieces"])
        os << c["source_component"].get<std::size_t>() << '\t' << piece["line"].get<std::string>() << '\t'
           << piece["kind"].get<std::string>() << '\t' << piece["formula"].get<std::string>() << '\t'
           << piece["target_component"].get<std::size_t>() << '\t' << piece["centre_node"].get<std::size_t>()
           << '\t' << (piece["inverted"].get<bool>() ? 1 : 0) << '\n';
    return {os.str()};
  }
  Json out = header(cfg, s);
  out["map"] = desc;
  return {dump(out)};
}

Json fiber_json(const EGPoint& x, const Lmap& map) {
  const FiberResult f = fiber(x, map);
  Json pts = Json::array();
  for (const auto& v : f.points) {
    pts.push_back(point_name(f.space, v));
    if (f.ramified) pts.push_back(point_name(f.space, v));
  }
  return {{"point", point_name(map.curve, x)},
          {"fiber", std::move(pts)},
          {"size", f.points.size()},
          {"ramified", f.ramified},
          {"extension", f.extension}};
}

RunOutput cmd_fibers(const RunConfig& cfg) {
  require_format(cfg, {OutputFormat::Json, OutputFormat::Tsv});
  const Setting s = make_setting(cfg, cfg.zeta.value_or("basic-even"));
  const Lmap map = make_map(s);
  std::vector<EGPoint> pts;
  if (cfg.point) pts.push_back(parse_curve_point(map.curve, *cfg.point));
  else pts = enumerate_points(map.curve);
  Json rows = Json::array();
  for (const auto& x : pts) rows.push_back(fiber_json(x, map));
  if (cfg.format == OutputFormat::Tsv) {
    std::ostringstream os;
    os << "point\tsize\tramified\textension\tfiber\n";
    for (const auto& r : rows) {
      std::vector<std::string> names;
      for (const auto& n : r["fiber"]) names.push_back(n.get<std::string>());
      os << r["point"].get<std::string>() << '\t' << r["size"].get<std::size_t>() << '\t'
         << (r["ramified"].get<bool>() ? 1 : 0) << '\t' << (r["extension"].get<bool>() ? 1 : 0) << '\t'
         << join(names, ",") << '\n';
    }
    return {os.str()};
  }
  Json out = header(cfg, s);
  if (cfg.point) out.update(rows[0]);
  else out["fibers"] = std::move(rows);
  return {dump(out)};
}

Json llc_json(const EGPoint& x, const EGCurve& curve) {
  const RepOfPoint rho = rep_of_point(x, curve);
  const SmoothGRepDesc pi = pi_of_rho(rho.rep);
  const BlockDesc block = block_of(x, curve);
  Json cons = Json::array();
  for (const auto& c : pi.constituents) {
    Json j = to_json(c);
    j["invariants"] = to_json(invariants_of(c));
    cons.push_back(std::move(j));
  }
  return {{"point", point_name(curve, x)},
          {"rep", to_json(rho.rep)},
          {"extension", rho.extension},
          {"block_type", block.type},
          {"constituents", std::move(cons)},
          {"invariants", to_json(HeckeModuleDesc{invariants_of(pi)})}};
}

RunOutput cmd_llc(const RunConfig& cfg) {
  require_format(cfg, {OutputFormat::Json, OutputFormat::Tsv});
  const Setting s = make_setting(cfg, cfg.zeta.value_or("basic-even"));
  const EGCurve curve = build_curve(s.field, s.zeta);
  std::vector<EGPoint> pts;
  if (cfg.point) pts.push_back(parse_curve_point(curve, *cfg.point));
  else pts = enumerate_points(curve);
  if (cfg.format == OutputFormat::Tsv) {
    std::ostringstream os;
    os << "point\tblock_type\tconstituents\n";
    for (const auto& x : pts) {
      const RepOfPoint rho = rep_of_point(x, curve);
      std::vector<std::string> parts;
      for (const auto& c : pi_of_rho(rho.rep).constituents) parts.push_back(to_json(c).dump());
      os << point_name(curve, x) << '\t' << block_of(x, curve).type << '\t' << join(parts, ";") << '\n';
    }
    return {os.str()};
  }
  Json out = header(cfg, s);
  if (cfg.point) {
    out.update(llc_json(pts[0], curve));
  } else {
    Json rows = Json::array();
    for (const auto& x : pts) rows.push_back(llc_json(x, curve));
    out["points"] = std::move(rows);
  }
  return {dump(out)};
}

struct VerifyRun {
  Json checks = Json::array();
  Json points = Json::array();
  bool pass = true;

  void add(const CheckResult& r) {
    pass = pass && r.pass;
    checks.push_back(to_json(r));
  }
};

void verify_parity(const RunConfig& cfg, const Setting& s, VerifyRun& out) {
  const Lmap map = make_map(s);
  out.add(check_chain(map.curve));
  out.add(check_satake(map.space));
  out.add(check_geometry(map));
  std::vector<TheoremReport> reports;
  out.add(check_theorem(map, &reports));
  for (const auto& r : reports) {
    Json j = to_json(r, map);
    j["parity"] = to_string(map.curve.parity);
    out.points.push_back(std::move(j));
  }
  out.add(check_parametrization(map));
  const Parity parity = parity_of(s.zeta);
  const TwistChecks tw = check_twisting(s.base, twist_samples(s.base, parity, cfg.seed, kTwistSamples));
  out.add(tw.asph);
  out.add(tw.invariants);
  out.add(tw.square);
}

RunOutput cmd_verify(const RunConfig& cfg) {
  require_format(cfg, {OutputFormat::Json, OutputFormat::Tsv});
  const FieldPtr k = Field::make(cfg.p, cfg.n);
  VerifyRun run;
  run.add(check_field(k));
  run.add(check_orbits(static_cast<int>(cfg.p)));
  if (cfg.p == 5) run.add(check_p5_labels());
  Json config{{"p", cfg.p}, {"n", cfg.n}, {"seed", cfg.seed}};
  if (cfg.zeta) {
    const Setting s = make_setting(cfg, *cfg.zeta);
    config["zeta"] = to_json(s.zeta);
    if (s.extended) config["working_degree"] = s.field->degree();
    verify_parity(cfg, s, run);
  } else {
    for (const char* z : {"basic-even", "basic-odd"}) verify_parity(cfg, make_setting(cfg, z), run);
  }
  if (cfg.format == OutputFormat::Tsv) {
    std::ostringstream os;
    os << "check\tpass\tcases\n";
    for (const auto& c : run.checks)
      os << c["name"].get<std::string>() << '\t' << (c["pass"].get<bool>() ? "pass" : "FAIL") << '\t'
         << c["cases"].get<std::uint64_t>() << '\n';
    os << "all\t" << (run.pass ? "pass" : "FAIL") << "\t\n";
    return {os.str(), run.pass ? 0 : 1};
  }
  Json out{{"config", std::move(config)},
           {"checks", std::move(run.checks)},
           {"points", std::move(run.points)},
           {"pass", run.pass}};
  return {dump(out), run.pass ? 0 : 1};
}

RunOutput cmd_export(const RunConfig& cfg) {
  const Setting s = make_setting(cfg, cfg.zeta.value_or("basic-even"));
  const Lmap map = make_map(s);
  if (cfg.format == OutputFormat::Dot) return {to_dot(map.curve)};
  require_format(cfg, {OutputFormat::Json});
  Json out = header(cfg, s);
  out["space"] = to_json(map.space);
  out["curve"] = to_json(map.curve);
  out["map"] = to_json(map);
  Json fibers = Json::array();
  for (const auto& x : enumerate_points(map.curve)) fibers.push_back(fiber_json(x, map));
  out["fibers"] = std::move(fibers);
  return {dump(out)};
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "tsv") return OutputFormat::Tsv;
  if (name == "dot") return OutputFormat::Dot;
  fail(ErrorKind::InvalidArgument, "unknown format '" + name + "'");
}

RunOutput run(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 4) fail(ErrorKind::InvalidArgument, "n must be between 1 and 4");
  if (cfg.command == "orbits") return cmd_orbits(cfg);
  if (cfg.command == "satake") return cmd_satake(cfg);
  if (cfg.command == "curve") return cmd_curve(cfg);
  if (cfg.command == "map") return cmd_map(cfg);
  if (cfg.command == "fibers") return cmd_fibers(cfg);
  if (cfg.command == "llc") return cmd_llc(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "export") return cmd_export(cfg);
  fail(ErrorKind::InvalidArgument, "unknown command '" + cfg.command + "'");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::DivisionByZero:
      return 2;
    case ErrorKind::UnsupportedPrime:
      return 3;
    case ErrorKind::UnknownPoint:
      return 4;
    case ErrorKind::ParityMismatch:
      return 5;
    case ErrorKind::NeedsExtension:
      return 6;
  }
  return 2;
}

}  // namespace lzeta
