#include "lzeta/hecke.hpp"

#include <algorithm>

namespace lzeta {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<SimpleDesc> members_of(const HeckeModuleDesc& m) {
  if (auto* s = std::get_if<SSum>(&m)) return s->members;
  return std::visit(overloaded{[](const SSum&) { return std::vector<SimpleDesc>{}; },
                               [](const auto& simple) { return std::vector<SimpleDesc>{simple}; }},
                    m);
}

std::vector<SimpleDesc> canonical_multiset(std::vector<SimpleDesc> ms) {
  for (auto& m : ms) m = normalize(m);
  std::sort(ms.begin(), ms.end());
  return ms;
}

HeckeModuleDesc as_module(const SimpleDesc& s) {
  return std::visit([](const auto& x) -> HeckeModuleDesc { return x; }, s);
}

}  // namespace

HeckeModuleDesc asph(const SatakeSpace& space, const SatakePoint& v) {
  const SatakeComponent& comp = space.components.at(v.component);
  if (auto* c = std::get_if<CrossedCoords>(&v.coords)) return RegStd{c->x, c->y, comp.z2, comp.first};
  return NonRegStd{std::get<LineCoord>(v.coords).z1, comp.z2, comp.first};
}

HeckeModuleDesc twist_module(const HeckeModuleDesc& m, const Twist& t, int q) {
  auto twist_simple = [&](const SimpleDesc& s) -> SimpleDesc {
    return std::visit(
        overloaded{
            [&](const RegStd& r) -> SimpleDesc {
              return RegStd{t.z0 * r.x, t.z0 * r.y, t.z0 * t.z0 * r.z2, twist_char(r.chi, t.r, q)};
            },
            [&](const NonRegStd& r) -> SimpleDesc {
              return NonRegStd{t.z0 * r.z1, t.z0 * t.z0 * r.z2, twist_char(r.chi, t.r, q)};
            },
            [&](const HChar& h) -> SimpleDesc { return HChar{h.eps, t.z0 * h.c, twist_char(h.chi, t.r, q)}; },
        },
        s);
  };
  if (auto* s = std::get_if<SSum>(&m)) {
    SSum out;
    for (const auto& x : s->members) out.members.push_back(twist_simple(x));
    return out;
  }
  return as_module(twist_simple(members_of(m).front()));
}

SSum semisimplify(const HeckeModuleDesc& m) {
  SSum out;
  for (const auto& s : members_of(m)) {
    if (auto* n = std::get_if<NonRegStd>(&s); n && n->z1 * n->z1 == n->z2) {
      out.members.push_back(HChar{0, n->z1, n->chi});
      out.members.push_back(HChar{-1, -n->z1, n->chi});
    } else {
      out.members.push_back(s);
    }
  }
  return out;
}

SSum direct_sum(const std::vector<HeckeModuleDesc>& parts) {
  SSum out;
  for (const auto& p : parts)
    for (const auto& s : members_of(p)) out.members.push_back(s);
  return out;
}

bool iso_equal(const HeckeModuleDesc& a, const HeckeModuleDesc& b) {
  return canonical_multiset(members_of(a)) == canonical_multiset(members_of(b));
}

std::size_t length(const HeckeModuleDesc& m) { return semisimplify(m).members.size(); }

SimpleDesc normalize(const SimpleDesc& m) {
  if (auto* r = std::get_if<RegStd>(&m)) {
    const TorusChar s = swapped(r->chi);
    if (s < r->chi) return RegStd{r->y, r->x, r->z2, s};
  }
  return m;
}

bool is_simple(const SimpleDesc& m) {
  if (auto* n = std::get_if<NonRegStd>(&m)) return n->z1 * n->z1 != n->z2;
  return true;
}

bool is_supersingular(const SimpleDesc& m) {
  if (auto* r = std::get_if<RegStd>(&m)) return r->x.is_zero() && r->y.is_zero();
  if (auto* n = std::get_if<NonRegStd>(&m)) return n->z1.is_zero();
  return false;
}

OrbitGamma component_of(const SimpleDesc& m, int q) {
  return std::visit([q](const auto& s) { return orbit_of(s.chi, q); }, m);
}

FieldElement u2_scalar(const SimpleDesc& m) {
  return std::visit(overloaded{[](const RegStd& r) { return r.z2; }, [](const NonRegStd& n) { return n.z2; },
                               [](const HChar& h) { return h.c * h.c; }},
                    m);
}

}  // namespace lzeta
