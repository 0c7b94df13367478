#include "ortholat/ortho.hpp"

#include <algorithm>
#include <bit>

#include "ortholat/error.hpp"

namespace ortholat {

const char* complement_kind_name(ComplementKind kind) {
  switch (kind) {
    case ComplementKind::non_complemented: return "non-complemented";
    case ComplementKind::uniquely_complemented: return "uniquely-complemented";
    case ComplementKind::multiply_complemented: return "multiply-complemented";
  }
  return "?";
}

Poset::Mask complements(const Lattice& lat, int x) {
  if (!lat.bounded()) raise(errc::unbounded, "complements need a bounded lattice");
  Poset::Mask out = 0;
  for (int y = 0; y < lat.size(); ++y)
    if (lat.meet(x, y) == lat.bottom() && lat.join(x, y) == lat.top())
      out |= Poset::Mask(1) << y;
  return out;
}

ComplementClass complement_class(const Lattice& lat) {
  ComplementClass out;
  bool any_empty = false;
  bool any_multiple = false;
  for (int x = 0; x < lat.size(); ++x) {
    Poset::Mask c = complements(lat, x);
    out.per_element.push_back(c);
    int count = std::popcount(c);
    if (count == 0) any_empty = true;
    if (count > 1) any_multiple = true;
  }
  if (any_empty)
    out.kind = ComplementKind::non_complemented;
  else if (any_multiple)
    out.kind = ComplementKind::multiply_complemented;
  else
    out.kind = ComplementKind::uniquely_complemented;
  return out;
}

OrthoMapCheck check_ortho_map(const Lattice& lat, const UnaryMap& perp) {
  OrthoMapCheck check;
  const int n = lat.size();
  if (static_cast<int>(perp.size()) != n) raise(errc::partial_map, "map not total on carrier");
  for (int x = 0; x < n; ++x)
    if (perp[static_cast<std::size_t>(x)] < 0 || perp[static_cast<std::size_t>(x)] >= n)
      raise(errc::partial_map, "map leaves the carrier");

  for (int x = 0; x < n && check.involutive; ++x)
    if (perp[static_cast<std::size_t>(perp[static_cast<std::size_t>(x)])] != x) {
      check.involutive = false;
      check.witness = {x};
    }
  for (int x = 0; x < n && check.non_contradiction; ++x)
    if (lat.meet(x, perp[static_cast<std::size_t>(x)]) != lat.bottom()) {
      check.non_contradiction = false;
      check.witness = {x};
    }
  for (int x = 0; x < n && check.antitone; ++x)
    for (int y = 0; y < n && check.antitone; ++y)
      if (lat.leq(x, y) &&
          !lat.leq(perp[static_cast<std::size_t>(y)], perp[static_cast<std::size_t>(x)])) {
        check.antitone = false;
        check.witness = {x, y};
      }
  return check;
}

namespace {

void ortho_search(const Lattice& lat, const std::vector<Poset::Mask>& comp, UnaryMap& map,
                  std::vector<UnaryMap>& out) {
  const int n = lat.size();
  int x = -1;
  for (int i = 0; i < n; ++i)
    if (map[static_cast<std::size_t>(i)] < 0) {
      x = i;
      break;
    }
  if (x < 0) {
    if (check_ortho_map(lat, map).antitone) out.push_back(map);
    return;
  }
  for (int y : mask_elements(comp[static_cast<std::size_t>(x)])) {
    if (y == x) {
      // self-paired element: only possible when x is its own complement (0 = 1)
      map[static_cast<std::size_t>(x)] = x;
      ortho_search(lat, comp, map, out);
      map[static_cast<std::size_t>(x)] = -1;
    } else if (map[static_cast<std::size_t>(y)] < 0 &&
               ((comp[static_cast<std::size_t>(y)] >> x) & 1u)) {
      map[static_cast<std::size_t>(x)] = y;
      map[static_cast<std::size_t>(y)] = x;
      ortho_search(lat, comp, map, out);
      map[static_cast<std::size_t>(x)] = -1;
      map[static_cast<std::size_t>(y)] = -1;
    }
  }
}

}  // namespace

std::vector<UnaryMap> find_orthocomplementations(const Lattice& lat) {
  if (!lat.bounded()) raise(errc::unbounded, "orthocomplementation needs a bounded lattice");
  std::vector<Poset::Mask> comp;
  for (int x = 0; x < lat.size(); ++x) comp.push_back(complements(lat, x));
  UnaryMap map(static_cast<std::size_t>(lat.size()), -1);
  std::vector<UnaryMap> out;
  ortho_search(lat, comp, map, out);
  std::sort(out.begin(), out.end());
  return out;
}

OrthoFlags classify_ortho(const Lattice& lat, const UnaryMap& perp) {
  auto check = check_ortho_map(lat, perp);
  if (!check.valid()) {
    std::string what = !check.involutive      ? "not involutive"
                       : !check.non_contradiction ? "violates non-contradiction"
                                                  : "not antitone";
    raise(errc::invalid_ortho_map, what);
  }

  OrthoFlags flags;
  flags.ortho = true;

  flags.orthomodular = true;
  for (int x = 0; x < lat.size() && flags.orthomodular; ++x)
    for (int y = 0; y < lat.size() && flags.orthomodular; ++y) {
      if (!lat.leq(x, y)) continue;
      if (lat.join(x, lat.meet(perp[static_cast<std::size_t>(x)], y)) != y) {
        flags.orthomodular = false;
        flags.orthomodular_witness = {x, y};
      }
    }

  flags.modular_ortho = is_modular(lat).modular;
  const bool distributive = is_distributive(lat).distributive;
  const bool complemented = complement_class(lat).kind != ComplementKind::non_complemented;
  flags.boolean_lattice = distributive && complemented;

  // orthocomplemented + distributive forces Boolean
  if (distributive && !flags.boolean_lattice)
    raise(errc::internal_disagreement, "distributive ortho lattice not complemented");
  // Boolean => modular-ortho => orthomodular => ortho
  if (flags.boolean_lattice && !flags.modular_ortho)
    raise(errc::internal_disagreement, "Boolean lattice failed the modularity scan");
  if (flags.modular_ortho && !flags.orthomodular)
    raise(errc::internal_disagreement, "modular ortho lattice failed the orthomodular identity");
  return flags;
}

BooleanIdentityReport check_boolean_identities(const Lattice& lat, const UnaryMap& perp) {
  auto mapcheck = check_ortho_map(lat, perp);
  if (!mapcheck.valid()) raise(errc::invalid_ortho_map, "orthocomplementation required");

  BooleanIdentityReport rep;
  const int n = lat.size();
  auto neg = [&](int x) { return perp[static_cast<std::size_t>(x)]; };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (rep.sasaki_hook.ok && lat.join(neg(x), lat.meet(x, y)) != lat.join(neg(x), y))
        rep.sasaki_hook = {false, x, y};
      if (rep.sasaki_hook_dual.ok && lat.join(x, lat.meet(neg(x), y)) != lat.join(x, y))
        rep.sasaki_hook_dual = {false, x, y};
      if (rep.elkan.ok && neg(lat.meet(x, neg(y))) != lat.join(y, lat.meet(neg(x), neg(y))))
        rep.elkan = {false, x, y};
      if (rep.de_morgan_join.ok && neg(lat.join(x, y)) != lat.meet(neg(x), neg(y)))
        rep.de_morgan_join = {false, x, y};
      if (rep.de_morgan_meet.ok && neg(lat.meet(x, y)) != lat.join(neg(x), neg(y)))
        rep.de_morgan_meet = {false, x, y};
      if (rep.excluded_middle.ok && lat.join(x, neg(x)) != lat.top())
        rep.excluded_middle = {false, x, neg(x)};
    }
  rep.boundary_ok = n == 0 || (neg(lat.bottom()) == lat.top() && neg(lat.top()) == lat.bottom());

  auto flags = classify_ortho(lat, perp);
  rep.orthomodular = flags.orthomodular;
  rep.boolean_lattice = flags.boolean_lattice;

  rep.sasaki_iff_boolean =
      (rep.sasaki_hook.ok && rep.sasaki_hook_dual.ok) == rep.boolean_lattice;
  rep.elkan_implies_boolean = !(rep.orthomodular && rep.elkan.ok) || rep.boolean_lattice;

  auto comp = complement_class(lat);
  rep.uniquely_complemented = comp.kind == ComplementKind::uniquely_complemented;
  rep.distributive = is_distributive(lat).distributive;
  // finite lattices are atomic and have finite width, so unique complementation
  // alone already forces distributivity here
  rep.huntington_ok = !rep.uniquely_complemented || rep.distributive;
  rep.unique_complement_ok =
      !(rep.distributive && comp.kind != ComplementKind::non_complemented) ||
      rep.uniquely_complemented;
  return rep;
}

}  // namespace ortholat
