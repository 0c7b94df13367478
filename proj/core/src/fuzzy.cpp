#include "ortholat/fuzzy.hpp"

#include <algorithm>
#include <cstdlib>

#include "ortholat/error.hpp"

namespace ortholat {

namespace {

int env_cap(const char* name, int fallback) {
  if (const char* raw = std::getenv(name)) {
    int v = std::atoi(raw);
    if (v > 0) return v;
  }
  return fallback;
}

int crisp_universe_cap() { return env_cap("ORTHOLAT_SIZE_CAP", 6); }
int universe_cap() { return env_cap("ORTHOLAT_SIZE_CAP", 12); }
constexpr int kFunctionCap = 64;

}  // namespace

const char* fuzzy_family_name(FuzzyFamily fam) {
  switch (fam) {
    case FuzzyFamily::min_max: return "minmax";
    case FuzzyFamily::product_prob_sum: return "product";
    case FuzzyFamily::lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

FuzzyFamily fuzzy_family_by_name(const std::string& name) {
  for (FuzzyFamily f :
       {FuzzyFamily::min_max, FuzzyFamily::product_prob_sum, FuzzyFamily::lukasiewicz})
    if (name == fuzzy_family_name(f)) return f;
  raise(errc::unknown_name, "fuzzy family '" + name + "'");
}

Rat family_meet(FuzzyFamily fam, const Rat& a, const Rat& b) {
  switch (fam) {
    case FuzzyFamily::min_max: return std::min(a, b);
    case FuzzyFamily::product_prob_sum: return Rat(a * b);
    case FuzzyFamily::lukasiewicz: return std::max(Rat(0), Rat(a + b - 1));
  }
  return a;
}

Rat family_join(FuzzyFamily fam, const Rat& a, const Rat& b) {
  switch (fam) {
    case FuzzyFamily::min_max: return std::max(a, b);
    case FuzzyFamily::product_prob_sum: return Rat(a + b - a * b);
    case FuzzyFamily::lukasiewicz: return std::min(Rat(1), Rat(a + b));
  }
  return a;
}

std::pair<MembershipFn, MembershipFn> apply_family(FuzzyFamily fam, const MembershipFn& m,
                                                   const MembershipFn& n) {
  if (!same_universe(m, n)) raise(errc::universe_mismatch, m.name + " vs " + n.name);
  MembershipFn meet{"(" + m.name + "∧" + n.name + ")", m.universe, {}};
  MembershipFn join{"(" + m.name + "∨" + n.name + ")", m.universe, {}};
  for (std::size_t i = 0; i < m.grades.size(); ++i) {
    meet.grades.push_back(family_meet(fam, m.grades[i], n.grades[i]));
    join.grades.push_back(family_join(fam, m.grades[i], n.grades[i]));
  }
  return {std::move(meet), std::move(join)};
}

int FuzzyStructure::find(const MembershipFn& f) const {
  for (std::size_t i = 0; i < fns.size(); ++i)
    if (same_grades(fns[i], f)) return static_cast<int>(i);
  return -1;
}

int FuzzyStructure::find_name(const std::string& name) const {
  for (std::size_t i = 0; i < fns.size(); ++i)
    if (fns[i].name == name) return static_cast<int>(i);
  return -1;
}

MembershipFn FuzzyStructure::meet_fn(int i, int j) const {
  if (source == Source::family)
    return apply_family(family, fns[static_cast<std::size_t>(i)],
                        fns[static_cast<std::size_t>(j)])
        .first;
  return fns[static_cast<std::size_t>(order_lattice->meet(i, j))];
}

MembershipFn FuzzyStructure::join_fn(int i, int j) const {
  if (source == Source::family)
    return apply_family(family, fns[static_cast<std::size_t>(i)],
                        fns[static_cast<std::size_t>(j)])
        .second;
  return fns[static_cast<std::size_t>(order_lattice->join(i, j))];
}

std::optional<int> FuzzyStructure::top_fn() const {
  for (std::size_t i = 0; i < fns.size(); ++i) {
    bool dominates = true;
    for (std::size_t j = 0; j < fns.size() && dominates; ++j)
      dominates = pointwise_leq(fns[j], fns[i]);
    if (dominates) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> FuzzyStructure::bottom_fn() const {
  for (std::size_t i = 0; i < fns.size(); ++i) {
    bool below = true;
    for (std::size_t j = 0; j < fns.size() && below; ++j)
      below = pointwise_leq(fns[i], fns[j]);
    if (below) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool FuzzyStructure::excluded_middle() const {
  auto top = top_fn();
  if (!top) return false;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    MembershipFn lhs = join_fn(static_cast<int>(i), negation[i]);
    if (!same_grades(lhs, fns[static_cast<std::size_t>(*top)])) return false;
  }
  return true;
}

bool FuzzyStructure::non_contradiction() const {
  auto bottom = bottom_fn();
  if (!bottom) return false;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    MembershipFn lhs = meet_fn(static_cast<int>(i), negation[i]);
    if (!same_grades(lhs, fns[static_cast<std::size_t>(*bottom)])) return false;
  }
  return true;
}

bool FuzzyStructure::idempotent() const {
  for (std::size_t i = 0; i < fns.size(); ++i) {
    if (!same_grades(join_fn(static_cast<int>(i), static_cast<int>(i)), fns[i])) return false;
    if (!same_grades(meet_fn(static_cast<int>(i), static_cast<int>(i)), fns[i])) return false;
  }
  return true;
}

FuzzyStructure crisp_logic(const std::vector<std::string>& universe) {
  const int u = static_cast<int>(universe.size());
  if (u > crisp_universe_cap())
    raise(errc::universe_too_large,
          "crisp logic over " + std::to_string(u) + " points exceeds the cap");

  std::vector<MembershipFn> fns;
  for (int mask = 0; mask < (1 << u); ++mask) {
    std::string name = "{";
    std::vector<Rat> grades;
    for (int i = 0; i < u; ++i) {
      bool in = (mask >> i) & 1;
      grades.push_back(in ? 1 : 0);
      if (in) {
        if (name.size() > 1) name += ",";
        name += universe[static_cast<std::size_t>(i)];
      }
    }
    name += "}";
    fns.push_back(make_membership(name, universe, grades));
  }
  return family_structure(FuzzyFamily::min_max, std::move(fns),
                          GradeNegation{GradeNegationFamily::standard});
}

FuzzyStructure family_structure(FuzzyFamily fam, std::vector<MembershipFn> fns,
                                const GradeNegation& neg) {
  if (fns.empty()) raise(errc::not_closed, "empty function set");
  if (static_cast<int>(fns.size()) > kFunctionCap)
    raise(errc::universe_too_large, "function set exceeds the cap");
  if (static_cast<int>(fns[0].universe.size()) > universe_cap())
    raise(errc::universe_too_large, "universe exceeds the cap");

  FuzzyStructure s;
  s.fns = std::move(fns);
  s.source = FuzzyStructure::Source::family;
  s.family = fam;
  s.grade_negation = neg;

  for (std::size_t i = 0; i < s.fns.size(); ++i)
    for (std::size_t j = 0; j < s.fns.size(); ++j) {
      auto [meet, join] = apply_family(fam, s.fns[i], s.fns[j]);
      if (s.find(meet) < 0 || s.find(join) < 0)
        raise(errc::not_closed,
              "set not closed under the operators at (" + s.fns[i].name + "," + s.fns[j].name +
                  ")");
    }

  for (std::size_t i = 0; i < s.fns.size(); ++i) {
    int idx = s.find(negate_membership(neg, s.fns[i]));
    if (idx < 0) raise(errc::negation_not_closed, "¬" + s.fns[i].name + " escapes the set");
    s.negation.push_back(idx);
  }
  return s;
}

PointwiseCheck check_pointwise_consistency(const FuzzyStructure& s) {
  PointwiseTables tables;
  struct Origin {
    std::string fa, fb, point;
  };
  std::map<std::pair<Rat, Rat>, Origin> meet_origin, join_origin;

  const int n = static_cast<int>(s.fns.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MembershipFn meet = s.meet_fn(i, j);
      MembershipFn join = s.join_fn(i, j);
      const auto& a = s.fns[static_cast<std::size_t>(i)];
      const auto& b = s.fns[static_cast<std::size_t>(j)];
      for (int p = 0; p < a.points(); ++p) {
        std::pair<Rat, Rat> in{a.at(p), b.at(p)};
        auto join_it = tables.join.find(in);
        if (join_it == tables.join.end()) {
          tables.join.emplace(in, join.at(p));
          join_origin.emplace(in, Origin{a.name, b.name, a.universe[static_cast<std::size_t>(p)]});
        } else if (join_it->second != join.at(p)) {
          const Origin& o = join_origin.at(in);
          return PointwiseCollision{true,
                                    o.fa,
                                    o.fb,
                                    o.point,
                                    a.name,
                                    b.name,
                                    a.universe[static_cast<std::size_t>(p)],
                                    in.first,
                                    in.second,
                                    join_it->second,
                                    join.at(p)};
        }
        auto meet_it = tables.meet.find(in);
        if (meet_it == tables.meet.end()) {
          tables.meet.emplace(in, meet.at(p));
          meet_origin.emplace(in, Origin{a.name, b.name, a.universe[static_cast<std::size_t>(p)]});
        } else if (meet_it->second != meet.at(p)) {
          const Origin& o = meet_origin.at(in);
          return PointwiseCollision{false,
                                    o.fa,
                                    o.fb,
                                    o.point,
                                    a.name,
                                    b.name,
                                    a.universe[static_cast<std::size_t>(p)],
                                    in.first,
                                    in.second,
                                    meet_it->second,
                                    meet.at(p)};
        }
      }
    }
  return tables;
}

InducedLogic induced_logic(std::vector<MembershipFn> fns, const NegationSpec& neg) {
  if (fns.empty()) raise(errc::not_closed, "empty function set");
  if (static_cast<int>(fns.size()) > kFunctionCap)
    raise(errc::universe_too_large, "function set exceeds the cap");
  if (static_cast<int>(fns[0].universe.size()) > universe_cap())
    raise(errc::universe_too_large, "universe exceeds the cap");

  Poset order = pointwise_order(fns);
  auto check = order.lattice_check();
  if (!check.is_lattice)
    raise(errc::not_a_lattice,
          "functions {" + order.label(check.witness_a) + "," + order.label(check.witness_b) +
              "} lack a " + (check.missing_join ? "least upper bound" : "greatest lower bound"));

  InducedLogic out;
  out.lattice = Lattice::from_poset(order);

  out.structure.fns = std::move(fns);
  out.structure.source = FuzzyStructure::Source::induced;
  out.structure.order_lattice = out.lattice;

  if (const auto* gneg = std::get_if<GradeNegation>(&neg)) {
    out.structure.grade_negation = *gneg;
    for (const auto& f : out.structure.fns) {
      int idx = out.structure.find(negate_membership(*gneg, f));
      if (idx < 0) raise(errc::negation_not_closed, "¬" + f.name + " escapes the set");
      out.structure.negation.push_back(idx);
    }
  } else {
    const auto& by_name = std::get<std::map<std::string, std::string>>(neg);
    for (const auto& f : out.structure.fns) {
      auto it = by_name.find(f.name);
      if (it == by_name.end())
        raise(errc::negation_not_closed, "negation undefined on " + f.name);
      int idx = out.structure.find_name(it->second);
      if (idx < 0) raise(errc::negation_not_closed, "¬" + f.name + " escapes the set");
      out.structure.negation.push_back(idx);
    }
  }

  out.negation_class = classify_negation(out.lattice, out.structure.negation);
  out.modular = is_modular(out.lattice).modular;
  out.distributive = is_distributive(out.lattice).distributive;
  out.complements = complement_class(out.lattice);
  out.boolean_lattice =
      out.distributive && out.complements.kind != ComplementKind::non_complemented;
  out.orthocomplemented = check_ortho_map(out.lattice, out.structure.negation).valid();
  out.excluded_middle = out.structure.excluded_middle();
  out.non_contradiction = out.structure.non_contradiction();
  out.idempotent = out.structure.idempotent();
  return out;
}

// ---- theorem harnesses --------------------------------------------------

GradeTablePair family_tables(FuzzyFamily fam) {
  return {[fam](const Rat& a, const Rat& b) { return family_meet(fam, a, b); },
          [fam](const Rat& a, const Rat& b) { return family_join(fam, a, b); }};
}

namespace {

void note(std::vector<HypothesisCheck>& checks, bool& all, const std::string& name, bool holds,
          const std::string& witness) {
  checks.push_back({name, holds, holds ? std::string() : witness});
  all = all && holds;
}

void check_identities(const GradeTablePair& t, const std::vector<Rat>& grid,
                      std::vector<HypothesisCheck>& checks, bool& all) {
  bool join_ok = true, meet_ok = true;
  std::string jw, mw;
  for (const Rat& m : grid) {
    if (join_ok && (t.join(m, 0) != m || t.join(0, m) != m)) {
      join_ok = false;
      jw = "at " + rat_str(m);
    }
    if (meet_ok && (t.meet(m, 1) != m || t.meet(1, m) != m)) {
      meet_ok = false;
      mw = "at " + rat_str(m);
    }
  }
  note(checks, all, "disjunctive-identity", join_ok, jw);
  note(checks, all, "conjunctive-identity", meet_ok, mw);
}

void check_isotone(const GradeTablePair& t, const std::vector<Rat>& grid,
                   std::vector<HypothesisCheck>& checks, bool& all) {
  bool join_ok = true, meet_ok = true;
  std::string jw, mw;
  for (const Rat& m : grid)
    for (const Rat& a : grid)
      for (const Rat& b : grid) {
        if (a > b) continue;
        if (join_ok && (t.join(m, a) > t.join(m, b) || t.join(a, m) > t.join(b, m))) {
          join_ok = false;
          jw = "at (" + rat_str(m) + "," + rat_str(a) + "<=" + rat_str(b) + ")";
        }
        if (meet_ok && (t.meet(m, a) > t.meet(m, b) || t.meet(a, m) > t.meet(b, m))) {
          meet_ok = false;
          mw = "at (" + rat_str(m) + "," + rat_str(a) + "<=" + rat_str(b) + ")";
        }
      }
  note(checks, all, "disjunctive-isotone", join_ok, jw);
  note(checks, all, "conjunctive-isotone", meet_ok, mw);
}

}  // namespace

BoundsTheoremReport verify_minmax_boundary(const GradeTablePair& tables,
                                           const std::vector<Rat>& grid) {
  BoundsTheoremReport rep;
  note(rep.hypotheses, rep.hypotheses_hold, "pointwise-evaluated", true, "");
  check_identities(tables, grid, rep.hypotheses, rep.hypotheses_hold);
  check_isotone(tables, grid, rep.hypotheses, rep.hypotheses_hold);

  for (const Rat& a : grid)
    for (const Rat& b : grid) {
      if (tables.meet(a, b) > std::min(a, b) || tables.join(a, b) < std::max(a, b)) {
        rep.bounds_hold = false;
        rep.witness = "at (" + rat_str(a) + "," + rat_str(b) + ")";
      }
    }
  rep.consistent = !rep.hypotheses_hold || rep.bounds_hold;
  return rep;
}

IdempotencyTheoremReport verify_idempotency_theorem(const GradeTablePair& tables,
                                                    const std::vector<Rat>& grid) {
  IdempotencyTheoremReport rep;
  note(rep.hypotheses, rep.hypotheses_hold, "pointwise-evaluated", true, "");
  note(rep.hypotheses, rep.hypotheses_hold, "boundary", tables.meet(0, 0) == 0 && tables.join(1, 1) == 1,
       "0∧0 or 1∨1 moved");
  check_identities(tables, grid, rep.hypotheses, rep.hypotheses_hold);

  bool dist_join = true, dist_meet = true;
  std::string djw, dmw;
  for (const Rat& m : grid)
    for (const Rat& n : grid)
      for (const Rat& p : grid) {
        if (dist_join &&
            tables.meet(m, tables.join(n, p)) != tables.join(tables.meet(m, n), tables.meet(m, p))) {
          dist_join = false;
          djw = "at (" + rat_str(m) + "," + rat_str(n) + "," + rat_str(p) + ")";
        }
        if (dist_meet &&
            tables.join(m, tables.meet(n, p)) != tables.meet(tables.join(m, n), tables.join(m, p))) {
          dist_meet = false;
          dmw = "at (" + rat_str(m) + "," + rat_str(n) + "," + rat_str(p) + ")";
        }
      }
  note(rep.hypotheses, rep.hypotheses_hold, "disjunctive-distributive", dist_join, djw);
  note(rep.hypotheses, rep.hypotheses_hold, "conjunctive-distributive", dist_meet, dmw);

  for (const Rat& m : grid)
    if (tables.join(m, m) != m || tables.meet(m, m) != m) {
      rep.idempotent = false;
      rep.witness = "at " + rat_str(m);
      break;
    }
  rep.consistent = !rep.hypotheses_hold || rep.idempotent;
  return rep;
}

MinmaxTheoremReport verify_minmax_theorem(const GradeTablePair& tables,
                                          const std::vector<Rat>& grid) {
  MinmaxTheoremReport rep;
  note(rep.hypotheses, rep.hypotheses_hold, "pointwise-evaluated", true, "");
  check_identities(tables, grid, rep.hypotheses, rep.hypotheses_hold);

  bool weak_idem = true;
  std::string ww;
  for (const Rat& m : grid)
    if (tables.meet(m, m) < m || tables.join(m, m) > m) {
      weak_idem = false;
      ww = "at " + rat_str(m) +
           (tables.join(m, m) > m ? " (m∨m=" + rat_str(tables.join(m, m)) + ")" : "");
      break;
    }
  note(rep.hypotheses, rep.hypotheses_hold, "weak-idempotent", weak_idem, ww);
  check_isotone(tables, grid, rep.hypotheses, rep.hypotheses_hold);

  for (const Rat& a : grid)
    for (const Rat& b : grid)
      if (tables.meet(a, b) != std::min(a, b) || tables.join(a, b) != std::max(a, b)) {
        rep.equals_minmax = false;
        rep.witness = "at (" + rat_str(a) + "," + rat_str(b) + ")";
      }
  rep.consistent = !rep.hypotheses_hold || rep.equals_minmax;
  return rep;
}

namespace {

// grid-valued tables for the exhaustive oracles, cell = grid index
struct SmallTable {
  int g = 0;
  std::array<int, 25> cell{};
  int at(int a, int b) const { return cell[static_cast<std::size_t>(a * g + b)]; }
  void set(int a, int b, int v) { cell[static_cast<std::size_t>(a * g + b)] = v; }
};

bool isotone(const SmallTable& t) {
  for (int m = 0; m < t.g; ++m)
    for (int a = 0; a < t.g; ++a)
      for (int b = a; b < t.g; ++b)
        if (t.at(m, a) > t.at(m, b) || t.at(a, m) > t.at(b, m)) return false;
  return true;
}

template <typename Fn>
void enumerate_tables(int g, const std::vector<std::pair<int, int>>& free_cells,
                      SmallTable& base, std::size_t pos, Fn&& visit) {
  if (pos == free_cells.size()) {
    visit(base);
    return;
  }
  auto [a, b] = free_cells[pos];
  for (int v = 0; v < g; ++v) {
    base.set(a, b, v);
    enumerate_tables(g, free_cells, base, pos + 1, visit);
  }
}

}  // namespace

MinmaxOracleResult minmax_uniqueness_oracle(const std::vector<Rat>& grid) {
  const int g = static_cast<int>(grid.size());
  if (g < 2 || g > 4) raise(errc::size_cap, "oracle grid must have 2..4 grades");
  std::vector<Rat> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() != 0 || sorted.back() != 1)
    raise(errc::out_of_range, "oracle grid must contain 0 and 1");

  MinmaxOracleResult res;
  std::vector<std::pair<int, int>> free_cells;
  for (int a = 1; a < g; ++a)
    for (int b = 1; b < g; ++b) free_cells.emplace_back(a, b);

  {  // join: identity row/column against 0 pinned, weak idempotency m∨m <= m
    SmallTable t;
    t.g = g;
    for (int m = 0; m < g; ++m) {
      t.set(m, 0, m);
      t.set(0, m, m);
    }
    SmallTable survivor;
    enumerate_tables(g, free_cells, t, 0, [&](const SmallTable& cand) {
      ++res.join_candidates;
      for (int m = 0; m < g; ++m)
        if (cand.at(m, m) > m) return;
      if (!isotone(cand)) return;
      ++res.join_survivors;
      survivor = cand;
    });
    bool is_max = res.join_survivors == 1;
    for (int a = 0; a < g && is_max; ++a)
      for (int b = 0; b < g && is_max; ++b) is_max = survivor.at(a, b) == std::max(a, b);
    res.join_survivor_is_max = is_max;
  }

  {  // meet: identity against 1 pinned, weak idempotency m∧m >= m
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < g - 1; ++a)
      for (int b = 0; b < g - 1; ++b) cells.emplace_back(a, b);
    SmallTable t;
    t.g = g;
    for (int m = 0; m < g; ++m) {
      t.set(m, g - 1, m);
      t.set(g - 1, m, m);
    }
    SmallTable survivor;
    enumerate_tables(g, cells, t, 0, [&](const SmallTable& cand) {
      ++res.meet_candidates;
      for (int m = 0; m < g; ++m)
        if (cand.at(m, m) < m) return;
      if (!isotone(cand)) return;
      ++res.meet_survivors;
      survivor = cand;
    });
    bool is_min = res.meet_survivors == 1;
    for (int a = 0; a < g && is_min; ++a)
      for (int b = 0; b < g && is_min; ++b) is_min = survivor.at(a, b) == std::min(a, b);
    res.meet_survivor_is_min = is_min;
  }
  return res;
}

IdempotencyOracleResult idempotency_exhaustive_oracle(const std::vector<Rat>& grid) {
  const int g = static_cast<int>(grid.size());
  if (g < 2 || g > 3) raise(errc::size_cap, "oracle grid must have 2..3 grades");
  std::vector<Rat> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() != 0 || sorted.back() != 1)
    raise(errc::out_of_range, "oracle grid must contain 0 and 1");

  IdempotencyOracleResult res;
  res.all_idempotent = true;

  // join tables: identity against 0 plus boundary 1∨1 = 1
  std::vector<std::pair<int, int>> join_free;
  for (int a = 1; a < g; ++a)
    for (int b = 1; b < g; ++b)
      if (!(a == g - 1 && b == g - 1)) join_free.emplace_back(a, b);
  SmallTable join_base;
  join_base.g = g;
  for (int m = 0; m < g; ++m) {
    join_base.set(m, 0, m);
    join_base.set(0, m, m);
  }
  join_base.set(g - 1, g - 1, g - 1);

  // meet tables: identity against 1 plus boundary 0∧0 = 0
  std::vector<std::pair<int, int>> meet_free;
  for (int a = 0; a < g - 1; ++a)
    for (int b = 0; b < g - 1; ++b)
      if (!(a == 0 && b == 0)) meet_free.emplace_back(a, b);
  SmallTable meet_base;
  meet_base.g = g;
  for (int m = 0; m < g; ++m) {
    meet_base.set(m, g - 1, m);
    meet_base.set(g - 1, m, m);
  }
  meet_base.set(0, 0, 0);

  std::vector<SmallTable> joins, meets;
  enumerate_tables(g, join_free, join_base, 0, [&](const SmallTable& t) { joins.push_back(t); });
  enumerate_tables(g, meet_free, meet_base, 0, [&](const SmallTable& t) { meets.push_back(t); });

  for (const auto& jt : joins)
    for (const auto& mt : meets) {
      ++res.pairs_checked;
      bool dist = true;
      for (int m = 0; m < g && dist; ++m)
        for (int n = 0; n < g && dist; ++n)
          for (int p = 0; p < g && dist; ++p) {
            if (mt.at(m, jt.at(n, p)) != jt.at(mt.at(m, n), mt.at(m, p))) dist = false;
            if (jt.at(m, mt.at(n, p)) != mt.at(jt.at(m, n), jt.at(m, p))) dist = false;
          }
      if (!dist) continue;
      ++res.pairs_satisfying;
      for (int m = 0; m < g; ++m)
        if (jt.at(m, m) != m || mt.at(m, m) != m) res.all_idempotent = false;
    }
  return res;
}

NegationIdempotencyReport verify_negation_idempotency(const FuzzyStructure& s) {
  if (s.source != FuzzyStructure::Source::family)
    raise(errc::not_closed, "fixed-point harness applies to pointwise-evaluated structures");

  NegationIdempotencyReport rep;
  for (std::size_t i = 0; i < s.fns.size() && !rep.fixed_point_found; ++i) {
    const auto& f = s.fns[i];
    const auto& nf = s.fns[static_cast<std::size_t>(s.negation[i])];
    for (int p = 0; p < f.points() && !rep.fixed_point_found; ++p)
      if (f.at(p) == nf.at(p) && f.at(p) > 0 && f.at(p) < 1) {
        rep.fixed_point_found = true;
        rep.fn_name = f.name;
        rep.point = f.universe[static_cast<std::size_t>(p)];
        rep.grade = f.at(p);
      }
  }

  rep.excluded_middle = s.excluded_middle();
  rep.non_contradiction = s.non_contradiction();
  for (std::size_t i = 0; i < s.fns.size(); ++i) {
    if (rep.join_idempotent &&
        !same_grades(s.join_fn(static_cast<int>(i), static_cast<int>(i)), s.fns[i])) {
      rep.join_idempotent = false;
      rep.witness = s.fns[i].name + "∨" + s.fns[i].name + " ≠ " + s.fns[i].name;
    }
    if (rep.meet_idempotent &&
        !same_grades(s.meet_fn(static_cast<int>(i), static_cast<int>(i)), s.fns[i]))
      rep.meet_idempotent = false;
  }

  rep.consistent = true;
  if (rep.fixed_point_found && rep.excluded_middle && rep.join_idempotent) rep.consistent = false;
  if (rep.fixed_point_found && rep.non_contradiction && rep.meet_idempotent)
    rep.consistent = false;
  return rep;
}

}  // namespace ortholat
