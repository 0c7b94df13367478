#include "ortholat/implication.hpp"

#include <algorithm>

#include "ortholat/error.hpp"
#include "ortholat/shapes.hpp"

namespace ortholat {

const char* impl_kind_name(ImplKind kind) {
  switch (kind) {
    case ImplKind::classical: return "classical";
    case ImplKind::sasaki: return "sasaki";
    case ImplKind::dishkant: return "dishkant";
    case ImplKind::kalmbach: return "kalmbach";
    case ImplKind::non_tollens: return "non-tollens";
    case ImplKind::relevance: return "relevance";
  }
  return "?";
}

ImplKind impl_kind_by_name(const std::string& name) {
  for (ImplKind k : kAllImplKinds)
    if (name == impl_kind_name(k)) return k;
  raise(errc::unknown_name, "implication kind '" + name + "'");
}

Implication build_implication(const Lattice& lat, const UnaryMap& neg, ImplKind kind) {
  if (!lat.bounded()) raise(errc::unbounded, "implication tables need a bounded lattice");
  if (static_cast<int>(neg.size()) != lat.size())
    raise(errc::partial_map, "negation not total on carrier");

  const int n = lat.size();
  auto ng = [&](int x) { return neg[static_cast<std::size_t>(x)]; };
  auto mt = [&](int a, int b) { return lat.meet(a, b); };
  auto jn = [&](int a, int b) { return lat.join(a, b); };

  Implication imp;
  imp.n = n;
  imp.from_formula = true;
  imp.kind = kind;
  imp.source = impl_kind_name(kind);
  imp.table.resize(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = -1;
      switch (kind) {
        case ImplKind::classical: v = jn(ng(x), y); break;
        case ImplKind::sasaki: v = jn(ng(x), mt(x, y)); break;
        case ImplKind::dishkant: v = jn(y, mt(ng(x), ng(y))); break;
        case ImplKind::kalmbach:
          v = jn(jn(mt(ng(x), y), mt(ng(x), ng(y))), mt(x, jn(ng(x), y)));
          break;
        case ImplKind::non_tollens:
          v = jn(jn(mt(ng(x), y), mt(x, y)), mt(jn(ng(x), y), ng(y)));
          break;
        case ImplKind::relevance:
          v = jn(jn(mt(ng(x), y), mt(x, y)), mt(ng(x), ng(y)));
          break;
      }
      imp.table[static_cast<std::size_t>(x * n + y)] = v;
    }
  return imp;
}

ImplicationVerdict validate_implication(const Lattice& lat, const UnaryMap& neg,
                                        const Implication& imp) {
  const int n = lat.size();
  if (imp.n != n || static_cast<int>(imp.table.size()) != n * n)
    raise(errc::partial_map, "implication table size mismatch");

  ImplicationVerdict v;
  auto ng = [&](int x) { return neg[static_cast<std::size_t>(x)]; };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = imp.at(x, y);
      if (lat.leq(x, y)) {
        if (v.weak_entailment && !lat.leq(lat.join(x, y), xy)) {
          v.weak_entailment = false;
          v.weak_entailment_witness = {false, x, y};
        }
        if (v.strong_entailment && xy != lat.top()) {
          v.strong_entailment = false;
          v.strong_entailment_witness = {false, x, y};
        }
      }
      if (v.weak_mp && !lat.leq(lat.meet(x, xy), lat.join(ng(x), y))) {
        v.weak_mp = false;
        v.weak_mp_witness = {false, x, y};
      }
      if (v.strong_mp && !lat.leq(lat.meet(x, xy), y)) {
        v.strong_mp = false;
        v.strong_mp_witness = {false, x, y};
      }
      if (v.entailment_converse && lat.leq(lat.join(x, y), xy) && !lat.leq(x, y)) {
        v.entailment_converse = false;
        v.entailment_converse_witness = {false, x, y};
      }
    }

  // structural: strong flags imply the weak ones
  if ((v.strong_entailment && !v.weak_entailment) || (v.strong_mp && !v.weak_mp))
    raise(errc::internal_disagreement, "strong contract without the weak one");
  // with strong modus ponens the entailment converse is a theorem
  if (v.strong_mp && v.weak_entailment && !v.entailment_converse)
    raise(errc::internal_disagreement, "entailment converse failed under strong modus ponens");
  return v;
}

LogicStructure make_logic(std::string name, Lattice lattice, UnaryMap negation,
                          Implication implication) {
  LogicStructure logic;
  logic.name = std::move(name);
  logic.lattice = std::move(lattice);
  logic.negation = std::move(negation);
  logic.implication = std::move(implication);
  logic.negation_class = classify_negation(logic.lattice, logic.negation);
  logic.verdict = validate_implication(logic.lattice, logic.negation, logic.implication);

  const auto& nc = logic.negation_class;
  LogicClass& lc = logic.logic_class;
  lc.logic = nc.minimal;
  lc.fuzzy = nc.fuzzy;
  lc.intuitionistic = nc.intuitionistic;
  lc.de_morgan = nc.de_morgan;
  lc.kleene = nc.kleene;
  lc.ortho = nc.ortho;
  if (nc.ortho) {
    bool distributive = is_distributive(logic.lattice).distributive;
    bool complemented =
        complement_class(logic.lattice).kind != ComplementKind::non_complemented;
    lc.boolean_logic = distributive && complemented;
  }
  return logic;
}

namespace {

Implication table_from_labels(const Lattice& lat, const std::string& source,
                              const std::vector<std::vector<std::string>>& rows,
                              const std::vector<std::string>& order) {
  const int n = lat.size();
  Implication imp;
  imp.n = n;
  imp.from_formula = false;
  imp.source = source;
  imp.table.assign(static_cast<std::size_t>(n * n), -1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int x = lat.index_of(order[static_cast<std::size_t>(r)]);
      int y = lat.index_of(order[static_cast<std::size_t>(c)]);
      int v = lat.index_of(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      imp.table[static_cast<std::size_t>(x * n + y)] = v;
    }
  return imp;
}

UnaryMap map_from_pairs(const Lattice& lat,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  UnaryMap m(static_cast<std::size_t>(lat.size()), -1);
  for (const auto& [a, b] : pairs) m[static_cast<std::size_t>(lat.index_of(a))] = lat.index_of(b);
  return m;
}

}  // namespace

const char* builtin_logic_name(BuiltinLogic logic) {
  switch (logic) {
    case BuiltinLogic::classical2: return "classical2";
    case BuiltinLogic::kleene3: return "kleene3";
    case BuiltinLogic::lukasiewicz3: return "lukasiewicz3";
    case BuiltinLogic::rm3: return "rm3";
    case BuiltinLogic::heyting3: return "heyting3";
    case BuiltinLogic::lukasiewicz5: return "lukasiewicz5";
    case BuiltinLogic::boolean4: return "boolean4";
    case BuiltinLogic::bn4: return "bn4";
    case BuiltinLogic::six_element_c15: return "six-element";
  }
  return "?";
}

std::vector<BuiltinLogic> all_builtin_logics() {
  return {BuiltinLogic::classical2, BuiltinLogic::kleene3,     BuiltinLogic::lukasiewicz3,
          BuiltinLogic::rm3,        BuiltinLogic::heyting3,    BuiltinLogic::lukasiewicz5,
          BuiltinLogic::boolean4,   BuiltinLogic::bn4,         BuiltinLogic::six_element_c15};
}

BuiltinLogic builtin_logic_by_name(const std::string& name) {
  for (BuiltinLogic b : all_builtin_logics())
    if (name == builtin_logic_name(b)) return b;
  raise(errc::unknown_name, "builtin logic '" + name + "'");
}

LogicStructure builtin_logic(BuiltinLogic which) {
  switch (which) {
    case BuiltinLogic::classical2: {
      Lattice lat = shapes::chain({"0", "1"});
      UnaryMap neg = map_from_pairs(lat, {{"0", "1"}, {"1", "0"}});
      Implication imp = table_from_labels(lat, "classical2",
                                          {{"1", "0"},
                                           {"1", "1"}},
                                          {"1", "0"});
      return make_logic("classical2", lat, neg, imp);
    }
    case BuiltinLogic::kleene3: {
      Lattice lat = shapes::chain({"0", "n", "1"});
      UnaryMap neg = map_from_pairs(lat, {{"0", "1"}, {"n", "n"}, {"1", "0"}});
      Implication imp = table_from_labels(lat, "kleene3",
                                          {{"1", "n", "0"},
                                           {"1", "n", "n"},
                                           {"1", "1", "1"}},
                                          {"1", "n", "0"});
      return make_logic("kleene3", lat, neg, imp);
    }
    case BuiltinLogic::lukasiewicz3: {
      Lattice lat = shapes::chain({"0", "n", "1"});
      UnaryMap neg = map_from_pairs(lat, {{"0", "1"}, {"n", "n"}, {"1", "0"}});
      Implication imp = table_from_labels(lat, "lukasiewicz3",
                                          {{"1", "n", "0"},
                                           {"1", "1", "n"},
                                           {"1", "1", "1"}},
                                          {"1", "n", "0"});
      return make_logic("lukasiewicz3", lat, neg, imp);
    }
    case BuiltinLogic::rm3: {
      Lattice lat = shapes::chain({"0", "n", "1"});
      UnaryMap neg = map_from_pairs(lat, {{"0", "1"}, {"n", "n"}, {"1", "0"}});
      Implication imp = table_from_labels(lat, "rm3",
                                          {{"1", "0", "0"},
                                           {"1", "n", "0"},
                                           {"1", "1", "1"}},
                                          {"1", "n", "0"});
      return make_logic("rm3", lat, neg, imp);
    }
    case BuiltinLogic::heyting3: {
      Lattice lat = shapes::chain({"0", "n", "1"});
      UnaryMap neg = map_from_pairs(lat, {{"0", "1"}, {"n", "0"}, {"1", "0"}});
      Implication imp = table_from_labels(lat, "heyting3",
                                          {{"1", "n", "0"},
                                           {"1", "1", "0"},
                                           {"1", "1", "1"}},
                                          {"1", "n", "0"});
      return make_logic("heyting3", lat, neg, imp);
    }
    case BuiltinLogic::lukasiewicz5: {
      // five-grade chain 0 < m < n < p < 1 at 0, 1/4, 1/2, 3/4, 1; the arrow
      // is the five-valued version of the three-valued one: 1 on comparable
      // pairs, ¬x ∨ y below the diagonal
      Lattice lat = shapes::chain({"0", "m", "n", "p", "1"});
      UnaryMap neg = map_from_pairs(
          lat, {{"0", "1"}, {"m", "p"}, {"n", "n"}, {"p", "m"}, {"1", "0"}});
      const int n = lat.size();
      Implication imp;
      imp.n = n;
      imp.from_formula = false;
      imp.source = "lukasiewicz5";
      imp.table.resize(static_cast<std::size_t>(n * n));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          imp.table[static_cast<std::size_t>(x * n + y)] =
              x <= y ? n - 1 : lat.join(neg[static_cast<std::size_t>(x)], y);
      return make_logic("lukasiewicz5", lat, neg, imp);
    }
    case BuiltinLogic::boolean4: {
      Lattice lat = shapes::m2();
      UnaryMap neg = map_from_pairs(lat, {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"1", "0"}});
      Implication imp = build_implication(lat, neg, ImplKind::classical);
      imp.from_formula = false;
      imp.source = "boolean4";
      return make_logic("boolean4", lat, neg, imp);
    }
    case BuiltinLogic::bn4: {
      Lattice lat = Lattice::from_poset(Poset::from_covers(
          {"0", "n", "b", "1"}, {{"0", "n"}, {"0", "b"}, {"n", "1"}, {"b", "1"}}));
      UnaryMap neg = map_from_pairs(lat, {{"0", "1"}, {"n", "n"}, {"b", "b"}, {"1", "0"}});
      Implication imp = table_from_labels(lat, "bn4",
                                          {{"1", "n", "0", "0"},
                                           {"1", "1", "n", "n"},
                                           {"1", "n", "b", "0"},
                                           {"1", "1", "1", "1"}},
                                          {"1", "n", "b", "0"});
      return make_logic("bn4", lat, neg, imp);
    }
    case BuiltinLogic::six_element_c15: {
      Lattice lat = shapes::six_element_kleene();
      UnaryMap neg = shapes::six_element_kleene_negation(lat);
      Implication imp = table_from_labels(lat, "six-element",
                                          {{"1", "p", "q", "m", "n", "0"},
                                           {"1", "1", "q", "p", "q", "n"},
                                           {"1", "p", "1", "m", "p", "m"},
                                           {"1", "1", "q", "1", "q", "q"},
                                           {"1", "1", "1", "p", "1", "p"},
                                           {"1", "1", "1", "1", "1", "1"}},
                                          {"1", "p", "q", "m", "n", "0"});
      return make_logic("six-element", lat, neg, imp);
    }
  }
  raise(errc::unknown_name, "builtin logic");
}

ImplicationTableReport implication_table_report(const Lattice& lat, const UnaryMap& neg) {
  auto cls = classify_negation(lat, neg);
  if (!cls.ortho) raise(errc::not_ortho, "six-implication report needs an ortho negation");

  ImplicationTableReport rep;
  for (ImplKind kind : kAllImplKinds) {
    Implication imp = build_implication(lat, neg, kind);
    ImplicationVerdict verdict = validate_implication(lat, neg, imp);
    rep.entries.push_back({kind, std::move(imp), verdict});
  }

  const Implication& sasaki = rep.entries[1].implication;
  const Implication& dishkant = rep.entries[2].implication;
  const Implication& kalmbach = rep.entries[3].implication;
  const Implication& tollens = rep.entries[4].implication;
  auto ng = [&](int x) { return neg[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < lat.size() && rep.duality_ok; ++x)
    for (int y = 0; y < lat.size() && rep.duality_ok; ++y) {
      if (dishkant.at(x, y) != sasaki.at(ng(y), ng(x))) rep.duality_ok = false;
      if (tollens.at(x, y) != kalmbach.at(ng(y), ng(x))) rep.duality_ok = false;
    }

  for (const auto& e : rep.entries)
    if (e.implication.table != rep.entries[0].implication.table) rep.all_tables_equal = false;
  return rep;
}

std::vector<std::pair<int, int>> diff_against_classical(const Lattice& lat, const UnaryMap& neg,
                                                        const Implication& imp) {
  Implication classical = build_implication(lat, neg, ImplKind::classical);
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y)
      if (imp.at(x, y) != classical.at(x, y)) cells.emplace_back(x, y);
  return cells;
}

}  // namespace ortholat
