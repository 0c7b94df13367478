#include <random>

#include "doctest.h"
#include "ortholat/census.hpp"
#include "ortholat/error.hpp"
#include "ortholat/implication.hpp"
#include "ortholat/shapes.hpp"

using namespace ortholat;

namespace {

int at(const LogicStructure& logic, const char* x, const char* y) {
  return logic.implication.at(logic.lattice.index_of(x), logic.lattice.index_of(y));
}

std::string cell(const LogicStructure& logic, const char* x, const char* y) {
  return logic.lattice.label(at(logic, x, y));
}

}  // namespace

TEST_CASE("all six formulas coincide on the Boolean square") {
  Lattice m2 = shapes::m2();
  UnaryMap perp(static_cast<std::size_t>(m2.size()));
  perp[static_cast<std::size_t>(m2.index_of("0"))] = m2.index_of("1");
  perp[static_cast<std::size_t>(m2.index_of("1"))] = m2.index_of("0");
  perp[static_cast<std::size_t>(m2.index_of("a"))] = m2.index_of("b");
  perp[static_cast<std::size_t>(m2.index_of("b"))] = m2.index_of("a");

  Implication classical = build_implication(m2, perp, ImplKind::classical);
  for (ImplKind kind : kAllImplKinds)
    CHECK(build_implication(m2, perp, kind).table == classical.table);
}

TEST_CASE("two-chain classical implication fixes the bottom row") {
  Lattice l2 = shapes::chain({"0", "1"});
  UnaryMap swap{0, 0};
  swap[static_cast<std::size_t>(l2.index_of("0"))] = l2.index_of("1");
  swap[static_cast<std::size_t>(l2.index_of("1"))] = l2.index_of("0");
  Implication imp = build_implication(l2, swap, ImplKind::classical);
  CHECK(imp.at(l2.index_of("0"), l2.index_of("0")) == l2.index_of("1"));
}

TEST_CASE("duality identities on ortho-negated lattices") {
  struct Case {
    Lattice lat;
    UnaryMap perp;
  };
  std::vector<Case> cases;
  cases.push_back({shapes::o6(), {}});
  cases.back().perp = shapes::o6_perp(cases.back().lat);
  cases.push_back({shapes::o8(), {}});
  cases.back().perp = shapes::o8_perp(cases.back().lat);
  cases.push_back({shapes::boolean_cube(3), {}});
  cases.back().perp = shapes::cube_complement(cases.back().lat);
  cases.push_back({shapes::mo(2), {}});
  cases.back().perp = shapes::mo_perp(cases.back().lat);

  for (const auto& c : cases) {
    Implication sasaki = build_implication(c.lat, c.perp, ImplKind::sasaki);
    Implication dishkant = build_implication(c.lat, c.perp, ImplKind::dishkant);
    Implication kalmbach = build_implication(c.lat, c.perp, ImplKind::kalmbach);
    Implication tollens = build_implication(c.lat, c.perp, ImplKind::non_tollens);
    auto ng = [&](int x) { return c.perp[static_cast<std::size_t>(x)]; };
    for (int x = 0; x < c.lat.size(); ++x)
      for (int y = 0; y < c.lat.size(); ++y) {
        CHECK(dishkant.at(x, y) == sasaki.at(ng(y), ng(x)));
        CHECK(tollens.at(x, y) == kalmbach.at(ng(y), ng(x)));
      }
  }
}

TEST_CASE("hexagon classical implication: strong entailment, weak modus ponens only") {
  Lattice lat = shapes::o6();
  UnaryMap perp = shapes::o6_perp(lat);
  Implication imp = build_implication(lat, perp, ImplKind::classical);
  auto v = validate_implication(lat, perp, imp);
  CHECK(v.strong_entailment);
  CHECK(v.weak_entailment);
  CHECK(v.weak_mp);
  CHECK_FALSE(v.strong_mp);
  // the witness really breaks x ∧ (x→y) <= y
  int x = v.strong_mp_witness.x, y = v.strong_mp_witness.y;
  REQUIRE(x >= 0);
  CHECK_FALSE(lat.leq(lat.meet(x, imp.at(x, y)), y));
  // the entailment converse fails on the hexagon for the classical arrow
  CHECK_FALSE(v.entailment_converse);
}

TEST_CASE("named-logic contract flags") {
  auto flags = [](BuiltinLogic b) {
    auto logic = builtin_logic(b);
    return logic.verdict;
  };
  auto kleene = flags(BuiltinLogic::kleene3);
  CHECK(kleene.weak_entailment);
  CHECK_FALSE(kleene.strong_entailment);
  CHECK(kleene.weak_mp);
  CHECK_FALSE(kleene.strong_mp);

  auto luk = flags(BuiltinLogic::lukasiewicz3);
  CHECK(luk.strong_entailment);
  CHECK_FALSE(luk.strong_mp);
  CHECK(luk.weak_mp);

  auto rm3 = flags(BuiltinLogic::rm3);
  CHECK_FALSE(rm3.strong_entailment);
  CHECK(rm3.weak_entailment);
  CHECK(rm3.strong_mp);

  auto heyting = flags(BuiltinLogic::heyting3);
  CHECK(heyting.strong_entailment);
  CHECK(heyting.strong_mp);

  auto boolean4 = flags(BuiltinLogic::boolean4);
  CHECK(boolean4.strong_entailment);
  CHECK(boolean4.strong_mp);

  auto bn4 = flags(BuiltinLogic::bn4);
  CHECK_FALSE(bn4.strong_entailment);
  CHECK_FALSE(bn4.strong_mp);
  CHECK(bn4.weak_entailment);
  CHECK(bn4.weak_mp);

  auto luk5 = flags(BuiltinLogic::lukasiewicz5);
  CHECK(luk5.strong_entailment);
  CHECK_FALSE(luk5.strong_mp);
  CHECK(luk5.weak_mp);

  auto c2 = flags(BuiltinLogic::classical2);
  CHECK(c2.strong_entailment);
  CHECK(c2.strong_mp);
}

TEST_CASE("three-valued tables pin the cited cells") {
  auto kleene = builtin_logic(BuiltinLogic::kleene3);
  CHECK(cell(kleene, "0", "n") == "1");
  CHECK(cell(kleene, "n", "0") == "n");
  CHECK(cell(kleene, "1", "n") == "n");
  CHECK(cell(kleene, "n", "n") == "n");
  // the stored data coincides with ¬x∨y, its defining formula
  CHECK(kleene.implication.table ==
        build_implication(kleene.lattice, kleene.negation, ImplKind::classical).table);

  auto luk = builtin_logic(BuiltinLogic::lukasiewicz3);
  int diffs = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (luk.implication.at(x, y) != kleene.implication.at(x, y)) ++diffs;
  CHECK(diffs == 1);
  CHECK(cell(luk, "n", "n") == "1");
}

TEST_CASE("four-valued tables") {
  auto boolean4 = builtin_logic(BuiltinLogic::boolean4);
  Implication classical =
      build_implication(boolean4.lattice, boolean4.negation, ImplKind::classical);
  CHECK(boolean4.implication.table == classical.table);

  auto bn4 = builtin_logic(BuiltinLogic::bn4);
  CHECK(cell(bn4, "n", "n") == "1");
  CHECK(cell(bn4, "b", "b") == "b");
  CHECK(cell(bn4, "1", "b") == "0");
  CHECK(cell(bn4, "b", "0") == "0");
}

TEST_CASE("five-valued chain logic") {
  auto luk5 = builtin_logic(BuiltinLogic::lukasiewicz5);
  CHECK(cell(luk5, "p", "0") == "m");
  CHECK(cell(luk5, "n", "0") == "n");
  CHECK(cell(luk5, "m", "0") == "p");
  CHECK(cell(luk5, "1", "m") == "m");
  CHECK(cell(luk5, "n", "n") == "1");
  // the arrow lifts exactly the comparable pairs the classical one leaves
  // below the top: six cells on or above the diagonal
  auto cells = diff_against_classical(luk5.lattice, luk5.negation, luk5.implication);
  CHECK(cells.size() == 6);
  for (auto [x, y] : cells) CHECK(luk5.lattice.leq(x, y));
}

TEST_CASE("six-element logic: strong entailment with four modus-ponens failures") {
  auto logic = builtin_logic(BuiltinLogic::six_element_c15);
  CHECK(logic.verdict.strong_entailment);
  CHECK(logic.verdict.weak_mp);
  CHECK_FALSE(logic.verdict.strong_mp);
  const Lattice& lat = logic.lattice;
  for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"p", "m"}, {"n", "m"}, {"p", "0"}, {"n", "0"}}) {
    int xi = lat.index_of(x), yi = lat.index_of(y);
    CHECK_FALSE(lat.leq(lat.meet(xi, logic.implication.at(xi, yi)), yi));
  }
}

TEST_CASE("logic classification follows the negation class") {
  CHECK(builtin_logic(BuiltinLogic::kleene3).logic_class.kleene);
  CHECK(builtin_logic(BuiltinLogic::lukasiewicz3).logic_class.kleene);
  CHECK(builtin_logic(BuiltinLogic::rm3).logic_class.kleene);
  CHECK(builtin_logic(BuiltinLogic::lukasiewicz5).logic_class.kleene);
  auto heyting = builtin_logic(BuiltinLogic::heyting3);
  CHECK(heyting.logic_class.intuitionistic);
  CHECK(heyting.logic_class.fuzzy);
  CHECK_FALSE(heyting.logic_class.de_morgan);
  CHECK(builtin_logic(BuiltinLogic::boolean4).logic_class.boolean_logic);
  CHECK(builtin_logic(BuiltinLogic::classical2).logic_class.boolean_logic);
  auto bn4 = builtin_logic(BuiltinLogic::bn4);
  CHECK(bn4.logic_class.de_morgan);
  CHECK_FALSE(bn4.logic_class.kleene);
  CHECK(builtin_logic(BuiltinLogic::six_element_c15).logic_class.kleene);
}

TEST_CASE("diff against the classical arrow") {
  auto luk = builtin_logic(BuiltinLogic::lukasiewicz3);
  auto cells = diff_against_classical(luk.lattice, luk.negation, luk.implication);
  REQUIRE(cells.size() == 1);
  CHECK(luk.lattice.label(cells[0].first) == "n");
  CHECK(luk.lattice.label(cells[0].second) == "n");

  // the rm3 arrow differs from ¬x∨y at exactly two cells; at (1,0) both give 0
  auto rm3 = builtin_logic(BuiltinLogic::rm3);
  auto rm3_cells = diff_against_classical(rm3.lattice, rm3.negation, rm3.implication);
  CHECK(rm3_cells.size() == 2);
}

TEST_CASE("six-implication report on ortho lattices") {
  SUBCASE("hexagon") {
    Lattice lat = shapes::o6();
    auto rep = implication_table_report(lat, shapes::o6_perp(lat));
    REQUIRE(rep.entries.size() == 6);
    CHECK(rep.duality_ok);
    for (const auto& e : rep.entries) {
      CHECK(e.verdict.strong_entailment);
      CHECK(e.verdict.weak_mp);
      CHECK_FALSE(e.verdict.strong_mp);
    }
    CHECK_FALSE(rep.all_tables_equal);
  }
  SUBCASE("cube: all six tables equal") {
    Lattice cube = shapes::boolean_cube(3);
    auto rep = implication_table_report(cube, shapes::cube_complement(cube));
    CHECK(rep.all_tables_equal);
    for (const auto& e : rep.entries) {
      CHECK(e.verdict.strong_entailment);
      CHECK(e.verdict.strong_mp);
    }
  }
  SUBCASE("needs an ortho negation") {
    auto kleene = builtin_logic(BuiltinLogic::kleene3);
    CHECK_THROWS_AS(implication_table_report(kleene.lattice, kleene.negation), error);
  }
}

TEST_CASE("all six tables coincide on every Boolean lattice up to sixteen elements") {
  for (int k = 0; k <= 4; ++k) {
    Lattice cube = shapes::boolean_cube(k);
    UnaryMap perp = shapes::cube_complement(cube);
    Implication classical = build_implication(cube, perp, ImplKind::classical);
    for (ImplKind kind : kAllImplKinds)
      CHECK(build_implication(cube, perp, kind).table == classical.table);
  }
}

TEST_CASE("duality identities hold for every census orthocomplementation") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : enumerate_lattices(n))
      for (const auto& perp : find_orthocomplementations(c.lattice)) {
        auto rep = implication_table_report(c.lattice, perp);
        CHECK(rep.duality_ok);
        for (const auto& e : rep.entries) {
          // includes relevance: for x <= y its value is ¬(x∨¬y) ∨ (x∨¬y) = 1
          CHECK(e.verdict.strong_entailment);
          CHECK(e.verdict.weak_mp);
        }
      }
}

TEST_CASE("random tables keep the verdict invariants") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    Lattice lat = trial % 2 ? shapes::o6() : shapes::m2();
    UnaryMap neg(static_cast<std::size_t>(lat.size()));
    for (int i = 0; i < lat.size(); ++i)
      neg[static_cast<std::size_t>(i)] = static_cast<int>(rng() % lat.size());
    Implication imp;
    imp.n = lat.size();
    imp.source = "random";
    imp.table.resize(static_cast<std::size_t>(lat.size() * lat.size()));
    for (auto& cell : imp.table) cell = static_cast<int>(rng() % lat.size());
    auto v = validate_implication(lat, neg, imp);
    if (v.strong_entailment) CHECK(v.weak_entailment);
    if (v.strong_mp) CHECK(v.weak_mp);
    if (v.strong_mp && v.weak_entailment) CHECK(v.entailment_converse);
  }
}
