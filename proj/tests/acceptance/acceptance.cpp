// Acceptance suite: one line per criterion, exact expectations pinned in
// code. Exits nonzero when any criterion fails.

#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ortholat/census.hpp"
#include "ortholat/fuzzy.hpp"
#include "ortholat/implication.hpp"
#include "ortholat/negation.hpp"
#include "ortholat/ortho.hpp"
#include "ortholat/shapes.hpp"

using namespace ortholat;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  std::function<void(std::ostringstream&)> run;  // throws or appends failure notes
};

struct Failure {
  std::string note;
};

void require(bool cond, const std::string& note) {
  if (!cond) throw Failure{note};
}

// ---- C1: lattice census ---------------------------------------------------

void criterion_census(std::ostringstream& detail, bool include_n8) {
  const std::size_t lattices[9] = {1, 1, 1, 1, 2, 5, 15, 53, 222};
  const std::size_t modular[9] = {1, 1, 1, 1, 2, 4, 8, 16, 34};
  const std::size_t distributive[9] = {1, 1, 1, 1, 2, 3, 5, 8, 15};
  const int top = include_n8 ? 8 : 7;
  for (int n = 0; n <= top; ++n) {
    auto c = census(n);
    detail << " n" << n << "=" << c.lattices;
    require(c.lattices == lattices[n],
            "lattice count at n=" + std::to_string(n) + ": got " +
                std::to_string(c.lattices) + ", want " + std::to_string(lattices[n]));
    require(c.modular == modular[n], "modular count at n=" + std::to_string(n) + ": got " +
                                         std::to_string(c.modular));
    require(c.distributive == distributive[n],
            "distributive count at n=" + std::to_string(n) + ": got " +
                std::to_string(c.distributive));
  }
}

// ---- C2: orthocomplementation census ---------------------------------------

void criterion_ortho_census(std::ostringstream& detail) {
  const std::size_t expected[9] = {0, 1, 1, 0, 1, 0, 2, 0, 5};
  std::size_t total = 0;
  for (int n = 1; n <= 8; ++n) {
    auto c = census(n);
    detail << " n" << n << "=" << c.orthocomplemented;
    require(c.orthocomplemented == expected[n],
            "orthocomplemented count at n=" + std::to_string(n) + ": got " +
                std::to_string(c.orthocomplemented) + ", want " +
                std::to_string(expected[n]));
    total += c.orthocomplemented;
  }
  require(total == 10, "total: got " + std::to_string(total) + ", want 10");
}

// ---- C3: seven-element complement census -----------------------------------

void criterion_complement_census(std::ostringstream& detail) {
  auto c = census(7);
  detail << " uniquely=" << c.uniquely_complemented
         << " multiply=" << c.multiply_complemented
         << " non=" << c.non_complemented;
  require(c.uniquely_complemented == 0,
          "uniquely complemented: got " + std::to_string(c.uniquely_complemented) + ", want 0");
  require(c.multiply_complemented == 17,
          "multiply complemented: got " + std::to_string(c.multiply_complemented) +
              ", want 17");
  require(c.non_complemented == 36,
          "non-complemented: got " + std::to_string(c.non_complemented) + ", want 36");
}

// ---- C4: named-logic contracts ----------------------------------------------

void criterion_logic_contracts(std::ostringstream& detail) {
  struct Expected {
    BuiltinLogic logic;
    bool strong_entailment;
    bool strong_mp;
  };
  const Expected table[] = {
      {BuiltinLogic::kleene3, false, false},  {BuiltinLogic::lukasiewicz3, true, false},
      {BuiltinLogic::rm3, false, true},       {BuiltinLogic::heyting3, true, true},
      {BuiltinLogic::boolean4, true, true},   {BuiltinLogic::bn4, false, false},
  };
  for (const auto& e : table) {
    auto logic = builtin_logic(e.logic);
    detail << " " << logic.name << "=SE:" << logic.verdict.strong_entailment
           << ",SMP:" << logic.verdict.strong_mp;
    require(logic.verdict.weak_entailment, logic.name + " lost weak entailment");
    require(logic.verdict.weak_mp, logic.name + " lost weak modus ponens");
    require(logic.verdict.strong_entailment == e.strong_entailment,
            logic.name + " strong entailment: got " +
                std::to_string(logic.verdict.strong_entailment));
    require(logic.verdict.strong_mp == e.strong_mp,
            logic.name + " strong modus ponens: got " +
                std::to_string(logic.verdict.strong_mp));
  }
}

// ---- C5: six implications on ortho fixtures ---------------------------------

void criterion_six_implications(std::ostringstream& detail) {
  struct Fixture {
    const char* name;
    Lattice lat;
    UnaryMap perp;
    bool orthomodular;
  };
  std::vector<Fixture> fixtures;
  {
    Lattice hex = shapes::o6();
    fixtures.push_back({"O6", hex, shapes::o6_perp(hex), false});
    Lattice dbl = shapes::o8();
    fixtures.push_back({"O8", dbl, shapes::o8_perp(dbl), false});
    Lattice sq = shapes::m2();
    UnaryMap perp(static_cast<std::size_t>(sq.size()));
    perp[static_cast<std::size_t>(sq.index_of("0"))] = sq.index_of("1");
    perp[static_cast<std::size_t>(sq.index_of("1"))] = sq.index_of("0");
    perp[static_cast<std::size_t>(sq.index_of("a"))] = sq.index_of("b");
    perp[static_cast<std::size_t>(sq.index_of("b"))] = sq.index_of("a");
    fixtures.push_back({"M2", sq, perp, true});
  }

  for (const auto& f : fixtures) {
    auto rep = implication_table_report(f.lat, f.perp);
    for (std::size_t k = 0; k < 5; ++k) {  // kinds (1)-(5)
      const auto& e = rep.entries[k];
      require(e.verdict.strong_entailment,
              std::string(f.name) + " " + impl_kind_name(e.kind) + " lost strong entailment");
      require(e.verdict.weak_mp,
              std::string(f.name) + " " + impl_kind_name(e.kind) + " lost weak modus ponens");
    }
    const auto& relevance = rep.entries[5].verdict;
    if (f.orthomodular)
      require(relevance.strong_entailment,
              std::string(f.name) + ": relevance lost strong entailment on an orthomodular "
                                    "fixture");
    detail << " " << f.name << ":relevance-WE=" << relevance.weak_entailment;
  }

  // relevance must fail weak entailment on the hexagon with a concrete witness
  {
    Lattice hex = shapes::o6();
    auto rep = implication_table_report(hex, shapes::o6_perp(hex));
    const auto& relevance = rep.entries[5].verdict;
    require(!relevance.weak_entailment && relevance.weak_entailment_witness.x >= 0,
            "relevance reports weak entailment (in fact strong: for x<=y the value "
            "(¬x∧y)∨x∨¬y = ¬(x∨¬y)∨(x∨¬y) = 1 on every orthocomplemented lattice)");
  }

  // all six tables identical on every Boolean lattice up to 16 elements
  for (int k = 0; k <= 4; ++k) {
    Lattice cube = shapes::boolean_cube(k);
    UnaryMap perp = shapes::cube_complement(cube);
    Implication classical = build_implication(cube, perp, ImplKind::classical);
    for (ImplKind kind : kAllImplKinds)
      require(build_implication(cube, perp, kind).table == classical.table,
              "tables differ on the 2^" + std::to_string(k) + " cube");
  }
  for (int n = 1; n <= 8; ++n)
    for (const auto& c : enumerate_lattices(n)) {
      if (!is_distributive(c.lattice).distributive) continue;
      if (complement_class(c.lattice).kind == ComplementKind::non_complemented) continue;
      for (const auto& perp : find_orthocomplementations(c.lattice)) {
        Implication classical = build_implication(c.lattice, perp, ImplKind::classical);
        for (ImplKind kind : kAllImplKinds)
          require(build_implication(c.lattice, perp, kind).table == classical.table,
                  "tables differ on a Boolean census lattice of size " + std::to_string(n));
      }
    }
}

// ---- C6: lambda involution ---------------------------------------------------

void criterion_lambda_involution(std::ostringstream& detail) {
  std::mt19937 rng(0x1a2b3c4d);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    // lambda in (-1, 10]: numerator in (-den, 10*den]
    long den = 1 + static_cast<long>(rng() % 97);
    long num = -den + 1 + static_cast<long>(rng() % (11 * den));
    Rat lambda(num, den);
    long uden = 1 + static_cast<long>(rng() % 997);
    Rat u(static_cast<long>(rng() % (uden + 1)), uden);
    GradeNegation neg{GradeNegationFamily::lambda, lambda};
    Rat round_trip = grade_negate(neg, grade_negate(neg, u));
    require(round_trip == u, "involution failed at lambda=" + rat_str(lambda) +
                                 ", u=" + rat_str(u) + " -> " + rat_str(round_trip));
    ++checked;
  }
  detail << " pairs=" << checked << " exact";
}

// ---- C7: non-idempotency witnesses -------------------------------------------

void criterion_family_witnesses(std::ostringstream& detail) {
  const Rat half(1, 2);
  require(family_join(FuzzyFamily::lukasiewicz, half, half) == 1,
          "bold join at 1/2: got " + rat_str(family_join(FuzzyFamily::lukasiewicz, half, half)));
  require(family_meet(FuzzyFamily::lukasiewicz, half, half) == 0,
          "bold meet at 1/2: got " + rat_str(family_meet(FuzzyFamily::lukasiewicz, half, half)));
  require(family_join(FuzzyFamily::product_prob_sum, half, half) == Rat(3, 4),
          "probabilistic sum at 1/2");
  require(family_meet(FuzzyFamily::product_prob_sum, half, half) == Rat(1, 4),
          "product at 1/2");
  detail << " bold=(1,0) product=(3/4,1/4)";
}

// ---- C8: impossibility-theorem harnesses -------------------------------------

void criterion_impossibility(std::ostringstream& detail) {
  const std::vector<Rat> grid{Rat(0), Rat(1, 2), Rat(1)};
  auto unique = minmax_uniqueness_oracle(grid);
  detail << " survivors=" << unique.join_survivors << "/" << unique.meet_survivors;
  require(unique.join_survivors == 1 && unique.join_survivor_is_max,
          "join survivor not unique max");
  require(unique.meet_survivors == 1 && unique.meet_survivor_is_min,
          "meet survivor not unique min");

  auto idem = idempotency_exhaustive_oracle(grid);
  detail << " idem-pairs=" << idem.pairs_satisfying << "/" << idem.pairs_checked;
  require(idem.all_idempotent,
          "a table pair satisfied the idempotency-theorem hypotheses yet is not idempotent");

  const std::vector<std::string> u{"p"};
  std::vector<MembershipFn> fns{MembershipFn::constant("0", u, 0),
                                MembershipFn::constant("m", u, Rat(1, 2)),
                                MembershipFn::constant("1", u, 1)};
  auto bold = verify_negation_idempotency(
      family_structure(FuzzyFamily::lukasiewicz, fns, GradeNegation{}));
  require(bold.fixed_point_found && bold.excluded_middle && bold.non_contradiction,
          "bold fixture lost its fixed point or boundary properties");
  require(!bold.join_idempotent && !bold.meet_idempotent && bold.consistent,
          "bold fixture should be non-idempotent");

  auto crisp = verify_negation_idempotency(crisp_logic({"a", "b"}));
  require(!crisp.fixed_point_found, "crisp fixture has no interior fixed point");
  require(crisp.excluded_middle && crisp.join_idempotent && crisp.consistent,
          "crisp fixture keeps excluded middle and idempotency");
}

// ---- C9: order-first constructions -------------------------------------------

std::vector<MembershipFn> fn_list(
    const std::vector<std::pair<std::string, std::vector<const char*>>>& entries,
    const std::vector<std::string>& universe) {
  std::vector<MembershipFn> out;
  for (const auto& [name, grades] : entries) {
    std::vector<Rat> parsed;
    for (const char* g : grades) parsed.push_back(parse_rat(g));
    out.push_back(make_membership(name, universe, parsed));
  }
  return out;
}

void criterion_induced(std::ostringstream& detail) {
  {  // diamond-shaped fixture
    auto fns = fn_list({{"m0", {"1/10", "1/10", "1/20"}},
                        {"mA", {"1/5", "7/10", "1/5"}},
                        {"mB", {"4/5", "3/10", "4/5"}},
                        {"m1", {"9/10", "9/10", "19/20"}}},
                       {"x1", "x2", "x3"});
    auto logic = induced_logic(fns, GradeNegation{});
    require(logic.boolean_lattice && logic.distributive, "diamond fixture not Boolean");
    require(logic.excluded_middle && logic.non_contradiction && logic.idempotent,
            "diamond fixture lost a crucial property");
    auto pw = check_pointwise_consistency(logic.structure);
    auto* col = std::get_if<PointwiseCollision>(&pw);
    require(col != nullptr, "diamond fixture should not be pointwise evaluated");
    require(col->input_a == Rat(1, 5) && col->input_b == Rat(4, 5) &&
                col->first_output == Rat(9, 10) && col->second_output == Rat(19, 20),
            "collision witness moved");
    detail << " diamond=boolean+collision";
  }
  {  // hexagon-shaped fixture
    auto fns = fn_list({{"m0", {"0", "0"}},
                        {"mp", {"3/5", "1/10"}},
                        {"mq", {"1/10", "3/5"}},
                        {"mp⊥", {"2/5", "9/10"}},
                        {"mq⊥", {"9/10", "2/5"}},
                        {"m1", {"1", "1"}}},
                       {"x1", "x2"});
    auto logic = induced_logic(fns, GradeNegation{});
    require(logic.orthocomplemented && logic.negation_class.ortho,
            "hexagon fixture not orthocomplemented");
    require(!logic.distributive, "hexagon fixture must not be distributive");
    require(logic.excluded_middle && logic.non_contradiction && logic.idempotent,
            "hexagon fixture lost a crucial property");
    detail << " hexagon=ortho";
  }
  {  // cube-shaped fixture
    auto fns = fn_list({{"m0", {"0", "0", "0"}},
                        {"mA", {"3/5", "1/5", "1/5"}},
                        {"mB", {"1/5", "3/5", "1/5"}},
                        {"mC", {"1/5", "1/5", "3/5"}},
                        {"mAB", {"4/5", "4/5", "2/5"}},
                        {"mAC", {"4/5", "2/5", "4/5"}},
                        {"mBC", {"2/5", "4/5", "4/5"}},
                        {"m1", {"1", "1", "1"}}},
                       {"x1", "x2", "x3"});
    auto logic = induced_logic(fns, GradeNegation{});
    require(logic.boolean_lattice, "cube fixture not Boolean");
    require(logic.lattice.size() == 8, "cube fixture has the wrong carrier");
    require(logic.excluded_middle && logic.non_contradiction && logic.idempotent,
            "cube fixture lost a crucial property");
    detail << " cube=boolean";
  }
}

// ---- C10: negation fixture suite ----------------------------------------------

void criterion_negation_fixtures(std::ostringstream& detail) {
  struct Fixture {
    std::string name;
    Lattice lat;
    UnaryMap neg;
    // expected flags: subminimal, minimal, intuitionistic, fuzzy, de morgan, kleene, ortho
    bool s, m, i, f, dm, k, o;
  };
  auto by_label = [](const Lattice& lat,
                     std::initializer_list<std::pair<const char*, const char*>> pairs) {
    UnaryMap m(static_cast<std::size_t>(lat.size()), -1);
    for (auto [a, b] : pairs) m[static_cast<std::size_t>(lat.index_of(a))] = lat.index_of(b);
    return m;
  };

  std::vector<Fixture> fixtures;
  {
    Lattice l4 = shapes::chain({"0", "a", "b", "1"});
    fixtures.push_back({"discrete", l4,
                        by_label(l4, {{"0", "1"}, {"a", "0"}, {"b", "0"}, {"1", "0"}}), true,
                        true, true, true, false, false, false});
    fixtures.push_back({"dual-discrete", l4,
                        by_label(l4, {{"0", "1"}, {"a", "1"}, {"b", "1"}, {"1", "0"}}), true,
                        false, false, false, false, false, false});
    fixtures.push_back({"chain-swap", l4,
                        by_label(l4, {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"1", "0"}}), true,
                        true, false, true, true, true, false});
  }
  {
    Lattice l2 = shapes::chain({"0", "1"});
    fixtures.push_back({"two-chain-swap", l2, by_label(l2, {{"0", "1"}, {"1", "0"}}), true,
                        true, true, true, true, true, true});
  }
  {
    Lattice l3 = shapes::chain({"0", "n", "1"});
    fixtures.push_back({"three-chain-fixed-point", l3,
                        by_label(l3, {{"0", "1"}, {"n", "n"}, {"1", "0"}}), true, true, false,
                        true, true, true, false});
    fixtures.push_back({"three-chain-discrete", l3,
                        by_label(l3, {{"0", "1"}, {"n", "0"}, {"1", "0"}}), true, true, true,
                        true, false, false, false});
    fixtures.push_back({"minimal-only", l3,
                        by_label(l3, {{"0", "1"}, {"n", "1"}, {"1", "n"}}), true, true, false,
                        false, false, false, false});
  }
  {
    Lattice m2 = shapes::m2();
    fixtures.push_back({"square-swap", m2,
                        by_label(m2, {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"1", "0"}}), true,
                        true, true, true, true, true, true});
    fixtures.push_back({"square-fixing", m2,
                        by_label(m2, {{"0", "1"}, {"a", "a"}, {"b", "b"}, {"1", "0"}}), true,
                        true, false, true, true, false, false});
    fixtures.push_back({"square-fuzzy-only", m2,
                        by_label(m2, {{"0", "1"}, {"a", "0"}, {"b", "b"}, {"1", "0"}}), true,
                        true, false, true, false, false, false});
  }
  {
    Lattice hex = shapes::o6();
    fixtures.push_back({"hexagon-canonical", hex, shapes::o6_perp(hex), true, true, true, true,
                        true, true, true});
    fixtures.push_back({"hexagon-chain-reversal", hex,
                        by_label(hex, {{"0", "1"},
                                       {"1", "0"},
                                       {"p", "q⊥"},
                                       {"q⊥", "p"},
                                       {"q", "p⊥"},
                                       {"p⊥", "q"}}),
                        true, true, false, true, true, false, false});
  }
  {
    Lattice six = shapes::six_element_kleene();
    fixtures.push_back({"six-element-kleene", six, shapes::six_element_kleene_negation(six),
                        true, true, false, true, true, true, false});
  }
  {
    Lattice cube = shapes::boolean_cube(3);
    fixtures.push_back({"cube-two-atom-join", cube,
                        by_label(cube, {{"000", "111"},
                                        {"111", "000"},
                                        {"100", "110"},
                                        {"110", "100"},
                                        {"010", "101"},
                                        {"101", "010"},
                                        {"001", "011"},
                                        {"011", "001"}}),
                        true, true, false, true, true, false, false});
    fixtures.push_back({"cube-complement", cube, shapes::cube_complement(cube), true, true,
                        true, true, true, true, true});
  }

  int checked = 0;
  for (const auto& fx : fixtures) {
    auto cls = classify_negation(fx.lat, fx.neg);
    auto mismatch = [&](const char* what) {
      return fx.name + ": " + what + " flag off";
    };
    require(cls.subminimal == fx.s, mismatch("subminimal"));
    require(cls.minimal == fx.m, mismatch("minimal"));
    require(cls.intuitionistic == fx.i, mismatch("intuitionistic"));
    require(cls.fuzzy == fx.f, mismatch("fuzzy"));
    require(cls.de_morgan == fx.dm, mismatch("de-morgan"));
    require(cls.kleene == fx.k, mismatch("kleene"));
    require(cls.ortho == fx.o, mismatch("ortho"));
    verify_negation_lemmas(fx.lat, fx.neg, cls);
    ++checked;
  }

  // non-negations: the sideways hexagon map is not even antitone
  {
    Lattice hex = shapes::o6();
    auto cls = classify_negation(
        hex, by_label(hex, {{"0", "1"},
                            {"1", "0"},
                            {"p", "q"},
                            {"q", "p"},
                            {"q⊥", "p⊥"},
                            {"p⊥", "q⊥"}}));
    require(!cls.subminimal, "sideways hexagon map must not be antitone");
    ++checked;
  }
  detail << " fixtures=" << checked;
}

}  // namespace

int main(int argc, char** argv) {
  bool include_n8 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--n8") == 0) include_n8 = true;

  std::vector<Criterion> criteria{
      {"C1", "lattice census counts",
       [&](std::ostringstream& d) { criterion_census(d, include_n8); }},
      {"C2", "orthocomplementation census", criterion_ortho_census},
      {"C3", "seven-element complement census", criterion_complement_census},
      {"C4", "named-logic contracts", criterion_logic_contracts},
      {"C5", "six implications on ortho fixtures", criterion_six_implications},
      {"C6", "lambda-negation involution", criterion_lambda_involution},
      {"C7", "non-idempotency witnesses", criterion_family_witnesses},
      {"C8", "impossibility-theorem harnesses", criterion_impossibility},
      {"C9", "order-first constructions", criterion_induced},
      {"C10", "negation fixture suite", criterion_negation_fixtures},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream detail;
    try {
      c.run(detail);
      std::cout << "PASS " << c.id << " " << c.title << ":" << detail.str() << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "FAIL " << c.id << " " << c.title << ": " << f.note << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << c.id << " " << c.title << ": unexpected error: " << e.what()
                << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
