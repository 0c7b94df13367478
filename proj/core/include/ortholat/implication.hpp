#pragma once

#include <array>
#include <string>
#include <vector>

#include "ortholat/lattice.hpp"
#include "ortholat/negation.hpp"
#include "ortholat/ortho.hpp"

namespace ortholat {

enum class ImplKind { classical, sasaki, dishkant, kalmbach, non_tollens, relevance };

inline constexpr std::array<ImplKind, 6> kAllImplKinds{
    ImplKind::classical, ImplKind::sasaki,      ImplKind::dishkant,
    ImplKind::kalmbach,  ImplKind::non_tollens, ImplKind::relevance};

const char* impl_kind_name(ImplKind kind);
ImplKind impl_kind_by_name(const std::string& name);  // unknown_name

/// Total binary map on a lattice carrier; either generated from one of the
/// six connective formulas or stored verbatim for a named logic.
struct Implication {
  int n = 0;
  std::vector<int> table;  // row = antecedent, column = consequent
  bool from_formula = false;
  ImplKind kind = ImplKind::classical;
  std::string source;  // formula name or builtin logic name

  int at(int x, int y) const { return table[static_cast<std::size_t>(x * n + y)]; }
};

Implication build_implication(const Lattice& lat, const UnaryMap& neg, ImplKind kind);

struct ImplicationVerdict {
  bool weak_entailment = true;   // x <= y  =>  x→y >= x ∨ y
  bool strong_entailment = true; // x <= y  =>  x→y = 1
  bool weak_mp = true;           // x ∧ (x→y) <= ¬x ∨ y
  bool strong_mp = true;         // x ∧ (x→y) <= y
  PairCheck weak_entailment_witness;
  PairCheck strong_entailment_witness;
  PairCheck weak_mp_witness;
  PairCheck strong_mp_witness;
  // converse of the entailment characterization: x→y >= x ∨ y  =>  x <= y.
  // Provable from strong modus ponens; reported (not assumed) otherwise.
  bool entailment_converse = true;
  PairCheck entailment_converse_witness;
};

ImplicationVerdict validate_implication(const Lattice& lat, const UnaryMap& neg,
                                        const Implication& imp);

/// Logic-class labels keyed off the negation class (plus Boolean-ness of the
/// carrier lattice for the Boolean label).
struct LogicClass {
  bool logic = false;           // minimal negation
  bool fuzzy = false;
  bool intuitionistic = false;
  bool de_morgan = false;
  bool kleene = false;
  bool ortho = false;
  bool boolean_logic = false;   // ortho negation on a Boolean lattice
};

struct LogicStructure {
  std::string name;
  Lattice lattice;
  UnaryMap negation;
  Implication implication;
  NegationFlags negation_class;
  LogicClass logic_class;
  ImplicationVerdict verdict;
};

LogicStructure make_logic(std::string name, Lattice lattice, UnaryMap negation,
                          Implication implication);

enum class BuiltinLogic {
  classical2,
  kleene3,
  lukasiewicz3,
  rm3,
  heyting3,
  lukasiewicz5,
  boolean4,
  bn4,
  six_element_c15,
};

const char* builtin_logic_name(BuiltinLogic logic);
BuiltinLogic builtin_logic_by_name(const std::string& name);  // unknown_name
std::vector<BuiltinLogic> all_builtin_logics();

LogicStructure builtin_logic(BuiltinLogic which);

struct TableReportEntry {
  ImplKind kind;
  Implication implication;
  ImplicationVerdict verdict;
};

struct ImplicationTableReport {
  std::vector<TableReportEntry> entries;
  bool duality_ok = true;      // x →d y = ¬y →s ¬x and x →m y = ¬y →k ¬x
  bool all_tables_equal = true;
};

/// Builds all six formula tables against an ortho negation and validates
/// each. Throws errc::not_ortho when the map is not an ortho negation.
ImplicationTableReport implication_table_report(const Lattice& lat, const UnaryMap& neg);

/// Cells where the table differs from the classical ¬x ∨ y.
std::vector<std::pair<int, int>> diff_against_classical(const Lattice& lat, const UnaryMap& neg,
                                                        const Implication& imp);

}  // namespace ortholat
