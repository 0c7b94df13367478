#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ortholat/implication.hpp"
#include "ortholat/lattice.hpp"
#include "ortholat/membership.hpp"
#include "ortholat/negation.hpp"

namespace ortholat {

enum class FuzzyFamily { min_max, product_prob_sum, lukasiewicz };

const char* fuzzy_family_name(FuzzyFamily fam);
FuzzyFamily fuzzy_family_by_name(const std::string& name);  // unknown_name

// pointwise grade connectives per family
Rat family_meet(FuzzyFamily fam, const Rat& a, const Rat& b);
Rat family_join(FuzzyFamily fam, const Rat& a, const Rat& b);

std::pair<MembershipFn, MembershipFn> apply_family(FuzzyFamily fam, const MembershipFn& m,
                                                   const MembershipFn& n);  // (meet, join)

/// A set of membership functions together with its operators: either a
/// pointwise-evaluated grade family, or meet/join induced by the pointwise
/// order. Closure under the operators and the negation is checked at
/// construction for family structures.
struct FuzzyStructure {
  enum class Source { family, induced };

  std::vector<MembershipFn> fns;
  Source source = Source::family;
  FuzzyFamily family = FuzzyFamily::min_max;
  std::optional<GradeNegation> grade_negation;
  std::vector<int> negation;         // index map on fns
  std::optional<Lattice> order_lattice;  // set for induced structures

  int find(const MembershipFn& f) const;  // -1 when absent (compares grades)
  int find_name(const std::string& name) const;

  MembershipFn meet_fn(int i, int j) const;
  MembershipFn join_fn(int i, int j) const;

  std::optional<int> top_fn() const;     // pointwise-greatest member, if any
  std::optional<int> bottom_fn() const;

  bool excluded_middle() const;   // m ∨ ¬m equals the structure top, all m
  bool non_contradiction() const;
  bool idempotent() const;
};

/// All indicator functions over the universe with min/max connectives and
/// the standard negation; the classical subset logic in grade clothing.
FuzzyStructure crisp_logic(const std::vector<std::string>& universe);  // universe_too_large

FuzzyStructure family_structure(FuzzyFamily fam, std::vector<MembershipFn> fns,
                                const GradeNegation& neg);  // not_closed / negation_not_closed

struct PointwiseTables {
  std::map<std::pair<Rat, Rat>, Rat> meet;
  std::map<std::pair<Rat, Rat>, Rat> join;
};

struct PointwiseCollision {
  bool in_join = true;
  std::string first_fn_a, first_fn_b, first_point;
  std::string second_fn_a, second_fn_b, second_point;
  Rat input_a, input_b;
  Rat first_output, second_output;
};

using PointwiseCheck = std::variant<PointwiseTables, PointwiseCollision>;

/// Scans every function pair and universe point. Two observations sharing an
/// input grade pair but disagreeing on the output prove that no single grade
/// function generates the operator, i.e. the structure is not pointwise
/// evaluated.
PointwiseCheck check_pointwise_consistency(const FuzzyStructure& s);

using NegationSpec = std::variant<GradeNegation, std::map<std::string, std::string>>;

struct InducedLogic {
  FuzzyStructure structure;
  Lattice lattice;
  NegationFlags negation_class;
  bool modular = false;
  bool distributive = false;
  ComplementClass complements;
  bool boolean_lattice = false;
  bool orthocomplemented = false;  // the induced negation is an ortho map
  bool excluded_middle = false;
  bool non_contradiction = false;
  bool idempotent = false;
};

/// The order-first constructor: fix the pointwise order, require it to be a
/// lattice, and read the operators off the order. The operators need not be
/// pointwise evaluated any more, which is the whole point.
InducedLogic induced_logic(std::vector<MembershipFn> fns, const NegationSpec& neg);

// ---- grade-table theorem harnesses -------------------------------------

struct GradeTablePair {
  std::function<Rat(const Rat&, const Rat&)> meet;
  std::function<Rat(const Rat&, const Rat&)> join;
};

GradeTablePair family_tables(FuzzyFamily fam);

struct HypothesisCheck {
  std::string name;
  bool holds = true;
  std::string witness;
};

struct BoundsTheoremReport {
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_hold = true;
  bool bounds_hold = true;  // meet <= min and max <= join on the grid
  std::string witness;
  bool consistent = true;  // hypotheses => bounds on this instance
};

/// min/max bound any connective pair satisfying identity + isotonicity.
BoundsTheoremReport verify_minmax_boundary(const GradeTablePair& tables,
                                           const std::vector<Rat>& grid);

struct IdempotencyTheoremReport {
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_hold = true;
  bool idempotent = true;
  std::string witness;
  bool consistent = true;  // hypotheses => idempotent; contrapositive otherwise
};

/// boundary + identity + both distributive laws force idempotency.
IdempotencyTheoremReport verify_idempotency_theorem(const GradeTablePair& tables,
                                                    const std::vector<Rat>& grid);

struct MinmaxTheoremReport {
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_hold = true;
  bool equals_minmax = true;
  std::string witness;
  bool consistent = true;
};

/// identity + weak idempotency + isotonicity force (meet, join) = (min, max).
MinmaxTheoremReport verify_minmax_theorem(const GradeTablePair& tables,
                                          const std::vector<Rat>& grid);

struct MinmaxOracleResult {
  std::size_t join_candidates = 0;
  std::size_t join_survivors = 0;
  bool join_survivor_is_max = false;
  std::size_t meet_candidates = 0;
  std::size_t meet_survivors = 0;
  bool meet_survivor_is_min = false;
};

/// Exhaustive oracle on a small grid: enumerates every grid-valued table
/// with the identity rows fixed and keeps those satisfying isotonicity and
/// weak idempotency. The survivor must be unique and equal max (resp. min).
MinmaxOracleResult minmax_uniqueness_oracle(const std::vector<Rat>& grid);  // size_cap if big

struct IdempotencyOracleResult {
  std::size_t pairs_checked = 0;
  std::size_t pairs_satisfying = 0;
  bool all_idempotent = false;
};

/// Exhaustive companion for the idempotency theorem: every grid-valued table
/// pair satisfying its hypotheses is idempotent.
IdempotencyOracleResult idempotency_exhaustive_oracle(const std::vector<Rat>& grid);

struct NegationIdempotencyReport {
  bool fixed_point_found = false;
  std::string fn_name;
  std::string point;
  Rat grade;
  bool excluded_middle = false;
  bool non_contradiction = false;
  bool join_idempotent = true;
  bool meet_idempotent = true;
  std::string witness;
  bool consistent = true;  // fixed point + EM => join not idempotent (dually for meet)
};

/// The fixed-point obstruction: a pointwise-evaluated structure whose
/// negation fixes an interior grade cannot keep excluded middle (or
/// non-contradiction) and idempotency at once.
NegationIdempotencyReport verify_negation_idempotency(const FuzzyStructure& s);

}  // namespace ortholat
