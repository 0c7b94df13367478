#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ortholat/fuzzy.hpp"
#include "ortholat/implication.hpp"
#include "ortholat/lattice.hpp"
#include "ortholat/membership.hpp"
#include "ortholat/negation.hpp"
#include "ortholat/poset.hpp"

namespace ortholat {

/// Parsed JSON structure bundle: an order document (elements/covers plus
/// optional negation and implication) and/or a membership-function bundle.
struct StructureDocument {
  bool has_order = false;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::string> negation;  // label -> label, may be empty
  std::string implication_kind;                 // formula name, may be empty
  std::vector<std::vector<std::string>> implication_table;  // rows follow `elements`

  bool has_functions = false;
  std::vector<std::string> universe;
  std::vector<MembershipFn> functions;
  std::optional<GradeNegation> grade_negation;
  std::string op_source;  // "induced" (default) or a family name

  Poset to_poset() const;
  UnaryMap negation_map(const Poset& p) const;  // schema_error when partial
};

StructureDocument parse_document(const std::string& text);  // parse_error / schema_error
StructureDocument load_document(const std::string& path);   // adds file errors as parse_error

std::string write_poset_document(const Poset& p, const UnaryMap* negation = nullptr);

std::string membership_json(const MembershipFn& f);
MembershipFn parse_membership(const std::string& text, std::string name = "m");

/// Deterministic Hasse-diagram DOT: one node per element, one edge per
/// cover, elements ranked by longest-chain height so upper elements sit
/// above lower ones.
std::string dot_from_poset(const Poset& p);

/// Row/column order for printed tables: descending height, then label.
std::vector<int> display_order(const Lattice& lat);

/// Aligned text grid; cells listed in `marks` are suffixed with '*'
/// (the shaded-diff marker).
std::string render_table_text(const Lattice& lat, const Implication& imp,
                              const std::vector<std::pair<int, int>>* marks = nullptr);

std::string render_table_json(const Lattice& lat, const Implication& imp,
                              const std::vector<std::pair<int, int>>* marks = nullptr);

std::string classification_report_json(const Lattice& lat);

}  // namespace ortholat
