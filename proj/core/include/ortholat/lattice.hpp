#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ortholat/poset.hpp"

namespace ortholat {

/// Lattice on top of a Poset: cached meet/join tables plus the bounds.
/// Finite lattices are always bounded; the empty lattice has no bounds.
class Lattice {
public:
  Lattice() = default;

  /// Fills the meet/join tables by exhaustive bound scans.
  /// Throws errc::not_a_lattice (with a witness pair) when a pair lacks a bound.
  static Lattice from_poset(const Poset& p);

  /// Builds a Lattice without validating the tables against the order.
  /// Exists so tests can inject corrupt tables and watch verify_axioms fail.
  static Lattice from_tables_unchecked(const Poset& p, std::vector<int> meet,
                                       std::vector<int> join);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& label(int i) const { return poset_.label(i); }
  int index_of(const std::string& label) const { return poset_.index_of(label); }
  bool leq(int i, int j) const { return poset_.leq(i, j); }

  int meet(int i, int j) const { return meet_[static_cast<std::size_t>(i * size() + j)]; }
  int join(int i, int j) const { return join_[static_cast<std::size_t>(i * size() + j)]; }

  bool bounded() const { return bottom_ >= 0 && top_ >= 0; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

private:
  Poset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = -1;
  int top_ = -1;
};

struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::vector<int> witness;  // element indices of the first failing tuple
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_ok = true;
  const AxiomCheck* find(const std::string& name) const;
};

/// Exhaustively checks the lattice identities (idempotent, commutative,
/// associative, absorptive), the bound identities, the distributive and
/// median inequalities, the modular inequality, and the monotony laws.
/// Any failure on a lattice built by from_poset is a construction bug.
AxiomReport verify_axioms(const Lattice& lat);

struct ModularityVerdict {
  bool modular = true;
  // first triple (x, y, a) with a <= y and y ∧ (x ∨ a) != (y ∧ x) ∨ a
  std::array<int, 3> witness{-1, -1, -1};
};

struct DistributivityVerdict {
  bool distributive = true;
  std::array<int, 3> witness{-1, -1, -1};  // first failing (x, y, z)
};

enum class SublatticePattern { n5, m3, cube8 };

/// Scans all (x, y, a) with a <= y and cross-checks against the pentagon
/// criterion; a disagreement between the two routes throws
/// errc::internal_disagreement.
ModularityVerdict is_modular(const Lattice& lat);

/// Triple scan of the distributive law. Asserts the equivalent forms
/// (conjunctive, median) agree, asserts the forbidden-sublattice criterion
/// (no pentagon, no diamond) agrees, and asserts distributive => modular.
DistributivityVerdict is_distributive(const Lattice& lat);

/// Exhaustive search for a sublattice isomorphic to the pattern. Returns the
/// embedding as a vector indexed by pattern element (values are elements of
/// lat), or nullopt.
std::optional<std::vector<int>> find_sublattice(const Lattice& lat, SublatticePattern pattern);

const Lattice& pattern_lattice(SublatticePattern pattern);

}  // namespace ortholat
