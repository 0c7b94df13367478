#pragma once

#include <vector>

#include "ortholat/lattice.hpp"

namespace ortholat {

/// Total self-map on a lattice carrier, stored by element index.
using UnaryMap = std::vector<int>;

/// All complements of x: every y with x ∧ y = 0 and x ∨ y = 1.
/// Throws errc::unbounded on an empty carrier.
Poset::Mask complements(const Lattice& lat, int x);

enum class ComplementKind { non_complemented, uniquely_complemented, multiply_complemented };

const char* complement_kind_name(ComplementKind kind);

struct ComplementClass {
  ComplementKind kind = ComplementKind::non_complemented;
  std::vector<Poset::Mask> per_element;
};

ComplementClass complement_class(const Lattice& lat);

struct OrthoMapCheck {
  bool involutive = true;
  bool non_contradiction = true;
  bool antitone = true;
  std::vector<int> witness;  // first failing element/pair
  bool valid() const { return involutive && non_contradiction && antitone; }
};

OrthoMapCheck check_ortho_map(const Lattice& lat, const UnaryMap& perp);

/// Every orthocomplementation of the lattice, in lexicographic order of the
/// map as an index vector. The search walks involutions pairing each element
/// with one of its complements and filters by the antitone condition, which
/// is exact: those conditions are necessary.
std::vector<UnaryMap> find_orthocomplementations(const Lattice& lat);

struct OrthoFlags {
  bool ortho = false;
  bool orthomodular = false;
  bool modular_ortho = false;
  bool boolean_lattice = false;
  std::vector<int> orthomodular_witness;  // pair (x, y) with x <= y breaking the identity
};

/// Classifies a valid orthocomplementation; throws errc::invalid_ortho_map
/// otherwise. Asserts the implication chain Boolean => modular-ortho =>
/// orthomodular => ortho on its own result.
OrthoFlags classify_ortho(const Lattice& lat, const UnaryMap& perp);

struct PairCheck {
  bool ok = true;
  int x = -1;
  int y = -1;
};

struct BooleanIdentityReport {
  PairCheck sasaki_hook;       // x⊥ ∨ (x ∧ y) = x⊥ ∨ y
  PairCheck sasaki_hook_dual;  // x ∨ (x⊥ ∧ y) = x ∨ y
  bool boolean_lattice = false;
  bool sasaki_iff_boolean = false;

  PairCheck elkan;  // (x ∧ y⊥)⊥ = y ∨ (x⊥ ∧ y⊥)
  bool orthomodular = false;
  bool elkan_implies_boolean = false;

  // consequences every orthocomplementation must satisfy
  bool boundary_ok = false;  // 0⊥ = 1 and 1⊥ = 0
  PairCheck de_morgan_join;  // (x ∨ y)⊥ = x⊥ ∧ y⊥
  PairCheck de_morgan_meet;
  PairCheck excluded_middle;  // x ∨ x⊥ = 1

  bool uniquely_complemented = false;
  bool distributive = false;
  bool huntington_ok = false;          // uniquely complemented => distributive
  bool unique_complement_ok = false;   // distributive + complemented => uniquely complemented
};

BooleanIdentityReport check_boolean_identities(const Lattice& lat, const UnaryMap& perp);

}  // namespace ortholat
