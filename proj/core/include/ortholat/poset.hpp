#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ortholat {

/// Finite partially ordered set over opaque element labels.
///
/// The order relation is stored as full up-set/down-set bitmasks, so `leq`,
/// bound scans, and the classifier loops built on top of them are O(1) per
/// pair. Carriers are capped at 64 elements; everything in this engine is
/// desk scale and exhaustive.
class Poset {
public:
  static constexpr int kMaxElements = 64;
  using Mask = std::uint64_t;

  Poset() = default;

  /// Builds the reflexive-transitive closure of a cover (or any acyclic
  /// strict-edge) list. Rejects cyclic input, duplicate labels, and edges
  /// naming unknown elements.
  static Poset from_covers(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  /// Builds a poset from an explicit order predicate. The predicate must be
  /// reflexive, antisymmetric, and transitive over the label indices.
  static Poset from_leq(const std::vector<std::string>& labels,
                        const std::function<bool(int, int)>& leq);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // throws unknown_label
  std::optional<int> find(const std::string& label) const;

  bool leq(int i, int j) const { return (up_[static_cast<std::size_t>(i)] >> j) & 1u; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  Mask up_set(int i) const { return up_[static_cast<std::size_t>(i)]; }
  Mask down_set(int i) const { return down_[static_cast<std::size_t>(i)]; }
  Mask universe_mask() const;

  /// Least upper bound of a subset; the empty subset resolves to the bottom
  /// element when one exists. Returns nullopt when no least bound exists.
  std::optional<int> lub(Mask subset) const;
  std::optional<int> glb(Mask subset) const;

  std::optional<int> bottom() const;
  std::optional<int> top() const;
  bool bounded() const { return bottom().has_value() && top().has_value(); }

  bool is_chain() const;

  struct LatticeCheck {
    bool is_lattice = true;
    int witness_a = -1;
    int witness_b = -1;
    bool missing_join = false;  // false = the witness pair lacks a meet
  };
  LatticeCheck lattice_check() const;

  /// Cover pairs (lower, upper) in index order: the transitive reduction.
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool covers(int lower, int upper) const;

  /// Length of the longest chain below the element (minimal elements have
  /// height 0). Used for Hasse ranking and deterministic table ordering.
  int height(int i) const { return height_[static_cast<std::size_t>(i)]; }

  /// Induced subposet on the masked elements, labels preserved.
  Poset restrict_to(Mask subset) const;

  bool same_order(const Poset& other) const { return up_ == other.up_; }

private:
  void finish();  // validates axioms, computes heights

  std::vector<std::string> labels_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<int> height_;
};

std::vector<int> mask_elements(Poset::Mask mask);

}  // namespace ortholat
