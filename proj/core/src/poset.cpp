#include "ortholat/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "ortholat/error.hpp"

namespace ortholat {

std::vector<int> mask_elements(Poset::Mask mask) {
  std::vector<int> out;
  while (mask) {
    int i = std::countr_zero(mask);
    out.push_back(i);
    mask &= mask - 1;
  }
  return out;
}

namespace {

std::map<std::string, int> index_labels(const std::vector<std::string>& labels) {
  if (labels.size() > static_cast<std::size_t>(Poset::kMaxElements))
    raise(errc::size_cap, "carrier larger than 64 elements");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second)
      raise(errc::duplicate_label, "label '" + labels[i] + "' repeated");
  }
  return index;
}

}  // namespace

Poset Poset::from_covers(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  auto index = index_labels(labels);
  const int n = static_cast<int>(labels.size());

  std::vector<Mask> above(static_cast<std::size_t>(n), 0);  // strict successors, direct edges
  for (const auto& [lo, hi] : covers) {
    auto li = index.find(lo);
    auto hi_it = index.find(hi);
    if (li == index.end()) raise(errc::unknown_label, "cover endpoint '" + lo + "'");
    if (hi_it == index.end()) raise(errc::unknown_label, "cover endpoint '" + hi + "'");
    if (li->second == hi_it->second)
      raise(errc::cyclic_order, "self-loop on '" + lo + "'");
    above[static_cast<std::size_t>(li->second)] |= Mask(1) << hi_it->second;
  }

  // Transitive closure of the strict relation.
  std::vector<Mask> strict = above;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((strict[static_cast<std::size_t>(i)] >> k) & 1u)
        strict[static_cast<std::size_t>(i)] |= strict[static_cast<std::size_t>(k)];

  for (int i = 0; i < n; ++i)
    if ((strict[static_cast<std::size_t>(i)] >> i) & 1u)
      raise(errc::cyclic_order, "directed cycle through '" + labels[static_cast<std::size_t>(i)] + "'");

  Poset p;
  p.labels_ = labels;
  p.up_.assign(static_cast<std::size_t>(n), 0);
  p.down_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    p.up_[static_cast<std::size_t>(i)] = strict[static_cast<std::size_t>(i)] | (Mask(1) << i);
    for (int j : mask_elements(p.up_[static_cast<std::size_t>(i)]))
      p.down_[static_cast<std::size_t>(j)] |= Mask(1) << i;
  }
  p.finish();
  return p;
}

Poset Poset::from_leq(const std::vector<std::string>& labels,
                      const std::function<bool(int, int)>& leq) {
  index_labels(labels);  // label validity + size cap
  const int n = static_cast<int>(labels.size());

  Poset p;
  p.labels_ = labels;
  p.up_.assign(static_cast<std::size_t>(n), 0);
  p.down_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) {
        p.up_[static_cast<std::size_t>(i)] |= Mask(1) << j;
        p.down_[static_cast<std::size_t>(j)] |= Mask(1) << i;
      }
  p.finish();
  return p;
}

void Poset::finish() {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (!leq(i, i)) raise(errc::schema_error, "order not reflexive at '" + label(i) + "'");
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        raise(errc::cyclic_order, "antisymmetry fails on '" + label(i) + "','" + label(j) + "'");
      if (leq(i, j)) {
        // transitivity: up(j) must sit inside up(i)
        if (up_[static_cast<std::size_t>(j)] & ~up_[static_cast<std::size_t>(i)])
          raise(errc::schema_error, "order not transitive at '" + label(i) + "'");
      }
    }
  }

  height_.assign(static_cast<std::size_t>(n), 0);
  // Longest-chain heights; process elements by increasing down-set size.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(down_[static_cast<std::size_t>(a)]) <
           std::popcount(down_[static_cast<std::size_t>(b)]);
  });
  for (int i : order) {
    int h = 0;
    for (int j : mask_elements(down_[static_cast<std::size_t>(i)] & ~(Mask(1) << i)))
      h = std::max(h, height_[static_cast<std::size_t>(j)] + 1);
    height_[static_cast<std::size_t>(i)] = h;
  }
}

int Poset::index_of(const std::string& label) const {
  auto found = find(label);
  if (!found) raise(errc::unknown_label, "no element '" + label + "'");
  return *found;
}

std::optional<int> Poset::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

Poset::Mask Poset::universe_mask() const {
  return size() == 64 ? ~Mask(0) : (Mask(1) << size()) - 1;
}

std::optional<int> Poset::lub(Mask subset) const {
  Mask uppers = universe_mask();
  for (int i : mask_elements(subset)) uppers &= up_[static_cast<std::size_t>(i)];
  for (int b : mask_elements(uppers))
    if ((uppers & ~up_[static_cast<std::size_t>(b)]) == 0) return b;
  return std::nullopt;
}

std::optional<int> Poset::glb(Mask subset) const {
  Mask lowers = universe_mask();
  for (int i : mask_elements(subset)) lowers &= down_[static_cast<std::size_t>(i)];
  for (int b : mask_elements(lowers))
    if ((lowers & ~down_[static_cast<std::size_t>(b)]) == 0) return b;
  return std::nullopt;
}

std::optional<int> Poset::bottom() const {
  if (size() == 0) return std::nullopt;
  return lub(0);
}

std::optional<int> Poset::top() const {
  if (size() == 0) return std::nullopt;
  return glb(0);
}

bool Poset::is_chain() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (!comparable(i, j)) return false;
  return true;
}

Poset::LatticeCheck Poset::lattice_check() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      Mask pair = (Mask(1) << i) | (Mask(1) << j);
      if (!lub(pair)) return {false, i, j, true};
      if (!glb(pair)) return {false, i, j, false};
    }
  return {};
}

bool Poset::covers(int lower, int upper) const {
  if (!lt(lower, upper)) return false;
  Mask between = up_[static_cast<std::size_t>(lower)] & down_[static_cast<std::size_t>(upper)];
  return std::popcount(between) == 2;  // exactly {lower, upper}
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (covers(i, j)) out.emplace_back(i, j);
  return out;
}

Poset Poset::restrict_to(Mask subset) const {
  const auto kept = mask_elements(subset);
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (int i : kept) labels.push_back(label(i));
  return from_leq(labels, [&](int a, int b) {
    return leq(kept[static_cast<std::size_t>(a)], kept[static_cast<std::size_t>(b)]);
  });
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::cyclic_order: return "CyclicOrder";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::universe_mismatch: return "UniverseMismatch";
    case errc::not_a_lattice: return "NotALattice";
    case errc::unbounded: return "Unbounded";
    case errc::invalid_ortho_map: return "InvalidOrthoMap";
    case errc::partial_map: return "PartialMap";
    case errc::internal_disagreement: return "InternalDisagreement";
    case errc::lemma_violation: return "LemmaViolation";
    case errc::unknown_name: return "UnknownName";
    case errc::size_cap: return "SizeCap";
    case errc::universe_too_large: return "UniverseTooLarge";
    case errc::not_closed: return "NotClosed";
    case errc::negation_not_closed: return "NegationNotClosed";
    case errc::not_ortho: return "NotOrtho";
    case errc::out_of_range: return "OutOfRange";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
  }
  return "Error";
}

}  // namespace ortholat
