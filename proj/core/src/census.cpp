#include "ortholat/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include "ortholat/canonical.hpp"
#include "ortholat/error.hpp"
#include "ortholat/ortho.hpp"

namespace ortholat {

namespace {

// Meet-semilattice with least element, stored as down-set masks (self
// included). Prefixes of a lattice linear extension look exactly like this.
struct Partial {
  int k = 0;
  std::array<std::uint64_t, 8> down{};
};

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

Poset to_poset(const Partial& s) {
  return Poset::from_leq(numbered_labels(s.k), [&](int i, int j) {
    return (s.down[static_cast<std::size_t>(j)] >> i) & 1u;
  });
}

// subset S of elements has a maximum in the down-set sense
bool has_maximum(const Partial& s, std::uint64_t subset) {
  for (std::uint64_t rest = subset; rest;) {
    int m = std::countr_zero(rest);
    rest &= rest - 1;
    if ((subset & ~s.down[static_cast<std::size_t>(m)]) == 0) return true;
  }
  return false;
}

bool is_down_closed(const Partial& s, std::uint64_t subset) {
  for (std::uint64_t rest = subset; rest;) {
    int m = std::countr_zero(rest);
    rest &= rest - 1;
    if (s.down[static_cast<std::size_t>(m)] & ~subset) return false;
  }
  return true;
}

}  // namespace

std::vector<CanonicalLattice> enumerate_lattices(int n) {
  if (n < 0 || n > 8) raise(errc::size_cap, "lattice enumeration limited to 8 elements");
  std::vector<CanonicalLattice> out;
  if (n == 0) {
    out.push_back({Lattice::from_poset(Poset::from_covers({}, {})), 0});
    return out;
  }

  std::map<std::uint64_t, Partial> level;
  Partial seed;
  seed.k = 1;
  seed.down[0] = 1;
  level.emplace(canonical_form(to_poset(seed)).certificate, seed);

  for (int k = 1; k < n; ++k) {
    std::map<std::uint64_t, Partial> next;
    for (const auto& [cert, s] : level) {
      (void)cert;
      const std::uint64_t full = (std::uint64_t(1) << k) - 1;
      for (std::uint64_t d = 1; d <= full; ++d) {
        if (!is_down_closed(s, d)) continue;
        // meets with the new maximal element must exist
        bool meets_ok = true;
        for (int x = 0; x < k && meets_ok; ++x)
          meets_ok = has_maximum(s, s.down[static_cast<std::size_t>(x)] & d);
        if (!meets_ok) continue;

        Partial t = s;
        t.k = k + 1;
        t.down[static_cast<std::size_t>(k)] = d | (std::uint64_t(1) << k);
        std::uint64_t c = canonical_form(to_poset(t)).certificate;
        next.emplace(c, t);
      }
    }
    level = std::move(next);
  }

  for (const auto& [cert, s] : level) {
    // a meet-semilattice with a greatest element is a lattice
    int maximal = 0;
    for (int i = 0; i < s.k; ++i) {
      bool below_other = false;
      for (int j = 0; j < s.k && !below_other; ++j)
        below_other = j != i && ((s.down[static_cast<std::size_t>(j)] >> i) & 1u);
      if (!below_other) ++maximal;
    }
    if (maximal != 1) continue;
    out.push_back({Lattice::from_poset(to_poset(s)), cert});
  }
  std::sort(out.begin(), out.end(),
            [](const CanonicalLattice& a, const CanonicalLattice& b) {
              return a.certificate < b.certificate;
            });
  return out;
}

CensusCounts census(int n) {
  CensusCounts counts;
  counts.n = n;
  auto classes = enumerate_lattices(n);
  counts.lattices = classes.size();
  for (const auto& c : classes) {
    if (is_modular(c.lattice).modular) ++counts.modular;
    if (is_distributive(c.lattice).distributive) ++counts.distributive;
    if (n >= 1) {
      switch (complement_class(c.lattice).kind) {
        case ComplementKind::uniquely_complemented: ++counts.uniquely_complemented; break;
        case ComplementKind::multiply_complemented: ++counts.multiply_complemented; break;
        case ComplementKind::non_complemented: ++counts.non_complemented; break;
      }
      if (!find_orthocomplementations(c.lattice).empty()) ++counts.orthocomplemented;
    }
  }
  return counts;
}

}  // namespace ortholat
