#pragma once

#include <cstdint>
#include <vector>

#include "ortholat/poset.hpp"

namespace ortholat {

/// Canonical form of a poset on at most 8 elements.
///
/// The certificate is the minimal order matrix over all relabelings,
/// flattened in the staircase cell order (k,0..k),(0..k-1,k) for k = 0..n-1
/// and packed into one 64-bit word, first cell highest. Two posets are
/// isomorphic iff their certificates are equal.
struct CanonicalForm {
  std::uint64_t certificate = 0;
  int n = 0;
  std::vector<int> perm;  // perm[pos] = original element placed at canonical position pos
};

CanonicalForm canonical_form(const Poset& p);  // throws errc::size_cap beyond 8 elements

}  // namespace ortholat
