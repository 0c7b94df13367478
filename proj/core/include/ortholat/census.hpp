#pragma once

#include <cstdint>
#include <vector>

#include "ortholat/lattice.hpp"

namespace ortholat {

struct CanonicalLattice {
  Lattice lattice;
  std::uint64_t certificate = 0;
};

/// One representative per isomorphism class of lattices on n elements,
/// sorted by certificate. Generated by extending meet-semilattice order
/// ideals one maximal element at a time with canonical-form rejection at
/// every level. Throws errc::size_cap for n > 8.
std::vector<CanonicalLattice> enumerate_lattices(int n);

struct CensusCounts {
  int n = 0;
  std::size_t lattices = 0;
  std::size_t modular = 0;
  std::size_t distributive = 0;
  std::size_t uniquely_complemented = 0;
  std::size_t multiply_complemented = 0;
  std::size_t non_complemented = 0;
  std::size_t orthocomplemented = 0;
};

/// Runs the classifiers over every isomorphism class representative.
CensusCounts census(int n);

}  // namespace ortholat
