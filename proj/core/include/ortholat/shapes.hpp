#pragma once

#include <string>
#include <vector>

#include "ortholat/lattice.hpp"
#include "ortholat/poset.hpp"

namespace ortholat {
namespace shapes {

/// Chain ordered by label position (first label is the bottom).
Lattice chain(const std::vector<std::string>& labels);
Lattice chain(int n);  // labels "0", "1", ...

/// Four-element diamond {0, a, b, 1} with incomparable a, b.
Lattice m2();

/// Five-element diamond {0, p, q, r, 1}: modular, non-distributive.
Lattice m3();

/// Pentagon {0, a, b, p, 1} with 0 < a < b < 1 and 0 < p < 1.
Lattice n5();

/// Hexagon {0, p, q, p⊥, q⊥, 1} with chains p < q⊥ and q < p⊥.
Lattice o6();
std::vector<int> o6_perp(const Lattice& hexagon);  // the unique orthocomplementation

/// Eight-element double hexagon: two 3-chains glued at the bounds.
/// Orthocomplemented and non-orthomodular.
Lattice o8();
std::vector<int> o8_perp(const Lattice& lat);

/// Boolean lattice with 2^k elements; labels are k-bit strings ("00".."11").
Lattice boolean_cube(int k);
std::vector<int> cube_complement(const Lattice& cube);  // bitwise complement map

/// Height-two lattice with 2k atoms paired off by the orthocomplementation
/// (a1..ak, b1..bk with ai⊥ = bi). Modular; non-distributive for k >= 2.
Lattice mo(int k);
std::vector<int> mo_perp(const Lattice& lat);

/// Three-element fence {a, b, c} with a < c and b < c: a and b share no
/// lower bound at all.
Poset no_lower_bound_poset();

/// Six-element non-lattice: a, b below the incomparable pair c, d, all
/// under 1. The pair {a, b} has upper bounds but no least one.
Poset no_least_upper_bound_poset();

/// Six-element lattice {0, n, m, p, q, 1} with covers 0<m, 0<n, m<p, n<p,
/// n<q, p<1, q<1, carrying a Kleene negation (p<->n, m<->q, 0<->1).
Lattice six_element_kleene();
std::vector<int> six_element_kleene_negation(const Lattice& lat);

}  // namespace shapes
}  // namespace ortholat
