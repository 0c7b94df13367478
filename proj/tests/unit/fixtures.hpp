#pragma once

#include <string>
#include <vector>

#include "ortholat/membership.hpp"
#include "ortholat/rational.hpp"

namespace fixtures {

using ortholat::MembershipFn;
using ortholat::Rat;
using ortholat::parse_rat;

inline MembershipFn fn(const std::string& name, const std::vector<std::string>& universe,
                       const std::vector<std::string>& grades) {
  std::vector<Rat> parsed;
  for (const auto& g : grades) parsed.push_back(parse_rat(g));
  return ortholat::make_membership(name, universe, parsed);
}

// Four functions on a three-point universe whose pointwise order is the
// diamond with incomparable mA, mB; standard negation swaps mA<->mB and
// m0<->m1. The induced join lands on m1 whose grades break pointwise
// evaluation (inputs collide at x1 and x3).
inline std::vector<MembershipFn> e21() {
  const std::vector<std::string> u{"x1", "x2", "x3"};
  return {
      fn("m0", u, {"1/10", "1/10", "1/20"}),
      fn("mA", u, {"1/5", "7/10", "1/5"}),
      fn("mB", u, {"4/5", "3/10", "4/5"}),
      fn("m1", u, {"9/10", "9/10", "19/20"}),
  };
}

// Six functions whose pointwise order is the hexagon; the standard negation
// realizes its unique orthocomplementation.
inline std::vector<MembershipFn> e22() {
  const std::vector<std::string> u{"x1", "x2"};
  return {
      fn("m0", u, {"0", "0"}),
      fn("mp", u, {"3/5", "1/10"}),
      fn("mq", u, {"1/10", "3/5"}),
      fn("mp⊥", u, {"2/5", "9/10"}),
      fn("mq⊥", u, {"9/10", "2/5"}),
      fn("m1", u, {"1", "1"}),
  };
}

// Eight functions ordered as the Boolean cube; atoms peak at distinct
// universe points and the standard negation is the complementation.
inline std::vector<MembershipFn> e23() {
  const std::vector<std::string> u{"x1", "x2", "x3"};
  return {
      fn("m0", u, {"0", "0", "0"}),
      fn("mA", u, {"3/5", "1/5", "1/5"}),
      fn("mB", u, {"1/5", "3/5", "1/5"}),
      fn("mC", u, {"1/5", "1/5", "3/5"}),
      fn("mAB", u, {"4/5", "4/5", "2/5"}),
      fn("mAC", u, {"4/5", "2/5", "4/5"}),
      fn("mBC", u, {"2/5", "4/5", "4/5"}),
      fn("m1", u, {"1", "1", "1"}),
  };
}

// Ten-function min-max-closed family: the {1/4,3/4}-cube plus the constant
// bounds. Distributive, non-Boolean, and the cube sits inside as a Boolean
// sublattice; excluded middle and non-contradiction fail at mA.
inline std::vector<MembershipFn> ten_element_cube_family() {
  const std::vector<std::string> u{"x1", "x2", "x3"};
  std::vector<MembershipFn> out;
  out.push_back(fn("m0", u, {"0", "0", "0"}));
  const char* lo = "1/4";
  const char* hi = "3/4";
  const char* names[8] = {"mG", "mC", "mB", "mBC", "mA", "mAC", "mAB", "mK"};
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::string> grades{(mask & 4) ? hi : lo, (mask & 2) ? hi : lo,
                                    (mask & 1) ? hi : lo};
    out.push_back(fn(names[mask], u, grades));
  }
  out.push_back(fn("m1", u, {"1", "1", "1"}));
  return out;
}

}  // namespace fixtures
