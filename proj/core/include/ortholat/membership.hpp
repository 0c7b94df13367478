#pragma once

#include <span>
#include <string>
#include <vector>

#include "ortholat/error.hpp"
#include "ortholat/poset.hpp"
#include "ortholat/rational.hpp"

namespace ortholat {

/// Map from a finite universe to exact rational grades in [0,1].
/// Crisp functions take only the grades 0 and 1.
struct MembershipFn {
  std::string name;
  std::vector<std::string> universe;
  std::vector<Rat> grades;

  int points() const { return static_cast<int>(universe.size()); }

  const Rat& at(int i) const { return grades[static_cast<std::size_t>(i)]; }

  const Rat& at(const std::string& point) const {
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (universe[i] == point) return grades[i];
    raise(errc::unknown_label, "no universe point '" + point + "'");
  }

  bool crisp() const {
    for (const auto& g : grades)
      if (g != 0 && g != 1) return false;
    return true;
  }

  static MembershipFn constant(std::string name, std::vector<std::string> universe,
                               const Rat& grade) {
    MembershipFn f{std::move(name), std::move(universe), {}};
    f.grades.assign(f.universe.size(), make_grade(grade));
    return f;
  }
};

MembershipFn make_membership(std::string name, std::vector<std::string> universe,
                             std::vector<Rat> grades);  // validates sizes and grade bounds

bool same_universe(const MembershipFn& a, const MembershipFn& b);
bool same_grades(const MembershipFn& a, const MembershipFn& b);
bool pointwise_leq(const MembershipFn& a, const MembershipFn& b);  // universe_mismatch

/// Pointwise order on a family of membership functions: f <= g iff
/// f(x) <= g(x) at every universe point. Labels are the function names.
Poset pointwise_order(std::span<const MembershipFn> fns);

}  // namespace ortholat
