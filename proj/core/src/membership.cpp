#include "ortholat/membership.hpp"

namespace ortholat {

MembershipFn make_membership(std::string name, std::vector<std::string> universe,
                             std::vector<Rat> grades) {
  if (universe.size() != grades.size())
    raise(errc::partial_map, "function '" + name + "' not total on its universe");
  for (const auto& g : grades) make_grade(g);
  return MembershipFn{std::move(name), std::move(universe), std::move(grades)};
}

bool same_universe(const MembershipFn& a, const MembershipFn& b) {
  return a.universe == b.universe;
}

bool same_grades(const MembershipFn& a, const MembershipFn& b) {
  return same_universe(a, b) && a.grades == b.grades;
}

bool pointwise_leq(const MembershipFn& a, const MembershipFn& b) {
  if (!same_universe(a, b)) raise(errc::universe_mismatch, a.name + " vs " + b.name);
  for (std::size_t i = 0; i < a.grades.size(); ++i)
    if (a.grades[i] > b.grades[i]) return false;
  return true;
}

Poset pointwise_order(std::span<const MembershipFn> fns) {
  std::vector<std::string> labels;
  labels.reserve(fns.size());
  for (const auto& f : fns) {
    if (!same_universe(f, fns[0])) raise(errc::universe_mismatch, f.name);
    labels.push_back(f.name);
  }
  for (std::size_t i = 0; i < fns.size(); ++i)
    for (std::size_t j = i + 1; j < fns.size(); ++j)
      if (same_grades(fns[i], fns[j]))
        raise(errc::duplicate_label, fns[i].name + " and " + fns[j].name + " share all grades");
  return Poset::from_leq(labels, [&](int i, int j) {
    return pointwise_leq(fns[static_cast<std::size_t>(i)], fns[static_cast<std::size_t>(j)]);
  });
}

}  // namespace ortholat
