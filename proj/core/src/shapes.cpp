#include "ortholat/shapes.hpp"

#include <bitset>

#include "ortholat/error.hpp"

namespace ortholat {
namespace shapes {

namespace {

Lattice from_cover_list(const std::vector<std::string>& labels,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
  return Lattice::from_poset(Poset::from_covers(labels, covers));
}

std::vector<int> map_by_label(const Lattice& lat,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> out(static_cast<std::size_t>(lat.size()), -1);
  for (const auto& [from, to] : pairs)
    out[static_cast<std::size_t>(lat.index_of(from))] = lat.index_of(to);
  return out;
}

}  // namespace

Lattice chain(const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return from_cover_list(labels, covers);
}

Lattice chain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return chain(labels);
}

Lattice m2() {
  return from_cover_list({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

Lattice m3() {
  return from_cover_list({"0", "p", "q", "r", "1"},
                         {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}});
}

Lattice n5() {
  return from_cover_list({"0", "a", "b", "p", "1"},
                         {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "p"}, {"p", "1"}});
}

Lattice o6() {
  return from_cover_list(
      {"0", "p", "q", "p⊥", "q⊥", "1"},
      {{"0", "p"}, {"0", "q"}, {"p", "q⊥"}, {"q", "p⊥"}, {"p⊥", "1"}, {"q⊥", "1"}});
}

std::vector<int> o6_perp(const Lattice& hexagon) {
  return map_by_label(hexagon, {{"0", "1"},
                                {"1", "0"},
                                {"p", "p⊥"},
                                {"p⊥", "p"},
                                {"q", "q⊥"},
                                {"q⊥", "q"}});
}

Lattice o8() {
  return from_cover_list({"0", "a", "b", "c", "d", "e", "f", "1"},
                         {{"0", "a"},
                          {"a", "c"},
                          {"c", "e"},
                          {"e", "1"},
                          {"0", "b"},
                          {"b", "d"},
                          {"d", "f"},
                          {"f", "1"}});
}

std::vector<int> o8_perp(const Lattice& lat) {
  return map_by_label(lat, {{"0", "1"},
                            {"1", "0"},
                            {"a", "f"},
                            {"f", "a"},
                            {"c", "d"},
                            {"d", "c"},
                            {"e", "b"},
                            {"b", "e"}});
}

Lattice boolean_cube(int k) {
  if (k < 0 || k > 6) raise(errc::size_cap, "cube exponent out of range");
  const int n = 1 << k;
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    std::string bits;
    for (int b = k - 1; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
    if (k == 0) bits = "1";
    labels.push_back(bits);
  }
  Poset p = Poset::from_leq(labels, [&](int a, int b) { return (a & ~b) == 0; });
  return Lattice::from_poset(p);
}

std::vector<int> cube_complement(const Lattice& cube) {
  const int n = cube.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = (n - 1) & ~v;
  return out;
}

Lattice mo(int k) {
  std::vector<std::string> labels{"0"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= k; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  labels.push_back("1");
  for (int i = 1; i <= k; ++i) {
    covers.push_back({"0", "a" + std::to_string(i)});
    covers.push_back({"0", "b" + std::to_string(i)});
    covers.push_back({"a" + std::to_string(i), "1"});
    covers.push_back({"b" + std::to_string(i), "1"});
  }
  return from_cover_list(labels, covers);
}

std::vector<int> mo_perp(const Lattice& lat) {
  std::vector<std::pair<std::string, std::string>> pairs{{"0", "1"}, {"1", "0"}};
  for (int i = 1;; ++i) {
    std::string a = "a" + std::to_string(i);
    if (!lat.poset().find(a)) break;
    std::string b = "b" + std::to_string(i);
    pairs.push_back({a, b});
    pairs.push_back({b, a});
  }
  return map_by_label(lat, pairs);
}

Poset no_lower_bound_poset() {
  return Poset::from_covers({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
}

Poset no_least_upper_bound_poset() {
  return Poset::from_covers({"0", "a", "b", "c", "d", "1"},
                            {{"0", "a"},
                             {"0", "b"},
                             {"a", "c"},
                             {"a", "d"},
                             {"b", "c"},
                             {"b", "d"},
                             {"c", "1"},
                             {"d", "1"}});
}

Lattice six_element_kleene() {
  return from_cover_list(
      {"0", "n", "m", "p", "q", "1"},
      {{"0", "m"}, {"0", "n"}, {"m", "p"}, {"n", "p"}, {"n", "q"}, {"p", "1"}, {"q", "1"}});
}

std::vector<int> six_element_kleene_negation(const Lattice& lat) {
  return map_by_label(
      lat, {{"0", "1"}, {"1", "0"}, {"p", "n"}, {"n", "p"}, {"m", "q"}, {"q", "m"}});
}

}  // namespace shapes
}  // namespace ortholat
