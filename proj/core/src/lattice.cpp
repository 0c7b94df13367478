#include "ortholat/lattice.hpp"

#include <algorithm>

#include "ortholat/canonical.hpp"
#include "ortholat/error.hpp"
#include "ortholat/shapes.hpp"

namespace ortholat {

Lattice Lattice::from_poset(const Poset& p) {
  auto check = p.lattice_check();
  if (!check.is_lattice) {
    raise(errc::not_a_lattice,
          std::string("pair {") + p.label(check.witness_a) + "," + p.label(check.witness_b) +
              "} lacks a " + (check.missing_join ? "least upper bound" : "greatest lower bound"));
  }
  Lattice lat;
  lat.poset_ = p;
  const int n = p.size();
  lat.meet_.assign(static_cast<std::size_t>(n * n), -1);
  lat.join_.assign(static_cast<std::size_t>(n * n), -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poset::Mask pair = (Poset::Mask(1) << i) | (Poset::Mask(1) << j);
      lat.meet_[static_cast<std::size_t>(i * n + j)] = *p.glb(pair);
      lat.join_[static_cast<std::size_t>(i * n + j)] = *p.lub(pair);
    }
  if (n > 0) {
    lat.bottom_ = *p.bottom();
    lat.top_ = *p.top();
  }
  return lat;
}

Lattice Lattice::from_tables_unchecked(const Poset& p, std::vector<int> meet,
                                       std::vector<int> join) {
  Lattice lat;
  lat.poset_ = p;
  lat.meet_ = std::move(meet);
  lat.join_ = std::move(join);
  if (p.size() > 0) {
    lat.bottom_ = p.bottom().value_or(-1);
    lat.top_ = p.top().value_or(-1);
  }
  return lat;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void record(AxiomReport& report, const std::string& name, bool ok, std::vector<int> witness) {
  AxiomCheck check{name, ok, {}};
  if (!ok) check.witness = std::move(witness);
  report.checks.push_back(std::move(check));
  report.all_ok = report.all_ok && ok;
}

template <typename Pred>
void check_all_pairs(AxiomReport& report, const std::string& name, int n, Pred pred) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!pred(x, y)) {
        record(report, name, false, {x, y});
        return;
      }
  record(report, name, true, {});
}

template <typename Pred>
void check_all_triples(AxiomReport& report, const std::string& name, int n, Pred pred) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!pred(x, y, z)) {
          record(report, name, false, {x, y, z});
          return;
        }
  record(report, name, true, {});
}

}  // namespace

AxiomReport verify_axioms(const Lattice& lat) {
  AxiomReport report;
  const int n = lat.size();
  auto leq = [&](int a, int b) { return lat.leq(a, b); };

  {
    bool ok = true;
    std::vector<int> w;
    for (int x = 0; x < n && ok; ++x)
      if (lat.join(x, x) != x || lat.meet(x, x) != x) {
        ok = false;
        w = {x};
      }
    record(report, "idempotent", ok, std::move(w));
  }
  check_all_pairs(report, "commutative", n, [&](int x, int y) {
    return lat.join(x, y) == lat.join(y, x) && lat.meet(x, y) == lat.meet(y, x);
  });
  check_all_triples(report, "associative", n, [&](int x, int y, int z) {
    return lat.join(x, lat.join(y, z)) == lat.join(lat.join(x, y), z) &&
           lat.meet(x, lat.meet(y, z)) == lat.meet(lat.meet(x, y), z);
  });
  check_all_pairs(report, "absorptive", n, [&](int x, int y) {
    return lat.join(x, lat.meet(x, y)) == x && lat.meet(x, lat.join(x, y)) == x;
  });

  if (lat.bounded()) {
    bool ok = true;
    std::vector<int> w;
    for (int x = 0; x < n && ok; ++x) {
      if (lat.join(x, lat.bottom()) != x || lat.meet(x, lat.top()) != x ||
          lat.join(x, lat.top()) != lat.top() || lat.meet(x, lat.bottom()) != lat.bottom()) {
        ok = false;
        w = {x};
      }
    }
    record(report, "bound-identities", ok, std::move(w));
  }

  check_all_triples(report, "join-super-distributive", n, [&](int x, int y, int z) {
    return leq(lat.join(lat.meet(x, y), lat.meet(x, z)), lat.meet(x, lat.join(y, z)));
  });
  check_all_triples(report, "meet-sub-distributive", n, [&](int x, int y, int z) {
    return leq(lat.join(x, lat.meet(y, z)), lat.meet(lat.join(x, y), lat.join(x, z)));
  });
  check_all_triples(report, "median-inequality", n, [&](int x, int y, int z) {
    int lo = lat.join(lat.join(lat.meet(x, y), lat.meet(x, z)), lat.meet(y, z));
    int hi = lat.meet(lat.meet(lat.join(x, y), lat.join(x, z)), lat.join(y, z));
    return leq(lo, hi);
  });
  check_all_triples(report, "modular-inequality", n, [&](int x, int y, int z) {
    if (!leq(x, y)) return true;
    return leq(lat.join(x, lat.meet(y, z)), lat.meet(y, lat.join(x, z)));
  });

  {
    bool ok = true;
    std::vector<int> w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (!leq(a, b)) continue;
        for (int x = 0; x < n && ok; ++x)
          for (int y = 0; y < n && ok; ++y) {
            if (!leq(x, y)) continue;
            if (!leq(lat.meet(a, x), lat.meet(b, y)) || !leq(lat.join(a, x), lat.join(b, y))) {
              ok = false;
              w = {a, b, x, y};
            }
          }
      }
    record(report, "monotony", ok, std::move(w));
  }

  return report;
}

ModularityVerdict is_modular(const Lattice& lat) {
  ModularityVerdict verdict;
  const int n = lat.size();
  for (int x = 0; x < n && verdict.modular; ++x)
    for (int y = 0; y < n && verdict.modular; ++y)
      for (int a = 0; a < n && verdict.modular; ++a) {
        if (!lat.leq(a, y)) continue;
        if (lat.meet(y, lat.join(x, a)) != lat.join(lat.meet(y, x), a)) {
          verdict.modular = false;
          verdict.witness = {x, y, a};
        }
      }

  const bool pentagon_free = !find_sublattice(lat, SublatticePattern::n5).has_value();
  if (pentagon_free != verdict.modular)
    raise(errc::internal_disagreement, "modularity scan and pentagon search disagree");
  return verdict;
}

DistributivityVerdict is_distributive(const Lattice& lat) {
  DistributivityVerdict verdict;
  const int n = lat.size();
  bool conjunctive_ok = true;
  bool median_ok = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z))) {
          if (verdict.distributive) {
            verdict.distributive = false;
            verdict.witness = {x, y, z};
          }
        }
        if (lat.join(x, lat.meet(y, z)) != lat.meet(lat.join(x, y), lat.join(x, z)))
          conjunctive_ok = false;
        int lo = lat.join(lat.join(lat.meet(x, y), lat.meet(x, z)), lat.meet(y, z));
        int hi = lat.meet(lat.meet(lat.join(x, y), lat.join(x, z)), lat.join(y, z));
        if (lo != hi) median_ok = false;
      }

  if (conjunctive_ok != verdict.distributive || median_ok != verdict.distributive)
    raise(errc::internal_disagreement, "distributive law forms disagree");

  const bool forbidden_free = !find_sublattice(lat, SublatticePattern::n5).has_value() &&
                              !find_sublattice(lat, SublatticePattern::m3).has_value();
  if (forbidden_free != verdict.distributive)
    raise(errc::internal_disagreement, "triple scan and forbidden-sublattice search disagree");

  if (verdict.distributive && !is_modular(lat).modular)
    raise(errc::internal_disagreement, "distributive lattice failed the modularity scan");

  return verdict;
}

const Lattice& pattern_lattice(SublatticePattern pattern) {
  static const Lattice pent = shapes::n5();
  static const Lattice diam = shapes::m3();
  static const Lattice cube = shapes::boolean_cube(3);
  switch (pattern) {
    case SublatticePattern::n5: return pent;
    case SublatticePattern::m3: return diam;
    case SublatticePattern::cube8: return cube;
  }
  return pent;
}

std::optional<std::vector<int>> find_sublattice(const Lattice& lat, SublatticePattern pattern) {
  const Lattice& pat = pattern_lattice(pattern);
  const int k = pat.size();
  const int n = lat.size();
  if (k > n) return std::nullopt;

  static thread_local std::uint64_t pattern_cert[3] = {0, 0, 0};
  static thread_local std::vector<int> pattern_perm[3];
  const auto idx = static_cast<std::size_t>(pattern);
  if (pattern_perm[idx].empty()) {
    auto cf = canonical_form(pat.poset());
    pattern_cert[idx] = cf.certificate;
    pattern_perm[idx] = cf.perm;
  }

  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;

  while (true) {
    Poset::Mask subset = 0;
    for (int e : pick) subset |= Poset::Mask(1) << e;

    bool closed = true;
    for (int i = 0; i < k && closed; ++i)
      for (int j = i + 1; j < k && closed; ++j) {
        int a = pick[static_cast<std::size_t>(i)], b = pick[static_cast<std::size_t>(j)];
        if (!((subset >> lat.meet(a, b)) & 1u) || !((subset >> lat.join(a, b)) & 1u))
          closed = false;
      }

    if (closed) {
      auto cf = canonical_form(lat.poset().restrict_to(subset));
      if (cf.certificate == pattern_cert[idx]) {
        // canonical position t holds pattern element pattern_perm[t] and
        // subset element cf.perm[t]; compose to get the embedding
        std::vector<int> embedding(static_cast<std::size_t>(k), -1);
        for (int t = 0; t < k; ++t) {
          int pat_elem = pattern_perm[idx][static_cast<std::size_t>(t)];
          int sub_elem = pick[static_cast<std::size_t>(cf.perm[static_cast<std::size_t>(t)])];
          embedding[static_cast<std::size_t>(pat_elem)] = sub_elem;
        }
        return embedding;
      }
    }

    // next k-combination
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q)
      pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
  }
  return std::nullopt;
}

}  // namespace ortholat
