#include "ortholat/canonical.hpp"

#include "ortholat/error.hpp"

namespace ortholat {

namespace {

struct Minimizer {
  const Poset& p;
  int n;
  std::uint64_t best = 0;
  bool best_set = false;
  std::vector<int> best_perm;
  std::vector<int> perm;

  explicit Minimizer(const Poset& poset) : p(poset), n(poset.size()) {
    perm.reserve(static_cast<std::size_t>(n));
  }

  // bits laid out MSB-first; bitpos counts consumed bits
  void rec(int k, std::uint64_t cur, int bitpos) {
    if (k == n) {
      if (!best_set || cur < best) {
        best = cur;
        best_set = true;
        best_perm = perm;
      }
      return;
    }
    const int len = 2 * k + 1;
    for (int u = 0; u < n; ++u) {
      bool used = false;
      for (int v : perm)
        if (v == u) { used = true; break; }
      if (used) continue;

      std::uint64_t seg = 0;
      for (int col = 0; col <= k; ++col) {
        int other = (col == k) ? u : perm[static_cast<std::size_t>(col)];
        seg = (seg << 1) | (p.leq(u, other) ? 1u : 0u);
      }
      for (int row = 0; row < k; ++row)
        seg = (seg << 1) | (p.leq(perm[static_cast<std::size_t>(row)], u) ? 1u : 0u);

      const std::uint64_t next = cur | (seg << (64 - bitpos - len));
      if (best_set) {
        // a prefix already above the incumbent cannot reach a smaller value
        const int shift = 64 - bitpos - len;
        if ((next >> shift) > (best >> shift)) continue;
      }
      perm.push_back(u);
      rec(k + 1, next, bitpos + len);
      perm.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
  if (p.size() > 8) raise(errc::size_cap, "canonical form limited to 8 elements");
  CanonicalForm out;
  out.n = p.size();
  if (p.size() == 0) return out;
  Minimizer m(p);
  m.rec(0, 0, 0);
  out.certificate = m.best;
  out.perm = m.best_perm;
  return out;
}

}  // namespace ortholat
