#include "ortholat/negation.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ortholat/error.hpp"

namespace ortholat {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

Float to_float(const Rat& r) {
  return Float(numerator(r)) / Float(denominator(r));
}

// dyadic approximation with error below 2^-64, well under any sane tolerance
Rat to_rat(const Float& v) {
  const BigInt scale = BigInt(1) << 64;
  Float scaled = v * Float(scale);
  BigInt num = scaled.convert_to<BigInt>();
  Rat out(num, scale);
  if (out < 0) out = 0;
  if (out > 1) out = 1;
  return out;
}

}  // namespace

const NegationFlags::Failure* NegationFlags::failure(const std::string& property) const {
  for (const auto& f : failures)
    if (f.property == property) return &f;
  return nullptr;
}

NegationFlags classify_negation(const Lattice& lat, const UnaryMap& neg) {
  const int n = lat.size();
  if (static_cast<int>(neg.size()) != n) raise(errc::partial_map, "map not total on carrier");
  for (int x = 0; x < n; ++x)
    if (neg[static_cast<std::size_t>(x)] < 0 || neg[static_cast<std::size_t>(x)] >= n)
      raise(errc::partial_map, "map leaves the carrier");

  auto ng = [&](int x) { return neg[static_cast<std::size_t>(x)]; };
  NegationFlags out;

  bool antitone = true, wdn = true, noncontra = true, boundary = true, involutive = true,
       kleene_cond = true, om_identity = true;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (lat.leq(x, y) && !lat.leq(ng(y), ng(x))) {
        if (antitone) out.failures.push_back({"antitone", {x, y}});
        antitone = false;
      }
  for (int x = 0; x < n; ++x)
    if (!lat.leq(x, ng(ng(x)))) {
      if (wdn) out.failures.push_back({"weak-double-negation", {x}});
      wdn = false;
    }
  for (int x = 0; x < n; ++x)
    if (lat.meet(x, ng(x)) != lat.bottom()) {
      if (noncontra) out.failures.push_back({"non-contradiction", {x}});
      noncontra = false;
    }
  if (n > 0 && ng(lat.top()) != lat.bottom()) {
    out.failures.push_back({"boundary", {lat.top()}});
    boundary = false;
  }
  for (int x = 0; x < n; ++x)
    if (ng(ng(x)) != x) {
      if (involutive) out.failures.push_back({"involution", {x}});
      involutive = false;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!lat.leq(lat.meet(x, ng(x)), lat.join(y, ng(y)))) {
        if (kleene_cond) out.failures.push_back({"kleene-condition", {x, y}});
        kleene_cond = false;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (lat.leq(x, y) && lat.join(x, lat.meet(ng(x), y)) != y) {
        if (om_identity) out.failures.push_back({"orthomodular-identity", {x, y}});
        om_identity = false;
      }

  out.subminimal = antitone;
  out.minimal = antitone && wdn;
  out.intuitionistic = out.minimal && noncontra;
  out.fuzzy = out.minimal && boundary;
  out.de_morgan = out.minimal && involutive;
  out.kleene = out.de_morgan && kleene_cond;
  out.ortho = out.de_morgan && noncontra;
  out.orthomodular = out.ortho && om_identity;
  return out;
}

namespace {

void check_lemma(std::vector<LemmaOutcome>& out, const std::string& name, bool applicable,
                 bool holds, std::vector<int> witness) {
  LemmaOutcome o{name, applicable, true, {}};
  if (applicable && !holds) {
    o.holds = false;
    o.witness = std::move(witness);
    out.push_back(o);
    raise(errc::lemma_violation, name);
  }
  out.push_back(o);
}

}  // namespace

std::vector<LemmaOutcome> verify_negation_lemmas(const Lattice& lat, const UnaryMap& neg,
                                                 const NegationFlags& cls) {
  std::vector<LemmaOutcome> out;
  const int n = lat.size();
  if (n == 0) return out;
  auto ng = [&](int x) { return neg[static_cast<std::size_t>(x)]; };

  bool antitone = cls.subminimal;
  bool involutive = !cls.failure("involution");

  auto scan_pairs = [&](auto pred, std::vector<int>& witness) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!pred(x, y)) {
          witness = {x, y};
          return false;
        }
    return true;
  };

  std::vector<int> w;

  // antitone gives both de Morgan inequalities
  bool ineq = scan_pairs(
      [&](int x, int y) {
        return lat.leq(lat.join(ng(x), ng(y)), ng(lat.meet(x, y))) &&
               lat.leq(ng(lat.join(x, y)), lat.meet(ng(x), ng(y)));
      },
      w);
  check_lemma(out, "de-morgan-inequalities", antitone, ineq, w);

  // under involution, antitone is equivalent to the de Morgan equalities
  bool equalities = scan_pairs(
      [&](int x, int y) {
        return ng(lat.join(x, y)) == lat.meet(ng(x), ng(y)) &&
               ng(lat.meet(x, y)) == lat.join(ng(x), ng(y));
      },
      w);
  check_lemma(out, "de-morgan-equalities-iff-antitone", involutive, equalities == antitone, w);

  const bool wdn = cls.minimal || !cls.failure("weak-double-negation");
  const bool neg1_is_0 = ng(lat.top()) == lat.bottom();
  check_lemma(out, "boundary-from-weak-double-negation", wdn && neg1_is_0,
              ng(lat.bottom()) == lat.top(), {lat.bottom()});

  const bool noncontra = !cls.failure("non-contradiction");
  check_lemma(out, "boundary-from-non-contradiction", noncontra, neg1_is_0, {lat.top()});

  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  bool bijective = true;
  for (int x = 0; x < n; ++x) {
    if (hit[static_cast<std::size_t>(ng(x))]) bijective = false;
    hit[static_cast<std::size_t>(ng(x))] = true;
  }
  check_lemma(out, "boundaries-from-bijective-antitone", bijective && antitone,
              ng(lat.bottom()) == lat.top() && neg1_is_0, {});

  check_lemma(out, "fuzzy-boundary", cls.fuzzy, ng(lat.bottom()) == lat.top(),
              {lat.bottom()});

  check_lemma(out, "intuitionistic-consequences", cls.intuitionistic,
              neg1_is_0 && ng(lat.bottom()) == lat.top() && cls.fuzzy, {});

  check_lemma(out, "minimal-de-morgan-inequalities", cls.minimal, ineq, w);
  check_lemma(out, "de-morgan-equalities", cls.de_morgan, equalities, w);

  if (cls.ortho) {
    bool em = scan_pairs([&](int x, int) { return lat.join(x, ng(x)) == lat.top(); }, w);
    bool kc = scan_pairs(
        [&](int x, int y) { return lat.leq(lat.meet(x, ng(x)), lat.join(y, ng(y))); }, w);
    check_lemma(out, "ortho-consequences", true,
                neg1_is_0 && ng(lat.bottom()) == lat.top() && equalities && em && kc, w);
  } else {
    check_lemma(out, "ortho-consequences", false, true, {});
  }
  return out;
}

Rat grade_negate(const GradeNegation& neg, const Rat& u) {
  if (!is_grade(u)) raise(errc::out_of_range, "grade " + rat_str(u) + " outside [0,1]");
  switch (neg.family) {
    case GradeNegationFamily::standard:
      return 1 - u;
    case GradeNegationFamily::lambda: {
      if (neg.lambda <= -1) raise(errc::out_of_range, "lambda must exceed -1");
      return Rat(1 - u) / Rat(1 + neg.lambda * u);
    }
    case GradeNegationFamily::yager: {
      if (neg.p <= 0) raise(errc::out_of_range, "yager exponent must be positive");
      if (neg.p == 1) return 1 - u;  // collapses to the standard negation, exactly
      if (u == 0) return 1;
      if (u == 1) return 0;
      Float uf = to_float(u);
      Float pf = to_float(neg.p);
      Float value = pow(Float(1) - pow(uf, pf), Float(1) / pf);
      return to_rat(value);
    }
    case GradeNegationFamily::discrete:
      return u == 0 ? Rat(1) : Rat(0);
    case GradeNegationFamily::dual_discrete:
      return u == 1 ? Rat(0) : Rat(1);
  }
  raise(errc::out_of_range, "unknown grade negation family");
}

MembershipFn negate_membership(const GradeNegation& neg, const MembershipFn& f,
                               std::string name) {
  MembershipFn out;
  out.name = name.empty() ? "¬" + f.name : std::move(name);
  out.universe = f.universe;
  out.grades.reserve(f.grades.size());
  for (const auto& g : f.grades) out.grades.push_back(grade_negate(neg, g));
  return out;
}

LambdaDeMorganReport verify_lambda_demorgan(std::span<const MembershipFn> sample,
                                            const Rat& lambda) {
  if (lambda <= -1) raise(errc::out_of_range, "lambda must exceed -1");
  GradeNegation neg{GradeNegationFamily::lambda, lambda};
  LambdaDeMorganReport rep;
  for (const auto& f : sample) {
    MembershipFn nf = negate_membership(neg, f);
    MembershipFn nnf = negate_membership(neg, nf);
    if (rep.involutive && !same_grades(nnf, f)) {
      rep.involutive = false;
      rep.witness = "double negation moved " + f.name;
    }
    for (const auto& g : sample) {
      if (!same_universe(f, g)) raise(errc::universe_mismatch, "sample universes differ");
      if (rep.antitone && pointwise_leq(f, g) &&
          !pointwise_leq(negate_membership(neg, g), nf)) {
        rep.antitone = false;
        rep.witness = "antitone fails on " + f.name + " <= " + g.name;
      }
    }
  }
  if (!sample.empty()) {
    MembershipFn one = MembershipFn::constant("1", sample[0].universe, 1);
    MembershipFn zero = MembershipFn::constant("0", sample[0].universe, 0);
    if (!same_grades(negate_membership(neg, one), zero)) {
      rep.fuzzy_boundary = false;
      rep.witness = "¬1̄ differs from 0̄";
    }
  }
  return rep;
}

}  // namespace ortholat
