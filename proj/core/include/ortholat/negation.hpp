#pragma once

#include <string>
#include <vector>

#include "ortholat/lattice.hpp"
#include "ortholat/membership.hpp"
#include "ortholat/ortho.hpp"
#include "ortholat/rational.hpp"

namespace ortholat {

/// Classification of a unary map along the negation hierarchy.
/// The flags are cumulative by construction:
///   ortho => de Morgan => minimal => subminimal,  intuitionistic => fuzzy,
///   kleene => de Morgan,  ortho => kleene and intuitionistic,
///   orthomodular => ortho.
struct NegationFlags {
  bool subminimal = false;      // antitone
  bool minimal = false;         // + weak double negation
  bool intuitionistic = false;  // + non-contradiction
  bool fuzzy = false;           // + boundary ¬1 = 0
  bool de_morgan = false;       // + involution
  bool kleene = false;          // + x ∧ ¬x <= y ∨ ¬y
  bool ortho = false;           // de Morgan + non-contradiction
  bool orthomodular = false;    // + orthomodular identity

  struct Failure {
    std::string property;
    std::vector<int> witness;
  };
  std::vector<Failure> failures;  // first witness per failing base property

  const Failure* failure(const std::string& property) const;
};

NegationFlags classify_negation(const Lattice& lat, const UnaryMap& neg);  // partial_map

struct LemmaOutcome {
  std::string lemma;
  bool applicable = false;
  bool holds = true;
  std::vector<int> witness;
};

/// For each derived-property lemma whose hypotheses the classification
/// satisfies, checks the conclusion exhaustively. A failing applicable lemma
/// is an engine bug and throws errc::lemma_violation.
std::vector<LemmaOutcome> verify_negation_lemmas(const Lattice& lat, const UnaryMap& neg,
                                                 const NegationFlags& cls);

enum class GradeNegationFamily { standard, lambda, yager, discrete, dual_discrete };

/// Unit-interval negation: standard 1-u, the λ family (1-u)/(1+λu), the
/// Yager family (1-u^p)^(1/p), and the discrete/dual-discrete step maps.
struct GradeNegation {
  GradeNegationFamily family = GradeNegationFamily::standard;
  Rat lambda = 0;  // > -1
  Rat p = 1;       // > 0
  // Yager values are generally irrational; they are approximated to this
  // tolerance and excluded from the exact-equality harnesses.
  Rat yager_tolerance = Rat(1, BigInt("1000000000000"));
};

Rat grade_negate(const GradeNegation& neg, const Rat& u);  // out_of_range

MembershipFn negate_membership(const GradeNegation& neg, const MembershipFn& f,
                               std::string name = {});

struct LambdaDeMorganReport {
  bool antitone = true;
  bool involutive = true;
  bool fuzzy_boundary = true;  // ¬1̄ = 0̄
  std::string witness;
};

/// Checks the pointwise-lifted λ-negation on a sample of membership
/// functions: antitone, exactly involutive, and boundary-correct.
LambdaDeMorganReport verify_lambda_demorgan(std::span<const MembershipFn> sample,
                                            const Rat& lambda);

}  // namespace ortholat
