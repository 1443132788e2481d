#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpm/maps.hpp"

namespace qpm {

// The contractive hypotheses the verdict machinery can check, all quantified
// over ordered pairs (x,y), diagonal included (trivially true there):
//   LinearJ      H(Fx,Fy) <= alpha * d(Jx,Jy)
//   KannanJ      H(Fx,Fy) <= alpha * (d(Jx,Fx) + d(Jy,Fy))
//   ChatterjeaJ  H(Fx,Fy) <= alpha * (d(Jx,Fy) + d(Fx,Jy))
//   AlmostJ      H(Fx,Fy) <= alpha * d(Jx,Jy) + L * d(Fx,Jy)
//   PsiJ         H(Fx,Fy) <= psi(d(Jx,Jy)), with psi(t) < t at realized t > 0
enum class ConditionTag { PsiJ, LinearJ, KannanJ, ChatterjeaJ, AlmostJ };

const char* tag_name(ConditionTag tag);

// Piecewise-linear comparison function: interpolates the breakpoints and
// extends past the last one with slope tailSlope. First breakpoint must sit
// at t = 0 so evaluation is total on [0,inf). psi(0) = 0 is allowed but not
// required; the strictness psi(t) < t is checked against realized distances,
// not here.
struct PsiSpec {
    std::vector<std::pair<Rational, Rational>> breakpoints;
    Rational tailSlope;

    void validate() const;
    Rational eval(const Rational& t) const;

    static PsiSpec linear(const Rational& k) { return PsiSpec{{{Rational(0), Rational(0)}}, k}; }
};

struct Condition {
    ConditionTag tag = ConditionTag::LinearJ;
    Rational alpha;
    Rational L;
    std::optional<Rational> r; // expansion constant; required for the linear family
    std::optional<PsiSpec> psi;

    static Condition linear(Rational alpha, Rational r);
    static Condition kannan(Rational alpha, Rational r);
    static Condition chatterjea(Rational alpha, Rational r);
    static Condition almost(Rational alpha, Rational L, Rational r);
    static Condition psi_contraction(PsiSpec psi, std::optional<Rational> r = std::nullopt);
};

// Constant ranges per condition family, b-aware (b = 1 gives the plain
// forms):
//   LinearJ      alpha in (0,1),   r > 0, r*alpha*b^2 < 1
//   KannanJ      alpha in (0,1/2), r > 0
//   ChatterjeaJ  alpha in (0,1/2), r > 0, 2*r*alpha*b^2 < 1
//   AlmostJ      alpha > 0, L >= 0, r > 0, r*b^2*(alpha + b*L) < 1
//   PsiJ         psi present; r > 0 when given
// Returns one message per violated range; empty means ok.
std::vector<std::string> range_violations(const Condition& c, const Rational& b);

// Worst ordered pair of an exhaustive scan: the one maximizing lhs - rhs,
// ties broken by lowest (x,y).
struct PairWitness {
    int x = -1;
    int y = -1;
    Rational lhs;
    Rational rhs;
};

struct CheckResult {
    bool holds = true;
    PairWitness worst;
};

// Inequality scan only; no range validation. Exposed so fitted constants can
// be re-checked even when they sit outside the theorem ranges (e.g. a fitted
// alpha of exactly 0).
CheckResult evaluate_condition(const Space& s, const MultiMap& f, const SelfMap& j,
                               const Condition& c);

// Range validation (throws input_error listing the violated ranges) followed
// by the exhaustive inequality scan.
CheckResult check_condition(const Space& s, const MultiMap& f, const SelfMap& j,
                            const Condition& c);

// r*d(x,y) <= d(Jx,Jy) over all ordered pairs; r must be positive.
CheckResult check_expansion(const Space& s, const SelfMap& j, const Rational& r);

// Contraction inequality + strictness check for a PsiJ condition. The
// paper-side conditions with no finite-data meaning (upper semicontinuity,
// liminf at infinity) are assumed, never checked; theorem_verdict records
// them in its assumed list.
struct PsiCheck {
    bool inequalityHolds = true;
    PairWitness worstPair;
    bool strictnessHolds = true;
    Rational strictnessT;    // realized t > 0 with psi(t) >= t, when violated
    Rational strictnessPsiT;

    bool holds() const { return inequalityHolds && strictnessHolds; }
};

PsiCheck check_psi(const Space& s, const MultiMap& f, const SelfMap& j, const PsiSpec& psi);

// Tightest constants for one condition family on one instance:
//   alpha (and L for AlmostJ) minimal such that the inequality holds,
//   rMax the largest r with r*d(x,y) <= d(Jx,Jy) everywhere.
// infeasible when no constants work (a pair with zero rhs-denominator and
// positive lhs); rUnbounded when no pair has d(x,y) > 0.
struct FitResult {
    bool feasible = true;
    std::string note;
    Rational alpha;
    Rational L;
    bool rUnbounded = false;
    Rational rMax;
};

FitResult fit_constants(const Space& s, const MultiMap& f, const SelfMap& j, ConditionTag tag);

// End-to-end check of one theorem-shaped statement on one instance:
// hypotheses (ranges, condition, expansion, separation) against the
// conclusion (mix-point property iff unique combined start/endpoint, plus
// the J-fixed-point corollary under t0).
struct TheoremVerdict {
    Condition condition;

    bool rangeOk = true;
    std::vector<std::string> rangeViolationList;
    bool conditionHolds = true;
    PairWitness conditionWorst;
    bool expansionHolds = true; // vacuously true when the condition carries no r
    PairWitness expansionWorst;
    bool psiStrictOk = true; // PsiJ only
    bool t0 = true;          // separation; part of bicompleteness on finite spaces
    std::vector<std::string> assumed;

    bool hypothesesHold = true;

    Rational mixValue;
    std::vector<int> mixWitnesses;
    std::vector<int> combinedPoints; // startValue = endValue = 0
    std::vector<int> jFixedPoints;   // Jx in Fx

    bool conclusionIff = true; // |combinedPoints| == 1  <=>  mixValue == 0
    bool corollaryOk = true;   // hypotheses && mixValue == 0 => some J-fixed point
    bool consistent = true;    // hypotheses => (conclusionIff && corollaryOk)

    // Stated product range (r*alpha*b^2 style) violated while the weaker
    // ranges hold and the conclusion holds anyway; empirical evidence that
    // the product plays no role.
    bool rangeOddity = false;
};

TheoremVerdict theorem_verdict(const Space& s, const MultiMap& f, const SelfMap& j,
                               const Condition& c);

} // namespace qpm
