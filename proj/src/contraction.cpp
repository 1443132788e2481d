#include "qpm/contraction.hpp"

#include <algorithm>

namespace qpm {

const char* tag_name(ConditionTag tag) {
    switch (tag) {
    case ConditionTag::PsiJ: return "psi_j";
    case ConditionTag::LinearJ: return "linear_j";
    case ConditionTag::KannanJ: return "kannan_j";
    case ConditionTag::ChatterjeaJ: return "chatterjea_j";
    case ConditionTag::AlmostJ: return "almost_j";
    }
    return "?";
}

void PsiSpec::validate() const {
    if (breakpoints.empty())
        throw input_error("psi: needs at least one breakpoint");
    if (!breakpoints.front().first.is_zero())
        throw input_error("psi: first breakpoint must be at t = 0");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i].second.is_negative())
            throw input_error("psi: values must be nonnegative");
        if (i > 0 && !(breakpoints[i - 1].first < breakpoints[i].first))
            throw input_error("psi: breakpoints must be strictly increasing in t");
    }
    if (tailSlope.is_negative())
        throw input_error("psi: tail slope must be nonnegative");
}

Rational PsiSpec::eval(const Rational& t) const {
    if (t.is_negative())
        throw input_error("psi: negative argument");
    const auto& bp = breakpoints;
    if (t >= bp.back().first)
        return bp.back().second + tailSlope * (t - bp.back().first);
    // t < last breakpoint, and bp.front().first == 0 <= t: interpolate.
    std::size_t hi = 1;
    while (bp[hi].first < t || bp[hi].first == t ? bp[hi].first < t : false)
        ++hi;
    while (!(t < bp[hi].first) && hi + 1 < bp.size())
        ++hi;
    const auto& [t0, v0] = bp[hi - 1];
    const auto& [t1, v1] = bp[hi];
    if (t == t0)
        return v0;
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

Condition Condition::linear(Rational alpha, Rational r) {
    Condition c;
    c.tag = ConditionTag::LinearJ;
    c.alpha = std::move(alpha);
    c.r = std::move(r);
    return c;
}

Condition Condition::kannan(Rational alpha, Rational r) {
    Condition c = linear(std::move(alpha), std::move(r));
    c.tag = ConditionTag::KannanJ;
    return c;
}

Condition Condition::chatterjea(Rational alpha, Rational r) {
    Condition c = linear(std::move(alpha), std::move(r));
    c.tag = ConditionTag::ChatterjeaJ;
    return c;
}

Condition Condition::almost(Rational alpha, Rational L, Rational r) {
    Condition c = linear(std::move(alpha), std::move(r));
    c.tag = ConditionTag::AlmostJ;
    c.L = std::move(L);
    return c;
}

Condition Condition::psi_contraction(PsiSpec psi, std::optional<Rational> r) {
    Condition c;
    c.tag = ConditionTag::PsiJ;
    c.psi = std::move(psi);
    c.r = std::move(r);
    return c;
}

namespace {

const Rational kOne(1);
const Rational kZero(0);

void require_r(const Condition& c, std::vector<std::string>& out) {
    if (!c.r)
        out.push_back("expansion constant r is required");
    else if (!(kZero < *c.r))
        out.push_back("r must be positive, got " + c.r->str());
}

// The stated product constraint for the family, if any. Returned separately
// so the oddity probe can tell a product failure apart from an interval one.
std::optional<std::string> product_violation(const Condition& c, const Rational& b) {
    if (!c.r)
        return std::nullopt;
    const Rational b2 = b * b;
    switch (c.tag) {
    case ConditionTag::LinearJ: {
        Rational p = *c.r * c.alpha * b2;
        if (!(p < kOne))
            return "r*alpha*b^2 = " + p.str() + " must be < 1";
        return std::nullopt;
    }
    case ConditionTag::ChatterjeaJ: {
        Rational p = Rational(2) * *c.r * c.alpha * b2;
        if (!(p < kOne))
            return "2*r*alpha*b^2 = " + p.str() + " must be < 1";
        return std::nullopt;
    }
    case ConditionTag::AlmostJ: {
        Rational p = *c.r * b2 * (c.alpha + b * c.L);
        if (!(p < kOne))
            return "r*b^2*(alpha + b*L) = " + p.str() + " must be < 1";
        return std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

std::vector<std::string> interval_violations(const Condition& c) {
    std::vector<std::string> out;
    switch (c.tag) {
    case ConditionTag::LinearJ:
        if (!(kZero < c.alpha) || !(c.alpha < kOne))
            out.push_back("alpha must lie in (0,1), got " + c.alpha.str());
        require_r(c, out);
        break;
    case ConditionTag::KannanJ:
    case ConditionTag::ChatterjeaJ:
        if (!(kZero < c.alpha) || !(c.alpha < Rational(1, 2)))
            out.push_back("alpha must lie in (0,1/2), got " + c.alpha.str());
        require_r(c, out);
        break;
    case ConditionTag::AlmostJ:
        if (!(kZero < c.alpha))
            out.push_back("alpha must be positive, got " + c.alpha.str());
        if (c.L.is_negative())
            out.push_back("L must be nonnegative, got " + c.L.str());
        require_r(c, out);
        break;
    case ConditionTag::PsiJ:
        if (!c.psi)
            out.push_back("psi specification is required");
        else
            c.psi->validate();
        if (c.r && !(kZero < *c.r))
            out.push_back("r must be positive, got " + c.r->str());
        break;
    }
    return out;
}

} // namespace

std::vector<std::string> range_violations(const Condition& c, const Rational& b) {
    std::vector<std::string> out = interval_violations(c);
    if (auto p = product_violation(c, b))
        out.push_back(*p);
    return out;
}

namespace {

// Exhaustive ordered-pair scan of lhs <= rhs, tracking the pair with the
// largest lhs - rhs (lowest pair index on ties).
template <typename Lhs, typename Rhs>
CheckResult scan_pairs(const Space& s, Lhs lhs, Rhs rhs) {
    CheckResult res;
    bool first = true;
    Rational worstGap;
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            Rational l = lhs(x, y);
            Rational r = rhs(x, y);
            if (l > r)
                res.holds = false;
            Rational gap = l - r;
            if (first || gap > worstGap) {
                first = false;
                worstGap = gap;
                res.worst = {x, y, std::move(l), std::move(r)};
            }
        }
    return res;
}

Rational condition_rhs(const Space& s, const MultiMap& f, const SelfMap& j,
                       const Condition& c, int x, int y) {
    switch (c.tag) {
    case ConditionTag::LinearJ:
        return c.alpha * s.d(j(x), j(y));
    case ConditionTag::KannanJ:
        return c.alpha * (point_to_set(s, j(x), f.image(x)) + point_to_set(s, j(y), f.image(y)));
    case ConditionTag::ChatterjeaJ:
        return c.alpha * (point_to_set(s, j(x), f.image(y)) + set_to_point(s, f.image(x), j(y)));
    case ConditionTag::AlmostJ:
        return c.alpha * s.d(j(x), j(y)) + c.L * set_to_point(s, f.image(x), j(y));
    case ConditionTag::PsiJ:
        return c.psi->eval(s.d(j(x), j(y)));
    }
    throw input_error("unknown condition tag");
}

} // namespace

CheckResult evaluate_condition(const Space& s, const MultiMap& f, const SelfMap& j,
                               const Condition& c) {
    f.check_against(s);
    j.check_against(s);
    if (c.tag == ConditionTag::PsiJ) {
        if (!c.psi)
            throw input_error("psi condition without psi specification");
        c.psi->validate();
    }
    return scan_pairs(
        s, [&](int x, int y) { return hausdorff(s, f.image(x), f.image(y)); },
        [&](int x, int y) { return condition_rhs(s, f, j, c, x, y); });
}

CheckResult check_condition(const Space& s, const MultiMap& f, const SelfMap& j,
                            const Condition& c) {
    std::vector<std::string> bad = range_violations(c, s.b());
    if (!bad.empty()) {
        std::string msg = "condition constants out of range:";
        for (const auto& m : bad)
            msg += " " + m + ";";
        throw input_error(msg);
    }
    return evaluate_condition(s, f, j, c);
}

CheckResult check_expansion(const Space& s, const SelfMap& j, const Rational& r) {
    if (!(kZero < r))
        throw input_error("expansion: r must be positive, got " + r.str());
    j.check_against(s);
    return scan_pairs(
        s, [&](int x, int y) { return r * s.d(x, y); },
        [&](int x, int y) { return s.d(j(x), j(y)); });
}

PsiCheck check_psi(const Space& s, const MultiMap& f, const SelfMap& j, const PsiSpec& psi) {
    psi.validate();
    f.check_against(s);
    j.check_against(s);
    PsiCheck out;

    Condition c = Condition::psi_contraction(psi);
    CheckResult ineq = evaluate_condition(s, f, j, c);
    out.inequalityHolds = ineq.holds;
    out.worstPair = ineq.worst;

    for (int x = 0; x < s.n() && out.strictnessHolds; ++x)
        for (int y = 0; y < s.n(); ++y) {
            const Rational& t = s.d(j(x), j(y));
            if (t.is_zero())
                continue;
            Rational pt = psi.eval(t);
            if (!(pt < t)) {
                out.strictnessHolds = false;
                out.strictnessT = t;
                out.strictnessPsiT = std::move(pt);
                break;
            }
        }
    return out;
}

FitResult fit_constants(const Space& s, const MultiMap& f, const SelfMap& j, ConditionTag tag) {
    f.check_against(s);
    j.check_against(s);
    FitResult out;

    // rMax = min over pairs with d(x,y) > 0 of d(Jx,Jy)/d(x,y).
    bool anyPositive = false;
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            const Rational& dxy = s.d(x, y);
            if (dxy.is_zero())
                continue;
            Rational ratio = s.d(j(x), j(y)) / dxy;
            if (!anyPositive || ratio < out.rMax)
                out.rMax = std::move(ratio);
            anyPositive = true;
        }
    out.rUnbounded = !anyPositive;

    // Pair-induced constraints alpha*a + L*c >= h. For the single-constant
    // families c is absent: alpha_min = max h/a, infeasible when a = 0 < h.
    // PsiJ fits the slope k of psi(t) = k*t, which is the LinearJ problem.
    auto denominators = [&](int x, int y) -> std::pair<Rational, Rational> {
        switch (tag) {
        case ConditionTag::PsiJ:
        case ConditionTag::LinearJ:
            return {s.d(j(x), j(y)), kZero};
        case ConditionTag::KannanJ:
            return {point_to_set(s, j(x), f.image(x)) + point_to_set(s, j(y), f.image(y)), kZero};
        case ConditionTag::ChatterjeaJ:
            return {point_to_set(s, j(x), f.image(y)) + set_to_point(s, f.image(x), j(y)), kZero};
        case ConditionTag::AlmostJ:
            return {s.d(j(x), j(y)), set_to_point(s, f.image(x), j(y))};
        }
        throw input_error("unknown condition tag");
    };

    struct Constraint {
        Rational a, c, h;
    };
    std::vector<Constraint> active;
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            Rational h = hausdorff(s, f.image(x), f.image(y));
            auto [a, cc] = denominators(x, y);
            if (h.is_zero())
                continue;
            if (a.is_zero() && cc.is_zero()) {
                out.feasible = false;
                out.note = "pair (" + s.label(x) + "," + s.label(y) +
                           ") has positive H(Fx,Fy) = " + h.str() +
                           " but zero right-hand side for any constants";
                return out;
            }
            active.push_back({std::move(a), std::move(cc), std::move(h)});
        }

    // alpha_min: constraints with c = 0 force alpha >= h/a.
    for (const Constraint& con : active)
        if (con.c.is_zero())
            out.alpha = max(out.alpha, con.h / con.a);
    // L_min given alpha: remaining constraints force L >= (h - alpha*a)/c.
    if (tag == ConditionTag::AlmostJ)
        for (const Constraint& con : active) {
            if (con.c.is_zero())
                continue;
            Rational need = (con.h - out.alpha * con.a) / con.c;
            out.L = max(out.L, need);
        }
    return out;
}

TheoremVerdict theorem_verdict(const Space& s, const MultiMap& f, const SelfMap& j,
                               const Condition& c) {
    TheoremVerdict v;
    v.condition = c;

    v.rangeViolationList = range_violations(c, s.b());
    v.rangeOk = v.rangeViolationList.empty();

    // Verdicts never throw on range problems; a falsified hypothesis must be
    // reported, not turned into an error.
    bool evaluable = true;
    if (c.tag == ConditionTag::PsiJ && !c.psi)
        evaluable = false;
    if (evaluable) {
        CheckResult cond = evaluate_condition(s, f, j, c);
        v.conditionHolds = cond.holds;
        v.conditionWorst = cond.worst;
        if (c.tag == ConditionTag::PsiJ) {
            PsiCheck pc = check_psi(s, f, j, *c.psi);
            v.psiStrictOk = pc.strictnessHolds;
        }
    } else {
        v.conditionHolds = false;
    }
    if (c.r && Rational(0) < *c.r) {
        CheckResult exp = check_expansion(s, j, *c.r);
        v.expansionHolds = exp.holds;
        v.expansionWorst = exp.worst;
    } else if (c.r) {
        v.expansionHolds = false;
    }

    v.t0 = s.t0();
    v.assumed.push_back("J continuous (automatic: finite space, discrete d^s topology)");
    v.assumed.push_back("bicomplete (automatic: finite space)");
    if (c.tag == ConditionTag::PsiJ) {
        v.assumed.push_back("psi upper semicontinuous (no finite-data meaning)");
        v.assumed.push_back("liminf_{t->inf}(t - psi(t)) > 0 (no finite-data meaning)");
    }

    v.hypothesesHold =
        v.rangeOk && v.conditionHolds && v.expansionHolds && v.psiStrictOk && v.t0;

    Classification cls = classify(s, f, j);
    v.combinedPoints = cls.combined_points();
    v.jFixedPoints = cls.fixed_points();
    ApproxValues av = approx_values(s, f, j);
    v.mixValue = av.mix;
    v.mixWitnesses = av.mixArg;

    const bool mixZero = v.mixValue.is_zero();
    const bool unique = v.combinedPoints.size() == 1;
    v.conclusionIff = (mixZero == unique) || (mixZero && unique);
    v.corollaryOk = !mixZero || !v.jFixedPoints.empty();

    v.consistent = !v.hypothesesHold || (v.conclusionIff && v.corollaryOk);

    // Product range violated, everything else intact, conclusion holds
    // anyway: evidence that the stated product constraint is not load-bearing.
    bool productViolated = product_violation(c, s.b()).has_value();
    bool weakerOk = interval_violations(c).empty();
    v.rangeOddity = productViolated && weakerOk && v.conditionHolds && v.expansionHolds &&
                    v.psiStrictOk && v.t0 && v.conclusionIff && v.corollaryOk;

    return v;
}

} // namespace qpm
