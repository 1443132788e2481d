#include "qpm/maps.hpp"

namespace qpm {

namespace {

std::vector<int> collect(const std::vector<PointClass>& pts, bool PointClass::*flag) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
        if (pts[static_cast<std::size_t>(i)].*flag)
            out.push_back(i);
    return out;
}

} // namespace

std::vector<int> Classification::startpoints() const { return collect(points, &PointClass::isStart); }
std::vector<int> Classification::endpoints() const { return collect(points, &PointClass::isEnd); }
std::vector<int> Classification::fixed_points() const { return collect(points, &PointClass::isFixed); }

std::vector<int> Classification::combined_points() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        const PointClass& p = points[static_cast<std::size_t>(i)];
        if (p.isStart && p.isEnd)
            out.push_back(i);
    }
    return out;
}

Classification classify(const Space& s, const MultiMap& f, const SelfMap& j) {
    f.check_against(s);
    j.check_against(s);
    Classification c;
    c.points.reserve(static_cast<std::size_t>(s.n()));
    for (int x = 0; x < s.n(); ++x) {
        PointClass pc;
        Subset jx = Subset::singleton(j(x));
        pc.startValue = hausdorff(s, jx, f.image(x));
        pc.endValue = hausdorff(s, f.image(x), jx);
        pc.isFixed = f.image(x).contains(j(x));
        pc.isStart = pc.startValue.is_zero();
        pc.isEnd = pc.endValue.is_zero();
        c.points.push_back(std::move(pc));
    }
    return c;
}

std::vector<int> eps_points(const Space& s, const MultiMap& f, const SelfMap& j,
                            const Rational& eps, Side side) {
    if (!(Rational(0) < eps) || !(eps < Rational(1)))
        throw input_error("eps_points: eps must lie in (0,1), got " + eps.str());
    Classification c = classify(s, f, j);
    std::vector<int> out;
    for (int x = 0; x < s.n(); ++x) {
        const PointClass& p = c.points[static_cast<std::size_t>(x)];
        const Rational& v = side == Side::Start ? p.startValue : p.endValue;
        if (v < eps)
            out.push_back(x);
    }
    return out;
}

Rational mix_contribution(const Space& s, const MultiMap& f, const SelfMap& j, int x) {
    s.check_point(x);
    Rational worst(0);
    for (int y : f.image(x).members())
        worst = max(worst, s.ds(j(x), y));
    return worst;
}

ApproxValues approx_values(const Space& s, const MultiMap& f, const SelfMap& j) {
    f.check_against(s);
    j.check_against(s);

    auto scan = [&](auto contribution, Rational& value, std::vector<int>& arg) {
        for (int x = 0; x < s.n(); ++x) {
            Rational v = contribution(x);
            if (x == 0 || v < value) {
                value = v;
                arg.assign(1, x);
            } else if (v == value) {
                arg.push_back(x);
            }
        }
    };

    ApproxValues out;
    scan([&](int x) {
        Rational worst(0);
        for (int y : f.image(x).members())
            worst = max(worst, s.d(j(x), y));
        return worst;
    }, out.start, out.startArg);
    scan([&](int x) {
        Rational worst(0);
        for (int y : f.image(x).members())
            worst = max(worst, s.d(y, j(x)));
        return worst;
    }, out.end, out.endArg);
    scan([&](int x) { return mix_contribution(s, f, j, x); }, out.mix, out.mixArg);
    return out;
}

} // namespace qpm
