#include "qpm/hausdorff.hpp"

namespace qpm {

Rational point_to_set(const Space& s, int x, const Subset& a) {
    s.check_point(x);
    s.check_subset(a);
    const auto& m = a.members();
    Rational best = s.d(x, m.front());
    for (std::size_t i = 1; i < m.size(); ++i)
        best = min(best, s.d(x, m[i]));
    return best;
}

Rational set_to_point(const Space& s, const Subset& a, int x) {
    s.check_point(x);
    s.check_subset(a);
    const auto& m = a.members();
    Rational best = s.d(m.front(), x);
    for (std::size_t i = 1; i < m.size(); ++i)
        best = min(best, s.d(m[i], x));
    return best;
}

Rational hausdorff(const Space& s, const Subset& a, const Subset& b) {
    Rational worst(0);
    for (int p : a.members())
        worst = max(worst, point_to_set(s, p, b));
    for (int q : b.members())
        worst = max(worst, set_to_point(s, a, q));
    return worst;
}

} // namespace qpm
