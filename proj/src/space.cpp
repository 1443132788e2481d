#include "qpm/space.hpp"

#include <utility>

namespace qpm {

std::string Violation::describe() const {
    switch (axiom) {
    case Axiom::Nonnegative:
        return "negative distance d(" + std::to_string(i) + "," + std::to_string(j) +
               ") = " + lhs.str();
    case Axiom::ZeroDiagonal:
        return "nonzero diagonal d(" + std::to_string(i) + "," + std::to_string(i) +
               ") = " + lhs.str();
    case Axiom::Triangle:
        return "triangle violated at (" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + "): " + lhs.str() + " > " + rhs.str();
    case Axiom::Relaxation:
        return "relaxation coefficient b = " + lhs.str() + " < 1";
    }
    return "unknown violation";
}

ValidationReport validate(const Matrix& dist, const Rational& b) {
    const std::size_t n = dist.size();
    if (n == 0)
        throw input_error("validate: empty matrix");
    for (const auto& row : dist)
        if (row.size() != n)
            throw input_error("validate: matrix is not square");

    ValidationReport report;
    auto flag = [&](Violation v) {
        report.ok = false;
        report.violations.push_back(std::move(v));
    };

    if (b < Rational(1))
        flag({Axiom::Relaxation, -1, -1, -1, b, Rational(1)});

    for (int i = 0; i < static_cast<int>(n); ++i) {
        for (int j = 0; j < static_cast<int>(n); ++j) {
            const Rational& v = dist[i][j];
            if (v.is_negative())
                flag({Axiom::Nonnegative, i, j, -1, v, Rational(0)});
            else if (i == j && !v.is_zero())
                flag({Axiom::ZeroDiagonal, i, i, -1, v, Rational(0)});
        }
    }

    // Triangle scan is skipped entirely when entries are unusable, so lhs/rhs
    // below are always meaningful.
    if (report.ok) {
        for (int i = 0; i < static_cast<int>(n); ++i)
            for (int j = 0; j < static_cast<int>(n); ++j)
                for (int k = 0; k < static_cast<int>(n); ++k) {
                    Rational bound = b * (dist[i][j] + dist[j][k]);
                    if (dist[i][k] > bound)
                        flag({Axiom::Triangle, i, j, k, dist[i][k], bound});
                }
    }

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = i + 1; j < static_cast<int>(n); ++j)
            if (!dist[i][j].is_negative() && !dist[j][i].is_negative() &&
                dist[i][j].is_zero() && dist[j][i].is_zero()) {
                report.t0 = false;
                report.t0_witnesses.emplace_back(i, j);
            }

    return report;
}

Space::Space(std::vector<std::string> labels, Matrix dist, Rational b)
    : labels_(std::move(labels)), dist_(std::move(dist)), b_(std::move(b)) {
    n_ = static_cast<int>(dist_.size());
    if (labels_.size() != dist_.size())
        throw input_error("space: label count does not match matrix size");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw input_error("space: duplicate label \"" + labels_[i] + "\"");

    ValidationReport report = validate(dist_, b_);
    if (!report.ok)
        throw input_error("space: invalid distance matrix: " +
                          report.violations.front().describe());
    t0_ = report.t0;
}

int Space::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[static_cast<std::size_t>(i)] == label)
            return i;
    return -1;
}

Space conjugate(const Space& s) {
    const int n = s.n();
    Matrix t(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = s.d(j, i);
    return Space(s.labels(), std::move(t), s.b());
}

Space symmetrize(const Space& s) {
    const int n = s.n();
    Matrix t(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = s.ds(i, j);
    return Space(s.labels(), std::move(t), s.b());
}

Rational diameter(const Space& s, const Subset& a) {
    s.check_subset(a);
    Rational best(0);
    const auto& m = a.members();
    for (std::size_t p = 0; p < m.size(); ++p)
        for (std::size_t q = p + 1; q < m.size(); ++q)
            best = max(best, s.ds(m[p], m[q]));
    return best;
}

} // namespace qpm
