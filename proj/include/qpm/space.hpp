#pragma once

#include <string>
#include <vector>

#include "qpm/rational.hpp"
#include "qpm/subset.hpp"

namespace qpm {

using Matrix = std::vector<std::vector<Rational>>;

// Axioms checked by validate(). A distance function d on n points with
// relaxation coefficient b >= 1 must satisfy
//   d(i,i) = 0                          (zero diagonal)
//   d(i,k) <= b * (d(i,j) + d(j,k))     (b-relaxed triangle; b = 1 is the
//                                        plain quasi-pseudometric case)
// Symmetry and separation are deliberately NOT required. The separation
// condition d(i,j)=0=d(j,i) => i=j is reported as the t0 flag; failing it
// does not invalidate the space.
enum class Axiom { Nonnegative, ZeroDiagonal, Triangle, Relaxation };

struct Violation {
    Axiom axiom;
    int i = -1;
    int j = -1;
    int k = -1;
    Rational lhs;
    Rational rhs;

    std::string describe() const;
};

struct ValidationReport {
    bool ok = true;
    bool t0 = true;
    std::vector<Violation> violations;
    std::vector<std::pair<int, int>> t0_witnesses; // pairs with d(i,j)=d(j,i)=0, i<j
};

// Reports every violated axiom instance. The matrix must be square and
// nonempty (structural defects throw input_error); value-level problems
// (negative entries, b < 1, broken diagonal/triangle) land in the report.
ValidationReport validate(const Matrix& dist, const Rational& b);

// Finite quasi-pseudometric (type) space with exact rational distances.
// Immutable after construction; construction validates, so every Space in
// flight satisfies the axioms. Finite spaces are bicomplete automatically
// (every sequence in a finite set has a constant subsequence), recorded via
// bicomplete().
class Space {
public:
    Space(std::vector<std::string> labels, Matrix dist, Rational b);

    int n() const { return n_; }
    const Rational& b() const { return b_; }
    bool t0() const { return t0_; }
    static constexpr bool bicomplete() { return true; } // finite => bicomplete

    const Rational& d(int i, int j) const {
        return dist_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    // d^s(i,j) = max(d(i,j), d(j,i))
    const Rational& ds(int i, int j) const {
        const Rational& a = d(i, j);
        const Rational& r = d(j, i);
        return a < r ? r : a;
    }

    const Matrix& matrix() const { return dist_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    int index_of(const std::string& label) const; // -1 when unknown

    void check_point(int i) const {
        if (i < 0 || i >= n_)
            throw input_error("point index " + std::to_string(i) + " out of range");
    }
    void check_subset(const Subset& a) const {
        if (a.max_index() >= n_)
            throw input_error("subset index " + std::to_string(a.max_index()) + " out of range");
    }

private:
    std::vector<std::string> labels_;
    Matrix dist_;
    Rational b_;
    int n_ = 0;
    bool t0_ = false;
};

// d^{-1}(x,y) = d(y,x); involutive, preserves validity and b.
Space conjugate(const Space& s);

// d^s = entry-wise max of d and its transpose; symmetric, and a metric
// exactly when the input is t0.
Space symmetrize(const Space& s);

// Largest d^s-distance between two members of A; 0 for singletons.
Rational diameter(const Space& s, const Subset& a);

} // namespace qpm
