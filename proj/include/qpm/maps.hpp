#pragma once

#include <vector>

#include "qpm/hausdorff.hpp"

namespace qpm {

// Total set-valued map x -> Fx with every image nonempty.
class MultiMap {
public:
    explicit MultiMap(std::vector<Subset> images) : images_(std::move(images)) {
        if (images_.empty())
            throw input_error("multimap: no images");
    }

    int size() const { return static_cast<int>(images_.size()); }
    const Subset& image(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<Subset>& images() const { return images_; }

    void check_against(const Space& s) const {
        if (size() != s.n())
            throw input_error("multimap: image count does not match space size");
        for (const Subset& img : images_)
            s.check_subset(img);
    }

private:
    std::vector<Subset> images_;
};

// Total single-valued map x -> Jx. The identity recovers the J-free
// definitions throughout (startpoint of F = startpoint of id and F).
class SelfMap {
public:
    explicit SelfMap(std::vector<int> image) : image_(std::move(image)) {
        if (image_.empty())
            throw input_error("selfmap: empty image");
    }

    static SelfMap identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            im[static_cast<std::size_t>(i)] = i;
        return SelfMap(std::move(im));
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& image() const { return image_; }

    void check_against(const Space& s) const {
        if (size() != s.n())
            throw input_error("selfmap: image count does not match space size");
        for (int y : image_)
            s.check_point(y);
    }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (image_[static_cast<std::size_t>(i)] != i)
                return false;
        return true;
    }

private:
    std::vector<int> image_;
};

// Per-point classification record. startValue = H({Jx},Fx) collapses to
// max_{y in Fx} d(Jx,y) and endValue = H(Fx,{Jx}) to max_{y in Fx} d(y,Jx).
// On t0 spaces isStart && isEnd forces Fx = {Jx}, hence isFixed; without
// separation two distinct points at d^s = 0 break that implication, so it
// is asserted only under t0.
struct PointClass {
    Rational startValue;
    Rational endValue;
    bool isFixed = false; // Jx in Fx
    bool isStart = false; // startValue == 0
    bool isEnd = false;   // endValue == 0
};

struct Classification {
    std::vector<PointClass> points;

    std::vector<int> startpoints() const;
    std::vector<int> endpoints() const;
    std::vector<int> fixed_points() const;
    std::vector<int> combined_points() const; // start && end
};

Classification classify(const Space& s, const MultiMap& f, const SelfMap& j);

enum class Side { Start, End };

// Points with startValue < eps (resp. endValue < eps), strict inequality.
// eps must lie in (0,1).
std::vector<int> eps_points(const Space& s, const MultiMap& f, const SelfMap& j,
                            const Rational& eps, Side side);

// max_{y in Fx} d^s(Jx,y); the quantity whose inf over x defines the
// approximate mix-point property and whose sublevel sets are the C_eps.
Rational mix_contribution(const Space& s, const MultiMap& f, const SelfMap& j, int x);

// start = min_x max_{y in Fx} d(Jx,y)
// end   = min_x max_{y in Fx} d(y,Jx)
// mix   = min_x max_{y in Fx} d^s(Jx,y)
// A property "holds" when its value is 0; mix = 0 iff start = 0 and end = 0.
// Arg lists carry every minimizing point, for report readability.
struct ApproxValues {
    Rational start, end, mix;
    std::vector<int> startArg, endArg, mixArg;

    bool has_start_property() const { return start.is_zero(); }
    bool has_end_property() const { return end.is_zero(); }
    bool has_mix_property() const { return mix.is_zero(); }
};

ApproxValues approx_values(const Space& s, const MultiMap& f, const SelfMap& j);

} // namespace qpm
