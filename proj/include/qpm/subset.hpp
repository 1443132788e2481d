#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "qpm/error.hpp"

namespace qpm {

// Nonempty set of point indices. Models the nonempty subsets a set-valued
// map can take as images; emptiness is rejected at construction so every
// downstream min/max scan is total.
class Subset {
public:
    explicit Subset(std::vector<int> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.empty())
            throw input_error("subset: must be nonempty");
        if (members_.front() < 0)
            throw input_error("subset: negative point index");
    }

    Subset(std::initializer_list<int> members) : Subset(std::vector<int>(members)) {}

    static Subset singleton(int i) { return Subset({i}); }

    static Subset all(int n) {
        std::vector<int> m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i)] = i;
        return Subset(std::move(m));
    }

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    int max_index() const { return members_.back(); }

    bool contains(int i) const {
        return std::binary_search(members_.begin(), members_.end(), i);
    }

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<int> members_;
};

} // namespace qpm
