#pragma once

#include <map>
#include <stdexcept>

namespace conley {

/// Finitely supported map degree -> dimension. Absent degrees mean zero;
/// entries are kept strictly positive so equality is structural.
class BettiVector {
public:
    BettiVector() = default;
    BettiVector(std::initializer_list<std::pair<const int, int>> entries) {
        for (const auto& [k, v] : entries) set_dim(k, v);
    }

    int dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    void set_dim(int degree, int value) {
        if (degree < 0) throw std::invalid_argument("betti vector degree must be non-negative");
        if (value < 0) throw std::invalid_argument("betti vector dimension must be non-negative");
        if (value == 0)
            dims_.erase(degree);
        else
            dims_[degree] = value;
    }

    int total_dim() const {
        int t = 0;
        for (const auto& [k, v] : dims_) t += v;
        return t;
    }

    /// Largest degree with nonzero dimension, or -1 for the empty vector.
    int max_degree() const { return dims_.empty() ? -1 : dims_.rbegin()->first; }

    bool empty() const { return dims_.empty(); }

    const std::map<int, int>& entries() const { return dims_; }

    friend bool operator==(const BettiVector& a, const BettiVector& b) { return a.dims_ == b.dims_; }
    friend bool operator!=(const BettiVector& a, const BettiVector& b) { return !(a == b); }

private:
    std::map<int, int> dims_;
};

}  // namespace conley
