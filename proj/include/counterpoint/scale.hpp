#pragma once

// Pitch-class scales, used for the diatonic membership tests.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace counterpoint {

class Scale {
public:
    Scale(std::vector<int> degrees, int n) : n_(n), degrees_(std::move(degrees)) {
        if (n < 1) throw std::invalid_argument("scale: modulus must be positive");
        if (degrees_.empty()) throw std::invalid_argument("scale: degree list is empty");
        std::sort(degrees_.begin(), degrees_.end());
        degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
        member_.assign(static_cast<std::size_t>(n), 0);
        for (int v : degrees_) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("scale: degree " + std::to_string(v) +
                                            " outside [0, " + std::to_string(n) + ")");
            member_[static_cast<std::size_t>(v)] = 1;
        }
    }

    /// X = {0,2,4,5,7,9,11}, the pattern underlying the church modes.
    static const Scale& diatonic() {
        static const Scale x({0, 2, 4, 5, 7, 9, 11}, 12);
        return x;
    }

    int modulus() const { return n_; }
    const std::vector<int>& degrees() const { return degrees_; }

    /// Membership of an arbitrary pitch, reduced modulo n.
    bool contains(long long pitch) const {
        long long v = pitch % n_;
        if (v < 0) v += n_;
        return member_[static_cast<std::size_t>(v)] != 0;
    }

private:
    int n_;
    std::vector<int> degrees_;
    std::vector<char> member_;
};

}  // namespace counterpoint
