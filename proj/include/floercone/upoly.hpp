#pragma once

// Polynomials over F_2[U], stored as the set of exponents whose coefficient
// is 1. Addition is symmetric difference. Exponents are kept as signed
// integers: complex differentials must have nonnegative exponents (that is
// the trivial U-power filtration), but flip maps between knot complexes are
// stored in the i<=0 model and legitimately carry negative exponents.

#include <algorithm>
#include <string>
#include <vector>

namespace floercone {

class upoly {
public:
    upoly() = default;
    explicit upoly(long long e) : exps_{e} {}
    explicit upoly(std::vector<long long> exps) : exps_(std::move(exps)) { canonicalize(); }

    static upoly one() { return upoly(0); }

    bool is_zero() const { return exps_.empty(); }
    bool is_monomial() const { return exps_.size() == 1; }
    size_t term_count() const { return exps_.size(); }
    const std::vector<long long>& exponents() const { return exps_; }

    long long min_exponent() const { return exps_.front(); }
    long long max_exponent() const { return exps_.back(); }

    bool has(long long e) const {
        return std::binary_search(exps_.begin(), exps_.end(), e);
    }

    friend upoly operator+(const upoly& a, const upoly& b) {
        upoly r;
        std::set_symmetric_difference(a.exps_.begin(), a.exps_.end(),
                                      b.exps_.begin(), b.exps_.end(),
                                      std::back_inserter(r.exps_));
        return r;
    }

    upoly& operator+=(const upoly& o) {
        *this = *this + o;
        return *this;
    }

    // multiply by U^n
    upoly shifted(long long n) const {
        upoly r = *this;
        for (auto& e : r.exps_) e += n;
        return r;
    }

    friend upoly operator*(const upoly& a, const upoly& b) {
        upoly r;
        for (long long e : a.exps_) r += b.shifted(e);
        return r;
    }

    friend bool operator==(const upoly& a, const upoly& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const upoly& a, const upoly& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < exps_.size(); ++i) {
            if (i) out += "+";
            if (exps_[i] == 0)
                out += "1";
            else if (exps_[i] == 1)
                out += "U";
            else
                out += "U^" + std::to_string(exps_[i]);
        }
        return out;
    }

private:
    std::vector<long long> exps_;  // sorted, duplicate-free

    void canonicalize() {
        std::sort(exps_.begin(), exps_.end());
        // mod-2 coefficients: pairs of equal exponents cancel
        std::vector<long long> out;
        for (size_t i = 0; i < exps_.size();) {
            size_t j = i;
            while (j < exps_.size() && exps_[j] == exps_[i]) ++j;
            if ((j - i) % 2) out.push_back(exps_[i]);
            i = j;
        }
        exps_ = std::move(out);
    }
};

}  // namespace floercone
