#pragma once

#include "coiso/poly.hpp"

#include <optional>

namespace coiso {

// A localized fraction num / h^k where h is the distinguished denominator
// of a chart (or overlap). Values with k == 0 are plain polynomials and
// combine with any h. Kept reduced: num is divided by h while possible.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Poly num) : num_(std::move(num)), hpow_(0) {}
    RatFunc(Poly num, Poly h, int hpow);

    static RatFunc zero(VarList vars) { return RatFunc(Poly::zero(std::move(vars))); }
    static RatFunc constant(VarList vars, const Rat& c) {
        return RatFunc(Poly::constant(std::move(vars), c));
    }

    const Poly& num() const { return num_; }
    const Poly& h() const { return h_; }
    int hpow() const { return hpow_; }
    const VarList& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return hpow_ == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const Rat& c) const;
    friend RatFunc operator*(const Rat& c, const RatFunc& r) { return r * c; }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative(size_t var_idx) const;

    // 1 / this, when this is a unit of the localized ring, i.e. divides
    // a power of h (searched up to deg(num) + 1, which is complete).
    std::optional<RatFunc> inverse() const;

    // Re-express with a new distinguished denominator; requires h | new_h.
    std::optional<RatFunc> rebase(const Poly& new_h) const;

    std::string to_string() const;

private:
    void normalize();
    static void harmonize(RatFunc& a, RatFunc& b);

    Poly num_;
    Poly h_;      // meaningful only when hpow_ > 0
    int hpow_ = 0;
};

// Substitute images[i] for variable i. All images must share one
// denominator context (or be plain polynomials).
RatFunc substitute(const Poly& p, const std::vector<RatFunc>& images);
RatFunc substitute(const RatFunc& r, const std::vector<RatFunc>& images);

}  // namespace coiso
