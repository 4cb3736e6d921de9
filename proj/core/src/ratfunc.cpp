#include "coiso/ratfunc.hpp"

#include <sstream>

namespace coiso {

RatFunc::RatFunc(Poly num, Poly h, int hpow)
    : num_(std::move(num)), h_(std::move(h)), hpow_(hpow) {
    if (hpow_ < 0) throw std::invalid_argument("RatFunc: negative denominator power");
    if (hpow_ > 0 && h_.is_constant()) {
        // fold constant denominators into the numerator
        Rat c = h_.constant_value();
        if (c == 0) throw std::invalid_argument("RatFunc: zero denominator");
        num_ = num_ * (Rat(1) / rat_pow(c, hpow_));
        hpow_ = 0;
        h_ = Poly();
    }
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        hpow_ = 0;
        return;
    }
    while (hpow_ > 0) {
        Poly q;
        if (Poly::try_divide(num_, h_, q)) {
            num_ = q;
            --hpow_;
        } else {
            break;
        }
    }
}

void RatFunc::harmonize(RatFunc& a, RatFunc& b) {
    // The h of whichever side actually has denominator powers wins; a
    // plain polynomial can adopt any context.
    if (a.hpow_ > 0 && b.hpow_ > 0) {
        if (a.h_ != b.h_)
            throw std::invalid_argument("RatFunc: incompatible denominators (" +
                                        a.h_.to_string() + " vs " + b.h_.to_string() + ")");
        return;
    }
    if (a.hpow_ == 0 && b.hpow_ > 0) {
        a.h_ = b.h_;
        return;
    }
    if (b.hpow_ == 0 && a.hpow_ > 0) {
        b.h_ = a.h_;
        return;
    }
    if (a.h_.is_zero() && !b.h_.is_zero()) a.h_ = b.h_;
    if (b.h_.is_zero() && !a.h_.is_zero()) b.h_ = a.h_;
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    RatFunc a = *this, b = o;
    harmonize(a, b);
    int k = std::max(a.hpow_, b.hpow_);
    Poly h = a.hpow_ > 0 ? a.h_ : b.h_;
    Poly num = a.num_;
    if (k > a.hpow_) num = num * h.pow(k - a.hpow_);
    Poly num2 = b.num_;
    if (k > b.hpow_) num2 = num2 * h.pow(k - b.hpow_);
    return RatFunc(num + num2, h, k);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    RatFunc a = *this, b = o;
    harmonize(a, b);
    Poly h = a.hpow_ > 0 ? a.h_ : b.h_;
    return RatFunc(a.num_ * b.num_, h, a.hpow_ + b.hpow_);
}

RatFunc RatFunc::operator*(const Rat& c) const {
    RatFunc out = *this;
    out.num_ = out.num_ * c;
    if (out.num_.is_zero()) out.hpow_ = 0;
    return out;
}

bool RatFunc::operator==(const RatFunc& o) const {
    RatFunc d = *this - o;
    return d.is_zero();
}

RatFunc RatFunc::derivative(size_t var_idx) const {
    if (hpow_ == 0) return RatFunc(num_.derivative(var_idx));
    // d(n/h^k) = (n' h - k n h') / h^(k+1)
    Poly n = num_.derivative(var_idx) * h_ - num_ * h_.derivative(var_idx) * Rat(hpow_);
    return RatFunc(n, h_, hpow_ + 1);
}

std::optional<RatFunc> RatFunc::inverse() const {
    if (num_.is_zero()) return std::nullopt;
    if (num_.is_constant()) {
        Poly one_over = Poly::constant(num_.vars(), Rat(1) / num_.constant_value());
        if (hpow_ == 0) return RatFunc(one_over, h_, 0);
        return RatFunc(one_over * h_.pow(hpow_), h_, 0);
    }
    if (h_.is_zero()) {
        // a nonconstant polynomial with no denominator context has no inverse
        return std::nullopt;
    }
    // find b with num | h^b; minimal b is at most deg(num) + 1
    int bmax = num_.total_degree() + 1;
    Poly hp = Poly::constant(num_.vars(), Rat(1));
    for (int b = 0; b <= bmax; ++b) {
        Poly q;
        if (Poly::try_divide(hp, num_, q)) {
            // 1/(num/h^a) = q * h^a / h^b
            return RatFunc(q * (hpow_ > 0 ? h_.pow(hpow_) : Poly::constant(num_.vars(), Rat(1))),
                           h_, b);
        }
        hp = hp * h_;
    }
    return std::nullopt;
}

std::optional<RatFunc> RatFunc::rebase(const Poly& new_h) const {
    if (hpow_ == 0) return RatFunc(num_, new_h, 0);
    if (h_ == new_h) return *this;
    Poly c;
    if (!Poly::try_divide(new_h, h_, c)) return std::nullopt;
    // num/h^k = num * c^k / new_h^k
    return RatFunc(num_ * c.pow(hpow_), new_h, hpow_);
}

std::string RatFunc::to_string() const {
    if (hpow_ == 0) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << h_.to_string() << ")";
    if (hpow_ > 1) os << "^" << hpow_;
    return os.str();
}

RatFunc substitute(const Poly& p, const std::vector<RatFunc>& images) {
    if (p.nvars() != images.size())
        throw std::invalid_argument("substitute: image count mismatch");
    if (images.empty()) throw std::invalid_argument("substitute: no variables");
    VarList tvars = images[0].vars();
    RatFunc out = RatFunc::zero(tvars);
    for (const auto& [e, c] : p.terms()) {
        RatFunc term = RatFunc::constant(tvars, c);
        for (size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= images[i];
        }
        out += term;
    }
    return out;
}

RatFunc substitute(const RatFunc& r, const std::vector<RatFunc>& images) {
    RatFunc num = substitute(r.num(), images);
    if (r.hpow() == 0) return num;
    RatFunc hden = substitute(r.h(), images);
    auto inv = hden.inverse();
    if (!inv)
        throw ValidationError("substitute: denominator " + r.h().to_string() +
                              " is not a unit after substitution");
    RatFunc out = num;
    for (int k = 0; k < r.hpow(); ++k) out *= *inv;
    return out;
}

}  // namespace coiso
