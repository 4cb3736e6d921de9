#include "coiso/diffop.hpp"

#include <functional>
#include <sstream>

namespace coiso {

int midx_order(const MIdx& m) {
    int d = 0;
    for (int k : m) d += k;
    return d;
}

RatFunc apply_derivs(const RatFunc& f, const MIdx& m) {
    RatFunc out = f;
    for (size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) out = out.derivative(i);
    return out;
}

Rat midx_binomial(const MIdx& m, const MIdx& k) {
    Rat out(1);
    for (size_t i = 0; i < m.size(); ++i) out *= rat_binomial(m[i], k[i]);
    return out;
}

std::string midx_string(const MIdx& m, const VarList& vars) {
    std::ostringstream os;
    os << "d(";
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        for (int k = 0; k < m[i]; ++k) {
            if (!first) os << ",";
            os << (*vars)[i];
            first = false;
        }
    }
    os << ")";
    return os.str();
}

void LDiffOp::add(const MIdx& m, const RatFunc& c) {
    if (c.is_zero()) return;
    if (midx_order(m) > order_) throw std::invalid_argument("LDiffOp: order bound exceeded");
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
        coeffs_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

RatFunc LDiffOp::eval(const RatFunc& b) const {
    RatFunc out = RatFunc::zero(chart_->vars());
    for (const auto& [m, c] : coeffs_) out += c * apply_derivs(b, m);
    return out;
}

LDiffOp LDiffOp::operator+(const LDiffOp& o) const {
    LDiffOp out(chart_, std::max(order_, o.order_));
    for (const auto& [m, c] : coeffs_) out.add(m, c);
    for (const auto& [m, c] : o.coeffs_) out.add(m, c);
    return out;
}

LDiffOp LDiffOp::operator-(const LDiffOp& o) const { return *this + (o * Rat(-1)); }

LDiffOp LDiffOp::operator*(const Rat& c) const {
    LDiffOp out(chart_, order_);
    for (const auto& [m, k] : coeffs_) out.add(m, k * c);
    return out;
}

void BiDiffOp::add(const MIdx& m1, const MIdx& m2, const RatFunc& c) {
    if (c.is_zero()) return;
    if (midx_order(m1) > k1_ || midx_order(m2) > k2_)
        throw std::invalid_argument("BiDiffOp: order bound exceeded");
    RatFunc v = targets_ ? chart_->reduce_mod_ideal(c) : c;
    if (v.is_zero()) return;
    auto key = std::make_pair(m1, m2);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_[key] = v;
    } else {
        it->second += v;
        if (targets_) it->second = chart_->reduce_mod_ideal(it->second);
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

RatFunc BiDiffOp::eval(const RatFunc& f, const RatFunc& g) const {
    RatFunc out = RatFunc::zero(chart_->vars());
    for (const auto& [key, c] : coeffs_)
        out += c * apply_derivs(f, key.first) * apply_derivs(g, key.second);
    return out;
}

bool BiDiffOp::vanishes_on_constants(int slot) const {
    for (const auto& [key, c] : coeffs_) {
        const MIdx& m = slot == 1 ? key.first : key.second;
        if (midx_order(m) == 0 && !c.is_zero()) return false;
    }
    return true;
}

BiDiffOp BiDiffOp::operator+(const BiDiffOp& o) const {
    BiDiffOp out(chart_, std::max(k1_, o.k1_), std::max(k2_, o.k2_), targets_ || o.targets_);
    for (const auto& [key, c] : coeffs_) out.add(key.first, key.second, c);
    for (const auto& [key, c] : o.coeffs_) out.add(key.first, key.second, c);
    return out;
}

BiDiffOp BiDiffOp::operator-(const BiDiffOp& o) const { return *this + (o * Rat(-1)); }

BiDiffOp BiDiffOp::operator*(const Rat& c) const {
    BiDiffOp out(chart_, k1_, k2_, targets_);
    for (const auto& [key, k] : coeffs_) out.add(key.first, key.second, k * c);
    return out;
}

void BiDiffOp::reduce_coeffs_mod_ideal() {
    std::map<std::pair<MIdx, MIdx>, RatFunc> next;
    for (const auto& [key, c] : coeffs_) {
        RatFunc r = chart_->reduce_mod_ideal(c);
        if (!r.is_zero()) next[key] = r;
    }
    coeffs_ = std::move(next);
}

void TriDiffOp::add(const MIdx& m1, const MIdx& m2, const MIdx& m3, const RatFunc& c) {
    if (c.is_zero()) return;
    if (midx_order(m1) > k1_ || midx_order(m2) > k2_ || midx_order(m3) > k3_)
        throw std::invalid_argument("TriDiffOp: order bound exceeded");
    RatFunc v = targets_ ? chart_->reduce_mod_ideal(c) : c;
    if (v.is_zero()) return;
    auto key = std::make_tuple(m1, m2, m3);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_[key] = v;
    } else {
        it->second += v;
        if (targets_) it->second = chart_->reduce_mod_ideal(it->second);
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

RatFunc TriDiffOp::eval(const RatFunc& f, const RatFunc& g, const RatFunc& l) const {
    RatFunc out = RatFunc::zero(chart_->vars());
    for (const auto& [key, c] : coeffs_) {
        out += c * apply_derivs(f, std::get<0>(key)) * apply_derivs(g, std::get<1>(key)) *
               apply_derivs(l, std::get<2>(key));
    }
    return out;
}

TriDiffOp TriDiffOp::operator+(const TriDiffOp& o) const {
    TriDiffOp out(chart_, std::max(k1_, o.k1_), std::max(k2_, o.k2_), std::max(k3_, o.k3_),
                  targets_ || o.targets_);
    for (const auto& [key, c] : coeffs_)
        out.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    for (const auto& [key, c] : o.coeffs_)
        out.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    return out;
}

TriDiffOp TriDiffOp::operator-(const TriDiffOp& o) const {
    TriDiffOp neg(chart_, o.k1_, o.k2_, o.k3_, o.targets_);
    for (const auto& [key, c] : o.coeffs_)
        neg.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c * Rat(-1));
    return *this + neg;
}

}  // namespace coiso
