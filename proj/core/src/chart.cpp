#include "coiso/chart.hpp"

#include <algorithm>
#include <functional>

namespace coiso {

Chart::Chart(std::string id, VarList vars, Poly denominator, std::vector<Poly> frame_x,
             std::vector<Poly> frame_y, Options opts)
    : id_(std::move(id)),
      vars_(std::move(vars)),
      h_(std::move(denominator)),
      frame_x_(std::move(frame_x)),
      frame_y_(std::move(frame_y)),
      ideal_(frame_x_.empty() ? Ideal(std::vector<Poly>{Poly::zero(vars_)}) : Ideal(frame_x_)),
      opts_(opts),
      sat_(ideal_, h_, opts.saturation_bound, opts.exact_saturation) {
    if (frame_x_.empty()) throw ValidationError("chart " + id_ + ": empty subvariety ideal");
    if (frame_x_.size() + frame_y_.size() != n())
        throw ValidationError("chart " + id_ + ": adapted frame size " +
                              std::to_string(frame_x_.size() + frame_y_.size()) +
                              " does not match ambient dimension " + std::to_string(n()));

    // Jacobian J_{alpha,beta} = dF_alpha/du_beta, F = (x_1..x_r, y_1..y_m)
    std::vector<Poly> frame = frame_x_;
    frame.insert(frame.end(), frame_y_.begin(), frame_y_.end());
    std::vector<std::vector<Poly>> J(n(), std::vector<Poly>(n(), Poly::zero(vars_)));
    for (size_t a = 0; a < n(); ++a)
        for (size_t b = 0; b < n(); ++b) J[a][b] = frame[a].derivative(b);

    Poly det = poly_det(J);
    if (det.is_zero())
        throw ValidationError("chart " + id_ + ": adapted frame Jacobian is singular");
    RatFunc det_rf(det, h_, 0);
    auto det_inv = det_rf.inverse();
    if (!det_inv) {
        // unit only modulo I is acceptable: the normal form of det must be
        // invertible in the localized ring of Y
        Poly det_red = ideal_.reduce(det);
        auto red_inv = RatFunc(det_red, h_, 0).inverse();
        if (!red_inv)
            throw ValidationError("chart " + id_ +
                                  ": adapted frame Jacobian determinant is not a unit (" +
                                  det.to_string() + ")");
        det_inv = red_inv;
    }

    auto adj = poly_adjugate(J);
    // (J^-1)_{beta,alpha} = adj_{beta,alpha} / det
    jinv_.assign(n(), std::vector<RatFunc>(n(), RatFunc::zero(vars_)));
    for (size_t b = 0; b < n(); ++b)
        for (size_t a = 0; a < n(); ++a) jinv_[b][a] = RatFunc(adj[b][a], h_, 0) * (*det_inv);
}

RatFunc Chart::dual_derivation(size_t frame_idx, const RatFunc& f) const {
    RatFunc out = RatFunc::zero(vars_);
    for (size_t b = 0; b < n(); ++b) {
        if (jinv_[b][frame_idx].is_zero()) continue;
        out += jinv_[b][frame_idx] * f.derivative(b);
    }
    return out;
}

std::vector<RatFunc> Chart::decompose_form(const std::vector<RatFunc>& omega) const {
    if (omega.size() != n()) throw std::invalid_argument("decompose_form: wrong length");
    std::vector<RatFunc> coeffs(n(), RatFunc::zero(vars_));
    for (size_t a = 0; a < n(); ++a) {
        for (size_t b = 0; b < n(); ++b) {
            if (jinv_[b][a].is_zero() || omega[b].is_zero()) continue;
            coeffs[a] += omega[b] * jinv_[b][a];
        }
    }
    return coeffs;
}

RatFunc Chart::reduce_mod_ideal(const RatFunc& f) const {
    return RatFunc(ideal_.reduce(f.num()), f.h(), f.hpow());
}

Verdict Chart::zero_mod_ideal(const RatFunc& f) const { return sat_.member(f.num()); }

Verdict Chart::zero_mod_ideal_at(const RatFunc& f, const Poly& overlap_h) const {
    return saturation_at(overlap_h).member(f.num());
}

const SaturationOracle& Chart::saturation_at(const Poly& overlap_h) const {
    if (overlap_h == h_) return sat_;
    for (const auto& [h, oracle] : overlap_sats_)
        if (h == overlap_h) return *oracle;
    overlap_sats_.emplace_back(
        overlap_h, std::make_shared<SaturationOracle>(ideal_, overlap_h, opts_.saturation_bound,
                                                      opts_.exact_saturation));
    return *overlap_sats_.back().second;
}

std::vector<Poly> Chart::all_monomials(int max_deg) const {
    std::vector<Poly::Exp> exps;
    Poly::Exp cur(n(), 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
        if (idx == n()) {
            exps.push_back(cur);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            cur[idx] = k;
            rec(idx + 1, remaining - k);
        }
        cur[idx] = 0;
    };
    rec(0, max_deg);
    std::sort(exps.begin(), exps.end());
    std::vector<Poly> out;
    out.reserve(exps.size());
    for (const auto& e : exps) out.push_back(Poly::monomial(vars_, e, Rat(1)));
    return out;
}

std::vector<Poly> Chart::standard_monomials(int max_deg) const {
    std::vector<Poly> out;
    for (const Poly& mono : all_monomials(max_deg)) {
        if (ideal_.reduce(mono) == mono) out.push_back(mono);
    }
    return out;
}

}  // namespace coiso
