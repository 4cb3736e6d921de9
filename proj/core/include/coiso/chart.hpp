#pragma once

#include "coiso/ideal.hpp"
#include "coiso/ratfunc.hpp"

#include <memory>

namespace coiso {

struct Options {
    int degree_bound = 8;        // polynomial ansatz degree for bounded solves
    int saturation_bound = 10;   // power bound for localized membership
    int involutivity_degree = 6; // ansatz degree for frame structure constants
    bool exact_saturation = true;
    bool right_module = false;   // decide the right-module question (P negated)
};

// An affine chart D(h) of the ambient variety, carrying the subvariety in
// adapted form: I = (x_1..x_r) together with complementary functions
// y_1..y_m whose differentials frame the subvariety. The Jacobian of
// (x, y) with respect to the chart coordinates must be invertible.
class Chart {
public:
    Chart(std::string id, VarList vars, Poly denominator, std::vector<Poly> frame_x,
          std::vector<Poly> frame_y, Options opts);

    const std::string& id() const { return id_; }
    const VarList& vars() const { return vars_; }
    const Poly& h() const { return h_; }
    const Ideal& ideal() const { return ideal_; }
    const std::vector<Poly>& frame_x() const { return frame_x_; }
    const std::vector<Poly>& frame_y() const { return frame_y_; }
    const Options& opts() const { return opts_; }

    size_t n() const { return vars_->size(); }
    size_t r() const { return frame_x_.size(); }
    size_t m() const { return frame_y_.size(); }

    // dual-frame derivation D_alpha (alpha < r: conormal directions,
    // alpha >= r: complementary directions): coefficients of d(frame)
    // recover f via df = sum_alpha (D_alpha f) dF_alpha
    RatFunc dual_derivation(size_t frame_idx, const RatFunc& f) const;
    // entry (J^-1)_{var_idx, frame_idx}, so D_alpha = sum_b coeff(b, alpha) d/du_b
    const RatFunc& dual_derivation_coeff(size_t var_idx, size_t frame_idx) const {
        return jinv_[var_idx][frame_idx];
    }

    // decompose an ambient 1-form (components wrt the coordinate
    // differentials) into frame coefficients: first r entries along dx,
    // last m along dy
    std::vector<RatFunc> decompose_form(const std::vector<RatFunc>& omega) const;

    // normal form of the numerator modulo I (value class modulo I is kept)
    RatFunc reduce_mod_ideal(const RatFunc& f) const;
    // zero test in the localized ring of Y on this chart (denominator h)
    Verdict zero_mod_ideal(const RatFunc& f) const;
    // same, against a coarser localization (overlaps pass their own h)
    Verdict zero_mod_ideal_at(const RatFunc& f, const Poly& overlap_h) const;

    const SaturationOracle& saturation() const { return sat_; }
    // oracle for an overlap denominator, built on demand and cached
    const SaturationOracle& saturation_at(const Poly& overlap_h) const;

    // standard monomials (normal forms) of total degree <= d, in the
    // deterministic storage order; basis for bounded ansatz spaces on Y
    std::vector<Poly> standard_monomials(int max_deg) const;
    // all monomials of total degree <= d
    std::vector<Poly> all_monomials(int max_deg) const;

private:
    std::string id_;
    VarList vars_;
    Poly h_;
    std::vector<Poly> frame_x_;
    std::vector<Poly> frame_y_;
    Ideal ideal_;
    Options opts_;
    SaturationOracle sat_;
    std::vector<std::vector<RatFunc>> jinv_;  // (J^-1)_{var, frame}
    mutable std::vector<std::pair<Poly, std::shared_ptr<SaturationOracle>>> overlap_sats_;
};

using ChartPtr = std::shared_ptr<const Chart>;

}  // namespace coiso
