#pragma once

#include "coiso/chart.hpp"

#include <map>

namespace coiso {

// multi-index over chart variables
using MIdx = std::vector<int>;

int midx_order(const MIdx& m);
RatFunc apply_derivs(const RatFunc& f, const MIdx& m);
// product of componentwise binomials, for Leibniz expansions
Rat midx_binomial(const MIdx& m, const MIdx& k);
std::string midx_string(const MIdx& m, const VarList& vars);

// Single-slot differential operator on sections of a trivialized line
// bundle: op(b) = sum_m c_m d^m b.
class LDiffOp {
public:
    LDiffOp(ChartPtr chart, int order) : chart_(std::move(chart)), order_(order) {}

    void add(const MIdx& m, const RatFunc& c);
    RatFunc eval(const RatFunc& b) const;
    const std::map<MIdx, RatFunc>& coeffs() const { return coeffs_; }
    const ChartPtr& chart() const { return chart_; }
    int order() const { return order_; }

    LDiffOp operator+(const LDiffOp& o) const;
    LDiffOp operator-(const LDiffOp& o) const;
    LDiffOp operator*(const Rat& c) const;

private:
    ChartPtr chart_;
    int order_;
    std::map<MIdx, RatFunc> coeffs_;
};

// Bidifferential operator op(f, g) = sum c_{m,k} d^m f d^k g with order
// bounds per slot. When `targets_bundle` is set the operator maps into
// L and its values are meaningful modulo the chart ideal; coefficients
// are then kept in normal form mod I.
class BiDiffOp {
public:
    BiDiffOp(ChartPtr chart, int k1, int k2, bool targets_bundle)
        : chart_(std::move(chart)), k1_(k1), k2_(k2), targets_(targets_bundle) {}

    const ChartPtr& chart() const { return chart_; }
    int order1() const { return k1_; }
    int order2() const { return k2_; }
    bool targets_bundle() const { return targets_; }
    const std::map<std::pair<MIdx, MIdx>, RatFunc>& coeffs() const { return coeffs_; }

    void add(const MIdx& m1, const MIdx& m2, const RatFunc& c);
    RatFunc eval(const RatFunc& f, const RatFunc& g) const;

    bool vanishes_on_constants(int slot) const;  // no surviving zero-index terms

    BiDiffOp operator+(const BiDiffOp& o) const;
    BiDiffOp operator-(const BiDiffOp& o) const;
    BiDiffOp operator*(const Rat& c) const;

    void reduce_coeffs_mod_ideal();

private:
    ChartPtr chart_;
    int k1_, k2_;
    bool targets_;
    std::map<std::pair<MIdx, MIdx>, RatFunc> coeffs_;
};

class TriDiffOp {
public:
    TriDiffOp(ChartPtr chart, int k1, int k2, int k3, bool targets_bundle)
        : chart_(std::move(chart)), k1_(k1), k2_(k2), k3_(k3), targets_(targets_bundle) {}

    const ChartPtr& chart() const { return chart_; }
    int order1() const { return k1_; }
    int order2() const { return k2_; }
    int order3() const { return k3_; }
    bool targets_bundle() const { return targets_; }
    const std::map<std::tuple<MIdx, MIdx, MIdx>, RatFunc>& coeffs() const { return coeffs_; }

    void add(const MIdx& m1, const MIdx& m2, const MIdx& m3, const RatFunc& c);
    RatFunc eval(const RatFunc& f, const RatFunc& g, const RatFunc& l) const;

    TriDiffOp operator+(const TriDiffOp& o) const;
    TriDiffOp operator-(const TriDiffOp& o) const;

private:
    ChartPtr chart_;
    int k1_, k2_, k3_;
    bool targets_;
    std::map<std::tuple<MIdx, MIdx, MIdx>, RatFunc> coeffs_;
};

}  // namespace coiso
