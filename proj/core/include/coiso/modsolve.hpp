#pragma once

#include "coiso/chart.hpp"
#include "coiso/linsolve.hpp"

namespace coiso {

// Accumulates equations of the form  const + sum_i u_i * coef_i = 0  in the
// coordinate ring of Y localized at h: denominators are cleared against h,
// numerators reduced modulo the chart ideal, and one scalar row is emitted
// per surviving monomial. Assumes the ideal is saturated with respect to h
// (true for the bundled covers, where Y meets every distinguished divisor
// generically).
class ModIdealSolver {
public:
    ModIdealSolver(const Chart& chart, Poly ring_h, size_t n_unknowns)
        : chart_(&chart), h_(std::move(ring_h)) {
        for (size_t i = 0; i < n_unknowns; ++i) sys_.add_unknown("u" + std::to_string(i));
    }

    void add_equation(const RatFunc& constant,
                      const std::vector<std::pair<size_t, RatFunc>>& unknown_coeffs);

    LinSolution solve() const { return solve_linear(sys_); }
    const LinSystem& system() const { return sys_; }

private:
    const Chart* chart_;
    Poly h_;
    LinSystem sys_;
};

}  // namespace coiso
