#pragma once

#include "coiso/diffop.hpp"
#include "coiso/poisson.hpp"

#include <variant>

namespace coiso {

// first-order star term: alpha_X(f,g) = 1/2 P(df, dg)
BiDiffOp alpha_X(const ChartPtr& chart, const Bivector& P);

// Chart-level module structure on the trivialized line bundle: the
// bidifferential operator alpha_L of orders (2,1) making L + eps L a
// module over the deformed functions.
struct ModuleStructure {
    ChartPtr chart;
    std::string section_tag;  // name of the trivializing section e
    BiDiffOp alpha;
};

// alpha_L from the adapted frame, normalized by alpha_L(x_s, e) = 0:
//   alpha_L(a, b e) = gamma(p(da), b e) + alpha_X(q(da), q(db)) e
// where p, q are the dual-frame projectors and gamma is determined by
// the normalization. Verifies the module identity and vanishing on
// I^2 (x) L before returning.
ModuleStructure build_alpha_L(const ChartPtr& chart, const Bivector& P,
                              const std::string& section_tag = "e");

// left side of the module identity
//   alpha_L(a a', l) - alpha_L(a, a' l) + alpha_X(a, a') l - a alpha_L(a', l)
// as a tridifferential operator; zero (mod I) iff alpha_L is a module
// structure for alpha_X.
TriDiffOp module_defect(const BiDiffOp& alpha_L, const BiDiffOp& aX);

struct IdentityFailure {
    Poly f, g, l;
    RatFunc value;
};

// exact zero test on the monomial basis of degree <= order + 1 per slot;
// values are tested mod I when the operator targets the bundle
bool verify_identity(const TriDiffOp& op, std::optional<IdentityFailure>* failure = nullptr);

// a l -> beta(a l) - a beta(l), the gauge direction attached to beta
BiDiffOp gauge_coboundary(const LDiffOp& beta);

struct NotEquivalent {
    size_t frame_index;
    Poly l_monomial;
    RatFunc restriction_value;  // nonzero value of (alpha - alpha') on N^v (x) L
};
struct UndecidedAtBound {
    int degree_bound;
};
using LiftComparison = std::variant<LDiffOp, NotEquivalent, UndecidedAtBound>;

// Decide gauge equivalence of two lifts sharing alpha_X: if the difference
// kills N^v (x) L, produce beta of order <= 2 with
// (alpha - alpha')(a, l) = beta(a l) - a beta(l); otherwise certify.
LiftComparison compare_lifts(const ModuleStructure& a, const ModuleStructure& b);

// end-to-end associativity of (f*g)*l = f*(g*l) over the dual numbers,
// on the monomial basis determined by the operator orders
bool star_product_check(const BiDiffOp& aX, const BiDiffOp& aL);

}  // namespace coiso
