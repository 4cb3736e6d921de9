#pragma once

#include "coiso/chart.hpp"

#include <map>
#include <tuple>

namespace coiso {

// Antisymmetric matrix P^{ab} of polynomial entries on a chart; the bracket
// is {f,g} = sum_{a,b} P^{ab} df/du_a dg/du_b.
class Bivector {
public:
    Bivector(VarList vars, std::vector<std::vector<Poly>> entries);

    static Bivector zero(const VarList& vars);
    // build from the strictly-upper entries, completing antisymmetry
    static Bivector from_upper(VarList vars, const std::map<std::pair<size_t, size_t>, Poly>& upper);

    const VarList& vars() const { return vars_; }
    const Poly& entry(size_t a, size_t b) const { return entries_[a][b]; }
    size_t dim() const { return entries_.size(); }

    Bivector negated() const;

private:
    VarList vars_;
    std::vector<std::vector<Poly>> entries_;
};

// Vector field with one polynomial/fraction coefficient per chart variable.
struct VectorField {
    std::vector<RatFunc> comps;

    RatFunc apply(const RatFunc& f) const;
    Poly apply(const Poly& f) const;  // requires polynomial components
};

VectorField lie_bracket(const VectorField& v, const VectorField& w);

Poly bracket(const Poly& f, const Poly& g, const Bivector& P);
RatFunc bracket(const RatFunc& f, const RatFunc& g, const Bivector& P);

// Jacobiator {a,{b,c}} + {b,{c,a}} + {c,{a,b}} on all coordinate triples;
// empty result means P is Poisson.
std::map<std::tuple<size_t, size_t, size_t>, Poly> jacobi_defect(const Bivector& P);

struct CoisotropyPair {
    size_t s, t;
    Poly bracket_value;
    Poly normal_form;
    Verdict member;
};

struct CoisotropyResult {
    Verdict verdict = Verdict::True;
    std::vector<CoisotropyPair> certificate;
};

CoisotropyResult is_coisotropic(const Chart& chart, const Bivector& P);

// true iff det(P) is a unit of the localized chart ring
bool nondegenerate(const Bivector& P, const Chart& chart);

// frame v_s = P(dx_s, .) of the null foliation, components reduced mod I;
// throws InternalError if some v_s fails tangency (inconsistent scene data)
std::vector<VectorField> null_frame(const Chart& chart, const Bivector& P);

struct InvolutivityResult {
    Verdict verdict = Verdict::True;
    // coefficients c_u in [v_s, v_t] = sum_u c_u v_u mod I, keyed by (s,t)
    std::map<std::pair<size_t, size_t>, std::vector<Poly>> coeffs;
};

InvolutivityResult involutive(const std::vector<VectorField>& frame, const Chart& chart);

}  // namespace coiso
