#include "coiso/poisson.hpp"

#include "coiso/linsolve.hpp"

namespace coiso {

Bivector::Bivector(VarList vars, std::vector<std::vector<Poly>> entries)
    : vars_(std::move(vars)), entries_(std::move(entries)) {
    size_t n = vars_->size();
    if (entries_.size() != n)
        throw ValidationError("bivector: matrix dimension does not match variable count");
    for (size_t a = 0; a < n; ++a) {
        if (entries_[a].size() != n) throw ValidationError("bivector: ragged matrix");
        if (!entries_[a][a].is_zero())
            throw ValidationError("bivector: nonzero diagonal entry P[" + std::to_string(a) + "][" +
                                  std::to_string(a) + "]");
        for (size_t b = a + 1; b < n; ++b) {
            if (entries_[a][b] != -entries_[b][a])
                throw ValidationError("bivector: antisymmetry fails at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
        }
    }
}

Bivector Bivector::zero(const VarList& vars) {
    size_t n = vars->size();
    return Bivector(vars, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly::zero(vars))));
}

Bivector Bivector::from_upper(VarList vars,
                              const std::map<std::pair<size_t, size_t>, Poly>& upper) {
    size_t n = vars->size();
    std::vector<std::vector<Poly>> e(n, std::vector<Poly>(n, Poly::zero(vars)));
    for (const auto& [ab, p] : upper) {
        auto [a, b] = ab;
        if (a == b && !p.is_zero()) throw ValidationError("bivector: diagonal entry must be zero");
        e[a][b] = p;
        e[b][a] = -p;
    }
    return Bivector(std::move(vars), std::move(e));
}

Bivector Bivector::negated() const {
    std::vector<std::vector<Poly>> e = entries_;
    for (auto& row : e)
        for (auto& p : row) p = -p;
    return Bivector(vars_, std::move(e));
}

RatFunc VectorField::apply(const RatFunc& f) const {
    RatFunc out = RatFunc::zero(f.vars());
    for (size_t b = 0; b < comps.size(); ++b) {
        if (comps[b].is_zero()) continue;
        out += comps[b] * f.derivative(b);
    }
    return out;
}

Poly VectorField::apply(const Poly& f) const {
    RatFunc r = apply(RatFunc(f));
    if (r.hpow() != 0) throw InternalError("VectorField::apply: expected polynomial result");
    return r.num();
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    VectorField out;
    size_t n = v.comps.size();
    out.comps.reserve(n);
    for (size_t b = 0; b < n; ++b) out.comps.push_back(v.apply(w.comps[b]) - w.apply(v.comps[b]));
    return out;
}

Poly bracket(const Poly& f, const Poly& g, const Bivector& P) {
    Poly out(f.vars());
    size_t n = P.dim();
    for (size_t a = 0; a < n; ++a) {
        Poly fa = f.derivative(a);
        if (fa.is_zero()) continue;
        for (size_t b = 0; b < n; ++b) {
            if (P.entry(a, b).is_zero()) continue;
            Poly gb = g.derivative(b);
            if (gb.is_zero()) continue;
            out += P.entry(a, b) * fa * gb;
        }
    }
    return out;
}

RatFunc bracket(const RatFunc& f, const RatFunc& g, const Bivector& P) {
    RatFunc out = RatFunc::zero(f.vars());
    size_t n = P.dim();
    for (size_t a = 0; a < n; ++a) {
        RatFunc fa = f.derivative(a);
        if (fa.is_zero()) continue;
        for (size_t b = 0; b < n; ++b) {
            if (P.entry(a, b).is_zero()) continue;
            RatFunc gb = g.derivative(b);
            if (gb.is_zero()) continue;
            out += RatFunc(P.entry(a, b)) * fa * gb;
        }
    }
    return out;
}

std::map<std::tuple<size_t, size_t, size_t>, Poly> jacobi_defect(const Bivector& P) {
    std::map<std::tuple<size_t, size_t, size_t>, Poly> out;
    size_t n = P.dim();
    const VarList& vars = P.vars();
    for (size_t a = 0; a < n; ++a) {
        Poly xa = Poly::variable(vars, a);
        for (size_t b = a + 1; b < n; ++b) {
            Poly xb = Poly::variable(vars, b);
            for (size_t c = b + 1; c < n; ++c) {
                Poly xc = Poly::variable(vars, c);
                Poly j = bracket(xa, bracket(xb, xc, P), P) + bracket(xb, bracket(xc, xa, P), P) +
                         bracket(xc, bracket(xa, xb, P), P);
                out[{a, b, c}] = j;
            }
        }
    }
    return out;
}

CoisotropyResult is_coisotropic(const Chart& chart, const Bivector& P) {
    CoisotropyResult res;
    const auto& xs = chart.frame_x();
    for (size_t s = 0; s < xs.size(); ++s) {
        for (size_t t = s + 1; t < xs.size(); ++t) {
            CoisotropyPair pair;
            pair.s = s;
            pair.t = t;
            pair.bracket_value = bracket(xs[s], xs[t], P);
            pair.normal_form = chart.ideal().reduce(pair.bracket_value);
            pair.member = chart.saturation().member(pair.bracket_value);
            if (pair.member == Verdict::False) res.verdict = Verdict::False;
            if (pair.member == Verdict::Undecided && res.verdict == Verdict::True)
                res.verdict = Verdict::Undecided;
            res.certificate.push_back(std::move(pair));
        }
    }
    return res;
}

bool nondegenerate(const Bivector& P, const Chart& chart) {
    size_t n = P.dim();
    std::vector<std::vector<Poly>> mat(n, std::vector<Poly>(n, Poly::zero(P.vars())));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) mat[a][b] = P.entry(a, b);
    Poly det = poly_det(mat);
    if (det.is_zero()) return false;
    return RatFunc(det, chart.h(), 0).inverse().has_value();
}

std::vector<VectorField> null_frame(const Chart& chart, const Bivector& P) {
    std::vector<VectorField> frame;
    const VarList& vars = chart.vars();
    size_t n = chart.n();
    for (const Poly& x : chart.frame_x()) {
        VectorField v;
        v.comps.reserve(n);
        for (size_t b = 0; b < n; ++b) {
            Poly comp(vars);
            for (size_t a = 0; a < n; ++a) {
                if (P.entry(a, b).is_zero()) continue;
                comp += P.entry(a, b) * x.derivative(a);
            }
            v.comps.push_back(chart.reduce_mod_ideal(RatFunc(comp)));
        }
        frame.push_back(std::move(v));
    }
    // tangency: v_s(x_t) must lie in I
    for (size_t s = 0; s < frame.size(); ++s) {
        for (const Poly& x : chart.frame_x()) {
            RatFunc val = frame[s].apply(RatFunc(x));
            if (chart.zero_mod_ideal(val) != Verdict::True)
                throw InternalError("null_frame: frame vector " + std::to_string(s) +
                                    " is not tangent to the subvariety on chart " + chart.id());
        }
    }
    return frame;
}

InvolutivityResult involutive(const std::vector<VectorField>& frame, const Chart& chart) {
    InvolutivityResult res;
    int D = chart.opts().involutivity_degree;
    std::vector<Poly> basis = chart.standard_monomials(D);
    size_t n = chart.n();
    for (size_t s = 0; s < frame.size(); ++s) {
        for (size_t t = s + 1; t < frame.size(); ++t) {
            VectorField br = lie_bracket(frame[s], frame[t]);
            // solve br = sum_u c_u v_u mod I with polynomial ansatz
            LinSystem sys;
            for (size_t u = 0; u < frame.size(); ++u)
                for (size_t k = 0; k < basis.size(); ++k)
                    sys.add_unknown("c" + std::to_string(u) + "_" + std::to_string(k));
            // one equation per (component, monomial of reduced numerator)
            // collect coefficient vectors per unknown by linearity
            struct Key {
                size_t comp;
                Poly::Exp exp;
                bool operator<(const Key& o) const {
                    if (comp != o.comp) return comp < o.comp;
                    return exp < o.exp;
                }
            };
            std::map<Key, std::pair<std::vector<Rat>, Rat>> rows;
            size_t nunk = sys.unknowns.size();
            auto touch = [&](const Key& k) -> std::pair<std::vector<Rat>, Rat>& {
                auto it = rows.find(k);
                if (it == rows.end())
                    it = rows.emplace(k, std::make_pair(std::vector<Rat>(nunk, Rat(0)), Rat(0)))
                             .first;
                return it->second;
            };
            for (size_t b = 0; b < n; ++b) {
                RatFunc rhs = chart.reduce_mod_ideal(br.comps[b]);
                // bracket components of reduced fields can carry denominators
                // only if the frame did; our frames are polynomial mod I
                if (rhs.hpow() != 0)
                    throw InternalError("involutive: unexpected denominator in frame bracket");
                for (const auto& [e, c] : rhs.num().terms()) touch({b, e}).second += c;
                size_t col = 0;
                for (size_t u = 0; u < frame.size(); ++u) {
                    for (size_t k = 0; k < basis.size(); ++k, ++col) {
                        if (frame[u].comps[b].is_zero()) continue;
                        RatFunc contrib = RatFunc(basis[k]) * frame[u].comps[b];
                        contrib = chart.reduce_mod_ideal(contrib);
                        if (contrib.hpow() != 0)
                            throw InternalError("involutive: unexpected denominator in ansatz");
                        for (const auto& [e, c] : contrib.num().terms())
                            touch({b, e}).first[col] += c;
                    }
                }
            }
            for (auto& [key, rowrhs] : rows) sys.add_row(rowrhs.first, rowrhs.second);
            auto sol = solve_linear(sys);
            if (!sol.feasible) {
                res.verdict = Verdict::Undecided;  // coisotropy implies involutivity; never "false"
                continue;
            }
            std::vector<Poly> cs;
            size_t col = 0;
            for (size_t u = 0; u < frame.size(); ++u) {
                Poly cu(chart.vars());
                for (size_t k = 0; k < basis.size(); ++k, ++col)
                    cu += basis[k] * sol.particular[col];
                cs.push_back(cu);
            }
            res.coeffs[{s, t}] = std::move(cs);
        }
    }
    return res;
}

}  // namespace coiso
