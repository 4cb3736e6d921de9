#include "coiso/deformation.hpp"

#include "coiso/modsolve.hpp"

#include <functional>

namespace coiso {

void ModIdealSolver::add_equation(const RatFunc& constant,
                                  const std::vector<std::pair<size_t, RatFunc>>& unknown_coeffs) {
    // rebase everything to the ring denominator and clear the common power
    auto based = [&](const RatFunc& r) {
        auto b = r.rebase(h_);
        if (!b)
            throw InternalError("ModIdealSolver: value denominator " + r.h().to_string() +
                                " incompatible with ring denominator " + h_.to_string());
        return *b;
    };
    RatFunc c = based(constant);
    std::vector<std::pair<size_t, RatFunc>> us;
    int maxpow = c.hpow();
    us.reserve(unknown_coeffs.size());
    for (const auto& [idx, r] : unknown_coeffs) {
        us.emplace_back(idx, based(r));
        maxpow = std::max(maxpow, us.back().second.hpow());
    }
    auto cleared = [&](const RatFunc& r) {
        Poly num = r.num();
        if (maxpow > r.hpow()) num = num * h_.pow(maxpow - r.hpow());
        return chart_->ideal().reduce(num);
    };
    Poly cnum = cleared(c);
    std::map<Poly::Exp, std::pair<std::vector<Rat>, Rat>> rows;
    auto touch = [&](const Poly::Exp& e) -> std::pair<std::vector<Rat>, Rat>& {
        auto it = rows.find(e);
        if (it == rows.end())
            it = rows.emplace(e, std::make_pair(std::vector<Rat>(sys_.unknowns.size(), Rat(0)),
                                                Rat(0)))
                     .first;
        return it->second;
    };
    for (const auto& [e, k] : cnum.terms()) touch(e).second -= k;
    for (const auto& [idx, r] : us) {
        Poly num = cleared(r);
        for (const auto& [e, k] : num.terms()) touch(e).first[idx] += k;
    }
    for (auto& [e, row] : rows) sys_.add_row(std::move(row.first), std::move(row.second));
}

BiDiffOp alpha_X(const ChartPtr& chart, const Bivector& P) {
    size_t n = chart->n();
    BiDiffOp op(chart, 1, 1, false);
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            if (P.entry(a, b).is_zero()) continue;
            MIdx ma(n, 0), mb(n, 0);
            ma[a] = 1;
            mb[b] = 1;
            op.add(ma, mb, RatFunc(P.entry(a, b) * rat(1, 2)));
        }
    }
    return op;
}

namespace {

MIdx unit_midx(size_t n, size_t i) {
    MIdx m(n, 0);
    m[i] = 1;
    return m;
}

MIdx sum_midx(const MIdx& a, const MIdx& b) {
    MIdx m = a;
    for (size_t i = 0; i < m.size(); ++i) m[i] += b[i];
    return m;
}

void for_each_sub(const MIdx& m, const std::function<void(const MIdx&)>& fn) {
    MIdx k(m.size(), 0);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == m.size()) {
            fn(k);
            return;
        }
        for (int v = 0; v <= m[idx]; ++v) {
            k[idx] = v;
            rec(idx + 1);
        }
        k[idx] = 0;
    };
    rec(0);
}

}  // namespace

ModuleStructure build_alpha_L(const ChartPtr& chart, const Bivector& P,
                              const std::string& section_tag) {
    const size_t n = chart->n();
    const size_t r = chart->r();
    const size_t m = chart->m();
    const VarList& vars = chart->vars();
    BiDiffOp aL(chart, 2, 1, true);

    // conormal part, fixed by the normalization alpha_L(x_s, e) = 0:
    //   alpha_L(sum a_s x_s, b e) = (sum_s alpha_X(x_s, a_s) b
    //                                + 2 alpha_X(sum a_s x_s, b)) e
    // with a_s = D_s a the dual-frame coefficients of p(da).
    for (size_t s = 0; s < r; ++s) {
        const Poly& xs = chart->frame_x()[s];
        for (size_t c = 0; c < n; ++c) {
            for (size_t d = 0; d < n; ++d) {
                if (P.entry(c, d).is_zero()) continue;
                RatFunc pcd(P.entry(c, d));
                // 1/2 P^{cd} dx_s/du_c * d/du_d (D_s a) * b
                RatFunc w = pcd * RatFunc(xs.derivative(c)) * rat(1, 2);
                if (!w.is_zero()) {
                    for (size_t beta = 0; beta < n; ++beta) {
                        RatFunc jv = chart->dual_derivation_coeff(beta, s);
                        if (jv.is_zero()) continue;
                        aL.add(unit_midx(n, beta), MIdx(n, 0), w * jv.derivative(d));
                        aL.add(sum_midx(unit_midx(n, d), unit_midx(n, beta)), MIdx(n, 0), w * jv);
                    }
                }
                // P^{cd} d/du_c(sum_s (D_s a) x_s) d/du_d b
                for (size_t beta = 0; beta < n; ++beta) {
                    RatFunc jv = chart->dual_derivation_coeff(beta, s);
                    if (jv.is_zero()) continue;
                    RatFunc xsr(xs);
                    aL.add(unit_midx(n, beta), unit_midx(n, d), pcd * jv.derivative(c) * xsr);
                    aL.add(sum_midx(unit_midx(n, c), unit_midx(n, beta)), unit_midx(n, d),
                           pcd * jv * xsr);
                    aL.add(unit_midx(n, beta), unit_midx(n, d),
                           pcd * jv * RatFunc(xs.derivative(c)));
                }
            }
        }
    }

    // complementary part t(a, b e) = alpha_X(q(da), q(db)) e
    for (size_t u = 0; u < m; ++u) {
        for (size_t v = 0; v < m; ++v) {
            Poly br = bracket(chart->frame_y()[u], chart->frame_y()[v], P);
            if (br.is_zero()) continue;
            RatFunc w = RatFunc(br) * rat(1, 2);
            for (size_t beta = 0; beta < n; ++beta) {
                RatFunc ju = chart->dual_derivation_coeff(beta, r + u);
                if (ju.is_zero()) continue;
                for (size_t gamma = 0; gamma < n; ++gamma) {
                    RatFunc jv = chart->dual_derivation_coeff(gamma, r + v);
                    if (jv.is_zero()) continue;
                    aL.add(unit_midx(n, beta), unit_midx(n, gamma), w * ju * jv);
                }
            }
        }
    }

    ModuleStructure ms{chart, section_tag, aL};

    // normalization alpha_L(x_s, e) = 0
    RatFunc one = RatFunc::constant(vars, Rat(1));
    for (size_t s = 0; s < r; ++s) {
        RatFunc val = aL.eval(RatFunc(chart->frame_x()[s]), one);
        if (chart->zero_mod_ideal(val) != Verdict::True)
            throw InternalError("build_alpha_L: normalization alpha_L(x_s, e) = 0 fails on chart " +
                                chart->id());
    }
    // module identity
    TriDiffOp defect = module_defect(aL, alpha_X(chart, P));
    std::optional<IdentityFailure> fail;
    if (!verify_identity(defect, &fail))
        throw InternalError("build_alpha_L: module identity fails on chart " + chart->id() +
                            (fail ? " at (" + fail->f.to_string() + ", " + fail->g.to_string() +
                                        ", " + fail->l.to_string() + ")"
                                  : ""));
    // vanishing on I^2 (x) L (on generator products; the module identity
    // extends this to all of I^2)
    for (size_t s = 0; s < r; ++s) {
        for (size_t t = s; t < r; ++t) {
            Poly xx = chart->frame_x()[s] * chart->frame_x()[t];
            for (const Poly& mono : chart->all_monomials(aL.order2() + 1)) {
                RatFunc val = aL.eval(RatFunc(xx), RatFunc(mono));
                if (chart->zero_mod_ideal(val) != Verdict::True)
                    throw InternalError("build_alpha_L: alpha_L does not kill I^2 (x) L on chart " +
                                        chart->id());
            }
        }
    }
    return ms;
}

TriDiffOp module_defect(const BiDiffOp& aL, const BiDiffOp& aX) {
    const ChartPtr& chart = aL.chart();
    size_t n = chart->n();
    int k1 = aL.order1(), k2 = aL.order2();
    TriDiffOp T(chart, std::max(k1, aX.order1()), std::max({k1, k2, aX.order2()}), k2, true);
    MIdx zero(n, 0);
    for (const auto& [key, c] : aL.coeffs()) {
        const auto& [mu, nu] = key;
        // alpha_L(a a', l): Leibniz split of d^mu(a a')
        for_each_sub(mu, [&](const MIdx& k) {
            MIdx rest(n);
            for (size_t i = 0; i < n; ++i) rest[i] = mu[i] - k[i];
            T.add(k, rest, nu, c * midx_binomial(mu, k));
        });
        // - alpha_L(a, a' l): Leibniz split of d^nu(a' l)
        for_each_sub(nu, [&](const MIdx& k) {
            MIdx rest(n);
            for (size_t i = 0; i < n; ++i) rest[i] = nu[i] - k[i];
            T.add(mu, k, rest, c * midx_binomial(nu, k) * Rat(-1));
        });
        // - a alpha_L(a', l)
        T.add(zero, mu, nu, c * Rat(-1));
    }
    // + alpha_X(a, a') l
    for (const auto& [key, c] : aX.coeffs()) T.add(key.first, key.second, zero, c);
    return T;
}

bool verify_identity(const TriDiffOp& op, std::optional<IdentityFailure>* failure) {
    const ChartPtr& chart = op.chart();
    auto basis1 = chart->all_monomials(op.order1() + 1);
    auto basis2 = chart->all_monomials(op.order2() + 1);
    auto basis3 = chart->all_monomials(op.order3() + 1);
    for (const Poly& f : basis1) {
        for (const Poly& g : basis2) {
            for (const Poly& l : basis3) {
                RatFunc val = op.eval(RatFunc(f), RatFunc(g), RatFunc(l));
                bool ok = op.targets_bundle() ? chart->zero_mod_ideal(val) == Verdict::True
                                              : val.is_zero();
                if (!ok) {
                    if (failure) *failure = IdentityFailure{f, g, l, val};
                    return false;
                }
            }
        }
    }
    return true;
}

BiDiffOp gauge_coboundary(const LDiffOp& beta) {
    const ChartPtr& chart = beta.chart();
    size_t n = chart->n();
    BiDiffOp out(chart, beta.order(), beta.order(), true);
    MIdx zero(n, 0);
    for (const auto& [mu, c] : beta.coeffs()) {
        for_each_sub(mu, [&](const MIdx& k) {
            MIdx rest(n);
            for (size_t i = 0; i < n; ++i) rest[i] = mu[i] - k[i];
            out.add(k, rest, c * midx_binomial(mu, k));
        });
        out.add(zero, mu, c * Rat(-1));
    }
    return out;
}

LiftComparison compare_lifts(const ModuleStructure& a, const ModuleStructure& b) {
    const ChartPtr& chart = a.chart;
    if (chart != b.chart) throw std::invalid_argument("compare_lifts: different charts");
    BiDiffOp R = a.alpha - b.alpha;

    // restriction to N^v (x) L must vanish for equivalence
    for (size_t s = 0; s < chart->r(); ++s) {
        for (const Poly& mono : chart->all_monomials(R.order2() + 1)) {
            RatFunc val = R.eval(RatFunc(chart->frame_x()[s]), RatFunc(mono));
            if (chart->zero_mod_ideal(val) != Verdict::True)
                return NotEquivalent{s, mono, chart->reduce_mod_ideal(val)};
        }
    }

    // solve R(f, l) = beta(f l) - f beta(l) for beta of order <= 2 with
    // polynomial coefficients of bounded degree
    int D = chart->opts().degree_bound;
    size_t n = chart->n();
    std::vector<MIdx> midxs;
    {
        std::vector<Poly> monos = chart->all_monomials(2);
        for (const Poly& mp : monos) {
            MIdx m(mp.terms().begin()->first.begin(), mp.terms().begin()->first.end());
            midxs.push_back(m);
        }
    }
    std::vector<Poly> cbasis = chart->standard_monomials(D);
    size_t nunk = midxs.size() * cbasis.size();
    ModIdealSolver solver(*chart, chart->h(), nunk);

    auto test1 = chart->all_monomials(3);
    auto test2 = chart->all_monomials(3);
    for (const Poly& f : test1) {
        for (const Poly& l : test2) {
            RatFunc cval = R.eval(RatFunc(f), RatFunc(l));
            std::vector<std::pair<size_t, RatFunc>> ucoeffs;
            size_t idx = 0;
            for (const MIdx& mu : midxs) {
                Poly dl = f * l;
                RatFunc dfl = apply_derivs(RatFunc(dl), mu);
                RatFunc dlf = RatFunc(f) * apply_derivs(RatFunc(l), mu);
                RatFunc shape = dfl - dlf;
                for (const Poly& ck : cbasis) {
                    if (!shape.is_zero())
                        ucoeffs.emplace_back(idx, RatFunc(ck) * shape * Rat(-1));
                    ++idx;
                }
            }
            solver.add_equation(cval, ucoeffs);
        }
    }
    auto sol = solver.solve();
    if (!sol.feasible) return UndecidedAtBound{D};
    LDiffOp beta(chart, 2);
    size_t idx = 0;
    for (const MIdx& mu : midxs) {
        for (const Poly& ck : cbasis) {
            if (sol.particular[idx] != 0) beta.add(mu, RatFunc(ck * sol.particular[idx]));
            ++idx;
        }
    }
    return beta;
}

bool star_product_check(const BiDiffOp& aX, const BiDiffOp& aL) {
    const ChartPtr& chart = aL.chart();
    using Dual = std::pair<RatFunc, RatFunc>;  // value + eps part
    auto star_mult = [&](const Dual& f, const Dual& g) {
        return Dual{f.first * g.first,
                    f.first * g.second + f.second * g.first + aX.eval(f.first, g.first)};
    };
    auto star_act = [&](const Dual& f, const Dual& l) {
        return Dual{f.first * l.first,
                    f.first * l.second + f.second * l.first + aL.eval(f.first, l.first)};
    };
    int d1 = std::max(aX.order1(), aL.order1()) + 1;
    int d2 = aL.order2() + 1;
    auto fs = chart->all_monomials(d1);
    auto ls = chart->all_monomials(d2);
    RatFunc one = RatFunc::constant(chart->vars(), Rat(1));
    for (const Poly& fp : fs) {
        for (const Poly& gp : fs) {
            for (const Poly& lp : ls) {
                Dual f{RatFunc(fp), RatFunc::zero(chart->vars())};
                Dual g{RatFunc(gp), one};  // nonzero eps parts ride along freely
                Dual l{RatFunc(lp), RatFunc::zero(chart->vars())};
                Dual lhs = star_act(star_mult(f, g), l);
                Dual rhs = star_act(f, star_act(g, l));
                RatFunc diff0 = lhs.first - rhs.first;
                RatFunc diff1 = lhs.second - rhs.second;
                if (!diff0.is_zero()) return false;
                if (chart->zero_mod_ideal(diff1) != Verdict::True) return false;
            }
        }
    }
    return true;
}

}  // namespace coiso
