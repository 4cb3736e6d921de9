#include "coiso/ideal.hpp"

#include <algorithm>
#include <set>

namespace coiso {

MonomialOrder order_from_tag(const std::string& tag) {
    if (tag == "grevlex") return MonomialOrder::Grevlex;
    if (tag == "grlex") return MonomialOrder::Grlex;
    if (tag == "lex") return MonomialOrder::Lex;
    throw ValidationError("unsupported monomial order tag '" + tag + "'");
}

std::string order_tag(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::Grevlex: return "grevlex";
        case MonomialOrder::Grlex: return "grlex";
        case MonomialOrder::Lex: return "lex";
    }
    return "?";
}

bool exp_less(const Poly::Exp& a, const Poly::Exp& b, MonomialOrder o) {
    if (o == MonomialOrder::Lex) return a < b;
    int da = 0, db = 0;
    for (int k : a) da += k;
    for (int k : b) db += k;
    if (da != db) return da < db;
    if (o == MonomialOrder::Grlex) return a < b;
    // grevlex: a < b iff the last nonzero entry of a - b is positive
    for (size_t i = a.size(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0;
    }
    return false;
}

namespace {

using Exp = Poly::Exp;

const std::pair<const Exp, Rat>* lead(const Poly& p, MonomialOrder o) {
    const std::pair<const Exp, Rat>* best = nullptr;
    for (const auto& t : p.terms()) {
        if (!best || exp_less(best->first, t.first, o)) best = &t;
    }
    return best;
}

bool divides(const Exp& d, const Exp& e) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i]) return false;
    return true;
}

Exp lcm_exp(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

bool coprime(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Poly spoly(const Poly& f, const Poly& g, MonomialOrder o) {
    auto lf = lead(f, o);
    auto lg = lead(g, o);
    Exp l = lcm_exp(lf->first, lg->first);
    Exp ef(l.size()), eg(l.size());
    for (size_t i = 0; i < l.size(); ++i) {
        ef[i] = l[i] - lf->first[i];
        eg[i] = l[i] - lg->first[i];
    }
    Poly mf = Poly::monomial(f.vars(), ef, Rat(1) / lf->second);
    Poly mg = Poly::monomial(g.vars(), eg, Rat(1) / lg->second);
    return f * mf - g * mg;
}

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order) {
    Poly rem(f.vars());
    Poly cur = f;
    while (!cur.is_zero()) {
        auto lc = lead(cur, order);
        bool reduced = false;
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            auto lg = lead(g, order);
            if (divides(lg->first, lc->first)) {
                Exp m(lc->first.size());
                for (size_t i = 0; i < m.size(); ++i) m[i] = lc->first[i] - lg->first[i];
                cur = cur - g * Poly::monomial(f.vars(), m, lc->second / lg->second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lc->first, lc->second);
            Poly t = Poly::monomial(f.vars(), lc->first, lc->second);
            cur = cur - t;
        }
    }
    return rem;
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, MonomialOrder order) {
    if (gens.empty()) throw std::invalid_argument("groebner_basis: no generators");
    std::vector<Poly> g;
    for (const Poly& p : gens) {
        if (!same_vars(p.vars(), gens[0].vars()))
            throw std::invalid_argument("groebner_basis: mixed variable lists");
        if (!p.is_zero()) g.push_back(p);
    }
    if (g.empty()) return {};

    // pair queue with normal selection: smallest lcm first
    struct Pair {
        Exp l;
        size_t i, j;
    };
    auto pair_less = [order](const Pair& a, const Pair& b) {
        if (a.l != b.l) return exp_less(a.l, b.l, order);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            queue.push_back({lcm_exp(lead(g[i], order)->first, lead(g[k], order)->first), i, k});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (size_t k = 1; k < g.size(); ++k) push_pairs_for(k);
    std::set<std::pair<size_t, size_t>> done;

    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        done.insert({pr.i, pr.j});
        const Exp& li = lead(g[pr.i], order)->first;
        const Exp& lj = lead(g[pr.j], order)->first;
        if (coprime(li, lj)) continue;  // Buchberger's first criterion
        // chain criterion: some k with lead(k) | lcm(i,j) and both (i,k),(j,k) done
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(lead(g[k], order)->first, pr.l)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (done.count({key_ik.first, key_ik.second}) &&
                done.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;
        Poly r = normal_form(spoly(g[pr.i], g[pr.j], order), g, order);
        if (!r.is_zero()) {
            g.push_back(r);
            push_pairs_for(g.size() - 1);
        }
    }

    // autoreduce: normal form of each element against the others, iterate to fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < g.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(g[j]);
            Poly r = others.empty() ? g[i] : normal_form(g[i], others, order);
            if (r != g[i]) {
                changed = true;
                if (r.is_zero()) {
                    g.erase(g.begin() + static_cast<long>(i));
                    --i;
                } else {
                    g[i] = r;
                }
            }
        }
    }
    for (Poly& p : g) {
        auto l = lead(p, order);
        p = p * (Rat(1) / l->second);
    }
    std::sort(g.begin(), g.end(), [order](const Poly& a, const Poly& b) {
        return exp_less(lead(b, order)->first, lead(a, order)->first, order);
    });
    return g;
}

Ideal::Ideal(std::vector<Poly> gens, MonomialOrder order)
    : gens_(std::move(gens)), order_(order) {
    if (gens_.empty()) throw std::invalid_argument("Ideal: no generators");
    vars_ = gens_[0].vars();
    gb_ = groebner_basis(gens_, order_);
}

Poly Ideal::reduce(const Poly& f) const {
    if (gb_.empty()) return f;  // zero ideal
    return normal_form(f, gb_, order_);
}

std::string verdict_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

SaturationOracle::SaturationOracle(const Ideal& ideal, Poly h, int bound, bool exact)
    : ideal_(&ideal), h_(std::move(h)), bound_(bound), exact_(exact) {
    h_constant_ = h_.is_constant();
    if (h_constant_) {
        if (h_.constant_value() == 0) throw ValidationError("chart denominator is zero");
        return;
    }
    if (!exact_) return;
    // extended ring k[x, t] with the relation 1 - t*h
    std::vector<std::string> names = *ideal.vars();
    std::string tname = "_t";
    while (std::find(names.begin(), names.end(), tname) != names.end()) tname += "_";
    names.push_back(tname);
    ext_vars_ = make_vars(names);
    std::vector<Poly> gens;
    for (const Poly& p : ideal.generators()) gens.push_back(lift(p));
    Poly t = Poly::variable(ext_vars_, names.size() - 1);
    gens.push_back(Poly::constant(ext_vars_, Rat(1)) - t * lift(h_));
    ext_gb_ = groebner_basis(gens, ext_order_);
}

Poly SaturationOracle::lift(const Poly& f) const {
    Poly out(ext_vars_);
    for (const auto& [e, c] : f.terms()) {
        Poly::Exp le = e;
        le.push_back(0);
        out.add_term(le, c);
    }
    return out;
}

Verdict SaturationOracle::member(const Poly& f) const {
    if (h_constant_) return ideal_->contains(f) ? Verdict::True : Verdict::False;
    Poly hk = Poly::constant(f.vars(), Rat(1));
    for (int k = 0; k <= bound_; ++k) {
        if (ideal_->contains(hk * f)) return Verdict::True;
        hk = hk * h_;
    }
    if (!exact_) return Verdict::Undecided;
    Poly r = normal_form(lift(f), ext_gb_, ext_order_);
    return r.is_zero() ? Verdict::True : Verdict::False;
}

}  // namespace coiso
