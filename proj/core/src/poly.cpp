#include "coiso/poly.hpp"

#include <algorithm>
#include <sstream>

namespace coiso {

Poly Poly::constant(VarList vars, const Rat& c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_[Exp(p.nvars(), 0)] = c;
    return p;
}

Poly Poly::variable(VarList vars, size_t idx) {
    Poly p(std::move(vars));
    Exp e(p.nvars(), 0);
    e.at(idx) = 1;
    p.terms_[e] = Rat(1);
    return p;
}

Poly Poly::monomial(VarList vars, Exp e, const Rat& c) {
    Poly p(std::move(vars));
    if (e.size() != p.nvars()) throw std::invalid_argument("monomial: exponent length mismatch");
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int k : e) t += k;
        d = std::max(d, t);
    }
    return d;
}

void Poly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    if (e.size() != nvars()) throw std::invalid_argument("add_term: exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (!same_vars(vars_, o.vars_)) throw std::invalid_argument("poly +: variable list mismatch");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!same_vars(vars_, o.vars_)) throw std::invalid_argument("poly *: variable list mismatch");
    Poly out(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exp e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    Poly out(vars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_vars(vars_, o.vars_)) return false;
    return terms_ == o.terms_;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::domain_error("poly pow: negative exponent");
    Poly out = Poly::constant(vars_, Rat(1));
    Poly b = *this;
    while (e > 0) {
        if (e & 1) out = out * b;
        b = b * b;
        e >>= 1;
    }
    return out;
}

Poly Poly::derivative(size_t var_idx) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var_idx) == 0) continue;
        Exp d = e;
        d[var_idx] -= 1;
        out.add_term(d, c * Rat(e[var_idx]));
    }
    return out;
}

namespace {

// total degree, then lex: a deterministic order for picking division leads
bool grlex_less(const Poly::Exp& a, const Poly::Exp& b) {
    int da = 0, db = 0;
    for (int k : a) da += k;
    for (int k : b) db += k;
    if (da != db) return da < db;
    return a < b;
}

const Poly::Exp* lead_exp(const Poly& p) {
    const Poly::Exp* best = nullptr;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (!best || grlex_less(*best, e)) best = &e;
    }
    return best;
}

bool exp_divides(const Poly::Exp& d, const Poly::Exp& e) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i]) return false;
    return true;
}

}  // namespace

bool Poly::try_divide(const Poly& dividend, const Poly& divisor, Poly& quotient) {
    if (divisor.is_zero()) return false;
    if (!same_vars(dividend.vars(), divisor.vars()))
        throw std::invalid_argument("try_divide: variable list mismatch");
    Poly rem = dividend;
    Poly q(dividend.vars());
    const Exp* dl = lead_exp(divisor);
    const Rat dc = divisor.terms().at(*dl);
    while (!rem.is_zero()) {
        const Exp* rl = lead_exp(rem);
        if (!exp_divides(*dl, *rl)) return false;
        Exp m(rl->size());
        for (size_t i = 0; i < m.size(); ++i) m[i] = (*rl)[i] - (*dl)[i];
        Rat c = rem.terms().at(*rl) / dc;
        Poly t = Poly::monomial(dividend.vars(), m, c);
        q += t;
        rem -= t * divisor;
    }
    quotient = q;
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    // print highest degree first, deterministic
    std::vector<const TermMap::value_type*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const Rat& c = t->second;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream mono;
        for (size_t i = 0; i < t->first.size(); ++i) {
            int e = t->first[i];
            if (e == 0) continue;
            if (any_var) mono << "*";
            mono << (*vars_)[i];
            if (e > 1) mono << "^" << e;
            any_var = true;
        }
        if (!any_var) {
            os << rat_to_string(ac);
        } else if (ac == 1) {
            os << mono.str();
        } else {
            os << rat_to_string(ac) << "*" << mono.str();
        }
    }
    return os.str();
}

Poly poly_det(const std::vector<std::vector<Poly>>& mat) {
    size_t n = mat.size();
    if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
    VarList vars = mat[0][0].vars();
    // Bareiss fraction-free elimination; divisions are exact.
    std::vector<std::vector<Poly>> a = mat;
    Poly prev = Poly::constant(vars, Rat(1));
    Rat sign(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly::zero(vars);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                Poly q;
                if (!Poly::try_divide(num, prev, q))
                    throw InternalError("poly_det: Bareiss division not exact");
                a[i][j] = q;
            }
        }
        for (size_t i = k + 1; i < n; ++i) a[i][k] = Poly::zero(vars);
        prev = a[k][k];
    }
    return a[n - 1][n - 1] * sign;
}

std::vector<std::vector<Poly>> poly_adjugate(const std::vector<std::vector<Poly>>& mat) {
    size_t n = mat.size();
    VarList vars = mat[0][0].vars();
    std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n, Poly::zero(vars)));
    if (n == 1) {
        adj[0][0] = Poly::constant(vars, Rat(1));
        return adj;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Poly>> minor;
            minor.reserve(n - 1);
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Poly> row;
                row.reserve(n - 1);
                for (size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    row.push_back(mat[r][c]);
                }
                minor.push_back(std::move(row));
            }
            Poly cof = poly_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;  // transpose of cofactor matrix
        }
    }
    return adj;
}

}  // namespace coiso
