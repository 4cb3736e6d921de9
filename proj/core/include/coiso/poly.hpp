#pragma once

#include "coiso/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace coiso {

// Ordered list of variable names, shared between all values of a chart.
using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_vars(const VarList& a, const VarList& b) {
    return a == b || (a && b && *a == *b);
}

// Sparse multivariate polynomial over Q. Terms are keyed by exponent
// vectors (one entry per variable); zero coefficients are never stored.
class Poly {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, Rat>;

    Poly() = default;
    explicit Poly(VarList vars) : vars_(std::move(vars)) {}

    static Poly zero(VarList vars) { return Poly(std::move(vars)); }
    static Poly constant(VarList vars, const Rat& c);
    static Poly variable(VarList vars, size_t idx);
    static Poly monomial(VarList vars, Exp e, const Rat& c);

    const VarList& vars() const { return vars_; }
    size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    int total_degree() const;    // -1 for the zero polynomial

    void add_term(const Exp& e, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator*(const Rat& c) const;
    friend Poly operator*(const Rat& c, const Poly& p) { return p * c; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const;
    Poly derivative(size_t var_idx) const;

    // Divisibility by a single divisor (exact multivariate division,
    // remainder must vanish). Returns nothing if not divisible.
    static bool try_divide(const Poly& dividend, const Poly& divisor, Poly& quotient);

    std::string to_string() const;

private:
    VarList vars_;
    TermMap terms_;
};

// Determinant of a square polynomial matrix (fraction-free Bareiss).
Poly poly_det(const std::vector<std::vector<Poly>>& mat);

// Adjugate matrix (transposed cofactors), so mat * adj = det * Id.
std::vector<std::vector<Poly>> poly_adjugate(const std::vector<std::vector<Poly>>& mat);

}  // namespace coiso
