#pragma once

#include "coiso/poly.hpp"

#include <optional>

namespace coiso {

enum class MonomialOrder { Grevlex, Grlex, Lex };

MonomialOrder order_from_tag(const std::string& tag);
std::string order_tag(MonomialOrder o);

// strict comparison a < b under the order
bool exp_less(const Poly::Exp& a, const Poly::Exp& b, MonomialOrder o);

// Buchberger with the normal selection strategy, the coprime-lead and chain
// criteria, and full autoreduction. Output is monic, sorted by decreasing
// leading monomial; it is the unique reduced basis for the given order.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, MonomialOrder order);

// Full normal form of f against a (Groebner) basis.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order);

class Ideal {
public:
    Ideal() = default;
    Ideal(std::vector<Poly> gens, MonomialOrder order = MonomialOrder::Grevlex);

    const std::vector<Poly>& generators() const { return gens_; }
    const std::vector<Poly>& basis() const { return gb_; }
    MonomialOrder order() const { return order_; }
    const VarList& vars() const { return vars_; }

    Poly reduce(const Poly& f) const;
    bool contains(const Poly& f) const { return reduce(f).is_zero(); }

private:
    VarList vars_;
    std::vector<Poly> gens_;
    std::vector<Poly> gb_;
    MonomialOrder order_ = MonomialOrder::Grevlex;
};

enum class Verdict { True, False, Undecided };

std::string verdict_string(Verdict v);

// Membership in the localization I_h: true iff h^k f lies in I for some k.
// Fast path iterates k up to `bound`; when `exact` is set the extra-variable
// basis (computed once per (I, h)) decides the remaining cases, otherwise
// the result is Undecided.
class SaturationOracle {
public:
    SaturationOracle() = default;
    SaturationOracle(const Ideal& ideal, Poly h, int bound, bool exact);

    Verdict member(const Poly& f) const;
    const Poly& h() const { return h_; }

private:
    const Ideal* ideal_ = nullptr;
    Poly h_;
    int bound_ = 10;
    bool exact_ = true;
    bool h_constant_ = true;
    // extended-ring data for the exact decision
    VarList ext_vars_;
    std::vector<Poly> ext_gb_;
    MonomialOrder ext_order_ = MonomialOrder::Grevlex;

    Poly lift(const Poly& f) const;
};

}  // namespace coiso
