#pragma once

#include "symp/derivations.hpp"

#include <gmpxx.h>

#include <map>
#include <string>

namespace symp {

// Polynomial in the symbols l_pq = l(e_p, e_q), p <= q. Every l(u, v) is
// reduced to this form with l(v, u) = l(u, v) + omega(u, v).
class CassonPoly {
public:
    using Monomial = std::vector<int>;  // sorted symbol indices

    CassonPoly() = default;
    static CassonPoly constant(const Integer& c);
    static CassonPoly symbol(int n, int p, int q);  // p <= q

    const std::map<Monomial, Integer>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    CassonPoly& operator+=(const CassonPoly& o);
    CassonPoly& operator-=(const CassonPoly& o);
    friend CassonPoly operator+(CassonPoly a, const CassonPoly& b) { return a += b; }
    friend CassonPoly operator-(CassonPoly a, const CassonPoly& b) { return a -= b; }
    friend CassonPoly operator*(const CassonPoly& a, const CassonPoly& b);
    friend CassonPoly operator*(const Integer& c, CassonPoly a);
    friend bool operator==(const CassonPoly&, const CassonPoly&) = default;

    std::string str(const SymplecticContext& sp) const;

private:
    void add_term(const Monomial& m, const Integer& c);
    std::map<Monomial, Integer> t_;
};

// 2g x 2g matrix Lk with eps(l(u, v)) = u^T Lk v; requires Lk^T − Lk = J.
class LinkingForm {
public:
    LinkingForm(const SymplecticContext& sp, IntegerMatrix lk);
    // [[0,0],[I,0]]
    static LinkingForm base(const SymplecticContext& sp);
    // [[0,0],[I,S]] for symmetric S
    static LinkingForm twisted(const SymplecticContext& sp, const IntegerMatrix& s);

    const IntegerMatrix& matrix() const { return lk_; }
    Integer pair(const HVector& u, const HVector& v) const;
    Integer evaluate(const CassonPoly& p) const;

private:
    int n_;
    IntegerMatrix lk_;
};

CassonPoly l_symbol(const SymplecticContext& sp, const HVector& u, const HVector& v);
CassonPoly theta(const SymplecticContext& sp, const Generator& g);
std::int64_t dbar(const SymplecticContext& sp, const Generator& g);
std::int64_t d_core(int h);

// qbar = eps∘theta + dbar/3 for the base linking form.
mpq_class qbar(const SymplecticContext& sp, const Generator& g);
mpq_class qbar(const D2Space& d, const IntVector& coords);
mpq_class qbar(const D2Space& d, const DerivationElement& v);

// mu(v, S) = (eps_base − eps_twisted)∘theta(v).
Integer mu(const SymplecticContext& sp, const Generator& g, const IntegerMatrix& s);
Integer mu(const D2Space& d, const IntVector& coords, const IntegerMatrix& s);
Integer mu(const D2Space& d, const DerivationElement& v, const IntegerMatrix& s);

// Half of r(s) paired with q in S²(H'): sum_{i<=j} S_ij q_ij.
Integer r_pairing(const IntegerMatrix& s, const IntVector& q);

// (½ omega_S + omega_delta) applied to an element of T2(H) (index x * 2g + y).
mpq_class half_omegaS_plus_delta(const SymplecticContext& sp, const IntVector& t2, const IntegerMatrix& s);

void check_symmetric(const IntegerMatrix& s, int g);

}  // namespace symp
