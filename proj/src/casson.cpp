#include "symp/casson.hpp"

#include "symp/traces.hpp"

#include <algorithm>
#include <sstream>

namespace symp {

namespace {

mpq_class to_mpq(const Integer& x) { return mpq_class(x.to_mpz()); }

}  // namespace

void CassonPoly::add_term(const Monomial& m, const Integer& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

CassonPoly CassonPoly::constant(const Integer& c) {
    CassonPoly p;
    p.add_term({}, c);
    return p;
}

CassonPoly CassonPoly::symbol(int n, int p, int q) {
    if (p > q) throw std::invalid_argument("symbol needs p <= q");
    CassonPoly r;
    r.add_term({static_cast<int>(sym2_index(n, p, q))}, Integer(1));
    return r;
}

CassonPoly& CassonPoly::operator+=(const CassonPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

CassonPoly& CassonPoly::operator-=(const CassonPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

CassonPoly operator*(const CassonPoly& a, const CassonPoly& b) {
    CassonPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            CassonPoly::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            r.add_term(m, ca * cb);
        }
    return r;
}

CassonPoly operator*(const Integer& c, CassonPoly a) {
    if (c.is_zero()) return {};
    for (auto& [m, x] : a.t_) x *= c;
    return a;
}

std::string CassonPoly::str(const SymplecticContext& sp) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Integer a = abs(c);
        os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (!(a == Integer(1)) || m.empty()) os << a;
        for (int v : m) {
            auto [p, q] = sym2_pair(sp.dim(), v);
            os << "l(" << sp.label(p) << "," << sp.label(q) << ")";
        }
        first = false;
    }
    return os.str();
}

LinkingForm::LinkingForm(const SymplecticContext& sp, IntegerMatrix lk) : n_(sp.dim()), lk_(std::move(lk)) {
    if (lk_.rows() != static_cast<std::size_t>(n_) || lk_.cols() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("linking form has the wrong size");
    IntegerMatrix j = sp.gram();
    for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q)
            if (!(lk_(q, p) - lk_(p, q) == j(p, q)))
                throw std::invalid_argument("linking form violates l(v,u) = l(u,v) + omega(u,v)");
}

LinkingForm LinkingForm::base(const SymplecticContext& sp) {
    const int g = sp.genus();
    IntegerMatrix m(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) m(g + i, i) = 1;
    return LinkingForm(sp, std::move(m));
}

LinkingForm LinkingForm::twisted(const SymplecticContext& sp, const IntegerMatrix& s) {
    const int g = sp.genus();
    check_symmetric(s, g);
    IntegerMatrix m = base(sp).matrix();
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) m(g + i, g + j) = s(i, j);
    return LinkingForm(sp, std::move(m));
}

Integer LinkingForm::pair(const HVector& u, const HVector& v) const {
    Integer r;
    for (int p = 0; p < n_; ++p) {
        if (!u[p]) continue;
        for (int q = 0; q < n_; ++q)
            if (v[q] && !lk_(p, q).is_zero()) r.addmul(Integer(u[p] * v[q]), lk_(p, q));
    }
    return r;
}

Integer LinkingForm::evaluate(const CassonPoly& poly) const {
    Integer total;
    for (const auto& [m, c] : poly.terms()) {
        Integer x = c;
        for (int v : m) {
            auto [p, q] = sym2_pair(n_, v);
            x *= lk_(p, q);
        }
        total += x;
    }
    return total;
}

void check_symmetric(const IntegerMatrix& s, int g) {
    if (s.rows() != static_cast<std::size_t>(g) || s.cols() != static_cast<std::size_t>(g) || !(s == s.transpose()))
        throw std::invalid_argument("S must be a symmetric g x g matrix");
}

CassonPoly l_symbol(const SymplecticContext& sp, const HVector& u, const HVector& v) {
    sp.check(u);
    sp.check(v);
    const int n = sp.dim();
    CassonPoly r;
    for (int p = 0; p < n; ++p) {
        if (!u[p]) continue;
        for (int q = 0; q < n; ++q) {
            if (!v[q]) continue;
            Integer c(u[p] * v[q]);
            if (p <= q)
                r += c * CassonPoly::symbol(n, p, q);
            else
                r += c * (CassonPoly::symbol(n, q, p) + CassonPoly::constant(Integer(sp.omega_basis(q, p))));
        }
    }
    return r;
}

CassonPoly theta(const SymplecticContext& sp, const Generator& g) {
    auto l = [&](const HVector& x, const HVector& y) { return l_symbol(sp, x, y); };
    if (const auto* t = std::get_if<Tree2>(&g)) {
        const auto &a = t->a, &b = t->b, &c = t->c, &d = t->d;
        return l(a, c) * l(b, d) - l(a, d) * l(b, c) - l(d, a) * l(c, b) + l(c, a) * l(d, b);
    }
    const auto& s = std::get<SymHalf>(g);
    return l(s.a, s.a) * l(s.b, s.b) - l(s.a, s.b) * l(s.b, s.a);
}

std::int64_t dbar(const SymplecticContext& sp, const Generator& g) {
    const auto* t = std::get_if<Tree2>(&g);
    if (!t) return 0;
    return sp.omega(t->a, t->b) * sp.omega(t->c, t->d) - sp.omega(t->a, t->c) * sp.omega(t->b, t->d) +
           sp.omega(t->a, t->d) * sp.omega(t->b, t->c);
}

std::int64_t d_core(int h) {
    if (h < 0) throw std::invalid_argument("genus of a subsurface is nonnegative");
    return 4 * static_cast<std::int64_t>(h) * (h - 1);
}

mpq_class qbar(const SymplecticContext& sp, const Generator& g) {
    mpq_class r = to_mpq(LinkingForm::base(sp).evaluate(theta(sp, g))) + mpq_class(dbar(sp, g), 3);
    r.canonicalize();
    return r;
}

mpq_class qbar(const D2Space& d, const IntVector& coords) {
    mpq_class r = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) r += to_mpq(coords[i]) * qbar(d.sp(), d.basis()[i].gen);
    r.canonicalize();
    return r;
}

mpq_class qbar(const D2Space& d, const DerivationElement& v) {
    auto c = d.from_ambient(v);
    if (!c) throw NotInD2();
    return qbar(d, *c);
}

Integer mu(const SymplecticContext& sp, const Generator& g, const IntegerMatrix& s) {
    CassonPoly t = theta(sp, g);
    return LinkingForm::base(sp).evaluate(t) - LinkingForm::twisted(sp, s).evaluate(t);
}

Integer mu(const D2Space& d, const IntVector& coords, const IntegerMatrix& s) {
    const auto& sp = d.sp();
    check_symmetric(s, sp.genus());
    LinkingForm base = LinkingForm::base(sp), tw = LinkingForm::twisted(sp, s);
    Integer r;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        CassonPoly t = theta(sp, d.basis()[i].gen);
        r.addmul(coords[i], base.evaluate(t) - tw.evaluate(t));
    }
    return r;
}

Integer mu(const D2Space& d, const DerivationElement& v, const IntegerMatrix& s) {
    auto c = d.from_ambient(v);
    if (!c) throw NotInD2();
    return mu(d, *c, s);
}

Integer r_pairing(const IntegerMatrix& s, const IntVector& q) {
    const int g = static_cast<int>(s.rows());
    check_symmetric(s, g);
    if (q.size() != sym2_dim(g)) throw std::invalid_argument("r_pairing: q has the wrong size");
    Integer r;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) r.addmul(s(i, j), q[sym2_index(g, i, j)]);
    return r;
}

mpq_class half_omegaS_plus_delta(const SymplecticContext& sp, const IntVector& t2, const IntegerMatrix& s) {
    const int g = sp.genus(), n = sp.dim();
    check_symmetric(s, g);
    if (t2.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("expected an element of T2(H)");
    Integer twice;  // 2·(½ω_S + ω_δ)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Integer& c = t2[x * n + y];
            if (c.is_zero()) continue;
            if (x >= g && y >= g) twice.addmul(c, s(x - g, y - g));
            if (x >= g && y == x - g) twice.addmul(Integer(2), c);
        }
    mpq_class r(twice.to_mpz(), 2);
    r.canonicalize();
    return r;
}

}  // namespace symp
