#include "symp/symplectic.hpp"

namespace symp {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("tensor coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("tensor coefficient overflow");
    return r;
}

SymplecticContext::SymplecticContext(int genus) : g_(genus) {
    if (genus < 1) throw ContextError("genus must be positive");
}

HVector SymplecticContext::basis(int p) const {
    if (p < 0 || p >= dim()) throw ContextError("basis index out of range");
    HVector v(dim(), 0);
    v[p] = 1;
    return v;
}

std::string SymplecticContext::label(int p) const {
    return (in_A(p) ? "a" : "b") + std::to_string(p % g_ + 1);
}

std::int64_t SymplecticContext::omega_basis(int p, int q) const {
    if (p < g_ && q == p + g_) return 1;
    if (p >= g_ && q == p - g_) return -1;
    return 0;
}

std::int64_t SymplecticContext::omega(const HVector& u, const HVector& v) const {
    check(u);
    check(v);
    std::int64_t s = 0;
    for (int i = 0; i < g_; ++i) {
        s = checked_add(s, checked_mul(u[i], v[g_ + i]));
        s = checked_add(s, -checked_mul(u[g_ + i], v[i]));
    }
    return s;
}

IntegerMatrix SymplecticContext::gram() const {
    IntegerMatrix j(dim(), dim());
    for (int i = 0; i < g_; ++i) {
        j(i, g_ + i) = 1;
        j(g_ + i, i) = -1;
    }
    return j;
}

bool SymplecticContext::is_symplectic(const IntegerMatrix& m) const {
    if (m.rows() != static_cast<std::size_t>(dim()) || m.cols() != static_cast<std::size_t>(dim())) return false;
    IntegerMatrix j = gram();
    return m.transpose() * j * m == j;
}

IntegerMatrix SymplecticContext::iota() const {
    IntegerMatrix m(dim(), dim());
    for (int i = 0; i < g_; ++i) {
        m(g_ + i, i) = -1;  // a_i -> -b_i
        m(i, g_ + i) = 1;   // b_i -> a_i
    }
    return m;
}

IntegerMatrix SymplecticContext::gl_embed(const IntegerMatrix& p) const {
    if (p.rows() != static_cast<std::size_t>(g_) || p.cols() != static_cast<std::size_t>(g_))
        throw ContextError("GL(g) matrix has the wrong size");
    IntegerMatrix q = unimodular_inverse(p).transpose();
    IntegerMatrix m(dim(), dim());
    for (int i = 0; i < g_; ++i)
        for (int j = 0; j < g_; ++j) {
            m(i, j) = p(i, j);
            m(g_ + i, g_ + j) = q(i, j);
        }
    return m;
}

void SymplecticContext::check(const HVector& v) const {
    if (static_cast<int>(v.size()) != dim()) throw ContextError("vector does not belong to this genus");
}

HVector operator+(const HVector& u, const HVector& v) {
    HVector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = checked_add(u[i], v[i]);
    return r;
}

HVector operator-(const HVector& u, const HVector& v) {
    HVector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = checked_add(u[i], -v[i]);
    return r;
}

HVector operator-(const HVector& u) {
    HVector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = -u[i];
    return r;
}

HVector operator*(std::int64_t c, const HVector& u) {
    HVector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = checked_mul(c, u[i]);
    return r;
}

HVector act(const IntegerMatrix& m, const HVector& v) {
    HVector r(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (v[j]) r[i] = checked_add(r[i], checked_mul(m(i, j).to_int64(), v[j]));
    return r;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    HermiteResult h = hermite_normal_form(m);
    if (h.hnf != IntegerMatrix::identity(n)) throw std::invalid_argument("matrix is not unimodular");
    return h.transform;
}

}  // namespace symp
