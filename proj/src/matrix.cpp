#include "symp/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace symp {

IntVector make_vector(std::initializer_list<long long> xs) {
    IntVector v;
    v.reserve(xs.size());
    for (long long x : xs) v.emplace_back(x);
    return v;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
}

IntVector add(const IntVector& a, const IntVector& b) {
    IntVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    IntVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

IntVector scale(const Integer& c, const IntVector& a) {
    IntVector r = a;
    for (auto& x : r) x *= c;
    return r;
}

void axpy(IntVector& a, const Integer& c, const IntVector& b) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i].addmul(c, b[i]);
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s.addmul(a[i], b[i]);
    return s;
}

std::vector<std::string> to_strings(const IntVector& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long long x : r) a_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

IntVector IntegerMatrix::row(std::size_t i) const {
    return IntVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<IntVector> IntegerMatrix::row_list() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

void IntegerMatrix::set_row(std::size_t i, const IntVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

void IntegerMatrix::append_row(const IntVector& v) {
    if (rows_ == 0 && a_.empty()) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Integer& x) { return x.is_zero(); });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j).addmul(x, b(k, j));
        }
    return c;
}

IntVector operator*(const IntVector& v, const IntegerMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("shape mismatch in vector product");
    IntVector r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r[j].addmul(v[i], m(i, j));
    }
    return r;
}

IntVector matvec(const IntegerMatrix& m, const IntVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("shape mismatch in matrix application");
    IntVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!v[j].is_zero() && !m(i, j).is_zero()) r[i].addmul(m(i, j), v[j]);
    return r;
}

namespace {

std::size_t leading(const IntVector& v, std::size_t cols, std::size_t from = 0) {
    for (std::size_t i = from; i < cols; ++i)
        if (!v[i].is_zero()) return i;
    return cols;
}

// v -= q*b over positions [from, end)
void sub_mul_from(IntVector& v, const Integer& q, const IntVector& b, std::size_t from) {
    for (std::size_t i = from; i < v.size(); ++i)
        if (!b[i].is_zero()) v[i].submul(q, b[i]);
}

}  // namespace

void EchelonBuilder::insert(IntVector v) {
    const std::size_t width = cols_ + aug_;
    if (v.size() != width) throw std::invalid_argument("EchelonBuilder: vector length mismatch");
    std::size_t p = leading(v, cols_);
    while (p < cols_) {
        long bi = pivot_row_[p];
        if (bi < 0) {
            if (v[p].sign() < 0)
                for (auto& x : v) x = -x;
            pivot_row_[p] = static_cast<long>(rows_.size());
            pivot_of_.push_back(p);
            rows_.push_back(std::move(v));
            return;
        }
        IntVector& b = rows_[bi];
        if (divides(b[p], v[p])) {
            Integer q = v[p] / b[p];
            sub_mul_from(v, q, b, p);
        } else {
            Integer g, s, t;
            gcdext(b[p], v[p], g, s, t);
            Integer bp = b[p] / g, vp = v[p] / g;
            IntVector nb(width);
            IntVector nv(width);
            for (std::size_t i = p; i < width; ++i) {
                if (b[i].is_zero() && v[i].is_zero()) continue;
                nb[i] = s * b[i];
                nb[i].addmul(t, v[i]);
                nv[i] = bp * v[i];
                nv[i].submul(vp, b[i]);
            }
            b = std::move(nb);
            v = std::move(nv);
        }
        p = leading(v, cols_, p);
    }
    if (aug_ > 0 && !is_zero(v)) kernel_.push_back(std::move(v));
}

void EchelonBuilder::reduce_above(std::size_t i, std::size_t j) {
    std::size_t p = pivot_of_[j];
    const Integer& piv = rows_[j][p];
    if (rows_[i][p].is_zero()) return;
    Integer q = floor_div(rows_[i][p], piv);
    if (!q.is_zero()) sub_mul_from(rows_[i], q, rows_[j], p);
}

void EchelonBuilder::finalize() {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pivot_of_[x] < pivot_of_[y]; });
    std::vector<IntVector> sorted;
    std::vector<std::size_t> piv;
    sorted.reserve(rows_.size());
    for (std::size_t k : order) {
        sorted.push_back(std::move(rows_[k]));
        piv.push_back(pivot_of_[k]);
    }
    rows_ = std::move(sorted);
    pivot_of_ = std::move(piv);
    std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
    for (std::size_t k = 0; k < rows_.size(); ++k) pivot_row_[pivot_of_[k]] = static_cast<long>(k);
    for (std::size_t j = 0; j < rows_.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) reduce_above(i, j);
}

std::vector<std::size_t> EchelonBuilder::pivots() const { return pivot_of_; }

HermiteResult hermite_normal_form(const IntegerMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    EchelonBuilder eb(c, r);
    for (std::size_t i = 0; i < r; ++i) {
        IntVector v(c + r);
        for (std::size_t j = 0; j < c; ++j) v[j] = m(i, j);
        v[c + i] = 1;
        eb.insert(std::move(v));
    }
    eb.finalize();
    HermiteResult res;
    res.rank = eb.rank();
    res.pivots = eb.pivots();
    res.hnf = IntegerMatrix(r, c);
    res.transform = IntegerMatrix(r, r);
    std::size_t k = 0;
    for (const auto& row : eb.rows()) {
        for (std::size_t j = 0; j < c; ++j) res.hnf(k, j) = row[j];
        for (std::size_t j = 0; j < r; ++j) res.transform(k, j) = row[c + j];
        ++k;
    }
    // Kernel rows complete the transform; their reduced basis keeps entries small.
    EchelonBuilder kb(r);
    for (const auto& row : eb.kernel_rows()) kb.insert(IntVector(row.begin() + c, row.end()));
    kb.finalize();
    for (const auto& row : kb.rows()) {
        for (std::size_t j = 0; j < r; ++j) res.transform(k, j) = row[j];
        ++k;
    }
    return res;
}

IntegerMatrix hnf_rows(const IntegerMatrix& m) {
    EchelonBuilder eb(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
    eb.finalize();
    return IntegerMatrix::from_rows(eb.rows(), m.cols());
}

std::vector<IntVector> left_kernel(const IntegerMatrix& m) {
    HermiteResult h = hermite_normal_form(m);
    std::vector<IntVector> out;
    for (std::size_t i = h.rank; i < m.rows(); ++i) out.push_back(h.transform.row(i));
    return out;
}

std::size_t rational_rank(const IntegerMatrix& m) {
    EchelonBuilder eb(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
    return eb.rank();
}

Integer determinant(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Integer(1);
    IntegerMatrix a = m;
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t s = k + 1;
            while (s < n && a(s, k).is_zero()) ++s;
            if (s == n) return Integer(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer x = a(i, j) * a(k, k);
                x.submul(a(i, k), a(k, j));
                a(i, j) = x / prev;
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace symp
