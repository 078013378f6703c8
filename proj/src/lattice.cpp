#include "symp/lattice.hpp"

#include <algorithm>
#include <cstdint>

namespace symp {

IntegerLattice IntegerLattice::from_generators(std::size_t n, const std::vector<IntVector>& gens) {
    EchelonBuilder eb(n);
    for (const auto& g : gens) {
        if (g.size() != n) throw std::invalid_argument("generator length mismatch");
        if (!is_zero(g)) eb.insert(g);
    }
    eb.finalize();
    IntegerLattice l(n);
    l.basis_ = eb.rows();
    l.pivots_ = eb.pivots();
    return l;
}

IntegerLattice IntegerLattice::from_matrix(const IntegerMatrix& m) {
    return from_generators(m.cols(), m.row_list());
}

IntegerLattice IntegerLattice::full(std::size_t n) {
    return from_matrix(IntegerMatrix::identity(n));
}

std::optional<IntVector> IntegerLattice::coefficients(const IntVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    IntVector r = v;
    IntVector c(basis_.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (r[i].is_zero()) continue;
        while (k < pivots_.size() && pivots_[k] < i) ++k;
        if (k == pivots_.size() || pivots_[k] != i) return std::nullopt;
        const IntVector& b = basis_[k];
        if (!divides(b[i], r[i])) return std::nullopt;
        Integer q = r[i] / b[i];
        for (std::size_t j = i; j < n_; ++j)
            if (!b[j].is_zero()) r[j].submul(q, b[j]);
        c[k] = q;
    }
    return c;
}

bool IntegerLattice::contains(const IntVector& v) const { return coefficients(v).has_value(); }

bool IntegerLattice::contains(const IntegerLattice& sub) const {
    if (sub.n_ != n_) throw std::invalid_argument("ambient dimension mismatch");
    return std::all_of(sub.basis_.begin(), sub.basis_.end(), [&](const IntVector& v) { return contains(v); });
}

LatticeIndex index(const IntegerLattice& l1, const IntegerLattice& l2) {
    if (l1.ambient_dim() != l2.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<IntVector> coords;
    for (const auto& v : l2.basis()) {
        auto c = l1.coefficients(v);
        if (!c) throw NotSublattice();
        coords.push_back(std::move(*c));
    }
    if (l1.rank() != l2.rank()) return LatticeIndex::infinity();
    IntegerLattice c = IntegerLattice::from_generators(l1.rank(), coords);
    Integer det(1);
    for (std::size_t k = 0; k < c.rank(); ++k) det *= c.basis()[k][c.pivots()[k]];
    return {false, det};
}

IntegerLattice sum(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<IntVector> gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return IntegerLattice::from_generators(a.ambient_dim(), gens);
}

IntegerLattice intersection(const IntegerLattice& a, const IntegerLattice& b) {
    const std::size_t n = a.ambient_dim();
    if (n != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (a.rank() == 0 || b.rank() == 0) return IntegerLattice(n);
    IntegerMatrix stacked(a.rank() + b.rank(), n);
    for (std::size_t i = 0; i < a.rank(); ++i) stacked.set_row(i, a.basis()[i]);
    for (std::size_t i = 0; i < b.rank(); ++i) stacked.set_row(a.rank() + i, b.basis()[i]);
    std::vector<IntVector> gens;
    for (const auto& k : left_kernel(stacked)) {
        IntVector v(n);
        for (std::size_t i = 0; i < a.rank(); ++i) axpy(v, k[i], a.basis()[i]);
        gens.push_back(std::move(v));
    }
    return IntegerLattice::from_generators(n, gens);
}

IntegerLattice image(const IntegerLattice& l, const IntegerMatrix& m) {
    std::vector<IntVector> gens;
    for (const auto& v : l.basis()) gens.push_back(v * m);
    return IntegerLattice::from_generators(m.cols(), gens);
}

namespace {

struct SparseRow {
    std::vector<std::uint32_t> idx;
    std::vector<Integer> val;

    const Integer* find(std::uint32_t c) const {
        auto it = std::lower_bound(idx.begin(), idx.end(), c);
        if (it == idx.end() || *it != c) return nullptr;
        return &val[it - idx.begin()];
    }
    bool empty() const { return idx.empty(); }
};

// r -= f * p
void eliminate(SparseRow& r, const Integer& f, const SparseRow& p) {
    SparseRow out;
    out.idx.reserve(r.idx.size() + p.idx.size());
    out.val.reserve(r.idx.size() + p.idx.size());
    std::size_t i = 0, j = 0;
    while (i < r.idx.size() || j < p.idx.size()) {
        if (j == p.idx.size() || (i < r.idx.size() && r.idx[i] < p.idx[j])) {
            out.idx.push_back(r.idx[i]);
            out.val.push_back(std::move(r.val[i]));
            ++i;
        } else if (i == r.idx.size() || p.idx[j] < r.idx[i]) {
            out.idx.push_back(p.idx[j]);
            out.val.push_back(-(f * p.val[j]));
            ++j;
        } else {
            Integer x = std::move(r.val[i]);
            x.submul(f, p.val[j]);
            if (!x.is_zero()) {
                out.idx.push_back(r.idx[i]);
                out.val.push_back(std::move(x));
            }
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

}  // namespace

std::vector<IntVector> kernel_basis(const IntegerMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseRow r;
        for (std::size_t j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) {
                r.idx.push_back(static_cast<std::uint32_t>(j));
                r.val.push_back(m(i, j));
            }
        if (!r.empty()) rows.push_back(std::move(r));
    }

    // Gauss-Jordan restricted to unit pivots keeps the reduced system integral.
    std::vector<SparseRow> piv_rows;
    std::vector<std::uint32_t> piv_cols;
    std::vector<char> is_pivot(n, 0);
    for (;;) {
        long best = -1;
        std::size_t best_nnz = SIZE_MAX;
        std::uint32_t best_col = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].idx.size() >= best_nnz) continue;
            for (std::size_t k = 0; k < rows[r].idx.size(); ++k)
                if (rows[r].val[k].is_unit()) {
                    best = static_cast<long>(r);
                    best_nnz = rows[r].idx.size();
                    best_col = rows[r].idx[k];
                    break;
                }
        }
        if (best < 0) break;
        SparseRow p = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        if (p.find(best_col)->sign() < 0)
            for (auto& x : p.val) x = -x;
        for (auto& r : rows)
            if (const Integer* f = r.find(best_col)) eliminate(r, Integer(*f), p);
        for (auto& r : piv_rows)
            if (const Integer* f = r.find(best_col)) eliminate(r, Integer(*f), p);
        rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
                   rows.end());
        is_pivot[best_col] = 1;
        piv_rows.push_back(std::move(p));
        piv_cols.push_back(best_col);
    }

    std::vector<std::uint32_t> free_cols;
    std::vector<long> free_pos(n, -1);
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) {
            free_pos[j] = static_cast<long>(free_cols.size());
            free_cols.push_back(static_cast<std::uint32_t>(j));
        }
    const std::size_t nf = free_cols.size();

    // Kernel of the residual system in free coordinates.
    std::vector<IntVector> free_kernel;
    if (rows.empty()) {
        for (std::size_t k = 0; k < nf; ++k) {
            IntVector w(nf);
            w[k] = 1;
            free_kernel.push_back(std::move(w));
        }
    } else {
        IntegerMatrix rt(nf, rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t k = 0; k < rows[r].idx.size(); ++k)
                rt(free_pos[rows[r].idx[k]], r) = rows[r].val[k];
        free_kernel = left_kernel(rt);
    }

    std::vector<IntVector> out;
    out.reserve(free_kernel.size());
    for (const auto& w : free_kernel) {
        IntVector v(n);
        for (std::size_t k = 0; k < nf; ++k) v[free_cols[k]] = w[k];
        for (std::size_t r = 0; r < piv_rows.size(); ++r) {
            Integer s;
            const SparseRow& pr = piv_rows[r];
            for (std::size_t k = 0; k < pr.idx.size(); ++k)
                if (pr.idx[k] != piv_cols[r] && !w[free_pos[pr.idx[k]]].is_zero())
                    s.addmul(pr.val[k], w[free_pos[pr.idx[k]]]);
            v[piv_cols[r]] = -s;
        }
        out.push_back(std::move(v));
    }
    return out;
}

IntegerLattice kernel_lattice(const IntegerMatrix& m) {
    return IntegerLattice::from_generators(m.cols(), kernel_basis(m));
}

}  // namespace symp
