#include "symp/gf2.hpp"

#include <stdexcept>

namespace symp {

GF2Vector& GF2Vector::operator^=(const GF2Vector& o) {
    if (o.n_ != n_) throw std::invalid_argument("GF2Vector length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool GF2Vector::is_zero() const {
    for (auto x : w_)
        if (x) return false;
    return true;
}

std::size_t GF2Vector::popcount() const {
    std::size_t s = 0;
    for (auto x : w_) s += static_cast<std::size_t>(__builtin_popcountll(x));
    return s;
}

std::size_t GF2Vector::leading() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
    return n_;
}

void GF2Matrix::append_row(const GF2Vector& v) {
    if (rows_.empty() && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("GF2Matrix row length mismatch");
    rows_.push_back(v);
}

namespace {

// Echelon form of the rows, each row carrying the combination that produced it.
struct Echelon {
    std::vector<GF2Vector> rows, combo;
    std::vector<std::size_t> piv;
    std::vector<GF2Vector> kernel;
};

Echelon reduce(const GF2Matrix& m) {
    Echelon e;
    const std::size_t r = m.rows();
    for (std::size_t i = 0; i < r; ++i) {
        GF2Vector v = m.row(i);
        GF2Vector c(r);
        c.set(i);
        for (std::size_t k = 0; k < e.rows.size(); ++k)
            if (v.get(e.piv[k])) {
                v ^= e.rows[k];
                c ^= e.combo[k];
            }
        std::size_t p = v.leading();
        if (p == v.size()) {
            e.kernel.push_back(std::move(c));
            continue;
        }
        for (std::size_t k = 0; k < e.rows.size(); ++k)
            if (e.rows[k].get(p)) {
                e.rows[k] ^= v;
                e.combo[k] ^= c;
            }
        e.rows.push_back(std::move(v));
        e.combo.push_back(std::move(c));
        e.piv.push_back(p);
    }
    return e;
}

}  // namespace

std::size_t gf2_rank(const GF2Matrix& m) { return reduce(m).rows.size(); }

std::optional<GF2Vector> gf2_solve(const GF2Matrix& m, const GF2Vector& target) {
    if (target.size() != m.cols()) throw std::invalid_argument("gf2_solve: target length mismatch");
    Echelon e = reduce(m);
    GF2Vector t = target;
    GF2Vector x(m.rows());
    for (std::size_t k = 0; k < e.rows.size(); ++k)
        if (t.get(e.piv[k])) {
            t ^= e.rows[k];
            x ^= e.combo[k];
        }
    if (!t.is_zero()) return std::nullopt;
    return x;
}

std::vector<GF2Vector> gf2_left_kernel(const GF2Matrix& m) { return reduce(m).kernel; }

}  // namespace symp
