#include "symp/free_lie.hpp"

#include <algorithm>
#include <map>

namespace symp {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool is_lyndon(const std::vector<int>& w) {
    const std::size_t n = w.size();
    for (std::size_t s = 1; s < n; ++s)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + s, w.end())) return false;
    return true;
}

// Duval's generation of Lyndon words of length <= k, filtered to length k.
std::vector<std::vector<int>> lyndon_words(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == k) out.push_back(w);
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n - 1) w.pop_back();
    }
    return out;
}

Tensor bracketing(int n, const std::vector<int>& w) {
    if (w.size() == 1) return Tensor::letter(n, w[0]);
    for (std::size_t s = 1; s < w.size(); ++s) {
        std::vector<int> v(w.begin() + s, w.end());
        if (is_lyndon(v)) {
            std::vector<int> u(w.begin(), w.begin() + s);
            return commutator(bracketing(n, u), bracketing(n, v));
        }
    }
    throw std::logic_error("word has no standard factorization");
}

}  // namespace

Tensor::Tensor(int letters, int degree) : n_(letters), k_(degree) {
    if (degree < 1 || degree > 6) throw UnsupportedDegree();
    c_.assign(ipow(letters, degree), 0);
}

Tensor Tensor::letter(int letters, int x) {
    Tensor t(letters, 1);
    t.c_[x] = 1;
    return t;
}

Tensor Tensor::from_vector(const HVector& v) {
    Tensor t(static_cast<int>(v.size()), 1);
    std::copy(v.begin(), v.end(), t.c_.begin());
    return t;
}

bool Tensor::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<int> Tensor::word(std::size_t w) const {
    std::vector<int> out(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        out[i] = static_cast<int>(w % n_);
        w /= n_;
    }
    return out;
}

std::size_t Tensor::pack(const std::vector<int>& word) const {
    std::size_t w = 0;
    for (int x : word) w = w * n_ + x;
    return w;
}

Tensor& Tensor::operator+=(const Tensor& o) { return add_scaled(1, o); }
Tensor& Tensor::operator-=(const Tensor& o) { return add_scaled(-1, o); }

Tensor& Tensor::add_scaled(std::int64_t c, const Tensor& o) {
    if (o.n_ != n_ || o.k_ != k_) throw std::invalid_argument("tensor shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (o.c_[i]) c_[i] = checked_add(c_[i], checked_mul(c, o.c_[i]));
    return *this;
}

Tensor tensor_product(const Tensor& x, const Tensor& y) {
    if (x.letters() != y.letters()) throw std::invalid_argument("tensor alphabet mismatch");
    Tensor r(x.letters(), x.degree() + y.degree());
    const std::size_t ys = y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < ys; ++j)
            if (y[j]) r[i * ys + j] = checked_add(r[i * ys + j], checked_mul(x[i], y[j]));
    }
    return r;
}

Tensor commutator(const Tensor& x, const Tensor& y) { return tensor_product(x, y) - tensor_product(y, x); }

LyndonBasis::LyndonBasis(int letters, int degree) : n_(letters), k_(degree) {
    if (degree < 1 || degree > kMaxDegree) throw UnsupportedDegree();
    lookup_.assign(ipow(letters, degree), -1);
    Tensor shape(letters, degree);
    for (auto& w : lyndon_words(letters, degree)) {
        LyndonWord lw;
        lw.letters = w;
        lw.packed = shape.pack(w);
        for (std::size_t s = 1; s < w.size(); ++s)
            if (is_lyndon(std::vector<int>(w.begin() + s, w.end()))) {
                lw.split = s;
                break;
            }
        Tensor t = bracketing(letters, w);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i]) lw.expansion.emplace_back(i, t[i]);
        lookup_[lw.packed] = static_cast<long>(words_.size());
        words_.push_back(std::move(lw));
    }
}

std::size_t witt_dimension(int letters, int degree) {
    // (1/k) sum_{d | k} mu(d) n^{k/d}
    auto mobius = [](int d) {
        int r = 1;
        for (int p = 2; p * p <= d; ++p)
            if (d % p == 0) {
                d /= p;
                if (d % p == 0) return 0;
                r = -r;
            }
        if (d > 1) r = -r;
        return r;
    };
    long long s = 0;
    for (int d = 1; d <= degree; ++d)
        if (degree % d == 0) s += mobius(d) * static_cast<long long>(ipow(letters, degree / d));
    return static_cast<std::size_t>(s / degree);
}

bool LieElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t x) { return x == 0; });
}

FreeLie::FreeLie(int letters) : n_(letters) {
    for (int k = 1; k <= kMaxDegree; ++k) bases_.push_back(std::make_unique<LyndonBasis>(letters, k));
}

const LyndonBasis& FreeLie::basis(int degree) const {
    if (degree < 1 || degree > kMaxDegree) throw UnsupportedDegree();
    return *bases_[degree - 1];
}

LieElement FreeLie::zero(int degree) const { return {degree, std::vector<std::int64_t>(dim(degree), 0)}; }

LieElement FreeLie::generator(const HVector& v) const {
    if (static_cast<int>(v.size()) != n_) throw ContextError("vector has the wrong number of letters");
    return {1, std::vector<std::int64_t>(v.begin(), v.end())};
}

LieElement FreeLie::basis_element(int degree, std::size_t i) const {
    LieElement x = zero(degree);
    x.coeffs.at(i) = 1;
    return x;
}

Tensor FreeLie::lie_to_tensor(const LieElement& x) const {
    const LyndonBasis& b = basis(x.degree);
    Tensor t(n_, x.degree);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!x.coeffs[i]) continue;
        for (auto [w, c] : b[i].expansion) t[w] = checked_add(t[w], checked_mul(x.coeffs[i], c));
    }
    return t;
}

LieElement FreeLie::tensor_to_lie(const Tensor& t) const {
    if (t.letters() != n_) throw ContextError("tensor has the wrong number of letters");
    const LyndonBasis& b = basis(t.degree());
    Tensor r = t;
    LieElement x = zero(t.degree());
    // The smallest word of a Lie element is Lyndon, and the bracketing of a
    // Lyndon word w is w plus larger words.
    for (std::size_t w = 0; w < r.size(); ++w) {
        std::int64_t c = r[w];
        if (!c) continue;
        long i = b.find(w);
        if (i < 0) throw std::invalid_argument("tensor is not a Lie element");
        x.coeffs[i] = c;
        for (auto [u, e] : b[i].expansion) r[u] = checked_add(r[u], -checked_mul(c, e));
    }
    return x;
}

LieElement FreeLie::bracket(const LieElement& x, const LieElement& y) const {
    if (x.degree + y.degree > kMaxDegree) throw UnsupportedDegree();
    return tensor_to_lie(commutator(lie_to_tensor(x), lie_to_tensor(y)));
}

LieElement FreeLie::add(const LieElement& x, const LieElement& y, std::int64_t c) const {
    if (x.degree != y.degree) throw std::invalid_argument("degree mismatch");
    LieElement r = x;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = checked_add(r.coeffs[i], checked_mul(c, y.coeffs[i]));
    return r;
}

bool DerivationElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t x) { return x == 0; });
}

FreeLieContext::FreeLieContext(int genus) : sp_(genus), lie_(2 * genus), qlie_(genus) {}

DerivationElement FreeLieContext::zero_derivation(int lie_degree) const {
    return {lie_degree, std::vector<std::int64_t>(sp_.dim() * lie_.dim(lie_degree), 0)};
}

DerivationElement FreeLieContext::derivation_term(const HVector& h, const Tensor& xi) const {
    sp_.check(h);
    LieElement x = lie_.tensor_to_lie(xi);
    DerivationElement d = zero_derivation(xi.degree());
    const std::size_t m = lie_.dim(xi.degree());
    for (int p = 0; p < sp_.dim(); ++p) {
        if (!h[p]) continue;
        for (std::size_t j = 0; j < m; ++j)
            if (x.coeffs[j]) d.coeffs[p * m + j] = checked_mul(h[p], x.coeffs[j]);
    }
    return d;
}

DerivationElement FreeLieContext::add(const DerivationElement& x, const DerivationElement& y, std::int64_t c) const {
    if (x.lie_degree != y.lie_degree) throw std::invalid_argument("degree mismatch");
    DerivationElement r = x;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        if (y.coeffs[i]) r.coeffs[i] = checked_add(r.coeffs[i], checked_mul(c, y.coeffs[i]));
    return r;
}

Tensor FreeLieContext::derivation_to_tensor(const DerivationElement& d) const {
    const std::size_t m = lie_.dim(d.lie_degree);
    Tensor out(sp_.dim(), d.lie_degree + 1);
    for (int p = 0; p < sp_.dim(); ++p) {
        LieElement x{d.lie_degree, std::vector<std::int64_t>(d.coeffs.begin() + p * m, d.coeffs.begin() + (p + 1) * m)};
        if (x.is_zero()) continue;
        out += tensor_product(Tensor::letter(sp_.dim(), p), lie_.lie_to_tensor(x));
    }
    return out;
}

IntegerMatrix FreeLieContext::bracket_matrix(int k) const {
    if (k < 1 || k > 2) throw UnsupportedDegree();
    const LyndonBasis& src = lie_.basis(k + 1);
    const std::size_t m = src.size();
    IntegerMatrix out(lie_.dim(k + 2), sp_.dim() * m);
    for (int p = 0; p < sp_.dim(); ++p)
        for (std::size_t j = 0; j < m; ++j) {
            LieElement y = lie_.bracket(lie_.generator(sp_.basis(p)), lie_.basis_element(k + 1, j));
            for (std::size_t r = 0; r < y.coeffs.size(); ++r)
                if (y.coeffs[r]) out(r, p * m + j) = y.coeffs[r];
        }
    return out;
}

namespace {

// Letter of H surviving in the quotient by l, as a quotient letter, or -1.
int survivor(int p, int g, Lagrangian l) {
    if (l == Lagrangian::A) return p >= g ? p - g : -1;
    return p < g ? p : -1;
}

}  // namespace

HVector FreeLieContext::project_vector(const HVector& v, Lagrangian l) const {
    sp_.check(v);
    const int g = genus();
    HVector r(g, 0);
    for (int p = 0; p < 2 * g; ++p)
        if (int q = survivor(p, g, l); q >= 0) r[q] = v[p];
    return r;
}

LieElement FreeLieContext::project_lie(const LieElement& x, Lagrangian l) const {
    const int g = genus();
    const LyndonBasis& b = lie_.basis(x.degree);
    const LyndonBasis& qb = qlie_.basis(x.degree);
    Tensor shape(g, x.degree);
    LieElement r = qlie_.zero(x.degree);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!x.coeffs[i]) continue;
        std::vector<int> w;
        bool alive = true;
        for (int p : b[i].letters) {
            int q = survivor(p, g, l);
            if (q < 0) {
                alive = false;
                break;
            }
            w.push_back(q);
        }
        if (!alive) continue;
        r.coeffs[qb.find(shape.pack(w))] = x.coeffs[i];
    }
    return r;
}

Tensor FreeLieContext::project_tensor(const Tensor& t, Lagrangian l) const {
    const int g = genus();
    Tensor r(g, t.degree());
    for (std::size_t w = 0; w < t.size(); ++w) {
        if (!t[w]) continue;
        std::vector<int> word = t.word(w);
        bool alive = true;
        for (int& p : word) {
            p = survivor(p, g, l);
            if (p < 0) {
                alive = false;
                break;
            }
        }
        if (alive) r[r.pack(word)] = checked_add(r[r.pack(word)], t[w]);
    }
    return r;
}

DerivationElement FreeLieContext::project_derivation(const DerivationElement& d, Lagrangian l) const {
    const int g = genus();
    const std::size_t m = lie_.dim(d.lie_degree), qm = qlie_.dim(d.lie_degree);
    DerivationElement r{d.lie_degree, std::vector<std::int64_t>(g * qm, 0)};
    for (int p = 0; p < 2 * g; ++p) {
        int q = survivor(p, g, l);
        if (q < 0) continue;
        LieElement x{d.lie_degree, std::vector<std::int64_t>(d.coeffs.begin() + p * m, d.coeffs.begin() + (p + 1) * m)};
        LieElement y = project_lie(x, l);
        std::copy(y.coeffs.begin(), y.coeffs.end(), r.coeffs.begin() + q * qm);
    }
    return r;
}

IntegerMatrix FreeLieContext::projection_matrix(int lie_degree, Lagrangian l) const {
    const std::size_t m = lie_.dim(lie_degree);
    const std::size_t n = sp_.dim() * m;
    IntegerMatrix out(n, genus() * qlie_.dim(lie_degree));
    DerivationElement e = zero_derivation(lie_degree);
    for (std::size_t i = 0; i < n; ++i) {
        e.coeffs[i] = 1;
        DerivationElement y = project_derivation(e, l);
        e.coeffs[i] = 0;
        for (std::size_t j = 0; j < y.coeffs.size(); ++j)
            if (y.coeffs[j]) out(i, j) = y.coeffs[j];
    }
    return out;
}

IntVector to_int_vector(const std::vector<std::int64_t>& v) {
    IntVector r;
    r.reserve(v.size());
    for (auto x : v) r.emplace_back(static_cast<long long>(x));
    return r;
}

}  // namespace symp
