#include "symp/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace symp {

void Integer::assign(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        small_ = mpz_get_si(v.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(v);
    }
}

void Integer::normalize() {
    if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
        small_ = mpz_get_si(big_->get_mpz_t());
        big_.reset();
    }
}

int64_t Integer::to_int64() const {
    if (big_) throw std::overflow_error("Integer does not fit in int64");
    return small_;
}

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

bool Integer::is_odd() const {
    if (big_) return mpz_odd_p(big_->get_mpz_t());
    return small_ & 1;
}

Integer Integer::operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(static_cast<long long>(-small_));
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
}

Integer& Integer::operator/=(const Integer& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    *this = floor_div(*this, o);
    return *this;
}

Integer& Integer::operator%=(const Integer& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Integer q = floor_div(*this, o);
    *this -= q * o;
    return *this;
}

void Integer::addmul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        int64_t p, r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
            !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
    }
    *this += a * b;
}

void Integer::submul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        int64_t p, r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
            !__builtin_sub_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
    }
    *this -= a * b;
}

int cmp(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
    int c = ::cmp(a.to_mpz(), b.to_mpz());
    return (c > 0) - (c < 0);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small() != INT64_MIN && b.small() != INT64_MIN) {
        int64_t x = a.small() < 0 ? -a.small() : a.small();
        int64_t y = b.small() < 0 ? -b.small() : b.small();
        while (y) {
            int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(static_cast<long long>(x));
    }
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

void gcdext(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
    if (a.is_small() && b.is_small() && a.small() != INT64_MIN && b.small() != INT64_MIN) {
        int64_t r0 = a.small(), r1 = b.small(), s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1) {
            int64_t q = r0 / r1;
            int64_t tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = s0 - q * s1;
            s0 = s1;
            s1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        if (r0 < 0) {
            r0 = -r0;
            s0 = -s0;
            t0 = -t0;
        }
        g = Integer(static_cast<long long>(r0));
        s = Integer(static_cast<long long>(s0));
        t = Integer(static_cast<long long>(t0));
        return;
    }
    mpz_class G, S, T;
    mpz_gcdext(G.get_mpz_t(), S.get_mpz_t(), T.get_mpz_t(), a.to_mpz().get_mpz_t(),
               b.to_mpz().get_mpz_t());
    g = Integer(G);
    s = Integer(S);
    t = Integer(T);
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small() && !(a.small() == INT64_MIN && b.small() == -1)) {
        int64_t q = a.small() / b.small();
        int64_t r = a.small() % b.small();
        if (r != 0 && ((r < 0) != (b.small() < 0))) --q;
        return Integer(static_cast<long long>(q));
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer pow(const Integer& base, unsigned e) {
    Integer r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % abs(d)).is_zero();
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

}  // namespace symp
