#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace symp {

// Exact integer: int64 while it fits, GMP otherwise.
class Integer {
public:
    Integer() = default;
    Integer(int v) : small_(v) {}
    Integer(long v) : small_(v) {}
    Integer(long long v) : small_(v) {}
    explicit Integer(const mpz_class& v) { assign(v); }
    explicit Integer(const std::string& decimal) { assign(mpz_class(decimal)); }

    Integer(const Integer& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;

    bool is_small() const { return !big_; }
    int64_t small() const { return small_; }
    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
    bool fits_int64() const { return !big_; }
    int64_t to_int64() const;
    std::string str() const;

    int sign() const {
        if (big_) return sgn(*big_);
        return (small_ > 0) - (small_ < 0);
    }
    bool is_zero() const { return !big_ && small_ == 0; }
    explicit operator bool() const { return !is_zero(); }
    bool is_unit() const { return !big_ && (small_ == 1 || small_ == -1); }
    bool is_odd() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);
    // Floor division and the matching non-negative remainder for positive divisors.
    Integer& operator/=(const Integer& o);
    Integer& operator%=(const Integer& o);

    // this += a*b
    void addmul(const Integer& a, const Integer& b);
    void submul(const Integer& a, const Integer& b);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

    friend int cmp(const Integer& a, const Integer& b);
    friend bool operator==(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        return cmp(a, b) == 0;
    }
    friend auto operator<=>(const Integer& a, const Integer& b) { return cmp(a, b) <=> 0; }

private:
    void assign(const mpz_class& v);
    void normalize();

    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
// g = gcd(a,b) >= 0 with s*a + t*b = g.
void gcdext(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t);
// Quotient rounded toward -infinity.
Integer floor_div(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned e);
bool divides(const Integer& d, const Integer& a);

std::ostream& operator<<(std::ostream& os, const Integer& a);

}  // namespace symp
