#pragma once

// Exact rational arithmetic. Kept exact at every scale the toolkit touches:
// density values m(H) for graphs up to ~10^4 vertices and the rounding walk
// in discrepancy.hpp, whose guarantees do not survive floating point.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unigraph {

using BigInt = mpz_class;

// Canonical fraction: gcd(num, den) = 1, den > 0. All constructors normalize.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long long num, long long den)
        : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    const BigInt num() const { return q_.get_num(); }
    const BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    double to_double() const { return q_.get_d(); }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

inline BigInt bigint_pow(BigInt base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Largest r with r^k <= n (integer k-th root).
inline long long iroot(long long n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("iroot: bad arguments");
    BigInt r, nn(static_cast<long>(n));
    mpz_root(r.get_mpz_t(), nn.get_mpz_t(), k);
    return r.get_si();
}

// Smallest m with m^k >= n, i.e. ceil(n^{1/k}) computed exactly.
inline long long iroot_ceil(long long n, int k) {
    if (n <= 1) return n < 1 ? 0 : 1;
    long long r = iroot(n, k);
    BigInt p = bigint_pow(BigInt(static_cast<long>(r)), static_cast<unsigned long>(k));
    return p >= BigInt(static_cast<long>(n)) ? r : r + 1;
}

}  // namespace unigraph
