#ifndef OFORGE_RATIONAL_HPP
#define OFORGE_RATIONAL_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace oforge {

/// Exact rational number. Always stored reduced with positive denominator;
/// zero is canonically 0/1. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) { set_ll(n); }
    Rational(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        Rational n(num), d(den);
        v_ = n.v_ / d.v_;
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "p", "-p", or "p/q".
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    const mpq_class& raw() const { return v_; }

private:
    void set_ll(long long n) {
        if (n >= 0) {
            v_ = mpq_class(mpz_class(static_cast<unsigned long>(n)));
        } else {
            v_ = mpq_class(mpz_class(static_cast<unsigned long>(-(n + 1))) + 1);
            v_ = -v_;
        }
    }
    mpq_class v_;
};

Rational pow(const Rational& base, int e);
Rational abs(const Rational& r);

}  // namespace oforge

#endif
