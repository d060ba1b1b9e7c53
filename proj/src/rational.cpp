#include "oforge/rational.hpp"

#include <ostream>

namespace oforge {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& base, int e) {
    if (e < 0) {
        if (base.is_zero()) throw std::invalid_argument("pow: 0 to negative power");
        return pow(Rational(1) / base, -e);
    }
    Rational acc(1), b = base;
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace oforge
