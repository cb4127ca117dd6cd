#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace conway {

using Int = mpz_class;
using Rat = mpq_class;

/// Closed rational interval [lo, hi]. Used to enclose real values
/// (roots, limits, logarithms) that leave the rationals.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() = default;
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool strictly_positive() const { return lo > 0; }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }

    Interval operator*(const Interval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rat mn = a, mx = a;
        for (const Rat* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return {mn, mx};
    }

    /// Reciprocal; requires the interval to exclude zero.
    Interval inv() const {
        if (lo <= 0 && hi >= 0) throw std::domain_error("Interval::inv: contains zero");
        return {Rat(1) / hi, Rat(1) / lo};
    }

    Interval pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Interval acc{Rat(1), Rat(1)};
        Interval base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Hull of two intervals.
    static Interval hull(const Interval& a, const Interval& b) {
        return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
    }
};

inline Int floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline Rat pow_rat(const Rat& q, long e) {
    if (e < 0) return Rat(1) / pow_rat(q, -e);
    Rat acc(1), base = q;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace conway
