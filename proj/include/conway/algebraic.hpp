#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conway/rational.hpp"
#include "conway/sequences.hpp"

namespace conway {

namespace poly {

// Dense rational polynomials, coeffs[i] is the coefficient of x^i.
using Poly = std::vector<Rat>;

inline void normalize(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool is_zero(const Poly& p) { return p.empty(); }

inline Rat eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Interval eval(const Poly& p, const Interval& x) {
    Interval acc{Rat(0), Rat(0)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

/// x^k - x^{k-1} - ... - x - 1, the k-nacci characteristic polynomial.
inline Poly characteristic(int k) {
    Poly p(static_cast<size_t>(k) + 1, Rat(-1));
    p[static_cast<size_t>(k)] = 1;
    return p;
}

inline std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    if (is_zero(den)) throw std::domain_error("poly::divmod: division by zero polynomial");
    Poly quot;
    normalize(num);
    int dd = degree(den);
    if (degree(num) >= dd) quot.assign(static_cast<size_t>(degree(num) - dd) + 1, Rat(0));
    while (degree(num) >= dd) {
        int shift = degree(num) - dd;
        Rat f = num.back() / den.back();
        quot[static_cast<size_t>(shift)] = f;
        for (int i = 0; i <= dd; ++i) num[static_cast<size_t>(i + shift)] -= f * den[static_cast<size_t>(i)];
        normalize(num);
    }
    return {std::move(quot), std::move(num)};
}

inline Poly gcd(Poly a, Poly b) {
    normalize(a);
    normalize(b);
    while (!is_zero(b)) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!is_zero(a)) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

/// Extended gcd restricted to what inversion needs: returns (g, s) with
/// s*a == g (mod m), g monic.
inline std::pair<Poly, Poly> half_ext_gcd(Poly a, Poly m) {
    normalize(a);
    normalize(m);
    Poly r0 = std::move(m), r1 = std::move(a);
    Poly s0, s1{Rat(1)};
    while (!is_zero(r1)) {
        auto [q, r] = divmod(r0, r1);
        // s2 = s0 - q*s1
        Poly qs(q.size() + s1.size(), Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        Poly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        normalize(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!is_zero(r0)) {
        Rat lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : s0) c /= lead;
    }
    return {std::move(r0), std::move(s0)};
}

}  // namespace poly

/// An isolating interval for the k-nacci constant phi_k inside (1, 2).
class RootBracket {
public:
    explicit RootBracket(int k) : k_(k), chi_(poly::characteristic(k)), lo_(1), hi_(2) {
        if (k < 2) throw std::invalid_argument("RootBracket: k must be >= 2");
        // chi(1) = 1-k < 0, chi(2) = 1 > 0: sign change guaranteed.
        refine();  // move endpoints strictly inside (1,2)
    }

    int order() const { return k_; }
    const Rat& low() const { return lo_; }
    const Rat& high() const { return hi_; }
    Interval interval() const { return {lo_, hi_}; }
    Rat width() const { return hi_ - lo_; }

    void refine() {
        Rat mid = (lo_ + hi_) / 2;
        Rat v = poly::eval(chi_, mid);
        if (v == 0) throw std::logic_error("RootBracket: rational midpoint is a root");
        if (v < 0)
            lo_ = mid;
        else
            hi_ = mid;
    }

    void refine_to(const Rat& width) {
        while (hi_ - lo_ > width) refine();
    }

private:
    int k_;
    poly::Poly chi_;
    Rat lo_, hi_;
};

namespace detail {
/// Shared, progressively refined bracket per k.
inline RootBracket& bracket_for(int k) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<RootBracket>> brackets;
    std::lock_guard<std::mutex> lock(mu);
    auto it = brackets.find(k);
    if (it == brackets.end()) it = brackets.emplace(k, std::make_unique<RootBracket>(k)).first;
    return *it->second;
}
inline std::mutex& bracket_mutex() {
    static std::mutex mu;
    return mu;
}
/// Snapshot of the shared bracket refined to at most `width`.
inline Interval phi_interval(int k, const Rat& width) {
    std::lock_guard<std::mutex> lock(bracket_mutex());
    RootBracket& b = bracket_for(k);
    b.refine_to(width);
    return b.interval();
}
}  // namespace detail

/// Bracket of width <= `width` around phi_k.
inline RootBracket knacci_constant(int k, const Rat& width) {
    RootBracket b(k);
    b.refine_to(width);
    return b;
}

/// Exact element of Q(phi_k): c_0 + c_1 phi_k + ... + c_{k-1} phi_k^{k-1},
/// always reduced modulo the characteristic polynomial.
class FieldElement {
public:
    FieldElement(int k, std::vector<Rat> coeffs) : k_(k), c_(std::move(coeffs)) {
        if (k < 2) throw std::invalid_argument("FieldElement: k must be >= 2");
        if (static_cast<int>(c_.size()) != k) throw std::invalid_argument("FieldElement: wrong coefficient count");
    }

    static FieldElement zero(int k) { return FieldElement(k, std::vector<Rat>(static_cast<size_t>(k), Rat(0))); }
    static FieldElement one(int k) {
        auto e = zero(k);
        e.c_[0] = 1;
        return e;
    }
    static FieldElement from_rat(int k, const Rat& q) {
        auto e = zero(k);
        e.c_[0] = q;
        return e;
    }
    static FieldElement phi(int k) {
        auto e = zero(k);
        e.c_[1] = 1;
        return e;
    }

    int order() const { return k_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const FieldElement& o) const { return k_ == o.k_ && c_ == o.c_; }

    FieldElement operator-() const {
        auto r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    FieldElement operator+(const FieldElement& o) const {
        check_same(o);
        auto r = *this;
        for (int i = 0; i < k_; ++i) r.c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
        return r;
    }

    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement& o) const {
        check_same(o);
        // Convolve, then fold x^{k+j} down via x^k = x^{k-1} + ... + x + 1.
        std::vector<Rat> prod(static_cast<size_t>(2 * k_ - 1), Rat(0));
        for (int i = 0; i < k_; ++i) {
            if (c_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < k_; ++j)
                prod[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
        for (int e = 2 * k_ - 2; e >= k_; --e) {
            Rat top = prod[static_cast<size_t>(e)];
            if (top == 0) continue;
            prod[static_cast<size_t>(e)] = 0;
            for (int j = 1; j <= k_; ++j) prod[static_cast<size_t>(e - j)] += top;
        }
        prod.resize(static_cast<size_t>(k_));
        return FieldElement(k_, std::move(prod));
    }

    FieldElement operator*(const Rat& q) const {
        auto r = *this;
        for (auto& x : r.c_) x *= q;
        return r;
    }

    bool is_zero_vector() const {
        for (const auto& x : c_) {
            if (x != 0) return false;
        }
        return true;
    }

    /// Multiplicative inverse in Q[x]/(chi_k). Every nonzero reduced element
    /// encountered here is invertible; a nontrivial common factor with chi_k
    /// would indicate an internal inconsistency and raises.
    FieldElement inverse() const {
        if (is_zero_vector()) throw std::domain_error("FieldElement::inverse: zero element");
        poly::Poly rep(c_.begin(), c_.end());
        auto [g, s] = poly::half_ext_gcd(rep, poly::characteristic(k_));
        if (poly::degree(g) != 0)
            throw std::logic_error("FieldElement::inverse: representative shares a factor with the modulus");
        // s * rep == 1 (mod chi); reduce s to length k.
        poly::Poly red = poly::divmod(s, poly::characteristic(k_)).second;
        std::vector<Rat> out(static_cast<size_t>(k_), Rat(0));
        for (size_t i = 0; i < red.size(); ++i) out[i] = red[i];
        return FieldElement(k_, std::move(out));
    }

    FieldElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement acc = one(k_);
        FieldElement base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Enclosing interval for the real value at phi_k, refined to width <= `width`.
    Interval enclosure(const Rat& width) const {
        poly::Poly rep(c_.begin(), c_.end());
        poly::normalize(rep);
        if (poly::is_zero(rep)) return {Rat(0), Rat(0)};
        Rat phi_w(1, 64);
        for (;;) {
            Interval iv = poly::eval(rep, detail::phi_interval(k_, phi_w));
            if (iv.width() <= width) return iv;
            phi_w = phi_w * phi_w;  // quadratic refinement: huge coefficients settle fast
        }
    }

private:
    void check_same(const FieldElement& o) const {
        if (k_ != o.k_) throw std::invalid_argument("FieldElement: mixed field orders");
    }

    int k_;
    std::vector<Rat> c_;
};

inline FieldElement power(const FieldElement& a, long e) { return a.pow(e); }

/// Certified sign of the real value of `a` at phi_k: exact zero detection via
/// polynomial gcd with the characteristic polynomial, nonzero sign via
/// adaptive interval refinement.
inline int sign(const FieldElement& a) {
    poly::Poly rep(a.coeffs().begin(), a.coeffs().end());
    poly::normalize(rep);
    if (poly::is_zero(rep)) return 0;

    poly::Poly g = poly::gcd(rep, poly::characteristic(a.order()));
    if (poly::degree(g) >= 1) {
        // All roots of g are roots of chi_k; the only one in (1,2) is phi_k,
        // so a sign change of g over the bracket certifies a(phi_k) == 0.
        Interval b = detail::phi_interval(a.order(), Rat(1, 1024));
        Rat vl = poly::eval(g, b.lo), vh = poly::eval(g, b.hi);
        if ((vl < 0 && vh > 0) || (vl > 0 && vh < 0)) return 0;
    }

    Rat w(1, 64);
    for (;;) {
        Interval iv = poly::eval(rep, detail::phi_interval(a.order(), w));
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
        w = w * w;
    }
}

struct FloorLog {
    long exponent;
    bool exact;
};

/// The unique t with phi_k^t <= x < phi_k^{t+1}; exact is set when x == phi_k^t.
inline FloorLog floor_log_phi(const FieldElement& x) {
    if (sign(x) != 1) throw std::domain_error("floor_log_phi: argument must be positive");
    int k = x.order();
    // Relative-accuracy enclosure: the magnitude can be far outside double
    // range, so the seed works from mantissa-and-exponent logs.
    Rat ew(1, 16);
    Interval xi = x.enclosure(ew);
    while (!(xi.lo > 0) || xi.hi > 2 * xi.lo) {
        ew = ew * ew;
        xi = x.enclosure(ew);
    }
    auto log2_rat = [](const Rat& q) {
        long en = 0, ed = 0;
        double dn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
        double dd = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
        return std::log2(dn) - std::log2(dd) + static_cast<double>(en - ed);
    };
    Interval pi = detail::phi_interval(k, Rat(1, 1 << 20));
    long t = static_cast<long>(std::floor(log2_rat(xi.lo) / std::log2(mpq_get_d(pi.lo.get_mpq_t()))));

    FieldElement phi = FieldElement::phi(k);
    auto at_least_t = [&](long e) { return sign(x * phi.pow(-e) - FieldElement::one(k)); };
    while (at_least_t(t) < 0) --t;
    while (at_least_t(t + 1) >= 0) ++t;
    return {t, at_least_t(t) == 0};
}

struct FloorInt {
    Int value;
    bool exact;
};

/// Integer floor of the real value of x at phi_k.
inline FloorInt floor_field(const FieldElement& x) {
    int k = x.order();
    Interval iv = x.enclosure(Rat(1, 8));
    Int r = floor_rat(iv.lo);
    auto cmp = [&](const Int& t) { return sign(x - FieldElement::from_rat(k, Rat(t))); };
    while (cmp(r) < 0) --r;
    while (cmp(r + 1) >= 0) ++r;
    return {r, cmp(r) == 0};
}

/// Decimal expansion of an enclosure, certified to `digits` fractional digits.
/// The interval must already be tighter than one unit in the last digit.
inline std::string decimal_string(const Interval& iv, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int lo = floor_rat(Rat(scale) * iv.lo);
    Int hi = floor_rat(Rat(scale) * iv.hi);
    if (lo != hi) throw std::domain_error("decimal_string: interval too wide for requested digits");
    bool neg = lo < 0;
    Int mag = neg ? Int(-lo) : lo;
    Int ip = mag / scale, fp = mag % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

/// Decimal rendering of a field element certified to `digits` digits.
inline std::string decimal_string(const FieldElement& x, int digits) {
    Rat w = Rat(1, 2) / pow_rat(Rat(10), digits + 1);
    for (;;) {
        Interval iv = x.enclosure(w);
        Int scale_lo = floor_rat(pow_rat(Rat(10), digits) * iv.lo);
        Int scale_hi = floor_rat(pow_rat(Rat(10), digits) * iv.hi);
        if (scale_lo == scale_hi) return decimal_string(iv, digits);
        w /= 1024;  // value sits near a digit boundary; tighten until it separates
    }
}

/// Certified bracket on lim F_k(n)/phi_k^n, built from the ratios at
/// n_terms and n_terms + 1 with interval arithmetic on phi_k.
inline Interval asymptotic_c(int k, long n_terms) {
    if (n_terms < 32) n_terms = 32;
    Rat w = Rat(1, 1) / pow_rat(Rat(2), 64);
    Interval phi = detail::phi_interval(k, w);
    auto ratio = [&](long n) {
        Interval num{Rat(knacci(k, n)), Rat(knacci(k, n))};
        return num * phi.pow(n).inv();
    };
    return Interval::hull(ratio(n_terms), ratio(n_terms + 1));
}

}  // namespace conway
