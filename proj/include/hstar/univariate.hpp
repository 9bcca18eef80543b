#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hstar/rational.hpp"

namespace hstar {

/// Dense univariate polynomial over the rationals; coeffs[i] is the
/// coefficient of t^i. Normalized: no trailing zero coefficients.
class UPoly {
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(Rat a) { return UPoly({std::move(a)}); }
    static UPoly x() { return UPoly({Rat(0), Rat(1)}); }
    /// t - a
    static UPoly linear_root(const Rat& a) { return UPoly({-a, Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero_poly() const { return c_.empty(); }
    /// Degree; -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& leading() const { return c_.back(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    bool is_constant() const { return c_.size() <= 1; }

    UPoly operator-() const {
        UPoly r(*this);
        for (auto& a : r.c_) a = -a;
        return r;
    }

    UPoly operator+(const UPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return UPoly(std::move(r));
    }

    UPoly operator-(const UPoly& o) const { return *this + (-o); }

    UPoly operator*(const UPoly& o) const {
        if (is_zero_poly() || o.is_zero_poly()) return UPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return UPoly(std::move(r));
    }

    UPoly times(const Rat& a) const {
        if (is_zero(a)) return UPoly();
        UPoly r(*this);
        for (auto& v : r.c_) v *= a;
        return r;
    }

    UPoly monic() const {
        if (is_zero_poly()) return *this;
        return times(Rat(1) / leading());
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return UPoly(std::move(r));
    }

    Rat operator()(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    template <class S>
    S eval(const S& x) const {
        S acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
        return acc;
    }

    /// Quotient and remainder of division by d (nonzero).
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        UPoly r = *this;
        std::vector<Rat> q(degree() >= d.degree() && d.degree() >= 0
                               ? static_cast<std::size_t>(degree() - d.degree()) + 1
                               : 0,
                           Rat(0));
        while (!r.is_zero_poly() && r.degree() >= d.degree()) {
            Rat f = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            q[static_cast<std::size_t>(shift)] = f;
            std::vector<Rat> sub(r.c_);
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                sub[i + static_cast<std::size_t>(shift)] -= f * d.c_[i];
            r = UPoly(std::move(sub));
        }
        return {UPoly(std::move(q)), r};
    }

    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    /// p(t) -> p(t + a)
    UPoly shift(const Rat& a) const {
        UPoly acc, pw = UPoly::constant(Rat(1));
        UPoly base({a, Rat(1)});
        acc = UPoly();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            acc = acc + pw.times(c_[i]);
            if (i + 1 < c_.size()) pw = pw * base;
        }
        return acc;
    }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "t") const {
        if (is_zero_poly()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (is_zero(c_[i])) continue;
            Rat a = c_[i];
            if (out.empty()) {
                if (sign_of(a) < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += sign_of(a) < 0 ? " - " : " + ";
                if (sign_of(a) < 0) a = -a;
            }
            if (i == 0) {
                out += rat_to_string(a);
            } else {
                if (a != 1) out += rat_to_string(a) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }
};

inline UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero_poly()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
        // keep coefficients small
        if (!b.is_zero_poly()) b = b.monic();
    }
    if (a.is_zero_poly()) return a;
    return a.monic();
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
inline std::tuple<UPoly, UPoly, UPoly> upoly_ext_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(Rat(1)), s1 = UPoly::zero();
    UPoly t0 = UPoly::zero(), t1 = UPoly::constant(Rat(1));
    while (!r1.is_zero_poly()) {
        auto [q, r2] = r0.divmod(r1);
        UPoly s2 = s0 - q * s1;
        UPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero_poly()) return {r0, s0, t0};
    Rat lc = r0.leading();
    return {r0.monic(), s0.times(Rat(1) / lc), t0.times(Rat(1) / lc)};
}

inline UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.is_zero_poly() ? p : UPoly::constant(Rat(1));
    UPoly g = upoly_gcd(p, p.derivative());
    return (p / g).monic();
}

/// Yun's squarefree decomposition: returns s with p ~ prod s[k]^{k+1}.
inline std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
    std::vector<UPoly> out;
    if (p.degree() <= 0) return out;
    UPoly a = p.monic();
    UPoly d = a.derivative();
    UPoly g = upoly_gcd(a, d);
    UPoly b = a / g, c = d / g;
    for (;;) {
        UPoly h = c - b.derivative();
        UPoly s = upoly_gcd(b, h);
        out.push_back(s);
        b = b / s;
        c = (h / s);
        if (b.degree() <= 0) break;
    }
    return out;
}

/// Sturm chain of p (assumed squarefree for isolation use; counting works for
/// any p on intervals whose endpoints are not roots).
inline std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    if (p.is_zero_poly()) return chain;
    chain.push_back(p);
    UPoly d = p.derivative();
    if (d.is_zero_poly()) return chain;
    chain.push_back(d);
    for (;;) {
        const UPoly& a = chain[chain.size() - 2];
        const UPoly& b = chain[chain.size() - 1];
        UPoly r = a % b;
        if (r.is_zero_poly()) break;
        UPoly next = -r;
        // Normalize by a positive scalar only; signs carry the information.
        next = next.times(Rat(1) / rat_abs(next.leading()));
        chain.push_back(std::move(next));
    }
    return chain;
}

inline int sturm_variations(const std::vector<UPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

/// Number of distinct real roots of the chain's polynomial in (a, b].
inline int sturm_count(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

/// Cauchy bound: all complex roots have absolute value < bound.
inline Rat root_bound(const UPoly& p) {
    Rat m(0);
    const Rat& lc = p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = rat_abs(p.coeff(static_cast<std::size_t>(i)) / lc);
        if (v > m) m = v;
    }
    return m + 1;
}

/// Isolating intervals for all real roots of a squarefree polynomial.
/// Each root is either exact (lo == hi) or in the open interval (lo, hi)
/// with p(lo) != 0 != p(hi).
struct RealRootInterval {
    Rat lo, hi;
    bool exact() const { return lo == hi; }
};

inline void isolate_bisect(const std::vector<UPoly>& chain, const UPoly& p, const Rat& lo,
                           const Rat& hi, int count, std::vector<RealRootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    // Pick a cut point that is not itself a root so both halves keep the
    // (open endpoints are non-roots) invariant.
    Rat mid = (lo + hi) / 2;
    Rat step = (hi - lo) / 4;
    while (is_zero(p(mid))) {
        mid += step;
        step /= 2;
    }
    int left = sturm_count(chain, lo, mid);
    isolate_bisect(chain, p, lo, mid, left, out);
    isolate_bisect(chain, p, mid, hi, count - left, out);
}

inline std::vector<RealRootInterval> isolate_real_roots(const UPoly& squarefree) {
    std::vector<RealRootInterval> out;
    if (squarefree.degree() <= 0) return out;
    auto chain = sturm_chain(squarefree);
    Rat b = root_bound(squarefree);
    Rat lo = -b, hi = b;
    // Cauchy bound is strict, so the endpoints are never roots.
    isolate_bisect(chain, squarefree, lo, hi, sturm_count(chain, lo, hi), out);
    std::sort(out.begin(), out.end(),
              [](const RealRootInterval& a, const RealRootInterval& b2) { return a.lo < b2.lo; });
    return out;
}

/// Refines an isolating interval (sign change or exact) by bisection until
/// hi - lo <= width. Assumes p squarefree and exactly one root inside.
inline RealRootInterval refine_interval(const UPoly& p, RealRootInterval iv, const Rat& width) {
    if (iv.exact()) return iv;
    int slo = sign_of(p(iv.lo));
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int sm = sign_of(p(mid));
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

/// The unique rational with smallest denominator (smallest numerator on ties)
/// in the closed interval [lo, hi].
inline Rat simplest_rational(const Rat& lo, const Rat& hi) {
    if (lo > hi) return simplest_rational(hi, lo);
    Int c = rat_ceil(lo), f = rat_floor(hi);
    if (c <= f) {
        // Pick the integer of smallest absolute value, preferring the positive.
        if (c > 0) return Rat(c);
        if (f < 0) return Rat(f);
        return Rat(0);
    }
    // Both strictly inside (fl, fl+1) for fl = floor(lo).
    Int fl = rat_floor(lo);
    Rat a = lo - Rat(fl), b = hi - Rat(fl);
    // 0 < a <= b < 1; recurse on reciprocals.
    Rat inner = simplest_rational(Rat(1) / b, Rat(1) / a);
    return Rat(fl) + Rat(1) / inner;
}

/// Finds the root in the isolating interval if it is rational with modest
/// continued-fraction complexity; otherwise returns nullopt.
inline std::optional<Rat> rational_root_in(const UPoly& p, RealRootInterval iv,
                                           int max_rounds = 64) {
    if (iv.exact()) return iv.lo;
    int slo = sign_of(p(iv.lo));
    for (int k = 0; k < max_rounds; ++k) {
        Rat cand = simplest_rational(iv.lo, iv.hi);
        Rat v = p(cand);
        if (is_zero(v)) return cand;
        if (sign_of(v) == slo)
            iv.lo = cand;
        else
            iv.hi = cand;
    }
    return std::nullopt;
}

/// Resultant of two univariate polynomials via the subresultant PRS
/// (fraction-free on scaled integer sequences is unnecessary at this scale;
/// a direct recursive formula over Q is exact).
inline Rat resultant(const UPoly& a, const UPoly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return Rat(0);
    if (a.degree() == 0) return rat_pow(a.leading(), static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return rat_pow(b.leading(), static_cast<unsigned long>(a.degree()));
    UPoly r = a % b;
    long da = a.degree(), db = b.degree();
    if (r.is_zero_poly()) return Rat(0);
    long dr = r.degree();
    Rat sign = (da % 2 == 1 && db % 2 == 1) ? Rat(-1) : Rat(1);
    return sign * rat_pow(b.leading(), static_cast<unsigned long>(da - dr)) * resultant(b, r);
}

}  // namespace hstar
