#pragma once

#include <algorithm>
#include <string>

#include "hstar/rational.hpp"
#include "hstar/univariate.hpp"

namespace hstar {

/// Closed rational interval with exact endpoints.
struct QInterval {
    Rat lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
    static QInterval point(const Rat& a) { return {a, a}; }

    bool contains_zero() const { return sign_of(lo) <= 0 && sign_of(hi) >= 0; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    Rat mag() const { return std::max(rat_abs(lo), rat_abs(hi)); }

    QInterval operator-() const { return {-hi, -lo}; }
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    QInterval operator*(const QInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }

    /// Reciprocal; requires the interval to exclude zero.
    QInterval inverse() const { return {Rat(1) / hi, Rat(1) / lo}; }

    bool subset_of(const QInterval& o) const { return o.lo <= lo && hi <= o.hi; }
    bool strictly_inside(const QInterval& o) const { return o.lo < lo && hi < o.hi; }
    bool disjoint(const QInterval& o) const { return hi < o.lo || o.hi < lo; }

    QInterval intersect(const QInterval& o) const {
        return {std::max(lo, o.lo), std::min(hi, o.hi)};
    }

    /// Outward rounding to dyadic endpoints; keeps endpoint bitsizes bounded.
    QInterval round_out(unsigned bits) const {
        return {dyadic_floor(lo, bits), dyadic_ceil(hi, bits)};
    }
};

/// Rectangular complex interval.
struct CBox {
    QInterval re, im;

    CBox() = default;
    CBox(QInterval r, QInterval i) : re(std::move(r)), im(std::move(i)) {}
    static CBox point(const Rat& r, const Rat& i) {
        return {QInterval::point(r), QInterval::point(i)};
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool is_real_line() const { return is_zero(im.lo) && is_zero(im.hi); }

    CBox operator+(const CBox& o) const { return {re + o.re, im + o.im}; }
    CBox operator-(const CBox& o) const { return {re - o.re, im - o.im}; }
    CBox operator-() const { return {-re, -im}; }
    CBox operator*(const CBox& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    /// |z|^2 as an interval (nonnegative lower bound).
    QInterval abs2() const {
        QInterval s = re * re + im * im;
        if (s.lo < 0) s.lo = 0;
        return s;
    }

    /// 1/z; requires abs2() to exclude zero.
    CBox inverse() const {
        QInterval d = abs2();
        QInterval dinv = d.inverse();
        return {re * dinv, (-im) * dinv};
    }

    bool subset_of(const CBox& o) const { return re.subset_of(o.re) && im.subset_of(o.im); }
    bool strictly_inside(const CBox& o) const {
        return re.strictly_inside(o.re) && im.strictly_inside(o.im);
    }
    bool disjoint(const CBox& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
    CBox intersect(const CBox& o) const { return {re.intersect(o.re), im.intersect(o.im)}; }
    CBox round_out(unsigned bits) const { return {re.round_out(bits), im.round_out(bits)}; }

    Rat max_width() const { return std::max(re.width(), im.width()); }

    std::string str() const {
        return "[" + rat_to_string(re.lo) + "," + rat_to_string(re.hi) + "]x[" +
               rat_to_string(im.lo) + "," + rat_to_string(im.hi) + "]";
    }
};

/// Exact complex rational (a + bi) as a degenerate box helper.
struct CRat {
    Rat re, im;
    CBox box() const { return CBox::point(re, im); }
};

inline CBox eval_box(const UPoly& p, const CBox& z) {
    CBox acc = CBox::point(Rat(0), Rat(0));
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + QInterval::point(c[i]);
    }
    return acc;
}

/// Univariate Krawczyk operator for h at box X with center m and slope
/// approximation y ~= 1/h'(m):  K(X) = m - y*h(m) + (1 - y*h'(X)) * (X - m).
/// If K(X) lies strictly inside X, then X contains exactly one (simple) root.
struct KrawczykResult {
    bool certified = false;
    CBox refined;
};

inline KrawczykResult krawczyk_step(const UPoly& h, const UPoly& hd, const CBox& X) {
    Rat mre = X.re.mid(), mim = X.im.mid();
    CBox m = CBox::point(mre, mim);
    CBox dm = eval_box(hd, m);
    QInterval d2 = dm.abs2();
    if (d2.contains_zero()) return {false, X};
    CBox y = dm.inverse();
    CBox hm = eval_box(h, m);
    CBox one = CBox::point(Rat(1), Rat(0));
    CBox hdX = eval_box(hd, X);
    CBox K = m - y * hm + (one - y * hdX) * (X - m);
    KrawczykResult res;
    res.refined = K;
    res.certified = K.strictly_inside(X);
    return res;
}

/// One contraction step: X <- K(X) ∩ X (valid once a root is known inside X).
inline CBox krawczyk_contract(const UPoly& h, const UPoly& hd, const CBox& X, unsigned round_bits) {
    auto r = krawczyk_step(h, hd, X);
    CBox out = r.refined.intersect(X);
    if (out.re.lo > out.re.hi || out.im.lo > out.im.hi) return X;  // numeric mishap; keep X
    return out.round_out(round_bits);
}

}  // namespace hstar
