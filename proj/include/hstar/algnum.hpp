#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hstar/interval.hpp"
#include "hstar/rational.hpp"
#include "hstar/univariate.hpp"

namespace hstar {

/// One root of a squarefree rational polynomial, held as the defining
/// polynomial plus a certified isolating box. The defining polynomial starts
/// squarefree and is replaced by one of its factors whenever a zero test
/// discovers a splitting, so it converges toward the minimal polynomial of
/// the root. The box only ever shrinks. Both refinements are observationally
/// pure: every exact answer derived before and after agrees.
class NumberField {
    UPoly def_;
    UPoly deriv_;
    CBox box_;
    bool real_;
    std::optional<Rat> exact_;
    int stall_ = 0;

  public:
    NumberField(UPoly def, CBox box, bool is_real)
        : def_(std::move(def)), deriv_(def_.derivative()), box_(std::move(box)), real_(is_real) {}

    const UPoly& defining() const { return def_; }
    const CBox& box() const { return box_; }
    bool is_real() const { return real_; }
    const std::optional<Rat>& exact_value() const { return exact_; }

    /// Replaces the defining polynomial by a factor still vanishing at the root.
    void split_to(const UPoly& factor) {
        if (factor.degree() < 1 || factor.degree() >= def_.degree()) return;
        def_ = factor.monic();
        deriv_ = def_.derivative();
        if (def_.degree() == 1) exact_ = -def_.coeff(0);
    }

    void refine_once() {
        if (exact_) return;
        if (real_) {
            // Bisection on the real segment of the box.
            Rat lo = box_.re.lo, hi = box_.re.hi;
            int slo = sign_of(def_(lo));
            if (slo == 0) {
                exact_ = lo;
                box_ = CBox::point(lo, Rat(0));
                return;
            }
            Rat mid = (lo + hi) / 2;
            int sm = sign_of(def_(mid));
            if (sm == 0) {
                exact_ = mid;
                box_ = CBox::point(mid, Rat(0));
                return;
            }
            if (sm == slo)
                box_.re.lo = mid;
            else
                box_.re.hi = mid;
            box_.re = box_.re.round_out(kRoundBits);
            return;
        }
        Rat before = box_.max_width();
        box_ = krawczyk_contract(def_, deriv_, box_, kRoundBits);
        if (box_.max_width() * 2 > before) {
            if (++stall_ > 8) throw IsolationFailure("complex box refinement stalled");
        } else {
            stall_ = 0;
        }
    }

    void refine_below(const Rat& width) {
        int guard = 0;
        while (!exact_ && box_.max_width() > width) {
            refine_once();
            if (++guard > 100000) throw IsolationFailure("refinement did not converge");
        }
    }

  private:
    static constexpr unsigned kRoundBits = 4096;
};

using FieldPtr = std::shared_ptr<NumberField>;

namespace detail {

inline std::vector<std::complex<double>> durand_kerner(const UPoly& p, int iters = 400) {
    int d = p.degree();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(d) + 1);
    Rat lead = p.leading();
    for (int i = 0; i <= d; ++i)
        c[static_cast<std::size_t>(i)] = rat_to_double(p.coeff(static_cast<std::size_t>(i)) / lead);
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = d; i >= 0; --i) acc = acc * z + c[static_cast<std::size_t>(i)];
        return acc;
    };
    double radius = 1.0 + rat_to_double(root_bound(p));
    std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> cur(1.0, 0.0);
    for (int i = 0; i < d; ++i) {
        cur *= seed;
        z[static_cast<std::size_t>(i)] = cur * (radius / std::abs(cur)) * (0.3 + 0.1 * i / d);
    }
    for (int it = 0; it < iters; ++it) {
        double move = 0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < d; ++j)
                if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            if (denom == std::complex<double>(0, 0)) denom = 1e-12;
            std::complex<double> delta = eval(z[static_cast<std::size_t>(i)]) / denom;
            z[static_cast<std::size_t>(i)] -= delta;
            move += std::abs(delta);
        }
        if (move < 1e-14) break;
    }
    return z;
}

inline Rat dyadic_of(double x, unsigned bits = 64) {
    // Exact binary expansion of the double, then rounded to `bits`.
    if (x == 0.0) return Rat(0);
    bool neg = x < 0;
    if (neg) x = -x;
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, m in [0.5, 1)
    Int mant = 0;
    for (unsigned i = 0; i < 53; ++i) {
        m *= 2;
        mant <<= 1;
        if (m >= 1) {
            mant += 1;
            m -= 1;
        }
    }
    Rat r = Rat(mant) * rat_pow(Rat(2), 53) / rat_pow(Rat(2), 106);  // mant / 2^53
    // scale by 2^exp
    if (exp >= 0)
        r *= rat_pow(Rat(2), static_cast<unsigned long>(exp));
    else
        r /= rat_pow(Rat(2), static_cast<unsigned long>(-exp));
    if (neg) r = -r;
    return dyadic_floor(r, bits);
}

}  // namespace detail

/// Certified isolation of every complex root of a squarefree polynomial.
/// Real roots are isolated by Sturm bisection; non-real roots by a numeric
/// approximation certified with the Krawczyk operator in exact rational
/// interval arithmetic. The boxes are pairwise disjoint and their count
/// equals the degree, so each contains exactly one root.
inline std::vector<FieldPtr> isolate_roots(const UPoly& squarefree) {
    std::vector<FieldPtr> out;
    UPoly p = squarefree.monic();
    int d = p.degree();
    if (d <= 0) return out;

    auto reals = isolate_real_roots(p);
    int n_real = static_cast<int>(reals.size());
    for (auto& iv : reals) {
        if (iv.exact()) {
            auto f = std::make_shared<NumberField>(p, CBox::point(iv.lo, Rat(0)), true);
            out.push_back(f);
        } else {
            auto refined = refine_interval(p, iv, Rat(1, 64));
            CBox box(QInterval{refined.lo, refined.hi}, QInterval::point(Rat(0)));
            out.push_back(std::make_shared<NumberField>(p, box, true));
        }
    }

    int n_complex_pairs = (d - n_real) / 2;
    if ((d - n_real) % 2 != 0)
        throw IsolationFailure("real root count parity mismatch");
    if (n_complex_pairs > 0) {
        UPoly deriv = p.derivative();
        auto approx = detail::durand_kerner(p);
        std::vector<std::complex<double>> upper;
        for (auto z : approx)
            if (z.imag() > 1e-9) upper.push_back(z);
        std::sort(upper.begin(), upper.end(), [](auto a, auto b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        if (static_cast<int>(upper.size()) != n_complex_pairs)
            throw IsolationFailure("numeric root count mismatch; precision escalation needed");
        for (auto z : upper) {
            Rat cre = detail::dyadic_of(z.real());
            Rat cim = detail::dyadic_of(z.imag());
            bool done = false;
            for (double w : {1e-6, 1e-7, 1e-5, 1e-8, 1e-4, 1e-3}) {
                Rat hw = detail::dyadic_of(w);
                CBox box(QInterval{cre - hw, cre + hw}, QInterval{cim - hw, cim + hw});
                if (box.im.lo <= 0) continue;
                auto kr = krawczyk_step(p, deriv, box);
                if (kr.certified) {
                    CBox refined = kr.refined.intersect(box).round_out(256);
                    out.push_back(std::make_shared<NumberField>(p, refined, false));
                    // Mirror box for the conjugate root.
                    CBox conj(refined.re, QInterval{-refined.im.hi, -refined.im.lo});
                    out.push_back(std::make_shared<NumberField>(p, conj, false));
                    done = true;
                    break;
                }
            }
            if (!done) throw IsolationFailure("Krawczyk certification failed");
        }
    }

    // Enforce pairwise disjointness so that "exactly one root per box" holds
    // globally by counting.
    for (int guard = 0; guard < 64; ++guard) {
        bool ok = true;
        for (std::size_t i = 0; i < out.size() && ok; ++i)
            for (std::size_t j = i + 1; j < out.size() && ok; ++j)
                if (!out[i]->box().disjoint(out[j]->box())) ok = false;
        if (ok) break;
        for (auto& f : out) f->refine_once();
    }
    return out;
}

/// An exact algebraic number: either a plain rational (null field) or a
/// residue polynomial evaluated at a shared primitive element.
class AlgNum {
    FieldPtr F_;
    UPoly res_;

    void reduce() {
        if (F_ && !res_.is_zero_poly() && res_.degree() >= F_->defining().degree())
            res_ = res_ % F_->defining();
    }

    static void promote(const AlgNum& a, const AlgNum& b, FieldPtr& F, UPoly& ra, UPoly& rb) {
        if (a.F_ && b.F_) {
            if (a.F_ != b.F_) throw FieldMismatch();
            F = a.F_;
        } else {
            F = a.F_ ? a.F_ : b.F_;
        }
        ra = a.res_;
        rb = b.res_;
    }

  public:
    AlgNum() = default;
    AlgNum(int v) : res_(UPoly::constant(Rat(v))) {}
    AlgNum(long v) : res_(UPoly::constant(Rat(v))) {}
    AlgNum(const Rat& v) : res_(UPoly::constant(v)) {}
    AlgNum(FieldPtr F, UPoly residue) : F_(std::move(F)), res_(std::move(residue)) {
        if (F_ && F_->exact_value()) {
            res_ = UPoly::constant(res_(*F_->exact_value()));
            F_ = nullptr;
        }
        reduce();
    }

    static AlgNum primitive(FieldPtr F) { return AlgNum(std::move(F), UPoly::x()); }

    const FieldPtr& field() const { return F_; }
    const UPoly& residue() const { return res_; }

    bool rational_repr() const { return !F_; }
    /// Requires rational_repr().
    Rat rational_value() const { return res_.is_zero_poly() ? Rat(0) : res_.coeff(0); }

    friend bool is_zero(const AlgNum& x) {
        if (!x.F_) return x.res_.is_zero_poly();
        // Mutable view for lazy refinement.
        auto& self = const_cast<AlgNum&>(x);
        self.reduce();
        if (self.res_.is_zero_poly()) return true;
        if (self.F_->exact_value()) {
            Rat v = self.res_(*self.F_->exact_value());
            self.F_ = nullptr;
            self.res_ = UPoly::constant(v);
            return is_zero(v);
        }
        UPoly g = upoly_gcd(self.F_->defining(), self.res_);
        if (g.degree() == 0) return false;
        if (g.degree() == self.F_->defining().degree()) return true;
        UPoly q = self.F_->defining() / g;
        // The root lies in exactly one of g, q; refine until the box
        // excludes zero for the other factor.
        for (int guard = 0; guard < 100000; ++guard) {
            CBox vg = eval_box(g, self.F_->box());
            if (!vg.contains_zero()) {
                self.F_->split_to(q);
                return false;
            }
            CBox vq = eval_box(q, self.F_->box());
            if (!vq.contains_zero()) {
                self.F_->split_to(g);
                return true;
            }
            self.F_->refine_once();
        }
        throw IsolationFailure("zero-test dichotomy did not resolve");
    }

    AlgNum operator-() const {
        AlgNum r = *this;
        r.res_ = -r.res_;
        return r;
    }

    AlgNum operator+(const AlgNum& o) const {
        FieldPtr F;
        UPoly a, b;
        promote(*this, o, F, a, b);
        AlgNum r(std::move(F), a + b);
        return r;
    }

    AlgNum operator-(const AlgNum& o) const { return *this + (-o); }

    AlgNum operator*(const AlgNum& o) const {
        FieldPtr F;
        UPoly a, b;
        promote(*this, o, F, a, b);
        AlgNum r(std::move(F), a * b);
        return r;
    }

    /// Multiplicative inverse; splits the field lazily if the extended gcd
    /// exposes a factor. The value must be nonzero.
    AlgNum inverse() const {
        if (is_zero(*this)) throw Error("division by zero algebraic number");
        if (!F_) return AlgNum(Rat(1) / rational_value());
        AlgNum self = *this;
        self.reduce();
        for (int guard = 0; guard < 64; ++guard) {
            auto [g, u, v] = upoly_ext_gcd(self.F_->defining(), self.res_);
            if (g.degree() == 0) {
                // v * res == 1 mod def
                return AlgNum(self.F_, v);
            }
            // res is nonzero at the root, so the root lives in def/g.
            self.F_->split_to(self.F_->defining() / g);
            self.reduce();
            if (!self.F_->exact_value()) continue;
            return AlgNum(self.F_, self.res_).inverse();
        }
        throw IsolationFailure("inverse computation failed to stabilize");
    }

    AlgNum operator/(const AlgNum& o) const { return *this * o.inverse(); }

    bool operator==(const AlgNum& o) const { return is_zero(*this - o); }

    /// True when the number simplifies to a rational; normalizes on success.
    bool try_rationalize() {
        if (!F_) return true;
        reduce();
        if (F_->exact_value()) {
            Rat v = res_(*F_->exact_value());
            F_ = nullptr;
            res_ = UPoly::constant(v);
            return true;
        }
        if (res_.is_zero_poly()) {
            F_ = nullptr;
            return true;
        }
        if (res_.degree() == 0) {
            F_ = nullptr;
            return true;
        }
        if (!F_->is_real()) return false;
        // Guess the simplest rational in a refined value interval, then verify.
        for (int round = 0; round < 3; ++round) {
            F_->refine_below(rat_pow(Rat(1, 2), 24 + 24 * static_cast<unsigned long>(round)));
            if (F_->exact_value()) return try_rationalize();
            CBox v = eval_box(res_, F_->box());
            if (!v.is_real_line() && v.im.contains_zero() == false) return false;
            Rat cand = simplest_rational(v.re.lo, v.re.hi);
            AlgNum diff = *this - AlgNum(cand);
            if (is_zero(diff)) {
                F_ = nullptr;
                res_ = UPoly::constant(cand);
                return true;
            }
        }
        return false;
    }

    /// Enclosing box of the value, refined until its width is below `width`.
    CBox enclosure(const Rat& width) const {
        if (!F_) return CBox::point(rational_value(), Rat(0));
        auto& self = const_cast<AlgNum&>(*this);
        for (int guard = 0; guard < 100000; ++guard) {
            if (self.F_->exact_value())
                return CBox::point(self.res_(*self.F_->exact_value()), Rat(0));
            CBox v = eval_box(self.res_, self.F_->box());
            if (v.max_width() <= width) return v;
            self.F_->refine_once();
        }
        throw IsolationFailure("enclosure refinement did not converge");
    }

    std::string str() const {
        if (!F_) return rat_to_string(rational_value());
        return "alg(" + res_.str() + " @ " + F_->defining().str() + ")";
    }
};

}  // namespace hstar
