#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hstar/monomial.hpp"
#include "hstar/rational.hpp"
#include "hstar/ring.hpp"

namespace hstar {

/// Sparse multivariate polynomial over a coefficient field K (rationals by
/// default, or algebraic numbers in extension mode). Terms are stored in
/// descending graded-lexicographic order with no zero coefficients.
template <class K>
class Polynomial {
  public:
    using Term = std::pair<Monomial, K>;

    struct DeglexGreater {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return a.cmp_deglex(b) == std::strong_ordering::greater;
        }
    };
    using TermMap = std::map<Monomial, K, DeglexGreater>;

  private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void collect(TermMap& acc) const {
        for (const auto& [m, c] : terms_) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else {
                it->second = it->second + c;
                if (is_zero(it->second)) acc.erase(it);
            }
        }
    }

    static Polynomial from_map(RingPtr r, TermMap&& acc) {
        Polynomial p(std::move(r));
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) p.terms_.emplace_back(m, std::move(c));
        return p;
    }

  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr r) : ring_(std::move(r)) {}

    static Polynomial zero(RingPtr r) { return Polynomial(std::move(r)); }

    static Polynomial constant(RingPtr r, K c) {
        Polynomial p(r);
        if (!is_zero(c)) p.terms_.emplace_back(Monomial(r->nvars()), std::move(c));
        return p;
    }

    static Polynomial variable(RingPtr r, std::size_t i, K c = K(1)) {
        Polynomial p(r);
        if (!is_zero(c)) p.terms_.emplace_back(Monomial::variable(r->nvars(), i), std::move(c));
        return p;
    }

    static Polynomial term(RingPtr r, Monomial m, K c) {
        Polynomial p(r);
        if (!is_zero(c)) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    static Polynomial from_terms(RingPtr r, std::vector<Term> ts) {
        TermMap acc;
        for (auto& [m, c] : ts) {
            if (is_zero(c)) continue;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else {
                it->second = it->second + c;
                if (is_zero(it->second)) acc.erase(it);
            }
        }
        return from_map(std::move(r), std::move(acc));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero_poly() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().first.is_one(); }

    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const {
        return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.front().first.degree());
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        auto d = terms_.front().first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    bool uses_variable(std::size_t i) const {
        for (const auto& [m, c] : terms_)
            if (m[i] > 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial p(ring_);
        p.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, -c);
        return p;
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        TermMap acc;
        collect(acc);
        o.collect(acc);
        return from_map(ring_, std::move(acc));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        TermMap acc;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                K c = ca * cb;
                if (is_zero(c)) continue;
                Monomial m = ma.times(mb);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else {
                    it->second = it->second + c;
                    if (is_zero(it->second)) acc.erase(it);
                }
            }
        return from_map(ring_, std::move(acc));
    }

    Polynomial times_scalar(const K& c) const {
        Polynomial p(ring_);
        if (is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& [m, a] : terms_) {
            K v = a * c;
            if (!is_zero(v)) p.terms_.emplace_back(m, std::move(v));
        }
        return p;
    }

    Polynomial times_term(const Monomial& m, const K& c) const {
        Polynomial p(ring_);
        if (is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& [mm, a] : terms_) {
            K v = a * c;
            if (!is_zero(v)) p.terms_.emplace_back(mm.times(m), std::move(v));
        }
        return p;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial acc = constant(ring_, K(1));
        Polynomial b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return acc;
    }

    Polynomial derivative(std::size_t var) const {
        std::vector<Term> ts;
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m[var];
            if (e == 0) continue;
            auto exps = m.exponents();
            exps[var] = e - 1;
            ts.emplace_back(Monomial::of(std::move(exps)), c * K(static_cast<long>(e)));
        }
        return from_terms(ring_, std::move(ts));
    }

    /// Coefficient of an exact monomial (zero if absent).
    K coefficient(const Monomial& m) const {
        for (const auto& [mm, c] : terms_)
            if (mm == m) return c;
        return K(0);
    }

    template <class S>
    S evaluate(std::span<const S> point) const {
        S acc(0);
        for (const auto& [m, c] : terms_) {
            S t(c);
            for (std::size_t i = 0; i < m.nvars(); ++i)
                for (std::uint32_t k = 0; k < m[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    template <class S>
    S evaluate(const std::vector<S>& point) const {
        return evaluate(std::span<const S>(point.data(), point.size()));
    }

    /// Image under the ring map sending variable i to images[i] (a polynomial
    /// in the target ring). Coefficients are carried over unchanged.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
        Polynomial acc = Polynomial::zero(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(target, c);
            for (std::size_t i = 0; i < m.nvars(); ++i)
                if (m[i] > 0) t = t * images[i].pow(m[i]);
            acc = acc + t;
        }
        return acc;
    }

    /// Rescales variable i by factors[i]: x_i -> factors[i] * x_i.
    Polynomial scale_variables(const std::vector<K>& factors) const {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            K v = c;
            for (std::size_t i = 0; i < m.nvars(); ++i)
                for (std::uint32_t k = 0; k < m[i]; ++k) v = v * factors[i];
            ts.emplace_back(m, std::move(v));
        }
        return from_terms(ring_, std::move(ts));
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].first == o.terms_[i].first) ||
                !(terms_[i].second == o.terms_[i].second))
                return false;
        return true;
    }
};

using QPoly = Polynomial<Rat>;

/// Content of a rational polynomial: positive rational c with p = c * (primitive
/// integer polynomial). Zero polynomial has content 0.
inline Rat content(const QPoly& p) {
    if (p.is_zero_poly()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
    }
    return Rat(num_gcd, den_lcm);
}

/// p scaled so coefficients are coprime integers with positive leading sign.
inline QPoly primitive_part(const QPoly& p) {
    if (p.is_zero_poly()) return p;
    Rat c = content(p);
    if (sign_of(p.terms().front().second) < 0) c = -c;
    return p.times_scalar(Rat(1) / c);
}

/// p scaled so the leading coefficient (deglex order) is 1.
template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
    if (p.is_zero_poly()) return p;
    return p.times_scalar(K(1) / p.terms().front().second);
}

}  // namespace hstar
