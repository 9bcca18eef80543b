#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hstar/errors.hpp"

namespace hstar {

/// Exponent vector of a power product. Length is fixed by the ambient ring.
/// Exponents are machine-width; products check for overflow.
class Monomial {
    std::vector<std::uint32_t> e_;
    std::uint64_t deg_ = 0;

    static constexpr std::uint32_t kMaxExp = 1u << 30;

  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

    static Monomial of(std::vector<std::uint32_t> exps) {
        Monomial m;
        m.e_ = std::move(exps);
        m.deg_ = 0;
        for (auto v : m.e_) m.deg_ += v;
        return m;
    }

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t exp = 1) {
        Monomial m(nvars);
        m.e_[i] = exp;
        m.deg_ = exp;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    Monomial times(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] += o.e_[i];
            if (r.e_[i] > kMaxExp) throw ExponentOverflow();
        }
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    Monomial power(std::uint32_t k) const {
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::uint64_t v = static_cast<std::uint64_t>(e_[i]) * k;
            if (v > kMaxExp) throw ExponentOverflow();
            r.e_[i] = static_cast<std::uint32_t>(v);
        }
        r.deg_ = deg_ * k;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// this / d; requires d.divides(*this).
    Monomial quotient_by(const Monomial& d) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= d.e_[i];
        r.deg_ = deg_ - d.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    /// Graded reverse lexicographic comparison; the canonical storage order
    /// for terms (also the default Groebner order).
    std::strong_ordering cmp_deglex(const Monomial& o) const {
        if (deg_ != o.deg_) return deg_ <=> o.deg_;
        for (std::size_t i = e_.size(); i-- > 0;)
            if (e_[i] != o.e_[i]) return o.e_[i] <=> e_[i];
        return std::strong_ordering::equal;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
};

}  // namespace hstar
