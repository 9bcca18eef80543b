#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "hstar/order.hpp"
#include "hstar/polynomial.hpp"

namespace hstar {

struct GbOptions {
    /// Reduction-step cap; exceeding it raises BudgetExceeded, never a wrong
    /// answer.
    std::uint64_t budget = 1'000'000;
};

namespace detail {

/// Polynomial as a term vector sorted descending in the active order.
template <class K>
struct OPoly {
    std::vector<std::pair<Monomial, K>> t;

    bool zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().first; }
    const K& lc() const { return t.front().second; }
};

template <class K>
OPoly<K> opoly_of(const Polynomial<K>& p, const MonomialOrder& ord) {
    OPoly<K> o;
    o.t.assign(p.terms().begin(), p.terms().end());
    std::sort(o.t.begin(), o.t.end(), [&](const auto& a, const auto& b) {
        return ord.greater(a.first, b.first);
    });
    return o;
}

template <class K>
Polynomial<K> poly_of(const OPoly<K>& o, const RingPtr& ring) {
    return Polynomial<K>::from_terms(ring, o.t);
}

/// f - coef * x^shift * g, all term lists sorted by ord.
template <class K>
OPoly<K> subtract_multiple(const OPoly<K>& f, const K& coef, const Monomial& shift,
                           const OPoly<K>& g, const MonomialOrder& ord) {
    OPoly<K> r;
    r.t.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < f.t.size() && j < g.t.size()) {
        Monomial gm = g.t[j].first.times(shift);
        auto c = ord.cmp(f.t[i].first, gm);
        if (c == std::strong_ordering::greater) {
            r.t.push_back(f.t[i]);
            ++i;
        } else if (c == std::strong_ordering::less) {
            K v = -(coef * g.t[j].second);
            if (!is_zero(v)) r.t.emplace_back(std::move(gm), std::move(v));
            ++j;
        } else {
            K v = f.t[i].second - coef * g.t[j].second;
            if (!is_zero(v)) r.t.emplace_back(f.t[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < f.t.size(); ++i) r.t.push_back(f.t[i]);
    for (; j < g.t.size(); ++j) {
        K v = -(coef * g.t[j].second);
        if (!is_zero(v)) r.t.emplace_back(g.t[j].first.times(shift), std::move(v));
    }
    return r;
}

template <class K>
struct GbEngine {
    MonomialOrder ord;
    GbOptions opt;
    std::uint64_t steps = 0;
    std::vector<OPoly<K>> basis;  // monic

    void charge(std::uint64_t n = 1) {
        steps += n;
        if (steps > opt.budget) throw BudgetExceeded(steps);
    }

    /// Full normal form against the current basis (first divisor wins).
    OPoly<K> reduce(OPoly<K> h) {
        OPoly<K> out;
        while (!h.zero()) {
            bool reduced = false;
            const Monomial& m = h.lm();
            for (const auto& g : basis) {
                if (!g.lm().divides(m)) continue;
                charge();
                K coef = h.lc() / g.lc();  // basis monic: lc == 1, kept general
                Monomial shift = m.quotient_by(g.lm());
                h = subtract_multiple(h, coef, shift, g, ord);
                reduced = true;
                break;
            }
            if (!reduced) {
                out.t.push_back(h.t.front());
                h.t.erase(h.t.begin());
            }
        }
        return out;
    }

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };

    struct PairLess {
        const MonomialOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            auto c = ord->cmp(a.lcm, b.lcm);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    std::multiset<Pair, PairLess> pairs{PairLess{&ord}};

    /// Gebauer-Moeller update: prune by the M, F and B criteria as generator
    /// `h` (already monic, index = basis.size()) joins the basis.
    void update_pairs(const OPoly<K>& h) {
        std::size_t t = basis.size();
        const Monomial& lmh = h.lm();

        struct Cand {
            Monomial lcm;
            std::size_t i;
            bool coprime;
        };
        std::vector<Cand> cand;
        cand.reserve(t);
        for (std::size_t i = 0; i < t; ++i)
            cand.push_back({Monomial::lcm(basis[i].lm(), lmh), i, basis[i].lm().coprime_with(lmh)});

        std::vector<Cand> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool drop = false;
            if (!cand[a].coprime) {
                for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
                    if (b == a) continue;
                    if (!(cand[b].lcm == cand[a].lcm) && cand[b].lcm.divides(cand[a].lcm)) {
                        drop = true;
                    } else if (cand[b].lcm == cand[a].lcm && b < a && !cand[b].coprime) {
                        drop = true;  // keep one representative per lcm
                    }
                }
            }
            if (!drop) kept.push_back(cand[a]);
        }

        // B criterion on old pairs.
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Pair& p = *it;
            if (lmh.divides(p.lcm) &&
                !(Monomial::lcm(basis[p.i].lm(), lmh) == p.lcm) &&
                !(Monomial::lcm(basis[p.j].lm(), lmh) == p.lcm)) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }

        // F criterion: coprime leading monomials never contribute.
        for (auto& c : kept)
            if (!c.coprime) pairs.insert(Pair{c.lcm, c.i, t});

        basis.push_back(h);
    }

    void add_generator(const Polynomial<K>& p) {
        OPoly<K> o = opoly_of(p, ord);
        o = reduce(std::move(o));
        if (o.zero()) return;
        // monic
        K inv = K(1) / o.lc();
        for (auto& [m, c] : o.t) c = c * inv;
        update_pairs(o);
    }

    void run() {
        while (!pairs.empty()) {
            Pair p = *pairs.begin();
            pairs.erase(pairs.begin());
            charge();
            const OPoly<K>& f = basis[p.i];
            const OPoly<K>& g = basis[p.j];
            // S-polynomial: both monic.
            Monomial mf = p.lcm.quotient_by(f.lm());
            Monomial mg = p.lcm.quotient_by(g.lm());
            OPoly<K> sf, sg;
            sf.t.reserve(f.t.size());
            for (const auto& [m, c] : f.t) sf.t.emplace_back(m.times(mf), c);
            OPoly<K> s = subtract_multiple(sf, K(1), mg, g, ord);
            s = reduce(std::move(s));
            if (s.zero()) continue;
            K inv = K(1) / s.lc();
            for (auto& [m, c] : s.t) c = c * inv;
            update_pairs(s);
        }
    }

    /// Minimal, tail-reduced, monic basis sorted by ascending leading monomial.
    std::vector<OPoly<K>> reduced() {
        std::vector<std::size_t> order_idx(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
        std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
            auto c = ord.cmp(basis[a].lm(), basis[b].lm());
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            return a < b;
        });
        std::vector<OPoly<K>> minimal;
        for (std::size_t idx : order_idx) {
            const auto& g = basis[idx];
            bool divisible = false;
            for (const auto& kept : minimal)
                if (kept.lm().divides(g.lm())) {
                    divisible = true;
                    break;
                }
            if (!divisible) minimal.push_back(g);
        }
        // Tail-reduce each against the others.
        std::vector<OPoly<K>> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            GbEngine<K> sub{ord, opt};
            sub.steps = steps;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) sub.basis.push_back(minimal[j]);
            OPoly<K> r = sub.reduce(minimal[i]);
            steps = sub.steps;
            if (!r.zero()) {
                K inv = K(1) / r.lc();
                for (auto& [m, c] : r.t) c = c * inv;
                out.push_back(std::move(r));
            }
        }
        std::sort(out.begin(), out.end(),
                  [&](const OPoly<K>& a, const OPoly<K>& b) { return !ord.greater(a.lm(), b.lm()); });
        return out;
    }
};

}  // namespace detail

/// Result of a Buchberger run: the reduced (auto-reduced, monic) basis, which
/// is unique for the (ideal, order) pair, plus the steps spent.
template <class K>
struct BasisResult {
    std::vector<Polynomial<K>> basis;
    std::uint64_t steps = 0;

    bool is_unit() const {
        return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero_poly();
    }
    bool is_zero_ideal() const { return basis.empty(); }
};

/// Buchberger with Gebauer-Moeller pair elimination and normal (minimal-lcm)
/// selection. Deterministic for fixed input and order.
template <class K>
BasisResult<K> buchberger_basis(const std::vector<Polynomial<K>>& gens, const MonomialOrder& ord,
                                const GbOptions& opt = {}) {
    detail::GbEngine<K> eng{ord, opt};
    std::vector<Polynomial<K>> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
        const auto& ta = a.terms();
        const auto& tb = b.terms();
        for (std::size_t i = 0; i < ta.size(); ++i) {
            auto c = ta[i].first.cmp_deglex(tb[i].first);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        }
        return false;
    });
    RingPtr ring;
    for (const auto& g : sorted) {
        if (g.is_zero_poly()) continue;
        if (!ring) ring = g.ring();
        eng.add_generator(g);
    }
    eng.run();
    BasisResult<K> res;
    res.steps = eng.steps;
    if (!ring) return res;
    for (auto& o : eng.reduced()) res.basis.push_back(detail::poly_of(o, ring));
    return res;
}

/// Remainder of f on division by the basis: no term is divisible by any
/// leading monomial; idempotent.
template <class K>
Polynomial<K> normal_form_against(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                                  const MonomialOrder& ord, const GbOptions& opt = {}) {
    detail::GbEngine<K> eng{ord, opt};
    for (const auto& g : basis)
        if (!g.is_zero_poly()) eng.basis.push_back(detail::opoly_of(g, ord));
    auto r = eng.reduce(detail::opoly_of(f, ord));
    return detail::poly_of(r, f.ring());
}

}  // namespace hstar
