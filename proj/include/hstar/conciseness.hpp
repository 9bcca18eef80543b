#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hstar/hadamard.hpp"
#include "hstar/solve.hpp"

namespace hstar {

/// Per-coordinate verdicts for conciseness and strong conciseness. The
/// strong property implies the plain one coordinate by coordinate.
struct ConcisenessReport {
    std::vector<bool> concise;
    std::vector<bool> strongly_concise;

    bool all_concise() const {
        for (bool b : concise)
            if (!b) return false;
        return true;
    }
    bool all_strongly_concise() const {
        for (bool b : strongly_concise)
            if (!b) return false;
        return true;
    }
    std::vector<std::size_t> failing_concise() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < concise.size(); ++i)
            if (!concise[i]) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> failing_strongly() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < strongly_concise.size(); ++i)
            if (!strongly_concise[i]) out.push_back(i);
        return out;
    }
};

/// Coordinate i is concise iff x_i does not vanish identically on V(I).
inline std::vector<bool> is_concise(const Ideal& I, const GbOptions& opt = {}) {
    std::vector<bool> out;
    for (std::size_t i = 0; i < I.ring->nvars(); ++i) {
        QPoly xi = QPoly::variable(I.ring, i, Rat(1));
        out.push_back(!radical_membership(xi, I, opt));
    }
    return out;
}

/// Coordinate i is strongly concise iff the product of the other variables
/// does not vanish identically on V(I + (x_i)), i.e. X ∩ H_i is not swallowed
/// by the union of the other coordinate hyperplanes.
inline ConcisenessReport is_strongly_concise(const Ideal& I, const GbOptions& opt = {}) {
    ConcisenessReport rep;
    rep.concise = is_concise(I, opt);
    std::size_t n = I.ring->nvars();
    for (std::size_t i = 0; i < n; ++i) {
        QPoly xi = QPoly::variable(I.ring, i, Rat(1));
        std::vector<std::uint32_t> e(n, 1);
        e[i] = 0;
        QPoly others = QPoly::term(I.ring, Monomial::of(e), Rat(1));
        bool member = radical_membership(others, I.plus({xi}), opt);
        rep.strongly_concise.push_back(!member);
    }
    return rep;
}

/// Searches for a two-term polynomial in the ideal up to the degree bound by
/// comparing normal forms of monomials: a zero normal form is a monomial
/// member; two proportional normal forms combine into a binomial member.
/// Any returned polynomial replays: its normal form is zero.
inline std::optional<QPoly> binomial_search(const Ideal& I, int degree_bound,
                                            const GbOptions& opt = {},
                                            std::size_t monomial_guard = 200000) {
    if (degree_bound < 1) throw Error("degree bound must be >= 1");
    auto G = groebner(I, MonomialOrder::grevlex(), opt);
    std::size_t n = I.ring->nvars();
    std::size_t seen = 0;
    for (int d = 1; d <= degree_bound; ++d) {
        // Enumerate degree-d monomials in descending canonical order.
        std::vector<Monomial> monos;
        std::vector<std::uint32_t> cur(n, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t var, int rest) {
            if (var == n - 1) {
                cur[var] = static_cast<std::uint32_t>(rest);
                monos.push_back(Monomial::of(cur));
                cur[var] = 0;
                return;
            }
            for (int e = rest; e >= 0; --e) {
                cur[var] = static_cast<std::uint32_t>(e);
                rec(var + 1, rest - e);
            }
            cur[var] = 0;
        };
        rec(0, d);
        seen += monos.size();
        if (seen > monomial_guard)
            throw MonomialCountExceeded("binomial search would enumerate too many monomials");

        // Normalized normal forms keyed by their monic string form.
        std::map<std::string, std::pair<Monomial, Rat>> classes;  // key -> (monomial, lead coeff)
        for (const auto& m : monos) {
            QPoly f = QPoly::term(I.ring, m, Rat(1));
            QPoly nf = normal_form(f, G, opt);
            if (nf.is_zero_poly()) return f;  // monomial member
            Rat lead = nf.terms().front().second;
            QPoly normalized = nf.times_scalar(Rat(1) / lead);
            std::string key = to_string(normalized);
            auto it = classes.find(key);
            if (it != classes.end()) {
                // m - (lead/lead') * m' lies in the ideal
                const auto& [m2, lead2] = it->second;
                QPoly bin = QPoly::term(I.ring, m, Rat(1)) -
                            QPoly::term(I.ring, m2, lead / lead2);
                return bin;
            }
            classes.emplace(std::move(key), std::make_pair(m, lead));
        }
    }
    return std::nullopt;
}

enum class Finiteness {
    GenericFinite,
    GenericInfiniteNotConcise,
    GenericInfiniteBinomial,
    Unknown,
};

struct FinitenessVerdict {
    Finiteness kind = Finiteness::Unknown;
    int coordinate = -1;             // for NotConcise
    std::optional<QPoly> binomial;   // for BinomialFound
    int degree_bound = 0;            // bound reached when Unknown
};

/// Trichotomy for finiteness of the generic rank: failure of conciseness or
/// a binomial member certify the infinite side; strong conciseness (or an
/// explicit opt-in that the searched bound is conclusive) certifies the
/// finite side; anything else stays Unknown.
inline FinitenessVerdict generic_rank_finiteness(const Ideal& I, int degree_bound,
                                                 bool accept_bound_as_conclusive = false,
                                                 const GbOptions& opt = {}) {
    FinitenessVerdict v;
    auto conc = is_concise(I, opt);
    for (std::size_t i = 0; i < conc.size(); ++i)
        if (!conc[i]) {
            v.kind = Finiteness::GenericInfiniteNotConcise;
            v.coordinate = static_cast<int>(i);
            return v;
        }
    if (auto bin = binomial_search(I, degree_bound, opt)) {
        v.kind = Finiteness::GenericInfiniteBinomial;
        v.binomial = std::move(*bin);
        return v;
    }
    auto rep = is_strongly_concise(I, opt);
    if (rep.all_strongly_concise()) {
        v.kind = Finiteness::GenericFinite;
        return v;
    }
    if (accept_bound_as_conclusive) {
        v.kind = Finiteness::GenericFinite;
        v.degree_bound = degree_bound;
        return v;
    }
    v.kind = Finiteness::Unknown;
    v.degree_bound = degree_bound;
    return v;
}

/// Default search bound: twice the largest generator degree.
inline int default_binomial_bound(const Ideal& I) {
    std::int64_t d = 1;
    for (const auto& g : I.gens) d = std::max(d, g.degree());
    return static_cast<int>(2 * d);
}

/// An exact point of V(I) with coordinate i zero and every other coordinate
/// nonzero. V(I + (x_i)) is sliced by random hyperplanes down to dimension
/// zero, solved exactly, and candidates are filtered by their zero pattern.
/// Rational witnesses are preferred; ties break to the canonically least.
inline ProjPoint strong_conciseness_witness(const Ideal& I, std::size_t coordinate, Rng& rng,
                                            const GbOptions& opt = {}, int max_retries = 8) {
    std::size_t n = I.ring->nvars();
    if (coordinate >= n) throw Error("coordinate out of range");
    QPoly xi = QPoly::variable(I.ring, coordinate, Rat(1));
    Ideal sliced_base = I.plus({xi});

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Ideal sys = sliced_base;
        int dim;
        try {
            dim = projective_dimension(sys, opt);
        } catch (const EmptyVariety&) {
            throw WitnessNotFound("the hyperplane section is empty");
        }
        if (dim < 0) throw WitnessNotFound("the hyperplane section is empty");
        // Random hyperplanes through nothing in particular cut dimension to 0.
        std::vector<QPoly> slices;
        for (int s = 0; s < dim; ++s) {
            QPoly h = QPoly::zero(I.ring);
            for (std::size_t j = 0; j < n; ++j)
                h = h + QPoly::variable(I.ring, j, rng.rat_int(25 + 10 * attempt));
            if (h.is_zero_poly()) h = QPoly::variable(I.ring, (coordinate + 1) % n, Rat(1));
            slices.push_back(h);
        }
        if (!slices.empty()) sys = sys.plus(slices);

        std::vector<std::pair<ProjPoint, int>> pts;
        try {
            pts = solve_projective(sys, rng, opt);
        } catch (const NotZeroDimensional&) {
            continue;  // unlucky slice; retry
        }
        std::vector<ProjPoint> good;
        for (auto& [p, mult] : pts) {
            auto zs = p.zero_set();
            if (zs.size() == 1 && zs[0] == coordinate && vanishes_at(I.gens, p))
                good.push_back(p);
        }
        if (good.empty()) continue;
        std::vector<ProjPoint> rational;
        for (auto& p : good)
            if (p.all_rational()) rational.push_back(p);
        auto& pool = rational.empty() ? good : rational;
        std::size_t best = 0;
        for (std::size_t i = 1; i < pool.size(); ++i)
            if (pool[i].sort_key() < pool[best].sort_key()) best = i;
        return pool[best].canonical();
    }
    throw WitnessNotFound("no witness with the required zero pattern after reslicing");
}

}  // namespace hstar
