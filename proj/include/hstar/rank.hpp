#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hstar/conciseness.hpp"
#include "hstar/hadamard.hpp"
#include "hstar/solve.hpp"

namespace hstar {

/// Distribution of the target's zero coordinates over the factors of a
/// candidate decomposition: forced[k] is the set of coordinates factor k must
/// vanish at. The union over factors covers the target's zero set, and no
/// factor is forced to vanish everywhere.
struct ZeroPattern {
    std::vector<std::vector<std::size_t>> forced;

    std::size_t factors() const { return forced.size(); }

    std::size_t total_zeros() const {
        std::size_t t = 0;
        for (const auto& f : forced) t += f.size();
        return t;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t k = 0; k < forced.size(); ++k) {
            if (k) s += ",";
            s += "{";
            for (std::size_t i = 0; i < forced[k].size(); ++i) {
                if (i) s += " ";
                s += std::to_string(forced[k][i]);
            }
            s += "}";
        }
        return s + "]";
    }

    /// Canonical form up to permutation of the factors.
    std::string multiset_key() const {
        std::vector<std::string> parts;
        for (const auto& f : forced) {
            std::string p;
            for (auto i : f) p += std::to_string(i) + ",";
            parts.push_back(p);
        }
        std::sort(parts.begin(), parts.end());
        std::string key;
        for (const auto& p : parts) key += p + "|";
        return key;
    }
};

/// All covering assignments of the zero set to m factors, one representative
/// per factor permutation class, in increasing total-zero order.
inline std::vector<ZeroPattern> enumerate_zero_patterns(const std::vector<std::size_t>& zero_set,
                                                        int m) {
    std::vector<ZeroPattern> out;
    std::size_t z = zero_set.size();
    if (z == 0) {
        ZeroPattern p;
        p.forced.assign(static_cast<std::size_t>(m), {});
        out.push_back(std::move(p));
        return out;
    }
    // Each zero coordinate picks a nonempty subset of factors.
    std::uint64_t choices = (1ull << m) - 1;
    std::vector<std::uint64_t> pick(z, 1);
    std::set<std::string> seen;
    for (;;) {
        ZeroPattern p;
        p.forced.assign(static_cast<std::size_t>(m), {});
        for (std::size_t j = 0; j < z; ++j)
            for (int k = 0; k < m; ++k)
                if (pick[j] & (1ull << k)) p.forced[static_cast<std::size_t>(k)].push_back(zero_set[j]);
        if (seen.insert(p.multiset_key()).second) out.push_back(std::move(p));
        // next assignment
        std::size_t j = 0;
        while (j < z) {
            if (pick[j] < choices) {
                ++pick[j];
                break;
            }
            pick[j] = 1;
            ++j;
        }
        if (j == z) break;
    }
    std::sort(out.begin(), out.end(), [](const ZeroPattern& a, const ZeroPattern& b) {
        if (a.total_zeros() != b.total_zeros()) return a.total_zeros() < b.total_zeros();
        return a.str() < b.str();
    });
    return out;
}

namespace detail {

/// The polynomial system of one zero pattern. Factor coordinates are ring
/// variables except forced zeros and the shared dehomogenization coordinate
/// (a coordinate where the target is nonzero, set to 1 on every factor);
/// lambda carries the projective scale of the target with a reciprocal
/// variable pinning it nonzero.
struct PatternSystem {
    RingPtr ring;
    std::vector<std::vector<int>> var_of;  // factor x coordinate -> ring var or -1 (fixed)
    std::vector<std::vector<int>> fixed;   // factor x coordinate -> 0/1 when var_of == -1
    std::size_t dehom = 0;
    std::size_t lambda_var = 0, recip_var = 0;
    std::size_t coord_vars = 0;  // number of factor-coordinate variables
};

template <class K>
std::pair<PatternSystem, std::vector<Polynomial<K>>> build_pattern_system(
    const std::vector<K>& target, const Ideal& IX, const ZeroPattern& pat) {
    std::size_t n = IX.ring->nvars();
    std::size_t m = pat.factors();
    PatternSystem sys;
    // dehomogenize where the target is nonzero
    std::size_t dehom = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_zero(target[i])) {
            dehom = i;
            break;
        }
    sys.dehom = dehom;

    std::vector<std::string> names;
    sys.var_of.assign(m, std::vector<int>(n, -1));
    sys.fixed.assign(m, std::vector<int>(n, 0));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            bool forced = std::find(pat.forced[k].begin(), pat.forced[k].end(), i) !=
                          pat.forced[k].end();
            if (forced) {
                sys.fixed[k][i] = 0;
            } else if (i == dehom) {
                sys.fixed[k][i] = 1;
            } else {
                sys.var_of[k][i] = static_cast<int>(names.size());
                names.push_back("q" + std::to_string(k) + "_" + std::to_string(i));
            }
        }
    }
    sys.coord_vars = names.size();
    sys.lambda_var = names.size();
    names.push_back("lam");
    sys.recip_var = names.size();
    names.push_back("u");
    sys.ring = make_ring(std::move(names));

    auto factor_coord = [&](std::size_t k, std::size_t i) -> Polynomial<K> {
        int v = sys.var_of[k][i];
        if (v >= 0) return Polynomial<K>::variable(sys.ring, static_cast<std::size_t>(v), K(1));
        return Polynomial<K>::constant(sys.ring, K(sys.fixed[k][i]));
    };

    std::vector<Polynomial<K>> gens;
    // Each factor lies on X.
    for (std::size_t k = 0; k < m; ++k) {
        for (const auto& g : IX.gens) {
            Polynomial<K> acc = Polynomial<K>::zero(sys.ring);
            for (const auto& [mono, c] : g.terms()) {
                Polynomial<K> t = Polynomial<K>::constant(sys.ring, K(c));
                for (std::size_t i = 0; i < n; ++i)
                    if (mono[i] > 0) t = t * factor_coord(k, i).pow(mono[i]);
                acc = acc + t;
            }
            if (!acc.is_zero_poly()) gens.push_back(acc);
        }
    }
    // Coordinate products match the target up to the scale lambda.
    Polynomial<K> lambda =
        Polynomial<K>::variable(sys.ring, sys.lambda_var, K(1));
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial<K> prod = Polynomial<K>::constant(sys.ring, K(1));
        for (std::size_t k = 0; k < m; ++k) prod = prod * factor_coord(k, i);
        Polynomial<K> eq = prod - lambda * Polynomial<K>::constant(sys.ring, target[i]);
        if (!eq.is_zero_poly()) gens.push_back(eq);
    }
    // lambda is a unit.
    Polynomial<K> u = Polynomial<K>::variable(sys.ring, sys.recip_var, K(1));
    gens.push_back(lambda * u - Polynomial<K>::constant(sys.ring, K(1)));
    return {std::move(sys), std::move(gens)};
}

}  // namespace detail

struct PatternCertificate {
    ZeroPattern pattern;
    bool resolved = true;
    bool unit_ideal = false;
    std::uint64_t steps = 0;
};

struct DecompositionCheck {
    enum class Verdict { Exists, NotExists, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::vector<PatternCertificate> certificates;
    std::optional<ZeroPattern> feasible;
    std::uint64_t steps = 0;
};

/// Decides whether the target is a Hadamard product of m points of X by
/// exact case analysis over zero patterns. Infeasibility is certified by a
/// unit-ideal basis per pattern; no random slicing is involved, so a
/// NotExists verdict is a proof.
inline DecompositionCheck decomposition_exists(const ProjPoint& p, const Ideal& IX, int m,
                                               const GbOptions& opt = {}) {
    if (m < 1) throw Error("decomposition needs m >= 1");
    if (p.size() != IX.ring->nvars()) throw RingMismatch("point/ideal arity mismatch");
    DecompositionCheck out;
    auto patterns = enumerate_zero_patterns(p.zero_set(), m);
    bool any_unresolved = false;
    bool rational = p.all_rational();
    for (const auto& pat : patterns) {
        PatternCertificate cert;
        cert.pattern = pat;
        try {
            bool unit;
            std::uint64_t steps;
            if (rational) {
                auto rc = *p.rational_coords();
                auto [sys, gens] = detail::build_pattern_system<Rat>(rc, IX, pat);
                auto res = buchberger_basis<Rat>(gens, MonomialOrder::grevlex(), opt);
                unit = res.is_unit();
                steps = res.steps;
            } else {
                auto [sys, gens] = detail::build_pattern_system<AlgNum>(p.coords(), IX, pat);
                auto res = buchberger_basis<AlgNum>(gens, MonomialOrder::grevlex(), opt);
                unit = res.is_unit();
                steps = res.steps;
            }
            cert.unit_ideal = unit;
            cert.steps = steps;
            out.steps += steps;
        } catch (const BudgetExceeded& b) {
            cert.resolved = false;
            cert.steps = b.spent;
            out.steps += b.spent;
            any_unresolved = true;
        }
        if (cert.resolved && !cert.unit_ideal) {
            out.feasible = pat;
            out.certificates.push_back(std::move(cert));
            out.verdict = DecompositionCheck::Verdict::Exists;
            return out;
        }
        out.certificates.push_back(std::move(cert));
    }
    out.verdict = any_unresolved ? DecompositionCheck::Verdict::Unknown
                                 : DecompositionCheck::Verdict::NotExists;
    return out;
}

/// Extracts an exact witness decomposition for a feasible m. Positive
/// dimensional solution sets are cut by random rational hyperplanes; every
/// candidate is replayed (factors on X, product projectively equal to the
/// target) before being returned. Misses trigger fresh slices; existence
/// remains certified by decomposition_exists either way.
inline std::vector<ProjPoint> decomposition_witness(const ProjPoint& p, const Ideal& IX, int m,
                                                    Rng& rng, const GbOptions& opt = {},
                                                    int retries = 6) {
    auto rc = p.rational_coords();
    if (!rc) throw Error("witness extraction needs a rational target point");
    std::size_t n = IX.ring->nvars();
    auto patterns = enumerate_zero_patterns(p.zero_set(), m);
    std::optional<std::vector<ProjPoint>> algebraic_fallback;

    for (const auto& pat : patterns) {
        auto [sys, gens] = detail::build_pattern_system<Rat>(*rc, IX, pat);
        Ideal system = Ideal::make(sys.ring, gens);
        if (is_unit_ideal(system, opt)) continue;

        for (int attempt = 0; attempt < retries; ++attempt) {
            Ideal sliced = system;
            int dim = affine_dimension(sliced, opt);
            int guard = 0;
            while (dim > 0 && guard++ < 12) {
                // Cut with a random hyperplane in the factor-coordinate
                // variables; single-variable cuts first keep witnesses
                // rational whenever the stratum allows it.
                QPoly h = QPoly::zero(sys.ring);
                if (attempt % 2 == 0) {
                    std::size_t v = rng.below(sys.coord_vars);
                    h = QPoly::variable(sys.ring, v, Rat(1)) -
                        QPoly::constant(sys.ring, rng.rat_int(6 + 3 * attempt));
                } else {
                    for (std::size_t v = 0; v < sys.coord_vars; ++v)
                        h = h + QPoly::variable(sys.ring, v, rng.rat_int(9));
                    h = h - QPoly::constant(sys.ring, rng.rat_int(9));
                }
                if (h.is_zero_poly()) continue;
                Ideal next = sliced.plus({h});
                if (is_unit_ideal(next, opt)) continue;  // cut missed everything
                int ndim = affine_dimension(next, opt);
                if (ndim >= dim) continue;
                sliced = next;
                dim = ndim;
            }
            if (dim != 0) continue;

            std::vector<AffineSolution> sols;
            try {
                sols = solve_zero_dimensional(sliced, rng, opt);
            } catch (const NotZeroDimensional&) {
                continue;
            }
            std::vector<std::vector<ProjPoint>> verified;
            for (const auto& sol : sols) {
                std::vector<ProjPoint> factors;
                bool ok = true;
                for (std::size_t k = 0; k < static_cast<std::size_t>(m) && ok; ++k) {
                    std::vector<AlgNum> coords;
                    for (std::size_t i = 0; i < n; ++i) {
                        int v = sys.var_of[k][i];
                        if (v >= 0)
                            coords.push_back(sol.coords[static_cast<std::size_t>(v)]);
                        else
                            coords.emplace_back(Rat(sys.fixed[k][i]));
                    }
                    try {
                        ProjPoint f(std::move(coords));
                        if (!vanishes_at(IX.gens, f)) ok = false;
                        factors.push_back(std::move(f));
                    } catch (const Error&) {
                        ok = false;
                    }
                }
                if (!ok) continue;
                try {
                    if (!proj_equal(hadamard_product(factors), p)) continue;
                } catch (const AllZeroProduct&) {
                    continue;
                }
                verified.push_back(std::move(factors));
            }
            if (verified.empty()) continue;
            // Rational witness lists win; among equals, the canonically least.
            auto witness_key = [](const std::vector<ProjPoint>& ws) {
                std::vector<std::string> keys;
                for (const auto& w : ws) keys.push_back(w.sort_key());
                std::sort(keys.begin(), keys.end());
                std::string k;
                for (auto& s : keys) k += s + "#";
                return k;
            };
            auto all_rat = [](const std::vector<ProjPoint>& ws) {
                for (const auto& w : ws)
                    if (!w.all_rational()) return false;
                return true;
            };
            std::vector<std::vector<ProjPoint>> pool;
            for (auto& ws : verified)
                if (all_rat(ws)) pool.push_back(ws);
            bool rational_pool = !pool.empty();
            if (pool.empty()) pool = verified;
            std::size_t best = 0;
            for (std::size_t i = 1; i < pool.size(); ++i)
                if (witness_key(pool[i]) < witness_key(pool[best])) best = i;
            std::vector<ProjPoint> out;
            for (auto& w : pool[best]) out.push_back(w.canonical());
            if (rational_pool) return out;
            // Keep hunting for a rational list on fresh slices.
            if (!algebraic_fallback) algebraic_fallback = std::move(out);
        }
    }
    if (algebraic_fallback) return *algebraic_fallback;
    throw WitnessNotFound("slices missed every verified decomposition; retry with a new seed");
}

enum class RankVerdict {
    RankEquals,
    RankAtMost,
    RankGreaterThan,
    BorderRank,
    BorderGreaterThan,
    ProvablyInfinite,
    Unknown,
};

inline std::string verdict_name(RankVerdict v) {
    switch (v) {
        case RankVerdict::RankEquals: return "RankEquals";
        case RankVerdict::RankAtMost: return "RankAtMost";
        case RankVerdict::RankGreaterThan: return "RankGreaterThan";
        case RankVerdict::BorderRank: return "BorderRank";
        case RankVerdict::BorderGreaterThan: return "BorderGreaterThan";
        case RankVerdict::ProvablyInfinite: return "ProvablyInfinite";
        case RankVerdict::Unknown: return "Unknown";
    }
    return "?";
}

/// Verdict plus replayable evidence: witness factors for upper bounds,
/// per-pattern unit-ideal certificates for lower bounds, the obstruction
/// coordinate for provably infinite ranks.
struct RankCertificate {
    ProjPoint point;
    RankVerdict verdict = RankVerdict::Unknown;
    int m = 0;
    std::vector<ProjPoint> witnesses;
    std::map<int, std::vector<PatternCertificate>> patterns_by_m;
    int obstruction_coordinate = -1;
    std::uint64_t seed = 0;
    std::uint64_t budget_spent = 0;

    RankCertificate(ProjPoint p) : point(std::move(p)) {}
};

/// The exact-infinite-rank test: if the target vanishes at exactly one
/// coordinate, and the hyperplane section there is swallowed by the other
/// coordinate hyperplanes, every candidate factor forced to vanish there
/// drags a second coordinate of the product to zero. No finite product
/// reaches the target.
inline std::optional<std::size_t> infinite_rank_obstruction(const ProjPoint& p, const Ideal& IX,
                                                            const GbOptions& opt = {}) {
    auto zs = p.zero_set();
    if (zs.size() != 1) return std::nullopt;
    std::size_t i = zs[0];
    std::size_t n = IX.ring->nvars();
    QPoly xi = QPoly::variable(IX.ring, i, Rat(1));
    std::vector<std::uint32_t> e(n, 1);
    e[i] = 0;
    QPoly others = QPoly::term(IX.ring, Monomial::of(e), Rat(1));
    bool swallowed = radical_membership(others, IX.plus({xi}), opt);
    if (swallowed) return i;
    return std::nullopt;
}

/// Smallest m <= max_m admitting an exact decomposition, with infeasibility
/// certificates for every smaller m. Budget failures surface as Unknown at
/// the level they occurred.
inline RankCertificate hadamard_rank(const ProjPoint& p, const Ideal& IX, int max_m, Rng& rng,
                                     const GbOptions& opt = {}, bool extract_witnesses = true) {
    RankCertificate cert(p);
    for (int m = 1; m <= max_m; ++m) {
        auto check = decomposition_exists(p, IX, m, opt);
        cert.patterns_by_m[m] = check.certificates;
        cert.budget_spent += check.steps;
        if (check.verdict == DecompositionCheck::Verdict::Exists) {
            cert.verdict = RankVerdict::RankEquals;
            cert.m = m;
            if (extract_witnesses && p.all_rational()) {
                try {
                    cert.witnesses = decomposition_witness(p, IX, m, rng, opt);
                } catch (const WitnessNotFound&) {
                    // existence stays certified; the witness list is empty
                }
            }
            return cert;
        }
        if (check.verdict == DecompositionCheck::Verdict::Unknown) {
            cert.verdict = RankVerdict::Unknown;
            cert.m = m;
            return cert;
        }
    }
    cert.verdict = RankVerdict::RankGreaterThan;
    cert.m = max_m;
    return cert;
}

/// Smallest m <= max_m with the target inside the m-th Hadamard power
/// (membership in a closure: border-style).
inline RankCertificate border_rank(const ProjPoint& p, const Ideal& IX, int max_m,
                                   PowerCache& cache, const GbOptions& opt = {}) {
    RankCertificate cert(p);
    for (int m = 1; m <= max_m; ++m) {
        if (power_membership(p, IX, m, cache, opt)) {
            cert.verdict = RankVerdict::BorderRank;
            cert.m = m;
            return cert;
        }
    }
    cert.verdict = RankVerdict::BorderGreaterThan;
    cert.m = max_m;
    return cert;
}

inline RankCertificate border_rank(const ProjPoint& p, const Ideal& IX, int max_m,
                                   const GbOptions& opt = {}) {
    PowerCache cache(IX);
    return border_rank(p, IX, max_m, cache, opt);
}

/// Multiplies away the zero coordinates of the target with one strong
/// conciseness witness per zero coordinate, leaving an all-nonzero residual
/// target. Composing any rank bound on the residual with the witness list
/// bounds the rank of the original.
struct ZeroReduction {
    ProjPoint reduced;
    std::vector<ProjPoint> witnesses;  // one per zero coordinate of the input
    std::size_t zeros = 0;
};

inline ZeroReduction zero_pattern_reduce(const ProjPoint& p, const Ideal& IX, Rng& rng,
                                         const GbOptions& opt = {}) {
    auto rep = is_strongly_concise(IX, opt);
    if (!rep.all_strongly_concise())
        throw NotStronglyConcise("the variety is not strongly concise");
    auto zs = p.zero_set();
    if (zs.empty()) return ZeroReduction{p, {}, 0};

    std::vector<ProjPoint> witnesses;
    for (auto i : zs) {
        ProjPoint w = strong_conciseness_witness(IX, i, rng, opt);
        if (!w.all_rational()) throw IrrationalWitnessesOnly();
        witnesses.push_back(w.canonical());
    }
    ProjPoint q = hadamard_product(witnesses);
    std::vector<AlgNum> reduced;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (is_zero(q[i])) {
            // Both vanish here: any nonzero value works, default 1.
            reduced.emplace_back(Rat(1));
        } else {
            reduced.push_back(p[i] / q[i]);
        }
    }
    ZeroReduction out{ProjPoint(std::move(reduced)), std::move(witnesses), zs.size()};
    // p == reduced * q by construction.
    if (!proj_equal(hadamard_point(out.reduced, q), p))
        throw Error("zero-pattern reduction failed to recompose");
    return out;
}

/// Replays every piece of evidence in a certificate against the ideal.
inline bool replay_certificate(const RankCertificate& cert, const Ideal& IX,
                               const GbOptions& opt = {}) {
    const ProjPoint& p = cert.point;
    auto replay_patterns = [&](int upto_exclusive) {
        for (const auto& [m, certs] : cert.patterns_by_m) {
            if (m >= upto_exclusive) continue;
            bool rational = p.all_rational();
            for (const auto& pc : certs) {
                if (!pc.resolved) return false;
                bool unit;
                if (rational) {
                    auto [sys, gens] =
                        detail::build_pattern_system<Rat>(*p.rational_coords(), IX, pc.pattern);
                    unit = buchberger_basis<Rat>(gens, MonomialOrder::grevlex(), opt).is_unit();
                } else {
                    auto [sys, gens] =
                        detail::build_pattern_system<AlgNum>(p.coords(), IX, pc.pattern);
                    unit = buchberger_basis<AlgNum>(gens, MonomialOrder::grevlex(), opt).is_unit();
                }
                if (unit != pc.unit_ideal) return false;
            }
        }
        return true;
    };
    switch (cert.verdict) {
        case RankVerdict::RankEquals: {
            if (!replay_patterns(cert.m)) return false;
            if (cert.witnesses.empty()) return true;  // existence-only certificate
            if (static_cast<int>(cert.witnesses.size()) != cert.m) return false;
            for (const auto& w : cert.witnesses)
                if (!vanishes_at(IX.gens, w)) return false;
            return proj_equal(hadamard_product(cert.witnesses), p);
        }
        case RankVerdict::RankAtMost: {
            if (cert.witnesses.empty() ||
                static_cast<int>(cert.witnesses.size()) > cert.m)
                return false;
            for (const auto& w : cert.witnesses)
                if (!vanishes_at(IX.gens, w)) return false;
            return proj_equal(hadamard_product(cert.witnesses), p);
        }
        case RankVerdict::RankGreaterThan:
            return replay_patterns(cert.m + 1);
        case RankVerdict::BorderRank: {
            PowerCache cache(IX);
            if (!power_membership(p, IX, cert.m, cache, opt)) return false;
            if (cert.m > 1 && power_membership(p, IX, cert.m - 1, cache, opt)) return false;
            return true;
        }
        case RankVerdict::BorderGreaterThan: {
            PowerCache cache(IX);
            for (int m = 1; m <= cert.m; ++m)
                if (power_membership(p, IX, m, cache, opt)) return false;
            return true;
        }
        case RankVerdict::ProvablyInfinite: {
            auto obs = infinite_rank_obstruction(p, IX, opt);
            return obs.has_value() &&
                   static_cast<int>(*obs) == cert.obstruction_coordinate;
        }
        case RankVerdict::Unknown:
            return true;
    }
    return false;
}

}  // namespace hstar
