#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "hstar/ideal.hpp"
#include "hstar/solve.hpp"

namespace hstar {

/// Ideal of the Hadamard product X * Y inside the common ambient space.
/// Built on affine cones: in a ring with blocks x, y, z put I_X(x) + I_Y(y)
/// + (z_i - x_i*y_i), then eliminate x and y; the Hadamard product of the
/// cones is the cone over the Hadamard product, so the result is homogeneous
/// (asserted, not assumed).
inline Ideal variety_product(const Ideal& IX, const Ideal& IY, const GbOptions& opt = {}) {
    require_same_ring(IX.ring, IY.ring);
    if (!IX.is_homogeneous() || !IY.is_homogeneous())
        throw Error("hadamard product needs homogeneous ideals");
    std::size_t n = IX.ring->nvars();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("hx" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) names.push_back("hy" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) names.push_back("hz" + std::to_string(i));
    RingPtr big = make_ring(std::move(names));

    std::vector<QPoly> gens;
    for (const auto& g : IX.gens) gens.push_back(detail::lift_to(g, big, 0));
    for (const auto& g : IY.gens) gens.push_back(detail::lift_to(g, big, n));
    for (std::size_t i = 0; i < n; ++i) {
        QPoly z = QPoly::variable(big, 2 * n + i, Rat(1));
        QPoly x = QPoly::variable(big, i, Rat(1));
        QPoly y = QPoly::variable(big, n + i, Rat(1));
        gens.push_back(z - x * y);
    }
    std::set<std::size_t> drop;
    for (std::size_t i = 0; i < 2 * n; ++i) drop.insert(i);
    Ideal cut = eliminate(Ideal{big, std::move(gens)}, drop, opt);
    Ideal out = rename_ideal(cut, IX.ring);
    if (!out.is_homogeneous()) throw Error("cone/projectivization exchange failed");
    return out;
}

/// Cache of Hadamard powers of a fixed base ideal, with their projective
/// dimensions. Writes are serialized; dimensions are checked monotone.
class PowerCache {
    Ideal base_;
    std::map<int, std::pair<Ideal, int>> powers_;
    std::mutex mu_;

  public:
    explicit PowerCache(Ideal base) : base_(std::move(base)) {}

    const Ideal& base() const { return base_; }

    bool has(int m) {
        std::lock_guard<std::mutex> lk(mu_);
        return powers_.count(m) > 0;
    }

    std::pair<Ideal, int> get(int m) {
        std::lock_guard<std::mutex> lk(mu_);
        return powers_.at(m);
    }

    void put(int m, const Ideal& I, const GbOptions& opt) {
        int dim = -2;
        auto G = groebner(I, MonomialOrder::grevlex(), opt);
        if (!G.is_unit()) dim = projective_dimension(I, opt);
        std::lock_guard<std::mutex> lk(mu_);
        for (const auto& [k, v] : powers_) {
            if (k < m && v.second > dim)
                throw Error("power dimension monotonicity violated");
            if (k > m && v.second < dim)
                throw Error("power dimension monotonicity violated");
        }
        powers_.emplace(m, std::make_pair(I, dim));
    }
};

/// m-th Hadamard power. Reuses cached halves as ((X^(m/2))^*2) * X^(m mod 2)
/// when available, otherwise iterates left to right.
inline Ideal variety_power(const Ideal& IX, int m, PowerCache& cache, const GbOptions& opt = {}) {
    if (m < 1) throw Error("hadamard power needs m >= 1");
    if (cache.has(m)) return cache.get(m).first;
    if (m == 1) {
        cache.put(1, IX, opt);
        return IX;
    }
    Ideal result = Ideal::zero(IX.ring);
    int half = m / 2;
    if (half >= 1 && cache.has(half) && (m % 2 == 0 || cache.has(1))) {
        Ideal h = cache.get(half).first;
        result = variety_product(h, h, opt);
        if (m % 2 == 1) result = variety_product(result, IX, opt);
    } else {
        result = variety_power(IX, m - 1, cache, opt);
        result = variety_product(result, IX, opt);
    }
    cache.put(m, result, opt);
    return result;
}

inline Ideal variety_power(const Ideal& IX, int m, const GbOptions& opt = {}) {
    PowerCache cache(IX);
    return variety_power(IX, m, cache, opt);
}

/// Ideal of the rank-at-most-m locus: the union of the first m powers.
/// When (1:...:1) lies on X the powers are nested and the m-th power
/// already is the locus.
inline Ideal rank_locus(const Ideal& IX, int m, PowerCache& cache, const GbOptions& opt = {}) {
    if (m < 1) throw Error("rank locus needs m >= 1");
    ProjPoint ones = ProjPoint::ones(IX.ring->nvars());
    if (contains_point(IX, ones)) return variety_power(IX, m, cache, opt);
    Ideal acc = variety_power(IX, 1, cache, opt);
    for (int k = 2; k <= m; ++k)
        acc = intersect_ideals(acc, variety_power(IX, k, cache, opt), opt);
    return acc;
}

inline Ideal rank_locus(const Ideal& IX, int m, const GbOptions& opt = {}) {
    PowerCache cache(IX);
    return rank_locus(IX, m, cache, opt);
}

/// Membership of p in the m-th power (a closure, so this is border-style
/// membership: limits of products count).
inline bool power_membership(const ProjPoint& p, const Ideal& IX, int m, PowerCache& cache,
                             const GbOptions& opt = {}) {
    if (p.size() != IX.ring->nvars()) throw RingMismatch("point/ideal arity mismatch");
    Ideal power = variety_power(IX, m, cache, opt);
    return contains_point(power, p);
}

inline bool power_membership(const ProjPoint& p, const Ideal& IX, int m,
                             const GbOptions& opt = {}) {
    PowerCache cache(IX);
    return power_membership(p, IX, m, cache, opt);
}

/// Ideal of q * X for a point q with all coordinates nonzero and rational:
/// substitute x_i -> x_i / q_i and clear denominators.
inline Ideal translate_ideal(const Ideal& IX, const ProjPoint& q) {
    if (q.size() != IX.ring->nvars()) throw RingMismatch("point/ideal arity mismatch");
    auto rc = q.rational_coords();
    if (!rc) throw Error("translation requires a rational point");
    std::vector<Rat> inv;
    for (const auto& v : *rc) {
        if (is_zero(v)) throw ZeroCoordinate();
        inv.push_back(Rat(1) / v);
    }
    std::vector<QPoly> gens;
    gens.reserve(IX.gens.size());
    for (const auto& g : IX.gens) gens.push_back(primitive_part(g.scale_variables(inv)));
    return Ideal{IX.ring, std::move(gens)};
}

}  // namespace hstar
