#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hstar/gb_cache.hpp"
#include "hstar/groebner.hpp"
#include "hstar/parse.hpp"
#include "hstar/projpoint.hpp"

namespace hstar {

/// Generator list of a polynomial ideal. The zero polynomial is rejected as
/// a generator; the zero ideal is the empty list.
struct Ideal {
    RingPtr ring;
    std::vector<QPoly> gens;

    static Ideal make(RingPtr r, std::vector<QPoly> gs) {
        for (const auto& g : gs) {
            if (g.is_zero_poly()) throw Error("zero polynomial rejected as ideal generator");
            require_same_ring(r, g.ring());
        }
        return Ideal{std::move(r), std::move(gs)};
    }

    static Ideal zero(RingPtr r) { return Ideal{std::move(r), {}}; }

    bool is_zero_ideal() const { return gens.empty(); }

    bool is_homogeneous() const {
        for (const auto& g : gens)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    Ideal plus(const std::vector<QPoly>& more) const {
        std::vector<QPoly> gs = gens;
        for (const auto& g : more) {
            if (g.is_zero_poly()) throw Error("zero polynomial rejected as ideal generator");
            gs.push_back(g);
        }
        return Ideal{ring, std::move(gs)};
    }

    /// Stable content hash of (ring, generators) for caching.
    std::string hash_key(const std::string& salt = "") const {
        std::vector<std::string> strs;
        strs.reserve(gens.size());
        for (const auto& g : gens) strs.push_back(to_string(g));
        std::sort(strs.begin(), strs.end());
        std::uint64_t h = fnv1a64(salt);
        for (const auto& n : ring->names) h = fnv1a64(n + "|", h);
        for (const auto& s : strs) h = fnv1a64(s + ";", h);
        return hex64(h);
    }
};

/// Reduced Groebner basis of an ideal under a fixed order; unique for the
/// (ideal, order) pair with leading coefficients normalized to 1.
struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<QPoly> basis;
    std::uint64_t steps = 0;

    bool is_unit() const {
        return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero_poly();
    }
    bool is_zero() const { return basis.empty(); }
};

inline GroebnerBasis groebner(const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex(),
                              const GbOptions& opt = {}) {
    std::string key = I.hash_key(ord.tag());
    if (auto hit = GbCache::instance().lookup(key, I.ring))
        return GroebnerBasis{I, ord, std::move(*hit), 0};
    auto res = buchberger_basis<Rat>(I.gens, ord, opt);
    GbCache::instance().store(key, I.ring, res.basis);
    return GroebnerBasis{I, ord, std::move(res.basis), res.steps};
}

inline QPoly normal_form(const QPoly& f, const GroebnerBasis& G, const GbOptions& opt = {}) {
    require_same_ring(f.ring(), G.ideal.ring);
    return normal_form_against(f, G.basis, G.order, opt);
}

inline bool is_unit_ideal(const Ideal& I, const GbOptions& opt = {}) {
    return groebner(I, MonomialOrder::grevlex(), opt).is_unit();
}

/// Ideal equality as equality of reduced graded-reverse-lex bases.
inline bool ideal_equal(const Ideal& I, const Ideal& J, const GbOptions& opt = {}) {
    if (!same_ring(I.ring, J.ring)) return false;
    auto a = groebner(I, MonomialOrder::grevlex(), opt);
    auto b = groebner(J, MonomialOrder::grevlex(), opt);
    return a.basis == b.basis;
}

namespace detail {

inline RingPtr extend_ring(const RingPtr& r, const std::string& extra) {
    auto names = r->names;
    std::string name = extra;
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    names.push_back(name);
    return make_ring(std::move(names));
}

inline QPoly lift_to(const QPoly& p, const RingPtr& target, std::size_t offset = 0) {
    // Embeds p into a bigger ring, mapping variable i to variable i + offset.
    std::vector<QPoly::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> e(target->nvars(), 0);
        for (std::size_t i = 0; i < m.nvars(); ++i) e[i + offset] = m[i];
        ts.emplace_back(Monomial::of(std::move(e)), c);
    }
    return QPoly::from_terms(target, std::move(ts));
}

}  // namespace detail

/// Radical membership by the extended-ring trick: f lies in the radical of I
/// iff 1 lies in I + (1 - y*f), i.e. iff f vanishes identically on V(I).
inline bool radical_membership(const QPoly& f, const Ideal& I, const GbOptions& opt = {}) {
    require_same_ring(f.ring(), I.ring);
    RingPtr ext = detail::extend_ring(I.ring, "y");
    std::size_t yi = ext->nvars() - 1;
    std::vector<QPoly> gens;
    gens.reserve(I.gens.size() + 1);
    for (const auto& g : I.gens) gens.push_back(detail::lift_to(g, ext));
    QPoly one = QPoly::constant(ext, Rat(1));
    QPoly y = QPoly::variable(ext, yi, Rat(1));
    QPoly trick = one - y * detail::lift_to(f, ext);
    if (trick.is_zero_poly()) return true;
    gens.push_back(trick);
    auto res = buchberger_basis<Rat>(gens, MonomialOrder::grevlex(), opt);
    return res.is_unit();
}

/// Generators of I intersected with the subring in the kept variables,
/// computed with a block elimination order. Returns an ideal in a ring made
/// of the kept variable names; it defines the Zariski closure of the image
/// of V(I) under the coordinate projection.
inline Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop,
                       const GbOptions& opt = {}) {
    std::size_t n = I.ring->nvars();
    if (drop.empty()) return I;
    if (drop.size() >= n) throw Error("cannot eliminate every variable");
    std::vector<std::size_t> perm;  // position in permuted ring -> original index
    for (auto i : drop) perm.push_back(i);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i)
        if (!drop.count(i)) {
            perm.push_back(i);
            kept.push_back(i);
        }
    std::vector<std::string> perm_names;
    for (auto i : perm) perm_names.push_back(I.ring->names[i]);
    RingPtr perm_ring = make_ring(perm_names);
    std::vector<std::size_t> inv(n);
    for (std::size_t pos = 0; pos < n; ++pos) inv[perm[pos]] = pos;

    std::vector<QPoly> gens;
    gens.reserve(I.gens.size());
    for (const auto& g : I.gens) {
        std::vector<QPoly::Term> ts;
        for (const auto& [m, c] : g.terms()) {
            std::vector<std::uint32_t> e(n, 0);
            for (std::size_t i = 0; i < n; ++i) e[inv[i]] = m[i];
            ts.emplace_back(Monomial::of(std::move(e)), c);
        }
        gens.push_back(QPoly::from_terms(perm_ring, std::move(ts)));
    }

    auto res = buchberger_basis<Rat>(gens, MonomialOrder::block(drop.size()), opt);

    std::vector<std::string> kept_names;
    for (auto i : kept) kept_names.push_back(I.ring->names[i]);
    RingPtr kept_ring = make_ring(kept_names);
    std::vector<QPoly> out;
    for (const auto& b : res.basis) {
        bool pure = true;
        for (const auto& [m, c] : b.terms())
            for (std::size_t pos = 0; pos < drop.size() && pure; ++pos)
                if (m[pos] > 0) pure = false;
        if (!pure) continue;
        std::vector<QPoly::Term> ts;
        for (const auto& [m, c] : b.terms()) {
            std::vector<std::uint32_t> e(kept.size());
            for (std::size_t j = 0; j < kept.size(); ++j) e[j] = m[drop.size() + j];
            ts.emplace_back(Monomial::of(std::move(e)), c);
        }
        out.push_back(QPoly::from_terms(kept_ring, std::move(ts)));
    }
    return Ideal{kept_ring, std::move(out)};
}

/// Rebuilds an ideal over a ring with the same arity but different names.
inline Ideal rename_ideal(const Ideal& I, const RingPtr& target) {
    if (target->nvars() != I.ring->nvars()) throw RingMismatch("rename requires equal arity");
    std::vector<QPoly> gens;
    gens.reserve(I.gens.size());
    for (const auto& g : I.gens) gens.push_back(detail::lift_to(g, target));
    return Ideal{target, std::move(gens)};
}

/// I ∩ J via the one-extra-variable construction t*I + (1-t)*J.
inline Ideal intersect_ideals(const Ideal& I, const Ideal& J, const GbOptions& opt = {}) {
    require_same_ring(I.ring, J.ring);
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ring);
    RingPtr ext = detail::extend_ring(I.ring, "t");
    std::size_t ti = ext->nvars() - 1;
    QPoly t = QPoly::variable(ext, ti, Rat(1));
    QPoly one_minus_t = QPoly::constant(ext, Rat(1)) - t;
    std::vector<QPoly> gens;
    for (const auto& g : I.gens) gens.push_back(t * detail::lift_to(g, ext));
    for (const auto& g : J.gens) gens.push_back(one_minus_t * detail::lift_to(g, ext));
    Ideal big{ext, std::move(gens)};
    Ideal cut = eliminate(big, {ti}, opt);
    return rename_ideal(cut, I.ring);
}

namespace detail {

/// Maximum size of a set S of variables such that no support is contained in
/// S; this is the affine (Krull) dimension of the monomial ideal's quotient.
inline int max_independent_set(const std::vector<std::vector<bool>>& supports, std::size_t n) {
    for (const auto& s : supports) {
        bool empty_support = true;
        for (bool b : s)
            if (b) empty_support = false;
        if (empty_support) return -1;  // unit ideal
    }
    int best = -1;
    std::vector<std::size_t> chosen;
    // DFS over variables with branch-and-bound.
    auto contained = [&](const std::vector<bool>& sup, const std::vector<bool>& in_set) {
        for (std::size_t i = 0; i < n; ++i)
            if (sup[i] && !in_set[i]) return false;
        return true;
    };
    std::vector<bool> in_set(n, false);
    std::function<void(std::size_t, int)> dfs = [&](std::size_t var, int count) {
        if (count + static_cast<int>(n - var) <= best) return;  // bound
        if (var == n) {
            if (count > best) best = count;
            return;
        }
        // try including var
        in_set[var] = true;
        bool ok = true;
        for (const auto& s : supports)
            if (s[var] && contained(s, in_set)) {
                ok = false;
                break;
            }
        if (ok) dfs(var + 1, count + 1);
        in_set[var] = false;
        dfs(var + 1, count);
    };
    dfs(0, 0);
    return best;
}

inline std::vector<std::vector<bool>> leading_supports(const std::vector<QPoly>& basis,
                                                       const MonomialOrder& ord) {
    std::vector<std::vector<bool>> out;
    for (const auto& b : basis) {
        const Monomial* lead = nullptr;
        for (const auto& [m, c] : b.terms())
            if (!lead || ord.greater(m, *lead)) lead = &m;
        if (!lead) continue;
        std::vector<bool> sup(b.ring()->nvars(), false);
        for (std::size_t i = 0; i < sup.size(); ++i) sup[i] = (*lead)[i] > 0;
        out.push_back(std::move(sup));
    }
    return out;
}

}  // namespace detail

/// Affine (cone) dimension of V(I); -1 when the variety is empty.
inline int affine_dimension(const Ideal& I, const GbOptions& opt = {}) {
    auto G = groebner(I, MonomialOrder::grevlex(), opt);
    if (G.is_unit()) return -1;
    if (G.is_zero()) return static_cast<int>(I.ring->nvars());
    auto sups = detail::leading_supports(G.basis, G.order);
    return detail::max_independent_set(sups, I.ring->nvars());
}

/// Dimension of V(I) in projective space: cone dimension minus one. The
/// ideal must be homogeneous and proper.
inline int projective_dimension(const Ideal& I, const GbOptions& opt = {}) {
    if (!I.is_homogeneous()) throw Error("projective dimension needs a homogeneous ideal");
    int cone = affine_dimension(I, opt);
    if (cone < 0) throw EmptyVariety();
    return cone - 1;
}

inline bool contains_point(const Ideal& I, const ProjPoint& p) {
    return vanishes_at(I.gens, p);
}

}  // namespace hstar
