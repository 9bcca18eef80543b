#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hstar/ideal.hpp"
#include "hstar/linalg.hpp"
#include "hstar/rng.hpp"

namespace hstar {

/// One exact solution of an affine zero-dimensional system.
struct AffineSolution {
    std::vector<AlgNum> coords;
    int multiplicity = 1;

    bool all_rational() const {
        for (const auto& c : coords)
            if (!const_cast<AlgNum&>(c).try_rationalize()) return false;
        return true;
    }
};

namespace detail {

struct QuotientBasis {
    std::vector<Monomial> monomials;
    std::map<std::vector<std::uint32_t>, std::size_t> index;

    std::size_t dim() const { return monomials.size(); }
};

/// Standard monomials of a zero-dimensional leading-term ideal.
inline std::optional<QuotientBasis> standard_monomials(const GroebnerBasis& G) {
    std::size_t n = G.ideal.ring->nvars();
    std::vector<Monomial> leads;
    for (const auto& b : G.basis) {
        const Monomial* lead = nullptr;
        for (const auto& [m, c] : b.terms())
            if (!lead || G.order.greater(m, *lead)) lead = &m;
        if (lead) leads.push_back(*lead);
    }
    // Zero-dimensionality: every variable has a pure power among the leads.
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& lm : leads) {
            bool pure = lm[i] > 0;
            for (std::size_t k = 0; k < n && pure; ++k)
                if (k != i && lm[k] > 0) pure = false;
            if (pure) {
                if (!found || lm[i] < bound[i]) bound[i] = lm[i];
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    QuotientBasis qb;
    std::vector<std::uint32_t> cur(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t var) {
        if (var == n) {
            Monomial m = Monomial::of(cur);
            for (const auto& lm : leads)
                if (lm.divides(m)) return;
            qb.index.emplace(cur, qb.monomials.size());
            qb.monomials.push_back(std::move(m));
            return;
        }
        for (cur[var] = 0; cur[var] < bound[var]; ++cur[var]) rec(var + 1);
        cur[var] = 0;
    };
    rec(0);
    return qb;
}

inline std::vector<Rat> nf_vector(const QPoly& f, const GroebnerBasis& G, const QuotientBasis& qb,
                                  const GbOptions& opt) {
    QPoly nf = normal_form(f, G, opt);
    std::vector<Rat> v(qb.dim(), Rat(0));
    for (const auto& [m, c] : nf.terms()) {
        auto it = qb.index.find(m.exponents());
        if (it == qb.index.end()) throw Error("normal form left the standard monomial basis");
        v[it->second] = c;
    }
    return v;
}

/// Minimal polynomial of the multiplication-by-f image of 1 in the quotient:
/// the monic generator of the univariate ideal of relations among 1, f, f^2...
inline UPoly element_min_poly(const QPoly& f, const GroebnerBasis& G, const QuotientBasis& qb,
                              const GbOptions& opt) {
    std::size_t D = qb.dim();
    std::vector<std::vector<Rat>> powers;  // nf vectors of f^k
    // Incremental Gaussian elimination state: pivots[i] = (vector, combo)
    struct Row {
        std::vector<Rat> v;
        std::vector<Rat> combo;  // coefficients over powers
        std::size_t pivot;
    };
    std::vector<Row> rows;
    QPoly fk = QPoly::constant(f.ring(), Rat(1));
    for (std::size_t k = 0; k <= D; ++k) {
        std::vector<Rat> v = nf_vector(fk, G, qb, opt);
        std::vector<Rat> combo(k + 1, Rat(0));
        combo[k] = 1;
        // reduce against pivots
        for (const auto& r : rows) {
            if (is_zero(v[r.pivot])) continue;
            Rat factor = v[r.pivot];
            for (std::size_t i = 0; i < D; ++i) v[i] -= factor * r.v[i];
            for (std::size_t i = 0; i < r.combo.size() && i <= k; ++i)
                combo[i] -= factor * r.combo[i];
        }
        std::size_t piv = D;
        for (std::size_t i = 0; i < D; ++i)
            if (!is_zero(v[i])) {
                piv = i;
                break;
            }
        if (piv == D) {
            // dependence: combo gives the minimal polynomial coefficients
            return UPoly(std::move(combo)).monic();
        }
        Rat inv = Rat(1) / v[piv];
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back(Row{std::move(v), std::move(combo), piv});
        fk = fk * f;
    }
    throw Error("no linear dependence found in a finite quotient");
}

}  // namespace detail

/// Exact solutions over the complex numbers of an affine zero-dimensional
/// system, with multiplicities. Coordinates come out rational whenever the
/// point is rational, otherwise as residues in one primitive element per
/// solve (shape-lemma form; a random sheared coordinate is used when no
/// plain coordinate separates the points).
inline std::vector<AffineSolution> solve_zero_dimensional(const Ideal& I, Rng& rng,
                                                          const GbOptions& opt = {},
                                                          bool with_multiplicities = true) {
    std::size_t n = I.ring->nvars();
    auto G = groebner(I, MonomialOrder::grevlex(), opt);
    if (G.is_unit()) return {};
    auto qb = detail::standard_monomials(G);
    if (!qb) throw NotZeroDimensional();
    std::size_t D = qb->dim();

    // Radical via the squarefree parts of the per-variable eliminants.
    std::vector<QPoly> rad_gens = I.gens;
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
        UPoly hi = detail::element_min_poly(QPoly::variable(I.ring, i, Rat(1)), G, *qb, opt);
        UPoly sf = squarefree_part(hi);
        if (sf.degree() < hi.degree()) changed = true;
        // embed sf(x_i) as a multivariate polynomial
        std::vector<QPoly::Term> ts;
        for (int d = 0; d <= sf.degree(); ++d) {
            Rat c = sf.coeff(static_cast<std::size_t>(d));
            if (is_zero(c)) continue;
            ts.emplace_back(Monomial::variable(n, i, static_cast<std::uint32_t>(d)), c);
        }
        rad_gens.push_back(QPoly::from_terms(I.ring, std::move(ts)));
    }
    Ideal Irad = changed ? Ideal::make(I.ring, rad_gens) : I;
    auto Grad = changed ? groebner(Irad, MonomialOrder::grevlex(), opt) : G;
    auto qbrad = changed ? detail::standard_monomials(Grad) : qb;
    if (!qbrad) throw NotZeroDimensional();
    std::size_t Drad = qbrad->dim();

    // Separating element: try single variables, then random shears.
    QPoly sep = QPoly::zero(I.ring);
    UPoly h_t;
    bool found = false;
    std::vector<QPoly> candidates;
    for (std::size_t i = n; i-- > 0;) candidates.push_back(QPoly::variable(I.ring, i, Rat(1)));
    for (int trial = 0; trial < 24 && !found; ++trial) {
        QPoly t;
        if (trial < static_cast<int>(candidates.size())) {
            t = candidates[static_cast<std::size_t>(trial)];
        } else {
            t = QPoly::zero(I.ring);
            for (std::size_t i = 0; i < n; ++i)
                t = t + QPoly::variable(I.ring, i, rng.rat_int(10 + 5 * trial));
        }
        if (t.is_zero_poly()) continue;
        UPoly h = detail::element_min_poly(t, Grad, *qbrad, opt);
        if (h.degree() == static_cast<int>(Drad)) {
            sep = t;
            h_t = h;
            found = true;
        }
    }
    if (!found) throw Error("no separating element found for the solution set");

    // Coordinate functions: x_i = g_i(t) modulo the radical.
    std::vector<std::vector<Rat>> power_cols;
    QPoly tk = QPoly::constant(I.ring, Rat(1));
    for (std::size_t j = 0; j < Drad; ++j) {
        power_cols.push_back(detail::nf_vector(tk, Grad, *qbrad, opt));
        tk = tk * sep;
    }
    std::vector<UPoly> coord_fn;
    for (std::size_t i = 0; i < n; ++i) {
        auto rhs = detail::nf_vector(QPoly::variable(I.ring, i, Rat(1)), Grad, *qbrad, opt);
        auto sol = solve_columns(power_cols, rhs);
        if (!sol) throw Error("coordinate recovery failed");
        coord_fn.push_back(UPoly(std::move(*sol)));
    }

    // Multiplicities via the characteristic polynomial of multiplication by
    // the separating element on the original quotient.
    std::vector<UPoly> sqf_layers;
    bool need_mult = (D != Drad);
    if (need_mult) {
        QMatrix M(D, D);
        for (std::size_t j = 0; j < D; ++j) {
            QPoly bj = QPoly::term(I.ring, qb->monomials[j], Rat(1));
            auto col = detail::nf_vector(bj * sep, G, *qb, opt);
            for (std::size_t i = 0; i < D; ++i) M.at(i, j) = col[i];
        }
        UPoly cp = char_poly(M);
        sqf_layers = squarefree_decomposition(cp);
    }
    auto multiplicity_of = [&](const AlgNum& tval) -> int {
        if (!need_mult) return 1;
        for (std::size_t k = 0; k < sqf_layers.size(); ++k) {
            if (sqf_layers[k].degree() < 1) continue;
            AlgNum acc(Rat(0));
            for (int d2 = sqf_layers[k].degree(); d2 >= 0; --d2)
                acc = acc * tval + AlgNum(sqf_layers[k].coeff(static_cast<std::size_t>(d2)));
            if (is_zero(acc)) return static_cast<int>(k) + 1;
        }
        return 1;
    };

    // Roots of the squarefree eliminant, rational ones simplified.
    std::vector<AffineSolution> out;
    auto fields = isolate_roots(h_t);
    for (auto& F : fields) {
        AlgNum theta = AlgNum::primitive(F);
        std::optional<Rat> rational;
        if (F->exact_value()) {
            rational = *F->exact_value();
        } else if (F->is_real()) {
            RealRootInterval iv{F->box().re.lo, F->box().re.hi};
            rational = rational_root_in(h_t, iv);
        }
        AffineSolution s;
        if (rational) {
            for (std::size_t i = 0; i < n; ++i) s.coords.emplace_back(coord_fn[i](*rational));
            s.multiplicity = multiplicity_of(AlgNum(*rational));
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                AlgNum v(F, coord_fn[i]);
                v.try_rationalize();
                s.coords.push_back(std::move(v));
            }
            s.multiplicity = multiplicity_of(theta);
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// Exact points of a zero-dimensional projective variety. Solutions are
/// gathered chart by chart, keyed by the first nonzero coordinate, so each
/// point appears exactly once.
inline std::vector<std::pair<ProjPoint, int>> solve_projective(const Ideal& I, Rng& rng,
                                                               const GbOptions& opt = {}) {
    std::size_t n = I.ring->nvars();
    std::vector<std::pair<ProjPoint, int>> out;
    for (std::size_t chart = 0; chart < n; ++chart) {
        std::size_t rest = n - chart - 1;
        RingPtr sub = rest == 0 ? make_ring({"u"}) : [&] {
            std::vector<std::string> names;
            for (std::size_t i = chart + 1; i < n; ++i) names.push_back(I.ring->names[i]);
            return make_ring(std::move(names));
        }();
        // images: x_k -> 0 (k < chart), x_chart -> 1, x_k -> subring var
        std::vector<QPoly> images;
        for (std::size_t k = 0; k < n; ++k) {
            if (k < chart)
                images.push_back(QPoly::zero(sub));
            else if (k == chart)
                images.push_back(QPoly::constant(sub, Rat(1)));
            else
                images.push_back(QPoly::variable(sub, k - chart - 1, Rat(1)));
        }
        std::vector<QPoly> gens;
        bool unit_chart = false;
        for (const auto& g : I.gens) {
            QPoly h = g.substitute(sub, images);
            if (h.is_zero_poly()) continue;
            if (h.is_constant()) {
                unit_chart = true;
                break;
            }
            gens.push_back(h);
        }
        if (unit_chart) continue;
        if (rest == 0) {
            // Nothing left to solve; the chart point exists iff no generator
            // survived (all reduced to zero).
            if (gens.empty()) {
                std::vector<Rat> coords(n, Rat(0));
                coords[chart] = 1;
                out.emplace_back(ProjPoint::rational(coords), 1);
            }
            continue;
        }
        Ideal sys = Ideal::make(sub, gens);
        if (affine_dimension(sys, opt) > 0) throw NotZeroDimensional();
        for (auto& sol : solve_zero_dimensional(sys, rng, opt)) {
            std::vector<AlgNum> coords;
            for (std::size_t k = 0; k < chart; ++k) coords.emplace_back(Rat(0));
            coords.emplace_back(Rat(1));
            for (auto& c : sol.coords) coords.push_back(std::move(c));
            out.emplace_back(ProjPoint(std::move(coords)), sol.multiplicity);
        }
    }
    return out;
}

}  // namespace hstar
