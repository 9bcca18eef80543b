#pragma once

#include <optional>
#include <vector>

#include "hstar/linalg.hpp"
#include "hstar/projpoint.hpp"
#include "hstar/rng.hpp"

namespace hstar {

/// Polynomial map from parameter space to the coordinates of an ambient
/// projective space. `scaling_included` marks maps whose last parameter is an
/// explicit global scale, so the image is a cone and projective dimension is
/// Jacobian rank minus one, uniformly.
struct Parametrization {
    RingPtr params;
    std::vector<QPoly> coords;
    bool scaling_included = false;

    std::size_t param_count() const { return params->nvars(); }
    int ambient_N() const { return static_cast<int>(coords.size()) - 1; }

    /// Projectivized univariate curve: two parameters, all coordinates
    /// homogeneous of one degree.
    bool is_projective_curve() const {
        if (param_count() != 2) return false;
        std::int64_t d = -1;
        for (const auto& c : coords) {
            if (!c.is_homogeneous()) return false;
            if (c.is_zero_poly()) continue;
            if (d < 0) d = c.degree();
            if (c.degree() != d) return false;
        }
        return d >= 0;
    }

    static Parametrization make(RingPtr ring, std::vector<QPoly> coords) {
        bool all_zero = true;
        for (const auto& c : coords) {
            require_same_ring(ring, c.ring());
            if (!c.is_zero_poly()) all_zero = false;
        }
        if (all_zero) throw Error("parametrization must have a nonzero coordinate map");
        return Parametrization{std::move(ring), std::move(coords), false};
    }
};

/// Parameter-level Hadamard power: m independent parameter blocks multiplied
/// coordinate-wise, with one explicit scale parameter appended.
inline Parametrization power_param(const Parametrization& P, int m) {
    if (m < 1) throw Error("power needs m >= 1");
    std::size_t k = P.param_count();
    std::vector<std::string> names;
    for (int b = 0; b < m; ++b)
        for (std::size_t i = 0; i < k; ++i)
            names.push_back("t" + std::to_string(b * static_cast<int>(k) + static_cast<int>(i)));
    names.push_back("lam");
    RingPtr big = make_ring(std::move(names));
    std::size_t lambda = big->nvars() - 1;

    std::vector<QPoly> coords;
    for (const auto& f : P.coords) {
        QPoly acc = QPoly::variable(big, lambda, Rat(1));
        for (int b = 0; b < m; ++b) {
            // embed f with variables shifted into block b
            std::vector<QPoly::Term> ts;
            for (const auto& [mono, c] : f.terms()) {
                std::vector<std::uint32_t> e(big->nvars(), 0);
                for (std::size_t i = 0; i < k; ++i)
                    e[static_cast<std::size_t>(b) * k + i] = mono[i];
                ts.emplace_back(Monomial::of(std::move(e)), c);
            }
            acc = acc * QPoly::from_terms(big, std::move(ts));
        }
        coords.push_back(acc);
    }
    return Parametrization{big, std::move(coords), true};
}

/// Dimension of the closure of the image, as the exact rank of the Jacobian
/// of the cone map at random rational parameters, minus one. Special points
/// can only undershoot, so the maximum over trials is taken; correct with
/// probability one per trial and reproducible for a fixed seed.
inline int jacobian_dimension(const Parametrization& P, Rng& rng, int trials = 3,
                              std::int64_t height = 100) {
    Parametrization Q = P.scaling_included ? P : power_param(P, 1);
    std::size_t k = Q.param_count();
    std::size_t rows = Q.coords.size();
    std::vector<std::vector<QPoly>> jac(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < k; ++j) jac[i].push_back(Q.coords[i].derivative(j));

    int best = -1;
    int degenerate = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<Rat> point;
        for (std::size_t j = 0; j + 1 < k; ++j) point.push_back(rng.rat_int(height));
        point.push_back(rng.rat_nonzero(height));  // scale parameter stays nonzero
        bool image_zero = true;
        for (const auto& f : Q.coords)
            if (!is_zero(f.evaluate(point))) image_zero = false;
        if (image_zero) {
            ++degenerate;
            continue;
        }
        QMatrix J(rows, k);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < k; ++j) J.at(i, j) = jac[i][j].evaluate(point);
        int r = static_cast<int>(rank(std::move(J)));
        if (r - 1 > best) best = r - 1;
    }
    if (degenerate == trials) throw AllSamplesDegenerate();
    return best;
}

/// Least m with the m-th power filling the ambient space, probed by exact
/// Jacobian ranks; nullopt when max_m is not enough.
inline std::optional<int> generic_rank_estimate(const Parametrization& P, int max_m, Rng& rng,
                                                int trials = 3, std::int64_t height = 100) {
    int N = P.ambient_N();
    for (int m = 1; m <= max_m; ++m)
        if (jacobian_dimension(power_param(P, m), rng, trials, height) == N) return m;
    return std::nullopt;
}

/// Coefficient vector of a binary form of declared degree d, highest power
/// of the first variable first.
inline std::vector<Rat> binary_form_coeffs(const QPoly& f, int d) {
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
    for (const auto& [m, coef] : f.terms()) {
        if (static_cast<int>(m.degree()) != d) throw Error("not a binary form of the declared degree");
        c[static_cast<std::size_t>(d) - m[0]] = coef;
    }
    return c;
}

/// Resultant of two binary forms of declared degrees (d, e) via the Sylvester
/// determinant of the padded coefficient sequences; vanishes iff the forms
/// share a projective root, the point at infinity included.
inline Rat binary_resultant(const QPoly& f, const QPoly& g, int d, int e) {
    auto a = binary_form_coeffs(f, d);
    auto b = binary_form_coeffs(g, e);
    std::size_t n = static_cast<std::size_t>(d + e);
    QMatrix S(n, n);
    for (int row = 0; row < e; ++row)
        for (int col = 0; col <= d; ++col)
            S.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + col)) =
                a[static_cast<std::size_t>(col)];
    for (int row = 0; row < d; ++row)
        for (int col = 0; col <= e; ++col)
            S.at(static_cast<std::size_t>(e + row), static_cast<std::size_t>(row + col)) =
                b[static_cast<std::size_t>(col)];
    return det(std::move(S));
}

/// Certificate that a projectivized curve misses the locus of points with at
/// least two zero coordinates: all pairwise resultants of the coordinate
/// forms are nonzero. A failing pair is reported when it exists.
struct DeltaCheck {
    bool avoids = false;
    /// (i, j, Res(f_i, f_j)) for all pairs; each nonzero when avoids holds.
    std::vector<std::tuple<std::size_t, std::size_t, Rat>> resultants;
};

/// Decides emptiness of the intersection with Delta_k for a projectivized
/// curve in the curve regime k = N-2: no parameter value, the point at
/// infinity included, may kill two coordinates simultaneously, which is
/// exactly the nonvanishing of all pairwise resultants.
inline DeltaCheck check_avoids_delta(const Parametrization& P, int k) {
    if (!P.is_projective_curve())
        throw NotACurveParam("needs two parameters and equal-degree homogeneous coordinates");
    int N = P.ambient_N();
    if (k != N - 2) throw NotACurveParam("only the curve regime k = N-2 is decided here");
    int d = -1;
    for (const auto& c : P.coords)
        if (!c.is_zero_poly()) d = static_cast<int>(c.degree());
    DeltaCheck out;
    out.avoids = true;
    for (std::size_t i = 0; i < P.coords.size(); ++i)
        for (std::size_t j = i + 1; j < P.coords.size(); ++j) {
            Rat r;
            if (P.coords[i].is_zero_poly() || P.coords[j].is_zero_poly())
                r = Rat(0);
            else
                r = binary_resultant(P.coords[i], P.coords[j], d, d);
            if (is_zero(r)) out.avoids = false;
            out.resultants.emplace_back(i, j, std::move(r));
        }
    return out;
}

/// Exact rational point on the image (before closure); all-zero samples are
/// redrawn.
inline ProjPoint sample_point(const Parametrization& P, Rng& rng, std::int64_t height = 100,
                              int retries = 64) {
    for (int t = 0; t < retries; ++t) {
        std::vector<Rat> point;
        for (std::size_t j = 0; j < P.param_count(); ++j) point.push_back(rng.rat_int(height));
        std::vector<Rat> img;
        bool nonzero = false;
        for (const auto& f : P.coords) {
            Rat v = f.evaluate(point);
            if (!is_zero(v)) nonzero = true;
            img.push_back(std::move(v));
        }
        if (nonzero) return ProjPoint::rational(std::move(img));
    }
    throw WitnessNotFound("all sampled parameter points mapped to zero");
}

}  // namespace hstar
