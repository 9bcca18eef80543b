#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hstar/conciseness.hpp"
#include "hstar/hadamard.hpp"
#include "hstar/io.hpp"
#include "hstar/param.hpp"
#include "hstar/rank.hpp"

namespace hstar {

/// A named variety with an ideal and/or a parametrization.
struct ZooEntry {
    std::string name;
    std::string summary;
    std::optional<Ideal> ideal;
    std::optional<Parametrization> param;
};

/// Exponent tuples of total degree d over `nvars` variables, descending
/// lexicographic; the canonical coordinate order for spaces of forms.
inline std::vector<std::vector<std::uint32_t>> exponents_of_degree(int d, std::size_t nvars) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(nvars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int rest) {
        if (var == nvars - 1) {
            cur[var] = static_cast<std::uint32_t>(rest);
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[var] = static_cast<std::uint32_t>(e);
            rec(var + 1, rest - e);
        }
        cur[var] = 0;
    };
    if (nvars == 0) return out;
    rec(0, d);
    return out;
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int multinomial(int top, const std::vector<std::uint32_t>& parts) {
    Int f = factorial(top);
    for (auto p : parts) f /= factorial(static_cast<int>(p));
    return f;
}

// ---------------------------------------------------------------------------
// Binomial hypersurfaces x1^d = c x0^(d-1) xN
// ---------------------------------------------------------------------------

/// Ideal of the m-th Hadamard power in closed form: x1^d - c^m x0^(d-1) xN.
inline Ideal closed_power(int d, int N, const Rat& c, int m) {
    if (d < 1 || N < 2) throw Error("binomial hypersurface needs d >= 1, N >= 2");
    if (is_zero(c)) throw Error("the constant c must be nonzero");
    if (m < 1) throw Error("closed power defined for m >= 1");
    RingPtr ring = projective_ring(N);
    std::size_t n = ring->nvars();
    QPoly lhs = QPoly::term(ring, Monomial::variable(n, 1, static_cast<std::uint32_t>(d)), Rat(1));
    std::vector<std::uint32_t> e(n, 0);
    e[0] = static_cast<std::uint32_t>(d - 1);
    e[n - 1] = 1;
    QPoly rhs = QPoly::term(ring, Monomial::of(e), rat_pow(c, static_cast<unsigned long>(m)));
    return Ideal::make(ring, {lhs - rhs});
}

/// The hypersurface with its denominator-cleared rational parametrization
/// (solving the binomial for the last coordinate).
inline ZooEntry binomial_hypersurface(int d, int N, const Rat& c) {
    ZooEntry entry;
    entry.name = "binomial-" + std::to_string(d) + "-" + std::to_string(N);
    entry.summary = "binomial hypersurface x1^" + std::to_string(d) + " = " + rat_to_string(c) +
                    "*x0^" + std::to_string(d - 1) + "*x" + std::to_string(N);
    entry.ideal = closed_power(d, N, c, 1);
    RingPtr pring = param_ring(N);
    std::size_t np = pring->nvars();
    std::vector<QPoly> coords;
    // (c t0^d : c t0^(d-1) t1 : ... : c t0^(d-1) t_(N-1) : t1^d)
    coords.push_back(
        QPoly::term(pring, Monomial::variable(np, 0, static_cast<std::uint32_t>(d)), c));
    for (int i = 1; i <= N - 1; ++i) {
        std::vector<std::uint32_t> e(np, 0);
        e[0] = static_cast<std::uint32_t>(d - 1);
        e[static_cast<std::size_t>(i)] += 1;
        coords.push_back(QPoly::term(pring, Monomial::of(e), c));
    }
    coords.push_back(
        QPoly::term(pring, Monomial::variable(np, 1, static_cast<std::uint32_t>(d)), Rat(1)));
    entry.param = Parametrization::make(pring, std::move(coords));
    return entry;
}

// ---------------------------------------------------------------------------
// The three worked conics in P^2
// ---------------------------------------------------------------------------

inline ZooEntry conic_Q() {
    ZooEntry e;
    e.name = "conic-q";
    e.summary = "concise conic with infinite-rank points on every axis";
    RingPtr ring = projective_ring(2);
    e.ideal = Ideal::make(ring, {parse_polynomial("x0*x1 + x0*x2 + x1*x2", ring)});
    RingPtr p = param_ring(2);
    // chord construction through (1:0:0)
    e.param = Parametrization::make(
        p, {parse_polynomial("t0*t1", p), parse_polynomial("-t0*(t0 + t1)", p),
            parse_polynomial("-t1*(t0 + t1)", p)});
    return e;
}

inline ZooEntry conic_C() {
    ZooEntry e;
    e.name = "conic-c";
    e.summary = "strongly concise conic tangent to the first coordinate line";
    RingPtr ring = projective_ring(2);
    e.ideal = Ideal::make(ring, {parse_polynomial("x0*(x1 + x2) + (x1 - x2)^2", ring)});
    RingPtr p = param_ring(2);
    // chord construction through (0:1:1)
    e.param = Parametrization::make(
        p, {parse_polynomial("-2*t0^2", p), parse_polynomial("t1*(t1 - t0)", p),
            parse_polynomial("t1*(t1 + t0)", p)});
    return e;
}

/// A smooth conic through (1:1:0), (1:0:3), (0:2:1) that avoids all three
/// coordinate points, so products of two of its points reach the coordinate
/// points of the plane but single points never do.
inline ZooEntry conic_C_sharp() {
    ZooEntry e;
    e.name = "conic-c-sharp";
    e.summary = "coordinate-point-free conic realizing the sharp rank bound";
    RingPtr ring = projective_ring(2);
    e.ideal = Ideal::make(
        ring, {parse_polynomial("-3*x0^2 - 2*x1^2 + 4*x2^2 + 5*x0*x1 - 11*x0*x2 + 2*x1*x2", ring)});
    RingPtr p = param_ring(2);
    // chord construction through (1:1:0)
    e.param = Parametrization::make(
        p, {parse_polynomial("-2*t0^2 + 2*t0*t1 + 4*t1^2", p),
            parse_polynomial("-3*t0^2 + 11*t0*t1 + 4*t1^2", p),
            parse_polynomial("9*t1^2 - t0*t1", p)});
    return e;
}

// ---------------------------------------------------------------------------
// Grassmannians in Pluecker coordinates
// ---------------------------------------------------------------------------

inline std::vector<std::vector<std::size_t>> column_subsets(int k, int n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t c = start; c < static_cast<std::size_t>(n); ++c) {
            cur.push_back(c);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

template <class T>
T laplace_det(std::vector<std::vector<T>> m, const T& zero) {
    std::size_t k = m.size();
    if (k == 1) return m[0][0];
    T acc = zero;
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<std::vector<T>> minor;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r) continue;
            std::vector<T> row;
            for (std::size_t j = 1; j < k; ++j) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        T term = m[r][0] * laplace_det(minor, zero);
        acc = (r % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Pluecker parametrization: a k x n parameter matrix mapped to its maximal
/// minors, column subsets in lexicographic order.
inline Parametrization grassmannian_param(int k, int n) {
    if (k < 1 || k >= n) throw Error("grassmannian needs 1 <= k < n");
    RingPtr pring = param_ring(k * n);
    auto entry = [&](int r, std::size_t c) {
        return QPoly::variable(pring, static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + c,
                               Rat(1));
    };
    std::vector<QPoly> coords;
    for (const auto& cols : column_subsets(k, n)) {
        std::vector<std::vector<QPoly>> m;
        for (int r = 0; r < k; ++r) {
            std::vector<QPoly> row;
            for (auto c : cols) row.push_back(entry(r, c));
            m.push_back(std::move(row));
        }
        coords.push_back(laplace_det(m, QPoly::zero(pring)));
    }
    return Parametrization::make(pring, std::move(coords));
}

/// Grassmannian entry: the parametrization by maximal minors along with the
/// implicit ideal derived by elimination (cached across calls).
inline ZooEntry grassmannian(int k, int n, const GbOptions& opt = {}) {
    ZooEntry e;
    e.name = "grassmannian-" + std::to_string(k) + "-" + std::to_string(n);
    e.summary = "Pluecker embedding of the space of " + std::to_string(k) +
                "-planes in C^" + std::to_string(n);
    e.param = grassmannian_param(k, n);
    std::size_t M = e.param->coords.size();
    // implicitization: eliminate the matrix entries from z_S - minor_S
    std::size_t kn = e.param->param_count();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < kn; ++i) names.push_back("m" + std::to_string(i));
    for (std::size_t i = 0; i < M; ++i) names.push_back("z" + std::to_string(i));
    RingPtr big = make_ring(std::move(names));
    std::vector<QPoly> gens;
    for (std::size_t i = 0; i < M; ++i) {
        QPoly z = QPoly::variable(big, kn + i, Rat(1));
        gens.push_back(z - detail::lift_to(e.param->coords[i], big, 0));
    }
    std::set<std::size_t> drop;
    for (std::size_t i = 0; i < kn; ++i) drop.insert(i);
    Ideal cut = eliminate(Ideal{big, std::move(gens)}, drop, opt);
    e.ideal = rename_ideal(cut, projective_ring(static_cast<int>(M) - 1));
    return e;
}

/// A k x n rational matrix whose maximal minors vanish at exactly one column
/// subset (the first), built by the inductive spanning construction: the
/// first k columns span a hyperplane, every later column avoids every
/// hyperplane spanned by k-1 of the previous ones. Verified exactly; returns
/// the matrix and its minor vector as a projective point.
struct OneZeroMinor {
    std::vector<std::vector<Rat>> matrix;  // k rows, n columns
    ProjPoint pluecker;

    OneZeroMinor(std::vector<std::vector<Rat>> m, ProjPoint p)
        : matrix(std::move(m)), pluecker(std::move(p)) {}
};

inline OneZeroMinor one_zero_minor_matrix(int k, int n, Rng& rng, int retries = 256) {
    if (k < 1 || k >= n) throw Error("needs 1 <= k < n");
    auto minors_of = [&](const std::vector<std::vector<Rat>>& cols) {
        std::vector<Rat> out;
        for (const auto& subset : column_subsets(k, n)) {
            QMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                        cols[subset[static_cast<std::size_t>(c)]][static_cast<std::size_t>(r)];
            out.push_back(det(std::move(m)));
        }
        return out;
    };
    for (int attempt = 0; attempt < retries; ++attempt) {
        // columns as vectors in C^k; the first k lie in the hyperplane
        // (last entry zero), the rest are unconstrained draws.
        std::vector<std::vector<Rat>> cols;
        for (int c = 0; c < n; ++c) {
            std::vector<Rat> v;
            for (int r = 0; r < k; ++r) {
                bool in_hyperplane = c < k && r == k - 1;
                v.push_back(in_hyperplane ? Rat(0) : rng.rat_int(9));
            }
            cols.push_back(std::move(v));
        }
        auto minors = minors_of(cols);
        std::size_t zeros = 0;
        for (const auto& v : minors)
            if (is_zero(v)) ++zeros;
        if (zeros != 1 || !is_zero(minors[0])) continue;
        std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c)
                rows[static_cast<std::size_t>(r)].push_back(
                    cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
        return OneZeroMinor(std::move(rows), ProjPoint::rational(std::move(minors)));
    }
    throw WitnessNotFound("no matrix with exactly one vanishing minor after retries");
}

// ---------------------------------------------------------------------------
// Tangential varieties of Veronese embeddings, Chow varieties, reducible forms
// ---------------------------------------------------------------------------

/// Coefficient of x^alpha in L^(d-1) M for L = sum a_i x_i, M = sum b_i x_i:
/// the scalar product of b with the vector whose k-th entry is the
/// multinomial (d-1; alpha with alpha_k dropped by one) times the matching
/// power product of a.
inline Rat tangential_coefficient(int d, const std::vector<Rat>& a, const std::vector<Rat>& b,
                                  const std::vector<std::uint32_t>& alpha) {
    std::size_t n1 = a.size();
    Rat acc(0);
    for (std::size_t kk = 0; kk < n1; ++kk) {
        if (alpha[kk] == 0) continue;
        std::vector<std::uint32_t> parts(alpha);
        parts[kk] -= 1;
        Rat term(multinomial(d - 1, parts));
        for (std::size_t j = 0; j < n1; ++j)
            term *= rat_pow(a[j], parts[j]);
        acc += b[kk] * term;
    }
    return acc;
}

/// All coefficients of L^(d-1) M, exponents in descending lexicographic order.
inline std::vector<Rat> tangential_coefficients(int d, int n, const std::vector<Rat>& a,
                                                const std::vector<Rat>& b) {
    if (static_cast<int>(a.size()) != n + 1 || static_cast<int>(b.size()) != n + 1)
        throw Error("coefficient vectors must have length n+1");
    if (d < 1) throw Error("degree must be positive");
    std::vector<Rat> out;
    for (const auto& alpha : exponents_of_degree(d, static_cast<std::size_t>(n) + 1))
        out.push_back(tangential_coefficient(d, a, b, alpha));
    return out;
}

/// Parametrization of the tangential variety: parameters (a, b), coordinates
/// the coefficients of L^(d-1) M.
inline Parametrization tangential_param(int d, int n) {
    std::size_t n1 = static_cast<std::size_t>(n) + 1;
    RingPtr pring = param_ring(static_cast<int>(2 * n1));
    std::vector<QPoly> coords;
    for (const auto& alpha : exponents_of_degree(d, n1)) {
        QPoly acc = QPoly::zero(pring);
        for (std::size_t kk = 0; kk < n1; ++kk) {
            if (alpha[kk] == 0) continue;
            std::vector<std::uint32_t> parts(alpha);
            parts[kk] -= 1;
            std::vector<std::uint32_t> e(pring->nvars(), 0);
            for (std::size_t j = 0; j < n1; ++j) e[j] = parts[j];
            e[n1 + kk] += 1;
            acc = acc + QPoly::term(pring, Monomial::of(e), Rat(multinomial(d - 1, parts)));
        }
        coords.push_back(acc);
    }
    return Parametrization::make(pring, std::move(coords));
}

/// A pair (a, b) whose form L^(d-1) M has coefficient zero exactly at the
/// exponent alpha: a is generic, b is a rational point of the hyperplane
/// orthogonal to the alpha-vector that avoids every other coefficient
/// hyperplane. Verified exactly before returning.
struct TangentialWitness {
    std::vector<Rat> a, b;
    std::vector<Rat> coefficients;
};

inline TangentialWitness tangential_witness(int d, int n,
                                            const std::vector<std::uint32_t>& alpha, Rng& rng,
                                            int retries = 256) {
    std::size_t n1 = static_cast<std::size_t>(n) + 1;
    std::uint64_t dsum = 0;
    for (auto v : alpha) dsum += v;
    if (alpha.size() != n1 || dsum != static_cast<std::uint64_t>(d))
        throw Error("alpha must be an exponent tuple of total degree d");
    auto alphas = exponents_of_degree(d, n1);
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<Rat> a;
        for (std::size_t i = 0; i < n1; ++i) a.push_back(rng.rat_nonzero(12));
        // the alpha-vector against which b must be orthogonal
        std::vector<Rat> v(n1, Rat(0));
        bool degenerate = true;
        for (std::size_t kk = 0; kk < n1; ++kk) {
            if (alpha[kk] == 0) continue;
            std::vector<std::uint32_t> parts(alpha);
            parts[kk] -= 1;
            Rat term(multinomial(d - 1, parts));
            for (std::size_t j = 0; j < n1; ++j) term *= rat_pow(a[j], parts[j]);
            v[kk] = term;
            if (!is_zero(term)) degenerate = false;
        }
        if (degenerate) continue;
        // b = random vector projected into the orthogonal hyperplane of v
        std::vector<Rat> b0;
        for (std::size_t i = 0; i < n1; ++i) b0.push_back(rng.rat_int(12));
        Rat vv(0), bv(0);
        for (std::size_t i = 0; i < n1; ++i) {
            vv += v[i] * v[i];
            bv += b0[i] * v[i];
        }
        std::vector<Rat> b;
        bool zero_b = true;
        for (std::size_t i = 0; i < n1; ++i) {
            Rat x = b0[i] * vv - bv * v[i];
            if (!is_zero(x)) zero_b = false;
            b.push_back(std::move(x));
        }
        if (zero_b) continue;
        auto coeffs = tangential_coefficients(d, n, a, b);
        std::size_t zeros = 0, alpha_idx = alphas.size();
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            if (is_zero(coeffs[i])) ++zeros;
            std::vector<std::uint32_t> ai(alphas[i].begin(), alphas[i].end());
            if (ai == std::vector<std::uint32_t>(alpha.begin(), alpha.end())) alpha_idx = i;
        }
        if (zeros == 1 && alpha_idx < alphas.size() && is_zero(coeffs[alpha_idx]))
            return TangentialWitness{std::move(a), std::move(b), std::move(coeffs)};
    }
    throw WitnessNotFound("no tangential witness after retries");
}

namespace detail {

/// Extracts coefficient maps from the expansion of a product of generic
/// forms: `big` is a ring whose first `np` variables are parameters and whose
/// last n+1 variables are the coordinates x; the result lists, for every
/// exponent tuple of degree d, the parameter-polynomial coefficient.
inline std::vector<QPoly> coefficient_maps(const QPoly& expanded, std::size_t np, std::size_t n1,
                                           int d, const RingPtr& pring) {
    std::map<std::vector<std::uint32_t>, std::vector<QPoly::Term>> buckets;
    for (const auto& [m, c] : expanded.terms()) {
        std::vector<std::uint32_t> xpart(n1), tpart(np);
        for (std::size_t i = 0; i < np; ++i) tpart[i] = m[i];
        for (std::size_t i = 0; i < n1; ++i) xpart[i] = m[np + i];
        buckets[xpart].emplace_back(Monomial::of(tpart), c);
    }
    std::vector<QPoly> out;
    for (const auto& alpha : exponents_of_degree(d, n1)) {
        std::vector<std::uint32_t> key(alpha.begin(), alpha.end());
        auto it = buckets.find(key);
        if (it == buckets.end())
            out.push_back(QPoly::zero(pring));
        else
            out.push_back(QPoly::from_terms(pring, it->second));
    }
    return out;
}

}  // namespace detail

/// Coefficients of a product of d generic linear forms in n+1 variables.
inline Parametrization chow_param(int d, int n) {
    if (d < 1) throw Error("degree must be positive");
    std::size_t n1 = static_cast<std::size_t>(n) + 1;
    std::size_t np = static_cast<std::size_t>(d) * n1;
    RingPtr pring = param_ring(static_cast<int>(np));
    std::vector<std::string> names = pring->names;
    for (std::size_t i = 0; i < n1; ++i) names.push_back("x" + std::to_string(i));
    RingPtr big = make_ring(std::move(names));
    QPoly prod = QPoly::constant(big, Rat(1));
    for (int f = 0; f < d; ++f) {
        QPoly lin = QPoly::zero(big);
        for (std::size_t i = 0; i < n1; ++i) {
            std::vector<std::uint32_t> e(big->nvars(), 0);
            e[static_cast<std::size_t>(f) * n1 + i] = 1;
            e[np + i] += 1;
            lin = lin + QPoly::term(big, Monomial::of(e), Rat(1));
        }
        prod = prod * lin;
    }
    return Parametrization::make(pring, detail::coefficient_maps(prod, np, n1, d, pring));
}

/// Coefficients of a product of generic forms of prescribed degrees.
inline Parametrization reducible_param(const std::vector<int>& degrees, int n) {
    if (degrees.empty()) throw Error("need at least one factor degree");
    std::size_t n1 = static_cast<std::size_t>(n) + 1;
    int d = 0;
    std::vector<std::vector<std::vector<std::uint32_t>>> basis;
    std::size_t np = 0;
    for (int di : degrees) {
        if (di < 1) throw Error("degrees must be positive");
        d += di;
        basis.push_back(exponents_of_degree(di, n1));
        np += basis.back().size();
    }
    RingPtr pring = param_ring(static_cast<int>(np));
    std::vector<std::string> names = pring->names;
    for (std::size_t i = 0; i < n1; ++i) names.push_back("x" + std::to_string(i));
    RingPtr big = make_ring(std::move(names));
    QPoly prod = QPoly::constant(big, Rat(1));
    std::size_t offset = 0;
    for (std::size_t f = 0; f < degrees.size(); ++f) {
        QPoly form = QPoly::zero(big);
        for (std::size_t b = 0; b < basis[f].size(); ++b) {
            std::vector<std::uint32_t> e(big->nvars(), 0);
            e[offset + b] = 1;
            for (std::size_t i = 0; i < n1; ++i) e[np + i] += basis[f][b][i];
            form = form + QPoly::term(big, Monomial::of(e), Rat(1));
        }
        offset += basis[f].size();
        prod = prod * form;
    }
    return Parametrization::make(pring, detail::coefficient_maps(prod, np, n1, d, pring));
}

/// Join construction on the parameter level: coordinate-wise sum of r
/// independent copies of the map.
inline Parametrization secant_param(const Parametrization& P, int r) {
    if (r < 1) throw Error("secant needs r >= 1");
    std::size_t k = P.param_count();
    RingPtr big = param_ring(static_cast<int>(k) * r);
    std::vector<QPoly> coords;
    for (const auto& f : P.coords) {
        QPoly acc = QPoly::zero(big);
        for (int b = 0; b < r; ++b) {
            std::vector<QPoly::Term> ts;
            for (const auto& [mono, c] : f.terms()) {
                std::vector<std::uint32_t> e(big->nvars(), 0);
                for (std::size_t i = 0; i < k; ++i)
                    e[static_cast<std::size_t>(b) * k + i] = mono[i];
                ts.emplace_back(Monomial::of(std::move(e)), c);
            }
            acc = acc + QPoly::from_terms(big, std::move(ts));
        }
        coords.push_back(acc);
    }
    return Parametrization{big, std::move(coords), P.scaling_included};
}

// ---------------------------------------------------------------------------
// Random curves avoiding the two-zero locus
// ---------------------------------------------------------------------------

struct RandomCurve {
    Parametrization param;
    DeltaCheck certificate;
};

/// A random degree-`degree` rational curve in P^N whose coordinate forms
/// pairwise share no root, redrawn until the resultant certificate passes.
inline RandomCurve random_curve(int N, int degree, Rng& rng, std::int64_t height = 100,
                                int retries = 64) {
    if (degree < N) throw Error("degree must be at least N to avoid the two-zero locus");
    RingPtr pring = param_ring(2);
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<QPoly> coords;
        for (int i = 0; i <= N; ++i) {
            std::vector<QPoly::Term> ts;
            for (int e = 0; e <= degree; ++e) {
                Rat c = rng.rat_int(height);
                if (is_zero(c)) continue;
                ts.emplace_back(
                    Monomial::of({static_cast<std::uint32_t>(e),
                                  static_cast<std::uint32_t>(degree - e)}),
                    c);
            }
            coords.push_back(QPoly::from_terms(pring, std::move(ts)));
        }
        bool bad = false;
        for (const auto& c : coords)
            if (c.is_zero_poly() || c.degree() != degree) bad = true;
        if (bad) continue;
        Parametrization P = Parametrization::make(pring, std::move(coords));
        auto cert = check_avoids_delta(P, N - 2);
        if (cert.avoids) return RandomCurve{std::move(P), std::move(cert)};
    }
    throw WitnessNotFound("no delta-avoiding curve after retries");
}

// ---------------------------------------------------------------------------
// Registry and self tests
// ---------------------------------------------------------------------------

inline std::vector<ZooEntry> zoo_registry(const GbOptions& opt = {}) {
    std::vector<ZooEntry> out;
    out.push_back(conic_Q());
    out.push_back(conic_C());
    out.push_back(conic_C_sharp());
    out.push_back(binomial_hypersurface(2, 2, Rat(2)));
    out.push_back(grassmannian(2, 4, opt));
    return out;
}

struct FactResult {
    std::string label;
    std::string basis;  // known-result | by-construction | cross-checked
    bool passed;
};

/// Re-verifies the machine-checkable facts attached to an entry.
inline std::vector<FactResult> zoo_verify(const ZooEntry& e, Rng& rng, const GbOptions& opt = {}) {
    std::vector<FactResult> out;
    auto add = [&](const std::string& label, const std::string& basis, bool ok) {
        out.push_back({label, basis, ok});
    };
    if (e.ideal && e.param) {
        bool ok = true;
        for (int i = 0; i < 5; ++i) {
            auto p = sample_point(*e.param, rng, 50);
            if (!vanishes_at(e.ideal->gens, p)) ok = false;
        }
        add("sampled points satisfy the stored ideal", "cross-checked", ok);
    }
    if (e.name == "conic-q") {
        auto rep = is_strongly_concise(*e.ideal, opt);
        add("concise in every coordinate", "known-result", rep.all_concise());
        add("strongly concise nowhere", "known-result", rep.failing_strongly().size() == 3);
        auto gr = generic_rank_estimate(*e.param, 3, rng);
        add("generic rank 2", "known-result", gr && *gr == 2);
    } else if (e.name == "conic-c") {
        auto rep = is_strongly_concise(*e.ideal, opt);
        add("strongly concise", "known-result", rep.all_strongly_concise());
        add("contains the tangency point (0:1:1)", "known-result",
            contains_point(*e.ideal, ProjPoint::parse("0:1:1")));
        add("contains the coordinate point (1:0:0)", "known-result",
            contains_point(*e.ideal, ProjPoint::parse("1:0:0")));
    } else if (e.name == "conic-c-sharp") {
        bool vals = evaluate(e.ideal->gens[0], ProjPoint::parse("1:0:0")) == AlgNum(Rat(-3)) &&
                    evaluate(e.ideal->gens[0], ProjPoint::parse("0:1:0")) == AlgNum(Rat(-2)) &&
                    evaluate(e.ideal->gens[0], ProjPoint::parse("0:0:1")) == AlgNum(Rat(4));
        add("avoids every coordinate point (values -3, -2, 4)", "by-construction", vals);
        bool through = contains_point(*e.ideal, ProjPoint::parse("1:1:0")) &&
                       contains_point(*e.ideal, ProjPoint::parse("1:0:3")) &&
                       contains_point(*e.ideal, ProjPoint::parse("0:2:1"));
        add("passes through (1:1:0), (1:0:3), (0:2:1)", "by-construction", through);
        // symmetric matrix determinant 35 (smoothness)
        QMatrix m(3, 3);
        m.at(0, 0) = Rat(-3);
        m.at(1, 1) = Rat(-2);
        m.at(2, 2) = Rat(4);
        m.at(0, 1) = m.at(1, 0) = Rat(5, 2);
        m.at(0, 2) = m.at(2, 0) = Rat(-11, 2);
        m.at(1, 2) = m.at(2, 1) = Rat(1);
        add("smooth: symmetric matrix determinant 35", "by-construction", det(m) == Rat(35));
        add("strongly concise", "cross-checked",
            is_strongly_concise(*e.ideal, opt).all_strongly_concise());
    } else if (e.name.rfind("binomial-", 0) == 0) {
        add("square matches the closed form", "cross-checked",
            ideal_equal(variety_product(*e.ideal, *e.ideal, opt), closed_power(2, 2, Rat(2), 2),
                        opt));
        add("not strongly concise", "known-result",
            !is_strongly_concise(*e.ideal, opt).all_strongly_concise());
        add("contains a binomial", "by-construction",
            binomial_search(*e.ideal, default_binomial_bound(*e.ideal), opt).has_value());
    } else if (e.name == "grassmannian-2-4") {
        RingPtr r6 = e.ideal->ring;
        QPoly classical = parse_polynomial("x0*x5 - x1*x4 + x2*x3", r6);
        add("derived ideal is the classical quadric relation", "cross-checked",
            ideal_equal(*e.ideal, Ideal::make(r6, {classical}), opt));
        add("strongly concise", "known-result",
            is_strongly_concise(*e.ideal, opt).all_strongly_concise());
    }
    return out;
}

}  // namespace hstar
