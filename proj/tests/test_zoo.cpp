#include <catch2/catch_amalgamated.hpp>

#include "hstar/zoo.hpp"

using namespace hstar;

TEST_CASE("closed powers of the binomial hypersurface") {
    auto I = closed_power(2, 2, Rat(2), 2);
    REQUIRE(to_string(I.gens[0]) == "x1^2 - 4*x0*x2");
    REQUIRE_THROWS_AS(closed_power(2, 2, Rat(2), 0), Error);
    REQUIRE_THROWS_AS(closed_power(2, 2, Rat(0), 1), Error);

    // cross-module consistency: product of the hypersurface with itself
    auto B = binomial_hypersurface(2, 2, Rat(2));
    REQUIRE(ideal_equal(variety_product(*B.ideal, *B.ideal), closed_power(2, 2, Rat(2), 2)));
}

TEST_CASE("binomial hypersurface parametrization lies on the hypersurface") {
    auto B = binomial_hypersurface(3, 4, Rat(5));
    Rng rng(1);
    for (int i = 0; i < 5; ++i) {
        auto p = sample_point(*B.param, rng, 30);
        REQUIRE(vanishes_at(B.ideal->gens, p));
    }
}

TEST_CASE("the three conics carry consistent data") {
    Rng rng(2);
    for (auto entry : {conic_Q(), conic_C(), conic_C_sharp()}) {
        REQUIRE(entry.ideal.has_value());
        REQUIRE(entry.param.has_value());
        for (int i = 0; i < 8; ++i) {
            auto p = sample_point(*entry.param, rng, 50);
            REQUIRE(vanishes_at(entry.ideal->gens, p));
        }
    }
}

TEST_CASE("grassmannian implicitization recovers the classical quadric") {
    auto G = grassmannian(2, 4);
    REQUIRE(G.ideal->gens.size() == 1);
    auto r6 = G.ideal->ring;
    auto classical = parse_polynomial("x0*x5 - x1*x4 + x2*x3", r6);
    REQUIRE(ideal_equal(*G.ideal, Ideal::make(r6, {classical})));
}

TEST_CASE("lines in the plane have no relations") {
    auto G = grassmannian(1, 3);
    REQUIRE(G.ideal->is_zero_ideal());
}

TEST_CASE("explicit minor vectors (frozen examples)") {
    // columns (1,0), (2,0), (0,1): minors over column pairs in lex order
    auto G23 = grassmannian_param(2, 3);
    std::vector<Rat> t = {Rat(1), Rat(2), Rat(0), Rat(0), Rat(0), Rat(1)};
    std::vector<Rat> expected = {Rat(0), Rat(1), Rat(2)};
    for (std::size_t i = 0; i < 3; ++i)
        REQUIRE(G23.coords[i].evaluate(t) == expected[i]);

    // add the column (1,1)
    auto G24 = grassmannian_param(2, 4);
    std::vector<Rat> t2 = {Rat(1), Rat(2), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1), Rat(1)};
    std::vector<Rat> expected2 = {Rat(0), Rat(1), Rat(1), Rat(2), Rat(2), Rat(-1)};
    for (std::size_t i = 0; i < 6; ++i)
        REQUIRE(G24.coords[i].evaluate(t2) == expected2[i]);
}

TEST_CASE("matrices with exactly one vanishing minor") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}, {2, 5}}) {
        Rng rng(static_cast<std::uint64_t>(100 * k + n));
        auto w = one_zero_minor_matrix(k, n, rng);
        REQUIRE(w.pluecker.zero_count() == 1);
        REQUIRE(w.pluecker.zero_set() == std::vector<std::size_t>{0});
        // replay the minors from the matrix itself
        auto P = grassmannian_param(k, n);
        std::vector<Rat> t;
        for (const auto& row : w.matrix)
            for (const auto& v : row) t.push_back(v);
        std::vector<Rat> minors;
        for (const auto& c : P.coords) minors.push_back(c.evaluate(t));
        REQUIRE(proj_equal(w.pluecker, ProjPoint::rational(minors)));
    }
}

TEST_CASE("tangential coefficients at d=2, n=1 (frozen)") {
    std::vector<Rat> a = {Rat(3), Rat(5)}, b = {Rat(-2), Rat(7)};
    auto c = tangential_coefficients(2, 1, a, b);
    REQUIRE(c.size() == 3);
    REQUIRE(c[0] == a[0] * b[0]);
    REQUIRE(c[1] == a[1] * b[0] + a[0] * b[1]);
    REQUIRE(c[2] == a[1] * b[1]);
}

TEST_CASE("tangential coefficients with M = L recover the power") {
    // L^(d-1) L = L^d; compare with direct expansion
    std::vector<Rat> a = {Rat(2), Rat(-3)};
    auto c = tangential_coefficients(3, 1, a, a);
    auto xr = projective_ring(1);
    QPoly L = QPoly::variable(xr, 0, a[0]) + QPoly::variable(xr, 1, a[1]);
    QPoly cube = L.pow(3);
    auto alphas = exponents_of_degree(3, 2);
    for (std::size_t i = 0; i < alphas.size(); ++i)
        REQUIRE(cube.coefficient(Monomial::of(alphas[i])) == c[i]);
}

TEST_CASE("tangential coefficients with L = x0 (frozen)") {
    std::vector<Rat> a = {Rat(1), Rat(0)}, b = {Rat(11), Rat(13)};
    auto c = tangential_coefficients(3, 1, a, b);
    REQUIRE(c == std::vector<Rat>{Rat(11), Rat(13), Rat(0), Rat(0)});
}

TEST_CASE("tangential witnesses have exactly one vanishing coefficient") {
    for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
        auto alphas = exponents_of_degree(d, static_cast<std::size_t>(n) + 1);
        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
            Rng rng(static_cast<std::uint64_t>(1000 * d + 100 * n + ai));
            auto w = tangential_witness(d, n, alphas[ai], rng);
            std::size_t zeros = 0;
            for (const auto& v : w.coefficients)
                if (is_zero(v)) ++zeros;
            REQUIRE(zeros == 1);
            REQUIRE(is_zero(w.coefficients[ai]));
            // replay through the public formula
            auto again = tangential_coefficients(d, n, w.a, w.b);
            REQUIRE(again == w.coefficients);
        }
    }
}

TEST_CASE("binary chow coincides with the binary tangential map") {
    // over two variables every product of two linear forms is some L*M
    auto chow = chow_param(2, 1);
    auto tau = tangential_param(2, 1);
    Rng rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Rat> t = {rng.rat_int(9), rng.rat_int(9), rng.rat_int(9), rng.rat_int(9)};
        for (std::size_t i = 0; i < 3; ++i)
            REQUIRE(chow.coords[i].evaluate(t) == tau.coords[i].evaluate(t));
    }
}

TEST_CASE("products of a line and a quadric satisfy no linear relation") {
    auto R = reducible_param({1, 2}, 2);
    REQUIRE(R.coords.size() == 10);  // cubics in three variables
    Rng rng(5);
    REQUIRE(jacobian_dimension(R, rng) > 0);
    // stack sampled coefficient vectors; they span the whole space
    QMatrix samples(24, 10);
    for (std::size_t s = 0; s < 24; ++s) {
        auto p = sample_point(R, rng, 20);
        auto rc = p.rational_coords();
        for (std::size_t j = 0; j < 10; ++j) samples.at(s, j) = (*rc)[j];
    }
    REQUIRE(rank(samples) == 10);
}

TEST_CASE("secants of the binary tangential cubic fill the space") {
    auto tau = tangential_param(3, 1);
    auto sec = secant_param(tau, 2);
    Rng rng(7);
    REQUIRE(jacobian_dimension(sec, rng) == 3);
}

TEST_CASE("random curve construction is certified") {
    Rng rng(42);
    auto curve = random_curve(3, 3, rng);
    REQUIRE(curve.certificate.avoids);
    REQUIRE(curve.certificate.resultants.size() == 6);
    REQUIRE_THROWS_AS(random_curve(3, 2, rng), Error);  // degree below N
}

TEST_CASE("registry self-test") {
    Rng rng(9);
    for (const auto& entry : zoo_registry()) {
        auto results = zoo_verify(entry, rng);
        REQUIRE(!results.empty());
        for (const auto& r : results) {
            INFO(entry.name << ": " << r.label);
            REQUIRE(r.passed);
        }
    }
}

TEST_CASE("zoo files round-trip through the text formats") {
    auto B = binomial_hypersurface(2, 2, Rat(2));
    std::stringstream si;
    write_ideal(si, *B.ideal, {"binomial hypersurface"});
    auto I = read_ideal(si);
    REQUIRE(ideal_equal(I, *B.ideal));

    std::stringstream sp;
    write_param(sp, *B.param);
    auto P = read_param(sp);
    REQUIRE(P.coords.size() == B.param->coords.size());
    for (std::size_t i = 0; i < P.coords.size(); ++i)
        REQUIRE(to_string(P.coords[i]) == to_string(B.param->coords[i]));
}
