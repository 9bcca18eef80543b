#include <catch2/catch_amalgamated.hpp>

#include "hstar/param.hpp"
#include "hstar/zoo.hpp"

using namespace hstar;

TEST_CASE("power of a parametrization appends one scale parameter") {
    auto C = conic_C();
    auto P1 = power_param(*C.param, 1);
    REQUIRE(P1.param_count() == 3);
    REQUIRE(P1.scaling_included);
    auto P2 = power_param(*C.param, 2);
    REQUIRE(P2.param_count() == 5);
}

TEST_CASE("the squared conic fills the plane (jacobian)") {
    auto C = conic_C();
    Rng rng(1);
    REQUIRE(jacobian_dimension(*C.param, rng) == 1);
    Rng rng2(2);
    REQUIRE(jacobian_dimension(power_param(*C.param, 2), rng2) == 2);
}

TEST_CASE("cubes of the binomial surface satisfy the closed form") {
    auto B = binomial_hypersurface(2, 2, Rat(2));
    auto P3 = power_param(*B.param, 3);
    Rng rng(3);
    auto cube_ideal = closed_power(2, 2, Rat(2), 3);
    for (int i = 0; i < 5; ++i) {
        auto p = sample_point(P3, rng, 40);
        REQUIRE(vanishes_at(cube_ideal.gens, p));
    }
}

TEST_CASE("grassmannian dimension via an independent jacobian oracle") {
    // Pluecker map of 2x4 matrices; cone map includes the scale lambda.
    // Hand-built Jacobian at M = [[1,0,2,3],[0,1,4,5]], lambda = 1.
    std::vector<std::vector<Rat>> M = {{Rat(1), Rat(0), Rat(2), Rat(3)},
                                       {Rat(0), Rat(1), Rat(4), Rat(5)}};
    auto pl = [&](int i, int j) { return M[0][(size_t)i] * M[1][(size_t)j] - M[0][(size_t)j] * M[1][(size_t)i]; };
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    QMatrix J(6, 9);
    for (std::size_t r = 0; r < 6; ++r) {
        auto [i, j] = pairs[r];
        for (int c = 0; c < 4; ++c) {
            // d/d m0c and d/d m1c
            Rat d0 = (c == i ? M[1][(size_t)j] : Rat(0)) - (c == j ? M[1][(size_t)i] : Rat(0));
            Rat d1 = (c == j ? M[0][(size_t)i] : Rat(0)) - (c == i ? M[0][(size_t)j] : Rat(0));
            J.at(r, static_cast<std::size_t>(c)) = d0;
            J.at(r, static_cast<std::size_t>(4 + c)) = d1;
        }
        J.at(r, 8) = pl(i, j);  // d/d lambda
    }
    REQUIRE(rank(J) == 5);  // cone dimension 5, projective dimension 4

    auto G = grassmannian_param(2, 4);
    Rng rng(5);
    REQUIRE(jacobian_dimension(G, rng) == 4);
}

TEST_CASE("every binary quadric is a product of linear forms") {
    auto tau = tangential_param(2, 1);
    Rng rng(7);
    REQUIRE(jacobian_dimension(tau, rng) == 2);
}

TEST_CASE("generic rank estimates") {
    Rng rng(11);
    REQUIRE(generic_rank_estimate(*conic_C().param, 3, rng) == 2);
    REQUIRE(generic_rank_estimate(*conic_Q().param, 3, rng) == 2);
}

TEST_CASE("random cubic curves in P^3 grow one dimension per power") {
    Rng rng(42);
    auto curve = random_curve(3, 3, rng);
    REQUIRE(curve.certificate.avoids);
    for (const auto& [i, j, r] : curve.certificate.resultants) REQUIRE(!is_zero(r));
    Rng rng2(43);
    REQUIRE(jacobian_dimension(curve.param, rng2) == 1);
    REQUIRE(jacobian_dimension(power_param(curve.param, 2), rng2) == 2);
    REQUIRE(jacobian_dimension(power_param(curve.param, 3), rng2) == 3);
    Rng rng3(44);
    REQUIRE(generic_rank_estimate(curve.param, 4, rng3) == 3);
}

TEST_CASE("monomial curves hit the two-zero locus") {
    auto pring = param_ring(2);
    std::vector<QPoly> tw = {
        parse_polynomial("t0^3", pring), parse_polynomial("t0^2*t1", pring),
        parse_polynomial("t0*t1^2", pring), parse_polynomial("t1^3", pring)};
    auto P = Parametrization::make(pring, std::move(tw));
    auto cert = check_avoids_delta(P, 1);
    REQUIRE(!cert.avoids);
}

TEST_CASE("the tangent conic parametrization passes through a coordinate point") {
    auto C = conic_C();
    auto cert = check_avoids_delta(*C.param, 0);
    REQUIRE(!cert.avoids);  // (1:0:0) lies on the curve: two zero coordinates
}

TEST_CASE("binary resultants detect roots at infinity") {
    auto pring = param_ring(2);
    // both forms divisible by t1 (common root at (1:0))
    auto f = parse_polynomial("t0^2*t1", pring);
    auto g = parse_polynomial("t0*t1^2 + t1^3", pring);
    REQUIRE(is_zero(binary_resultant(f, g, 3, 3)));
    auto h = parse_polynomial("t0^3 + t1^3", pring);
    REQUIRE(!is_zero(binary_resultant(f, h, 3, 3)));
}

TEST_CASE("samples satisfy the classical quadric relation") {
    auto G = grassmannian_param(2, 4);
    auto r6 = projective_ring(5);
    auto quad = parse_polynomial("x0*x5 - x1*x4 + x2*x3", r6);
    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
        auto p = sample_point(G, rng, 30);
        REQUIRE(is_zero(evaluate(quad, p)));
    }
}

TEST_CASE("tangential samples match brute-force expansion") {
    Rng rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Rat> a = {rng.rat_int(20), rng.rat_int(20)};
        std::vector<Rat> b = {rng.rat_int(20), rng.rat_int(20)};
        // expansion oracle: (a0 x0 + a1 x1)^2 (b0 x0 + b1 x1)
        auto xr = projective_ring(1);
        QPoly L = QPoly::variable(xr, 0, a[0]) + QPoly::variable(xr, 1, a[1]);
        QPoly Mf = QPoly::variable(xr, 0, b[0]) + QPoly::variable(xr, 1, b[1]);
        QPoly expanded = L * L * Mf;
        auto coeffs = tangential_coefficients(3, 1, a, b);
        auto alphas = exponents_of_degree(3, 2);
        for (std::size_t i = 0; i < alphas.size(); ++i)
            REQUIRE(expanded.coefficient(Monomial::of(alphas[i])) == coeffs[i]);
    }
}

TEST_CASE("jacobian trials reject all-zero images loudly") {
    auto pring = param_ring(1);
    // the image is zero on the whole line t0 = 0... this map is t0 times a
    // fixed vector, so samples at t0 != 0 are fine; degenerate only at 0.
    auto P = Parametrization::make(
        pring, {parse_polynomial("t0", pring), parse_polynomial("2*t0", pring)});
    Rng rng(19);
    REQUIRE(jacobian_dimension(P, rng) == 0);
}
