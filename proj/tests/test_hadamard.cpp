#include <catch2/catch_amalgamated.hpp>

#include "hstar/hadamard.hpp"

using namespace hstar;

namespace {

Ideal parse_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<QPoly> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(s, ring));
    return Ideal::make(ring, std::move(ps));
}

RingPtr P2() { return projective_ring(2); }

Ideal conic_Q_ideal() { return parse_ideal(P2(), {"x0*x1 + x0*x2 + x1*x2"}); }
Ideal conic_C_ideal() { return parse_ideal(P2(), {"x0*(x1 + x2) + (x1 - x2)^2"}); }
Ideal x22_ideal(long c) {
    return parse_ideal(P2(), {"x1^2 - " + std::to_string(c) + "*x0*x2"});
}

}  // namespace

TEST_CASE("hadamard square of the binomial conic multiplies the constant") {
    auto I = x22_ideal(2);
    auto sq = variety_product(I, I);
    REQUIRE(ideal_equal(sq, x22_ideal(4)));
}

TEST_CASE("hadamard square of Q fills the plane") {
    auto Q = conic_Q_ideal();
    auto sq = variety_product(Q, Q);
    REQUIRE(sq.is_zero_ideal());
}

TEST_CASE("product with the all-ones point is the identity") {
    auto C = conic_C_ideal();
    // ideal of the point (1:1:1): minors of rows (x0,x1,x2), (1,1,1)
    auto pt = parse_ideal(P2(), {"x1 - x0", "x2 - x0"});
    auto prod = variety_product(C, pt);
    REQUIRE(ideal_equal(prod, C));
}

TEST_CASE("binomial powers follow the closed form") {
    auto I = x22_ideal(2);
    PowerCache cache(I);
    REQUIRE(ideal_equal(variety_power(I, 1, cache), x22_ideal(2)));
    REQUIRE(ideal_equal(variety_power(I, 2, cache), x22_ideal(4)));
    REQUIRE(ideal_equal(variety_power(I, 3, cache), x22_ideal(8)));
}

TEST_CASE("square of C fills the plane") {
    auto C = conic_C_ideal();
    REQUIRE(variety_power(C, 2).is_zero_ideal());
}

TEST_CASE("power one returns the ideal") {
    auto I = conic_Q_ideal();
    REQUIRE(ideal_equal(variety_power(I, 1), I));
}

TEST_CASE("rank locus: shortcut and intersections") {
    auto Q = conic_Q_ideal();
    REQUIRE(rank_locus(Q, 2).is_zero_ideal());
    REQUIRE(ideal_equal(rank_locus(Q, 1), Q));

    // x1^2 - 2 x0 x2 does not contain (1:1:1), so the locus is a union:
    // (x1^2 - 2x0x2)(x1^2 - 4x0x2) expanded by hand as the oracle.
    auto I = x22_ideal(2);
    auto locus = rank_locus(I, 2);
    auto oracle = Ideal::make(
        P2(), {parse_polynomial("x1^2 - 2*x0*x2", P2()) * parse_polynomial("x1^2 - 4*x0*x2", P2())});
    REQUIRE(ideal_equal(locus, oracle));
}

TEST_CASE("power membership is border-style membership") {
    auto C = conic_C_ideal();
    PowerCache cache(C);
    auto p = ProjPoint::parse("0:1:-1");
    REQUIRE(!power_membership(p, C, 1, cache));
    REQUIRE(power_membership(p, C, 2, cache));

    auto I = x22_ideal(2);
    PowerCache c2(I);
    for (int m = 1; m <= 4; ++m) {
        auto pm = ProjPoint::rational({Rat(1), Rat(1), rat_pow(Rat(1, 2), (unsigned long)m)});
        for (int r = 1; r < m; ++r) REQUIRE(!power_membership(pm, I, r, c2));
        REQUIRE(power_membership(pm, I, m, c2));
    }

    // a point on the variety is in the first power
    auto on = ProjPoint::parse("1:2:2");  // 4 - 2*2 = 0
    REQUIRE(power_membership(on, I, 1, c2));
}

TEST_CASE("translation by a diagonal point") {
    auto C = conic_C_ideal();
    auto ones = ProjPoint::ones(3);
    REQUIRE(ideal_equal(translate_ideal(C, ones), C));

    auto q = ProjPoint::parse("1:2:3");
    auto back = translate_ideal(translate_ideal(C, q), hadamard_inverse(q));
    REQUIRE(ideal_equal(back, C));

    REQUIRE_THROWS_AS(translate_ideal(C, ProjPoint::parse("0:1:1")), ZeroCoordinate);
}

TEST_CASE("translation and powers commute") {
    auto q = ProjPoint::parse("1:2:3");
    auto q2 = hadamard_point(q, q);
    for (const Ideal& I : {conic_C_ideal(), conic_Q_ideal(), x22_ideal(2)}) {
        auto lhs = translate_ideal(variety_power(I, 2), q2);
        auto rhs = variety_power(translate_ideal(I, q), 2);
        REQUIRE(ideal_equal(lhs, rhs));
    }
}

TEST_CASE("power dimensions are monotone") {
    auto I = x22_ideal(2);
    PowerCache cache(I);
    variety_power(I, 3, cache);
    int d1 = cache.get(1).second, d2 = cache.get(2).second, d3 = cache.get(3).second;
    REQUIRE(d1 <= d2);
    REQUIRE(d2 <= d3);
    REQUIRE(d1 == 1);

    auto C = conic_C_ideal();
    PowerCache cc(C);
    variety_power(C, 2, cc);
    REQUIRE(cc.get(1).second == 1);
    REQUIRE(cc.get(2).second == 2);
}

TEST_CASE("sampled points multiply into the product variety") {
    // rational parametrization of C: (-2s^2 : t(t+s)... ) checked in the zoo;
    // here use simple known points.
    auto C = conic_C_ideal();
    auto prod = variety_power(C, 2);
    auto a = ProjPoint::parse("0:1:1");
    auto b = ProjPoint::parse("-1:6:3");
    REQUIRE(contains_point(C, a));
    REQUIRE(contains_point(C, b));
    REQUIRE(contains_point(prod, hadamard_point(a, b)));
}
