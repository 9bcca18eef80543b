#include <catch2/catch_amalgamated.hpp>

#include "hstar/algnum.hpp"
#include "hstar/parse.hpp"
#include "hstar/projpoint.hpp"
#include "hstar/rng.hpp"

using namespace hstar;

TEST_CASE("rationals normalize to lowest terms") {
    Rng rng(17);
    for (int i = 0; i < 10000; ++i) {
        Int a = rng.uniform(-1000000, 1000000);
        Int b = rng.nonzero(1000000);
        Rat q = make_rat(a, b);
        Int g = boost::multiprecision::gcd(rat_num(q) < 0 ? Int(-rat_num(q)) : rat_num(q),
                                           rat_den(q));
        REQUIRE(g == 1);
        REQUIRE(rat_den(q) >= 1);
    }
}

TEST_CASE("polynomial parsing round-trips") {
    auto ring = projective_ring(2);
    auto q = parse_polynomial("x0*x1 + x0*x2 + x1*x2", ring);
    REQUIRE(q.term_count() == 3);
    REQUIRE(q.is_homogeneous());
    REQUIRE(to_string(q) == "x0*x1 + x0*x2 + x1*x2");
    REQUIRE(parse_polynomial(to_string(q), ring) == q);

    auto x22 = parse_polynomial("x1^2 - 2*x0*x2", ring);
    REQUIRE(x22.degree() == 2);
    REQUIRE(parse_polynomial(to_string(x22), ring) == x22);

    auto zero = parse_polynomial("0", ring);
    REQUIRE(zero.is_zero_poly());

    auto mixed = parse_polynomial("-3/4*x0^2 + (x1 - x2)^2 - 1/2", ring);
    REQUIRE(parse_polynomial(to_string(mixed), ring) == mixed);
}

TEST_CASE("parser reports position and variable errors") {
    auto ring = projective_ring(2);
    REQUIRE_THROWS_AS(parse_polynomial("x0 + ", ring), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial("x0 * y1", ring), ParseError);
    try {
        parse_polynomial("x0 + x7", ring);
        FAIL("expected out-of-range error");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("out of range") != std::string::npos);
    }
    try {
        parse_polynomial("q3 + x0", ring);
        FAIL("expected unknown-variable error");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("unknown variable") != std::string::npos);
    }
}

TEST_CASE("polynomial arithmetic is a commutative ring") {
    auto ring = projective_ring(3);
    Rng rng(5);
    auto random_poly = [&]() {
        std::vector<QPoly::Term> ts;
        int nterms = static_cast<int>(rng.below(6));
        for (int i = 0; i < nterms; ++i) {
            std::vector<std::uint32_t> e(4);
            for (auto& v : e) v = static_cast<std::uint32_t>(rng.below(3));
            ts.emplace_back(Monomial::of(e), rng.rat_int(9));
        }
        return QPoly::from_terms(ring, std::move(ts));
    };
    for (int i = 0; i < 50; ++i) {
        QPoly f = random_poly(), g = random_poly(), h = random_poly();
        REQUIRE((f + g) * h == f * h + g * h);
        REQUIRE(f * g == g * f);
        REQUIRE(f + g == g + f);
    }
}

TEST_CASE("evaluation matches the worked conic factors") {
    auto ring = projective_ring(2);
    auto c = parse_polynomial("x0*(x1 + x2) + (x1 - x2)^2", ring);
    auto at = [&](long a, long b, long d) {
        return evaluate(c, ProjPoint::rational({Rat(a), Rat(b), Rat(d)}));
    };
    REQUIRE(is_zero(at(-1, 6, 3)));
    REQUIRE(is_zero(at(9, 1, -2)));
    REQUIRE(is_zero(at(0, 1, 1)));
    REQUIRE(!is_zero(at(0, 1, -1)));
}

TEST_CASE("homogeneous evaluation scales by lambda^deg") {
    auto ring = projective_ring(2);
    auto f = parse_polynomial("x0*x1 + x0*x2 + x1*x2", ring);
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        Rat lambda = rng.rat_nonzero(50);
        std::vector<Rat> base{rng.rat_int(20), rng.rat_int(20), rng.rat_int(20)};
        std::vector<Rat> scaled;
        for (const auto& v : base) scaled.push_back(v * lambda);
        Rat lhs = f.evaluate(scaled);
        Rat rhs = rat_pow(lambda, 2) * f.evaluate(base);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("hadamard product of points") {
    auto p1 = ProjPoint::rational({Rat(0), Rat(1), Rat(1)});
    auto p2 = ProjPoint::rational({Rat(-1), Rat(6), Rat(3)});
    auto p3 = ProjPoint::rational({Rat(9), Rat(1), Rat(-2)});
    auto prod = hadamard_product({p1, p2, p3});
    REQUIRE(proj_equal(prod, ProjPoint::rational({Rat(0), Rat(1), Rat(-1)})));

    auto any = ProjPoint::rational({Rat(3), Rat(-5), Rat(7, 2)});
    REQUIRE(proj_equal(hadamard_point(any, ProjPoint::ones(3)), any));

    auto e0 = ProjPoint::rational({Rat(1), Rat(0)});
    auto e1 = ProjPoint::rational({Rat(0), Rat(1)});
    REQUIRE_THROWS_AS(hadamard_point(e0, e1), AllZeroProduct);
}

TEST_CASE("hadamard inverse") {
    auto p = ProjPoint::rational({Rat(1), Rat(2), Rat(4)});
    auto inv = hadamard_inverse(p);
    REQUIRE(proj_equal(inv, ProjPoint::rational({Rat(1), Rat(1, 2), Rat(1, 4)})));
    REQUIRE(proj_equal(hadamard_point(p, inv), ProjPoint::ones(3)));

    auto ones = ProjPoint::ones(4);
    REQUIRE(proj_equal(hadamard_inverse(ones), ones));

    REQUIRE_THROWS_AS(hadamard_inverse(ProjPoint::rational({Rat(0), Rat(1), Rat(1)})),
                      ZeroCoordinate);
}

TEST_CASE("hadamard point product is associative and commutative") {
    Rng rng(99);
    for (int i = 0; i < 40; ++i) {
        auto rnd = [&]() {
            return ProjPoint::rational(
                {rng.rat_nonzero(30), rng.rat_nonzero(30), rng.rat_nonzero(30)});
        };
        auto a = rnd(), b = rnd(), c = rnd();
        REQUIRE(proj_equal(hadamard_point(a, b), hadamard_point(b, a)));
        REQUIRE(proj_equal(hadamard_point(hadamard_point(a, b), c),
                           hadamard_point(a, hadamard_point(b, c))));
    }
}

TEST_CASE("monomial exponent overflow is loud") {
    auto ring = projective_ring(1);
    auto big = Monomial::variable(2, 0, 1u << 29);
    REQUIRE_THROWS_AS(big.times(big).times(big.times(big)), ExponentOverflow);
}

TEST_CASE("algebraic numbers: sqrt2 arithmetic and exact zero test") {
    UPoly def({Rat(-2), Rat(0), Rat(1)});  // t^2 - 2
    auto roots = isolate_roots(def);
    REQUIRE(roots.size() == 2);
    for (auto& f : roots) REQUIRE(f->is_real());
    auto theta = AlgNum::primitive(roots[1]);  // either root works
    REQUIRE(is_zero(theta * theta - AlgNum(Rat(2))));
    REQUIRE(!is_zero(theta - AlgNum(Rat(1))));
    auto one = (AlgNum(Rat(1)) + theta) * (theta - AlgNum(Rat(1)));  // theta^2 - 1 = 1
    REQUIRE(is_zero(one - AlgNum(Rat(1))));
    // inverse: 1/theta = theta/2
    auto inv = theta.inverse();
    REQUIRE(is_zero(inv - theta * AlgNum(Rat(1, 2))));
}

TEST_CASE("algebraic numbers: complex pair i, -i") {
    UPoly def({Rat(1), Rat(0), Rat(1)});  // t^2 + 1
    auto roots = isolate_roots(def);
    REQUIRE(roots.size() == 2);
    REQUIRE(!roots[0]->is_real());
    auto i1 = AlgNum::primitive(roots[0]);
    REQUIRE(is_zero(i1 * i1 + AlgNum(Rat(1))));
    AlgNum i_sq = i1 * i1;
    REQUIRE(i_sq.try_rationalize());
    REQUIRE(i_sq.rational_value() == Rat(-1));
}

TEST_CASE("algebraic numbers: lazy splitting of reducible defining polynomial") {
    // (t^2 - 2)(t^2 - 3); pick the root near 1.414 and decide t^2 - 2 = 0.
    UPoly def({Rat(6), Rat(0), Rat(-5), Rat(0), Rat(1)});
    auto roots = isolate_roots(def);
    REQUIRE(roots.size() == 4);
    // find the root whose box contains ~1.414
    FieldPtr target;
    for (auto& f : roots) {
        if (!f->is_real()) continue;
        if (f->box().re.contains(Rat(141, 100)) ||
            (f->box().re.lo < Rat(15, 10) && f->box().re.lo > Rat(14, 10)))
            target = f;
    }
    if (!target) {
        for (auto& f : roots) {
            f->refine_below(Rat(1, 100));
            if (f->box().re.contains(Rat(1414, 1000))) target = f;
        }
    }
    REQUIRE(target);
    auto theta = AlgNum::primitive(target);
    REQUIRE(is_zero(theta * theta - AlgNum(Rat(2))));
    REQUIRE(!is_zero(theta * theta - AlgNum(Rat(3))));
    // After the splits the defining polynomial is the true minimal polynomial.
    REQUIRE(target->defining().degree() == 2);
}

TEST_CASE("exact zero test agrees with 200-digit interval refinement") {
    Rng rng(7);
    UPoly def({Rat(-2), Rat(0), Rat(1)});
    auto roots = isolate_roots(def);
    auto theta = AlgNum::primitive(roots[0]);
    Rat tiny = Rat(1) / int_pow(Int(10), 200);
    for (int i = 0; i < 25; ++i) {
        Rat a = rng.rat_int(40), b = rng.rat_int(40);
        AlgNum v = theta * AlgNum(a) + AlgNum(b);
        bool exact = is_zero(v);
        CBox e = v.enclosure(tiny);
        bool interval_may_be_zero = e.contains_zero();
        if (!interval_may_be_zero) REQUIRE(!exact);
        if (exact) REQUIRE(interval_may_be_zero);
    }
    // A designed zero: theta^2 - 2 refines to a box straddling zero.
    AlgNum z = theta * theta - AlgNum(Rat(2));
    REQUIRE(is_zero(z));
    REQUIRE(z.enclosure(tiny).contains_zero());
}

TEST_CASE("projective point parsing and zero counts") {
    auto p = ProjPoint::parse("0:1:-1");
    REQUIRE(p.zero_count() == 1);
    REQUIRE(p.zero_set() == std::vector<std::size_t>{0});
    auto q = ProjPoint::parse("3/2 : -5 : 7");
    REQUIRE(q.zero_count() == 0);
    REQUIRE(proj_equal(q, ProjPoint::rational({Rat(3, 2), Rat(-5), Rat(7)})));
    REQUIRE_THROWS_AS(ProjPoint::parse("1:x:2"), ParseError);
    REQUIRE(p.str() == "(0:1:-1)");
}
