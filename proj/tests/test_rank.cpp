#include <catch2/catch_amalgamated.hpp>

#include "hstar/rank.hpp"

using namespace hstar;

namespace {

Ideal parse_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<QPoly> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(s, ring));
    return Ideal::make(ring, std::move(ps));
}

RingPtr P2() { return projective_ring(2); }
Ideal conic_Q() { return parse_ideal(P2(), {"x0*x1 + x0*x2 + x1*x2"}); }
Ideal conic_C() { return parse_ideal(P2(), {"x0*(x1 + x2) + (x1 - x2)^2"}); }
Ideal conic_C_sharp() {
    return parse_ideal(P2(), {"-3*x0^2 - 2*x1^2 + 4*x2^2 + 5*x0*x1 - 11*x0*x2 + 2*x1*x2"});
}
Ideal x22() { return parse_ideal(P2(), {"x1^2 - 2*x0*x2"}); }

}  // namespace

TEST_CASE("zero pattern enumeration covers and dedupes") {
    auto pats = enumerate_zero_patterns({0}, 2);
    REQUIRE(pats.size() == 2);  // [{0},{}] and [{0},{0}]
    REQUIRE(pats[0].total_zeros() == 1);
    REQUIRE(pats[1].total_zeros() == 2);

    auto none = enumerate_zero_patterns({}, 3);
    REQUIRE(none.size() == 1);
    REQUIRE(none[0].total_zeros() == 0);

    auto two = enumerate_zero_patterns({1, 2}, 2);
    for (const auto& p : two) {
        std::set<std::size_t> covered;
        for (const auto& f : p.forced) covered.insert(f.begin(), f.end());
        REQUIRE(covered == std::set<std::size_t>{1, 2});
    }
}

TEST_CASE("a point of the variety has a rank-1 decomposition") {
    auto C = conic_C();
    auto check = decomposition_exists(ProjPoint::parse("0:1:1"), C, 1);
    REQUIRE(check.verdict == DecompositionCheck::Verdict::Exists);

    auto off = decomposition_exists(ProjPoint::parse("0:1:-1"), C, 1);
    REQUIRE(off.verdict == DecompositionCheck::Verdict::NotExists);
}

TEST_CASE("the tangent-line point needs three factors on C") {
    auto C = conic_C();
    auto p = ProjPoint::parse("0:1:-1");

    auto two = decomposition_exists(p, C, 2);
    REQUIRE(two.verdict == DecompositionCheck::Verdict::NotExists);
    for (const auto& cert : two.certificates) {
        REQUIRE(cert.resolved);
        REQUIRE(cert.unit_ideal);
    }

    auto three = decomposition_exists(p, C, 3);
    REQUIRE(three.verdict == DecompositionCheck::Verdict::Exists);

    Rng rng(11);
    auto triple = decomposition_witness(p, C, 3, rng);
    REQUIRE(triple.size() == 3);
    for (const auto& f : triple) REQUIRE(vanishes_at(C.gens, f));
    REQUIRE(proj_equal(hadamard_product(triple), p));
}

TEST_CASE("rank-2 witness pair on the slice line") {
    auto C = conic_C();
    Rng rng(5);
    auto pair = decomposition_witness(ProjPoint::parse("0:2:3"), C, 2, rng);
    REQUIRE(pair.size() == 2);
    bool saw_tangent = false, saw_other = false;
    for (const auto& f : pair) {
        if (proj_equal(f, ProjPoint::parse("0:1:1"))) saw_tangent = true;
        if (proj_equal(f, ProjPoint::parse("-1:10:15"))) saw_other = true;
    }
    REQUIRE(saw_tangent);
    REQUIRE(saw_other);
}

TEST_CASE("rank certificates on the conic C") {
    auto C = conic_C();
    Rng rng(7);
    auto r1 = hadamard_rank(ProjPoint::parse("0:1:1"), C, 4, rng);
    REQUIRE(r1.verdict == RankVerdict::RankEquals);
    REQUIRE(r1.m == 1);
    REQUIRE(replay_certificate(r1, C));

    Rng rng2(7);
    auto r3 = hadamard_rank(ProjPoint::parse("0:1:-1"), C, 4, rng2);
    REQUIRE(r3.verdict == RankVerdict::RankEquals);
    REQUIRE(r3.m == 3);
    REQUIRE(r3.witnesses.size() == 3);
    REQUIRE(replay_certificate(r3, C));
    // every pattern at m = 1, 2 certified infeasible
    for (int m : {1, 2})
        for (const auto& cert : r3.patterns_by_m.at(m)) REQUIRE(cert.unit_ideal);
}

TEST_CASE("points with two nonzero coordinates and a zero have unbounded rank on Q") {
    auto Q = conic_Q();
    Rng rng(13);
    auto r = hadamard_rank(ProjPoint::parse("1:1:0"), Q, 4, rng);
    REQUIRE(r.verdict == RankVerdict::RankGreaterThan);
    REQUIRE(r.m == 4);
    REQUIRE(replay_certificate(r, Q));
}

TEST_CASE("the infinite-rank obstruction fires exactly where it should") {
    auto Q = conic_Q();
    auto obs = infinite_rank_obstruction(ProjPoint::parse("1:1:0"), Q);
    REQUIRE(obs.has_value());
    REQUIRE(*obs == 2);
    auto obs2 = infinite_rank_obstruction(ProjPoint::parse("2:0:5"), Q);
    REQUIRE(obs2.has_value());
    REQUIRE(*obs2 == 1);

    // C is strongly concise: no obstruction anywhere.
    auto C = conic_C();
    REQUIRE(!infinite_rank_obstruction(ProjPoint::parse("0:1:-1"), C).has_value());
    // all-nonzero points are never obstructed
    REQUIRE(!infinite_rank_obstruction(ProjPoint::parse("1:1:1"), Q).has_value());
}

TEST_CASE("border rank drops below rank at the tangent-line point") {
    auto C = conic_C();
    PowerCache cache(C);
    auto b = border_rank(ProjPoint::parse("0:1:-1"), C, 4, cache);
    REQUIRE(b.verdict == RankVerdict::BorderRank);
    REQUIRE(b.m == 2);
    REQUIRE(replay_certificate(b, C));

    auto on = border_rank(ProjPoint::parse("0:1:1"), C, 4, cache);
    REQUIRE(on.m == 1);
}

TEST_CASE("border rank on the binomial hypersurface equals the exact rank") {
    auto I = x22();
    PowerCache cache(I);
    for (int m = 1; m <= 4; ++m) {
        auto pm = ProjPoint::rational({Rat(1), Rat(1), rat_pow(Rat(1, 2), (unsigned long)m)});
        auto b = border_rank(pm, I, 6, cache);
        REQUIRE(b.verdict == RankVerdict::BorderRank);
        REQUIRE(b.m == m);
        Rng rng(m);
        auto r = hadamard_rank(pm, I, m + 1, rng);
        REQUIRE(r.verdict == RankVerdict::RankEquals);
        REQUIRE(r.m == m);
        REQUIRE(replay_certificate(r, I));
    }
}

TEST_CASE("sharpness on the coordinate-point-free conic") {
    auto CS = conic_C_sharp();
    Rng rng(3);
    auto r = hadamard_rank(ProjPoint::parse("1:0:0"), CS, 3, rng);
    REQUIRE(r.verdict == RankVerdict::RankEquals);
    REQUIRE(r.m == 2);
    REQUIRE(!r.witnesses.empty());
    REQUIRE(replay_certificate(r, CS));
    for (const auto& cert : r.patterns_by_m.at(1)) REQUIRE(cert.unit_ideal);

    // The known pair is a valid witness (replayed by evaluation).
    auto w1 = ProjPoint::parse("1:1:0");
    auto w2 = ProjPoint::parse("1:0:3");
    REQUIRE(vanishes_at(CS.gens, w1));
    REQUIRE(vanishes_at(CS.gens, w2));
    REQUIRE(proj_equal(hadamard_point(w1, w2), ProjPoint::parse("1:0:0")));

    auto b = border_rank(ProjPoint::parse("1:0:0"), CS, 3);
    REQUIRE(b.verdict == RankVerdict::BorderRank);
    REQUIRE(b.m == 2);
}

TEST_CASE("zero pattern reduction on C") {
    auto C = conic_C();
    Rng rng(21);
    auto red = zero_pattern_reduce(ProjPoint::parse("0:5:7"), C, rng);
    REQUIRE(red.zeros == 1);
    REQUIRE(red.witnesses.size() == 1);
    REQUIRE(proj_equal(red.witnesses[0], ProjPoint::parse("0:1:1")));
    REQUIRE(proj_equal(red.reduced, ProjPoint::parse("1:5:7")));

    // all-nonzero input passes through
    Rng rng2(22);
    auto nored = zero_pattern_reduce(ProjPoint::parse("2:5:7"), C, rng2);
    REQUIRE(nored.zeros == 0);
    REQUIRE(proj_equal(nored.reduced, ProjPoint::parse("2:5:7")));

    // Q is not strongly concise
    Rng rng3(23);
    REQUIRE_THROWS_AS(zero_pattern_reduce(ProjPoint::parse("0:1:1"), conic_Q(), rng3),
                      NotStronglyConcise);
}

TEST_CASE("composed reduction certificate bounds the rank") {
    auto C = conic_C();
    Rng rng(31);
    auto p = ProjPoint::parse("0:1:-1");
    auto red = zero_pattern_reduce(p, C, rng);
    auto inner = hadamard_rank(red.reduced, C, 4, rng);
    REQUIRE(inner.verdict == RankVerdict::RankEquals);
    // rank(p) <= rank(p') + z
    RankCertificate at_most(p);
    at_most.verdict = RankVerdict::RankAtMost;
    at_most.m = inner.m + static_cast<int>(red.zeros);
    at_most.witnesses = inner.witnesses;
    for (const auto& w : red.witnesses) at_most.witnesses.push_back(w);
    REQUIRE(replay_certificate(at_most, C));
}

TEST_CASE("border rank never exceeds rank across the inventory") {
    struct Case {
        Ideal I;
        ProjPoint p;
    };
    std::vector<Case> cases;
    cases.push_back({conic_C(), ProjPoint::parse("0:1:1")});
    cases.push_back({conic_C(), ProjPoint::parse("0:2:3")});
    cases.push_back({conic_C(), ProjPoint::parse("0:1:-1")});
    cases.push_back({conic_C_sharp(), ProjPoint::parse("1:0:0")});
    cases.push_back({x22(), ProjPoint::rational({Rat(1), Rat(1), Rat(1, 4)})});
    for (auto& [I, p] : cases) {
        Rng rng(55);
        auto r = hadamard_rank(p, I, 4, rng);
        auto b = border_rank(p, I, 4);
        if (r.verdict == RankVerdict::RankEquals && b.verdict == RankVerdict::BorderRank)
            REQUIRE(b.m <= r.m);
    }
}

TEST_CASE("rank decomposition over an algebraic target point") {
    // A point on X_{2,2,c=2} with an irrational coordinate: (1 : sqrt2 : 1).
    UPoly def({Rat(-2), Rat(0), Rat(1)});
    auto roots = isolate_roots(def);
    AlgNum sqrt2 = AlgNum::primitive(roots[1]);
    std::vector<AlgNum> coords{AlgNum(Rat(1)), sqrt2, AlgNum(Rat(1))};
    ProjPoint p(std::move(coords));
    auto I = x22();
    auto one = decomposition_exists(p, I, 1);
    REQUIRE(one.verdict == DecompositionCheck::Verdict::Exists);  // 2 - 2*1*1 = 0
    // (1 : sqrt3 : 1) does not lie on X (3 - 2 != 0) and not on the square
    // (3 - 4 != 0) but on the cube? 3 - 8 != 0; all infeasible at m = 1.
    UPoly def3({Rat(-3), Rat(0), Rat(1)});
    auto roots3 = isolate_roots(def3);
    AlgNum sqrt3 = AlgNum::primitive(roots3[1]);
    ProjPoint q(std::vector<AlgNum>{AlgNum(Rat(1)), sqrt3, AlgNum(Rat(1))});
    auto miss = decomposition_exists(q, I, 1);
    REQUIRE(miss.verdict == DecompositionCheck::Verdict::NotExists);
}

TEST_CASE("witness extraction determinism for a fixed seed") {
    auto C = conic_C();
    auto run = [&](std::uint64_t seed) {
        Rng rng(seed);
        auto ws = decomposition_witness(ProjPoint::parse("0:1:-1"), C, 3, rng);
        std::string key;
        for (const auto& w : ws) key += w.sort_key() + "#";
        return key;
    };
    REQUIRE(run(17) == run(17));
}
