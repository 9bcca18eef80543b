#include <catch2/catch_amalgamated.hpp>

#include "hstar/conciseness.hpp"

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
    return parse_ideal(
        P2(), {"-3*x0^2 - 2*x1^2 + 4*x2^2 + 5*x0*x1 - 11*x0*x2 + 2*x1*x2"});
}
Ideal x22() { return parse_ideal(P2(), {"x1^2 - 2*x0*x2"}); }

}  // namespace

TEST_CASE("conciseness verdicts") {
    auto q = is_concise(conic_Q());
    REQUIRE(q == std::vector<bool>{true, true, true});

    auto h = is_concise(parse_ideal(P2(), {"x0"}));
    REQUIRE(h == std::vector<bool>{false, true, true});

    auto b = is_concise(x22());
    REQUIRE(b == std::vector<bool>{true, true, true});
}

TEST_CASE("strong conciseness verdicts") {
    auto rq = is_strongly_concise(conic_Q());
    REQUIRE(rq.all_concise());
    REQUIRE(rq.strongly_concise == std::vector<bool>{false, false, false});

    auto rc = is_strongly_concise(conic_C());
    REQUIRE(rc.all_strongly_concise());

    auto rb = is_strongly_concise(x22());
    REQUIRE(!rb.all_strongly_concise());
    REQUIRE(rb.strongly_concise == std::vector<bool>{false, false, false});

    auto rs = is_strongly_concise(conic_C_sharp());
    REQUIRE(rs.all_strongly_concise());
}

TEST_CASE("strong conciseness implies conciseness on the inventory") {
    for (const Ideal& I : {conic_Q(), conic_C(), conic_C_sharp(), x22()}) {
        auto rep = is_strongly_concise(I);
        for (std::size_t i = 0; i < rep.concise.size(); ++i)
            if (rep.strongly_concise[i]) REQUIRE(rep.concise[i]);
    }
}

TEST_CASE("binomial search") {
    auto found = binomial_search(x22(), 2);
    REQUIRE(found.has_value());
    REQUIRE(normal_form(*found, groebner(x22())).is_zero_poly());
    REQUIRE(found->term_count() == 2);

    REQUIRE(!binomial_search(conic_C(), 3).has_value());

    auto lin = binomial_search(parse_ideal(P2(), {"x0 - x1"}), 1);
    REQUIRE(lin.has_value());
    REQUIRE(lin->term_count() == 2);
    REQUIRE(lin->degree() == 1);
}

TEST_CASE("binomial search replayability") {
    for (const Ideal& I : {x22(), parse_ideal(P2(), {"x0 - x1"}),
                           parse_ideal(P2(), {"x0^2 - 3*x1*x2"})}) {
        auto found = binomial_search(I, default_binomial_bound(I));
        REQUIRE(found.has_value());
        REQUIRE(normal_form(*found, groebner(I)).is_zero_poly());
    }
}

TEST_CASE("finiteness trichotomy") {
    auto vc = generic_rank_finiteness(conic_C(), default_binomial_bound(conic_C()));
    REQUIRE(vc.kind == Finiteness::GenericFinite);

    auto vb = generic_rank_finiteness(x22(), default_binomial_bound(x22()));
    REQUIRE(vb.kind == Finiteness::GenericInfiniteBinomial);
    REQUIRE(vb.binomial.has_value());

    auto vh = generic_rank_finiteness(parse_ideal(P2(), {"x0"}), 2);
    REQUIRE(vh.kind == Finiteness::GenericInfiniteNotConcise);
    REQUIRE(vh.coordinate == 0);

    // Q is concise and non-binomial but not strongly concise: stays Unknown
    // without the opt-in flag.
    auto vq = generic_rank_finiteness(conic_Q(), 4);
    REQUIRE(vq.kind == Finiteness::Unknown);
    auto vq2 = generic_rank_finiteness(conic_Q(), 4, true);
    REQUIRE(vq2.kind == Finiteness::GenericFinite);
}

TEST_CASE("strong conciseness witness on C at coordinate 0") {
    Rng rng(42);
    auto w = strong_conciseness_witness(conic_C(), 0, rng);
    REQUIRE(proj_equal(w, ProjPoint::parse("0:1:1")));
}

TEST_CASE("strong conciseness witnesses on C at all coordinates") {
    for (std::size_t i = 0; i < 3; ++i) {
        Rng rng(100 + i);
        auto w = strong_conciseness_witness(conic_C(), i, rng);
        REQUIRE(w.zero_set() == std::vector<std::size_t>{i});
        REQUIRE(vanishes_at(conic_C().gens, w));
    }
}

TEST_CASE("witness on the engineered conic at coordinate 2") {
    Rng rng(7);
    auto w = strong_conciseness_witness(conic_C_sharp(), 2, rng);
    REQUIRE(proj_equal(w, ProjPoint::parse("1:1:0")));
}

TEST_CASE("witness extraction fails loudly when strong conciseness fails") {
    Rng rng(9);
    REQUIRE_THROWS_AS(strong_conciseness_witness(conic_Q(), 0, rng), WitnessNotFound);
}
