#include <catch2/catch_amalgamated.hpp>
#include <filesystem>

#include "hstar/ideal.hpp"
#include "hstar/rng.hpp"

using namespace hstar;

namespace {

Ideal parse_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<QPoly> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(s, ring));
    return Ideal::make(ring, std::move(ps));
}

}  // namespace

TEST_CASE("buchberger on a principal ideal returns the generator") {
    auto ring = projective_ring(2);
    auto I = parse_ideal(ring, {"x1^2 - 2*x0*x2"});
    auto G = groebner(I);
    REQUIRE(G.basis.size() == 1);
    REQUIRE(to_string(G.basis[0]) == "x1^2 - 2*x0*x2");
    auto Glex = groebner(I, MonomialOrder::lex());
    REQUIRE(Glex.basis.size() == 1);
}

TEST_CASE("buchberger detects the unit ideal") {
    auto ring = projective_ring(1);
    auto I = parse_ideal(ring, {"x0", "1 - x0"});
    auto G = groebner(I);
    REQUIRE(G.is_unit());
    REQUIRE(is_unit_ideal(I));
    REQUIRE(!is_unit_ideal(parse_ideal(projective_ring(2), {"x1^2 - 2*x0*x2"})));
}

TEST_CASE("buchberger on the classic cyclic-ish system") {
    // x^2 + y^2 - 1, x - y has the reduced grevlex basis {x - y, 2y^2 - 1} -> monic
    auto ring = make_ring({"x", "y"});
    auto I = parse_ideal(ring, {"x^2 + y^2 - 1", "x - y"});
    auto G = groebner(I);
    REQUIRE(G.basis.size() == 2);
    QPoly nf = normal_form(parse_polynomial("x^2 + y^2 - 1", ring), G);
    REQUIRE(nf.is_zero_poly());
}

TEST_CASE("normal form properties") {
    auto ring = projective_ring(2);
    auto I = parse_ideal(ring, {"x0*x1 + x0*x2 + x1*x2", "x0^2 - x1*x2"});
    auto G = groebner(I);
    for (const auto& g : I.gens) REQUIRE(normal_form(g, G).is_zero_poly());
    auto one = QPoly::constant(ring, Rat(1));
    REQUIRE(normal_form(one, G) == one);
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        std::vector<QPoly::Term> ts;
        for (int k = 0; k < 4; ++k) {
            std::vector<std::uint32_t> e(3);
            for (auto& v : e) v = static_cast<std::uint32_t>(rng.below(4));
            ts.emplace_back(Monomial::of(e), rng.rat_int(7));
        }
        QPoly f = QPoly::from_terms(ring, std::move(ts));
        QPoly n1 = normal_form(f, G);
        REQUIRE(normal_form(n1, G) == n1);
    }
}

TEST_CASE("radical membership via the extended-ring trick") {
    auto ring = projective_ring(2);
    auto x1x2 = parse_polynomial("x1*x2", ring);
    auto Q0 = parse_ideal(ring, {"x0*x1 + x0*x2 + x1*x2", "x0"});
    REQUIRE(radical_membership(x1x2, Q0));
    auto C0 = parse_ideal(ring, {"x0*(x1 + x2) + (x1 - x2)^2", "x0"});
    REQUIRE(!radical_membership(x1x2, C0));
    auto ring1 = projective_ring(0);
    auto I = parse_ideal(ring1, {"x0^2"});
    REQUIRE(radical_membership(parse_polynomial("x0", ring1), I));
}

TEST_CASE("elimination computes projection closures") {
    auto r3 = make_ring({"x", "y", "z"});
    auto I = parse_ideal(r3, {"z - x*y", "x - 1"});
    Ideal E = eliminate(I, {0, 1});
    REQUIRE(E.is_zero_ideal());
    REQUIRE(E.ring->names == std::vector<std::string>{"z"});

    auto r2 = make_ring({"x", "y"});
    auto J = parse_ideal(r2, {"x^2 + y^2", "x - y"});
    Ideal F = eliminate(J, {0});
    REQUIRE(F.gens.size() == 1);
    REQUIRE(to_string(F.gens[0]) == "y^2");
}

TEST_CASE("ideal intersection via the extra variable") {
    auto ring = projective_ring(2);
    auto I = parse_ideal(ring, {"x0"});
    auto J = parse_ideal(ring, {"x1"});
    auto K = intersect_ideals(I, J);
    REQUIRE(ideal_equal(K, parse_ideal(ring, {"x0*x1"})));

    auto A = parse_ideal(ring, {"x0", "x1"});
    REQUIRE(ideal_equal(intersect_ideals(A, A), A));

    auto B = parse_ideal(ring, {"x0", "x2"});
    auto AB = intersect_ideals(A, B);
    REQUIRE(ideal_equal(AB, parse_ideal(ring, {"x0", "x1*x2"})));
}

TEST_CASE("projective dimension from leading terms") {
    auto ring = projective_ring(2);
    REQUIRE(projective_dimension(parse_ideal(ring, {"x1^2 - 2*x0*x2"})) == 1);
    REQUIRE(projective_dimension(Ideal::zero(ring)) == 2);
    REQUIRE(projective_dimension(parse_ideal(ring, {"x0", "x1"})) == 0);
    // Irrelevant maximal ideal: empty projective set, dimension -1.
    auto irrelevant = parse_ideal(projective_ring(1), {"x0", "x1"});
    REQUIRE(projective_dimension(irrelevant) == -1);
    // The unit ideal (generated by a nonzero constant) raises EmptyVariety.
    auto unit = parse_ideal(projective_ring(1), {"1"});
    REQUIRE_THROWS_AS(projective_dimension(unit), EmptyVariety);
}

TEST_CASE("hypersurface dimension is N-1 in P^N") {
    Rng rng(3);
    for (int N = 2; N <= 4; ++N) {
        auto ring = projective_ring(N);
        // random homogeneous quadric
        std::vector<QPoly::Term> ts;
        for (int i = 0; i <= N; ++i)
            for (int j = i; j <= N; ++j) {
                std::vector<std::uint32_t> e(static_cast<std::size_t>(N) + 1, 0);
                e[static_cast<std::size_t>(i)] += 1;
                e[static_cast<std::size_t>(j)] += 1;
                ts.emplace_back(Monomial::of(e), rng.rat_int(9));
            }
        QPoly f = QPoly::from_terms(ring, std::move(ts));
        if (f.is_zero_poly()) continue;
        REQUIRE(projective_dimension(Ideal::make(ring, {f})) == N - 1);
    }
}

TEST_CASE("every generator reduces to zero against its own basis (random ideals)") {
    Rng rng(29);
    auto ring = projective_ring(2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<QPoly> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<QPoly::Term> ts;
            for (int k = 0; k < 3; ++k) {
                std::vector<std::uint32_t> e(3);
                for (auto& v : e) v = static_cast<std::uint32_t>(rng.below(3));
                ts.emplace_back(Monomial::of(e), rng.rat_int(5));
            }
            QPoly f = QPoly::from_terms(ring, std::move(ts));
            if (!f.is_zero_poly()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        Ideal I = Ideal::make(ring, gens);
        auto G = groebner(I);
        for (const auto& g : gens) REQUIRE(normal_form(g, G).is_zero_poly());
    }
}

TEST_CASE("groebner runs are deterministic") {
    auto ring = projective_ring(3);
    auto I = parse_ideal(ring, {"x0*x1 - x2*x3", "x0^2 - x1*x3", "x1^2 + x2^2 - x0*x3"});
    GbCache::instance().clear_memory();
    auto a = groebner(I);
    GbCache::instance().clear_memory();
    auto b = groebner(I);
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        REQUIRE(to_string(a.basis[i]) == to_string(b.basis[i]));
    REQUIRE(a.steps == b.steps);
}

TEST_CASE("budget exhaustion is loud, not wrong") {
    auto ring = projective_ring(3);
    auto I = parse_ideal(ring, {"x0*x1 - x2*x3", "x0^2 - x1*x3", "x1^2 + x2^2 - x0*x3"});
    GbCache::instance().clear_memory();
    GbOptions tiny;
    tiny.budget = 3;
    REQUIRE_THROWS_AS(groebner(I, MonomialOrder::grevlex(), tiny), BudgetExceeded);
    GbCache::instance().clear_memory();
}

TEST_CASE("on-disk cache round-trips") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "hstar_gb_cache_test";
    fs::remove_all(dir);
    GbCache::instance().set_directory(dir);
    auto ring = projective_ring(2);
    auto I = parse_ideal(ring, {"x0*x1 + x0*x2 + x1*x2", "x0^2 - x1*x2"});
    auto a = groebner(I);
    REQUIRE(!a.basis.empty());
    // Drop the memo; the second run must be served from disk.
    GbCache::instance().clear_memory();
    auto b = groebner(I);
    REQUIRE(a.basis == b.basis);
    REQUIRE(b.steps == 0);  // cache hit spends no steps
    GbCache::instance().set_directory(std::nullopt);
    GbCache::instance().clear_memory();
    fs::remove_all(dir);
}

TEST_CASE("block order has the elimination property") {
    auto ord = MonomialOrder::block(2);
    // any monomial using the first block beats any pure second-block monomial
    auto a = Monomial::of({1, 0, 0, 0});
    auto b = Monomial::of({0, 0, 7, 9});
    REQUIRE(ord.greater(a, b));
}
