#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "noether/ideal.hpp"
#include "noether/monomial_ideal.hpp"
#include "noether/verify.hpp"
#include "test_util.hpp"

using namespace noether;
using test_util::I;
using test_util::MI;

namespace {

std::set<std::string> component_set(const MonomialDecomposition& report) {
    std::set<std::string> out;
    for (const auto& c : report.components) out.insert(c.ideal.str());
    return out;
}

IdealPresentation intersection_of(const MonomialDecomposition& report) {
    MonomialIdeal acc = report.components.front().ideal;
    for (size_t i = 1; i < report.components.size(); ++i)
        acc = acc.intersect(report.components[i].ideal);
    return acc.to_presentation();
}

} // namespace

TEST_CASE("minimalize drops redundant generators") {
    auto R = test_util::ring_xy();
    CHECK(MI(R, "x^2, x*y, x^2*y").min_gens() == MI(R, "x^2, x*y").min_gens());
    CHECK(MI(R, "x").min_gens().size() == 1);
    CHECK(MI(R, "x^2, x*y, y^2").min_gens().size() == 3);
}

TEST_CASE("irreducibility of monomial ideals") {
    auto R = test_util::ring_xy();
    auto S = test_util::ring_xyz();
    CHECK(is_irreducible(MI(R, "x^2, y")));
    CHECK(!is_irreducible(MI(R, "x^2, x*y")));
    CHECK(is_irreducible(MI(S, "x^3, y, z")));
    CHECK_THROWS_AS(is_irreducible(MI(R, "1")), value_error);
}

TEST_CASE("irreducible decomposition of the worked examples") {
    auto R = test_util::ring_xy();
    CHECK(component_set(irreducible_decompose(MI(R, "x^2, x*y"))) ==
          std::set<std::string>{"(x)", "(x^2, y)"});
    CHECK(component_set(irreducible_decompose(MI(R, "x^2, x*y, y^2"))) ==
          std::set<std::string>{"(x^2, y)", "(x, y^2)"});
    CHECK(component_set(irreducible_decompose(MI(R, "x^3, x*y, y^3"))) ==
          std::set<std::string>{"(x^3, y)", "(x, y^3)"});
    CHECK_THROWS_AS(irreducible_decompose(MI(R, "1")), value_error);
}

TEST_CASE("primariness of monomial ideals") {
    auto R = test_util::ring_xy();
    auto S = test_util::ring_xyz();
    CHECK(!is_primary(MI(R, "x^2, x*y")));
    CHECK(is_primary(MI(R, "x^2, x*y, y^3")));
    CHECK(is_primary(MI(S, "x, z")));
}

TEST_CASE("associated primes") {
    auto R = test_util::ring_xy();
    auto S = test_util::ring_xyz();
    CHECK(associated_prime(MI(R, "x^2, y")) == std::vector<int>{0, 1});
    CHECK(associated_prime(MI(S, "x^3, y, z")) == std::vector<int>{0, 1, 2});
    CHECK(associated_prime(MI(R, "x")) == std::vector<int>{0});
    CHECK_THROWS_AS(associated_prime(MI(R, "x^2, x*y")), value_error);
}

TEST_CASE("exponents match the enumeration oracle") {
    auto R = test_util::ring_xy();
    auto S = test_util::ring_xyz();
    CHECK(exponent_of(MI(R, "x^2, y")) == 2);
    CHECK(exponent_of(MI(R, "x, y")) == 1);
    // Oracle-derived value; the upper bound 1 + sum(e_i - 1) here is 4 but
    // the least power is 3.
    CHECK(exponent_of(MI(S, "x^3, y^2, x^2*y, z")) == 3);
    CHECK(test_util::exponent_by_enumeration(MI(S, "x^3, y^2, x^2*y, z")) == 3);

    std::mt19937 rng(53);
    int checked = 0;
    while (checked < 40) {
        MonomialIdeal ideal = test_util::random_monomial_ideal(rng, S, 4, 4);
        if (ideal.is_unit() || !is_primary(ideal)) continue;
        CHECK(exponent_of(ideal) == test_util::exponent_by_enumeration(ideal));
        ++checked;
    }
}

TEST_CASE("primary decomposition of the worked examples") {
    auto R = test_util::ring_xy();
    auto S = test_util::ring_xyz();

    MonomialDecomposition hentzelt = primary_decompose(MI(R, "x^2, x*y"));
    REQUIRE(hentzelt.components.size() == 2);
    CHECK(hentzelt.components[0].ideal == MI(R, "x"));
    CHECK(*hentzelt.components[0].prime == std::vector<int>{0});
    CHECK(*hentzelt.components[0].isolated);
    CHECK(hentzelt.components[1].ideal == MI(R, "x^2, y"));
    CHECK(*hentzelt.components[1].prime == std::vector<int>{0, 1});
    CHECK(!*hentzelt.components[1].isolated);

    MonomialDecomposition lines = primary_decompose(MI(S, "x^3, x^2*y, x*y^2, z"));
    REQUIRE(lines.components.size() == 2);
    CHECK(lines.components[0].ideal == MI(S, "x, z"));
    CHECK(*lines.components[0].isolated);
    CHECK(lines.components[1].ideal == MI(S, "x^3, y^2, x^2*y, z"));
    CHECK(!*lines.components[1].isolated);

    MonomialDecomposition already = primary_decompose(MI(R, "x^2, y"));
    REQUIRE(already.components.size() == 1);
    CHECK(already.components[0].ideal == MI(R, "x^2, y"));
}

TEST_CASE("isolated flags") {
    CHECK(isolated_flags({{0}, {0, 1}}) == std::vector<bool>{true, false});
    CHECK(isolated_flags({{0, 2}, {0, 1, 2}}) == std::vector<bool>{true, false});
    CHECK(isolated_flags({{0}, {1}}) == std::vector<bool>{true, true});
    CHECK_THROWS_AS(isolated_flags({{0}, {0}}), value_error);
}

TEST_CASE("relatively prime decomposition groups comparable primes") {
    auto R = test_util::ring_xy();
    auto S = test_util::ring_xyz();

    MonomialDecomposition lines = relprime_decompose(MI(S, "x^3, x^2*y, x*y^2, z"));
    REQUIRE(lines.components.size() == 1);
    CHECK(lines.components[0].ideal == MI(S, "x^3, x^2*y, x*y^2, z"));

    MonomialDecomposition split = relprime_decompose(MI(S, "x*z, y*z"));
    REQUIRE(split.components.size() == 2);
    CHECK(component_set(split) == std::set<std::string>{"(z)", "(x, y)"});

    MonomialDecomposition hentzelt = relprime_decompose(MI(R, "x^2, x*y"));
    REQUIRE(hentzelt.components.size() == 1);
    CHECK(hentzelt.components[0].ideal == MI(R, "x^2, x*y"));
}

TEST_CASE("coprime decomposition of a proper monomial ideal is itself") {
    auto R = test_util::ring_xy();
    auto S = test_util::ring_xyz();
    CHECK(coprime_decompose(MI(R, "x^2, x*y")).components.size() == 1);
    CHECK(coprime_decompose(MI(R, "x")).components.size() == 1);
    MonomialDecomposition z_case = coprime_decompose(MI(S, "x*z, y*z"));
    REQUIRE(z_case.components.size() == 1);
    CHECK(z_case.components[0].ideal == MI(S, "x*z, y*z"));
    // The two relprime groups are not coprime: their sum omits 1.
    CHECK(!is_coprime(I(S, "z"), I(S, "x, y")));
}

TEST_CASE("decomposition round-trip: components intersect back to the input") {
    auto S = test_util::ring_xyz();
    std::mt19937 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal ideal = test_util::random_monomial_ideal(rng, S, 4, 5);
        if (ideal.is_unit()) continue;
        IdealPresentation reference = ideal.to_presentation();
        for (DecompKind kind : {DecompKind::Irreducible, DecompKind::MaximalPrimary,
                                DecompKind::RelativelyPrime, DecompKind::Coprime}) {
            MonomialDecomposition report = decompose(ideal, kind);
            CHECK(equal(intersection_of(report), reference));
        }
    }
}

TEST_CASE("splitting strategy does not change the decomposition") {
    auto S = test_util::ring_xyz();
    std::mt19937 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal ideal = test_util::random_monomial_ideal(rng, S, 4, 5);
        if (ideal.is_unit()) continue;
        auto first = irreducible_components(ideal, SplitStrategy::FirstVariable);
        auto last = irreducible_components(ideal, SplitStrategy::LastVariable);
        CHECK(first == last);
    }
}

TEST_CASE("every irreducible component is primary; prime sets agree") {
    auto S = test_util::ring_xyz();
    std::mt19937 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal ideal = test_util::random_monomial_ideal(rng, S, 4, 5);
        if (ideal.is_unit()) continue;
        MonomialDecomposition irr = irreducible_decompose(ideal);
        std::set<std::vector<int>> irr_primes;
        for (const auto& c : irr.components) {
            CHECK(is_primary(c.ideal));
            irr_primes.insert(*c.prime);
        }
        std::set<std::vector<int>> primary_primes;
        for (const auto& c : primary_decompose(ideal).components)
            primary_primes.insert(*c.prime);
        CHECK(irr_primes == primary_primes);
    }
}

TEST_CASE("intersections of same-prime primaries stay primary") {
    auto S = test_util::ring_xyz();
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> exp_dist(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        // Two random irreducible ideals on the same support.
        std::vector<int> support = {0, 1};
        if (trial % 2) support.push_back(2);
        std::vector<Monomial> a, b;
        for (int v : support) {
            Monomial m = Monomial::one(S->arity());
            m.exps[v] = exp_dist(rng);
            a.push_back(m);
            m.exps[v] = exp_dist(rng);
            b.push_back(m);
        }
        MonomialIdeal qa = MonomialIdeal::from_generators(S, a);
        MonomialIdeal qb = MonomialIdeal::from_generators(S, b);
        MonomialIdeal meet = qa.intersect(qb);
        CHECK(is_primary(meet));
        CHECK(associated_prime(meet) == support);
    }
}

TEST_CASE("relative primality: quotient test matches prime containment") {
    auto S = test_util::ring_xyz();

    // Orientation table, pinned against the quotient ground truth.
    struct Row {
        const char* r;
        const char* s;
        bool expected;
    };
    const Row rows[] = {
        {"x^2, y", "x", true},   // (x^2,y) relatively prime to (x)
        {"x", "x^2, y", false},  // but not conversely
        {"x", "y", true},        // incomparable primes both ways
        {"y", "x", true},
        {"x*z, y*z", "x, y", false}, // prime (z) not inside; (x,y) inside (x,y)
        {"x, y", "x*z, y*z", false},
    };
    for (const auto& row : rows) {
        bool by_quotient = is_relatively_prime(I(S, row.r), I(S, row.s));
        bool by_primes = relatively_prime_by_primes(MI(S, row.r), MI(S, row.s));
        CHECK(by_quotient == row.expected);
        CHECK(by_primes == row.expected);
    }

    std::mt19937 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal r = test_util::random_monomial_ideal(rng, S, 3, 4);
        MonomialIdeal s = test_util::random_monomial_ideal(rng, S, 3, 4);
        if (r.is_unit() || s.is_unit()) continue;
        CHECK(relatively_prime_by_primes(r, s) ==
              is_relatively_prime(r.to_presentation(), s.to_presentation()));
    }
}

TEST_CASE("embedded components absorb a power of their complement") {
    auto S = test_util::ring_xyz();
    std::mt19937 rng(79);
    int multi = 0;
    for (int trial = 0; trial < 60 && multi < 15; ++trial) {
        MonomialIdeal ideal = test_util::random_monomial_ideal(rng, S, 4, 4);
        if (ideal.is_unit()) continue;
        MonomialDecomposition primary = primary_decompose(ideal);
        if (primary.components.size() < 2) continue;
        ++multi;
        for (size_t i = 0; i < primary.components.size(); ++i) {
            MonomialIdeal rest;
            bool first = true;
            for (size_t j = 0; j < primary.components.size(); ++j) {
                if (j == i) continue;
                rest = first ? primary.components[j].ideal
                             : rest.intersect(primary.components[j].ideal);
                first = false;
            }
            const MonomialComponent& c = primary.components[i];
            int bound = *c.exponent;
            bool some_power_inside = false;
            MonomialIdeal power = rest;
            for (int k = 1; k <= bound && !some_power_inside; ++k) {
                if (k > 1) {
                    std::vector<Monomial> gens;
                    for (const auto& a : power.min_gens())
                        for (const auto& b : rest.min_gens()) gens.push_back(a * b);
                    power = MonomialIdeal::from_generators(S, gens);
                }
                if (c.ideal.contains(power)) some_power_inside = true;
            }
            CHECK(some_power_inside == !*c.isolated);
        }
    }
    CHECK(multi > 0);
}

TEST_CASE("relprime output passes the shortest check") {
    auto S = test_util::ring_xyz();
    std::mt19937 rng(83);
    int multi = 0;
    for (int trial = 0; trial < 60 && multi < 10; ++trial) {
        MonomialIdeal ideal = test_util::random_monomial_ideal(rng, S, 4, 4);
        if (ideal.is_unit()) continue;
        MonomialDecomposition groups = relprime_decompose(ideal);
        if (groups.components.size() < 2) continue;
        ++multi;
        DecompositionClaim claim;
        claim.target = ideal.to_presentation();
        claim.kind = DecompKind::RelativelyPrime;
        for (const auto& c : groups.components)
            claim.components.push_back(c.ideal.to_presentation());
        VerificationReport report = verify_decomposition(claim);
        CHECK(report.ok());
        REQUIRE(report.find("shortest"));
        CHECK(report.find("shortest")->status == CheckStatus::Pass);
    }
    CHECK(multi > 0);
}

TEST_CASE("splitting depth stays within the total degree bound") {
    auto S = test_util::ring_xyz();
    std::mt19937 rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal ideal = test_util::random_monomial_ideal(rng, S, 4, 5);
        if (ideal.is_unit()) continue;
        int degree_sum = 0;
        for (const auto& m : ideal.min_gens()) degree_sum += m.degree();
        int depth = 0;
        irreducible_components(ideal, SplitStrategy::FirstVariable, &depth);
        CHECK(depth <= degree_sum);
    }
}
