#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "noether/groebner.hpp"
#include "noether/ideal.hpp"
#include "test_util.hpp"

using namespace noether;
using test_util::I;
using test_util::P;

namespace {

std::vector<std::string> basis_strings(const GroebnerBasis& basis) {
    std::vector<std::string> out;
    for (const auto& p : basis.polys) out.push_back(p.str());
    return out;
}

// Divide-by-hand oracle for a single divisor under lex.
Polynomial divide_remainder(Polynomial p, const Polynomial& d) {
    auto order = MonomialOrder::lex();
    Polynomial remainder = Polynomial::zero(p.ring());
    Term dl = noether::detail::leading_term(d, order);
    while (!p.is_zero()) {
        Term pl = noether::detail::leading_term(p, order);
        if (dl.mono.divides(pl.mono)) {
            p = p - d.times_term(pl.coeff / dl.coeff, pl.mono.div_exact(dl.mono));
        } else {
            Polynomial t = Polynomial::monomial(p.ring(), pl.mono, pl.coeff);
            remainder = remainder + t;
            p = p - t;
        }
    }
    return remainder;
}

// Number of monomials of degree <= cap not divisible by any of the given
// leading monomials (a Dickson's-lemma style measure).
long standard_monomial_count(const std::vector<Monomial>& lms, int arity, int cap) {
    long count = 0;
    std::vector<int> exps(arity, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == arity) {
            Monomial m{exps};
            for (const auto& lm : lms)
                if (lm.divides(m)) return;
            ++count;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        exps[pos] = 0;
    };
    rec(rec, 0, cap);
    return count;
}

} // namespace

TEST_CASE("normal form") {
    auto R = test_util::ring_xy();
    auto lex = MonomialOrder::lex();
    std::vector<Polynomial> basis = {P(R, "x^2"), P(R, "x*y")};
    CHECK(normal_form(P(R, "x*y^2"), basis, lex).is_zero());
    CHECK(normal_form(P(R, "x"), basis, lex) == P(R, "x"));

    std::vector<Polynomial> linear = {P(R, "x + y")};
    Polynomial reduced = normal_form(P(R, "x^2"), linear, lex);
    CHECK(reduced == P(R, "y^2"));
    CHECK(reduced == divide_remainder(P(R, "x^2"), P(R, "x + y")));
}

TEST_CASE("buchberger on the worked inputs") {
    auto R = test_util::ring_xy();
    auto lex = MonomialOrder::lex();

    // S-polynomial of (x^2, x*y) already reduces to zero.
    GroebnerBasis monomials = buchberger(I(R, "x^2, x*y"), lex);
    CHECK(basis_strings(monomials) == std::vector<std::string>{"x^2", "x*y"});

    GroebnerBasis closure = buchberger(I(R, "x^2, x + y"), lex);
    CHECK(basis_strings(closure) == std::vector<std::string>{"x + y", "y^2"});

    GroebnerBasis unit = buchberger(I(R, "x - 1, x"), lex);
    CHECK(unit.is_unit());

    GroebnerBasis zero = buchberger(IdealPresentation::zero(R), lex);
    CHECK(zero.is_zero());
}

TEST_CASE("membership") {
    auto R = test_util::ring_xy();
    CHECK(member(P(R, "x*y^2"), I(R, "x^2, x*y")));
    // (x^2, x*y) is a proper multiple of (x).
    CHECK(!member(P(R, "x"), I(R, "x^2, x*y")));
    CHECK(member(Polynomial::zero(R), IdealPresentation::zero(R)));
    CHECK(!member(P(R, "x"), IdealPresentation::zero(R)));
}

TEST_CASE("equality") {
    auto R = test_util::ring_xy();
    CHECK(equal(I(R, "x^2, x*y"), intersect(I(R, "x"), I(R, "x^2, y"))));
    CHECK(equal(I(R, "x^2, x*y"), intersect(I(R, "x"), I(R, "x^2, 3*x + y"))));
    CHECK(!equal(I(R, "x"), I(R, "y")));
}

TEST_CASE("elimination") {
    auto TX = make_ring({"t", "x"});
    IdealPresentation projected = eliminate(I(TX, "t*x, t - 1"), 1);
    CHECK(equal(projected, I(TX, "x")));

    auto XY = test_util::ring_xy();
    CHECK(eliminate(I(XY, "x"), 1).is_zero_ideal());

    auto TXY = make_ring({"t", "x", "y"});
    CHECK(equal(eliminate(I(TXY, "t - y, x - t"), 1), I(TXY, "x - y")));

    CHECK_THROWS_AS(eliminate(I(XY, "x"), 2), value_error);
}

TEST_CASE("every generator reduces to zero against its own basis") {
    auto R = test_util::ring_xyz();
    std::mt19937 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(test_util::random_polynomial(rng, R, 3, 3, 5));
        IdealPresentation ideal = IdealPresentation::make(R, gens);
        GroebnerBasis basis = buchberger(ideal, MonomialOrder::grevlex());
        for (const auto& g : ideal.generators)
            CHECK(normal_form(g, basis).is_zero());
    }
}

TEST_CASE("reduced basis is canonical for the ideal") {
    auto R = test_util::ring_xyz();
    std::mt19937 rng(23);
    auto lex = MonomialOrder::lex();
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(test_util::random_polynomial(rng, R, 3, 2, 4));
        IdealPresentation ideal = IdealPresentation::make(R, gens);
        GroebnerBasis reference = buchberger(ideal, lex);

        // Permutation of the generators.
        std::vector<Polynomial> shuffled = ideal.generators;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(buchberger(IdealPresentation::make(R, shuffled), lex).polys ==
              reference.polys);

        // Triangular unimodular combinations generate the same ideal.
        if (ideal.generators.size() >= 2) {
            std::vector<Polynomial> combined = ideal.generators;
            Polynomial h = test_util::random_polynomial(rng, R, 2, 2, 3);
            combined[1] = combined[1] + h * combined[0];
            combined[0] = combined[0].scaled(Rat(-7));
            CHECK(buchberger(IdealPresentation::make(R, combined), lex).polys ==
                  reference.polys);
        }
    }
}

TEST_CASE("output bases are monic, interreduced and sorted") {
    auto R = test_util::ring_xyz();
    std::mt19937 rng(137);
    for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Polynomial> gens;
            for (int i = 0; i < 3; ++i)
                gens.push_back(test_util::random_polynomial(rng, R, 3, 3, 5));
            GroebnerBasis basis = buchberger(IdealPresentation::make(R, gens), order);
            std::vector<Monomial> lms;
            for (const auto& g : basis.polys)
                lms.push_back(noether::detail::leading_term(g, order).mono);
            for (size_t i = 0; i < basis.polys.size(); ++i) {
                CHECK(noether::detail::leading_term(basis.polys[i], order).coeff == 1);
                if (i + 1 < lms.size()) CHECK(compare(lms[i], lms[i + 1], order) > 0);
                for (size_t j = 0; j < lms.size(); ++j) {
                    if (i == j) continue;
                    CHECK(!lms[j].divides(lms[i]));
                    // Fully interreduced: no term divisible by another lead.
                    for (const auto& t : basis.polys[i].terms())
                        CHECK(!lms[j].divides(t.mono));
                }
            }
        }
    }
}

TEST_CASE("termination bookkeeping: no pair processed twice") {
    auto R = test_util::ring_xyz();
    std::mt19937 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(test_util::random_polynomial(rng, R, 3, 3, 5));
        BuchbergerStats stats;
        buchberger(IdealPresentation::make(R, gens), MonomialOrder::grevlex(), &stats);
        CHECK(stats.pairs_processed == stats.pairs_enqueued);
    }
}

TEST_CASE("leading-term ideal grows monotonically (standard monomials shrink)") {
    auto R = test_util::ring_xyz();
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(test_util::random_polynomial(rng, R, 3, 2, 4));
        BuchbergerStats stats;
        buchberger(IdealPresentation::make(R, gens), MonomialOrder::grevlex(), &stats);
        std::vector<Monomial> prefix;
        long previous = -1;
        for (const auto& lm : stats.leading_monomials_added) {
            prefix.push_back(lm);
            long count = standard_monomial_count(prefix, R->arity(), 8);
            if (previous >= 0) CHECK(count <= previous);
            previous = count;
        }
    }
}
