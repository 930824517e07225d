// Acceptance suite: replays the headline identities and the randomized
// uniqueness/reconstruction properties end to end, printing one pass/fail
// line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance [CORPUS_DIR]

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "noether/noether.hpp"
#include "test_util.hpp"

using namespace noether;
using test_util::I;
using test_util::MI;
using test_util::P;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)" << note
              << "\n";
    if (!ok) ++failures;
}

bool expect(bool condition, const char* what) {
    if (!condition) std::cout << "       failed: " << what << "\n";
    return condition;
}

} // namespace

int main(int argc, char** argv) {
    std::string corpus_dir = argc > 1 ? argv[1] : "corpus";

    // 1. The reduced representation of (x^2, xy) and its non-reduced
    //    variants; the verifier flags the reducible component.
    criterion("C1 reduced and non-reduced representations of (x^2, xy)", [] {
        auto R = test_util::ring_xy();
        IdealPresentation target = I(R, "x^2, x*y");
        bool ok = expect(equal(target, intersect(I(R, "x"), I(R, "x^2, y"))),
                         "[(x), (x^2, y)]");
        for (int lambda : {2, 3}) {
            std::string gens = "x^2, x*y, y^" + std::to_string(lambda);
            ok &= expect(equal(target, intersect(I(R, "x"), I(R, gens))),
                         "non-reduced variant");
            DecompositionClaim claim{target, {I(R, "x"), I(R, gens)},
                                     DecompKind::Irreducible, {}};
            VerificationReport report = verify_decomposition(claim);
            ok &= expect(report.find("intersection-equals-target")->status ==
                             CheckStatus::Pass, "equality check");
            ok &= expect(report.find("components-irreducible")->status ==
                             CheckStatus::Fail, "reducible component flagged");
        }
        return ok;
    });

    // 2. (x^2, xy) = [(x), (x^2, mu*x + y)] for mu in {0, 1, 3}.
    criterion("C2 mu-parameter family via Groebner equality", [] {
        auto R = test_util::ring_xy();
        IdealPresentation target = I(R, "x^2, x*y");
        bool ok = true;
        for (int mu : {0, 1, 3}) {
            std::string gens = "x^2, " + std::to_string(mu) + "*x + y";
            ok &= expect(equal(target, intersect(I(R, "x"), I(R, gens))),
                         "mu variant");
        }
        return ok;
    });

    // 3. Primariness tests with witness pair, and the exponent of (x^2, y).
    criterion("C3 primary predicates, witness pair and exponent", [] {
        auto R = test_util::ring_xy();
        bool ok = expect(!is_primary(MI(R, "x^2, x*y")), "(x^2, xy) not primary");
        PrimaryWitnessReport witness =
            check_primary_witness(I(R, "x^2, x*y"), P(R, "x"), P(R, "y"), 8);
        ok &= expect(witness.refutes_primary(), "witness pair (x, y)");
        ok &= expect(is_primary(MI(R, "x^2, x*y, y^3")), "(x^2, xy, y^3) primary");
        ok &= expect(exponent_of(MI(R, "x^2, y")) == 2, "exponent 2");
        ok &= expect(!equal(I(R, "x^2, y"), I(R, "x^2, x*y, y^2")),
                     "(x^2, y) differs from its prime squared");
        return ok;
    });

    // 4. The first worked example end to end from the five irreducible
    //    components.
    criterion("C4 worked example: Q4, R3, S2, M and the coprimality certificate", [] {
        auto S = test_util::ring_xyz();
        IdealPresentation b4 = I(S, "x^3, y, z");
        IdealPresentation b5 = I(S, "x^2, y^2, z");
        IdealPresentation q3 = I(S, "x, z");
        IdealPresentation r2 = I(S, "y - 1, z");
        IdealPresentation s1 = I(S, "x - 1, y");

        // The two components at the origin share the associated prime.
        bool ok = expect(associated_prime(MI(S, "x^3, y, z")) ==
                             associated_prime(MI(S, "x^2, y^2, z")),
                         "P4 = P5");
        ok &= expect(associated_prime(MI(S, "x^3, y, z")) == std::vector<int>{0, 1, 2},
                     "P4 = (x, y, z)");

        IdealPresentation q4 = intersect(b4, b5);
        ok &= expect(equal(q4, I(S, "x^3, y^2, x^2*y, z")), "Q4 generator list");
        IdealPresentation r3 = intersect(q3, q4);
        ok &= expect(equal(r3, I(S, "x^3, x^2*y, x*y^2, z")), "R3 generator list");
        IdealPresentation s2 = intersect(r2, r3);
        ok &= expect(equal(s2, I(S, "(y-1)*x^3, (y-1)*x^2*y, (y-1)*x*y^2, z")),
                     "S2 generator list");
        IdealPresentation total = product(s1, s2);
        IdealPresentation printed = I(S,
            "(x-1)*(y-1)*x^3, (y-1)*x^2*y, (y-1)*x*y^2, (x-1)*z, y*(y-1)*x^3, y*z");
        ok &= expect(equal(total, printed), "M six-generator list");
        ok &= expect(equal(total, intersect(s1, s2)), "product equals lcm");
        ok &= expect(is_coprime(s1, s2), "1 in S1 + S2");
        ok &= expect(member(P(S, "(y-1)*(x^3-1) + y"), s1), "certificate part in S1");
        ok &= expect(member(P(S, "-(y-1)*x^3"), s2), "certificate part in S2");
        ok &= expect((P(S, "(y-1)*(x^3-1) + y") + P(S, "-(y-1)*x^3")).is_one(),
                     "certificate sums to 1");
        return ok;
    });

    // 5. Primary decomposition of R3.
    criterion("C5 primary decomposition of (x^3, x^2y, xy^2, z)", [] {
        auto S = test_util::ring_xyz();
        MonomialDecomposition report = primary_decompose(MI(S, "x^3, x^2*y, x*y^2, z"));
        bool ok = expect(report.components.size() == 2, "two components");
        if (!ok) return false;
        const auto& isolated = report.components[0];
        const auto& embedded = report.components[1];
        ok &= expect(*isolated.prime == std::vector<int>{0, 2}, "prime {x, z}");
        ok &= expect(*isolated.isolated, "first component isolated");
        ok &= expect(equal(isolated.ideal.to_presentation(), I(S, "x, z")),
                     "component equals Q3");
        ok &= expect(*embedded.prime == std::vector<int>{0, 1, 2}, "prime {x, y, z}");
        ok &= expect(!*embedded.isolated, "second component embedded");
        ok &= expect(equal(embedded.ideal.to_presentation(),
                           I(S, "x^3, y^2, x^2*y, z")),
                     "component equals Q4");
        return ok;
    });

    // 6. Uniqueness properties on 500 random monomial ideals.
    criterion("C6 uniqueness on 500 random monomial ideals", [] {
        auto ring4 = make_ring({"x", "y", "z", "w"});
        std::mt19937 rng(20250811);
        int done = 0;
        while (done < 500) {
            MonomialIdeal ideal = test_util::random_monomial_ideal(rng, ring4, 5, 6);
            if (ideal.is_unit()) continue;
            ++done;
            auto first = irreducible_components(ideal, SplitStrategy::FirstVariable);
            auto last = irreducible_components(ideal, SplitStrategy::LastVariable);
            if (!(first == last)) return expect(false, "strategy independence");

            MonomialDecomposition irr = irreducible_decompose(ideal);
            MonomialDecomposition primary = primary_decompose(ideal);
            std::set<std::vector<int>> irr_primes, primary_primes;
            for (const auto& c : irr.components) irr_primes.insert(*c.prime);
            for (const auto& c : primary.components) primary_primes.insert(*c.prime);
            if (irr_primes != primary_primes)
                return expect(false, "associated prime sets agree");

            // Isolated components are uniquely determined: the isolated
            // primary component with prime P equals the unique irreducible
            // component with that prime.
            for (const auto& c : primary.components) {
                if (!*c.isolated) continue;
                std::vector<MonomialIdeal> with_prime;
                for (const auto& b : irr.components)
                    if (*b.prime == *c.prime) with_prime.push_back(b.ideal);
                if (with_prime.size() == 1 && !(with_prime[0] == c.ideal))
                    return expect(false, "isolated component uniqueness");
            }
        }
        return true;
    });

    // 7. Quotient-based relative primality against the associated-prime
    //    containment criterion, both directions, 500 random pairs.
    criterion("C7 relative-primality criteria agree on 500 pairs", [] {
        auto ring3 = test_util::ring_xyz();
        std::mt19937 rng(31415926);
        int done = 0;
        while (done < 500) {
            MonomialIdeal r = test_util::random_monomial_ideal(rng, ring3, 3, 4);
            MonomialIdeal s = test_util::random_monomial_ideal(rng, ring3, 3, 4);
            if (r.is_unit() || s.is_unit()) continue;
            ++done;
            bool forward_quotient =
                is_relatively_prime(r.to_presentation(), s.to_presentation());
            bool forward_primes = relatively_prime_by_primes(r, s);
            bool backward_quotient =
                is_relatively_prime(s.to_presentation(), r.to_presentation());
            bool backward_primes = relatively_prime_by_primes(s, r);
            if (forward_quotient != forward_primes ||
                backward_quotient != backward_primes)
                return expect(false, "criterion mismatch");
        }
        return true;
    });

    // 8. Product equals intersection for 100 pairwise-coprime families.
    criterion("C8 product law on 100 pairwise-coprime families", [] {
        auto ring2 = test_util::ring_xy();
        std::mt19937 rng(27182818);
        std::uniform_int_distribution<int> size_dist(2, 3);
        const std::vector<std::vector<int>> centers = {
            {0, 0}, {2, 1}, {-1, 3}, {4, -2}};
        for (int family = 0; family < 100; ++family) {
            int members = size_dist(rng);
            std::vector<IdealPresentation> ideals;
            for (int m = 0; m < members; ++m) {
                MonomialIdeal base = test_util::random_zero_dim_ideal(rng, ring2, 3);
                ideals.push_back(test_util::shifted_ideal(base, centers[m]));
            }
            for (size_t i = 0; i < ideals.size(); ++i)
                for (size_t j = i + 1; j < ideals.size(); ++j)
                    if (!is_coprime(ideals[i], ideals[j]))
                        return expect(false, "family not pairwise coprime");
            IdealPresentation prod = ideals[0];
            IdealPresentation meet = ideals[0];
            for (size_t i = 1; i < ideals.size(); ++i) {
                prod = product(prod, ideals[i]);
                meet = intersect(meet, ideals[i]);
            }
            if (!equal(prod, meet)) return expect(false, "product equals intersection");
        }
        return true;
    });

    // 9. The principal-ideal ring decompositions.
    criterion("C9 decompositions in the shifted integer rings", [] {
        zring::GRing even(2);
        auto primary = zring::decompose(zring::make_gideal(even, 12),
                                        DecompKind::MaximalPrimary);
        bool ok = expect(primary.components.size() == 2, "(24): two components");
        if (!ok) return false;
        ok &= expect(primary.components[0].generator == 8 &&
                         primary.components[0].associated_prime == 2 &&
                         !primary.components[0].isolated,
                     "(8) with prime (2), embedded");
        ok &= expect(primary.components[1].generator == 6 &&
                         primary.components[1].associated_prime == 6 &&
                         primary.components[1].isolated,
                     "(6) with prime (6), isolated");

        zring::GRing twelve(12);
        auto irr = zring::decompose(zring::make_gideal(twelve, 10),
                                    DecompKind::Irreducible);
        ok &= expect(irr.components.size() == 2 && irr.components[0].generator == 24 &&
                         irr.components[1].generator == 60,
                     "(120) = [(24), (60)]");
        ok &= expect(zring::lcm64(24, 60) == 120, "lcm reconstruction");
        return ok;
    });

    // 10. Smith normal form certificates and class reconstruction.
    criterion("C10 SNF certificates and unique class decomposition", [] {
        std::mt19937 rng(16180339);
        std::uniform_int_distribution<int> entry(-50, 50);
        std::uniform_int_distribution<int> dim(2, 6);
        for (int trial = 0; trial < 500; ++trial) {
            int n = dim(rng);
            std::vector<Int> entries;
            for (int i = 0; i < n * n; ++i) entries.push_back(Int(entry(rng)));
            matrix::IntegerMatrix a = matrix::IntegerMatrix::make(n, entries);
            matrix::SmithNormalForm snf = matrix::smith_normal_form(a);
            matrix::IntegerMatrix diag{
                n, std::vector<Int>(static_cast<size_t>(n) * n, Int(0))};
            for (int i = 0; i < n; ++i) diag.at(i, i) = snf.divisors.divisors[i];
            if (!(snf.certificate.u * a * snf.certificate.v == diag))
                return expect(false, "U*A*V = diag");
            if (abs(matrix::determinant(snf.certificate.u)) != 1 ||
                abs(matrix::determinant(snf.certificate.v)) != 1)
                return expect(false, "certificates unimodular");
        }

        auto chain = matrix::ElementaryDivisorSystem::make(
            {Int(2), Int(4), Int(4), Int(0)});
        auto classes = matrix::full_irreducible_split(chain);
        std::set<std::string> got;
        for (const auto& cls : classes) got.insert(cls.system.str());
        bool ok = expect(got == std::set<std::string>{"(2 | 2 | 2 | 2)",
                                                      "(1 | 4 | 4 | 4)",
                                                      "(1 | 1 | 1 | 0)"},
                         "(2|4|4|0) irreducible classes");
        auto rebuilt = classes.front().system;
        for (size_t i = 1; i < classes.size(); ++i)
            rebuilt = matrix::class_lcm(rebuilt, classes[i].system);
        ok &= expect(rebuilt == chain, "lcm reconstructs the input");

        std::uniform_int_distribution<int> factor(1, 6);
        std::uniform_int_distribution<int> rank_dist(0, 6);
        for (int trial = 0; trial < 500; ++trial) {
            int n = dim(rng);
            int rank = std::min(n, std::max(rank_dist(rng), rank_dist(rng)));
            std::vector<Int> divisors(n, Int(0));
            Int current(1);
            for (int i = 0; i < rank; ++i) {
                current *= factor(rng);
                divisors[i] = current;
            }
            auto a = matrix::ElementaryDivisorSystem::make(divisors);
            if (a.is_trivial()) continue;
            auto parts = matrix::full_irreducible_split(a);
            auto acc = parts.front().system;
            for (size_t i = 1; i < parts.size(); ++i)
                acc = matrix::class_lcm(acc, parts[i].system);
            if (!(acc == a)) return expect(false, "random chain reconstruction");
        }
        return ok;
    });

    // 11. Termination bookkeeping on every corpus input.
    criterion("C11 termination invariants across the corpus", [corpus_dir] {
        bool ok = true;
        // Buchberger: every enqueued S-pair is processed exactly once, on
        // every generator list appearing in the shipped corpus files.
        for (const char* name :
             {"s02_footnotes.ideal", "s04_s05_primary.ideal", "s06_s08_relative.ideal",
              "s10_example1.ideal", "s10_footnote_homog.ideal"}) {
            std::ifstream in(std::filesystem::path(corpus_dir) / name);
            if (!in) return expect(false, "corpus file readable");
            std::ostringstream text;
            text << in.rdbuf();
            IdealFile file = parse_ideal_file(text.str());
            for (const auto& [ideal_name, ideal] : file.ideals) {
                BuchbergerStats stats;
                buchberger(ideal, MonomialOrder::lex(), &stats);
                ok &= stats.pairs_processed == stats.pairs_enqueued;
                // Monomial inputs: splitting depth bounded by degree sum.
                auto mono = MonomialIdeal::from_presentation(ideal);
                if (mono && !mono->is_unit() && !mono->is_zero()) {
                    int degree_sum = 0;
                    for (const auto& m : mono->min_gens()) degree_sum += m.degree();
                    int depth = 0;
                    irreducible_components(*mono, SplitStrategy::FirstVariable, &depth);
                    ok &= depth <= degree_sum;
                }
            }
        }
        return expect(ok, "no pair processed twice; split depth bounded");
    });

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << failures << " failing criteria)\n";
    return failures == 0 ? 0 : 1;
}
