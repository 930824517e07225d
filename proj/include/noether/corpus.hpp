#ifndef NOETHER_CORPUS_HPP
#define NOETHER_CORPUS_HPP

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "noether/ideal_file.hpp"
#include "noether/json_io.hpp"
#include "noether/matrix_class.hpp"
#include "noether/zring.hpp"

namespace noether {
namespace corpus {

// The golden corpus lives in a directory of .ideal files plus a
// manifest.json listing one machine-checkable case per worked identity.
// Check types: equal, equal-intersect, equal-product, equal-sum, member,
// coprime, relprime, radical-member, claim, decompose, is-primary,
// is-irreducible, exponent, zring-decompose, snf, class-split.

struct CaseResult {
    std::string tag;
    bool pass = false;
    double millis = 0.0;
    std::string message;
};

struct CorpusReport {
    std::vector<CaseResult> results;

    bool ok() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }

    std::vector<std::string> failing_tags() const {
        std::vector<std::string> tags;
        for (const auto& r : results)
            if (!r.pass) tags.push_back(r.tag);
        return tags;
    }
};

/// Resolves the corpus directory: explicit argument, then the
/// NOETHER_CORPUS_DIR environment variable, then ./corpus.
inline std::filesystem::path resolve_corpus_dir(const std::string& explicit_dir = "") {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("NOETHER_CORPUS_DIR")) return env;
    return "corpus";
}

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw value_error("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

class Runner {
  public:
    explicit Runner(std::filesystem::path dir) : dir_(std::move(dir)) {}

    CaseResult run(const json& entry) {
        CaseResult result;
        result.tag = entry.at("tag").get<std::string>();
        auto start = std::chrono::steady_clock::now();
        try {
            result.pass = dispatch(entry, result.message);
        } catch (const std::exception& e) {
            result.pass = false;
            result.message = e.what();
        }
        result.millis = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        return result;
    }

  private:
    const IdealFile& file(const std::string& name) {
        auto it = files_.find(name);
        if (it == files_.end()) {
            it = files_.emplace(name, parse_ideal_file(detail::read_file(dir_ / name)))
                     .first;
        }
        return it->second;
    }

    static std::vector<IdealPresentation> named_ideals(const IdealFile& f,
                                                       const json& names) {
        std::vector<IdealPresentation> out;
        for (const auto& n : names) out.push_back(f.ideal(n.get<std::string>()));
        return out;
    }

    bool dispatch(const json& entry, std::string& message) {
        const std::string check = entry.at("check").get<std::string>();

        if (check == "equal" || check == "equal-intersect" || check == "equal-product" ||
            check == "equal-sum") {
            const IdealFile& f = file(entry.at("file").get<std::string>());
            IdealPresentation lhs = f.ideal(entry.at(check == "equal" ? "lhs" : "target")
                                                .get<std::string>());
            IdealPresentation rhs;
            if (check == "equal") {
                rhs = f.ideal(entry.at("rhs").get<std::string>());
            } else {
                auto parts = named_ideals(f, entry.at("components"));
                rhs = parts.front();
                for (size_t i = 1; i < parts.size(); ++i) {
                    if (check == "equal-intersect") rhs = intersect(rhs, parts[i]);
                    else if (check == "equal-product") rhs = product(rhs, parts[i]);
                    else rhs = sum(rhs, parts[i]);
                }
            }
            bool expected = entry.value("expect", true);
            if (equal(lhs, rhs) == expected) return true;
            message = expected ? "ideals differ" : "ideals unexpectedly equal";
            return false;
        }
        if (check == "member" || check == "radical-member") {
            const IdealFile& f = file(entry.at("file").get<std::string>());
            Polynomial p = parse_polynomial(entry.at("poly").get<std::string>(), f.ring);
            IdealPresentation ideal = f.ideal(entry.at("ideal").get<std::string>());
            bool got = check == "member" ? member(p, ideal) : radical_member(p, ideal);
            return expect_bool(entry, got, message);
        }
        if (check == "coprime" || check == "relprime") {
            const IdealFile& f = file(entry.at("file").get<std::string>());
            IdealPresentation lhs = f.ideal(entry.at("lhs").get<std::string>());
            IdealPresentation rhs = f.ideal(entry.at("rhs").get<std::string>());
            bool got = check == "coprime" ? is_coprime(lhs, rhs)
                                          : is_relatively_prime(lhs, rhs);
            return expect_bool(entry, got, message);
        }
        if (check == "claim") {
            const IdealFile& f = file(entry.at("file").get<std::string>());
            const DecompositionClaim* claim =
                f.find_claim(entry.at("claim").get<std::string>());
            if (!claim) throw value_error("unknown claim");
            VerificationReport report = verify_decomposition(*claim);
            bool expected_ok = entry.value("expect_ok", true);
            if (report.ok() != expected_ok) {
                message = "verification ok=" + std::string(report.ok() ? "true" : "false");
                return false;
            }
            if (entry.contains("expect_checks")) {
                for (auto& [name, status] : entry.at("expect_checks").items()) {
                    const CheckResult* c = report.find(name);
                    if (!c || to_string(c->status) != status.get<std::string>()) {
                        message = "check '" + name + "' is " +
                                  (c ? to_string(c->status) : "missing");
                        return false;
                    }
                }
            }
            return true;
        }
        if (check == "is-primary" || check == "is-irreducible" || check == "exponent") {
            const IdealFile& f = file(entry.at("file").get<std::string>());
            auto mono =
                MonomialIdeal::from_presentation(f.ideal(entry.at("ideal").get<std::string>()));
            if (!mono) throw value_error("case requires a monomial ideal");
            if (check == "exponent") {
                int got = exponent_of(*mono);
                if (got == entry.at("expect").get<int>()) return true;
                message = "exponent " + std::to_string(got);
                return false;
            }
            bool got = check == "is-primary" ? is_primary(*mono) : is_irreducible(*mono);
            return expect_bool(entry, got, message);
        }
        if (check == "decompose") {
            const IdealFile& f = file(entry.at("file").get<std::string>());
            auto mono =
                MonomialIdeal::from_presentation(f.ideal(entry.at("ideal").get<std::string>()));
            if (!mono) throw value_error("case requires a monomial ideal");
            auto kind = parse_decomp_kind(entry.at("kind").get<std::string>());
            if (!kind) throw value_error("bad kind");
            MonomialDecomposition got = decompose(*mono, *kind);
            return match_components(f, entry.at("components"), got, message);
        }
        if (check == "zring-decompose") {
            zring::GRing ring(entry.at("g").get<std::int64_t>());
            auto ideal = zring::make_gideal(ring, entry.at("a").get<std::int64_t>());
            auto kind = parse_decomp_kind(entry.at("kind").get<std::string>());
            if (!kind) throw value_error("bad kind");
            auto got = zring::decompose(ideal, *kind);
            if (entry.value("trivial", false)) {
                if (got.trivial_ideal && got.components.empty()) return true;
                message = "expected the trivial ideal";
                return false;
            }
            const json& expected = entry.at("components");
            if (expected.size() != got.components.size()) {
                message = "component count " + std::to_string(got.components.size());
                return false;
            }
            std::int64_t reconstructed = 0;
            for (size_t i = 0; i < expected.size(); ++i) {
                const auto& e = expected[i];
                const auto& c = got.components[i];
                if (c.generator != e.at("generator").get<std::int64_t>() ||
                    (e.contains("prime") &&
                     c.associated_prime != e.at("prime").get<std::int64_t>()) ||
                    (e.contains("isolated") && c.isolated != e.at("isolated").get<bool>())) {
                    message = "component " + std::to_string(i) + " mismatch, generator " +
                              std::to_string(c.generator);
                    return false;
                }
                reconstructed = reconstructed == 0
                                    ? c.generator
                                    : zring::lcm64(reconstructed, c.generator);
            }
            if (reconstructed != ideal.generator()) {
                message = "lcm reconstruction gives " + std::to_string(reconstructed);
                return false;
            }
            return true;
        }
        if (check == "snf") {
            const json& rows = entry.at("matrix");
            int n = static_cast<int>(rows.size());
            std::vector<Int> entries;
            for (const auto& row : rows)
                for (const auto& e : row) entries.push_back(Int(e.get<long>()));
            auto snf = matrix::smith_normal_form(matrix::IntegerMatrix::make(n, entries));
            std::vector<Int> expected;
            for (const auto& d : entry.at("divisors")) expected.push_back(Int(d.get<long>()));
            if (snf.divisors.divisors != expected) {
                message = "divisors " + snf.divisors.str();
                return false;
            }
            return true;
        }
        if (check == "class-split") {
            std::vector<Int> divisors;
            for (const auto& d : entry.at("divisors")) divisors.push_back(Int(d.get<long>()));
            auto input = matrix::ElementaryDivisorSystem::make(divisors);
            std::vector<matrix::ElementaryDivisorSystem> got;
            const std::string stage = entry.value("stage", "irreducible");
            if (stage == "prime") {
                got = matrix::prime_split(input);
            } else {
                for (const auto& cls : matrix::full_irreducible_split(input))
                    got.push_back(cls.system);
            }
            std::vector<matrix::ElementaryDivisorSystem> expected;
            for (const auto& sys : entry.at("components")) {
                std::vector<Int> ds;
                for (const auto& d : sys) ds.push_back(Int(d.get<long>()));
                expected.push_back(matrix::ElementaryDivisorSystem::make(ds));
            }
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            if (got != expected) {
                message = "split mismatch (" + std::to_string(got.size()) + " parts)";
                return false;
            }
            auto reconstructed = got.front();
            for (size_t i = 1; i < got.size(); ++i)
                reconstructed = matrix::class_lcm(reconstructed, got[i]);
            if (!(reconstructed == input)) {
                message = "lcm reconstruction gives " + reconstructed.str();
                return false;
            }
            return true;
        }
        throw value_error("unknown corpus check '" + check + "'");
    }

    static bool expect_bool(const json& entry, bool got, std::string& message) {
        bool expected = entry.at("expect").get<bool>();
        if (got == expected) return true;
        message = std::string("got ") + (got ? "true" : "false");
        return false;
    }

    bool match_components(const IdealFile& f, const json& expected,
                          const MonomialDecomposition& got, std::string& message) {
        if (expected.size() != got.components.size()) {
            message = "component count " + std::to_string(got.components.size());
            return false;
        }
        std::vector<bool> used(got.components.size(), false);
        for (const auto& e : expected) {
            auto mono = MonomialIdeal::from_presentation(
                IdealPresentation::make(
                    f.ring, parse_polynomial_list(e.at("generators").get<std::string>(),
                                                  f.ring)));
            if (!mono) throw value_error("expected component must be monomial");
            bool matched = false;
            for (size_t i = 0; i < got.components.size() && !matched; ++i) {
                if (used[i]) continue;
                const MonomialComponent& c = got.components[i];
                if (!(c.ideal == *mono)) continue;
                if (e.contains("prime")) {
                    std::vector<int> prime;
                    for (const auto& name : e.at("prime")) {
                        auto idx = f.ring->index_of(name.get<std::string>());
                        if (!idx) throw value_error("unknown variable in expected prime");
                        prime.push_back(*idx);
                    }
                    std::sort(prime.begin(), prime.end());
                    if (!c.prime || *c.prime != prime) continue;
                }
                if (e.contains("isolated") &&
                    (!c.isolated || *c.isolated != e.at("isolated").get<bool>()))
                    continue;
                if (e.contains("exponent") &&
                    (!c.exponent || *c.exponent != e.at("exponent").get<int>()))
                    continue;
                used[i] = true;
                matched = true;
            }
            if (!matched) {
                message = "no component matches " + mono->str();
                return false;
            }
        }
        return true;
    }

    std::filesystem::path dir_;
    std::map<std::string, IdealFile> files_;
};

} // namespace detail

inline std::vector<json> load_manifest(const std::filesystem::path& dir) {
    json manifest = json::parse(detail::read_file(dir / "manifest.json"));
    std::vector<json> cases;
    for (const auto& c : manifest.at("cases")) cases.push_back(c);
    return cases;
}

/// Replays every corpus case; the report lists tag, elapsed time and
/// pass/fail per case.
inline CorpusReport run_corpus(const std::filesystem::path& dir) {
    CorpusReport report;
    detail::Runner runner(dir);
    for (const auto& c : load_manifest(dir)) report.results.push_back(runner.run(c));
    return report;
}

} // namespace corpus
} // namespace noether

#endif
