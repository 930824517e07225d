// Command-line surface for the ideal-decomposition library.
//
// Exit codes: 0 = success / true, 1 = verification failed / false,
// 2 = usage or parse error. Results go to stdout, diagnostics to stderr.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noether/noether.hpp"

namespace {

using namespace noether;

struct usage_error : error {
    using error::error;
};

bool looks_like_file(const std::string& arg) {
    return std::filesystem::exists(arg) || arg.ends_with(".ideal");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

RingPtr ring_from_option(const std::string& ring_opt) {
    std::vector<std::string> names;
    std::string current;
    for (char c : ring_opt + ",") {
        if (c == ',' || c == ' ') {
            if (!current.empty()) names.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (names.empty()) throw usage_error("--ring needs at least one variable");
    if (static_cast<int>(names.size()) > RingContext::kMaxArity)
        throw usage_error("too many ring variables (max 16)");
    return make_ring(std::move(names));
}

RingPtr infer_ring(const std::vector<std::string>& texts, const std::string& ring_opt) {
    if (!ring_opt.empty()) return ring_from_option(ring_opt);
    auto names = collect_variable_names(texts);
    if (names.empty()) throw usage_error("no variables found; pass --ring");
    if (static_cast<int>(names.size()) > RingContext::kMaxArity)
        throw usage_error("too many ring variables (max 16)");
    return make_ring(std::move(names));
}

// Ideal arguments come in two shapes: `FILE NAME [NAME...]` when the first
// argument names an ideal file, inline generator strings otherwise.
struct IdealInputs {
    RingPtr ring;
    std::vector<IdealPresentation> ideals;
};

IdealInputs resolve_ideals(const std::vector<std::string>& args, size_t count,
                           const std::string& ring_opt) {
    IdealInputs out;
    if (!args.empty() && looks_like_file(args[0])) {
        if (args.size() != count + 1)
            throw usage_error("expected FILE plus " + std::to_string(count) +
                              " ideal name(s)");
        IdealFile file = parse_ideal_file(read_file(args[0]));
        out.ring = file.ring;
        for (size_t i = 1; i < args.size(); ++i) out.ideals.push_back(file.ideal(args[i]));
    } else {
        if (args.size() != count)
            throw usage_error("expected " + std::to_string(count) +
                              " generator list(s) or FILE plus names");
        out.ring = infer_ring(args, ring_opt);
        for (const auto& text : args)
            out.ideals.push_back(
                IdealPresentation::make(out.ring, parse_polynomial_list(text, out.ring)));
    }
    return out;
}

MonomialOrder order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "grevlex") return MonomialOrder::grevlex();
    throw usage_error("unknown order '" + name + "' (use lex or grevlex)");
}

json inputs_json(const std::vector<std::string>& args) {
    json j = json::array();
    for (const auto& a : args) j.push_back(a);
    return j;
}

int emit_bool(const std::string& command, const std::vector<std::string>& args, bool value,
              bool as_json) {
    if (as_json) {
        std::cout << command_envelope(command, inputs_json(args), value).dump(2) << "\n";
    } else {
        std::cout << (value ? "true" : "false") << "\n";
    }
    return value ? 0 : 1;
}

int emit_ideal(const std::string& command, const std::vector<std::string>& args,
               const IdealPresentation& result, bool as_json) {
    if (as_json) {
        std::cout << command_envelope(command, inputs_json(args), ideal_to_json(result))
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (result.is_zero_ideal()) {
        std::cout << "0\n";
    } else {
        for (const auto& g : result.generators) std::cout << g.str() << "\n";
    }
    return 0;
}

matrix::IntegerMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::string row_text;
    auto flush_row = [&]() {
        std::istringstream in(row_text);
        std::vector<Int> row;
        std::string tok;
        while (in >> tok) {
            try {
                row.push_back(Int(tok));
            } catch (const std::invalid_argument&) {
                throw usage_error("bad matrix entry '" + tok + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
        row_text.clear();
    };
    for (char c : text) {
        if (c == ';' || c == '\n') flush_row();
        else row_text += c;
    }
    flush_row();
    if (rows.empty()) throw usage_error("empty matrix");
    const size_t n = rows.size();
    std::vector<Int> entries;
    for (const auto& row : rows) {
        if (row.size() != n) throw usage_error("matrix must be square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return matrix::IntegerMatrix::make(static_cast<int>(n), std::move(entries));
}

std::string prime_text(const std::vector<int>& prime, const RingPtr& ring) {
    std::string out = "(";
    for (size_t i = 0; i < prime.size(); ++i) {
        if (i) out += ", ";
        out += ring->name(prime[i]);
    }
    return out + ")";
}

struct IdealCmdState {
    std::vector<std::string> args;
    std::string ring;
    bool json = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ideal arithmetic and the four ideal decompositions"};
    app.require_subcommand(1);

    std::function<int()> action;

    auto add_ideal_command = [&app, &action](const char* name, const char* help,
                                             size_t ideal_count, const char* placeholder,
                                             auto run) {
        auto state = std::make_shared<IdealCmdState>();
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("input", state->args, placeholder)
            ->expected(static_cast<int>(ideal_count), static_cast<int>(ideal_count) + 1);
        cmd->add_option("--ring", state->ring, "comma-separated variables for inline input");
        cmd->add_flag("--json", state->json, "emit JSON");
        cmd->callback([&action, state, ideal_count, run] {
            action = [state, ideal_count, run]() -> int {
                auto in = resolve_ideals(state->args, ideal_count, state->ring);
                return run(in, *state);
            };
        });
        return cmd;
    };

    // ---- gb --------------------------------------------------------------
    {
        auto order = std::make_shared<std::string>("grevlex");
        auto* cmd = add_ideal_command(
            "gb", "reduced Groebner basis of an ideal", 1, "FILE NAME | GENERATORS",
            [order](const IdealInputs& in, const IdealCmdState& state) {
                GroebnerBasis basis = buchberger(in.ideals[0], order_from_name(*order));
                return emit_ideal("gb", state.args,
                                  IdealPresentation{in.ring, basis.polys}, state.json);
            });
        cmd->add_option("--order", *order, "monomial order (lex|grevlex)");
    }

    // ---- binary operations and predicates ---------------------------------
    add_ideal_command("equal", "ideal equality via canonical Groebner bases", 2,
                      "FILE A B | GENS_A GENS_B",
                      [](const IdealInputs& in, const IdealCmdState& state) {
                          return emit_bool("equal", state.args,
                                           equal(in.ideals[0], in.ideals[1]), state.json);
                      });
    add_ideal_command("intersect", "least common multiple (intersection) of two ideals", 2,
                      "FILE A B | GENS_A GENS_B",
                      [](const IdealInputs& in, const IdealCmdState& state) {
                          return emit_ideal("intersect", state.args,
                                            intersect(in.ideals[0], in.ideals[1]),
                                            state.json);
                      });
    add_ideal_command("product", "product of two ideals", 2, "FILE A B | GENS_A GENS_B",
                      [](const IdealInputs& in, const IdealCmdState& state) {
                          return emit_ideal("product", state.args,
                                            product(in.ideals[0], in.ideals[1]), state.json);
                      });
    add_ideal_command("quotient", "ideal quotient (S : R); arguments S R", 2,
                      "FILE S R | GENS_S GENS_R",
                      [](const IdealInputs& in, const IdealCmdState& state) {
                          return emit_ideal("quotient", state.args,
                                            quotient(in.ideals[0], in.ideals[1]),
                                            state.json);
                      });
    add_ideal_command("coprime", "sum of the two ideals is the unit ideal", 2,
                      "FILE A B | GENS_A GENS_B",
                      [](const IdealInputs& in, const IdealCmdState& state) {
                          return emit_bool("coprime", state.args,
                                           is_coprime(in.ideals[0], in.ideals[1]),
                                           state.json);
                      });
    add_ideal_command("relprime", "R relatively prime to S ((S : R) = S); arguments R S", 2,
                      "FILE R S | GENS_R GENS_S",
                      [](const IdealInputs& in, const IdealCmdState& state) {
                          return emit_bool("relprime", state.args,
                                           is_relatively_prime(in.ideals[0], in.ideals[1]),
                                           state.json);
                      });

    // ---- member / radical-member -------------------------------------------
    auto add_member_command = [&app, &action](const char* name, const char* help,
                                              bool radical) {
        auto state = std::make_shared<IdealCmdState>();
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("input", state->args, "FILE IDEAL POLY | GENS POLY")
            ->expected(2, 3);
        cmd->add_option("--ring", state->ring, "comma-separated variables for inline input");
        cmd->add_flag("--json", state->json, "emit JSON");
        std::string command = name;
        cmd->callback([&action, state, radical, command] {
            action = [state, radical, command]() -> int {
                const std::string poly_text = state->args.back();
                std::vector<std::string> ideal_args(state->args.begin(),
                                                    state->args.end() - 1);
                RingPtr ring;
                IdealPresentation ideal;
                if (looks_like_file(ideal_args.at(0))) {
                    auto in = resolve_ideals(ideal_args, 1, state->ring);
                    ring = in.ring;
                    ideal = in.ideals[0];
                } else {
                    ring = infer_ring({ideal_args.at(0), poly_text}, state->ring);
                    ideal = IdealPresentation::make(
                        ring, parse_polynomial_list(ideal_args.at(0), ring));
                }
                Polynomial f = parse_polynomial(poly_text, ring);
                bool value = radical ? radical_member(f, ideal) : member(f, ideal);
                return emit_bool(command, state->args, value, state->json);
            };
        });
    };
    add_member_command("member", "polynomial membership in an ideal; arguments IDEAL POLY",
                       false);
    add_member_command("radical-member",
                       "some power of the polynomial lies in the ideal; arguments IDEAL POLY",
                       true);

    // ---- decompose -----------------------------------------------------------
    {
        auto kind_name = std::make_shared<std::string>("primary");
        auto* cmd = add_ideal_command(
            "decompose", "decompose a monomial ideal (four kinds)", 1,
            "FILE NAME | GENERATORS",
            [kind_name](const IdealInputs& in, const IdealCmdState& state) {
                auto kind = parse_decomp_kind(*kind_name);
                if (!kind) throw usage_error("unknown kind '" + *kind_name + "'");
                auto mono = MonomialIdeal::from_presentation(in.ideals[0]);
                if (!mono)
                    throw usage_error("decompose requires a monomial ideal "
                                      "(every generator a single term)");
                MonomialDecomposition report = decompose(*mono, *kind);
                if (state.json) {
                    json envelope = command_envelope(
                        "decompose", inputs_json(state.args),
                        json{{"kind", to_string(*kind)},
                             {"certified_unique", report.certified_unique}});
                    envelope["components"] = decomposition_to_json(report);
                    std::cout << envelope.dump(2) << "\n";
                    return 0;
                }
                for (const auto& c : report.components) {
                    std::cout << c.ideal.str();
                    if (c.prime) std::cout << "  prime=" << prime_text(*c.prime, in.ring);
                    if (c.exponent) std::cout << " exponent=" << *c.exponent;
                    if (c.isolated) std::cout << (*c.isolated ? " isolated" : " embedded");
                    std::cout << "\n";
                }
                return 0;
            });
        cmd->add_option("--kind", *kind_name, "irreducible|primary|relprime|coprime");
    }

    // ---- verify ----------------------------------------------------------------
    {
        auto args = std::make_shared<std::vector<std::string>>();
        auto as_json = std::make_shared<bool>(false);
        auto* cmd = app.add_subcommand("verify", "check decomposition claims from a file");
        cmd->add_option("input", *args, "FILE [CLAIM...]")->expected(1, 32);
        cmd->add_flag("--json", *as_json, "emit JSON");
        cmd->callback([&action, args, as_json] {
            action = [args, as_json]() -> int {
                IdealFile file = parse_ideal_file(read_file(args->at(0)));
                std::vector<std::pair<std::string, const DecompositionClaim*>> selected;
                if (args->size() == 1) {
                    for (const auto& [name, claim] : file.claims)
                        selected.push_back({name, &claim});
                } else {
                    for (size_t i = 1; i < args->size(); ++i) {
                        const DecompositionClaim* claim = file.find_claim((*args)[i]);
                        if (!claim) throw usage_error("unknown claim '" + (*args)[i] + "'");
                        selected.push_back({(*args)[i], claim});
                    }
                }
                if (selected.empty()) throw usage_error("file declares no claims");
                bool all_ok = true;
                json results = json::array();
                for (const auto& [name, claim] : selected) {
                    VerificationReport report = verify_decomposition(*claim);
                    all_ok = all_ok && report.ok();
                    if (*as_json) {
                        json entry = verification_to_json(report);
                        entry["claim"] = name;
                        results.push_back(entry);
                    } else {
                        std::cout << "claim " << name << ": "
                                  << (report.ok() ? "pass" : "FAIL") << "\n";
                        for (const auto& check : report.checks) {
                            std::cout << "  [" << to_string(check.status) << "] "
                                      << check.name;
                            if (!check.detail.empty())
                                std::cout << " (" << check.detail << ")";
                            std::cout << "\n";
                        }
                    }
                }
                if (*as_json)
                    std::cout
                        << command_envelope("verify", inputs_json(*args), results).dump(2)
                        << "\n";
                return all_ok ? 0 : 1;
            };
        });
    }

    // ---- zring ---------------------------------------------------------------
    {
        auto g = std::make_shared<std::int64_t>(2);
        auto a = std::make_shared<std::int64_t>(1);
        auto kind_name = std::make_shared<std::string>("primary");
        auto as_json = std::make_shared<bool>(false);
        auto* cmd = app.add_subcommand("zring", "ideal decompositions in the ring gZ");
        cmd->add_option("--g", *g, "the ring: all integers divisible by g")->required();
        cmd->require_subcommand(1);
        auto* dec = cmd->add_subcommand("decompose", "decompose the ideal (g*a)");
        dec->add_option("a", *a, "ideal multiplier: the ideal is (g*a)")->required();
        dec->add_option("--kind", *kind_name, "irreducible|primary|relprime|coprime");
        dec->add_flag("--json", *as_json, "emit JSON");
        dec->callback([&action, g, a, kind_name, as_json] {
            action = [g, a, kind_name, as_json]() -> int {
                auto kind = parse_decomp_kind(*kind_name);
                if (!kind) throw usage_error("unknown kind '" + *kind_name + "'");
                zring::GRing ring(*g);
                auto decomposition = zring::decompose(zring::make_gideal(ring, *a), *kind);
                if (*as_json) {
                    json envelope = command_envelope(
                        "zring", json{{"g", *g}, {"a", *a}, {"kind", to_string(*kind)}},
                        decomposition.trivial_ideal ? "trivial-ideal" : "ok");
                    for (const auto& c : decomposition.components)
                        envelope["components"].push_back(zring_component_to_json(c));
                    std::cout << envelope.dump(2) << "\n";
                    return 0;
                }
                if (decomposition.trivial_ideal) {
                    std::cout << "(" << ring.g
                              << ") is the trivial ideal; empty decomposition\n";
                    return 0;
                }
                for (const auto& c : decomposition.components) {
                    std::cout << "(" << c.generator << ")";
                    if (c.associated_prime)
                        std::cout << "  prime=(" << c.associated_prime << ")";
                    std::cout << (c.isolated ? " isolated" : " non-isolated") << "\n";
                }
                return 0;
            };
        });
    }

    // ---- snf -------------------------------------------------------------------
    {
        auto file_arg = std::make_shared<std::vector<std::string>>();
        auto inline_rows = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        auto with_cert = std::make_shared<bool>(false);
        auto* cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
        cmd->add_option("file", *file_arg, "matrix file: one row per line")->expected(0, 1);
        cmd->add_option("--matrix", *inline_rows, "inline rows, ';' separated");
        cmd->add_flag("--certificate", *with_cert, "also print U and V");
        cmd->add_flag("--json", *as_json, "emit JSON");
        cmd->callback([&action, file_arg, inline_rows, as_json, with_cert] {
            action = [file_arg, inline_rows, as_json, with_cert]() -> int {
                std::string text;
                if (!inline_rows->empty()) text = *inline_rows;
                else if (!file_arg->empty()) text = read_file(file_arg->at(0));
                else throw usage_error("snf needs a matrix file or --matrix");
                auto snf = matrix::smith_normal_form(parse_matrix_text(text));
                auto matrix_json = [](const matrix::IntegerMatrix& m) {
                    json rows = json::array();
                    for (int i = 0; i < m.n; ++i) {
                        json row = json::array();
                        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j).get_str());
                        rows.push_back(row);
                    }
                    return rows;
                };
                if (*as_json) {
                    json envelope =
                        command_envelope("snf", text, divisor_system_to_json(snf.divisors));
                    envelope["certificate"] = {{"u", matrix_json(snf.certificate.u)},
                                               {"v", matrix_json(snf.certificate.v)}};
                    std::cout << envelope.dump(2) << "\n";
                    return 0;
                }
                std::cout << snf.divisors.str() << "\n";
                if (*with_cert) {
                    auto print_matrix = [](const char* name, const matrix::IntegerMatrix& m) {
                        std::cout << name << ":\n";
                        for (int i = 0; i < m.n; ++i) {
                            for (int j = 0; j < m.n; ++j)
                                std::cout << (j ? " " : "  ") << m.at(i, j).get_str();
                            std::cout << "\n";
                        }
                    };
                    print_matrix("U", snf.certificate.u);
                    print_matrix("V", snf.certificate.v);
                }
                return 0;
            };
        });
    }

    // ---- class decompose ----------------------------------------------------------
    {
        auto divisors = std::make_shared<std::vector<std::int64_t>>();
        auto stage = std::make_shared<std::string>("irreducible");
        auto as_json = std::make_shared<bool>(false);
        auto* cmd = app.add_subcommand("class", "two-sided matrix class operations");
        cmd->require_subcommand(1);
        auto* dec = cmd->add_subcommand("decompose",
                                        "split an elementary divisor system into classes");
        dec->add_option("divisors", *divisors, "divisor chain, e.g. 2 4 4 0")->required();
        dec->add_option("--stage", *stage, "prime|irreducible");
        dec->add_flag("--json", *as_json, "emit JSON");
        dec->callback([&action, divisors, stage, as_json] {
            action = [divisors, stage, as_json]() -> int {
                std::vector<Int> ds;
                for (auto d : *divisors) ds.push_back(Int(d));
                auto input = matrix::ElementaryDivisorSystem::make(std::move(ds));
                json components = json::array();
                if (*stage == "prime") {
                    for (const auto& part : matrix::prime_split(input)) {
                        if (*as_json)
                            components.push_back(
                                {{"generators", divisor_system_to_json(part)},
                                 {"associated_prime", nullptr},
                                 {"exponent", nullptr},
                                 {"isolated", nullptr}});
                        else
                            std::cout << part.str() << "\n";
                    }
                } else if (*stage == "irreducible") {
                    for (const auto& cls : matrix::full_irreducible_split(input)) {
                        if (*as_json) {
                            json c = {{"generators", divisor_system_to_json(cls.system)},
                                      {"associated_prime",
                                       cls.rank_marker ? json(nullptr)
                                                       : json(cls.prime.get_str())},
                                      {"exponent",
                                       cls.rank_marker ? json(nullptr) : json(cls.exponent)},
                                      {"isolated", nullptr},
                                      {"position", cls.position}};
                            if (cls.rank_marker) c["rank"] = cls.rank;
                            components.push_back(c);
                        } else {
                            std::cout << cls.system.str();
                            if (cls.rank_marker) std::cout << "  rank=" << cls.rank;
                            else
                                std::cout << "  prime=" << cls.prime.get_str()
                                          << " exponent=" << cls.exponent
                                          << " position=" << cls.position;
                            std::cout << "\n";
                        }
                    }
                } else {
                    throw usage_error("unknown stage '" + *stage + "'");
                }
                if (*as_json) {
                    json envelope = command_envelope("class decompose", json(*divisors),
                                                     *stage);
                    envelope["components"] = components;
                    std::cout << envelope.dump(2) << "\n";
                }
                return 0;
            };
        });
    }

    // ---- verify-paper ----------------------------------------------------------------
    {
        auto corpus_dir = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        auto* cmd = app.add_subcommand("verify-paper", "replay the shipped golden corpus");
        cmd->add_option("--corpus-dir", *corpus_dir,
                        "corpus location (default: $NOETHER_CORPUS_DIR or ./corpus)");
        cmd->add_flag("--json", *as_json, "emit JSON");
        cmd->callback([&action, corpus_dir, as_json] {
            action = [corpus_dir, as_json]() -> int {
                auto dir = corpus::resolve_corpus_dir(*corpus_dir);
                corpus::CorpusReport report = corpus::run_corpus(dir);
                if (*as_json) {
                    json cases = json::array();
                    for (const auto& r : report.results)
                        cases.push_back({{"tag", r.tag},
                                         {"pass", r.pass},
                                         {"millis", r.millis},
                                         {"message", r.message}});
                    std::cout << command_envelope(
                                     "verify-paper", dir.string(),
                                     json{{"ok", report.ok()}, {"cases", cases}})
                                     .dump(2)
                              << "\n";
                } else {
                    for (const auto& r : report.results) {
                        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.tag << " ("
                                  << r.millis << " ms)";
                        if (!r.message.empty()) std::cout << " -- " << r.message;
                        std::cout << "\n";
                    }
                    auto failing = report.failing_tags();
                    std::cout << report.results.size() << " cases, " << failing.size()
                              << " failing";
                    for (const auto& tag : failing) std::cout << " " << tag;
                    std::cout << "\n";
                }
                return report.ok() ? 0 : 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
