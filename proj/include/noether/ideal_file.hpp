#ifndef NOETHER_IDEAL_FILE_HPP
#define NOETHER_IDEAL_FILE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "noether/parse.hpp"
#include "noether/verify.hpp"

namespace noether {

// Ideal definition files:
//
//   ring x, y, z;
//   ideal M = x^2, x*y;                  # '0' is the zero ideal
//   claim c1 : M = [A, B] kind=primary;  # kinds: irreducible, primary,
//                                        #        relprime, coprime
//
// The ring declaration comes first; ideal and claim names are unique.

struct IdealFile {
    RingPtr ring;
    std::vector<std::pair<std::string, IdealPresentation>> ideals;
    std::vector<std::pair<std::string, DecompositionClaim>> claims;

    const IdealPresentation* find_ideal(std::string_view name) const {
        for (const auto& [n, ideal] : ideals)
            if (n == name) return &ideal;
        return nullptr;
    }

    const IdealPresentation& ideal(std::string_view name) const {
        const IdealPresentation* found = find_ideal(name);
        if (!found) throw value_error("unknown ideal '" + std::string(name) + "'");
        return *found;
    }

    const DecompositionClaim* find_claim(std::string_view name) const {
        for (const auto& [n, claim] : claims)
            if (n == name) return &claim;
        return nullptr;
    }
};

inline IdealFile parse_ideal_file(std::string_view text) {
    lex::Lexer lx(text);
    IdealFile file;

    auto expect = [&](lex::Tok kind, const char* what) {
        if (lx.peek().kind != kind) lx.fail(std::string("expected ") + what);
        return lx.next();
    };
    auto expect_name = [&]() { return expect(lex::Tok::Name, "a name"); };

    while (lx.peek().kind != lex::Tok::End) {
        auto keyword = expect_name();
        if (keyword.text == "ring") {
            if (file.ring) lx.fail("duplicate ring declaration");
            std::vector<std::string> names;
            names.push_back(expect_name().text);
            while (lx.peek().kind == lex::Tok::Comma) {
                lx.next();
                names.push_back(expect_name().text);
            }
            expect(lex::Tok::Semicolon, "';'");
            if (static_cast<int>(names.size()) > RingContext::kMaxArity)
                throw parse_error("too many ring variables (max 16)", keyword.line,
                                  keyword.col);
            try {
                file.ring = make_ring(std::move(names));
            } catch (const value_error& e) {
                throw parse_error(e.what(), keyword.line, keyword.col);
            }
        } else if (keyword.text == "ideal") {
            if (!file.ring) lx.fail("ideal definition before ring declaration");
            auto name = expect_name();
            if (file.find_ideal(name.text) || file.find_claim(name.text))
                throw parse_error("duplicate name '" + name.text + "'", name.line, name.col);
            expect(lex::Tok::Equals, "'='");
            if (lx.peek().kind == lex::Tok::Semicolon)
                lx.fail("empty generator list (write '0' for the zero ideal)");
            detail::PolyParser parser(lx, file.ring);
            std::vector<Polynomial> gens;
            gens.push_back(parser.parse_expr());
            while (lx.peek().kind == lex::Tok::Comma) {
                lx.next();
                gens.push_back(parser.parse_expr());
            }
            expect(lex::Tok::Semicolon, "';'");
            file.ideals.emplace_back(name.text,
                                     IdealPresentation::make(file.ring, std::move(gens)));
        } else if (keyword.text == "claim") {
            if (!file.ring) lx.fail("claim before ring declaration");
            auto name = expect_name();
            if (file.find_ideal(name.text) || file.find_claim(name.text))
                throw parse_error("duplicate name '" + name.text + "'", name.line, name.col);
            expect(lex::Tok::Colon, "':'");
            auto target = expect_name();
            const IdealPresentation* target_ideal = file.find_ideal(target.text);
            if (!target_ideal)
                throw parse_error("unknown ideal '" + target.text + "'", target.line,
                                  target.col);
            expect(lex::Tok::Equals, "'='");
            expect(lex::Tok::LBracket, "'['");
            std::vector<IdealPresentation> components;
            auto read_component = [&]() {
                auto comp = expect_name();
                const IdealPresentation* found = file.find_ideal(comp.text);
                if (!found)
                    throw parse_error("unknown ideal '" + comp.text + "'", comp.line,
                                      comp.col);
                components.push_back(*found);
            };
            read_component();
            while (lx.peek().kind == lex::Tok::Comma) {
                lx.next();
                read_component();
            }
            expect(lex::Tok::RBracket, "']'");
            auto kind_kw = expect_name();
            if (kind_kw.text != "kind")
                throw parse_error("expected 'kind='", kind_kw.line, kind_kw.col);
            expect(lex::Tok::Equals, "'='");
            auto kind_name = expect_name();
            auto kind = parse_decomp_kind(kind_name.text);
            if (!kind)
                throw parse_error("unknown decomposition kind '" + kind_name.text + "'",
                                  kind_name.line, kind_name.col);
            expect(lex::Tok::Semicolon, "';'");
            file.claims.emplace_back(
                name.text, DecompositionClaim{*target_ideal, std::move(components), *kind, {}});
        } else {
            throw parse_error("expected 'ring', 'ideal' or 'claim'", keyword.line,
                              keyword.col);
        }
    }
    if (!file.ring) throw parse_error("missing ring declaration", 1, 1);
    return file;
}

} // namespace noether

#endif
