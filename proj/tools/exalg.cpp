/*
   Copyright 2026 The exalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: parses ring-tagged JSON requests, dispatches to the
// library, emits the result together with a "verified" block that rechecks
// the operation's own certificates. Structured output is byte-deterministic.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "exalg/factorization.hpp"
#include "exalg/fpmodules.hpp"
#include "exalg/io.hpp"
#include "exalg/linalg.hpp"
#include "exalg/rings.hpp"

namespace {

using exalg::BezoutCertificate;
using exalg::Capability;
using exalg::CoprimeBasis;
using exalg::Element;
using exalg::Integer;
using exalg::InvariantFactorDecomposition;
using exalg::Matrix;
using exalg::Presentation;
using exalg::PrimaryDecomposition;
using exalg::RingDescriptor;
using exalg::SeparableDecomposition;
using exalg::SmithDecomposition;
using json = nlohmann::json;

constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapability = 3;
constexpr int kExitPrecondition = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw exalg::parse_error("cannot read input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw exalg::parse_error("input is not valid JSON");
    return doc;
}

const json& member(const json& doc, const char* key) {
    if (!doc.is_object()) throw exalg::parse_error("expected a JSON object request");
    auto it = doc.find(key);
    if (it == doc.end()) throw exalg::parse_error(std::string("missing required key \"") + key + "\"");
    return *it;
}

RingDescriptor ring_of(const json& doc) {
    const json& tag = member(doc, "ring");
    if (!tag.is_string()) throw exalg::parse_error("ring tag must be a string");
    return RingDescriptor::from_tag(tag.get<std::string>());
}

Element el_pow(const Element& base, unsigned long e) {
    Element acc = Element::one(base.ring());
    for (unsigned long i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

json exponent_table(const std::vector<std::vector<unsigned long>>& table) {
    json rows = json::array();
    for (const auto& row : table) {
        json r = json::array();
        for (unsigned long e : row) r.push_back(e);
        rows.push_back(std::move(r));
    }
    return rows;
}

struct Outcome {
    json result;
    json verified;  // null when --no-verify
};

// ---------------------------------------------------------------- handlers

Outcome run_snf(const json& doc, bool verify) {
    Matrix a = exalg::io::matrix_from_json(doc);
    SmithDecomposition s = exalg::smith_normal_form(a);
    Outcome out;
    out.result = json{{"U", exalg::io::matrix_to_json(s.U)},
                      {"Uinv", exalg::io::matrix_to_json(s.Uinv)},
                      {"D", exalg::io::matrix_to_json(s.D)},
                      {"V", exalg::io::matrix_to_json(s.V)},
                      {"Vinv", exalg::io::matrix_to_json(s.Vinv)}};
    if (verify) {
        const bool equation = (s.U * a * s.V == s.D);
        const bool left = (s.U * s.Uinv).is_identity();
        const bool right = (s.V * s.Vinv).is_identity();
        const bool smith = exalg::is_smith_form(s.D);
        bool canonical = true;
        for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i) {
            canonical = canonical &&
                        exalg::normalize_associate(s.D.at(i, i)).canonical == s.D.at(i, i);
        }
        out.verified = json{{"equation", equation},
                            {"left_inverse", left},
                            {"right_inverse", right},
                            {"smith_form", smith},
                            {"canonical_diagonal", canonical},
                            {"passed", equation && left && right && smith && canonical}};
    }
    return out;
}

Outcome run_kernel(const json& doc, bool verify) {
    Matrix a = exalg::io::matrix_from_json(doc);
    Matrix k = exalg::kernel(a);
    Outcome out;
    out.result = json{{"generators", exalg::io::matrix_to_json(k)}};
    if (verify) {
        const bool annihilates = (a * k).is_zero();
        out.verified = json{{"annihilates", annihilates},
                            {"generator_count", k.cols()},
                            {"passed", annihilates}};
    }
    return out;
}

Outcome run_solve(const json& doc, bool verify) {
    Matrix a = exalg::io::matrix_from_json(member(doc, "A"));
    Matrix b = exalg::io::matrix_from_json(member(doc, "b"));
    auto x = exalg::solve_membership(a, b);
    Outcome out;
    if (x) {
        out.result = json{{"solvable", true}, {"x", exalg::io::matrix_to_json(*x)}};
        if (verify) {
            const bool equation = (a * *x == b);
            out.verified = json{{"equation", equation}, {"passed", equation}};
        }
    } else {
        out.result = json{{"solvable", false}};
        if (verify) {
            out.verified = json{{"membership", false}, {"passed", true}};
        }
    }
    return out;
}

json decomposition_to_json(const InvariantFactorDecomposition& d) {
    json torsion = json::array();
    for (const Element& t : d.torsion) torsion.push_back(exalg::io::element_to_json(t));
    return json{{"torsion", std::move(torsion)}, {"free_rank", d.free_rank}};
}

json verified_decomposition(const InvariantFactorDecomposition& d, const Presentation& p) {
    bool factors_ok = true;
    bool chain_ok = true;
    for (std::size_t i = 0; i < d.torsion.size(); ++i) {
        const Element& t = d.torsion[i];
        factors_ok = factors_ok && !t.is_zero() && !exalg::is_unit(t).has_value() &&
                     exalg::normalize_associate(t).canonical == t;
        if (i + 1 < d.torsion.size()) {
            chain_ok = chain_ok && exalg::divides(t, d.torsion[i + 1]).has_value();
        }
    }
    const bool rank_ok = d.torsion.size() + d.free_rank <= p.generators();
    return json{{"factors_nonzero_nonunit_canonical", factors_ok},
                {"divisibility_chain", chain_ok},
                {"rank_consistent", rank_ok},
                {"passed", factors_ok && chain_ok && rank_ok}};
}

Outcome run_decompose(const json& doc, bool verify) {
    Presentation p = exalg::io::presentation_from_json(doc);
    InvariantFactorDecomposition d = exalg::decompose(p);
    Outcome out;
    out.result = decomposition_to_json(d);
    if (verify) out.verified = verified_decomposition(d, p);
    return out;
}

Outcome run_same_module(const json& doc, bool verify) {
    Presentation p1 = exalg::io::presentation_from_json(member(doc, "first"));
    Presentation p2 = exalg::io::presentation_from_json(member(doc, "second"));
    const bool iso = exalg::same_module(p1, p2);
    InvariantFactorDecomposition d1 = exalg::decompose(p1);
    InvariantFactorDecomposition d2 = exalg::decompose(p2);
    Outcome out;
    out.result = json{{"isomorphic", iso},
                      {"first", decomposition_to_json(d1)},
                      {"second", decomposition_to_json(d2)}};
    if (verify) {
        const bool consistent = iso == (d1 == d2);
        json v1 = verified_decomposition(d1, p1);
        json v2 = verified_decomposition(d2, p2);
        const bool passed =
            consistent && v1["passed"].get<bool>() && v2["passed"].get<bool>();
        out.verified = json{{"decision_matches_decompositions", consistent},
                            {"first", std::move(v1)},
                            {"second", std::move(v2)},
                            {"passed", passed}};
    }
    return out;
}

Outcome run_quasifactor(const json& doc, bool verify) {
    const RingDescriptor ring = ring_of(doc);
    const json& elems = member(doc, "elements");
    if (!elems.is_array()) throw exalg::parse_error("\"elements\" must be an array");
    std::vector<Element> xs;
    xs.reserve(elems.size());
    for (const json& e : elems) xs.push_back(exalg::io::element_from_json(e, ring));
    CoprimeBasis basis = exalg::quasi_factorize(xs);

    Outcome out;
    json basis_json = json::array();
    for (const Element& b : basis.basis) basis_json.push_back(exalg::io::element_to_json(b));
    json units_json = json::array();
    for (const Element& u : basis.units) units_json.push_back(exalg::io::element_to_json(u));
    out.result = json{{"basis", std::move(basis_json)},
                      {"exponents", exponent_table(basis.exponents)},
                      {"units", std::move(units_json)}};
    if (verify) {
        bool coprime = true;
        bool nonunit = true;
        for (std::size_t i = 0; i < basis.basis.size(); ++i) {
            nonunit = nonunit && !exalg::is_unit(basis.basis[i]).has_value();
            for (std::size_t j = i + 1; j < basis.basis.size(); ++j) {
                coprime = coprime &&
                          exalg::is_unit(exalg::gcd(basis.basis[i], basis.basis[j])).has_value();
            }
        }
        bool reconstruction = true;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Element prod = basis.units[i];
            for (std::size_t j = 0; j < basis.basis.size(); ++j) {
                prod = prod * el_pow(basis.basis[j], basis.exponents[i][j]);
            }
            reconstruction = reconstruction && prod == xs[i];
        }
        out.verified = json{{"pairwise_coprime", coprime},
                            {"basis_nonunit", nonunit},
                            {"reconstruction_exact", reconstruction},
                            {"passed", coprime && nonunit && reconstruction}};
    }
    return out;
}

Outcome run_polygcd(const json& doc, bool verify) {
    const RingDescriptor ring = ring_of(doc);
    Element f = exalg::io::element_from_json(member(doc, "f"), ring);
    Element g = exalg::io::element_from_json(member(doc, "g"), ring);
    Element d = exalg::poly_gcd(f, g);
    Outcome out;
    out.result = json{{"gcd", exalg::io::element_to_json(d)}};
    if (verify) {
        const bool div_f = exalg::divides(d, f).has_value();
        const bool div_g = exalg::divides(d, g).has_value();
        const bool canonical = exalg::normalize_associate(d).canonical == d;
        out.verified = json{{"divides_f", div_f},
                            {"divides_g", div_g},
                            {"canonical", canonical},
                            {"passed", div_f && div_g && canonical}};
    }
    return out;
}

Outcome run_separable(const json& doc, bool verify) {
    const RingDescriptor ring = ring_of(doc);
    const json& polys = member(doc, "polynomials");
    if (!polys.is_array()) throw exalg::parse_error("\"polynomials\" must be an array");
    std::vector<Element> s;
    s.reserve(polys.size());
    for (const json& f : polys) s.push_back(exalg::io::element_from_json(f, ring));
    SeparableDecomposition d = exalg::separable_decompose(s);

    Outcome out;
    json parts = json::array();
    for (const auto& part : d.parts) {
        parts.push_back(json{{"core", exalg::io::element_to_json(part.core)},
                             {"power", part.power},
                             {"stored", exalg::io::element_to_json(part.stored)}});
    }
    json witnesses = json::array();
    for (const auto& w : d.witnesses) {
        witnesses.push_back(json{{"first", w.first},
                                 {"second", w.second},
                                 {"u", exalg::io::element_to_json(w.u)},
                                 {"v", exalg::io::element_to_json(w.v)}});
    }
    out.result = json{{"parts", std::move(parts)},
                      {"exponents", exponent_table(d.exponents)},
                      {"witnesses", std::move(witnesses)}};
    if (verify) {
        const Integer char_val = s.empty() ? Integer(0) : exalg::characteristic(ring);
        const unsigned long p = sgn(char_val) == 0 ? 0 : mpz_get_ui(char_val.get_mpz_t());
        bool separable = true;
        bool powers = true;
        for (const auto& part : d.parts) {
            separable = separable &&
                        exalg::gcd(part.core, exalg::poly_derivative(part.core)).is_one() &&
                        part.stored == exalg::poly_expand_variable(part.core, part.power);
            if (p == 0) {
                powers = powers && part.power == 1;
            } else {
                unsigned long q = part.power;
                while (q % p == 0) q /= p;
                powers = powers && q == 1;
            }
        }
        bool witnesses_hold = true;
        for (const auto& w : d.witnesses) {
            witnesses_hold = witnesses_hold &&
                             (w.u * d.parts[w.first].stored + w.v * d.parts[w.second].stored).is_one();
        }
        bool reconstruction = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Element prod = Element::one(ring);
            for (std::size_t j = 0; j < d.parts.size(); ++j) {
                prod = prod * el_pow(d.parts[j].stored, d.exponents[i][j]);
            }
            reconstruction = reconstruction && prod == s[i];
        }
        out.verified = json{{"parts_separable", separable},
                            {"powers_valid", powers},
                            {"witnesses_hold", witnesses_hold},
                            {"reconstruction_exact", reconstruction},
                            {"passed", separable && powers && witnesses_hold && reconstruction}};
    }
    return out;
}

Outcome run_primary(const json& doc, bool verify) {
    const RingDescriptor ring = ring_of(doc);
    if (ring != RingDescriptor::integers()) {
        throw exalg::precondition_error("primary: only integer ideals are supported, got " +
                                        ring.tag());
    }
    Element n = exalg::io::element_from_json(member(doc, "n"), ring);
    PrimaryDecomposition d = exalg::primary_decompose_int(n);
    Outcome out;
    json components = json::array();
    for (const auto& c : d.components) {
        components.push_back(json{{"q", c.q.get_str()}, {"p", c.p.get_str()}});
    }
    out.result = json{{"components", std::move(components)}};
    if (verify) {
        Integer product = 1;
        bool primary_ok = true;
        bool distinct = true;
        for (std::size_t i = 0; i < d.components.size(); ++i) {
            product *= d.components[i].q;
            auto rad = exalg::is_primary_int(Element::integer(d.components[i].q));
            primary_ok = primary_ok && rad.has_value() && *rad == d.components[i].p;
            for (std::size_t j = i + 1; j < d.components.size(); ++j) {
                distinct = distinct && d.components[i].p != d.components[j].p;
            }
        }
        const bool product_ok =
            sgn(n.int_value()) == 0
                ? d.components.size() == 1 && sgn(d.components[0].q) == 0
                : product == abs(n.int_value());
        out.verified = json{{"product_matches", product_ok},
                            {"components_primary", primary_ok},
                            {"primes_distinct", distinct},
                            {"passed", product_ok && primary_ok && distinct}};
    }
    return out;
}

Outcome run_bound(const json& doc, bool verify) {
    const RingDescriptor ring = ring_of(doc);
    Element a = exalg::io::element_from_json(member(doc, "element"), ring);
    const unsigned long n = exalg::bound_witness(a);
    Outcome out;
    out.result = json{{"bound", n}};
    if (verify) {
        const bool match = exalg::bound_witness(a) == n;
        out.verified = json{{"recomputed_match", match}, {"passed", match}};
    }
    return out;
}

// ---------------------------------------------------------------- driver

void render_plain(std::ostream& os, const json& doc) {
    os << "command: " << doc["command"].get<std::string>() << "\n";
    for (const auto& [key, value] : doc["result"].items()) {
        os << key << ": " << value.dump() << "\n";
    }
    if (doc.contains("verified")) {
        const json& v = doc["verified"];
        os << "verified: " << (v["passed"].get<bool>() ? "pass" : "fail") << "\n";
        for (const auto& [key, value] : v.items()) {
            if (key != "passed") os << "  " << key << ": " << value.dump() << "\n";
        }
    }
}

int emit_error(int code, const char* kind, const std::string& message) {
    json err{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exalg: exact Smith normal forms, module decompositions, and gcd-free bases"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "structured";
    bool verify = true;
    app.add_option("--input", input, "input path, or - for standard input");
    app.add_option("--format", format, "output rendering")
        ->check(CLI::IsMember({"structured", "plain"}));
    app.add_flag("--verify,!--no-verify", verify, "recheck certificates in the output");

    struct Sub {
        const char* name;
        const char* help;
        Outcome (*run)(const json&, bool);
    };
    const Sub subs[] = {
        {"snf", "Smith normal form with transformation certificates", run_snf},
        {"kernel", "generators of the kernel lattice of a matrix", run_kernel},
        {"solve", "decide membership of b in the column span of A", run_solve},
        {"decompose", "invariant factors and free rank of a presented module", run_decompose},
        {"same-module", "decide isomorphism of two presented modules", run_same_module},
        {"quasifactor", "gcd-free coprime basis of a family", run_quasifactor},
        {"polygcd", "polynomial gcd over a field or over ZZ", run_polygcd},
        {"separable", "separable decomposition of monic polynomials", run_separable},
        {"primary", "primary decomposition of an integer ideal", run_primary},
        {"bound", "boundedness witness of a nonzero element", run_bound},
    };
    for (const Sub& s : subs) app.add_subcommand(s.name, s.help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return emit_error(kExitParse, "parse", e.what());
    }

    try {
        const Sub* chosen = nullptr;
        for (const Sub& s : subs) {
            if (app.get_subcommand(s.name)->parsed()) chosen = &s;
        }
        if (chosen == nullptr) return emit_error(kExitParse, "parse", "no subcommand given");

        json request = parse_document(read_input(input));
        Outcome outcome = chosen->run(request, verify);
        json doc{{"command", chosen->name}, {"result", std::move(outcome.result)}};
        if (!outcome.verified.is_null()) doc["verified"] = std::move(outcome.verified);

        if (format == "plain") {
            render_plain(std::cout, doc);
        } else {
            std::cout << doc.dump(2) << "\n";
        }
        return 0;
    } catch (const exalg::parse_error& e) {
        return emit_error(kExitParse, "parse", e.what());
    } catch (const json::exception& e) {
        return emit_error(kExitParse, "parse", e.what());
    } catch (const exalg::capability_error& e) {
        return emit_error(kExitCapability, "capability", e.what());
    } catch (const exalg::precondition_error& e) {
        return emit_error(kExitPrecondition, "precondition", e.what());
    } catch (const std::exception& e) {
        return emit_error(kExitInternal, "internal", e.what());
    }
}
