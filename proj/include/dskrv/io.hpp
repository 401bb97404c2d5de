#pragma once

#include "dskrv/ds.hpp"
#include "dskrv/poly.hpp"
#include "dskrv/rational.hpp"
#include "dskrv/word.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dskrv {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(message + " at line " + std::to_string(line)),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline std::string strip(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::string strip_comment(std::string_view s) {
    std::size_t h = s.find('#');
    return strip(h == std::string_view::npos ? s : s.substr(0, h));
}

inline Alphabet parse_alphabet(const std::string& token, int line) {
    if (token == "xy") return Alphabet::xy;
    if (token == "ab") return Alphabet::ab;
    throw ParseError(line, "unknown alphabet '" + token + "'");
}

inline Rational parse_coefficient(const std::string& token, int line) {
    std::string num = token, den = "1";
    if (std::size_t slash = token.find('/'); slash != std::string::npos) {
        num = token.substr(0, slash);
        den = token.substr(slash + 1);
    }
    if (!num.empty() && num.front() == '+') num.erase(num.begin());
    try {
        Integer n(num), d(den);
        if (d == 0) throw ParseError(line, "zero denominator");
        return Rational(n, d);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line, "invalid coefficient '" + token + "'");
    }
}

}  // namespace detail

// One term per line: "<num>/<den> <word>", the empty word written as 1,
// comments from '#' to end of line, and a leading "alphabet: xy|ab" header.
inline std::string poly_to_text(const Poly& p) {
    std::string out = "alphabet: ";
    out += p.alphabet() == Alphabet::xy ? "xy" : "ab";
    out += "\n";
    for (const auto& [w, c] : p.terms())
        out += rational_str(c) + " " + w.str() + "\n";
    return out;
}

// Parses the text format; line numbering starts at start_line for embedded
// use. Terms with equal words accumulate.
inline Poly parse_poly_text(std::istream& in, int start_line = 1) {
    int line = start_line - 1;
    std::string raw;
    bool have_alphabet = false;
    Alphabet a = Alphabet::xy;
    Poly p;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = detail::strip_comment(raw);
        if (s.empty()) continue;
        if (!have_alphabet) {
            if (s.rfind("alphabet:", 0) != 0)
                throw ParseError(line, "expected 'alphabet:' header");
            a = detail::parse_alphabet(detail::strip(s.substr(9)), line);
            have_alphabet = true;
            p = Poly(a);
            continue;
        }
        std::istringstream ls(s);
        std::string ctok, wtok, extra;
        ls >> ctok >> wtok;
        if (wtok.empty()) throw ParseError(line, "expected '<coefficient> <word>'");
        if (ls >> extra) throw ParseError(line, "trailing characters");
        const Rational c = detail::parse_coefficient(ctok, line);
        Word w(a);
        try {
            w = Word::parse(wtok, a);
        } catch (const std::exception& e) {
            throw ParseError(line, e.what());
        }
        p.add_term(w, c);
    }
    if (!have_alphabet) throw ParseError(line + 1, "missing 'alphabet:' header");
    return p;
}

inline Poly parse_poly_text(const std::string& text, int start_line = 1) {
    std::istringstream in(text);
    return parse_poly_text(in, start_line);
}

// {"alphabet":"xy","terms":[["<num>","<den>","<word>"],...]} with arbitrary
// precision coefficients carried as strings.
inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back({numerator(c).str(), denominator(c).str(), w.str()});
    return {{"alphabet", p.alphabet() == Alphabet::xy ? "xy" : "ab"},
            {"terms", std::move(terms)}};
}

inline Poly poly_from_json(const nlohmann::json& j) {
    const Alphabet a = detail::parse_alphabet(j.at("alphabet").get<std::string>(), 0);
    Poly p(a);
    for (const auto& t : j.at("terms")) {
        const Integer num(t.at(0).get<std::string>());
        const Integer den(t.at(1).get<std::string>());
        if (den == 0) throw std::invalid_argument("zero denominator");
        p.add_term(Word::parse(t.at(2).get<std::string>(), a), Rational(num, den));
    }
    return p;
}

// Lyndon words of one degree with their expansions, one row per word:
// the word, a tab, then the expansion terms inline.
inline std::string lyndon_table(int n, Alphabet a = Alphabet::xy) {
    std::string out;
    for (const LyndonBasisElement& e : lyndon_basis(n, a).elements) {
        out += e.word.str() + "\t";
        bool first = true;
        for (const auto& [w, c] : e.expansion.terms()) {
            if (!first) out += " ";
            out += rational_str(c) + " " + w.str();
            first = false;
        }
        out += "\n";
    }
    return out;
}

// Serialized basis of one weight, re-verified from scratch by `ds check`.
struct BasisCertificate {
    int weight = 0;
    std::string normalization = "leading-rref";
    std::vector<Poly> elements;
};

inline BasisCertificate certificate_for(int weight,
                                        const std::vector<DsElement>& basis) {
    BasisCertificate cert;
    cert.weight = weight;
    for (const DsElement& e : basis) cert.elements.push_back(e.poly);
    return cert;
}

inline std::string certificate_to_text(const BasisCertificate& c) {
    std::string out;
    out += "weight: " + std::to_string(c.weight) + "\n";
    out += "dimension: " + std::to_string(c.elements.size()) + "\n";
    out += "normalization: " + c.normalization + "\n";
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        out += "element: " + std::to_string(i) + "\n";
        out += poly_to_text(c.elements[i]);
    }
    return out;
}

inline nlohmann::json certificate_to_json(const BasisCertificate& c) {
    nlohmann::json elems = nlohmann::json::array();
    for (const Poly& p : c.elements) elems.push_back(poly_to_json(p));
    return {{"weight", c.weight},
            {"dimension", c.elements.size()},
            {"normalization", c.normalization},
            {"elements", std::move(elems)}};
}

inline BasisCertificate parse_certificate_text(std::istream& in) {
    BasisCertificate cert;
    cert.normalization.clear();
    int line = 0;
    int dimension = -1;
    bool saw_weight = false;
    std::string raw;
    std::string pending;   // accumulated poly lines for the current element
    int pending_start = 0;
    auto flush = [&]() {
        if (pending.empty()) return;
        cert.elements.push_back(parse_poly_text(pending, pending_start));
        pending.clear();
    };
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = detail::strip_comment(raw);
        if (s.empty()) continue;
        if (s.rfind("weight:", 0) == 0) {
            cert.weight = std::stoi(detail::strip(s.substr(7)));
            saw_weight = true;
        } else if (s.rfind("dimension:", 0) == 0) {
            dimension = std::stoi(detail::strip(s.substr(10)));
        } else if (s.rfind("normalization:", 0) == 0) {
            cert.normalization = detail::strip(s.substr(14));
        } else if (s.rfind("element:", 0) == 0) {
            flush();
            pending_start = line + 1;
        } else {
            if (pending.empty() && pending_start == 0)
                throw ParseError(line, "term outside of an element block");
            pending += s + "\n";
        }
    }
    flush();
    if (!saw_weight) throw ParseError(line, "missing 'weight:' header");
    if (dimension < 0) throw ParseError(line, "missing 'dimension:' header");
    if (dimension != static_cast<int>(cert.elements.size()))
        throw ParseError(line, "dimension header does not match element count");
    return cert;
}

inline BasisCertificate certificate_from_json(const nlohmann::json& j) {
    BasisCertificate cert;
    cert.weight = j.at("weight").get<int>();
    cert.normalization = j.at("normalization").get<std::string>();
    for (const auto& e : j.at("elements")) cert.elements.push_back(poly_from_json(e));
    if (j.at("dimension").get<std::size_t>() != cert.elements.size())
        throw std::invalid_argument("dimension does not match element count");
    return cert;
}

struct CertificateCheck {
    std::string name;
    bool pass;
};

// Full re-verification: every element must satisfy the double shuffle
// condition at the stated weight and the whole basis must coincide with a
// fresh solve, normalization included. Nothing from the file is trusted.
inline std::vector<CertificateCheck> verify_certificate(const BasisCertificate& c) {
    std::vector<CertificateCheck> checks;
    bool all_ds = true, all_weight = true;
    for (const Poly& p : c.elements) {
        if (!is_ds(p)) all_ds = false;
        if (p.is_zero() || !is_homogeneous(p) || max_degree(p) != c.weight)
            all_weight = false;
    }
    checks.push_back({"elements_are_double_shuffle", all_ds});
    checks.push_back({"elements_have_stated_weight", all_weight});

    bool matches = true;
    try {
        const std::vector<DsElement> fresh = ds_basis(c.weight);
        if (fresh.size() != c.elements.size()) {
            matches = false;
        } else {
            for (std::size_t i = 0; i < fresh.size(); ++i)
                if (fresh[i].poly != c.elements[i]) matches = false;
        }
    } catch (const std::exception&) {
        matches = false;
    }
    checks.push_back({"matches_fresh_solve", matches});
    return checks;
}

}  // namespace dskrv
