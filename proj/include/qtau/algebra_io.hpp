#pragma once

// Line-oriented algebra files:
//
//   algebra b1b
//   vertices: 1 2
//   arrows: b: 1 -> 2, a: 2 -> 1
//   relations: a*b = 0
//   cap: 50
//
// `p*q` means "first p, then q". Coefficients prefix a path separated by a
// space, as in `a*c - 2 b*d = 0`. `cap` is optional; `#` starts a comment.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "qtau/algebra.hpp"

namespace qtau {
namespace detail {

inline std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

struct RelTokenizer {
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    // NUMBER ("p" or "p/q"), IDENT, or a single symbol character.
    std::string next() {
        skip_ws();
        if (pos >= s.size()) throw error("unexpected end of relation");
        char c = s[pos];
        if (std::isdigit((unsigned char)c)) {
            size_t b = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
                    throw error("bad rational in relation: " + s);
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            }
            return s.substr(b, pos - b);
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t b = pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                ++pos;
            return s.substr(b, pos - b);
        }
        ++pos;
        return std::string(1, c);
    }
};

inline PathWord parse_path(RelTokenizer& tz, const Quiver& q, std::string first_ident) {
    PathWord w;
    std::vector<std::string> names{std::move(first_ident)};
    while (tz.peek() == '*') {
        tz.next();
        std::string id = tz.next();
        if (id.empty() || !(std::isalpha((unsigned char)id[0]) || id[0] == '_'))
            throw error("expected arrow name after '*' in relation");
        names.push_back(std::move(id));
    }
    for (const std::string& n : names) w.arrows.push_back(q.arrow_index(n));
    w.source = q.arrows[w.arrows.front()].source;
    if (!w.composable(q)) {
        std::string p;
        for (size_t i = 0; i < names.size(); ++i) p += (i ? "*" : "") + names[i];
        throw error("non-composable path in relation: " + p);
    }
    return w;
}

inline Relation parse_relation(const std::string& text, const Quiver& q) {
    RelTokenizer tz{text};
    Relation rel;
    bool neg = false;
    if (tz.peek() == '-') {
        tz.next();
        neg = true;
    }
    for (;;) {
        Rational coef = 1;
        std::string tok = tz.next();
        if (!tok.empty() && std::isdigit((unsigned char)tok[0])) {
            coef = rat_from_string(tok);
            tok = tz.next();
        }
        if (tok.empty() || !(std::isalpha((unsigned char)tok[0]) || tok[0] == '_'))
            throw error("expected path in relation: " + text);
        PathWord w = parse_path(tz, q, tok);
        rel.terms.emplace_back(neg ? Rational(-coef) : coef, w);
        char c = tz.peek();
        if (c == '+' || c == '-') {
            tz.next();
            neg = (c == '-');
            continue;
        }
        if (c == '=') {
            tz.next();
            std::string rhs = tz.next();
            if (rhs != "0") throw error("relation right-hand side must be 0: " + text);
            if (!tz.done()) throw error("trailing junk in relation: " + text);
            return rel;
        }
        throw error("malformed relation: " + text);
    }
}

}  // namespace detail

inline AlgebraPtr parse_algebra(const std::string& text) {
    using namespace detail;
    std::istringstream in(text);
    std::string line, name;
    Quiver q;
    std::vector<Relation> rels_pending;
    std::vector<std::string> rel_texts;
    int cap = BoundQuiverAlgebra::kDefaultCap;
    bool saw_header = false, saw_vertices = false;

    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (!saw_header) {
            if (line.rfind("algebra", 0) != 0) throw error("file must start with 'algebra <name>'");
            name = strip(line.substr(7));
            if (name.empty()) throw error("missing algebra name");
            saw_header = true;
            continue;
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw error("malformed line: " + line);
        std::string key = strip(line.substr(0, colon));
        std::string val = strip(line.substr(colon + 1));
        if (key == "vertices") {
            std::istringstream vs(val);
            int v;
            while (vs >> v) q.vertices.push_back(v);
            if (!vs.eof()) throw error("malformed vertex list: " + val);
            if (q.vertices.empty()) throw error("empty vertex list");
            saw_vertices = true;
        } else if (key == "arrows") {
            if (val.empty()) continue;
            for (std::string part : split(val, ',')) {
                part = strip(part);
                if (part.empty()) continue;
                // name: s -> t
                size_t c2 = part.find(':');
                size_t ar = part.find("->");
                if (c2 == std::string::npos || ar == std::string::npos || ar < c2)
                    throw error("malformed arrow: " + part);
                Arrow a;
                a.name = strip(part.substr(0, c2));
                try {
                    a.source = std::stoi(strip(part.substr(c2 + 1, ar - c2 - 1)));
                    a.target = std::stoi(strip(part.substr(ar + 2)));
                } catch (const std::exception&) {
                    throw error("malformed arrow: " + part);
                }
                if (a.name.empty()) throw error("malformed arrow: " + part);
                q.arrows.push_back(std::move(a));
            }
        } else if (key == "relations") {
            if (val.empty()) continue;
            for (std::string part : split(val, ',')) {
                part = strip(part);
                if (!part.empty()) rel_texts.push_back(part);
            }
        } else if (key == "cap") {
            try {
                cap = std::stoi(val);
            } catch (const std::exception&) {
                throw error("malformed cap: " + val);
            }
        } else {
            throw error("unknown key '" + key + "'");
        }
    }
    if (!saw_header) throw error("empty algebra file");
    if (!saw_vertices) throw error("missing vertices line");
    q.validate();
    std::vector<Relation> rels;
    for (const std::string& rt : rel_texts) rels.push_back(parse_relation(rt, q));
    return BoundQuiverAlgebra::make(name, std::move(q), std::move(rels), cap);
}

inline std::string print_algebra(const AlgebraPtr& alg) {
    std::string out = "algebra " + alg->name() + "\n";
    out += "vertices:";
    for (int v : alg->quiver().vertices) out += " " + std::to_string(v);
    out += "\narrows:";
    for (int i = 0; i < alg->quiver().n_arrows(); ++i) {
        const Arrow& a = alg->quiver().arrows[i];
        out += std::string(i ? "," : "") + " " + a.name + ": " + std::to_string(a.source) +
               " -> " + std::to_string(a.target);
    }
    out += "\nrelations:";
    for (size_t i = 0; i < alg->relations().size(); ++i)
        out += std::string(i ? "," : "") + " " + alg->relations()[i].to_string(alg->quiver());
    out += "\ncap: " + std::to_string(alg->cap()) + "\n";
    return out;
}

}  // namespace qtau
