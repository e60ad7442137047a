#pragma once

// Quivers, path words and relations. Composition is diagrammatic throughout:
// the word {a, b} means "first traverse a, then b", so it requires
// target(a) == source(b), and the file syntax `a*b` denotes the same thing.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qtau/rational.hpp"

namespace qtau {

struct Arrow {
    std::string name;
    int source = 0;  // vertex id
    int target = 0;  // vertex id
};

struct Quiver {
    std::vector<int> vertices;  // ids, ascending
    std::vector<Arrow> arrows;

    void validate() const {
        std::vector<int> vs = vertices;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw error("duplicate vertex id");
        std::vector<std::string> names;
        for (const Arrow& a : arrows) {
            if (!has_vertex(a.source) || !has_vertex(a.target))
                throw error("arrow '" + a.name + "' uses undeclared vertex");
            names.push_back(a.name);
        }
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end())
            throw error("duplicate arrow name");
    }

    bool has_vertex(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    int vertex_index(int v) const {
        for (int i = 0; i < int(vertices.size()); ++i)
            if (vertices[i] == v) return i;
        throw error("unknown vertex " + std::to_string(v));
    }

    int arrow_index(const std::string& name) const {
        for (int i = 0; i < int(arrows.size()); ++i)
            if (arrows[i].name == name) return i;
        throw error("unknown arrow '" + name + "'");
    }

    int n_vertices() const { return int(vertices.size()); }
    int n_arrows() const { return int(arrows.size()); }
};

// A composable word of arrow indices with an explicit source vertex so that
// the empty word e_i at each vertex is representable.
struct PathWord {
    int source = 0;  // vertex id
    std::vector<int> arrows;

    int length() const { return int(arrows.size()); }

    int target(const Quiver& q) const {
        return arrows.empty() ? source : q.arrows[arrows.back()].target;
    }

    bool composable(const Quiver& q) const {
        int at = source;
        for (int a : arrows) {
            if (q.arrows[a].source != at) return false;
            at = q.arrows[a].target;
        }
        return true;
    }

    PathWord subword(int from, int len) const {
        PathWord w;
        w.arrows.assign(arrows.begin() + from, arrows.begin() + from + len);
        w.source = source;  // fixed up by caller when from > 0
        return w;
    }

    std::string to_string(const Quiver& q) const {
        if (arrows.empty()) return "e" + std::to_string(source);
        std::string s;
        for (size_t i = 0; i < arrows.size(); ++i)
            s += (i ? "*" : "") + q.arrows[arrows[i]].name;
        return s;
    }
};

// Length-lexicographic order; ties broken by source so that parallel empty
// words at distinct vertices stay distinct map keys.
inline bool lenlex_less(const PathWord& a, const PathWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.source < b.source;
}

struct PathLess {
    bool operator()(const PathWord& a, const PathWord& b) const { return lenlex_less(a, b); }
};

inline bool operator==(const PathWord& a, const PathWord& b) {
    return a.source == b.source && a.arrows == b.arrows;
}

// Linear combination of parallel path words.
using LinComb = std::map<PathWord, Rational, PathLess>;

inline void add_term(LinComb& c, const PathWord& w, const Rational& coef) {
    if (is_zero(coef)) return;
    auto it = c.find(w);
    if (it == c.end()) {
        c.emplace(w, coef);
    } else {
        it->second += coef;
        if (is_zero(it->second)) c.erase(it);
    }
}

struct Relation {
    std::vector<std::pair<Rational, PathWord>> terms;

    // All paths in one relation must be parallel and of length >= 2.
    void validate(const Quiver& q) const {
        if (terms.empty()) throw error("empty relation");
        for (const auto& [c, w] : terms) {
            (void)c;
            if (!w.composable(q))
                throw error("non-composable path in relation: " + w.to_string(q));
            if (w.length() < 2)
                throw error("relation term of length < 2: " + w.to_string(q));
            if (w.source != terms[0].second.source || w.target(q) != terms[0].second.target(q))
                throw error("relation terms are not parallel");
        }
    }

    std::string to_string(const Quiver& q) const {
        std::string s;
        bool first = true;
        for (const auto& [c, w] : terms) {
            std::string cs = rat_to_string(c < 0 ? Rational(-c) : c);
            if (first) {
                if (c < 0) s += "-";
                first = false;
            } else {
                s += c < 0 ? " - " : " + ";
            }
            if (cs != "1") s += cs + " ";
            s += w.to_string(q);
        }
        return s + " = 0";
    }
};

}  // namespace qtau
