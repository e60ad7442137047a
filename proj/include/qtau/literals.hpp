#pragma once

// Module and pair literals for the command line:
//   simple:2        proj:1        inj:3        uniserial:3>2>1
//   sums with '+':  proj:1+proj:2+simple:3
//   full records:   {"dims": {...}, "mats": {...}} inline or @file.json
//   pairs:          <module>/<v1>,<v2>   with '-' for empty parts:
//                   simple:1+simple:4/2,3     0/1,2,3      proj:1/-
// A uniserial hop with no arrow, or more than one, is an error, never a guess.

#include <fstream>
#include <sstream>

#include "qtau/poset_io.hpp"

namespace qtau {

inline Rep parse_single_module(const AlgebraPtr& alg, const std::string& text) {
    auto vertex_of = [&](const std::string& s) {
        try {
            int v = std::stoi(s);
            if (!alg->quiver().has_vertex(v)) throw error("unknown vertex " + s);
            return v;
        } catch (const std::invalid_argument&) {
            throw error("bad vertex '" + s + "'");
        }
    };
    if (text == "0" || text == "zero") return zero_rep(alg);
    if (text.rfind("simple:", 0) == 0) return simple(alg, vertex_of(text.substr(7)));
    if (text.rfind("proj:", 0) == 0) return projective(alg, vertex_of(text.substr(5)));
    if (text.rfind("inj:", 0) == 0) return injective(alg, vertex_of(text.substr(4)));
    if (text.rfind("uniserial:", 0) == 0) {
        std::vector<int> walk;
        std::string rest = text.substr(10);
        std::string cur;
        for (char ch : rest + ">") {
            if (ch == '>') {
                walk.push_back(vertex_of(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (walk.empty()) throw error("empty uniserial walk");
        PathWord w;
        w.source = walk[0];
        for (size_t h = 0; h + 1 < walk.size(); ++h) {
            int found = -1;
            for (int a = 0; a < alg->quiver().n_arrows(); ++a) {
                const Arrow& ar = alg->quiver().arrows[a];
                if (ar.source == walk[h] && ar.target == walk[h + 1]) {
                    if (found >= 0)
                        throw error("ambiguous hop " + std::to_string(walk[h]) + ">" +
                                    std::to_string(walk[h + 1]) + ": two parallel arrows");
                    found = a;
                }
            }
            if (found < 0)
                throw error("no arrow " + std::to_string(walk[h]) + " -> " +
                            std::to_string(walk[h + 1]));
            w.arrows.push_back(found);
        }
        return uniserial(alg, w);
    }
    if (!text.empty() && (text[0] == '{' || text[0] == '@')) {
        std::string payload = text;
        if (text[0] == '@') {
            std::ifstream in(text.substr(1));
            if (!in) throw error("cannot open module file " + text.substr(1));
            std::ostringstream ss;
            ss << in.rdbuf();
            payload = ss.str();
        }
        Json jc = Json::parse(payload);
        Rep m = zero_rep(alg);
        for (auto& [k, val] : jc.at("dims").items()) {
            int v = std::stoi(k);
            m.dims[alg->quiver().vertex_index(v)] = val.get<int>();
        }
        for (int a = 0; a < alg->quiver().n_arrows(); ++a) {
            int ti = alg->quiver().vertex_index(alg->quiver().arrows[a].target);
            int si = alg->quiver().vertex_index(alg->quiver().arrows[a].source);
            QMat mat(m.dims[ti], m.dims[si]);
            if (jc.at("mats").contains(alg->quiver().arrows[a].name)) {
                const Json& rows = jc.at("mats").at(alg->quiver().arrows[a].name);
                for (int r = 0; r < mat.rows(); ++r)
                    for (int c = 0; c < mat.cols(); ++c)
                        mat.at(r, c) = rat_from_string(rows.at(r).at(c).get<std::string>());
            }
            m.mats[a] = std::move(mat);
        }
        if (!check_rep(m)) throw error("module record violates the relations");
        return m;
    }
    throw error("bad module literal '" + text + "'");
}

inline Rep parse_module_literal(const AlgebraPtr& alg, const std::string& text) {
    std::vector<Rep> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text + "+") {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        if (ch == '+' && depth == 0) {
            if (!cur.empty()) parts.push_back(parse_single_module(alg, cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (parts.empty()) throw error("empty module literal");
    if (parts.size() == 1) return parts[0];
    return direct_sum(alg, parts);
}

// "<module>/<support>"; support is comma-separated vertex ids or '-'.
inline std::pair<Rep, std::vector<int>> parse_pair_literal(const AlgebraPtr& alg,
                                                           const std::string& text) {
    size_t cut = text.rfind('/');
    if (cut == std::string::npos) throw error("pair literal needs '/<support>'");
    std::string mod = text.substr(0, cut), sup = text.substr(cut + 1);
    Rep module = parse_module_literal(alg, mod);
    std::vector<int> support;
    if (sup != "-" && !sup.empty()) {
        std::string cur;
        for (char ch : sup + ",") {
            if (ch == ',') {
                if (!cur.empty()) {
                    int v = std::stoi(cur);
                    if (!alg->quiver().has_vertex(v))
                        throw error("unknown support vertex " + cur);
                    support.push_back(v);
                }
                cur.clear();
            } else {
                cur += ch;
            }
        }
    }
    return {module, support};
}

}  // namespace qtau
