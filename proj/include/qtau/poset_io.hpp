#pragma once

// JSON and DOT exports of a Hasse poset, and the JSON re-import. The JSON
// carries full matrix data for every indecomposable class (insertion order
// preserved), so a round trip reproduces canonical keys exactly. Golden files
// rely on nlohmann::json's sorted-key, canonical-rational output.

#include <json.hpp>

#include <set>
#include <string>

#include "qtau/sttilt.hpp"

namespace qtau {

using Json = nlohmann::json;

// Radical-layer label, top row first: "1 3/2/1" for the module with top
// S1 + S3 over S2 over S1.
inline std::string layer_label(const Rep& m) {
    if (m.is_zero()) return "0";
    std::string out;
    bool first_layer = true;
    for (const auto& layer : loewy_layers(m)) {
        if (!first_layer) out += "/";
        first_layer = false;
        bool first_v = true;
        for (size_t v = 0; v < layer.size(); ++v)
            for (int k = 0; k < layer[v]; ++k) {
                if (!first_v) out += " ";
                first_v = false;
                out += std::to_string(m.alg->quiver().vertices[v]);
            }
    }
    return out;
}

// The walk of a uniserial module (vertex ids, top to socle), when the module
// is uniserial along unique arrows.
inline std::optional<std::vector<int>> uniserial_walk(const Rep& m) {
    if (m.is_zero()) return std::nullopt;
    std::vector<int> walk;
    for (const auto& layer : loewy_layers(m)) {
        int total = 0, vertex = -1;
        for (size_t v = 0; v < layer.size(); ++v) {
            total += layer[v];
            if (layer[v] > 0) vertex = m.alg->quiver().vertices[v];
        }
        if (total != 1) return std::nullopt;
        walk.push_back(vertex);
    }
    // confirm against the constructed uniserial; hops need unique arrows
    PathWord w;
    w.source = walk[0];
    for (size_t h = 0; h + 1 < walk.size(); ++h) {
        int found = -1;
        for (int a = 0; a < m.alg->quiver().n_arrows(); ++a) {
            const Arrow& ar = m.alg->quiver().arrows[a];
            if (ar.source == walk[h] && ar.target == walk[h + 1]) {
                if (found >= 0) return std::nullopt;  // ambiguous hop
                found = a;
            }
        }
        if (found < 0) return std::nullopt;
        w.arrows.push_back(found);
    }
    try {
        if (!is_isomorphic(m, uniserial(m.alg, w))) return std::nullopt;
    } catch (const error&) {
        return std::nullopt;
    }
    return walk;
}

inline std::string pair_label(const ClassRegistry& reg, const STPair& p) {
    std::string mod;
    for (size_t i = 0; i < p.summands.size(); ++i)
        mod += (i ? " + " : "") + layer_label(reg.rep(p.summands[i]));
    if (p.summands.empty()) mod = "0";
    if (p.support.empty()) return mod;
    std::string sup;
    for (size_t i = 0; i < p.support.size(); ++i)
        sup += (i ? " " : "") + ("P" + std::to_string(p.support[i]));
    return "(" + mod + ", " + sup + ")";
}

inline Json export_json(const HassePoset& poset) {
    const ClassRegistry& reg = *poset.reg;
    const AlgebraPtr& alg = reg.algebra();
    Json j;
    j["algebra"] = alg->name();
    j["vertices"] = alg->quiver().vertices;
    j["complete"] = poset.complete;
    Json classes = Json::array();
    for (int c = 0; c < reg.size(); ++c) {
        const Rep& m = reg.rep(c);
        Json jc;
        jc["key"] = reg.key(c);
        Json dims;
        for (int v : alg->quiver().vertices)
            dims[std::to_string(v)] = m.dims[alg->quiver().vertex_index(v)];
        jc["dims"] = dims;
        jc["layers"] = layer_label(m);
        if (auto walk = uniserial_walk(m)) {
            std::string d;
            for (size_t i = 0; i < walk->size(); ++i)
                d += (i ? ">" : "") + std::to_string((*walk)[i]);
            jc["diagram"] = d;
        }
        Json mats;
        for (int a = 0; a < alg->quiver().n_arrows(); ++a) {
            const QMat& mat = m.mats[a];
            Json rows = Json::array();
            for (int r = 0; r < mat.rows(); ++r) {
                Json row = Json::array();
                for (int cc = 0; cc < mat.cols(); ++cc) row.push_back(rat_to_string(mat.at(r, cc)));
                rows.push_back(row);
            }
            mats[alg->quiver().arrows[a].name] = rows;
        }
        jc["mats"] = mats;
        classes.push_back(jc);
    }
    j["registry"] = classes;
    Json nodes = Json::array();
    for (int i = 0; i < int(poset.nodes.size()); ++i) {
        Json jn;
        jn["id"] = i;
        jn["key"] = poset.keys[i];
        jn["label"] = pair_label(reg, poset.nodes[i]);
        jn["module"] = poset.nodes[i].summands;
        jn["support"] = poset.nodes[i].support;
        nodes.push_back(jn);
    }
    j["nodes"] = nodes;
    Json arrows = Json::array();
    for (const HasseArrow& a : poset.arrows) {
        Json ja;
        ja["from"] = a.from;
        ja["to"] = a.to;
        ja["mutated"] = a.mutated_class;
        arrows.push_back(ja);
    }
    j["arrows"] = arrows;
    return j;
}

// Rebuild a poset from its JSON export over the given algebra. Classes are
// registered in file order, nodes and arrows verified against their keys.
inline HassePoset import_json(const Json& j, const AlgebraPtr& alg) {
    if (j.at("algebra").get<std::string>() != alg->name())
        throw error("poset JSON is for algebra '" + j.at("algebra").get<std::string>() + "'");
    HassePoset poset;
    poset.reg = std::make_shared<ClassRegistry>(alg);
    poset.complete = j.at("complete").get<bool>();
    std::vector<int> class_map;
    for (const Json& jc : j.at("registry")) {
        Rep m = zero_rep(alg);
        for (int v : alg->quiver().vertices)
            m.dims[alg->quiver().vertex_index(v)] = jc.at("dims").at(std::to_string(v)).get<int>();
        for (int a = 0; a < alg->quiver().n_arrows(); ++a) {
            const Json& rows = jc.at("mats").at(alg->quiver().arrows[a].name);
            int ti = alg->quiver().vertex_index(alg->quiver().arrows[a].target);
            int si = alg->quiver().vertex_index(alg->quiver().arrows[a].source);
            QMat mat(m.dims[ti], m.dims[si]);
            for (int r = 0; r < mat.rows(); ++r)
                for (int c = 0; c < mat.cols(); ++c)
                    mat.at(r, c) = rat_from_string(rows.at(r).at(c).get<std::string>());
            m.mats[a] = std::move(mat);
        }
        if (!check_rep(m)) throw error("imported class violates the relations");
        int id = poset.reg->add(m);
        if (poset.reg->key(id) != jc.at("key").get<std::string>())
            throw error("imported class key mismatch: " + poset.reg->key(id));
        class_map.push_back(id);
    }
    for (const Json& jn : j.at("nodes")) {
        STPair p;
        for (int c : jn.at("module").get<std::vector<int>>()) p.summands.push_back(class_map.at(c));
        p.support = jn.at("support").get<std::vector<int>>();
        sort_pair(*poset.reg, p);
        poset.nodes.push_back(p);
        poset.keys.push_back(pair_key(*poset.reg, p));
        if (poset.keys.back() != jn.at("key").get<std::string>())
            throw error("imported node key mismatch: " + poset.keys.back());
    }
    for (const Json& ja : j.at("arrows"))
        poset.arrows.push_back({ja.at("from").get<int>(), ja.at("to").get<int>(),
                                class_map.at(ja.at("mutated").get<int>())});
    return poset;
}

// DOT export with stable ordering; highlighted nodes (the image of e, say)
// get a doubled border.
inline std::string export_dot(const HassePoset& poset, const std::set<int>& highlight = {}) {
    for (int h : highlight)
        if (h < 0 || h >= int(poset.nodes.size()))
            throw error("highlight set contains an unknown node");
    std::string out = "digraph sttilt {\n  rankdir=TB;\n";
    for (int i = 0; i < int(poset.nodes.size()); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" +
               pair_label(*poset.reg, poset.nodes[i]) + "\"";
        if (highlight.count(i)) out += ", peripheries=2, style=filled, fillcolor=lightgrey";
        out += "];\n";
    }
    for (const HasseArrow& a : poset.arrows)
        out += "  n" + std::to_string(a.from) + " -> n" + std::to_string(a.to) + " [label=\"" +
               layer_label(poset.reg->rep(a.mutated_class)) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace qtau
