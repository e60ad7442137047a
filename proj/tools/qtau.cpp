// qtau: support tau-tilting pairs over bound quiver algebras, their mutation
// poset, and one-point extensions. See README.md for the file formats.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qtau/literals.hpp"
#include "qtau/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qtau::error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw qtau::error("cannot write " + path);
    out << content;
}

std::string layers_text(const std::vector<std::vector<int>>& layers,
                        const std::vector<int>& vertices) {
    std::string out;
    bool first_layer = true;
    for (const auto& layer : layers) {
        if (!first_layer) out += "/";
        first_layer = false;
        bool first = true;
        for (size_t v = 0; v < layer.size(); ++v)
            for (int k = 0; k < layer[v]; ++k) {
                if (!first) out += " ";
                first = false;
                out += std::to_string(vertices[v]);
            }
    }
    return out.empty() ? "0" : out;
}

// Splits a module literal into its '+'-separated summand texts, so mutation
// positions refer to the order the user wrote.
std::vector<std::string> literal_pieces(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : text + "+") {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        if (ch == '+' && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"support tau-tilting pairs, mutation posets and one-point extensions"};
    app.require_subcommand(1);

    std::string alg_file, module_lit, pair_lit, out_file, dot_path, json_path, suite;
    int max_nodes = 10000, position = 0;
    std::vector<int> at_vertices;

    CLI::App* cmd_hasse = app.add_subcommand("hasse", "enumerate the poset of pairs");
    cmd_hasse->add_option("file", alg_file, "algebra file")->required();
    cmd_hasse->add_option("--max-nodes", max_nodes, "node cap (default 10000)");
    cmd_hasse->add_option("--dot", dot_path, "write DOT export here");
    cmd_hasse->add_option("--json", json_path, "write JSON export here");

    CLI::App* cmd_tau = app.add_subcommand("tau", "Auslander-Reiten translate of a module");
    cmd_tau->add_option("file", alg_file)->required();
    cmd_tau->add_option("module", module_lit, "module literal")->required();

    CLI::App* cmd_extend = app.add_subcommand("extend", "one-point extension by projectives");
    cmd_extend->add_option("file", alg_file)->required();
    cmd_extend->add_option("--at", at_vertices, "vertices of the projective summands")
        ->required()
        ->delimiter(',');
    cmd_extend->add_option("--out", out_file, "output algebra file")->required();

    CLI::App* cmd_mutate = app.add_subcommand("mutate", "left mutation of a pair");
    cmd_mutate->add_option("file", alg_file)->required();
    cmd_mutate->add_option("pair", pair_lit, "pair literal <module>/<support>")->required();
    cmd_mutate->add_option("--at", position, "module summand index (0-based)")->required();

    CLI::App* cmd_compl = app.add_subcommand("complements", "complete an almost complete pair");
    cmd_compl->add_option("file", alg_file)->required();
    cmd_compl->add_option("pair", pair_lit, "almost-pair literal")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify-paper", "run a verification suite");
    cmd_verify
        ->add_option("suite", suite, "s2-example | s3-figure | s3-embedding | s3-boundary | "
                                     "nonprojective | properties | all")
        ->required();
    cmd_verify->add_option("--json", json_path, "write the report as JSON here");

    CLI11_PARSE(app, argc, argv);

    if (cmd_hasse->parsed()) {
        qtau::AlgebraPtr alg = qtau::parse_algebra(read_file(alg_file));
        qtau::HassePoset poset = qtau::hasse(alg, max_nodes);
        std::cout << "nodes=" << poset.nodes.size()
                  << " complete=" << (poset.complete ? "true" : "false") << "\n";
        std::cout << "arrows=" << poset.arrows.size() << "\n";
        if (!dot_path.empty()) write_file(dot_path, qtau::export_dot(poset));
        if (!json_path.empty()) write_file(json_path, qtau::export_json(poset).dump(1) + "\n");
        if (!poset.complete) {
            std::cerr << "error: node cap exceeded; poset is partial\n";
            return 1;
        }
        return 0;
    }
    if (cmd_tau->parsed()) {
        qtau::AlgebraPtr alg = qtau::parse_algebra(read_file(alg_file));
        qtau::Rep m = qtau::parse_module_literal(alg, module_lit);
        qtau::Rep t = qtau::tau(m);
        std::cout << "dim=" << t.dim_vector_string() << "\n";
        std::cout << "radical_layers="
                  << layers_text(qtau::loewy_layers(t), alg->quiver().vertices) << "\n";
        std::cout << "socle_layers=" << layers_text(qtau::socle_layers(t), alg->quiver().vertices)
                  << "\n";
        return 0;
    }
    if (cmd_extend->parsed()) {
        qtau::AlgebraPtr alg = qtau::parse_algebra(read_file(alg_file));
        qtau::OPEContext ctx = qtau::one_point_extension(alg, at_vertices);
        write_file(out_file, qtau::print_algebra(ctx.A));
        qtau::Json map;
        map["base"] = alg->name();
        map["old_vertices"] = alg->quiver().vertices;
        map["new_vertex"] = ctx.v;
        map["p0_vertices"] = ctx.p0_vertices;
        qtau::Json arrows = qtau::Json::array();
        for (int a : ctx.ext_arrows)
            arrows.push_back({{"name", ctx.A->quiver().arrows[a].name},
                              {"target", ctx.A->quiver().arrows[a].target}});
        map["arrows"] = arrows;
        write_file(out_file + ".map.json", map.dump(1) + "\n");
        std::cout << "wrote " << out_file << " and " << out_file << ".map.json\n";
        return 0;
    }
    if (cmd_mutate->parsed()) {
        qtau::AlgebraPtr alg = qtau::parse_algebra(read_file(alg_file));
        size_t cut = pair_lit.rfind('/');
        if (cut == std::string::npos) throw qtau::error("pair literal needs '/<support>'");
        auto [module, support] = qtau::parse_pair_literal(alg, pair_lit);
        (void)module;
        std::vector<std::string> pieces = literal_pieces(pair_lit.substr(0, cut));
        qtau::ClassRegistry reg(alg);
        qtau::STPair p;
        std::vector<int> literal_ids;
        for (const std::string& piece : pieces) {
            if (piece == "0" || piece == "zero") continue;
            int id = reg.add(qtau::parse_module_literal(alg, piece));
            literal_ids.push_back(id);
            p.summands.push_back(id);
        }
        p.support = support;
        qtau::sort_pair(reg, p);
        if (!qtau::is_stt_pair(reg, p))
            throw qtau::error("input is not a support tau-tilting pair");
        if (position < 0 || position >= int(literal_ids.size()))
            throw qtau::error("--at out of range");
        int pos = -1;
        for (int k = 0; k < int(p.summands.size()); ++k)
            if (p.summands[k] == literal_ids[position]) pos = k;
        qtau::MutationStep step = qtau::left_mutation_step(reg, p, pos);
        std::cout << "mutated=" << qtau::layer_label(reg.rep(step.mutated_class)) << "\n";
        std::cout << "result=" << qtau::pair_label(reg, step.result) << "\n";
        return 0;
    }
    if (cmd_compl->parsed()) {
        qtau::AlgebraPtr alg = qtau::parse_algebra(read_file(alg_file));
        auto [module, support] = qtau::parse_pair_literal(alg, pair_lit);
        std::vector<qtau::Rep> summands;
        if (!module.is_zero())
            for (const auto& [part, mult] : qtau::decompose(module)) {
                (void)mult;
                summands.push_back(part);
            }
        if (int(summands.size() + support.size()) != alg->n_vertices() - 1)
            throw qtau::error("not an almost complete pair: |M| + |P| != n - 1");
        qtau::HassePoset poset = qtau::hasse(alg, max_nodes);
        std::vector<int> hits = qtau::complements(poset, summands, support);
        std::cout << "completions=" << hits.size() << "\n";
        for (int h : hits)
            std::cout << "  " << qtau::pair_label(*poset.reg, poset.nodes[h]) << "\n";
        if (hits.size() != 2) {
            std::cerr << "error: expected exactly two complements\n";
            return 1;
        }
        return 0;
    }
    if (cmd_verify->parsed()) {
        std::vector<std::string> ids =
            suite == "all" ? qtau::suite_ids() : std::vector<std::string>{suite};
        bool all_ok = true;
        qtau::Json out = qtau::Json::array();
        for (const std::string& id : ids) {
            qtau::Report rep = qtau::run_suite(id, qtau::env_seed());
            std::cout << rep.to_text();
            out.push_back(rep.to_json());
            all_ok = all_ok && rep.ok();
        }
        if (!json_path.empty()) write_file(json_path, out.dump(1) + "\n");
        return all_ok ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
