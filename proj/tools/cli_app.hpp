// Copyright 2026 The braidembed Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidembed/braidembed.hpp"

// Command-line front end.  Exit codes: 0 success, 1 validation failure,
// 2 input error, 3 internal invariant breach.

namespace braidembed::cli {

enum exit_code : int { ok = 0, invalid = 1, input_error = 2, internal_error = 3 };

struct GraphSource {
    std::string path;
    int complete = 0;
    std::vector<int> biclique;
};

struct CliConfig {
    std::string command;
    GraphSource graph;
    std::string embedding_path;
    std::string output = "-";
    std::string format = "doc";
    std::string ordering_path;
    bool prune = false;
    std::vector<int> sizes{64, 128, 256, 512, 1024};
    int repeats = 3;
};

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parse_error("cannot write '" + path + "'");
    f << text;
}

inline SourceGraph load_graph(const GraphSource &src) {
    int given = (src.complete > 0) + !src.biclique.empty() + !src.path.empty();
    if (given != 1) throw parse_error("give exactly one of an edge-list path, --complete or --biclique");
    if (src.complete > 0) return complete_graph(src.complete);
    if (!src.biclique.empty()) {
        if (src.biclique.size() != 2 || src.biclique[0] < 1 || src.biclique[1] < 1)
            throw parse_error("--biclique needs two positive part sizes");
        return complete_bipartite(src.biclique[0], src.biclique[1]);
    }
    return parse_edge_list(read_file(src.path));
}

inline std::string format_report(const ValidationReport &r) {
    std::ostringstream out;
    out << (r.passed() ? "OK: " : "FAIL: ") << r.clauses_passed() << "/" << clause_count << " clauses\n";
    for (const Violation &v : r.violations)
        out << "  (" << clause_id(v.clause) << ") " << clause_name(v.clause) << ": " << v.message << " [" << v.element
            << "]\n";
    return out.str();
}

inline int cmd_embed(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    SourceGraph g = load_graph(cfg.graph);
    if (!cfg.ordering_path.empty()) g = parse_ordering(read_file(cfg.ordering_path), g);

    Embedding e = embed(g);
    if (cfg.prune) e = prune(e, g);
    const ValidationReport report = validate(g, e);
    if (!report.passed()) {
        err << "internal error: produced embedding fails validation\n" << format_report(report);
        return internal_error;
    }

    std::string text;
    if (cfg.format == "doc") {
        text = serialize_embedding(e, g);
    } else if (cfg.format == "ascii") {
        if (e.dims().rows > 40 || e.dims().cols > 40)
            err << "warning: " << e.dims().rows << "x" << e.dims().cols << " grid exceeds 40x40\n";
        text = render_ascii(e);
    } else {
        text = render_svg(e);
    }
    write_output(cfg.output, text, out);
    return ok;
}

inline int cmd_validate(const CliConfig &cfg, std::ostream &out) {
    const SourceGraph g = load_graph(cfg.graph);
    const Embedding e = parse_embedding(read_file(cfg.embedding_path), g);
    const ValidationReport report = validate(g, e);
    out << format_report(report);
    return report.passed() ? ok : invalid;
}

inline int cmd_render(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    const std::string text = read_file(cfg.embedding_path);
    const SourceGraph g = implied_graph(text);
    const Embedding e = parse_embedding(text, g);
    if (cfg.format == "svg") {
        write_output(cfg.output, render_svg(e), out);
    } else {
        if (e.dims().rows > 40 || e.dims().cols > 40)
            err << "warning: " << e.dims().rows << "x" << e.dims().cols << " grid exceeds 40x40\n";
        write_output(cfg.output, render_ascii(e), out);
    }
    return ok;
}

inline int cmd_bench(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    std::vector<BenchRow> rows;
    try {
        rows = run_bench(cfg.sizes, cfg.repeats);
    } catch (const precondition_error &ex) {
        throw parse_error(ex.what());
    }
    write_output(cfg.output, bench_csv(rows), out);
    if (rows.size() >= 2) {
        const std::size_t k = std::min<std::size_t>(3, rows.size());
        const double slope = time_slope(std::span<const BenchRow>(rows).last(k));
        char buf[96];
        std::snprintf(buf, sizeof buf, "log-log time slope over largest %zu sizes: %.3f\n", k, slope);
        err << buf;
    }
    return ok;
}

inline void add_graph_options(CLI::App *cmd, GraphSource &src, const char *path_help) {
    cmd->add_option("graph", src.path, path_help);
    cmd->add_option("--complete", src.complete, "Use the complete graph K_n")->check(CLI::PositiveNumber);
    cmd->add_option("--biclique", src.biclique, "Use the complete bipartite graph K_{a,b}")->expected(2);
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CliConfig cfg;
    CLI::App app{"Braided island/bridge embeddings into the extended grid", "braidembed"};
    app.require_subcommand(1);

    auto *embed_cmd = app.add_subcommand("embed", "Embed a graph and write the result");
    add_graph_options(embed_cmd, cfg.graph, "Edge-list file");
    embed_cmd->add_option("-o,--output", cfg.output, "Output path, '-' for stdout");
    embed_cmd->add_option("-f,--format", cfg.format, "doc, ascii or svg")
        ->check(CLI::IsMember({"doc", "ascii", "svg"}));
    embed_cmd->add_option("--ordering", cfg.ordering_path, "File listing vertex labels, lowest ordinal first");
    embed_cmd->add_flag("--prune", cfg.prune, "Trim island cells that carry no bridge");

    auto *validate_cmd = app.add_subcommand("validate", "Check an embedding document against a graph");
    add_graph_options(validate_cmd, cfg.graph, "Edge-list file");
    validate_cmd->add_option("embedding", cfg.embedding_path, "Embedding document");

    auto *render_cmd = app.add_subcommand("render", "Draw an embedding document");
    render_cmd->add_option("embedding", cfg.embedding_path, "Embedding document")->required();
    render_cmd->add_option("-o,--output", cfg.output, "Output path, '-' for stdout");
    render_cmd->add_option("-f,--format", cfg.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

    auto *bench_cmd = app.add_subcommand("bench", "Time K_n embeddings and report CSV");
    bench_cmd->add_option("--sizes", cfg.sizes, "Vertex counts, strictly increasing")->delimiter(',');
    bench_cmd->add_option("--repeats", cfg.repeats, "Runs per size, best time kept")->check(CLI::PositiveNumber);
    bench_cmd->add_option("-o,--output", cfg.output, "Output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &ex) {
        int rc = app.exit(ex, out, err);
        return rc == 0 ? ok : input_error;
    }

    try {
        if (*embed_cmd) return cmd_embed(cfg, out, err);
        if (*validate_cmd) {
            // with --complete/--biclique the lone positional lands in 'graph'
            if (cfg.embedding_path.empty() && (cfg.graph.complete > 0 || !cfg.graph.biclique.empty()))
                std::swap(cfg.embedding_path, cfg.graph.path);
            if (cfg.embedding_path.empty()) throw parse_error("missing embedding document");
            return cmd_validate(cfg, out);
        }
        if (*render_cmd) {
            if (cfg.format == "doc") cfg.format = "ascii";
            return cmd_render(cfg, out, err);
        }
        return cmd_bench(cfg, out, err);
    } catch (const parse_error &ex) {
        err << "error: " << ex.what() << "\n";
        return input_error;
    } catch (const invalid_coordinate &ex) {
        err << "error: " << ex.what() << "\n";
        return input_error;
    } catch (const precondition_error &ex) {
        err << "error: " << ex.what() << "\n";
        return input_error;
    } catch (const std::exception &ex) {
        err << "internal error: " << ex.what() << "\n";
        return internal_error;
    }
}

}  // namespace braidembed::cli
