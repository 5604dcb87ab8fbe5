// Command-line front end: thin adapters over the library, plus a run
// manifest (runs.log) for reproducibility.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/color.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/contract.hpp"
#include "ramsey/decompose.hpp"
#include "ramsey/density.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/io.hpp"
#include "ramsey/pattern.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

struct RunContext {
    std::string subcommand;
    std::string argv_joined;
    std::vector<std::pair<std::string, std::string>> inputs; // path, digest
    std::string result;
    bool deterministic = false;
    std::uint64_t budget = ramsey::kDefaultSearchBudget;
    std::string table_path = "data/ramsey_table.txt";
    int threads = 1;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::string fnv1a_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ramsey::ParseError("cannot open '" + path + "'");
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

ramsey::Graph load_graph(RunContext& ctx, const std::string& path) {
    ctx.inputs.emplace_back(path, fnv1a_digest(path));
    return ramsey::read_edge_list_file(path);
}

ramsey::EdgeColoring load_coloring(RunContext& ctx, const std::string& path) {
    ctx.inputs.emplace_back(path, fnv1a_digest(path));
    return ramsey::read_coloring_file(path);
}

void write_manifest(const RunContext& ctx) {
    std::ofstream log("runs.log", std::ios::app);
    if (!log) return;
    log << "cmd=" << ctx.subcommand << '\n';
    log << "args=" << ctx.argv_joined << '\n';
    for (const auto& [path, digest] : ctx.inputs) log << "input=" << path << ':' << digest << '\n';
    log << "version=" << kVersion << '\n';
    log << "result=" << ctx.result << '\n';
    if (!ctx.deterministic) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - ctx.start)
                      .count();
        log << "wall_ms=" << ms << '\n';
    }
    log << '\n';
}

std::string rat_str(const ramsey::Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string id_list(const std::vector<int>& ids) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? " " : "") << ids[i];
    return os.str();
}

void print_classes(const std::vector<std::vector<ramsey::Edge>>& classes) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << "class " << i << ":";
        for (auto [u, v] : classes[i]) std::cout << ' ' << u << '-' << v;
        std::cout << '\n';
    }
}

int run_density(RunContext& ctx, const std::string& param, int k, const std::string& path) {
    auto g = load_graph(ctx, path);
    ramsey::DensityWitness dw;
    if (param == "m")
        dw = ramsey::m_density(g);
    else if (param == "m1")
        dw = ramsey::m1_density(g);
    else if (param == "m1k")
        dw = ramsey::m1k_density(g, k);
    else if (param == "m2")
        dw = ramsey::m2_density(g);
    else
        throw CLI::ValidationError("--param must be one of m|m1|m1k|m2");
    std::cout << "value = " << rat_str(dw.value) << '\n';
    std::cout << "witness = " << id_list(dw.witness) << '\n';
    ctx.result = "value = " + rat_str(dw.value);
    return 0;
}

int run_bounds(RunContext& ctx, const std::string& pattern, int r) {
    auto f = ramsey::PatternSpec::parse(pattern);
    auto table = ramsey::load_table_file(ctx.table_path);
    ctx.inputs.emplace_back(ctx.table_path, fnv1a_digest(ctx.table_path));
    auto iv = ramsey::best_interval(f, r, table);
    std::ostringstream head;
    head << rat_str(iv.lower) << (iv.lower_strict ? " < " : " <= ") << "m*"
         << (iv.upper ? (iv.upper_strict ? " < " : " <= ") + rat_str(*iv.upper) : std::string());
    std::cout << head.str() << '\n';
    for (const auto& b : ramsey::lower_bounds(f, r, table))
        std::cout << "lower " << b.source << " = " << rat_str(b.value)
                  << (b.strict ? " (strict)" : "") << '\n';
    for (const auto& b : ramsey::upper_bounds(f, r, table))
        std::cout << "upper " << b.source << " = " << rat_str(b.value)
                  << (b.strict ? " (strict)" : "") << '\n';
    std::cout << "lower_source = " << iv.lower_source << '\n';
    if (iv.upper) std::cout << "upper_source = " << iv.upper_source << '\n';
    ctx.result = head.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ramsey-density toolkit"};
    app.fallthrough();
    app.require_subcommand(1);
    RunContext ctx;
    {
        std::ostringstream os;
        for (int i = 1; i < argc; ++i) os << (i > 1 ? " " : "") << argv[i];
        ctx.argv_joined = os.str();
    }
    app.add_option("--threads", ctx.threads, "worker threads (verification splitting)");
    app.add_flag("--deterministic", ctx.deterministic, "bit-reproducible outputs");
    app.add_option("--budget", ctx.budget, "search node budget");
    app.add_option("--table", ctx.table_path, "Ramsey number table file");

    // density
    std::string d_param = "m", d_graph;
    int d_k = 3;
    auto* cmd_density = app.add_subcommand("density", "exact density parameters");
    cmd_density->add_option("--param", d_param, "m|m1|m1k|m2")
        ->check(CLI::IsMember({"m", "m1", "m1k", "m2"}));
    cmd_density->add_option("--k", d_k, "k for m1k");
    cmd_density->add_option("graph", d_graph, "edge-list file")->required();

    // decompose
    auto* cmd_decompose = app.add_subcommand("decompose", "forest partitions and orientations");
    cmd_decompose->require_subcommand(1);
    std::string dc_graph;
    int dc_k = 1, dc_d = -1;
    auto* dc_forests = cmd_decompose->add_subcommand("forests", "minimal forest partition");
    dc_forests->add_option("graph", dc_graph)->required();
    auto* dc_stars = cmd_decompose->add_subcommand("stars", "star-forest partition");
    dc_stars->add_option("graph", dc_graph)->required();
    auto* dc_orient = cmd_decompose->add_subcommand("orient", "bounded in-degree orientation");
    dc_orient->add_option("--k", dc_k)->required();
    dc_orient->add_option("graph", dc_graph)->required();
    auto* dc_ad = cmd_decompose->add_subcommand("ad", "diameter-bounded forest partition size");
    dc_ad->add_option("--d", dc_d)->required();
    dc_ad->add_option("graph", dc_graph)->required();

    // contract
    int ct_r = 1;
    std::string ct_graph;
    auto* cmd_contract = app.add_subcommand("contract", "contract over-dense subgraphs");
    cmd_contract->add_option("--r", ct_r)->required();
    cmd_contract->add_option("graph", ct_graph)->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Ramsey property / coloring checks");
    cmd_verify->require_subcommand(1);
    std::string v_pattern, v_graph, v_coloring, v_out;
    int v_r = 2;
    auto* v_ramsey = cmd_verify->add_subcommand("ramsey", "exhaustive Ramsey verification");
    v_ramsey->add_option("--pattern", v_pattern)->required();
    v_ramsey->add_option("--r", v_r)->required();
    v_ramsey->add_option("--out", v_out, "certificate file (default <graph>.cex)");
    v_ramsey->add_option("graph", v_graph)->required();
    auto* v_col = cmd_verify->add_subcommand("coloring", "check a coloring is pattern-free");
    v_col->add_option("--pattern", v_pattern)->required();
    v_col->add_option("graph", v_graph)->required();
    v_col->add_option("coloring", v_coloring)->required();

    // color
    auto* cmd_color = app.add_subcommand("color", "pattern-free partition engines");
    cmd_color->require_subcommand(1);
    std::string c_graph, c_out;
    int c_r = 2, c_delta = 2, c_l = 4, c_a = 2, c_b = 2, c_R = 6;
    auto add_color_common = [&](CLI::App* sub) {
        sub->add_option("--out", c_out, "coloring output file (default <graph>.coloring)");
        sub->add_option("graph", c_graph)->required();
    };
    auto* c_greedy = cmd_color->add_subcommand("greedy", "back-degree bounded coloring");
    c_greedy->add_option("--r", c_r)->required();
    c_greedy->add_option("--delta", c_delta)->required();
    add_color_common(c_greedy);
    auto* c_cycle = cmd_color->add_subcommand("cycle-free", "no monochromatic cycle of length l");
    c_cycle->add_option("--l", c_l)->required();
    c_cycle->add_option("--r", c_r)->required();
    c_cycle->add_option("--R", c_R, "Ramsey number feeding the precondition")->required();
    add_color_common(c_cycle);
    auto* c_biclique = cmd_color->add_subcommand("biclique-free", "no monochromatic K_{a,b}");
    c_biclique->add_option("--a", c_a)->required();
    c_biclique->add_option("--b", c_b)->required();
    c_biclique->add_option("--r", c_r)->required();
    c_biclique->add_option("--R", c_R)->required();
    add_color_common(c_biclique);
    auto* c_path = cmd_color->add_subcommand("path-free", "no monochromatic path of length l");
    c_path->add_option("--l", c_l)->required();
    c_path->add_option("--r", c_r)->required();
    c_path->add_option("--R", c_R)->required();
    add_color_common(c_path);

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "named graph generators");
    cmd_construct->require_subcommand(1);
    std::string g_out, g_structure, g_override, g_family;
    std::vector<int> g_params;
    int g_n = 4, g_k = 2, g_m = 1, g_l = 4, g_r = 2, g_a = 2, g_b = 2;
    bool g_relax = false;
    auto* k_gnkm = cmd_construct->add_subcommand("gnkm", "base-plus-fibers gadget");
    k_gnkm->add_option("--n", g_n)->required();
    k_gnkm->add_option("--k", g_k)->required();
    k_gnkm->add_option("--m", g_m)->required();
    k_gnkm->add_option("--out", g_out);
    k_gnkm->add_option("--structure", g_structure, "sidecar fiber index file");
    auto* k_gstar = cmd_construct->add_subcommand("gstar", "recursive glued gadget");
    k_gstar->add_option("--l", g_l)->required();
    k_gstar->add_option("--k", g_k)->required();
    k_gstar->add_option("--r", g_r)->required();
    k_gstar->add_option("--override", g_override, "file with n/s/m sequences")->required();
    k_gstar->add_flag("--relax", g_relax, "allow non-canonical s sequence");
    k_gstar->add_option("--out", g_out);
    auto* k_kpq = cmd_construct->add_subcommand("kpq", "complete bipartite witness");
    k_kpq->add_option("--a", g_a)->required();
    k_kpq->add_option("--b", g_b)->required();
    k_kpq->add_option("--r", g_r)->required();
    k_kpq->add_option("--out", g_out);
    auto* k_p3 = cmd_construct->add_subcommand("witness-p3", "5-cycle with dangling edges");
    k_p3->add_option("--out", g_out);
    auto* k_named = cmd_construct->add_subcommand("named", "complete/path/cycle/star builders");
    k_named->add_option("family", g_family, "complete|complete-bipartite|path|cycle|star")
        ->required();
    k_named->add_option("params", g_params, "family parameters")->required();
    k_named->add_option("--out", g_out);

    // bounds
    std::string b_pattern;
    int b_r = 2;
    auto* cmd_bounds = app.add_subcommand("bounds", "Ramsey-density interval calculator");
    cmd_bounds->add_option("--pattern", b_pattern)->required();
    cmd_bounds->add_option("--r", b_r)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    auto emit_graph = [&](const ramsey::Graph& g) {
        if (g_out.empty()) {
            ramsey::write_edge_list(std::cout, g);
        } else {
            ramsey::write_edge_list_file(g_out, g);
            std::cout << "written = " << g_out << '\n';
        }
        std::ostringstream os;
        os << "n=" << g.n() << " e=" << g.e();
        ctx.result = os.str();
    };

    int exit_code = 0;
    try {
        if (cmd_density->parsed()) {
            ctx.subcommand = "density";
            exit_code = run_density(ctx, d_param, d_k, d_graph);
        } else if (cmd_decompose->parsed()) {
            ctx.subcommand = "decompose";
            auto g = load_graph(ctx, dc_graph);
            if (dc_forests->parsed()) {
                auto fp = ramsey::nash_williams(g);
                print_classes(fp.classes);
                ctx.result = "classes = " + std::to_string(fp.classes.size());
            } else if (dc_stars->parsed()) {
                auto fp = ramsey::nash_williams(g);
                std::vector<std::vector<ramsey::Edge>> stars;
                for (const auto& cls : fp.classes) {
                    auto [even, odd] = ramsey::split_into_star_forests(g.n(), cls);
                    stars.push_back(even);
                    if (!odd.empty()) stars.push_back(odd);
                }
                print_classes(stars);
                ctx.result = "classes = " + std::to_string(stars.size());
            } else if (dc_orient->parsed()) {
                auto o = ramsey::acyclic_orient(g, dc_k);
                for (auto [u, v] : o.arcs) std::cout << u << "->" << v << '\n';
                std::cout << "max_indegree = " << o.max_indegree << '\n';
                std::cout << "globally_acyclic = " << (o.globally_acyclic ? "true" : "false")
                          << '\n';
                ctx.result = "max_indegree = " + std::to_string(o.max_indegree);
            } else {
                int t = ramsey::a_d_exact(g, dc_d);
                std::cout << "value = " << t << '\n';
                ctx.result = "value = " + std::to_string(t);
            }
        } else if (cmd_contract->parsed()) {
            ctx.subcommand = "contract";
            auto g = load_graph(ctx, ct_graph);
            auto cert = ramsey::contract_dense(g, ct_r);
            const auto& sets = cert.family.sets();
            for (std::size_t i = 0; i < sets.size(); ++i)
                std::cout << "member " << i << ": " << id_list(sets[i]) << '\n';
            ramsey::write_multigraph(std::cout, cert.contracted);
            ctx.result = "members = " + std::to_string(sets.size());
        } else if (cmd_verify->parsed()) {
            ctx.subcommand = "verify";
            auto f = ramsey::PatternSpec::parse(v_pattern);
            auto g = load_graph(ctx, v_graph);
            if (v_ramsey->parsed()) {
                auto verdict = ramsey::is_ramsey(g, f, v_r, ctx.budget);
                std::cout << "is_ramsey = " << (verdict.is_ramsey ? "true" : "false") << '\n';
                std::cout << "nodes = " << verdict.nodes_searched << '\n';
                ctx.result = std::string("is_ramsey = ") + (verdict.is_ramsey ? "true" : "false");
                if (!verdict.is_ramsey) {
                    std::string out = v_out.empty() ? v_graph + ".cex" : v_out;
                    ramsey::write_coloring_file(out, *verdict.certificate);
                    std::cout << "certificate = " << out << '\n';
                    exit_code = 1;
                }
            } else {
                auto coloring = load_coloring(ctx, v_coloring);
                if (coloring.host.n() != g.n() || coloring.host.edges() != g.edges())
                    throw ramsey::ParseError("coloring does not match the graph");
                auto w = ramsey::find_mono_copy(coloring, f);
                if (w) {
                    std::cout << "monochromatic = true\n";
                    std::cout << "color = " << w->color << '\n';
                    std::cout << "copy = " << id_list(w->vertices) << '\n';
                    ctx.result = "monochromatic = true";
                    exit_code = 1;
                } else {
                    std::cout << "monochromatic = false\n";
                    ctx.result = "monochromatic = false";
                }
            }
        } else if (cmd_color->parsed()) {
            ctx.subcommand = "color";
            auto g = load_graph(ctx, c_graph);
            ramsey::EdgeColoring coloring;
            if (c_greedy->parsed())
                coloring = ramsey::greedy_backdegree_coloring(g, c_r, c_delta);
            else if (c_cycle->parsed())
                coloring = ramsey::cycle_free_partition(g, c_l, c_r, c_R);
            else if (c_biclique->parsed())
                coloring = ramsey::biclique_free_partition(g, c_a, c_b, c_r, c_R);
            else
                coloring = ramsey::path_free_partition(g, c_l, c_r, c_R);
            std::string out = c_out.empty() ? c_graph + ".coloring" : c_out;
            ramsey::write_coloring_file(out, coloring);
            std::cout << "written = " << out << '\n';
            ctx.result = "written = " + out;
        } else if (cmd_construct->parsed()) {
            ctx.subcommand = "construct";
            if (k_gnkm->parsed()) {
                auto fg = ramsey::build_gnkm(g_n, g_k, g_m);
                emit_graph(fg.graph);
                if (!g_structure.empty()) {
                    std::ofstream sf(g_structure);
                    for (const auto& [subset, verts] : fg.fibers)
                        sf << id_list(subset) << ": " << id_list(verts) << '\n';
                }
            } else if (k_gstar->parsed()) {
                std::ifstream ov(g_override);
                if (!ov) throw ramsey::ParseError("cannot open '" + g_override + "'");
                std::vector<std::vector<int>> seqs;
                std::string line;
                while (std::getline(ov, line)) {
                    if (line.empty() || line[0] == '#') continue;
                    std::istringstream ss(line);
                    std::string tag;
                    ss >> tag;
                    std::vector<int> seq;
                    int x;
                    while (ss >> x) seq.push_back(x);
                    seqs.push_back(seq);
                }
                if (seqs.size() != 3)
                    throw ramsey::ParseError("override file needs n, s and m lines");
                auto gs = ramsey::build_gstar(g_l, g_k, g_r, seqs[0], seqs[1], seqs[2], g_relax);
                emit_graph(gs.graph);
            } else if (k_kpq->parsed()) {
                emit_graph(ramsey::kpq_witness(g_a, g_b, g_r));
            } else if (k_p3->parsed()) {
                emit_graph(ramsey::p3_witness());
            } else {
                emit_graph(ramsey::build_named(g_family, g_params));
            }
        } else if (cmd_bounds->parsed()) {
            ctx.subcommand = "bounds";
            exit_code = run_bounds(ctx, b_pattern, b_r);
        }
    } catch (const ramsey::BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        ctx.result = std::string("budget-exhausted");
        exit_code = 2;
    } catch (const ramsey::InfeasibleError& e) {
        std::cout << "infeasible = true\n";
        std::cout << "witness = " << id_list(e.witness) << '\n';
        ctx.result = "infeasible";
        exit_code = 1;
    } catch (const ramsey::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        ctx.result = std::string("io-error: ") + e.what();
        write_manifest(ctx);
        return 74;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        ctx.result = std::string("invalid: ") + e.what();
        write_manifest(ctx);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        ctx.result = std::string("error: ") + e.what();
        write_manifest(ctx);
        return 1;
    }
    write_manifest(ctx);
    return exit_code;
}
