// univ: build tree- and treewidth-universal graphs, embed guests into them,
// and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "univ/embedding.hpp"
#include "univ/harness.hpp"
#include "univ/io.hpp"
#include "univ/separators.hpp"
#include "univ/treewidth.hpp"

using namespace univ;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("UNIV_SEED")) return std::strtoull(env, nullptr, 10);
    return 20240613;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_pace_graph(in);
}

TreeDecomposition load_td(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_pace_td(in);
}

void write_mapping(std::ostream& out, const Host& host, const Embedding& emb) {
    for (size_t v = 0; v < emb.to_host.size(); ++v)
        out << v + 1 << " " << host.vertex_name(emb.to_host[v]) << "\n";
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return file;
}

int report_exit(const VerificationReport& rep) {
    std::cout << "RESULT suite=" << rep.name << " instances=" << rep.instances
              << " failures=" << rep.failures.size() << " seconds=" << rep.seconds << "\n";
    for (auto& f : rep.failures) std::cout << "FAIL " << f.id << ": " << f.what << "\n";
    std::cout << (rep.passed() ? "OK" : "FAILED") << " " << rep.name << "\n";
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse universal graphs for trees and bounded treewidth"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for the verification suites");

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build U(n,d) or U(n,3,w) and write it");
    i64 c_n = 0;
    int c_d = 3, c_w = 0;
    std::string c_out, c_labels;
    c_cmd->add_option("--n", c_n, "number of vertices")->required();
    c_cmd->add_option("--d", c_d, "arity (2..9)");
    c_cmd->add_option("--treewidth", c_w, "blow-up width w (d must be 3)");
    c_cmd->add_option("--out", c_out, "output file (stdout if omitted)");
    c_cmd->add_option("--labels", c_labels, "'address' adds c-lines naming each vertex");

    // embed
    auto* e_cmd = app.add_subcommand("embed", "embed a forest or tree into U(n,d)");
    std::string e_host, e_tree, e_out;
    e_cmd->add_option("--host", e_host, "host as n,d (e.g. 14,3)")->required();
    e_cmd->add_option("--tree", e_tree, "guest edge-list file")->required();
    e_cmd->add_option("--out", e_out, "mapping output file (stdout if omitted)");

    // tw-embed
    auto* t_cmd = app.add_subcommand("tw-embed", "embed a bounded-treewidth graph into U(n,3,w)");
    i64 t_n = 0;
    int t_w = 1;
    std::string t_graph, t_td, t_out;
    t_cmd->add_option("--n", t_n, "host size")->required();
    t_cmd->add_option("--w", t_w, "treewidth bound")->required();
    t_cmd->add_option("--graph", t_graph, "guest graph file")->required();
    t_cmd->add_option("--td", t_td, "guest tree decomposition file")->required();
    t_cmd->add_option("--out", t_out, "mapping output file (stdout if omitted)");

    // split
    auto* s_cmd = app.add_subcommand("split", "run a separator procedure on a forest or graph");
    std::string s_mode, s_in, s_td;
    i64 s_m = 0, s_M = 0, s_N = 0, s_X = 0;
    int s_w = 1;
    s_cmd->add_option("--mode", s_mode, "forest3 | forest-cor1 | forest-cor2 | tw")->required();
    s_cmd->add_option("--in", s_in, "input graph file")->required();
    s_cmd->add_option("--m", s_m, "lower bound (forest3/tw)");
    s_cmd->add_option("--M", s_M, "upper bound (forest3/tw)");
    s_cmd->add_option("--N", s_N, "block size N (cor1/cor2)");
    s_cmd->add_option("--X", s_X, "partial block size X (cor1/cor2)");
    s_cmd->add_option("--w", s_w, "width (tw mode)");
    s_cmd->add_option("--td", s_td, "decomposition file (tw mode)");

    // verify / verify-tw
    auto* v_cmd = app.add_subcommand("verify", "exhaustive tree universality up to n-max");
    int v_nmax = 10, v_d = 3;
    v_cmd->add_option("--n-max", v_nmax, "largest guest size");
    v_cmd->add_option("--d", v_d, "arity (2 or 3)");

    auto* vt_cmd = app.add_subcommand("verify-tw", "random partial k-tree embeddings");
    i64 vt_n = 40, vt_instances = 100;
    int vt_w = 1;
    std::uint64_t vt_seed = default_seed();
    vt_cmd->add_option("--n", vt_n, "largest guest size");
    vt_cmd->add_option("--w", vt_w, "treewidth");
    vt_cmd->add_option("--instances", vt_instances, "instance count");
    vt_cmd->add_option("--seed", vt_seed, "random seed");

    // table
    auto* tb_cmd = app.add_subcommand("table", "edge-count tables");
    std::string tb_mode = "tree", tb_ns;
    int tb_d = 3;
    std::string tb_ws = "1";
    tb_cmd->add_option("--mode", tb_mode, "tree | tw");
    tb_cmd->add_option("--n", tb_ns, "comma-separated sizes")->required();
    tb_cmd->add_option("--d", tb_d, "arity (tree mode)");
    tb_cmd->add_option("--w", tb_ws, "comma-separated widths (tw mode)");

    // tw-bounds
    auto* b_cmd = app.add_subcommand("tw-bounds", "lower bound vs exact count for U(n,3,w)");
    i64 b_n = 0;
    int b_w = 1;
    b_cmd->add_option("--n", b_n, "size")->required();
    b_cmd->add_option("--w", b_w, "width")->required();

    // selftest
    auto* st_cmd = app.add_subcommand("selftest", "run the built-in suites");
    std::string st_profile = "quick";
    std::uint64_t st_seed = default_seed();
    st_cmd->add_option("--profile", st_profile, "quick | full");
    st_cmd->add_option("--seed", st_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_cmd) {
            Host host = c_w > 0 ? Host::universal_tw(c_n, c_w) : Host::universal(c_n, c_d);
            std::ofstream file;
            std::ostream& out = open_or_stdout(file, c_out);
            write_host_pace(out, host, c_labels == "address");
            return 0;
        }
        if (*e_cmd) {
            auto comma = e_host.find(',');
            if (comma == std::string::npos) throw std::runtime_error("--host must be n,d");
            i64 n = std::stoll(e_host.substr(0, comma));
            int d = std::stoi(e_host.substr(comma + 1));
            Host host = Host::universal(n, d);
            Graph guest = load_graph(e_tree);
            Embedding emb = guest.n == static_cast<int>(n) ? embed_tree_full(host, guest)
                                                           : embed_forest(host, guest);
            auto v = validate_embedding(host, guest, emb);
            if (!v.ok) throw std::runtime_error("embedding failed validation: " + v.message);
            std::ofstream file;
            write_mapping(open_or_stdout(file, e_out), host, emb);
            return 0;
        }
        if (*t_cmd) {
            Host host = Host::universal_tw(t_n, t_w);
            Graph guest = load_graph(t_graph);
            TreeDecomposition td = load_td(t_td);
            Embedding emb;
            if (guest.n == static_cast<int>(host.size()))
                emb = embed_graph_full_tw(host, guest, td);
            else
                emb = embed_graph_tw(host, guest, td);
            auto v = validate_embedding(host, guest, emb);
            if (!v.ok) throw std::runtime_error("embedding failed validation: " + v.message);
            std::ofstream file;
            write_mapping(open_or_stdout(file, t_out), host, emb);
            return 0;
        }
        if (*s_cmd) {
            Graph g = load_graph(s_in);
            std::vector<int> sub(g.n);
            for (int i = 0; i < g.n; ++i) sub[i] = i;
            auto show = [](const char* tag, const std::vector<int>& part) {
                std::cout << tag << " (" << part.size() << "):";
                for (int v : part) std::cout << " " << v + 1;
                std::cout << "\n";
            };
            if (s_mode == "forest3") {
                ThreeSplit ts = split_three(g, sub, s_m, s_M);
                std::cout << "s " << ts.s + 1 << "\n";
                show("f1", ts.f1);
                show("f2", ts.f2);
                show("f3", ts.f3);
            } else if (s_mode == "forest-cor1") {
                ThreeSplit ts = split_one_sep(g, sub, DeltaContext{s_N, s_X});
                std::cout << "s " << ts.s + 1 << "\n";
                show("f1", ts.f1);
                show("f2", ts.f2);
                show("f3", ts.f3);
            } else if (s_mode == "forest-cor2") {
                TwoSepSplit ts = split_two_sep(g, sub, DeltaContext{s_N, s_X});
                std::cout << "s1 " << ts.s1 + 1 << "\ns2 " << ts.s2 + 1 << "\n";
                show("f1", ts.f1);
                show("f2", ts.f2);
                show("f3", ts.f3);
                show("f4", ts.f4);
                show("f5", ts.f5);
                show("f6", ts.f6);
            } else if (s_mode == "tw") {
                if (s_td.empty()) throw std::runtime_error("tw mode needs --td");
                TreeDecomposition td = load_td(s_td);
                TreeDecomposition norm = normalize_decomposition(g, sub, td, s_w);
                TwSplit ts = split_three_tw(g, sub, norm, s_m, s_M, s_w);
                show("S", ts.separator);
                show("g1", ts.g1);
                show("g2", ts.g2);
                show("g3", ts.g3);
            } else {
                throw std::runtime_error("unknown split mode " + s_mode);
            }
            return 0;
        }
        if (*v_cmd) {
            auto rep = check_universality_range(v_d, v_nmax, threads);
            int code = report_exit(rep);
            if (code == 0 && v_nmax >= 2) {
                auto oracle = check_brute_oracle_range(v_d, std::min(v_nmax, 7));
                code = report_exit(oracle);
            }
            return code;
        }
        if (*vt_cmd) {
            auto rep = check_tw_embedding_suite(vt_w, vt_instances, static_cast<int>(vt_n), vt_seed);
            return report_exit(rep);
        }
        if (*tb_cmd) {
            auto parse_list = [](const std::string& s) {
                std::vector<i64> out;
                std::stringstream ss(s);
                std::string item;
                while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
                return out;
            };
            if (tb_mode == "tree") {
                std::cout << "n\tedges\tedges/(n ln n)\n";
                for (auto& r : edge_table_tree(parse_list(tb_ns), tb_d))
                    std::cout << r.n << "\t" << r.edges << "\t" << r.ratio << "\n";
            } else if (tb_mode == "tw") {
                std::vector<int> ws;
                for (i64 w : parse_list(tb_ws)) ws.push_back(static_cast<int>(w));
                std::cout << "n\tw\tedges\tratio\tlower\n";
                for (auto& r : edge_table_tw(parse_list(tb_ns), ws))
                    std::cout << r.n << "\t" << r.w << "\t" << r.edges << "\t" << r.ratio << "\t"
                              << r.lower << "\n";
            } else {
                throw std::runtime_error("unknown table mode " + tb_mode);
            }
            return 0;
        }
        if (*b_cmd) {
            TwEdgeReport r = count_edges_tw(b_n, b_w);
            std::cout << "n=" << b_n << " w=" << b_w << " exact=" << r.exact_edges
                      << " lower=" << lower_bound_edges(b_n, b_w) << " lead=" << r.bound << "\n";
            return 0;
        }
        if (*st_cmd) {
            if (st_profile != "quick" && st_profile != "full")
                throw std::runtime_error("profile must be quick or full");
            auto rep = run_selftest(st_profile == "full", st_seed, threads);
            return report_exit(rep);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
