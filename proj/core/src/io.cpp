#include "univ/io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace univ {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == 'c') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_pace_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno, "missing header");
    std::istringstream hs(line);
    std::string p, tw;
    long long n = -1, m = -1;
    hs >> p >> tw >> n >> m;
    if (p != "p" || tw != "tw" || n < 0 || m < 0 || hs.fail())
        throw ParseError(lineno, "expected 'p tw <n> <m>'");
    Graph g(static_cast<int>(n));
    long long seen = 0;
    while (next_content_line(in, line, lineno)) {
        std::istringstream es(line);
        long long u = 0, v = 0;
        es >> u >> v;
        if (es.fail() || u < 1 || v < 1 || u > n || v > n || u == v)
            throw ParseError(lineno, "bad edge line");
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        ++seen;
    }
    if (seen != m) throw ParseError(lineno, "edge count does not match header");
    return g;
}

void write_pace_graph(std::ostream& out, const Graph& g) {
    out << "p tw " << g.n << " " << g.edge_count() << "\n";
    for (auto& [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
}

TreeDecomposition read_pace_td(std::istream& in, int* graph_n) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno, "missing header");
    std::istringstream hs(line);
    std::string s, td;
    long long bags = -1, wp1 = -1, n = -1;
    hs >> s >> td >> bags >> wp1 >> n;
    if (s != "s" || td != "td" || bags < 0 || wp1 < 0 || n < 0 || hs.fail())
        throw ParseError(lineno, "expected 's td <bags> <width+1> <n>'");
    if (graph_n) *graph_n = static_cast<int>(n);
    TreeDecomposition out;
    out.bags.resize(bags);
    std::vector<char> defined(bags, 0);
    while (next_content_line(in, line, lineno)) {
        std::istringstream ls(line);
        if (line[line.find_first_not_of(" \t")] == 'b') {
            std::string b;
            long long id = 0;
            ls >> b >> id;
            if (ls.fail() || id < 1 || id > bags) throw ParseError(lineno, "bad bag line");
            if (defined[id - 1]) throw ParseError(lineno, "duplicate bag id");
            defined[id - 1] = 1;
            long long v;
            while (ls >> v) {
                if (v < 1 || v > n) throw ParseError(lineno, "bag vertex out of range");
                out.bags[id - 1].push_back(static_cast<int>(v - 1));
            }
            std::sort(out.bags[id - 1].begin(), out.bags[id - 1].end());
        } else {
            long long x = 0, y = 0;
            ls >> x >> y;
            if (ls.fail() || x < 1 || y < 1 || x > bags || y > bags)
                throw ParseError(lineno, "bad tree edge line");
            out.tree_edges.emplace_back(static_cast<int>(x - 1), static_cast<int>(y - 1));
        }
    }
    if (out.width() + 1 > wp1) throw ParseError(lineno, "bag larger than declared width");
    return out;
}

void write_pace_td(std::ostream& out, const TreeDecomposition& td, int graph_n) {
    out << "s td " << td.bag_count() << " " << td.width() + 1 << " " << graph_n << "\n";
    for (int x = 0; x < td.bag_count(); ++x) {
        out << "b " << x + 1;
        for (int v : td.bags[x]) out << " " << v + 1;
        out << "\n";
    }
    for (auto& [x, y] : td.tree_edges) out << x + 1 << " " << y + 1 << "\n";
}

void write_host_pace(std::ostream& out, const Host& host, bool address_labels) {
    std::set<std::pair<i64, i64>> edges;
    for (i64 p = host.live_lo(); p <= host.blown_total(); ++p)
        for (auto& iv : host.rule_target_intervals(p)) {
            i64 lo = std::max(iv.lo, host.live_lo());
            for (i64 q = lo; q <= iv.hi; ++q)
                if (q != p) edges.insert({std::min(p, q), std::max(p, q)});
        }
    out << "p tw " << host.size() << " " << edges.size() << "\n";
    if (address_labels)
        for (i64 p = host.live_lo(); p <= host.blown_total(); ++p)
            out << "c " << host.external_id(p) << " " << host.vertex_name(p) << "\n";
    for (auto& [p, q] : edges) out << host.external_id(p) << " " << host.external_id(q) << "\n";
}

}  // namespace univ
