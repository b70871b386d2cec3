/******************************************************************************
 * graph_io.cpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#include "cutcactus/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cutcactus {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("parse error in line " + std::to_string(line) +
                             ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return in;
}

}  // namespace

StaticGraph parse_metis(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    auto next_content_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line[0] == '%') {
                continue;
            }
            return true;
        }
        if (required) {
            parse_fail(lineno, "unexpected end of file");
        }
        return false;
    };

    next_content_line(true);
    std::istringstream header(line);
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::string fmt = "0";
    if (!(header >> n >> m)) {
        parse_fail(lineno, "malformed header, expected 'n m [fmt]'");
    }
    header >> fmt;
    bool has_edge_weights;
    if (fmt == "0" || fmt == "00" || fmt == "000") {
        has_edge_weights = false;
    } else if (fmt == "1" || fmt == "01" || fmt == "001" || fmt == "011" ||
               fmt == "11") {
        has_edge_weights = fmt.back() == '1';
        if (fmt != "1" && fmt != "01" && fmt != "001") {
            parse_fail(lineno, "vertex weights are not supported");
        }
    } else {
        parse_fail(lineno, "unsupported fmt field '" + fmt + "'");
    }

    struct PairInfo {
        EdgeWeight weight;
        std::size_t first_line;
        bool forward = false;   // listed from the lower endpoint
        bool backward = false;  // listed from the higher endpoint
    };
    std::vector<WeightedEdge> edges;
    edges.reserve(m);
    std::map<std::pair<NodeId, NodeId>, PairInfo> seen;
    for (std::uint64_t u = 0; u < n; ++u) {
        if (!next_content_line(false)) {
            parse_fail(lineno, "missing adjacency line for vertex " +
                                   std::to_string(u + 1));
        }
        std::istringstream ls(line);
        std::uint64_t v1;
        while (ls >> v1) {
            if (v1 < 1 || v1 > n) {
                parse_fail(lineno, "neighbor id out of range");
            }
            EdgeWeight w = 1;
            if (has_edge_weights) {
                if (!(ls >> w)) {
                    parse_fail(lineno, "missing edge weight");
                }
                if (w == 0) {
                    parse_fail(lineno, "edge weight must be positive");
                }
            }
            NodeId uu = static_cast<NodeId>(u);
            NodeId vv = static_cast<NodeId>(v1 - 1);
            if (uu == vv) {
                parse_fail(lineno, "self loop");
            }
            auto key = std::minmax(uu, vv);
            bool forward = uu == key.first;
            auto it = seen.find(key);
            if (it == seen.end()) {
                PairInfo info{w, lineno};
                (forward ? info.forward : info.backward) = true;
                seen.emplace(key, info);
                edges.push_back({key.first, key.second, w});
            } else {
                if (it->second.weight != w) {
                    parse_fail(lineno,
                               "asymmetric edge weight for (" +
                                   std::to_string(key.first + 1) + "," +
                                   std::to_string(key.second + 1) + ")");
                }
                bool& dir = forward ? it->second.forward
                                    : it->second.backward;
                if (dir) {
                    parse_fail(lineno, "duplicate neighbor entry");
                }
                dir = true;
            }
        }
    }
    for (const auto& [key, info] : seen) {
        if (!info.forward || !info.backward) {
            parse_fail(info.first_line,
                       "edge (" + std::to_string(key.first + 1) + "," +
                           std::to_string(key.second + 1) +
                           ") listed from one endpoint only");
        }
    }
    if (edges.size() != m) {
        throw std::runtime_error(
            "edge count mismatch: header says " + std::to_string(m) +
            ", found " + std::to_string(edges.size()));
    }
    return StaticGraph::from_edges(edges, static_cast<NodeId>(n));
}

StaticGraph parse_metis_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_metis(in);
}

StaticGraph parse_dimacs(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    bool have_problem = false;
    std::vector<WeightedEdge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') {
            continue;
        }
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string name;
            if (!(ls >> name >> n >> m)) {
                parse_fail(lineno, "malformed problem line");
            }
            have_problem = true;
        } else if (tag == 'e' || tag == 'a') {
            if (!have_problem) {
                parse_fail(lineno, "edge before problem line");
            }
            std::uint64_t u, v;
            EdgeWeight w = 1;
            if (!(ls >> u >> v)) {
                parse_fail(lineno, "malformed edge line");
            }
            ls >> w;
            if (u < 1 || u > n || v < 1 || v > n) {
                parse_fail(lineno, "endpoint out of range");
            }
            if (w == 0) {
                parse_fail(lineno, "edge weight must be positive");
            }
            edges.push_back({static_cast<NodeId>(u - 1),
                             static_cast<NodeId>(v - 1), w});
        } else {
            parse_fail(lineno, std::string("unknown line tag '") + tag + "'");
        }
    }
    if (!have_problem) {
        throw std::runtime_error("missing problem line");
    }
    return StaticGraph::from_edges(edges, static_cast<NodeId>(n));
}

StaticGraph parse_dimacs_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_dimacs(in);
}

StaticGraph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<WeightedEdge> edges;
    NodeId max_id = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line[0] == '%') {
            continue;
        }
        std::istringstream ls(line);
        std::uint64_t a, b;
        if (!(ls >> a >> b)) {
            parse_fail(lineno, "expected two endpoints");
        }
        EdgeWeight w = 1;
        ls >> w;
        if (w == 0) {
            parse_fail(lineno, "edge weight must be positive");
        }
        edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b), w});
        max_id = std::max({max_id, static_cast<NodeId>(a),
                           static_cast<NodeId>(b)});
    }
    return StaticGraph::from_edges(edges, edges.empty() ? 0 : max_id + 1);
}

StaticGraph parse_edge_list_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_edge_list(in);
}

StaticGraph parse_graph_file(const std::string& path,
                             const std::string& format) {
    if (format == "metis") {
        return parse_metis_file(path);
    }
    if (format == "dimacs") {
        return parse_dimacs_file(path);
    }
    if (format == "edgelist") {
        return parse_edge_list_file(path);
    }
    throw std::invalid_argument("unknown graph format: " + format);
}

void write_metis(const StaticGraph& g, std::ostream& out) {
    bool weighted = false;
    for (std::size_t a = 0; a < g.num_arcs() && !weighted; ++a) {
        weighted = g.arc_weight(a) != 1;
    }
    out << g.num_vertices() << ' ' << g.num_edges();
    if (weighted) {
        out << " 1";
    }
    out << '\n';
    for (NodeId u = 0; u < g.num_vertices(); ++u) {
        bool space = false;
        for (std::size_t a = g.first_arc(u); a < g.arcs_end(u); ++a) {
            if (space) {
                out << ' ';
            }
            space = true;
            out << (g.arc_target(a) + 1);
            if (weighted) {
                out << ' ' << g.arc_weight(a);
            }
        }
        out << '\n';
    }
}

void write_metis_file(const StaticGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    write_metis(g, out);
}

void write_cactus(const Cactus& cactus, std::ostream& out) {
    // Expect a compact cactus (dense ids); serialize deterministically.
    std::vector<Cactus::Edge> edges;
    for (std::size_t e = 0; e < cactus.edge_count_raw(); ++e) {
        if (cactus.edge_alive(e)) {
            Cactus::Edge ed = cactus.edge(e);
            if (ed.a > ed.b) {
                std::swap(ed.a, ed.b);
            }
            edges.push_back(ed);
        }
    }
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        return std::tie(x.a, x.b, x.cycle) < std::tie(y.a, y.b, y.cycle);
    });

    out << cactus.num_nodes() << ' ' << edges.size() << ' '
        << cactus.lambda() << ' ' << cactus.count_min_cuts() << '\n';
    for (const auto& ed : edges) {
        out << ed.a << ' ' << ed.b << ' '
            << (ed.is_tree() ? "tree" : "cycle") << ' ';
        if (ed.is_tree()) {
            out << '-';
        } else {
            out << ed.cycle;
        }
        out << '\n';
    }
    for (NodeId x = 0; x < cactus.node_capacity(); ++x) {
        if (!cactus.node_alive(x)) {
            continue;
        }
        std::vector<NodeId> originals = cactus.pi(x);
        std::sort(originals.begin(), originals.end());
        out << x << ':';
        for (NodeId o : originals) {
            out << ' ' << o;
        }
        out << '\n';
    }
}

void write_cactus_file(const Cactus& cactus, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    write_cactus(cactus, out);
}

}  // namespace cutcactus
