#include "selfsim/neighbor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace selfsim {
namespace {

bool meets_hull(const AffineMap& h, const Interval& hull) {
    Rational a = h(hull.lo);
    Rational b = h(hull.hi);
    Rational lo = min(a, b);
    Rational hi = max(a, b);
    return max(lo, hull.lo) <= min(hi, hull.hi);
}

std::string map_label(const AffineMap& m) {
    std::ostringstream os;
    os << to_string(m.scale) << " x";
    if (m.offset > 0) {
        os << " + " << to_string(m.offset);
    } else if (m.offset < 0) {
        os << " - " << to_string(Rational(-m.offset));
    }
    return os.str();
}

}  // namespace

NeighborGraph neighbor_graph(const IFS& ifs, int max_vertices) {
    if (max_vertices < 1) {
        throw std::invalid_argument("vertex budget must be positive");
    }
    NeighborGraph g;
    const Interval& hull = ifs.hull();
    const int n = ifs.size();
    std::map<std::pair<Rational, Rational>, int> index;
    std::set<std::tuple<int, int, int, int>> edge_seen;
    std::vector<int> queue;

    auto add_vertex = [&](const AffineMap& h) -> int {
        auto key = std::make_pair(h.scale, h.offset);
        auto it = index.find(key);
        if (it != index.end()) {
            return it->second;
        }
        if (static_cast<int>(g.vertices.size()) >= max_vertices) {
            g.incomplete = true;
            return -1;
        }
        int id = static_cast<int>(g.vertices.size());
        g.vertices.push_back(h);
        index.emplace(key, id);
        queue.push_back(id);
        return id;
    };

    auto add_edge = [&](int from, int to, int i, int j) {
        if (edge_seen.insert({from, to, i, j}).second) {
            g.edges.push_back(NeighborEdge{from, to, i, j});
        }
    };

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            AffineMap h = ifs.map(i).map().inverse().compose(ifs.map(j).map());
            if (h == AffineMap::identity()) {
                g.identity_found = true;
                continue;
            }
            if (!meets_hull(h, hull)) continue;
            int id = add_vertex(h);
            if (id >= 0) add_edge(-1, id, i, j);
        }
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
        int from = queue[head];
        AffineMap h = g.vertices[from];
        for (int i = 1; i <= n; ++i) {
            AffineMap inv = ifs.map(i).map().inverse();
            for (int j = 1; j <= n; ++j) {
                AffineMap child = inv.compose(h.compose(ifs.map(j).map()));
                if (child == AffineMap::identity()) {
                    g.identity_found = true;
                    continue;
                }
                if (!meets_hull(child, hull)) continue;
                int id = add_vertex(child);
                if (id >= 0) add_edge(from, id, i, j);
            }
        }
    }
    return g;
}

NeighborGraph trim(const NeighborGraph& graph) {
    std::vector<bool> alive(graph.vertices.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> outdeg(graph.vertices.size(), 0);
        for (const NeighborEdge& e : graph.edges) {
            if (e.from >= 0 && alive[e.from] && alive[e.to]) {
                ++outdeg[e.from];
            }
        }
        for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
            if (alive[v] && outdeg[v] == 0) {
                alive[v] = false;
                changed = true;
            }
        }
    }
    NeighborGraph out;
    out.incomplete = graph.incomplete;
    out.identity_found = graph.identity_found;
    std::vector<int> remap(graph.vertices.size(), -1);
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        if (alive[v]) {
            remap[v] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(graph.vertices[v]);
        }
    }
    for (const NeighborEdge& e : graph.edges) {
        if (!alive[e.to]) continue;
        if (e.from >= 0 && !alive[e.from]) continue;
        out.edges.push_back(NeighborEdge{e.from >= 0 ? remap[e.from] : -1,
                                         remap[e.to], e.i, e.j});
    }
    return out;
}

namespace {

// Iterative Tarjan; returns the component id of each vertex.
std::vector<int> strongly_connected(int n, const std::vector<NeighborEdge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const NeighborEdge& e : edges) {
        if (e.from >= 0) adj[e.from].push_back(e.to);
    }
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0, comps = 0;

    struct Frame {
        int v;
        std::size_t next = 0;
    };
    for (int start = 0; start < n; ++start) {
        if (num[start] != -1) continue;
        std::vector<Frame> call;
        call.push_back({start});
        num[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < adj[f.v].size()) {
                int w = adj[f.v][f.next++];
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                if (low[f.v] == num[f.v]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comps;
                        if (w == f.v) break;
                    }
                    ++comps;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) {
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
                }
            }
        }
    }
    return comp;
}

}  // namespace

BoundaryClassification classify(const NeighborGraph& graph) {
    if (graph.incomplete) {
        throw std::invalid_argument(
            "neighbor graph truncated by the vertex budget; classification "
            "would be unsound");
    }
    NeighborGraph t = trim(graph);
    BoundaryClassification out;
    out.trimmed_vertices = t.vertices.size();
    out.trimmed_edges = t.edges.size();
    if (t.vertices.empty()) {
        out.verdict = BoundaryVerdict::Empty;
        out.reason = "no neighbor map admits arbitrarily deep continuations";
        return out;
    }
    const int n = static_cast<int>(t.vertices.size());
    std::vector<int> comp = strongly_connected(n, t.edges);

    std::map<int, int> size, internal;
    for (int v = 0; v < n; ++v) ++size[comp[v]];
    for (const NeighborEdge& e : t.edges) {
        if (e.from >= 0 && comp[e.from] == comp[e.to]) ++internal[comp[e.from]];
    }
    for (const auto& [c, edges] : internal) {
        if (edges > size[c]) {
            out.verdict = BoundaryVerdict::Uncountable;
            out.reason = "a strongly connected component carries two distinct "
                         "cycles, branching continuations at every return";
            return out;
        }
    }
    for (const NeighborEdge& e : t.edges) {
        if (e.from < 0 || comp[e.from] == comp[e.to]) continue;
        if (internal.count(comp[e.from]) && internal[comp[e.from]] > 0) {
            out.verdict = BoundaryVerdict::CountablyInfinite;
            out.reason = "a cycle has an exit edge: continuations may loop "
                         "any number of times before leaving";
            return out;
        }
    }
    out.verdict = BoundaryVerdict::Finite;
    out.reason = "all continuations funnel into exit-free simple cycles";
    return out;
}

std::string to_dot(const NeighborGraph& graph) {
    const int n = static_cast<int>(graph.vertices.size());

    // Vertex roles: transient vertices die under trimming; the rest sit on
    // or before cycles. Cycle vertices are terminal (exit-free simple
    // cycle), looping (simple cycle with exits), or branching (double
    // cycle, the uncountable signature).
    std::vector<bool> alive(graph.vertices.size(), true);
    {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> outdeg(graph.vertices.size(), 0);
            for (const NeighborEdge& e : graph.edges) {
                if (e.from >= 0 && alive[e.from] && alive[e.to]) ++outdeg[e.from];
            }
            for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
                if (alive[v] && outdeg[v] == 0) {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
    }
    std::vector<NeighborEdge> alive_edges;
    for (const NeighborEdge& e : graph.edges) {
        if (e.from >= 0 && alive[e.from] && alive[e.to]) alive_edges.push_back(e);
    }
    std::vector<int> comp = strongly_connected(n, alive_edges);
    std::map<int, int> size, internal;
    std::set<int> has_exit;
    for (int v = 0; v < n; ++v) {
        if (alive[v]) ++size[comp[v]];
    }
    for (const NeighborEdge& e : alive_edges) {
        if (comp[e.from] == comp[e.to]) {
            ++internal[comp[e.from]];
        } else {
            has_exit.insert(comp[e.from]);
        }
    }
    auto style = [&](int v) -> std::string {
        if (!alive[v]) return ", style=dashed, color=gray";
        int c = comp[v];
        auto it = internal.find(c);
        if (it == internal.end() || it->second == 0) {
            return "";  // intermediate: before any cycle
        }
        if (it->second > size[c]) {
            return ", style=filled, fillcolor=salmon, peripheries=2";  // branching
        }
        if (has_exit.count(c)) {
            return ", style=filled, fillcolor=lightblue";  // cycle with exits
        }
        return ", style=filled, fillcolor=lightgray, peripheries=2";  // terminal
    };

    std::ostringstream os;
    os << "digraph neighbor {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=box, fontname=\"Helvetica\"];\n";
    os << "  root [shape=point];\n";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"" << map_label(graph.vertices[v]) << "\""
           << style(static_cast<int>(v)) << "];\n";
    }
    for (const NeighborEdge& e : graph.edges) {
        if (e.from < 0) {
            os << "  root -> v" << e.to;
        } else {
            os << "  v" << e.from << " -> v" << e.to;
        }
        os << " [label=\"" << e.i << "," << e.j << "\"];\n";
    }
    if (graph.incomplete) {
        os << "  truncated [shape=plaintext, label=\"(truncated)\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace selfsim
