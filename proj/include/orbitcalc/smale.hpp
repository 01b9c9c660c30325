#pragma once

// Finite Smale-order computation on a user-declared basic-piece digraph.
//
// Nodes are basic pieces (fixed-point classes); a directed edge x -> y means
// x lies below y in the Smale relation (the unstable set of x meets the
// stable set of a symmetry-translate of y). Isolated prong singularities are
// singleton classes by definition and may not carry edges. The library
// closes the relation reflexively and transitively over the remaining nodes,
// condenses mutually related nodes into classes, and reads transitivity off
// the class count.

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include <orbitcalc/errors.hpp>

namespace orbitcalc {

struct SmaleNode {
    std::string id;
    bool singular = false;
    bool isolated_prong = false;
};

struct SmaleGraph {
    std::vector<SmaleNode> nodes;
    std::vector<std::array<std::string, 2>> edges; // x -> y means x <= y
};

struct SmaleClass {
    std::vector<std::string> members; // sorted
    bool isolated = false;            // a prong singleton, outside the order
    bool singular = false;            // any member flagged singular
};

struct SmaleClassification {
    std::vector<SmaleClass> classes;          // topological order, minima first
    std::vector<std::array<size_t, 2>> order; // (i, j): classes[i] < classes[j]
    bool transitive = false;
};

namespace smale_detail {

struct Indexed {
    std::map<std::string, size_t> index;
    std::vector<std::vector<bool>> reach; // closure over non-isolated nodes
};

inline Indexed close(const SmaleGraph& g) {
    Indexed out;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const SmaleNode& node = g.nodes[i];
        if (node.id.empty())
            throw validation_error("MalformedSmaleGraph",
                                   "node #" + std::to_string(i) + " has an empty id");
        if (!out.index.emplace(node.id, i).second)
            throw validation_error("MalformedSmaleGraph", "duplicate node id '" + node.id + "'");
    }
    const size_t n = g.nodes.size();
    out.reach.assign(n, std::vector<bool>(n, false));
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const std::string where = "edge #" + std::to_string(e);
        for (const std::string& endpoint : g.edges[e])
            if (!out.index.count(endpoint))
                throw validation_error("MalformedSmaleGraph",
                                       where + " references unknown node '" + endpoint + "'");
        const size_t from = out.index.at(g.edges[e][0]);
        const size_t to = out.index.at(g.edges[e][1]);
        for (size_t endpoint : {from, to})
            if (g.nodes[endpoint].isolated_prong)
                throw validation_error("MalformedSmaleGraph",
                                       where + " touches isolated prong node '" +
                                           g.nodes[endpoint].id +
                                           "'; prong singletons carry no relations");
        out.reach[from][to] = true;
    }
    for (size_t i = 0; i < n; ++i)
        if (!g.nodes[i].isolated_prong) out.reach[i][i] = true;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (out.reach[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (out.reach[k][j]) out.reach[i][j] = true;
    return out;
}

} // namespace smale_detail

inline void validate_smale_graph(const SmaleGraph& g) { smale_detail::close(g); }

// Reflexive-transitive closure of the relation, restricted to nodes that are
// not isolated prong singletons. Edges come out sorted by (from, to).
inline SmaleGraph smale_closure(const SmaleGraph& g) {
    const smale_detail::Indexed idx = smale_detail::close(g);
    SmaleGraph out;
    out.nodes = g.nodes;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        for (size_t j = 0; j < g.nodes.size(); ++j)
            if (idx.reach[i][j]) out.edges.push_back({g.nodes[i].id, g.nodes[j].id});
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// Classes are the strongly connected components of the closure plus one
// singleton per isolated prong; the quotient relation is a partial order.
// Classes are listed in topological order (order-minima first), breaking
// ties by smallest member id; members are sorted within each class.
inline SmaleClassification smale_classes(const SmaleGraph& g) {
    const smale_detail::Indexed idx = smale_detail::close(g);
    const size_t n = g.nodes.size();

    std::vector<size_t> component(n, static_cast<size_t>(-1));
    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) {
        if (component[i] != static_cast<size_t>(-1)) continue;
        component[i] = groups.size();
        groups.push_back({i});
        if (g.nodes[i].isolated_prong) continue;
        for (size_t j = i + 1; j < n; ++j)
            if (component[j] == static_cast<size_t>(-1) && idx.reach[i][j] && idx.reach[j][i]) {
                component[j] = component[i];
                groups.back().push_back(j);
            }
    }

    // quotient relation on groups (strict part)
    const size_t m = groups.size();
    std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (idx.reach[i][j] && component[i] != component[j])
                below[component[i]][component[j]] = true;

    // canonical topological order: repeatedly emit the minimal-id group with
    // no remaining predecessors (the quotient is acyclic by construction)
    std::vector<std::string> min_id(m);
    for (size_t c = 0; c < m; ++c) {
        min_id[c] = g.nodes[groups[c][0]].id;
        for (size_t v : groups[c]) min_id[c] = std::min(min_id[c], g.nodes[v].id);
    }
    std::vector<size_t> indegree(m, 0);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            if (below[a][b]) ++indegree[b];
    using Entry = std::pair<std::string, size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (size_t c = 0; c < m; ++c)
        if (indegree[c] == 0) ready.emplace(min_id[c], c);
    std::vector<size_t> position(m, 0);
    std::vector<size_t> emitted;
    while (!ready.empty()) {
        const size_t c = ready.top().second;
        ready.pop();
        position[c] = emitted.size();
        emitted.push_back(c);
        for (size_t b = 0; b < m; ++b)
            if (below[c][b] && --indegree[b] == 0) ready.emplace(min_id[b], b);
    }

    SmaleClassification out;
    out.classes.resize(m);
    for (size_t c = 0; c < m; ++c) {
        SmaleClass& cls = out.classes[position[c]];
        for (size_t v : groups[c]) {
            cls.members.push_back(g.nodes[v].id);
            cls.isolated = cls.isolated || g.nodes[v].isolated_prong;
            cls.singular = cls.singular || g.nodes[v].singular;
        }
        std::sort(cls.members.begin(), cls.members.end());
    }
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            if (below[a][b]) out.order.push_back({position[a], position[b]});
    std::sort(out.order.begin(), out.order.end());
    out.transitive = out.classes.size() == 1 && !out.classes.front().isolated;
    return out;
}

inline bool is_transitive(const SmaleGraph& g) { return smale_classes(g).transitive; }

} // namespace orbitcalc
