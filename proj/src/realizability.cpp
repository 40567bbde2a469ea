#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <map>

#include "lensiso/code.hpp"

namespace lensiso {

// A closed shadow is realizable in the plane iff the 4-valent curve graph
// admits an embedding in which the two strands through each crossing meet
// transversally. Each crossing is expanded into a wheel W4: hub h, rim
// r0..r3, with the four curve arcs attached at the rim in the order
//   r0 = incoming arc of passage 1,  r1 = incoming arc of passage 2,
//   r2 = outgoing arc of passage 1,  r3 = outgoing arc of passage 2.
// The wheel pins the rim's cyclic order up to reflection, so any planar
// embedding of the expanded graph places the four arc ends in a transversal
// order around the crossing, and conversely every transversal embedding
// yields a planar drawing of the expanded graph. Hence: realizable iff the
// expanded graph is planar.
bool realizable(const ClosedCode& c) {
    size_t len = c.tokens.size();
    if (len == 0) return true;

    // first/second occurrence position of each crossing id
    std::map<int, std::pair<int, int>> occ;
    for (int i = 0; i < (int)len; i++) {
        int id = c.tokens[i].crossing;
        auto it = occ.find(id);
        if (it == occ.end()) occ[id] = {i, -1};
        else it->second.second = i;
    }

    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    // 5 vertices per crossing: hub, rim 0..3. Crossings indexed densely.
    std::map<int, int> dense;
    for (const auto& [id, _] : occ) { int d = (int)dense.size(); dense[id] = d; }
    auto hub = [&](int id) { return dense[id] * 5; };
    auto rim = [&](int id, int k) { return dense[id] * 5 + 1 + k; };

    // Arcs get a subdivision vertex each so the graph stays simple even when
    // an arc joins two rim vertices of one wheel (kinks).
    size_t arc_base = 5 * dense.size();
    Graph g(arc_base + len);
    for (const auto& [id, _] : occ) {
        for (int k = 0; k < 4; k++) {
            boost::add_edge(hub(id), rim(id, k), g);
            boost::add_edge(rim(id, k), rim(id, (k + 1) % 4), g);
        }
    }

    // Arc a_i runs from token i to token i+1 (cyclically). At its tail it is
    // the outgoing arc of token i; at its head the incoming arc of token i+1.
    auto port = [&](int token_idx, bool outgoing) {
        int id = c.tokens[token_idx].crossing;
        bool first = occ[id].first == token_idx;
        // rim slots: incoming of passage1 -> 0, incoming of passage2 -> 1,
        //            outgoing of passage1 -> 2, outgoing of passage2 -> 3
        if (!outgoing) return rim(id, first ? 0 : 1);
        return rim(id, first ? 2 : 3);
    };
    for (int i = 0; i < (int)len; i++) {
        int j = (i + 1) % (int)len;
        boost::add_edge(port(i, true), arc_base + i, g);
        boost::add_edge(arc_base + i, port(j, false), g);
    }

    return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace lensiso
