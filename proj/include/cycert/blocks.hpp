#ifndef CYCERT_BLOCKS_HPP
#define CYCERT_BLOCKS_HPP

#include <algorithm>
#include <vector>

#include "cycert/errors.hpp"
#include "cycert/graph.hpp"

namespace cycert {

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<Vertex>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<Vertex> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

// Blocks (maximal 2-connected pieces and bridge edges) plus cutvertices.
// Blocks are listed in ascending order of their smallest contained vertex.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cutvertices;
    std::vector<bool> endblock;  // per block: contains at most one cutvertex
};

namespace detail {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<std::vector<Vertex>> blocks;
    int timer = 0;

    explicit BlockDfs(const Graph& gg)
        : g(gg), disc(gg.order(), -1), low(gg.order(), 0), is_cut(gg.order(), 0) {}

    void pop_block(const std::pair<Vertex, Vertex>& until) {
        std::vector<Vertex> verts;
        for (;;) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    }

    void run(Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (Vertex w : g.neighbors(u)) {
            if (w == parent) {
                parent = -2;  // skip one multiplicity of the tree edge only
                continue;
            }
            if (disc[w] < 0) {
                ++children;
                std::pair<Vertex, Vertex> e{u, w};
                edge_stack.push_back(e);
                run(w, u);
                low[u] = std::min(low[u], low[w]);
                if ((disc[u] == 0 && children > 1) || (disc[u] > 0 && low[w] >= disc[u])) {
                    is_cut[u] = 1;
                }
                if (low[w] >= disc[u]) pop_block(e);
            } else if (disc[w] < disc[u]) {
                std::pair<Vertex, Vertex> e{u, w};
                edge_stack.push_back(e);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

}  // namespace detail

inline BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedInput("block_decomposition: graph is not connected");
    detail::BlockDfs dfs(g);
    if (g.order() > 0) dfs.run(0, -1);

    BlockDecomposition bd;
    if (g.order() == 1 && g.edge_count() == 0) {
        bd.blocks.push_back(VertexSet({0}));
        bd.endblock.push_back(true);
        return bd;
    }
    std::sort(dfs.blocks.begin(), dfs.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<Vertex> cuts;
    for (int u = 0; u < g.order(); ++u)
        if (dfs.is_cut[u]) cuts.push_back(u);
    bd.cutvertices = VertexSet(cuts);
    for (auto& blk : dfs.blocks) {
        int ncuts = 0;
        for (Vertex v : blk)
            if (bd.cutvertices.contains(v)) ++ncuts;
        bd.blocks.push_back(VertexSet(blk));
        bd.endblock.push_back(ncuts <= 1);
    }
    return bd;
}

inline bool is_two_connected(const Graph& g) {
    if (g.order() < 3) return false;
    if (!is_connected(g)) return false;
    auto bd = block_decomposition(g);
    return bd.blocks.size() == 1 && bd.cutvertices.size() == 0;
}

}  // namespace cycert

#endif
