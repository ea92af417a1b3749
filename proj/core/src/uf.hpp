// Minimal union-find used by the splicing and state-graph code.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace knotcab::detail {

struct UnionFind {
    std::vector<std::uint32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]]; // path halving
            x = parent[x];
        }
        return x;
    }

    // Returns true when the two were in different sets.
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }

    std::size_t component_count() {
        std::size_t n = 0;
        for (std::uint32_t i = 0; i < parent.size(); ++i)
            if (find(i) == i) ++n;
        return n;
    }
};

} // namespace knotcab::detail
