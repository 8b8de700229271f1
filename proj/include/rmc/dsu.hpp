#ifndef RMC_DSU_HPP
#define RMC_DSU_HPP

#include <numeric>
#include <vector>

namespace rmc {

struct DisjointSets {
    std::vector<int> parent;
    std::vector<int> size;
    int components = 0;

    explicit DisjointSets(int n) : parent(n), size(n, 1), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        --components;
        return true;
    }

    bool same(int a, int b) { return find(a) == find(b); }
};

}  // namespace rmc

#endif
