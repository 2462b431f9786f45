#pragma once

#include <numeric>
#include <vector>

namespace qpm::detail {

// Union-find over {1..n}.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) { parent_[find(a)] = find(b); }

    bool connected(int a, int b) { return find(a) == find(b); }

    bool all_connected() {
        const int n = static_cast<int>(parent_.size()) - 1;
        for (int x = 2; x <= n; ++x) {
            if (!connected(1, x)) return false;
        }
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace qpm::detail
