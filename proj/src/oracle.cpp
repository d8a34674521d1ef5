#include "regenum/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace regenum {

namespace {

struct BruteState {
    int n;
    std::vector<int> S;  // sorted
    int max_s;
    bool repeated_blocks;
    // blocks[v] = candidate blocks whose least vertex is v (1-based),
    // lexicographically sorted; each block is a sorted vertex list with
    // multiplicities.
    std::vector<std::vector<std::vector<int>>> blocks;
    std::vector<int> deg;
    long long count = 0;

    bool deg_ok_final(int v) const { return std::binary_search(S.begin(), S.end(), deg[v]); }

    // Try to extend the family with blocks whose least vertex is v, starting
    // from candidate index `from`, then close v and move on.
    void visit(int v, size_t from) {
        if (v > n) {
            ++count;
            return;
        }
        if (deg_ok_final(v)) visit(v + 1, 0);
        if (deg[v] >= max_s) return;  // no further block can fix v
        const auto& cand = blocks[static_cast<size_t>(v)];
        for (size_t i = from; i < cand.size(); ++i) {
            const auto& blk = cand[i];
            for (int w : blk) ++deg[w];
            bool ok = true;
            for (int w : blk)
                if (deg[w] > max_s) {
                    ok = false;
                    break;
                }
            if (ok) visit(v, repeated_blocks ? i : i + 1);
            for (int w : blk) --deg[w];
        }
    }
};

void gen_blocks(int v, int n, int size, bool multiset, int min_next, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int w = min_next; w <= n; ++w) {
        cur.push_back(w);
        gen_blocks(v, n, size, multiset, multiset ? w : w + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

long long count_family_brute(int n, const std::vector<int>& block_sizes,
                             const std::vector<int>& S, bool multiset_blocks,
                             bool repeated_blocks, int iteration_order) {
    if (n < 0) throw std::invalid_argument("count_family_brute: negative n");
    BruteState st;
    st.n = n;
    st.S = S;
    std::sort(st.S.begin(), st.S.end());
    if (st.S.empty() || st.S.front() < 1)
        throw std::invalid_argument("count_family_brute: bad degree set");
    st.max_s = st.S.back();
    st.repeated_blocks = repeated_blocks;
    st.deg.assign(static_cast<size_t>(n) + 2, 0);
    st.blocks.resize(static_cast<size_t>(n) + 1);

    // The relabelling map exercises a second iteration order; counts are
    // label-invariant so both orders must agree.
    auto relabel = [&](int w) { return iteration_order == 0 ? w : n + 1 - w; };

    for (int v = 1; v <= n; ++v) {
        std::vector<std::vector<int>> cand;
        for (int size : block_sizes) {
            if (size < 1) throw std::invalid_argument("count_family_brute: bad block size");
            std::vector<int> cur{v};
            gen_blocks(v, n, size, multiset_blocks, multiset_blocks ? v : v + 1, cur, cand);
        }
        for (auto& blk : cand)
            for (int& w : blk) w = relabel(w);
        std::sort(cand.begin(), cand.end());
        st.blocks[static_cast<size_t>(v)] = std::move(cand);
    }
    if (iteration_order != 0) {
        // Re-bucket by least relabelled vertex so the DFS invariant holds.
        std::vector<std::vector<std::vector<int>>> rebucket(static_cast<size_t>(n) + 1);
        for (auto& bucket : st.blocks)
            for (auto& blk : bucket) {
                int least = *std::min_element(blk.begin(), blk.end());
                std::sort(blk.begin(), blk.end());
                rebucket[static_cast<size_t>(least)].push_back(std::move(blk));
            }
        for (auto& bucket : rebucket) {
            std::sort(bucket.begin(), bucket.end());
            bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        }
        st.blocks = std::move(rebucket);
    }

    st.visit(1, 0);
    return st.count;
}

long long count_graphs_brute(int n, const std::vector<int>& S, GraphKind kind,
                             int iteration_order) {
    int bound = kind.multiedges_allowed ? 6 : 8;
    if (n > bound) throw std::invalid_argument("count_graphs_brute: n above supported bound");
    return count_family_brute(n, {2}, S, kind.loops_allowed, kind.multiedges_allowed,
                              iteration_order);
}

long long count_hypergraphs_brute(int n, int j, int k, GraphKind kind, int iteration_order) {
    if (n > 9) throw std::invalid_argument("count_hypergraphs_brute: n above supported bound");
    return count_family_brute(n, {j}, {k}, kind.loops_allowed, kind.multiedges_allowed,
                              iteration_order);
}

long long count_covers_brute(int n, const std::vector<int>& sizes, int k, int iteration_order) {
    if (n > 7) throw std::invalid_argument("count_covers_brute: n above supported bound");
    return count_family_brute(n, sizes, {k}, false, false, iteration_order);
}

namespace {

struct DigraphState {
    int n;
    std::vector<int> S;
    int max_s;
    // arcs[v]: ordered pairs (a,b) with min(a,b) == v, lex sorted. Loops
    // (a == b) and repeated arcs are allowed: a loop adds 2 to its vertex,
    // matching the set-of-ordered-pairs colouring semantics.
    std::vector<std::vector<std::pair<int, int>>> arcs;
    std::vector<int> deg;
    long long count = 0;

    bool deg_ok_final(int v) const { return std::binary_search(S.begin(), S.end(), deg[v]); }

    void visit(int v, size_t from) {
        if (v > n) {
            ++count;
            return;
        }
        if (deg_ok_final(v)) visit(v + 1, 0);
        if (deg[v] >= max_s) return;
        const auto& cand = arcs[static_cast<size_t>(v)];
        for (size_t i = from; i < cand.size(); ++i) {
            auto [a, b] = cand[i];
            ++deg[a];
            ++deg[b];
            if (deg[a] <= max_s && deg[b] <= max_s) visit(v, i);
            --deg[a];
            --deg[b];
        }
    }
};

}  // namespace

long long count_digraphs_brute(int n, const std::vector<int>& S, int iteration_order) {
    if (n > 6) throw std::invalid_argument("count_digraphs_brute: n above supported bound");
    DigraphState st;
    st.n = n;
    st.S = S;
    std::sort(st.S.begin(), st.S.end());
    if (st.S.empty() || st.S.front() < 1)
        throw std::invalid_argument("count_digraphs_brute: bad degree set");
    st.max_s = st.S.back();
    st.deg.assign(static_cast<size_t>(n) + 2, 0);
    st.arcs.resize(static_cast<size_t>(n) + 1);
    auto relabel = [&](int w) { return iteration_order == 0 ? w : n + 1 - w; };
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            int ra = relabel(a), rb = relabel(b);
            st.arcs[static_cast<size_t>(std::min(ra, rb))].push_back({ra, rb});
        }
    for (auto& bucket : st.arcs) std::sort(bucket.begin(), bucket.end());
    st.visit(1, 0);
    return st.count;
}

}  // namespace regenum
