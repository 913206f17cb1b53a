#include "herg/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "herg/index.hpp"

namespace herg {

namespace {

struct CompKey {
    int vertices = 0;
    int edges = 0;
    int halves = 0;
    int loops = 0;
    int twist_parity_free = 0;  // placeholder to keep keys stable
    std::vector<std::pair<int, int>> degree_hr;  // sorted (rotation size, hr count)

    bool operator==(const CompKey&) const = default;
    bool operator<(const CompKey& o) const {
        return std::tie(vertices, edges, halves, loops, degree_hr) <
               std::tie(o.vertices, o.edges, o.halves, o.loops, o.degree_hr);
    }
};

struct GraphView {
    const Herg* g;
    HergIndex ix;
    std::vector<std::vector<int>> comps;      // vertex indices per component
    std::vector<CompKey> keys;

    explicit GraphView(const Herg& graph) : g(&graph), ix(graph) {
        int nv = static_cast<int>(graph.v());
        std::vector<int> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : graph.edges) {
            int a = ix.dart_vertex[ix.dart_index.at(e.dart_a)];
            int b = ix.dart_vertex[ix.dart_index.at(e.dart_b)];
            parent[find(a)] = find(b);
        }
        std::map<int, std::vector<int>> groups;
        for (int v = 0; v < nv; ++v) groups[find(v)].push_back(v);
        for (auto& [root, vs] : groups) comps.push_back(vs);
        for (const auto& comp : comps) keys.push_back(key_of(comp));
    }

    CompKey key_of(const std::vector<int>& comp) const {
        CompKey key;
        key.vertices = static_cast<int>(comp.size());
        std::set<int> vset(comp.begin(), comp.end());
        for (const auto& e : g->edges) {
            int a = ix.dart_vertex[ix.dart_index.at(e.dart_a)];
            int b = ix.dart_vertex[ix.dart_index.at(e.dart_b)];
            if (vset.count(a)) {
                key.edges++;
                if (a == b) key.loops++;
            }
        }
        for (int v : comp) {
            int hr = 0;
            for (int d : ix.rotations[v])
                if (ix.dart_half[d] >= 0) hr++;
            if (hr) key.halves += hr;
            key.degree_hr.push_back({static_cast<int>(ix.rotations[v].size()), hr});
        }
        std::sort(key.degree_hr.begin(), key.degree_hr.end());
        return key;
    }
};

struct MatchState {
    std::map<int, int> vmap;        // g1 vertex -> g2 vertex
    std::set<int> used_v2;
    std::map<int, int> dmap;        // g1 dart -> g2 dart
    std::map<int, bool> flipped;    // g1 vertex -> alignment reversed
    std::vector<int> pending;       // mapped edge darts awaiting partner check
};

class ComponentMatcher {
public:
    ComponentMatcher(const GraphView& a, const GraphView& b) : a_(a), b_(b) {}

    std::optional<MatchState> match(const std::vector<int>& c1, const std::vector<int>& c2) {
        // Root: most constrained vertex (max degree, then name).
        int r1 = c1.front();
        for (int v : c1) {
            if (a_.ix.rotations[v].size() > a_.ix.rotations[r1].size() ||
                (a_.ix.rotations[v].size() == a_.ix.rotations[r1].size() &&
                 a_.g->vertices[v].name < a_.g->vertices[r1].name))
                r1 = v;
        }
        int deg = static_cast<int>(a_.ix.rotations[r1].size());
        for (int r2 : c2) {
            if (static_cast<int>(b_.ix.rotations[r2].size()) != deg) continue;
            if (deg == 0) {
                MatchState st;
                st.vmap[r1] = r2;
                return st;
            }
            for (int offset = 0; offset < deg; ++offset) {
                for (int dir : {+1, -1}) {
                    MatchState st;
                    if (!align(st, r1, r2, 0, offset, dir)) continue;
                    auto done = search(st);
                    if (done) return done;
                }
            }
        }
        return std::nullopt;
    }

private:
    const GraphView& a_;
    const GraphView& b_;

    bool align(MatchState& st, int v1, int v2, int start1, int start2, int dir) {
        const auto& rot1 = a_.ix.rotations[v1];
        const auto& rot2 = b_.ix.rotations[v2];
        int deg = static_cast<int>(rot1.size());
        if (static_cast<int>(rot2.size()) != deg) return false;
        if (st.used_v2.count(v2)) return false;
        for (int i = 0; i < deg; ++i) {
            int d1 = rot1[(start1 + i) % deg];
            int d2 = rot2[((start2 + dir * i) % deg + deg) % deg];
            bool hr1 = a_.ix.dart_half[d1] >= 0;
            bool hr2 = b_.ix.dart_half[d2] >= 0;
            if (hr1 != hr2) return false;
            st.dmap[d1] = d2;
            if (!hr1) st.pending.push_back(d1);
        }
        st.vmap[v1] = v2;
        st.used_v2.insert(v2);
        st.flipped[v1] = (dir == -1);
        return true;
    }

    std::optional<MatchState> search(MatchState st) {
        while (!st.pending.empty()) {
            int d1 = st.pending.back();
            st.pending.pop_back();
            int d2 = st.dmap.at(d1);
            int p1 = a_.ix.dart_partner[d1];
            int p2 = b_.ix.dart_partner[d2];
            if (p2 < 0) return std::nullopt;
            auto it = st.dmap.find(p1);
            if (it != st.dmap.end()) {
                if (it->second != p2) return std::nullopt;
                continue;
            }
            int w1 = a_.ix.dart_vertex[p1];
            int w2 = b_.ix.dart_vertex[p2];
            if (st.vmap.count(w1)) return std::nullopt;  // vertex mapped, dart missing
            for (int dir : {+1, -1}) {
                MatchState branch = st;
                if (!align(branch, w1, w2, a_.ix.dart_pos[p1], b_.ix.dart_pos[p2], dir))
                    continue;
                auto done = search(std::move(branch));
                if (done) return done;
            }
            return std::nullopt;
        }
        return twists_ok(st) ? std::optional<MatchState>(std::move(st)) : std::nullopt;
    }

    bool twists_ok(const MatchState& st) const {
        for (std::size_t ei = 0; ei < a_.g->edges.size(); ++ei) {
            const EdgeRecord& e1 = a_.g->edges[ei];
            int d1 = a_.ix.dart_index.at(e1.dart_a);
            auto it = st.dmap.find(d1);
            if (it == st.dmap.end()) continue;  // edge outside this component
            int u = a_.ix.dart_vertex[d1];
            int v = a_.ix.dart_vertex[a_.ix.dart_index.at(e1.dart_b)];
            const EdgeRecord& e2 = b_.g->edges[b_.ix.dart_edge[it->second]];
            bool want = e1.twisted;
            if (u != v) want = want ^ st.flipped.at(u) ^ st.flipped.at(v);
            if (e2.twisted != want) return false;
        }
        return true;
    }
};

std::optional<DartBijection> match_views(const GraphView& a, const GraphView& b) {
    if (a.comps.size() != b.comps.size()) return std::nullopt;
    std::multiset<CompKey> ka(a.keys.begin(), a.keys.end());
    std::multiset<CompKey> kb(b.keys.begin(), b.keys.end());
    if (ka != kb) return std::nullopt;

    ComponentMatcher matcher(a, b);
    int n = static_cast<int>(a.comps.size());
    std::vector<int> assignment(n, -1);
    std::vector<bool> used(n, false);
    std::map<std::pair<int, int>, std::optional<MatchState>> memo;

    std::function<bool(int)> assign = [&](int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || !(a.keys[i] == b.keys[j])) continue;
            auto key = std::make_pair(i, j);
            if (!memo.count(key)) memo[key] = matcher.match(a.comps[i], b.comps[j]);
            if (!memo[key]) continue;
            used[j] = true;
            assignment[i] = j;
            if (assign(i + 1)) return true;
            used[j] = false;
            assignment[i] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;

    DartBijection bij;
    for (int i = 0; i < n; ++i) {
        const MatchState& st = *memo[{i, assignment[i]}];
        for (const auto& [d1, d2] : st.dmap)
            bij[a.ix.dart_token[d1]] = b.ix.dart_token[d2];
    }
    return bij;
}

}  // namespace

std::optional<DartBijection> isomorphic(const Herg& g1, const Herg& g2, bool allow_reflection) {
    if (g1.v() != g2.v() || g1.e() != g2.e() || g1.h() != g2.h()) return std::nullopt;
    GraphView a(g1);
    GraphView b(g2);
    auto direct = match_views(a, b);
    if (direct || !allow_reflection) return direct;
    Herg mirrored = reflect(g2);
    GraphView bm(mirrored);
    return match_views(a, bm);
}

}  // namespace herg
