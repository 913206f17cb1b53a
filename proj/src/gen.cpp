#include "herg/gen.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "herg/isomorphism.hpp"
#include "herg/topology.hpp"

namespace herg {

Herg gen(int vertices, int edges, int halves, std::uint64_t seed, bool allow_twists) {
    if (vertices < 0 || edges < 0 || halves < 0)
        throw HergError("gen: counts must be nonnegative");
    if (vertices == 0 && (edges > 0 || halves > 0))
        throw HergError("gen: edges or halves need at least one vertex");

    SplitMix64 rng(seed);
    Herg g;
    std::vector<std::vector<DartId>> rot(static_cast<std::size_t>(vertices));
    for (int i = 1; i <= vertices; ++i) g.vertices.push_back({"v" + std::to_string(i), {}});

    std::vector<std::pair<int, int>> ends;
    for (int i = 1; i <= edges; ++i) {
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(vertices)));
        int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(vertices)));
        ends.push_back({a, b});
    }
    std::vector<int> half_at;
    for (int j = 1; j <= halves; ++j)
        half_at.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(vertices))));
    std::vector<bool> twist(static_cast<std::size_t>(edges), false);
    if (allow_twists)
        for (int i = 0; i < edges; ++i) twist[static_cast<std::size_t>(i)] = rng.next() & 1;

    for (int i = 1; i <= edges; ++i) {
        std::string name = "e" + std::to_string(i);
        auto [a, b] = ends[static_cast<std::size_t>(i - 1)];
        rot[static_cast<std::size_t>(a)].push_back(name + "a");
        rot[static_cast<std::size_t>(b)].push_back(name + "b");
        g.edges.push_back({name, name + "a", name + "b", twist[static_cast<std::size_t>(i - 1)]});
    }
    for (int j = 1; j <= halves; ++j) {
        std::string name = "h" + std::to_string(j);
        rot[static_cast<std::size_t>(half_at[static_cast<std::size_t>(j - 1)])].push_back(name + "a");
        g.halves.push_back({name, name + "a"});
    }

    for (int v = 0; v < vertices; ++v) {
        auto& r = rot[static_cast<std::size_t>(v)];
        for (std::size_t i = r.size(); i > 1; --i)
            std::swap(r[i - 1], r[rng.below(i)]);
        g.vertices[static_cast<std::size_t>(v)].rotation = r;
    }
    return g;
}

namespace {

using CorpusKey = std::tuple<int, int, int, int, bool, int, int, int>;

CorpusKey key_of(const Herg& g) {
    auto [chi, gamma] = euler_genus(g);
    FaceReport f = trace_boundary(g);
    int loops = 0;
    for (const auto& e : g.edges) {
        const auto* ea = &e;
        // loop iff both darts share a vertex
        for (const auto& v : g.vertices) {
            bool a = std::find(v.rotation.begin(), v.rotation.end(), ea->dart_a) != v.rotation.end();
            bool b = std::find(v.rotation.begin(), v.rotation.end(), ea->dart_b) != v.rotation.end();
            if (a && b) loops++;
        }
    }
    return {static_cast<int>(g.v()), static_cast<int>(g.e()), static_cast<int>(g.h()),
            gamma, orientable(g), f.f_int, f.c_ext, loops};
}

}  // namespace

std::vector<NamedHerg> corpus(std::uint64_t seed, int max_edges) {
    std::vector<NamedHerg> out;
    std::map<CorpusKey, std::vector<std::size_t>> buckets;
    int emax = std::min(6, max_edges);

    for (int v = 1; v <= 4; ++v) {
        for (int e = 0; e <= emax; ++e) {
            for (int h = 0; h <= 3; ++h) {
                for (int tw = 0; tw <= 1; ++tw) {
                    if (tw == 1 && e == 0) continue;  // no twist bits to draw
                    for (int rep = 0; rep < 2; ++rep) {
                        std::uint64_t sub = seed;
                        for (int x : {v, e, h, tw, rep}) {
                            SplitMix64 m(sub ^ (static_cast<std::uint64_t>(x) +
                                                0x9E3779B97F4A7C15ull));
                            sub = m.next();
                        }
                        Herg g = gen(v, e, h, sub, tw == 1);
                        CorpusKey key = key_of(g);
                        bool fresh = true;
                        for (std::size_t idx : buckets[key])
                            if (isomorphic(out[idx].g, g)) {
                                fresh = false;
                                break;
                            }
                        if (!fresh) continue;
                        std::string name = "g_v" + std::to_string(v) + "e" + std::to_string(e) +
                                           "h" + std::to_string(h) + (tw ? "t" : "u") +
                                           std::to_string(rep);
                        buckets[key].push_back(out.size());
                        out.push_back({name, std::move(g)});
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace herg
