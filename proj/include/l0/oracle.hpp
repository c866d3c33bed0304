#pragma once

// Slow reference implementations used by the property suites.  None of them
// call the algorithm they are meant to check.

#include <l0/homset.hpp>
#include <l0/lc_graph.hpp>

#include <optional>
#include <random>
#include <set>
#include <vector>

namespace l0::oracle {

using Rng = std::mt19937_64;

/// All simple graphs on n vertices, edges taken from the lexicographic list of
/// pairs by the bits of a counter.
[[nodiscard]] inline std::vector<WitnessedGraph> all_graphs(std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            pairs.emplace_back(a, b);
    std::vector<WitnessedGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u)
                edges.push_back(pairs[i]);
        out.push_back(WitnessedGraph::simple(n, edges));
    }
    return out;
}

/// Every graph on 1..max_n vertices.
[[nodiscard]] inline std::vector<WitnessedGraph> all_graphs_up_to(std::size_t max_n)
{
    std::vector<WitnessedGraph> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto & g : all_graphs(n))
            out.push_back(std::move(g));
    return out;
}

/// Erdos-Renyi style; with `parallel` some pairs get a second witness.
[[nodiscard]] inline WitnessedGraph random_graph(Rng & rng, std::size_t n, double p, bool parallel = false)
{
    std::bernoulli_distribution edge(p), twin(0.25);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (edge(rng)) {
                edges.emplace_back(a, b);
                if (parallel && twin(rng))
                    edges.emplace_back(b, a);
            }
    return WitnessedGraph::simple(n, edges);
}

/// Random bipartite graph: sides chosen by coin flip, edges only across.
[[nodiscard]] inline WitnessedGraph random_bipartite(Rng & rng, std::size_t n, double p,
    std::vector<int> * sides = nullptr)
{
    std::bernoulli_distribution coin(0.5), edge(p);
    std::vector<int> side(n);
    for (auto & s : side)
        s = coin(rng);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (side[a] != side[b] && edge(rng))
                edges.emplace_back(a, b);
    if (sides)
        *sides = side;
    return WitnessedGraph::simple(n, edges);
}

[[nodiscard]] inline VertexSet random_subset(Rng & rng, std::size_t n)
{
    std::bernoulli_distribution coin(0.35);
    VertexSet a;
    for (VertexId v = 0; v < n; ++v)
        if (coin(rng))
            a.push_back(v);
    return a;
}

[[nodiscard]] inline WitnessedGraph cycle(std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i)
        e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return WitnessedGraph::simple(n, e);
}

[[nodiscard]] inline WitnessedGraph complete(std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            e.emplace_back(a, b);
    return WitnessedGraph::simple(n, e);
}

[[nodiscard]] inline WitnessedGraph petersen()
{
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return WitnessedGraph::simple(10, e);
}

/// Least odd length <= max_length of a walk between two members of `a`, by
/// boolean matrix powers.
[[nodiscard]] inline std::optional<std::size_t> least_odd_walk(const WitnessedGraph & g, const VertexSet & a,
    std::size_t max_length)
{
    const auto n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (const auto & w : g.witnesses())
        adj[w.a][w.b] = adj[w.b][w.a] = true;
    std::set<VertexId> in_a(a.begin(), a.end());
    auto reach = adj; // reach[u][v]: walk of the current length from u to v
    for (std::size_t len = 1; len <= max_length; ++len) {
        if (len % 2 == 1)
            for (auto u : in_a)
                for (auto v : in_a)
                    if (reach[u][v])
                        return len;
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t m = 0; m < n; ++m)
                if (reach[u][m])
                    for (std::size_t v = 0; v < n; ++v)
                        if (adj[m][v])
                            next[u][v] = true;
        reach = std::move(next);
    }
    return std::nullopt;
}

/// Exhaustive search over all 2^n colourings.
[[nodiscard]] inline bool is_bipartite(const WitnessedGraph & g)
{
    const auto n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto & w : g.witnesses())
            ok = ok && ((mask >> w.a & 1u) != (mask >> w.b & 1u));
        if (ok)
            return true;
    }
    return false;
}

/// Every vertex of a non-bipartite component lies on an odd closed walk.
[[nodiscard]] inline std::vector<bool> on_odd_component(const WitnessedGraph & g)
{
    std::vector<bool> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out[v] = least_odd_walk(g, {v}, 2 * g.vertex_count() + 1).has_value();
    return out;
}

/// 1^T W^length 1 with W the witness-count matrix.
[[nodiscard]] inline BigInt walk_count(const WitnessedGraph & g, std::size_t length)
{
    const auto n = g.vertex_count();
    std::vector<std::vector<BigInt>> w(n, std::vector<BigInt>(n));
    for (const auto & e : g.witnesses()) {
        w[e.a][e.b] += 1;
        w[e.b][e.a] += 1;
    }
    std::vector<BigInt> vec(n, 1);
    for (std::size_t s = 0; s < length; ++s) {
        std::vector<BigInt> next(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                next[v] += vec[u] * w[u][v];
        vec = std::move(next);
    }
    BigInt total = 0;
    for (const auto & x : vec)
        total += x;
    return total;
}

/// Masked transfer matrices along the gadget path: forward and backward walk
/// counts give the number of homs and every projection without listing them.
struct MaskedWalks {
    BigInt count = 0;
    std::vector<VertexSet> vertex_sets;
    std::vector<std::vector<WitnessId>> witness_sets;
};

[[nodiscard]] inline MaskedWalks masked_walks(const PathGadget & h, const WitnessedGraph & g,
    const std::vector<std::vector<bool>> & vm, const std::vector<std::vector<bool>> & wm)
{
    const auto n = g.vertex_count();
    const auto len = h.vertex_count();
    std::vector<std::vector<BigInt>> fwd(len, std::vector<BigInt>(n)), bwd(len, std::vector<BigInt>(n));
    for (VertexId v = 0; v < n; ++v) {
        fwd[0][v] = vm[0][v] ? 1 : 0;
        bwd[len - 1][v] = vm[len - 1][v] ? 1 : 0;
    }
    auto step = [&](const std::vector<BigInt> & from, std::vector<BigInt> & to, std::size_t edge, std::size_t at) {
        for (WitnessId w = 0; w < g.witness_count(); ++w) {
            if (! wm[edge][w])
                continue;
            const auto & e = g.witness(w);
            if (vm[at][e.b])
                to[e.b] += from[e.a];
            if (vm[at][e.a])
                to[e.a] += from[e.b];
        }
    };
    for (std::size_t p = 1; p < len; ++p)
        step(fwd[p - 1], fwd[p], p - 1, p);
    for (std::size_t p = len - 1; p-- > 0;)
        step(bwd[p + 1], bwd[p], p, p);

    MaskedWalks out;
    for (const auto & x : fwd[len - 1])
        out.count += x;
    out.vertex_sets.resize(len);
    for (std::size_t p = 0; p < len; ++p)
        for (VertexId v = 0; v < n; ++v)
            if (fwd[p][v] * bwd[p][v] > 0)
                out.vertex_sets[p].push_back(v);
    out.witness_sets.resize(len - 1);
    for (std::size_t j = 0; j + 1 < len; ++j)
        for (WitnessId w = 0; w < g.witness_count(); ++w) {
            if (! wm[j][w])
                continue;
            const auto & e = g.witness(w);
            if (fwd[j][e.a] * bwd[j + 1][e.b] > 0 || fwd[j][e.b] * bwd[j + 1][e.a] > 0)
                out.witness_sets[j].push_back(w);
        }
    return out;
}

struct HomEnumeration {
    std::vector<Hom> homs;
    bool complete = true;
};

/// Depth-first enumeration of the homs allowed by the masks, in lexicographic
/// order of (vertex sequence, witness sequence).  Stops after `budget` homs.
[[nodiscard]] inline HomEnumeration enumerate_homs(const PathGadget & h, const WitnessedGraph & g,
    const std::vector<std::vector<bool>> & vertex_masks, const std::vector<std::vector<bool>> & witness_masks,
    std::size_t budget)
{
    HomEnumeration out;
    const auto positions = h.vertex_count();
    std::vector<VertexId> seq(positions);
    auto vertices = [&](auto && self, std::size_t pos) -> void {
        if (! out.complete)
            return;
        if (pos == positions) {
            // Expand witness choices for this vertex sequence.
            std::vector<WitnessId> ws(positions - 1);
            auto witnesses = [&](auto && wself, std::size_t j) -> void {
                if (! out.complete)
                    return;
                if (j + 1 == positions || positions == 1) {
                    if (out.homs.size() == budget) {
                        out.complete = false;
                        return;
                    }
                    out.homs.push_back({seq, ws});
                    return;
                }
                for (WitnessId w = 0; w < g.witness_count(); ++w)
                    if (witness_masks[j][w] && g.witness(w).joins(seq[j], seq[j + 1])) {
                        ws[j] = w;
                        wself(wself, j + 1);
                    }
            };
            witnesses(witnesses, 0);
            return;
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (! vertex_masks[pos][v])
                continue;
            if (pos > 0) {
                bool edge = false;
                for (WitnessId w = 0; w < g.witness_count() && ! edge; ++w)
                    edge = witness_masks[pos - 1][w] && g.witness(w).joins(seq[pos - 1], v);
                if (! edge)
                    continue;
            }
            seq[pos] = v;
            self(self, pos + 1);
        }
    };
    vertices(vertices, 0);
    return out;
}

[[nodiscard]] inline HomEnumeration enumerate_homs(const PathGadget & h, const WitnessedGraph & g, std::size_t budget)
{
    std::vector<std::vector<bool>> vm(h.vertex_count(), std::vector<bool>(g.vertex_count(), true));
    std::vector<std::vector<bool>> wm(h.edge_count(), std::vector<bool>(g.witness_count(), true));
    return enumerate_homs(h, g, vm, wm, budget);
}

/// Tiny: some gadget vertex whose image set carries no odd walk.
[[nodiscard]] inline bool tiny(const WitnessedGraph & g, const std::vector<Hom> & homs, std::size_t positions)
{
    for (std::size_t pos = 0; pos < positions; ++pos) {
        std::set<VertexId> image;
        for (const auto & phi : homs)
            image.insert(phi.vertices[pos]);
        if (! least_odd_walk(g, VertexSet(image.begin(), image.end()), 2 * g.vertex_count() + 1))
            return true;
    }
    return false;
}

/// Small by definition: the set is covered by its tiny subsets.  Exponential
/// in the size of the set.
[[nodiscard]] inline std::optional<bool> small_by_cover_search(const WitnessedGraph & g, const std::vector<Hom> & homs,
    std::size_t positions, std::size_t max_size = 12)
{
    if (homs.size() > max_size)
        return std::nullopt;
    std::vector<bool> covered(homs.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << homs.size()); ++mask) {
        std::vector<Hom> part;
        for (std::size_t i = 0; i < homs.size(); ++i)
            if (mask >> i & 1u)
                part.push_back(homs[i]);
        if (tiny(g, part, positions))
            for (std::size_t i = 0; i < homs.size(); ++i)
                if (mask >> i & 1u)
                    covered[i] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

/// Large: some member is not tiny on its own (singletons of a small set are
/// tiny, and a union of tiny singletons is small).
[[nodiscard]] inline bool large(const WitnessedGraph & g, const std::vector<Hom> & homs, std::size_t positions)
{
    for (const auto & phi : homs)
        if (! tiny(g, {phi}, positions))
            return true;
    return false;
}

// ---- limit graph ---------------------------------------------------------

[[nodiscard]] inline EpBits random_bits(Rng & rng, std::size_t max_prefix = 4, std::size_t max_period = 3)
{
    std::uniform_int_distribution<std::size_t> pl(0, max_prefix), ql(1, max_period);
    std::bernoulli_distribution coin(0.5);
    std::string p, q;
    for (auto n = pl(rng); n > 0; --n)
        p += coin(rng) ? '1' : '0';
    for (auto n = ql(rng); n > 0; --n)
        q += coin(rng) ? '1' : '0';
    return {p, q};
}

[[nodiscard]] inline ParamPrefix random_odd_prefix(Rng & rng, std::size_t length, std::uint32_t max_value = 5)
{
    std::uniform_int_distribution<std::uint32_t> half(0, (max_value - 1) / 2);
    std::vector<std::uint32_t> v;
    for (std::size_t i = 0; i < length; ++i)
        v.push_back(2 * half(rng) + 1);
    return ParamPrefix(std::move(v));
}

[[nodiscard]] inline LcVertex random_vertex(Rng & rng, const ParamPrefix & prefix, std::uint32_t max_birth = 4)
{
    std::uniform_int_distribution<std::uint32_t> md(0, max_birth);
    LcVertex v;
    v.m = md(rng);
    if (v.m > 0)
        v.k = std::uniform_int_distribution<std::uint32_t>(0, prefix[v.m - 1])(rng);
    v.x = random_bits(rng);
    return v;
}

/// Letter-by-letter comparison of two tails over a long window.
[[nodiscard]] inline bool tails_agree(const EpBits & a, std::size_t skip_a, const EpBits & b, std::size_t skip_b,
    std::size_t window = 96)
{
    for (std::size_t i = 0; i < window; ++i)
        if (a.at(skip_a + i) != b.at(skip_b + i))
            return false;
    return true;
}

/// Gadgets L_0..L_levels built by construction, queried by label.
class LevelTower {
public:
    LevelTower(const ParamPrefix & prefix, std::size_t levels)
    {
        for (std::size_t n = 0; n <= levels; ++n)
            gadgets_.emplace_back(prefix.take(n));
    }

    [[nodiscard]] std::size_t top() const noexcept { return gadgets_.size() - 1; }
    [[nodiscard]] const PathGadget & at(std::size_t n) const { return gadgets_.at(n); }

    [[nodiscard]] static GadgetVertex project(const LcVertex & v, std::size_t n)
    {
        GadgetVertex out{v.k, {}};
        for (std::size_t i = 0; i + v.m < n; ++i)
            out.t += v.x.at(i);
        return out;
    }

    /// Consecutive at every level from max(m_a, m_b) to the top, with tails
    /// beyond the top agreeing.
    [[nodiscard]] bool adjacent(const LcVertex & a, const LcVertex & b) const
    {
        const std::size_t from = std::max(a.m, b.m);
        if (from > top())
            return false;
        for (std::size_t n = from; n <= top(); ++n) {
            auto pa = at(n).position(project(a, n));
            auto pb = at(n).position(project(b, n));
            if (! pa || ! pb || (*pa + 1 != *pb && *pb + 1 != *pa))
                return false;
        }
        return tails_agree(a.x, top() - a.m, b.x, top() - b.m);
    }

    /// The limit vertices occupying the two slots next to v at the top level.
    [[nodiscard]] std::vector<LcVertex> neighbours(const LcVertex & v) const
    {
        const auto & g = at(top());
        auto pos = *g.position(project(v, top()));
        std::vector<LcVertex> out;
        const auto tail = v.x.shifted(top() - v.m);
        auto add = [&](std::size_t p) {
            const auto & w = g.at(p);
            out.push_back({static_cast<std::uint32_t>(top() - w.t.size()), w.k, tail.prepended(w.t)});
        };
        if (pos > 0)
            add(pos - 1);
        if (pos + 1 < g.vertex_count())
            add(pos + 1);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<PathGadget> gadgets_;
};

/// Same component: some common level after which the tails coincide.
[[nodiscard]] inline bool same_component(const LcVertex & a, const LcVertex & b, std::size_t horizon = 48)
{
    for (std::size_t n = std::max(a.m, b.m); n <= std::max(a.m, b.m) + horizon; ++n)
        if (tails_agree(a.x, n - a.m, b.x, n - b.m))
            return true;
    return false;
}

} // namespace l0::oracle
