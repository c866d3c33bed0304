#pragma once

// Finite witnessed graphs: an edge relation presented as the image of a witness
// set under an endpoint map.  Several witnesses may project onto the same pair,
// so a homomorphism into such a graph has to choose a witness for every edge.

#include <l0/error.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace l0 {

using VertexId = std::uint32_t;
using WitnessId = std::uint32_t;
using VertexSet = std::vector<VertexId>;

struct Witness {
    std::string name;
    VertexId a = 0;
    VertexId b = 0;

    [[nodiscard]] bool joins(VertexId u, VertexId v) const noexcept
    {
        return (a == u && b == v) || (a == v && b == u);
    }

    [[nodiscard]] bool touches(VertexId u) const noexcept { return a == u || b == u; }

    [[nodiscard]] VertexId other(VertexId u) const noexcept { return a == u ? b : a; }
};

struct Incidence {
    VertexId neighbour;
    WitnessId witness;

    auto operator<=>(const Incidence &) const = default;
};

/// Vertex and witness ids are positions in the construction order; every
/// search in the library walks them in ascending order.
class WitnessedGraph {
public:
    WitnessedGraph() = default;

    WitnessedGraph(std::vector<std::string> vertex_names, std::vector<Witness> witnesses) :
        names_(std::move(vertex_names)),
        witnesses_(std::move(witnesses))
    {
        std::set<std::string> seen;
        for (const auto & n : names_)
            if (! seen.insert(n).second)
                throw Error(ErrorCode::InvalidInput, "duplicate vertex id '" + n + "'");

        std::set<std::string> seen_w;
        for (const auto & w : witnesses_) {
            if (! seen_w.insert(w.name).second)
                throw Error(ErrorCode::InvalidInput, "duplicate witness id '" + w.name + "'");
            if (w.a >= names_.size() || w.b >= names_.size())
                throw Error(ErrorCode::UnknownVertex, "witness '" + w.name + "' has an unknown endpoint");
            if (w.a == w.b)
                throw Error(ErrorCode::LoopWitness, "witness '" + w.name + "' is a loop");
        }

        incidence_.resize(names_.size());
        for (WitnessId i = 0; i < witnesses_.size(); ++i) {
            incidence_[witnesses_[i].a].push_back({witnesses_[i].b, i});
            incidence_[witnesses_[i].b].push_back({witnesses_[i].a, i});
        }
        for (auto & list : incidence_)
            std::sort(list.begin(), list.end());

        for (VertexId v = 0; v < names_.size(); ++v)
            index_.emplace(names_[v], v);
    }

    /// Vertices named "0".."n-1", one witness "w<i>" per listed pair.
    static WitnessedGraph simple(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges)
    {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(std::to_string(i));
        std::vector<Witness> ws;
        for (std::size_t i = 0; i < edges.size(); ++i)
            ws.push_back({"w" + std::to_string(i), edges[i].first, edges[i].second});
        return WitnessedGraph(std::move(names), std::move(ws));
    }

    static WitnessedGraph simple(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges)
    {
        return simple(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
    }

    /// Witnesses given as (id, end, end) with ends named by vertex id.
    static WitnessedGraph from_names(std::vector<std::string> vertex_names,
        std::span<const std::tuple<std::string, std::string, std::string>> witnesses)
    {
        std::unordered_map<std::string, VertexId> index;
        for (VertexId v = 0; v < vertex_names.size(); ++v)
            index.emplace(vertex_names[v], v);
        auto lookup = [&](const std::string & name, const std::string & w) {
            auto it = index.find(name);
            if (it == index.end())
                throw Error(ErrorCode::UnknownVertex, "witness '" + w + "' names unknown vertex '" + name + "'");
            return it->second;
        };
        std::vector<Witness> ws;
        for (const auto & [id, a, b] : witnesses)
            ws.push_back({id, lookup(a, id), lookup(b, id)});
        return WitnessedGraph(std::move(vertex_names), std::move(ws));
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return names_.size(); }
    [[nodiscard]] std::size_t witness_count() const noexcept { return witnesses_.size(); }
    [[nodiscard]] const std::string & vertex_name(VertexId v) const { return names_.at(v); }
    [[nodiscard]] const std::vector<std::string> & vertex_names() const noexcept { return names_; }
    [[nodiscard]] const Witness & witness(WitnessId w) const { return witnesses_.at(w); }
    [[nodiscard]] const std::vector<Witness> & witnesses() const noexcept { return witnesses_; }

    /// Sorted by (neighbour, witness).
    [[nodiscard]] std::span<const Incidence> incident(VertexId v) const { return incidence_.at(v); }

    [[nodiscard]] std::optional<VertexId> find_vertex(const std::string & name) const
    {
        auto it = index_.find(name);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::optional<WitnessId> find_witness(const std::string & name) const
    {
        for (WitnessId i = 0; i < witnesses_.size(); ++i)
            if (witnesses_[i].name == name)
                return i;
        return std::nullopt;
    }

    [[nodiscard]] std::optional<WitnessId> least_witness(VertexId u, VertexId v) const
    {
        for (const auto & inc : incidence_.at(u))
            if (inc.neighbour == v)
                return inc.witness;
        return std::nullopt;
    }

    [[nodiscard]] bool adjacent(VertexId u, VertexId v) const { return least_witness(u, v).has_value(); }

    /// Number of distinct neighbours.
    [[nodiscard]] std::size_t degree(VertexId v) const
    {
        std::size_t d = 0;
        const auto & list = incidence_.at(v);
        for (std::size_t i = 0; i < list.size(); ++i)
            if (i == 0 || list[i].neighbour != list[i - 1].neighbour)
                ++d;
        return d;
    }

    [[nodiscard]] std::size_t max_degree() const
    {
        std::size_t d = 0;
        for (VertexId v = 0; v < names_.size(); ++v)
            d = std::max(d, degree(v));
        return d;
    }

    void require_vertex(VertexId v) const
    {
        if (v >= names_.size())
            throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(v) + " is not in the graph");
    }

private:
    std::vector<std::string> names_;
    std::vector<Witness> witnesses_;
    std::vector<std::vector<Incidence>> incidence_;
    std::unordered_map<std::string, VertexId> index_;
};

struct Walk {
    std::vector<VertexId> vertices;
    std::vector<WitnessId> witnesses;

    [[nodiscard]] std::size_t length() const noexcept { return witnesses.size(); }

    auto operator<=>(const Walk &) const = default;
};

[[nodiscard]] inline bool is_valid_walk(const WitnessedGraph & g, const Walk & w)
{
    if (w.vertices.size() != w.witnesses.size() + 1)
        return false;
    for (auto v : w.vertices)
        if (v >= g.vertex_count())
            return false;
    for (std::size_t j = 0; j < w.witnesses.size(); ++j) {
        if (w.witnesses[j] >= g.witness_count())
            return false;
        if (! g.witness(w.witnesses[j]).joins(w.vertices[j], w.vertices[j + 1]))
            return false;
    }
    return true;
}

struct Coloring {
    std::map<VertexId, std::uint32_t> colours;

    [[nodiscard]] std::size_t colour_count() const
    {
        std::set<std::uint32_t> used;
        for (const auto & [_, c] : colours)
            used.insert(c);
        return used.size();
    }

    [[nodiscard]] std::optional<std::uint32_t> at(VertexId v) const
    {
        auto it = colours.find(v);
        if (it == colours.end())
            return std::nullopt;
        return it->second;
    }

    auto operator<=>(const Coloring &) const = default;
};

/// Proper on the subgraph induced by the coloured vertices.
[[nodiscard]] inline bool is_proper(const WitnessedGraph & g, const Coloring & col)
{
    for (const auto & w : g.witnesses()) {
        auto ca = col.at(w.a), cb = col.at(w.b);
        if (ca && cb && *ca == *cb)
            return false;
    }
    return true;
}

[[nodiscard]] inline bool is_total(const WitnessedGraph & g, const Coloring & col)
{
    if (col.colours.size() != g.vertex_count())
        return false;
    for (const auto & [v, _] : col.colours)
        if (v >= g.vertex_count())
            return false;
    return true;
}

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// Breadth-first search in the parity double cover: entry [v][p] is the least
/// length with parity p of a walk from some source to v, or `unreachable`.
[[nodiscard]] inline std::vector<std::array<std::size_t, 2>> parity_distances(const WitnessedGraph & g,
    std::span<const VertexId> sources)
{
    std::vector<std::array<std::size_t, 2>> dist(g.vertex_count(), {unreachable, unreachable});
    std::queue<std::pair<VertexId, int>> q;
    for (auto s : sources) {
        g.require_vertex(s);
        if (dist[s][0] == unreachable) {
            dist[s][0] = 0;
            q.emplace(s, 0);
        }
    }
    while (! q.empty()) {
        auto [v, p] = q.front();
        q.pop();
        for (const auto & inc : g.incident(v)) {
            int np = 1 - p;
            if (dist[inc.neighbour][np] == unreachable) {
                dist[inc.neighbour][np] = dist[v][p] + 1;
                q.emplace(inc.neighbour, np);
            }
        }
    }
    return dist;
}

/// Lexicographically least walk (vertex sequence first, then witnesses) of
/// exactly `length` edges from `from` to `to`, if any exists.
[[nodiscard]] inline std::optional<Walk> least_walk(const WitnessedGraph & g, VertexId from, VertexId to,
    std::size_t length)
{
    g.require_vertex(from);
    g.require_vertex(to);
    VertexId target[1] = {to};
    auto dist = parity_distances(g, target);

    auto feasible = [&](VertexId x, std::size_t remaining) {
        auto d = dist[x][remaining % 2];
        if (d == unreachable || d > remaining)
            return false;
        return d == remaining || ! g.incident(x).empty();
    };

    if (! feasible(from, length))
        return std::nullopt;

    Walk w;
    w.vertices.push_back(from);
    VertexId cur = from;
    for (std::size_t remaining = length; remaining > 0; --remaining) {
        bool moved = false;
        for (const auto & inc : g.incident(cur)) {
            if (feasible(inc.neighbour, remaining - 1)) {
                w.vertices.push_back(inc.neighbour);
                w.witnesses.push_back(inc.witness);
                cur = inc.neighbour;
                moved = true;
                break;
            }
        }
        if (! moved)
            return std::nullopt; // unreachable when feasible() held at the start
    }
    return w;
}

/// Length of the shortest odd closed walk through v, if v lies in a
/// non-bipartite component.
[[nodiscard]] inline std::optional<std::size_t> min_odd_closed_walk(const WitnessedGraph & g, VertexId v)
{
    VertexId src[1] = {v};
    auto d = parity_distances(g, src)[v][1];
    if (d == unreachable)
        return std::nullopt;
    return d;
}

/// Component index per vertex; components are numbered in order of their
/// least vertex.
[[nodiscard]] inline std::vector<std::size_t> component_labels(const WitnessedGraph & g)
{
    std::vector<std::size_t> comp(g.vertex_count(), unreachable);
    std::size_t next = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != unreachable)
            continue;
        std::vector<VertexId> stack{s};
        comp[s] = next;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto & inc : g.incident(v))
                if (comp[inc.neighbour] == unreachable) {
                    comp[inc.neighbour] = next;
                    stack.push_back(inc.neighbour);
                }
        }
        ++next;
    }
    return comp;
}

/// BFS 2-colouring of each component from its least vertex (colour 0).
/// Vertices of components that are not bipartite are left uncoloured; the
/// second member lists those components' labels.
[[nodiscard]] inline std::pair<Coloring, std::set<std::size_t>> bfs_two_colouring(const WitnessedGraph & g)
{
    auto comp = component_labels(g);
    std::vector<int> colour(g.vertex_count(), -1);
    std::set<std::size_t> odd;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (! q.empty()) {
            auto v = q.front();
            q.pop();
            for (const auto & inc : g.incident(v)) {
                if (colour[inc.neighbour] == -1) {
                    colour[inc.neighbour] = 1 - colour[v];
                    q.push(inc.neighbour);
                }
                else if (colour[inc.neighbour] == colour[v])
                    odd.insert(comp[v]);
            }
        }
    }
    Coloring col;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (! odd.contains(comp[v]))
            col.colours.emplace(v, static_cast<std::uint32_t>(colour[v]));
    return {std::move(col), std::move(odd)};
}

/// True for vertices whose component contains an odd cycle.
[[nodiscard]] inline std::vector<bool> non_bipartite_mask(const WitnessedGraph & g)
{
    auto comp = component_labels(g);
    auto [_, odd] = bfs_two_colouring(g);
    std::vector<bool> mask(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        mask[v] = odd.contains(comp[v]);
    return mask;
}

using BipartiteCertificate = std::variant<Coloring, Walk>;

/// A proper 2-colouring, or an odd closed walk of minimum length (the least
/// such walk in lexicographic order).
[[nodiscard]] inline BipartiteCertificate bipartite_certificate(const WitnessedGraph & g)
{
    auto [col, odd] = bfs_two_colouring(g);
    if (odd.empty())
        return col;

    std::size_t best = unreachable;
    VertexId best_v = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto len = min_odd_closed_walk(g, v);
        if (len && *len < best) {
            best = *len;
            best_v = v;
        }
    }
    return *least_walk(g, best_v, best_v, best);
}

struct PhiVerdict {
    /// Empty when no odd walk has both endpoints in the queried set.
    std::optional<std::size_t> min_odd_length;

    [[nodiscard]] bool no_odd_walk() const noexcept { return ! min_odd_length.has_value(); }

    auto operator<=>(const PhiVerdict &) const = default;
};

[[nodiscard]] inline PhiVerdict phi_bound(const WitnessedGraph & g, std::span<const VertexId> a)
{
    for (auto v : a)
        g.require_vertex(v);
    if (a.empty())
        return {};
    auto dist = parity_distances(g, a);
    std::size_t best = unreachable;
    for (auto v : a)
        best = std::min(best, dist[v][1]);
    if (best == unreachable)
        return {};
    return {best};
}

/// Every odd walk with endpoints in `a` has length at most 2k-1.  Odd walks
/// can be padded by back-and-forth steps, so once one exists walks of every
/// larger odd length exist too: the answer does not depend on k.
[[nodiscard]] inline bool phi_holds(const WitnessedGraph & g, std::span<const VertexId> a,
    [[maybe_unused]] std::size_t k)
{
    return phi_bound(g, a).no_odd_walk();
}

/// Union of the connected components that meet `a`, sorted.
[[nodiscard]] inline VertexSet invariant_closure(const WitnessedGraph & g, std::span<const VertexId> a)
{
    for (auto v : a)
        g.require_vertex(v);
    auto comp = component_labels(g);
    std::set<std::size_t> hit;
    for (auto v : a)
        hit.insert(comp[v]);
    VertexSet out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (hit.contains(comp[v]))
            out.push_back(v);
    return out;
}

struct SupersetColouring {
    VertexSet closure;
    Coloring colouring;
};

[[nodiscard]] inline SupersetColouring bipartite_superset_colouring(const WitnessedGraph & g,
    std::span<const VertexId> a)
{
    if (! phi_bound(g, a).no_odd_walk())
        throw Error(ErrorCode::PhiFails, "the set has an odd walk between its members");
    SupersetColouring out;
    out.closure = invariant_closure(g, a);
    auto [col, _] = bfs_two_colouring(g);
    for (auto v : out.closure)
        out.colouring.colours.emplace(v, *col.at(v));
    return out;
}

/// Each vertex takes its colour from the first piece whose closure contains it.
[[nodiscard]] inline Coloring two_colour_from_cover(const WitnessedGraph & g,
    std::span<const VertexSet> pieces)
{
    std::vector<SupersetColouring> closures;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (auto v : pieces[i])
            g.require_vertex(v);
        if (! phi_bound(g, pieces[i]).no_odd_walk())
            throw Error(ErrorCode::PieceNotTiny, "piece " + std::to_string(i) + " has an odd walk");
        closures.push_back(bipartite_superset_colouring(g, pieces[i]));
    }

    // A piece covers everything in its closure.
    Coloring out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (const auto & c : closures)
            if (auto colour = c.colouring.at(v)) {
                out.colours.emplace(v, *colour);
                break;
            }
        if (! out.colours.contains(v))
            throw Error(ErrorCode::CoverIncomplete, "vertex '" + g.vertex_name(v) + "' is in no piece's closure");
    }
    return out;
}

/// First-fit in ascending vertex order; uses at most max_degree()+1 colours.
[[nodiscard]] inline Coloring greedy_colouring(const WitnessedGraph & g)
{
    Coloring out;
    std::vector<std::uint32_t> colour(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<bool> used(g.incident(v).size() + 1);
        for (const auto & inc : g.incident(v))
            if (inc.neighbour < v && colour[inc.neighbour] < used.size())
                used[colour[inc.neighbour]] = true;
        std::uint32_t c = 0;
        while (used[c])
            ++c;
        colour[v] = c;
        out.colours.emplace(v, c);
    }
    return out;
}

[[nodiscard]] inline bool is_vertex_homomorphism(const WitnessedGraph & h, const WitnessedGraph & g,
    std::span<const VertexId> map)
{
    if (map.size() != h.vertex_count())
        return false;
    for (auto v : map)
        if (v >= g.vertex_count())
            return false;
    for (const auto & w : h.witnesses())
        if (! g.adjacent(map[w.a], map[w.b]))
            return false;
    return true;
}

/// Colour of each vertex of H is the colour of its image in G.
[[nodiscard]] inline Coloring pullback_colouring(const WitnessedGraph & h, const WitnessedGraph & g,
    std::span<const VertexId> map, const Coloring & col)
{
    if (! is_vertex_homomorphism(h, g, map))
        throw Error(ErrorCode::NotHomomorphism, "vertex map does not send edges to edges");
    Coloring out;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (auto c = col.at(map[v]))
            out.colours.emplace(v, *c);
    return out;
}

} // namespace l0
