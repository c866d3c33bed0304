#pragma once

// Sets of homomorphisms from a path gadget into a witnessed graph.
//
// HomProfile is the working representation: an allowed vertex set per gadget
// vertex and an allowed witness set per gadget edge, denoting every hom that
// respects all of them.  Because the gadget is a path, forward-backward arc
// consistency makes every allowed set exactly the projection of the denoted
// set, so projections, emptiness and counting are polynomial.
// ExplicitHomSet is a plain list, used as the reference representation.

#include <l0/gadget.hpp>
#include <l0/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace l0 {

using BigInt = boost::multiprecision::cpp_int;
using GadgetPtr = std::shared_ptr<const PathGadget>;
using GraphPtr = std::shared_ptr<const WitnessedGraph>;

/// Vertex images indexed by gadget position, witness images by gadget edge.
struct Hom {
    std::vector<VertexId> vertices;
    std::vector<WitnessId> witnesses;

    auto operator<=>(const Hom &) const = default;
};

[[nodiscard]] inline bool is_hom(const PathGadget & h, const WitnessedGraph & g, const Hom & phi)
{
    if (phi.vertices.size() != h.vertex_count() || phi.witnesses.size() != h.edge_count())
        return false;
    for (auto v : phi.vertices)
        if (v >= g.vertex_count())
            return false;
    for (std::size_t j = 0; j < phi.witnesses.size(); ++j) {
        if (phi.witnesses[j] >= g.witness_count())
            return false;
        if (! g.witness(phi.witnesses[j]).joins(phi.vertices[j], phi.vertices[j + 1]))
            return false;
    }
    return true;
}

class HomProfile {
public:
    using Mask = std::vector<bool>;

    HomProfile(GadgetPtr gadget, GraphPtr graph, std::vector<Mask> vertex_sets, std::vector<Mask> witness_sets) :
        gadget_(std::move(gadget)),
        graph_(std::move(graph)),
        vertex_sets_(std::move(vertex_sets)),
        witness_sets_(std::move(witness_sets))
    {
        if (vertex_sets_.size() != gadget_->vertex_count() || witness_sets_.size() != gadget_->edge_count())
            throw Error(ErrorCode::InvalidInput, "profile shape does not match the gadget");
        for (const auto & m : vertex_sets_)
            if (m.size() != graph_->vertex_count())
                throw Error(ErrorCode::InvalidInput, "vertex set has the wrong width");
        for (const auto & m : witness_sets_)
            if (m.size() != graph_->witness_count())
                throw Error(ErrorCode::InvalidInput, "witness set has the wrong width");
        normalise();
    }

    static HomProfile full(GadgetPtr gadget, GraphPtr graph)
    {
        std::vector<Mask> vs(gadget->vertex_count(), Mask(graph->vertex_count(), true));
        std::vector<Mask> ws(gadget->edge_count(), Mask(graph->witness_count(), true));
        return HomProfile(std::move(gadget), std::move(graph), std::move(vs), std::move(ws));
    }

    [[nodiscard]] const PathGadget & gadget() const noexcept { return *gadget_; }
    [[nodiscard]] const WitnessedGraph & graph() const noexcept { return *graph_; }
    [[nodiscard]] const GadgetPtr & gadget_ptr() const noexcept { return gadget_; }
    [[nodiscard]] const GraphPtr & graph_ptr() const noexcept { return graph_; }

    [[nodiscard]] const Mask & vertex_mask(std::size_t pos) const { return vertex_sets_.at(pos); }
    [[nodiscard]] const Mask & witness_mask(std::size_t edge) const { return witness_sets_.at(edge); }
    [[nodiscard]] const std::vector<Mask> & vertex_masks() const noexcept { return vertex_sets_; }
    [[nodiscard]] const std::vector<Mask> & witness_masks() const noexcept { return witness_sets_; }

    /// Projection onto the gadget vertex at `pos`.
    [[nodiscard]] VertexSet vertex_set(std::size_t pos) const
    {
        VertexSet out;
        const auto & m = vertex_sets_.at(pos);
        for (VertexId v = 0; v < m.size(); ++v)
            if (m[v])
                out.push_back(v);
        return out;
    }

    [[nodiscard]] std::vector<WitnessId> witness_set(std::size_t edge) const
    {
        std::vector<WitnessId> out;
        const auto & m = witness_sets_.at(edge);
        for (WitnessId w = 0; w < m.size(); ++w)
            if (m[w])
                out.push_back(w);
        return out;
    }

    [[nodiscard]] bool empty() const noexcept { return empty_; }

    [[nodiscard]] bool contains(const Hom & phi) const
    {
        if (! is_hom(*gadget_, *graph_, phi))
            return false;
        for (std::size_t p = 0; p < phi.vertices.size(); ++p)
            if (! vertex_sets_[p][phi.vertices[p]])
                return false;
        for (std::size_t j = 0; j < phi.witnesses.size(); ++j)
            if (! witness_sets_[j][phi.witnesses[j]])
                return false;
        return true;
    }

    bool operator==(const HomProfile & other) const
    {
        return gadget_->prefix() == other.gadget_->prefix() && vertex_sets_ == other.vertex_sets_ &&
            witness_sets_ == other.witness_sets_;
    }

private:
    void normalise()
    {
        const auto & g = *graph_;
        const std::size_t edges = witness_sets_.size();

        auto propagate = [&](const Mask & from, Mask & to, const Mask & allowed) {
            Mask support(g.vertex_count());
            for (WitnessId w = 0; w < allowed.size(); ++w) {
                if (! allowed[w])
                    continue;
                const auto & wt = g.witness(w);
                if (from[wt.a])
                    support[wt.b] = true;
                if (from[wt.b])
                    support[wt.a] = true;
            }
            for (std::size_t v = 0; v < to.size(); ++v)
                to[v] = to[v] && support[v];
        };

        for (std::size_t j = 0; j < edges; ++j)
            propagate(vertex_sets_[j], vertex_sets_[j + 1], witness_sets_[j]);
        for (std::size_t j = edges; j-- > 0;)
            propagate(vertex_sets_[j + 1], vertex_sets_[j], witness_sets_[j]);

        for (std::size_t j = 0; j < edges; ++j)
            for (WitnessId w = 0; w < witness_sets_[j].size(); ++w) {
                if (! witness_sets_[j][w])
                    continue;
                const auto & wt = g.witness(w);
                bool ok = (vertex_sets_[j][wt.a] && vertex_sets_[j + 1][wt.b]) ||
                    (vertex_sets_[j][wt.b] && vertex_sets_[j + 1][wt.a]);
                witness_sets_[j][w] = ok;
            }

        empty_ = false;
        for (const auto & m : vertex_sets_)
            if (std::find(m.begin(), m.end(), true) == m.end())
                empty_ = true;
        if (empty_) {
            for (auto & m : vertex_sets_)
                std::fill(m.begin(), m.end(), false);
            for (auto & m : witness_sets_)
                std::fill(m.begin(), m.end(), false);
        }
    }

    GadgetPtr gadget_;
    GraphPtr graph_;
    std::vector<Mask> vertex_sets_;
    std::vector<Mask> witness_sets_;
    bool empty_ = false;
};

[[nodiscard]] inline HomProfile all_homs(GadgetPtr gadget, GraphPtr graph)
{
    return HomProfile::full(std::move(gadget), std::move(graph));
}

[[nodiscard]] inline VertexSet project(const HomProfile & p, const GadgetVertex & u)
{
    return p.vertex_set(p.gadget().require(u));
}

/// Number of denoted homs, by dynamic programming along the path.
[[nodiscard]] inline BigInt count(const HomProfile & p)
{
    if (p.empty())
        return 0;
    const auto & g = p.graph();
    std::vector<BigInt> ways(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        ways[v] = p.vertex_mask(0)[v] ? 1 : 0;
    for (std::size_t j = 0; j < p.gadget().edge_count(); ++j) {
        std::vector<BigInt> next(g.vertex_count());
        const auto & to = p.vertex_mask(j + 1);
        for (auto w : p.witness_set(j)) {
            const auto & wt = g.witness(w);
            if (to[wt.b])
                next[wt.b] += ways[wt.a];
            if (to[wt.a])
                next[wt.a] += ways[wt.b];
        }
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const auto & x : ways)
        total += x;
    return total;
}

struct Enumeration {
    std::vector<Hom> homs;
    BigInt total;
};

/// The first `cap` homs, ordered by vertex assignment and then by witness
/// assignment (both lexicographic along the canonical gadget order).
[[nodiscard]] inline Enumeration enumerate(const HomProfile & p, std::size_t cap)
{
    Enumeration out;
    out.total = count(p);
    if (p.empty() || cap == 0)
        return out;

    const auto & g = p.graph();
    const std::size_t positions = p.gadget().vertex_count();
    std::vector<VertexId> seq(positions);

    auto witnesses_between = [&](std::size_t edge, VertexId a, VertexId b) {
        std::vector<WitnessId> ws;
        for (const auto & inc : g.incident(a))
            if (inc.neighbour == b && p.witness_mask(edge)[inc.witness])
                ws.push_back(inc.witness);
        return ws;
    };

    // Expands every witness choice for a fixed vertex sequence.
    auto emit_all = [&]() {
        std::vector<std::vector<WitnessId>> choices;
        for (std::size_t j = 0; j + 1 < positions; ++j)
            choices.push_back(witnesses_between(j, seq[j], seq[j + 1]));
        std::vector<std::size_t> idx(choices.size(), 0);
        while (out.homs.size() < cap) {
            Hom h;
            h.vertices = seq;
            for (std::size_t j = 0; j < choices.size(); ++j)
                h.witnesses.push_back(choices[j][idx[j]]);
            out.homs.push_back(std::move(h));

            bool advanced = false;
            for (std::size_t j = choices.size(); j-- > 0;) {
                if (++idx[j] < choices[j].size()) {
                    advanced = true;
                    break;
                }
                idx[j] = 0;
            }
            if (! advanced)
                return;
        }
    };

    auto dfs = [&](auto && self, std::size_t pos) -> void {
        if (out.homs.size() >= cap)
            return;
        if (pos == positions) {
            emit_all();
            return;
        }
        const auto & mask = p.vertex_mask(pos);
        for (VertexId v = 0; v < g.vertex_count() && out.homs.size() < cap; ++v) {
            if (! mask[v])
                continue;
            if (pos > 0 && witnesses_between(pos - 1, seq[pos - 1], v).empty())
                continue;
            seq[pos] = v;
            self(self, pos + 1);
        }
    };
    dfs(dfs, 0);
    return out;
}

class ExplicitHomSet {
public:
    ExplicitHomSet(GadgetPtr gadget, GraphPtr graph, std::vector<Hom> homs) :
        gadget_(std::move(gadget)),
        graph_(std::move(graph)),
        homs_(std::move(homs))
    {
        for (const auto & h : homs_)
            if (! is_hom(*gadget_, *graph_, h))
                throw Error(ErrorCode::NotHomomorphism, "explicit set member is not a homomorphism");
        std::sort(homs_.begin(), homs_.end());
        if (std::adjacent_find(homs_.begin(), homs_.end()) != homs_.end())
            throw Error(ErrorCode::DuplicateHom, "explicit set lists a homomorphism twice");
    }

    [[nodiscard]] const PathGadget & gadget() const noexcept { return *gadget_; }
    [[nodiscard]] const WitnessedGraph & graph() const noexcept { return *graph_; }
    [[nodiscard]] const GadgetPtr & gadget_ptr() const noexcept { return gadget_; }
    [[nodiscard]] const GraphPtr & graph_ptr() const noexcept { return graph_; }
    [[nodiscard]] const std::vector<Hom> & homs() const noexcept { return homs_; }
    [[nodiscard]] std::size_t size() const noexcept { return homs_.size(); }

    [[nodiscard]] VertexSet vertex_set(std::size_t pos) const
    {
        std::set<VertexId> s;
        for (const auto & h : homs_)
            s.insert(h.vertices.at(pos));
        return {s.begin(), s.end()};
    }

    [[nodiscard]] ExplicitHomSet subset(std::span<const std::size_t> indices) const
    {
        std::vector<Hom> hs;
        for (auto i : indices)
            hs.push_back(homs_.at(i));
        return ExplicitHomSet(gadget_, graph_, std::move(hs));
    }

private:
    GadgetPtr gadget_;
    GraphPtr graph_;
    std::vector<Hom> homs_;
};

[[nodiscard]] inline ExplicitHomSet to_explicit(const HomProfile & p, std::size_t cap)
{
    return ExplicitHomSet(p.gadget_ptr(), p.graph_ptr(), enumerate(p, cap).homs);
}

struct TinyVerdict {
    bool tiny = false;
    /// Least gadget position whose projection has no odd walk.
    std::optional<std::size_t> position;
};

namespace detail {
    template <typename Set>
    TinyVerdict tiny_by_projection(const Set & s)
    {
        for (std::size_t pos = 0; pos < s.gadget().vertex_count(); ++pos) {
            auto proj = s.vertex_set(pos);
            if (phi_bound(s.graph(), proj).no_odd_walk())
                return {true, pos};
        }
        return {false, std::nullopt};
    }
} // namespace detail

[[nodiscard]] inline TinyVerdict is_tiny(const HomProfile & p) { return detail::tiny_by_projection(p); }
[[nodiscard]] inline TinyVerdict is_tiny(const ExplicitHomSet & s) { return detail::tiny_by_projection(s); }

/// A finite set is a finite union of tiny sets exactly when each member sends
/// some gadget vertex into a bipartite component.
[[nodiscard]] inline bool is_small(const ExplicitHomSet & s)
{
    auto odd = non_bipartite_mask(s.graph());
    for (const auto & h : s.homs()) {
        bool escapes = false;
        for (auto v : h.vertices)
            if (! odd[v]) {
                escapes = true;
                break;
            }
        if (! escapes)
            return false;
    }
    return true;
}

struct LargeVerdict {
    bool large = false;
    std::optional<Hom> witness;
};

/// The profile cut down to values inside non-bipartite components.
[[nodiscard]] inline HomProfile restrict_to_odd_components(const HomProfile & p)
{
    auto odd = non_bipartite_mask(p.graph());
    auto vs = p.vertex_masks();
    for (auto & m : vs)
        for (std::size_t v = 0; v < m.size(); ++v)
            m[v] = m[v] && odd[v];
    return HomProfile(p.gadget_ptr(), p.graph_ptr(), std::move(vs), p.witness_masks());
}

[[nodiscard]] inline LargeVerdict is_large(const HomProfile & p)
{
    auto core = restrict_to_odd_components(p);
    if (core.empty())
        return {};
    auto e = enumerate(core, 1);
    return {true, std::move(e.homs.front())};
}

/// Profile over L_{n+1} (join length `join_length`) whose two copy
/// restrictions both satisfy `p`; the new join path is unconstrained.
[[nodiscard]] inline HomProfile doubling(const HomProfile & p, std::uint32_t join_length)
{
    const auto & lower = p.gadget();
    auto upper = std::make_shared<const PathGadget>(lower.prefix().extended(join_length));
    const auto & g = p.graph();

    std::vector<HomProfile::Mask> vs(upper->vertex_count(), HomProfile::Mask(g.vertex_count(), true));
    std::vector<HomProfile::Mask> ws(upper->edge_count(), HomProfile::Mask(g.witness_count(), true));

    for (int bit = 0; bit < 2; ++bit) {
        auto emb = copy_embed(lower, *upper, bit);
        for (std::size_t pos = 0; pos < emb.size(); ++pos)
            vs[emb[pos]] = p.vertex_mask(pos);
        for (std::size_t j = 0; j < lower.edge_count(); ++j)
            ws[std::min(emb[j], emb[j + 1])] = p.witness_mask(j);
    }
    return HomProfile(std::move(upper), p.graph_ptr(), std::move(vs), std::move(ws));
}

/// Least odd closed walk through v (lexicographically least of minimum length),
/// lengthened to `length` by bouncing along its first edge.
[[nodiscard]] inline std::optional<Walk> gluing_walk(const WitnessedGraph & g, VertexId v, std::size_t length)
{
    auto shortest = min_odd_closed_walk(g, v);
    if (! shortest || length < *shortest || (length - *shortest) % 2 != 0)
        return std::nullopt;
    auto base = *least_walk(g, v, v, *shortest);
    Walk out;
    out.vertices.push_back(base.vertices[0]);
    for (std::size_t r = 0; r < (length - *shortest) / 2; ++r) {
        out.vertices.push_back(base.vertices[1]);
        out.vertices.push_back(base.vertices[0]);
        out.witnesses.push_back(base.witnesses[0]);
        out.witnesses.push_back(base.witnesses[0]);
    }
    out.vertices.insert(out.vertices.end(), base.vertices.begin() + 1, base.vertices.end());
    out.witnesses.insert(out.witnesses.end(), base.witnesses.begin(), base.witnesses.end());
    return out;
}

/// Hom over `upper` (= `lower` doubled) restricting to `copy0`/`copy1` on the
/// two copies and following `join` along the new path.
[[nodiscard]] inline Hom glue(const PathGadget & lower, const PathGadget & upper, const Hom & copy0,
    const Hom & copy1, const Walk & join)
{
    if (join.length() != upper.prefix()[lower.level()] + 2ull)
        throw Error(ErrorCode::InvalidInput, "join walk has the wrong length");
    Hom out;
    out.vertices.assign(upper.vertex_count(), 0);
    out.witnesses.assign(upper.edge_count(), 0);
    const Hom * copies[2] = {&copy0, &copy1};
    for (int bit = 0; bit < 2; ++bit) {
        auto emb = copy_embed(lower, upper, bit);
        for (std::size_t pos = 0; pos < emb.size(); ++pos)
            out.vertices[emb[pos]] = copies[bit]->vertices[pos];
        for (std::size_t j = 0; j < lower.edge_count(); ++j)
            out.witnesses[std::min(emb[j], emb[j + 1])] = copies[bit]->witnesses[j];
    }
    // The join path occupies positions V_n - 1 .. V_n + c(n) + 1.
    const std::size_t start = lower.vertex_count() - 1;
    if (join.vertices.front() != out.vertices[start] || join.vertices.back() != out.vertices[start + join.length()])
        throw Error(ErrorCode::InvalidInput, "join walk does not start and end at the images of e1");
    for (std::size_t i = 0; i < join.vertices.size(); ++i)
        out.vertices[start + i] = join.vertices[i];
    for (std::size_t j = 0; j < join.witnesses.size(); ++j)
        out.witnesses[start + j] = join.witnesses[j];
    return out;
}

[[nodiscard]] inline std::uint32_t least_odd_at_least(std::size_t n)
{
    auto v = static_cast<std::uint32_t>(std::max<std::size_t>(n, 1));
    return v % 2 ? v : v + 1;
}

struct ExtendedWitness {
    std::uint32_t join_length = 0;
    GadgetPtr gadget;
    Hom hom;
};

/// A level-(n+1) hom whose copies both equal a largeness witness of `p`, glued
/// along an odd closed walk at the image of e1.
[[nodiscard]] inline ExtendedWitness extend_witness(const HomProfile & p, std::size_t lower_bound)
{
    auto verdict = is_large(p);
    if (! verdict.large)
        throw Error(ErrorCode::NotLarge, "profile is not large");
    const auto & phi0 = *verdict.witness;
    const auto & g = p.graph();
    auto glue_at = phi0.vertices[p.gadget().e1_position()];
    auto shortest = *min_odd_closed_walk(g, glue_at);

    ExtendedWitness out;
    out.join_length = least_odd_at_least(std::max<std::size_t>(lower_bound, shortest - 2));
    out.gadget = std::make_shared<const PathGadget>(p.gadget().prefix().extended(out.join_length));
    auto walk = *gluing_walk(g, glue_at, out.join_length + 2);
    out.hom = glue(p.gadget(), *out.gadget, phi0, phi0, walk);
    return out;
}

/// Least odd d >= lower_bound with the doubling of `p` along d still large.
[[nodiscard]] inline std::uint32_t preserve_largeness(const HomProfile & p, std::size_t lower_bound)
{
    if (! is_large(p).large)
        throw Error(ErrorCode::NotLarge, "profile is not large");
    const std::size_t limit = std::max<std::size_t>(lower_bound, 2 * p.graph().vertex_count()) + 2;
    for (auto d = least_odd_at_least(lower_bound); d <= limit; d += 2)
        if (is_large(doubling(p, d)).large)
            return d;
    throw Error(ErrorCode::NotLarge, "no odd join length keeps the doubling large");
}

[[nodiscard]] inline HomProfile pin(const HomProfile & p, const Hom & phi)
{
    if (! p.contains(phi))
        throw Error(ErrorCode::NotMember, "homomorphism is not in the profile");
    const auto & g = p.graph();
    std::vector<HomProfile::Mask> vs(phi.vertices.size(), HomProfile::Mask(g.vertex_count()));
    std::vector<HomProfile::Mask> ws(phi.witnesses.size(), HomProfile::Mask(g.witness_count()));
    for (std::size_t i = 0; i < phi.vertices.size(); ++i)
        vs[i][phi.vertices[i]] = true;
    for (std::size_t j = 0; j < phi.witnesses.size(); ++j)
        ws[j][phi.witnesses[j]] = true;
    return HomProfile(p.gadget_ptr(), p.graph_ptr(), std::move(vs), std::move(ws));
}

} // namespace l0
