#pragma once

// Either a proper 2-colouring of the target, or a parameter prefix c together
// with coherent homomorphisms phi_n : L_n -> G for n up to a requested depth.
// Each phi_{n+1} restricts to phi_n on both copies of L_n, so the tower fixes
// one value for every vertex (m, k, x) of the limit graph at finite depth.

#include <l0/homset.hpp>
#include <l0/lc_graph.hpp>

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace l0 {

using Schedule = std::function<std::uint32_t(std::size_t)>;

/// n -> max(1, 2n - 1): odd, nondecreasing and unbounded.
[[nodiscard]] inline Schedule unbounded_schedule_default()
{
    return [](std::size_t n) -> std::uint32_t { return n == 0 ? 1u : static_cast<std::uint32_t>(2 * n - 1); };
}

[[nodiscard]] inline Schedule explicit_schedule(std::vector<std::uint32_t> values)
{
    return [values = std::move(values)](std::size_t n) -> std::uint32_t {
        if (n >= values.size())
            throw Error(ErrorCode::InvalidInput, "schedule has no value for level " + std::to_string(n));
        return values[n];
    };
}

struct Tower {
    ParamPrefix prefix;
    std::vector<Hom> levels;            // levels[n] is over L_n, n = 0..depth
    std::vector<std::uint32_t> schedule; // lower bound used for c(n)

    [[nodiscard]] std::size_t depth() const noexcept { return prefix.size(); }

    bool operator==(const Tower &) const = default;
};

using Decision = std::variant<Coloring, Tower>;

[[nodiscard]] inline Decision decide(const WitnessedGraph & g, std::size_t depth, const Schedule & schedule)
{
    auto certificate = bipartite_certificate(g);
    if (auto col = std::get_if<Coloring>(&certificate))
        return *col;

    // Root pin: least vertex lying on an odd closed walk.
    VertexId root = 0;
    while (! min_odd_closed_walk(g, root))
        ++root;

    Tower t;
    t.levels.push_back(Hom{{root}, {}});
    PathGadget lower;
    for (std::size_t n = 0; n < depth; ++n) {
        const auto & phi = t.levels.back();
        auto glue_at = phi.vertices[lower.e1_position()];
        auto shortest = *min_odd_closed_walk(g, glue_at);
        auto bound = schedule(n);
        auto c = least_odd_at_least(std::max<std::size_t>(bound, shortest - 2));

        t.schedule.push_back(bound);
        t.prefix = t.prefix.extended(c);
        PathGadget upper(t.prefix);
        auto walk = *gluing_walk(g, glue_at, c + 2);
        t.levels.push_back(glue(lower, upper, phi, phi, walk));
        lower = std::move(upper);
    }
    return t;
}

/// Value at (m, k, tbits): the image of (p_k)^tbits under phi_{m+|tbits|}.
[[nodiscard]] inline VertexId evaluate(const Tower & t, std::uint32_t m, std::uint32_t k, const std::string & tbits)
{
    if (tbits.find_first_not_of("01") != std::string::npos)
        throw Error(ErrorCode::InvalidIndex, "copy history must be binary");
    if (m == 0 && k != 0)
        throw Error(ErrorCode::InvalidIndex, "vertices born at level 0 have k = 0");
    if (m >= 1 && m <= t.prefix.size() && k > t.prefix[m - 1])
        throw Error(ErrorCode::InvalidIndex,
            "k = " + std::to_string(k) + " exceeds c(" + std::to_string(m - 1) + ") = " +
                std::to_string(t.prefix[m - 1]));
    const std::size_t level = m + tbits.size();
    if (level > t.depth() || level >= t.levels.size())
        throw Error(ErrorCode::OutOfTruncation,
            "level " + std::to_string(level) + " is beyond the tower depth " + std::to_string(t.depth()));
    auto pos = position_in_level(t.prefix, level, GadgetVertex{k, tbits});
    if (! pos)
        throw Error(ErrorCode::InvalidIndex, "no such gadget vertex");
    return t.levels[level].vertices.at(*pos);
}

struct TowerReport {
    std::size_t levels_checked = 0;
    std::size_t quotient_edges_checked = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

[[nodiscard]] inline TowerReport verify_tower(const Tower & t, const WitnessedGraph & g)
{
    TowerReport r;
    auto fail = [&](std::string s) { r.violations.push_back(std::move(s)); };

    if (t.levels.size() != t.prefix.size() + 1) {
        fail("shape: expected " + std::to_string(t.prefix.size() + 1) + " levels, found " +
            std::to_string(t.levels.size()));
        return r;
    }
    if (t.schedule.size() != t.prefix.size())
        fail("shape: schedule length differs from the prefix length");
    for (std::size_t n = 0; n < t.prefix.size(); ++n) {
        if (t.prefix[n] % 2 == 0)
            fail("parameter: c(" + std::to_string(n) + ") is even");
        if (n < t.schedule.size() && t.prefix[n] < t.schedule[n])
            fail("parameter: c(" + std::to_string(n) + ") is below its schedule bound");
    }

    auto odd = non_bipartite_mask(g);
    std::vector<PathGadget> gadgets;
    bool homs_ok = true;
    for (std::size_t n = 0; n < t.levels.size(); ++n) {
        gadgets.emplace_back(t.prefix.take(n));
        const auto & phi = t.levels[n];
        ++r.levels_checked;
        if (! is_hom(gadgets.back(), g, phi)) {
            fail("homomorphism: level " + std::to_string(n) + " is not a homomorphism");
            homs_ok = false;
            continue;
        }
        for (auto v : phi.vertices)
            if (! odd[v]) {
                fail("largeness: level " + std::to_string(n) + " uses vertex '" + g.vertex_name(v) +
                    "' from a bipartite component");
                break;
            }
    }
    if (! homs_ok)
        return r;

    for (std::size_t n = 0; n + 1 < t.levels.size(); ++n)
        for (int bit = 0; bit < 2; ++bit) {
            auto emb = copy_embed(gadgets[n], gadgets[n + 1], bit);
            const auto & lo = t.levels[n];
            const auto & hi = t.levels[n + 1];
            bool coherent = true;
            for (std::size_t pos = 0; pos < emb.size(); ++pos)
                coherent = coherent && hi.vertices[emb[pos]] == lo.vertices[pos];
            for (std::size_t j = 0; j < gadgets[n].edge_count(); ++j)
                coherent = coherent && hi.witnesses[std::min(emb[j], emb[j + 1])] == lo.witnesses[j];
            if (! coherent)
                fail("coherence: level " + std::to_string(n + 1) + " copy " + std::to_string(bit) +
                    " does not restrict to level " + std::to_string(n));
        }

    // Every edge of the depth truncation of the limit graph lands on an edge.
    auto q = level_quotient(t.prefix);
    const auto & top = gadgets.back();
    const auto & phi = t.levels.back();
    for (auto [i, j] : q.edges) {
        ++r.quotient_edges_checked;
        const auto & a = q.classes[i];
        const auto & b = q.classes[j];
        auto va = evaluate(t, a.m, a.k, a.bits);
        auto vb = evaluate(t, b.m, b.k, b.bits);
        auto pa = top.require(q.gadget_vertices[i]);
        auto pb = top.require(q.gadget_vertices[j]);
        if ((pa > pb ? pa - pb : pb - pa) != 1) {
            fail("quotient: classes " + q.gadget_vertices[i].label() + " and " + q.gadget_vertices[j].label() +
                " are not consecutive on the gadget");
            continue;
        }
        if (! g.witness(phi.witnesses[std::min(pa, pb)]).joins(va, vb))
            fail("quotient: edge " + q.gadget_vertices[i].label() + " -- " + q.gadget_vertices[j].label() +
                " has an inconsistent witness");
    }
    return r;
}

} // namespace l0
