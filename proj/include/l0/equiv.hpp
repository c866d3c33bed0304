#pragma once

// Coherent homomorphisms h_n : L^c_n -> L^d_{m(n)} between the gadget
// families of two odd parameter prefixes.  Copy i of L^c_{n+1} is sent to
// h_n followed by a fixed suffix s_{n,i}; the join path of L^c_{n+1} is sent
// along a walk of length c(n)+2 between the two suffixed images of e1.
// The planner only proposes; verify_equivalence is the authority.

#include <l0/gadget.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace l0 {

struct EquivalenceTower {
    ParamPrefix source;
    ParamPrefix target;
    std::vector<std::size_t> level_map;                 // m(0..depth)
    std::vector<std::array<std::string, 2>> suffixes;  // s_{n,0}, s_{n,1}
    std::vector<std::vector<GadgetVertex>> joins;       // walk for the level-n join, in L^d_{m(n+1)}
    std::vector<std::vector<GadgetVertex>> maps;        // maps[n][pos in L^c_n]

    [[nodiscard]] std::size_t depth() const noexcept { return suffixes.size(); }

    bool operator==(const EquivalenceTower &) const = default;
};

struct EquivalenceReport {
    std::size_t edges_checked = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

namespace detail {
    inline std::size_t absdiff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

    /// Straight from `from` to `to`, then back and forth at `to`.
    inline std::vector<std::uint64_t> path_walk(std::uint64_t from, std::uint64_t to, std::size_t length,
        std::uint64_t size)
    {
        std::vector<std::uint64_t> w{from};
        auto cur = from;
        while (cur != to) {
            cur = cur < to ? cur + 1 : cur - 1;
            w.push_back(cur);
        }
        const auto bounce = to > 0 ? to - 1 : to + 1;
        while (w.size() < length + 1) {
            w.push_back(bounce);
            w.push_back(to);
        }
        (void)size;
        return w;
    }

    /// The images of the vertices of L^c_{n+1} from the level-n data.
    inline std::vector<GadgetVertex> extend_map(const PathGadget & lower, const PathGadget & upper,
        const std::vector<GadgetVertex> & map, const std::array<std::string, 2> & suffix,
        const std::vector<GadgetVertex> & join)
    {
        std::vector<GadgetVertex> out;
        out.reserve(upper.vertex_count());
        for (const auto & v : upper.vertices()) {
            if (v.t.empty()) {
                out.push_back(join.at(v.k + 1));
                continue;
            }
            GadgetVertex src{v.k, v.t.substr(0, v.t.size() - 1)};
            out.push_back(map[lower.require(src)].appended(suffix[v.t.back() == '1' ? 1 : 0]));
        }
        return out;
    }

    inline std::string bits_of(std::uint64_t value, std::size_t len)
    {
        std::string s(len, '0');
        for (std::size_t i = 0; i < len; ++i)
            if (value >> (len - 1 - i) & 1u)
                s[i] = '1';
        return s;
    }
} // namespace detail

/// m(n) = n, s_{n,i} = (i), joins sent to themselves.
[[nodiscard]] inline EquivalenceTower identity_tower(const ParamPrefix & c, std::size_t depth)
{
    if (depth > c.size())
        throw Error(ErrorCode::LevelOutOfRange, "depth exceeds the prefix length");
    EquivalenceTower t;
    t.source = c;
    t.target = c;
    for (std::size_t n = 0; n <= depth; ++n) {
        t.level_map.push_back(n);
        PathGadget g(c.take(n));
        t.maps.emplace_back(g.vertices().begin(), g.vertices().end());
    }
    for (std::size_t n = 0; n < depth; ++n) {
        t.suffixes.push_back({"0", "1"});
        PathGadget lower(c.take(n));
        PathGadget upper(c.take(n + 1));
        std::vector<GadgetVertex> join;
        for (std::size_t pos = lower.vertex_count() - 1; pos <= lower.vertex_count() + c[n] + 1; ++pos)
            join.push_back(upper.at(pos));
        t.joins.push_back(std::move(join));
    }
    return t;
}

struct PlannerOptions {
    std::size_t budget = 200'000; // candidate placements examined before giving up
};

/// Greedy level advance with bounded backtracking: at each level take the
/// least target level and then the lexicographically least suffix pair whose
/// suffixed gluing images admit a walk of length c(n)+2.
[[nodiscard]] inline EquivalenceTower plan_equivalence(const ParamPrefix & c, const ParamPrefix & d,
    std::size_t depth, PlannerOptions options = {})
{
    c.require_odd();
    d.require_odd();
    if (depth > c.size())
        throw Error(ErrorCode::LevelOutOfRange, "depth exceeds the source prefix length");

    struct Choice {
        std::size_t level;
        std::array<std::string, 2> suffix;
        std::uint64_t from, to;
    };
    std::vector<Choice> chosen;
    std::size_t spent = 0;

    // e0 and e1 images of h_n only depend on the earlier choices.
    auto dfs = [&](auto && self, std::size_t n, std::size_t m, const GadgetVertex & e0,
                   const GadgetVertex & e1) -> bool {
        if (n == depth)
            return true;
        const std::size_t length = c[n] + 2ull;
        for (std::size_t top = m + 1; top <= d.size(); ++top) {
            const std::size_t len = top - m;
            if (len >= 20)
                break;
            const std::uint64_t count = std::uint64_t{1} << len;
            for (std::uint64_t a = 0; a < count; ++a)
                for (std::uint64_t b = 0; b < count; ++b) {
                    if (++spent > options.budget)
                        return false;
                    std::array<std::string, 2> s{detail::bits_of(a, len), detail::bits_of(b, len)};
                    auto pa = *position_in_level(d, top, e1.appended(s[0]));
                    auto pb = *position_in_level(d, top, e1.appended(s[1]));
                    auto dist = detail::absdiff(pa, pb);
                    if (dist > length || (length - dist) % 2 != 0)
                        continue;
                    chosen.push_back({top, s, pa, pb});
                    if (self(self, n + 1, top, e0.appended(s[0]), e0.appended(s[1])))
                        return true;
                    chosen.pop_back();
                }
        }
        return false;
    };

    GadgetVertex root{0, ""};
    if (! dfs(dfs, 0, 0, root, root))
        throw Error(ErrorCode::GapInsufficient,
            "no coherent tower of depth " + std::to_string(depth) + " from c = " + c.to_string() + " into d = " +
                d.to_string() + (spent > options.budget ? " within the search budget" : ""));

    EquivalenceTower t;
    t.source = c;
    t.target = d;
    t.level_map.push_back(0);
    t.maps.push_back({root});
    std::map<std::size_t, PathGadget> targets;
    auto target_gadget = [&](std::size_t level) -> const PathGadget & {
        auto it = targets.find(level);
        if (it == targets.end())
            it = targets.emplace(level, PathGadget(d.take(level))).first;
        return it->second;
    };

    for (std::size_t n = 0; n < depth; ++n) {
        const auto & ch = chosen[n];
        const auto & tg = target_gadget(ch.level);
        std::vector<GadgetVertex> join;
        for (auto pos : detail::path_walk(ch.from, ch.to, c[n] + 2ull, tg.vertex_count()))
            join.push_back(tg.at(pos));
        PathGadget lower(c.take(n)), upper(c.take(n + 1));
        t.maps.push_back(detail::extend_map(lower, upper, t.maps.back(), ch.suffix, join));
        t.level_map.push_back(ch.level);
        t.suffixes.push_back(ch.suffix);
        t.joins.push_back(std::move(join));
    }
    return t;
}

[[nodiscard]] inline EquivalenceReport verify_equivalence(const EquivalenceTower & t)
{
    EquivalenceReport r;
    auto fail = [&](std::string s) { r.violations.push_back(std::move(s)); };
    const std::size_t depth = t.suffixes.size();

    if (t.level_map.size() != depth + 1 || t.maps.size() != depth + 1 || t.joins.size() != depth) {
        fail("shape: level map, maps and joins disagree on the depth");
        return r;
    }
    if (depth > t.source.size()) {
        fail("shape: depth exceeds the source prefix");
        return r;
    }
    if (! t.source.all_odd() || ! t.target.all_odd())
        fail("parameter: prefixes must be odd-valued");
    if (t.level_map[0] != 0)
        fail("level map: m(0) must be 0");
    for (std::size_t n = 0; n < depth; ++n) {
        if (t.level_map[n + 1] < t.level_map[n])
            fail("level map: decreases at " + std::to_string(n));
        else
            for (const auto & s : t.suffixes[n])
                if (s.size() != t.level_map[n + 1] - t.level_map[n] || s.find_first_not_of("01") != std::string::npos)
                    fail("suffix: s_" + std::to_string(n) + " has the wrong length or alphabet");
    }
    if (t.level_map.back() > t.target.size()) {
        fail("level map: exceeds the target prefix");
        return r;
    }
    if (! r.violations.empty())
        return r;

    std::vector<PathGadget> src, dst;
    for (std::size_t n = 0; n <= depth; ++n) {
        src.emplace_back(t.source.take(n));
        dst.emplace_back(t.target.take(t.level_map[n]));
    }

    for (std::size_t n = 0; n <= depth; ++n) {
        const auto & map = t.maps[n];
        if (map.size() != src[n].vertex_count()) {
            fail("map: h_" + std::to_string(n) + " has the wrong size");
            continue;
        }
        std::vector<std::size_t> pos;
        bool inside = true;
        for (const auto & v : map) {
            auto p = dst[n].position(v);
            if (! p) {
                fail("map: h_" + std::to_string(n) + " sends a vertex to " + v.label() + ", outside the target");
                inside = false;
                break;
            }
            pos.push_back(*p);
        }
        if (! inside)
            continue;
        for (std::size_t j = 0; j + 1 < pos.size(); ++j) {
            ++r.edges_checked;
            if (detail::absdiff(pos[j], pos[j + 1]) != 1)
                fail("homomorphism: h_" + std::to_string(n) + " breaks edge " + src[n].at(j).label() + " -- " +
                    src[n].at(j + 1).label());
        }
    }

    for (std::size_t n = 0; n < depth; ++n) {
        if (t.maps[n].size() != src[n].vertex_count() || t.maps[n + 1].size() != src[n + 1].vertex_count())
            continue;
        for (int bit = 0; bit < 2; ++bit) {
            auto emb = copy_embed(src[n], src[n + 1], bit);
            for (std::size_t p = 0; p < emb.size(); ++p)
                if (t.maps[n + 1][emb[p]] != t.maps[n][p].appended(t.suffixes[n][bit])) {
                    fail("coherence: h_" + std::to_string(n + 1) + " copy " + std::to_string(bit) +
                        " disagrees with h_" + std::to_string(n) + " at " + src[n].at(p).label());
                    break;
                }
        }

        const auto & join = t.joins[n];
        const std::size_t length = t.source[n] + 2ull;
        if (join.size() != length + 1) {
            fail("join: walk for level " + std::to_string(n) + " has the wrong length");
            continue;
        }
        const auto & tg = dst[n + 1];
        for (std::size_t i = 0; i + 1 < join.size(); ++i) {
            auto a = tg.position(join[i]), b = tg.position(join[i + 1]);
            if (! a || ! b || detail::absdiff(*a, *b) != 1) {
                fail("join: walk for level " + std::to_string(n) + " is not a walk in the target");
                break;
            }
        }
        const std::size_t start = src[n].vertex_count() - 1;
        for (std::size_t i = 0; i < join.size(); ++i)
            if (t.maps[n + 1][start + i] != join[i]) {
                fail("join: h_" + std::to_string(n + 1) + " does not follow the recorded walk");
                break;
            }
    }
    return r;
}

/// Lexicographically least (by target position) homomorphism from `h` into
/// `g` extending `constraints`.
[[nodiscard]] inline std::optional<std::vector<GadgetVertex>> search_hom(const PathGadget & h, const PathGadget & g,
    const std::map<GadgetVertex, GadgetVertex> & constraints)
{
    const std::size_t n = h.vertex_count(), size = g.vertex_count();
    std::vector<std::vector<bool>> domain(n, std::vector<bool>(size, true));
    for (const auto & [from, to] : constraints) {
        auto p = h.require(from);
        auto q = g.require(to);
        std::fill(domain[p].begin(), domain[p].end(), false);
        domain[p][q] = true;
    }

    auto revise = [&](std::size_t from, std::size_t to) {
        std::vector<bool> support(size);
        for (std::size_t q = 0; q < size; ++q)
            if (domain[from][q]) {
                if (q > 0)
                    support[q - 1] = true;
                if (q + 1 < size)
                    support[q + 1] = true;
            }
        for (std::size_t q = 0; q < size; ++q)
            domain[to][q] = domain[to][q] && support[q];
    };
    for (std::size_t i = 0; i + 1 < n; ++i)
        revise(i, i + 1);
    for (std::size_t i = n - 1; i-- > 0;)
        revise(i + 1, i);

    std::vector<std::size_t> assignment(n);
    auto dfs = [&](auto && self, std::size_t i) -> bool {
        if (i == n)
            return true;
        for (std::size_t q = 0; q < size; ++q) {
            if (! domain[i][q])
                continue;
            if (i > 0 && detail::absdiff(assignment[i - 1], q) != 1)
                continue;
            assignment[i] = q;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    if (! dfs(dfs, 0))
        return std::nullopt;
    std::vector<GadgetVertex> out;
    for (auto q : assignment)
        out.push_back(g.at(q));
    return out;
}

} // namespace l0
