#pragma once

// The limit graph on triples (m, k, x): m is the level where the vertex was
// born on a join path, k its index on that join, x the infinite copy history.
// Only eventually periodic x are represented, which keeps adjacency and
// component membership decidable.

#include <l0/gadget.hpp>

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace l0 {

/// Infinite binary word prefix . period^omega, kept in canonical form
/// (primitive period, shortest prefix) so that == is word equality.
class EpBits {
public:
    EpBits() : period_("0") {}

    EpBits(std::string prefix, std::string period) : prefix_(std::move(prefix)), period_(std::move(period))
    {
        if (period_.empty())
            throw Error(ErrorCode::InvalidInput, "period must be nonempty");
        if (prefix_.find_first_not_of("01") != std::string::npos ||
            period_.find_first_not_of("01") != std::string::npos)
            throw Error(ErrorCode::InvalidInput, "bits must be '0' or '1'");
        canonicalise();
    }

    static EpBits constant(char bit) { return {"", std::string(1, bit)}; }

    [[nodiscard]] const std::string & prefix() const noexcept { return prefix_; }
    [[nodiscard]] const std::string & period() const noexcept { return period_; }

    [[nodiscard]] char at(std::size_t i) const
    {
        if (i < prefix_.size())
            return prefix_[i];
        return period_[(i - prefix_.size()) % period_.size()];
    }

    /// First n letters.
    [[nodiscard]] std::string take(std::size_t n) const
    {
        std::string s;
        s.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            s.push_back(at(i));
        return s;
    }

    /// The word with its first n letters removed.
    [[nodiscard]] EpBits shifted(std::size_t n) const
    {
        if (n <= prefix_.size())
            return {prefix_.substr(n), period_};
        auto r = (n - prefix_.size()) % period_.size();
        return {"", period_.substr(r) + period_.substr(0, r)};
    }

    [[nodiscard]] EpBits prepended(const std::string & bits) const { return {bits + prefix_, period_}; }

    [[nodiscard]] std::optional<std::size_t> first_one() const
    {
        if (auto i = prefix_.find('1'); i != std::string::npos)
            return i;
        if (auto i = period_.find('1'); i != std::string::npos)
            return prefix_.size() + i;
        return std::nullopt;
    }

    /// "0110(10)" style.
    [[nodiscard]] std::string to_string() const { return prefix_ + "(" + period_ + ")"; }

    auto operator<=>(const EpBits &) const = default;

private:
    void canonicalise()
    {
        const auto p = period_.size();
        for (std::size_t d = 1; d <= p; ++d) {
            if (p % d)
                continue;
            bool repeats = true;
            for (std::size_t i = d; i < p && repeats; ++i)
                repeats = period_[i] == period_[i - d];
            if (repeats) {
                period_.resize(d);
                break;
            }
        }
        while (! prefix_.empty() && prefix_.back() == period_.back()) {
            period_ = period_.back() + period_.substr(0, period_.size() - 1);
            prefix_.pop_back();
        }
    }

    std::string prefix_;
    std::string period_;
};

struct LcVertex {
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    EpBits x;

    [[nodiscard]] std::string to_string() const
    {
        return "(" + std::to_string(m) + "," + std::to_string(k) + "," + x.to_string() + ")";
    }

    auto operator<=>(const LcVertex &) const = default;
};

/// (m=0, k=0) or (1 <= m <= |prefix|, k <= c(m-1)).
[[nodiscard]] inline bool is_valid_vertex(const LcVertex & v, const ParamPrefix & prefix)
{
    if (v.m == 0)
        return v.k == 0;
    return v.m <= prefix.size() && v.k <= prefix[v.m - 1];
}

inline void require_valid_vertex(const LcVertex & v, const ParamPrefix & prefix)
{
    if (! is_valid_vertex(v, prefix))
        throw Error(ErrorCode::InvalidVertex, v.to_string() + " is not a vertex for c = " + prefix.to_string());
}

/// (p_k)^ x restricted to n - m letters, a vertex of L_n.
[[nodiscard]] inline GadgetVertex project_level(const LcVertex & v, std::size_t n, const ParamPrefix & prefix)
{
    if (v.m > n || n > prefix.size())
        throw Error(ErrorCode::LevelOutOfRange,
            "cannot project " + v.to_string() + " to level " + std::to_string(n));
    require_valid_vertex(v, prefix);
    return {v.k, v.x.take(n - v.m)};
}

/// Adjacent at level max(m_a, m_b) and copied into the same half at every
/// later level, i.e. the shifted tails agree.
[[nodiscard]] inline bool adjacent(const LcVertex & a, const LcVertex & b, const ParamPrefix & prefix)
{
    require_valid_vertex(a, prefix);
    require_valid_vertex(b, prefix);
    const std::size_t top = std::max(a.m, b.m);
    auto pa = position_in_level(prefix, top, project_level(a, top, prefix));
    auto pb = position_in_level(prefix, top, project_level(b, top, prefix));
    if (*pa + 1 != *pb && *pb + 1 != *pa)
        return false;
    return a.x.shifted(top - a.m) == b.x.shifted(top - b.m);
}

namespace detail {
    /// Endpoint e1 of level m-1 with bit i appended, as a level-m suffix.
    inline std::string join_anchor(std::uint32_t m, char i)
    {
        if (m == 1)
            return std::string(1, i);
        return std::string(m - 2, '0') + "1" + i;
    }

    struct NeighbourScan {
        std::vector<LcVertex> found;
        bool truncated = false;
    };

    /// Neighbours with birth level at most `limit`; `truncated` records that
    /// one was dropped for being born later.
    inline NeighbourScan scan_neighbours(const LcVertex & v, const ParamPrefix & prefix, std::size_t limit)
    {
        NeighbourScan out;
        auto add = [&](std::uint32_t m, char bit, EpBits tail) {
            if (m > limit || m > prefix.size()) {
                out.truncated = true;
                return;
            }
            std::uint32_t k = bit == '0' ? 0 : prefix[m - 1];
            out.found.push_back({m, k, std::move(tail)});
        };

        if (v.m >= 1) {
            const auto c = prefix[v.m - 1];
            if (v.k >= 1)
                out.found.push_back({v.m, v.k - 1, v.x});
            else
                out.found.push_back({0, 0, v.x.prepended(join_anchor(v.m, '0'))});
            if (v.k < c)
                out.found.push_back({v.m, v.k + 1, v.x});
            else
                out.found.push_back({0, 0, v.x.prepended(join_anchor(v.m, '1'))});
        }
        else {
            // Born at level 0: attached to the level-1 join by its first bit,
            // and to the join of level f+2 when its first 1 sits at index f.
            add(1, v.x.at(0), v.x.shifted(1));
            if (auto f = v.x.first_one()) {
                auto m = static_cast<std::uint32_t>(*f + 2);
                add(m, v.x.at(*f + 1), v.x.shifted(m));
            }
        }
        std::sort(out.found.begin(), out.found.end());
        return out;
    }
} // namespace detail

/// Exact neighbour list, sorted.  Throws LevelOutOfRange when a neighbour is
/// born beyond the supplied prefix and so cannot be validated.
[[nodiscard]] inline std::vector<LcVertex> neighbours(const LcVertex & v, const ParamPrefix & prefix)
{
    require_valid_vertex(v, prefix);
    auto scan = detail::scan_neighbours(v, prefix, prefix.size());
    if (scan.truncated)
        throw Error(ErrorCode::LevelOutOfRange,
            "a neighbour of " + v.to_string() + " is born beyond c = " + prefix.to_string());
    return scan.found;
}

/// x_a = t0^x and x_b = t1^x with |t0| - |t1| = m_b - m_a.
[[nodiscard]] inline bool same_component(const LcVertex & a, const LcVertex & b, const ParamPrefix & prefix)
{
    require_valid_vertex(a, prefix);
    require_valid_vertex(b, prefix);
    const long long delta = static_cast<long long>(b.m) - static_cast<long long>(a.m);
    long long j = std::max<long long>({0, -delta, static_cast<long long>(a.x.prefix().size()) - delta,
        static_cast<long long>(b.x.prefix().size())});
    // Past both prefixes the words are purely periodic, where equality under a
    // common shift does not depend on the shift.
    return a.x.shifted(static_cast<std::size_t>(j + delta)) == b.x.shifted(static_cast<std::size_t>(j));
}

/// A depth-n class: all vertices agreeing on (m, k, x restricted to n - m).
struct LcClass {
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    std::string bits;

    auto operator<=>(const LcClass &) const = default;
};

struct LevelQuotient {
    ParamPrefix prefix;
    std::vector<LcClass> classes;              // in gadget order
    std::vector<GadgetVertex> gadget_vertices; // classes[i] <-> gadget_vertices[i]
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// The truncation of the limit graph at depth |prefix|, with its canonical
/// correspondence to the vertices of the gadget of that level.
[[nodiscard]] inline LevelQuotient level_quotient(const ParamPrefix & prefix)
{
    const std::size_t n = prefix.size();
    PathGadget gadget(prefix);
    LevelQuotient q;
    q.prefix = prefix;
    std::map<LcClass, std::size_t> index;
    for (const auto & v : gadget.vertices()) {
        LcClass cls{static_cast<std::uint32_t>(n - v.t.size()), v.k, v.t};
        index.emplace(cls, q.classes.size());
        q.classes.push_back(cls);
        q.gadget_vertices.push_back(v);
    }
    for (std::size_t i = 0; i < q.classes.size(); ++i) {
        const auto & cls = q.classes[i];
        LcVertex rep{cls.m, cls.k, EpBits(cls.bits, "0")};
        for (const auto & w : detail::scan_neighbours(rep, prefix, n).found) {
            LcClass wc{w.m, w.k, w.x.take(n - w.m)};
            auto j = index.at(wc);
            if (i < j)
                q.edges.emplace_back(i, j);
        }
    }
    std::sort(q.edges.begin(), q.edges.end());
    return q;
}

struct SiblingReport {
    GadgetVertex first;
    GadgetVertex second;
    std::size_t distance = 0;

    [[nodiscard]] bool odd() const noexcept { return distance % 2 == 1; }
};

/// Distance in the top-level quotient between (p_k)^t^0 and (p_k)^t^1.
[[nodiscard]] inline SiblingReport odd_sibling_obstruction(const ParamPrefix & prefix, std::uint32_t k,
    const std::string & t)
{
    prefix.require_odd();
    auto q = level_quotient(prefix);
    SiblingReport report{{k, t + "0"}, {k, t + "1"}, 0};
    auto find = [&](const GadgetVertex & v) {
        for (std::size_t i = 0; i < q.gadget_vertices.size(); ++i)
            if (q.gadget_vertices[i] == v)
                return i;
        throw Error(ErrorCode::InvalidVertex, v.label() + " is not a vertex at the top level");
    };
    auto src = find(report.first), dst = find(report.second);

    std::vector<std::vector<std::size_t>> adj(q.classes.size());
    for (auto [a, b] : q.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::size_t> dist(q.classes.size(), std::numeric_limits<std::size_t>::max());
    std::queue<std::size_t> bfs;
    dist[src] = 0;
    bfs.push(src);
    while (! bfs.empty()) {
        auto v = bfs.front();
        bfs.pop();
        for (auto w : adj[v])
            if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                dist[w] = dist[v] + 1;
                bfs.push(w);
            }
    }
    report.distance = dist[dst];
    return report;
}

} // namespace l0
