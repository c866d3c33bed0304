#pragma once

// Finite path gadgets.  Level 0 is the single vertex p0; level n+1 is two
// relabelled copies of level n (bit 0 / bit 1 appended to every label) joined
// by a fresh path p0..p_{c(n)} running from (e1)^0 to (e1)^1.  A vertex is
// identified by its label (k, t): the join index k and the copy history t.

#include <l0/error.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace l0 {

struct ParamPrefix {
    std::vector<std::uint32_t> values;

    ParamPrefix() = default;
    ParamPrefix(std::initializer_list<std::uint32_t> v) : values(v) {}
    explicit ParamPrefix(std::vector<std::uint32_t> v) : values(std::move(v)) {}

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return values.at(i); }

    [[nodiscard]] bool all_odd() const noexcept
    {
        for (auto v : values)
            if (v % 2 == 0)
                return false;
        return true;
    }

    [[nodiscard]] ParamPrefix take(std::size_t n) const
    {
        return ParamPrefix(std::vector<std::uint32_t>(values.begin(), values.begin() + std::min(n, values.size())));
    }

    [[nodiscard]] ParamPrefix extended(std::uint32_t v) const
    {
        auto out = values;
        out.push_back(v);
        return ParamPrefix(std::move(out));
    }

    [[nodiscard]] bool starts_with(const ParamPrefix & other) const
    {
        return other.size() <= size() && std::equal(other.values.begin(), other.values.end(), values.begin());
    }

    void require_odd() const
    {
        if (! all_odd())
            throw Error(ErrorCode::NonOddPrefix, "parameter prefix " + to_string() + " has an even value");
    }

    [[nodiscard]] std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < values.size(); ++i)
            s += (i ? "," : "") + std::to_string(values[i]);
        return s + ")";
    }

    /// Comma separated list; the empty string is the empty prefix.
    static ParamPrefix parse(const std::string & text)
    {
        ParamPrefix p;
        if (text.empty())
            return p;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(item, &used);
            }
            catch (const std::exception &) {
                throw Error(ErrorCode::InvalidPrefix, "not a natural number: '" + item + "'");
            }
            if (used != item.size() || v == 0 || v > 1'000'000)
                throw Error(ErrorCode::InvalidPrefix, "parameter values must be naturals >= 1: '" + item + "'");
            p.values.push_back(static_cast<std::uint32_t>(v));
        }
        return p;
    }

    auto operator<=>(const ParamPrefix &) const = default;
};

/// Label (p_k)^t.  `t` holds '0'/'1' characters.
struct GadgetVertex {
    std::uint32_t k = 0;
    std::string t;

    [[nodiscard]] bool is_path_vertex() const noexcept { return t.empty(); }

    [[nodiscard]] GadgetVertex appended(char bit) const { return {k, t + bit}; }
    [[nodiscard]] GadgetVertex appended(const std::string & bits) const { return {k, t + bits}; }

    /// "p3" or "p3^011".
    [[nodiscard]] std::string label() const { return "p" + std::to_string(k) + (t.empty() ? "" : "^" + t); }

    static GadgetVertex parse(const std::string & label)
    {
        if (label.size() < 2 || label[0] != 'p')
            throw Error(ErrorCode::InvalidInput, "bad gadget vertex label '" + label + "'");
        auto caret = label.find('^');
        GadgetVertex v;
        auto digits = label.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorCode::InvalidInput, "bad gadget vertex label '" + label + "'");
        v.k = static_cast<std::uint32_t>(std::stoul(digits));
        if (caret != std::string::npos) {
            v.t = label.substr(caret + 1);
            if (v.t.empty() || v.t.find_first_not_of("01") != std::string::npos)
                throw Error(ErrorCode::InvalidInput, "bad gadget vertex label '" + label + "'");
        }
        return v;
    }

    auto operator<=>(const GadgetVertex &) const = default;
};

} // namespace l0

template <>
struct std::hash<l0::GadgetVertex> {
    std::size_t operator()(const l0::GadgetVertex & v) const noexcept
    {
        return std::hash<std::string>{}(v.t) * 1000003u ^ v.k;
    }
};

namespace l0 {

/// |V(L_n)| from the recursion V(n+1) = 2 V(n) + c(n) + 1, V(0) = 1.
[[nodiscard]] inline std::uint64_t gadget_vertex_count(const ParamPrefix & prefix, std::size_t n)
{
    if (n > prefix.size())
        throw Error(ErrorCode::LevelOutOfRange, "level beyond the parameter prefix");
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i)
        v = 2 * v + prefix[i] + 1;
    return v;
}

/// Position of `v` along L_n (0 at e0, counted in the canonical order) when
/// the label names a vertex of L_n.  Needs only the prefix, not the gadget.
[[nodiscard]] inline std::optional<std::uint64_t> position_in_level(const ParamPrefix & prefix, std::size_t n,
    const GadgetVertex & v)
{
    if (n > prefix.size() || v.t.size() > n)
        return std::nullopt;
    std::size_t birth = n - v.t.size();
    std::uint64_t pos = 0;
    if (birth == 0) {
        if (v.k != 0)
            return std::nullopt;
    }
    else {
        if (v.k > prefix[birth - 1])
            return std::nullopt;
        pos = gadget_vertex_count(prefix, birth - 1) + v.k;
    }
    std::uint64_t size = gadget_vertex_count(prefix, birth);
    for (std::size_t j = 0; j < v.t.size(); ++j) {
        size = 2 * size + prefix[birth + j] + 1;
        if (v.t[j] == '1')
            pos = size - 1 - pos;
        else if (v.t[j] != '0')
            return std::nullopt;
    }
    return pos;
}

enum class VertexKind { PathVertex, NonPathVertex };

class PathGadget {
public:
    PathGadget() : PathGadget(ParamPrefix{}) {}

    explicit PathGadget(ParamPrefix prefix) : prefix_(std::move(prefix))
    {
        for (auto c : prefix_.values)
            if (c == 0)
                throw Error(ErrorCode::InvalidPrefix, "parameter values must be >= 1");

        order_.push_back({0, ""});
        for (std::size_t n = 0; n < prefix_.size(); ++n) {
            std::vector<GadgetVertex> next;
            next.reserve(2 * order_.size() + prefix_[n] + 1);
            for (const auto & v : order_)
                next.push_back(v.appended('0'));
            for (std::uint32_t k = 0; k <= prefix_[n]; ++k)
                next.push_back({k, ""});
            for (auto it = order_.rbegin(); it != order_.rend(); ++it)
                next.push_back(it->appended('1'));
            order_ = std::move(next);
        }

        index_.reserve(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i)
            index_.emplace(order_[i], i);
    }

    [[nodiscard]] const ParamPrefix & prefix() const noexcept { return prefix_; }
    [[nodiscard]] std::size_t level() const noexcept { return prefix_.size(); }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return order_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return order_.size() - 1; }

    /// Canonical order, e0 first, e1 last; edge j joins positions j and j+1.
    [[nodiscard]] std::span<const GadgetVertex> vertices() const noexcept { return order_; }
    [[nodiscard]] const GadgetVertex & at(std::size_t pos) const { return order_.at(pos); }

    [[nodiscard]] std::optional<std::size_t> position(const GadgetVertex & v) const
    {
        auto it = index_.find(v);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    [[nodiscard]] bool contains(const GadgetVertex & v) const { return index_.contains(v); }

    [[nodiscard]] std::size_t require(const GadgetVertex & v) const
    {
        auto p = position(v);
        if (! p)
            throw Error(ErrorCode::UnknownVertex, v.label() + " is not a vertex of L" + prefix_.to_string());
        return *p;
    }

    [[nodiscard]] std::size_t birth_level(const GadgetVertex & v) const { return level() - v.t.size(); }

    [[nodiscard]] std::pair<GadgetVertex, GadgetVertex> endpoints() const { return {order_.front(), order_.back()}; }

    [[nodiscard]] std::size_t e1_position() const noexcept { return order_.size() - 1; }

private:
    ParamPrefix prefix_;
    std::vector<GadgetVertex> order_;
    std::unordered_map<GadgetVertex, std::size_t> index_;
};

[[nodiscard]] inline PathGadget build_gadget(const ParamPrefix & prefix) { return PathGadget(prefix); }

/// Closed form: (p0, p0) at level 0, otherwise p0^{0^{n-1} i}.
[[nodiscard]] inline std::pair<GadgetVertex, GadgetVertex> endpoint_labels(std::size_t n)
{
    if (n == 0)
        return {{0, ""}, {0, ""}};
    std::string zeros(n - 1, '0');
    return {{0, zeros + "0"}, {0, zeros + "1"}};
}

[[nodiscard]] inline std::pair<GadgetVertex, GadgetVertex> endpoints(const PathGadget & g) { return g.endpoints(); }

[[nodiscard]] inline VertexKind classify(const PathGadget & g, const GadgetVertex & v)
{
    (void)g.require(v);
    return v.is_path_vertex() ? VertexKind::PathVertex : VertexKind::NonPathVertex;
}

/// u -> u^(i), as positions of `upper` indexed by positions of `lower`.
[[nodiscard]] inline std::vector<std::size_t> copy_embed(const PathGadget & lower, const PathGadget & upper, int bit)
{
    if (upper.level() != lower.level() + 1 || ! upper.prefix().starts_with(lower.prefix()))
        throw Error(ErrorCode::PrefixMismatch,
            "L" + upper.prefix().to_string() + " does not extend L" + lower.prefix().to_string() + " by one level");
    if (bit != 0 && bit != 1)
        throw Error(ErrorCode::InvalidInput, "copy index must be 0 or 1");
    std::vector<std::size_t> out;
    out.reserve(lower.vertex_count());
    const char b = bit ? '1' : '0';
    for (const auto & v : lower.vertices())
        out.push_back(upper.require(v.appended(b)));
    return out;
}

[[nodiscard]] inline std::size_t gadget_distance(const PathGadget & g, const GadgetVertex & u, const GadgetVertex & v)
{
    auto pu = g.require(u), pv = g.require(v);
    return pu > pv ? pu - pv : pv - pu;
}

struct OddDistanceReport {
    std::size_t pairs_checked = 0;
    std::vector<std::pair<GadgetVertex, GadgetVertex>> violations;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// Siblings (p_k)^t^0 and (p_k)^t^1 lie an odd distance apart whenever every
/// join length is odd.
[[nodiscard]] inline OddDistanceReport check_odd_distance_lemma(const PathGadget & g)
{
    g.prefix().require_odd();
    OddDistanceReport report;
    for (std::size_t pos = 0; pos < g.vertex_count(); ++pos) {
        const auto & v = g.at(pos);
        if (v.t.empty() || v.t.back() != '0')
            continue;
        GadgetVertex sibling{v.k, v.t};
        sibling.t.back() = '1';
        auto other = g.position(sibling);
        if (! other)
            continue;
        ++report.pairs_checked;
        auto d = pos > *other ? pos - *other : *other - pos;
        if (d % 2 == 0)
            report.violations.emplace_back(v, sibling);
    }
    return report;
}

} // namespace l0
