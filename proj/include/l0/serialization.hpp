#pragma once

// JSON forms of the library types.  Objects keep insertion order, so gadget
// assignments appear from e0 to e1 and output is stable across runs.

#include <l0/dichotomy.hpp>
#include <l0/equiv.hpp>
#include <l0/homset.hpp>
#include <l0/lc_graph.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace l0 {

using Json = nlohmann::ordered_json;

inline constexpr int format_version = 1;

namespace detail {
    [[noreturn]] inline void bad_json(const std::string & what)
    {
        throw Error(ErrorCode::InvalidInput, "malformed input: " + what);
    }

    inline const Json & field(const Json & j, const char * name)
    {
        if (! j.is_object() || ! j.contains(name))
            bad_json(std::string("missing field '") + name + "'");
        return j.at(name);
    }

    inline std::string as_string(const Json & j, const std::string & what)
    {
        if (! j.is_string())
            bad_json(what + " must be a string");
        return j.get<std::string>();
    }

    inline std::uint32_t as_natural(const Json & j, const std::string & what)
    {
        if (! j.is_number_unsigned())
            bad_json(what + " must be a natural number");
        return j.get<std::uint32_t>();
    }

    inline std::string edge_label(const PathGadget & h, std::size_t j)
    {
        return h.at(j).label() + "--" + h.at(j + 1).label();
    }
} // namespace detail

// ---- graphs --------------------------------------------------------------

[[nodiscard]] inline Json to_json(const WitnessedGraph & g)
{
    Json j;
    j["vertices"] = g.vertex_names();
    j["witnesses"] = Json::array();
    for (const auto & w : g.witnesses())
        j["witnesses"].push_back({{"id", w.name}, {"ends", {g.vertex_name(w.a), g.vertex_name(w.b)}}});
    return j;
}

[[nodiscard]] inline WitnessedGraph graph_from_json(const Json & j)
{
    const auto & vs = detail::field(j, "vertices");
    const auto & ws = detail::field(j, "witnesses");
    if (! vs.is_array() || ! ws.is_array())
        detail::bad_json("'vertices' and 'witnesses' must be arrays");
    std::vector<std::string> names;
    for (const auto & v : vs)
        names.push_back(detail::as_string(v, "vertex id"));
    std::vector<std::tuple<std::string, std::string, std::string>> raw;
    for (const auto & w : ws) {
        const auto & ends = detail::field(w, "ends");
        if (! ends.is_array() || ends.size() != 2)
            detail::bad_json("'ends' must list two vertex ids");
        raw.emplace_back(detail::as_string(detail::field(w, "id"), "witness id"),
            detail::as_string(ends[0], "witness end"), detail::as_string(ends[1], "witness end"));
    }
    return WitnessedGraph::from_names(std::move(names), raw);
}

/// One "u v" pair per line; blank lines and '#' comments are skipped.
/// Vertices are named in order of first appearance, witnesses w0, w1, ...
[[nodiscard]] inline WitnessedGraph graph_from_edge_list(const std::string & text)
{
    std::vector<std::string> names;
    std::vector<std::tuple<std::string, std::string, std::string>> raw;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto note = [&](const std::string & v) {
        if (std::find(names.begin(), names.end(), v) == names.end())
            names.push_back(v);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream fields(line);
        std::string u, v, extra;
        if (! (fields >> u))
            continue;
        if (! (fields >> v) || (fields >> extra))
            throw Error(ErrorCode::InvalidInput, "line " + std::to_string(line_no) + ": expected 'u v'");
        note(u);
        note(v);
        raw.emplace_back("w" + std::to_string(raw.size()), u, v);
    }
    return WitnessedGraph::from_names(std::move(names), raw);
}

/// JSON when the text starts with '{', otherwise an edge list.
[[nodiscard]] inline WitnessedGraph parse_graph(const std::string & text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_edge_list(text);
}

[[nodiscard]] inline Json to_json(const WitnessedGraph & g, const Coloring & col)
{
    Json j = Json::object();
    for (const auto & [v, c] : col.colours)
        j[g.vertex_name(v)] = c;
    return j;
}

[[nodiscard]] inline Coloring coloring_from_json(const WitnessedGraph & g, const Json & j)
{
    if (! j.is_object())
        detail::bad_json("colouring must be an object");
    Coloring col;
    for (const auto & [name, c] : j.items()) {
        auto v = g.find_vertex(name);
        if (! v)
            throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
        col.colours[*v] = detail::as_natural(c, "colour");
    }
    return col;
}

[[nodiscard]] inline Json to_json(const WitnessedGraph & g, const Walk & w)
{
    Json j;
    j["vertices"] = Json::array();
    for (auto v : w.vertices)
        j["vertices"].push_back(g.vertex_name(v));
    j["witnesses"] = Json::array();
    for (auto e : w.witnesses)
        j["witnesses"].push_back(g.witness(e).name);
    return j;
}

[[nodiscard]] inline Walk walk_from_json(const WitnessedGraph & g, const Json & j)
{
    Walk w;
    for (const auto & v : detail::field(j, "vertices")) {
        auto id = g.find_vertex(detail::as_string(v, "vertex id"));
        if (! id)
            throw Error(ErrorCode::UnknownVertex, "unknown vertex " + v.dump());
        w.vertices.push_back(*id);
    }
    for (const auto & e : detail::field(j, "witnesses")) {
        auto id = g.find_witness(detail::as_string(e, "witness id"));
        if (! id)
            throw Error(ErrorCode::InvalidInput, "unknown witness " + e.dump());
        w.witnesses.push_back(*id);
    }
    if (! is_valid_walk(g, w))
        throw Error(ErrorCode::InvalidInput, "not a walk in the graph");
    return w;
}

// ---- homomorphisms and profiles -----------------------------------------

[[nodiscard]] inline Json to_json(const PathGadget & h, const WitnessedGraph & g, const Hom & phi)
{
    Json j;
    j["vertexAssignments"] = Json::object();
    for (std::size_t p = 0; p < h.vertex_count(); ++p)
        j["vertexAssignments"][h.at(p).label()] = g.vertex_name(phi.vertices.at(p));
    j["witnessAssignments"] = Json::object();
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        j["witnessAssignments"][detail::edge_label(h, e)] = g.witness(phi.witnesses.at(e)).name;
    return j;
}

[[nodiscard]] inline Hom hom_from_json(const PathGadget & h, const WitnessedGraph & g, const Json & j)
{
    const auto & va = detail::field(j, "vertexAssignments");
    const auto & wa = detail::field(j, "witnessAssignments");
    if (va.size() != h.vertex_count() || wa.size() != h.edge_count())
        detail::bad_json("assignment sizes do not match the gadget");
    Hom phi;
    for (std::size_t p = 0; p < h.vertex_count(); ++p) {
        auto label = h.at(p).label();
        if (! va.contains(label))
            detail::bad_json("no image for " + label);
        auto v = g.find_vertex(detail::as_string(va.at(label), "vertex id"));
        if (! v)
            throw Error(ErrorCode::UnknownVertex, "unknown vertex " + va.at(label).dump());
        phi.vertices.push_back(*v);
    }
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto label = detail::edge_label(h, e);
        if (! wa.contains(label))
            detail::bad_json("no witness for " + label);
        auto w = g.find_witness(detail::as_string(wa.at(label), "witness id"));
        if (! w)
            throw Error(ErrorCode::InvalidInput, "unknown witness " + wa.at(label).dump());
        phi.witnesses.push_back(*w);
    }
    if (! is_hom(h, g, phi))
        throw Error(ErrorCode::NotHomomorphism, "assignment is not a homomorphism");
    return phi;
}

[[nodiscard]] inline Json to_json(const HomProfile & p)
{
    const auto & h = p.gadget();
    const auto & g = p.graph();
    Json j;
    j["c"] = h.prefix().values;
    j["empty"] = p.empty();
    j["vertexSets"] = Json::object();
    for (std::size_t pos = 0; pos < h.vertex_count(); ++pos) {
        Json names = Json::array();
        for (auto v : p.vertex_set(pos))
            names.push_back(g.vertex_name(v));
        j["vertexSets"][h.at(pos).label()] = names;
    }
    j["witnessSets"] = Json::object();
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        Json names = Json::array();
        for (auto w : p.witness_set(e))
            names.push_back(g.witness(w).name);
        j["witnessSets"][detail::edge_label(h, e)] = names;
    }
    return j;
}

[[nodiscard]] inline HomProfile profile_from_json(GraphPtr graph, const Json & j)
{
    std::vector<std::uint32_t> c;
    for (const auto & v : detail::field(j, "c"))
        c.push_back(detail::as_natural(v, "parameter"));
    auto gadget = std::make_shared<const PathGadget>(ParamPrefix(std::move(c)));
    const auto & g = *graph;
    const auto & vs = detail::field(j, "vertexSets");
    const auto & ws = detail::field(j, "witnessSets");
    std::vector<HomProfile::Mask> vm(gadget->vertex_count(), HomProfile::Mask(g.vertex_count()));
    std::vector<HomProfile::Mask> wm(gadget->edge_count(), HomProfile::Mask(g.witness_count()));
    for (std::size_t pos = 0; pos < gadget->vertex_count(); ++pos) {
        auto label = gadget->at(pos).label();
        if (! vs.contains(label))
            detail::bad_json("no vertex set for " + label);
        for (const auto & name : vs.at(label)) {
            auto v = g.find_vertex(detail::as_string(name, "vertex id"));
            if (! v)
                throw Error(ErrorCode::UnknownVertex, "unknown vertex " + name.dump());
            vm[pos][*v] = true;
        }
    }
    for (std::size_t e = 0; e < gadget->edge_count(); ++e) {
        auto label = detail::edge_label(*gadget, e);
        if (! ws.contains(label))
            detail::bad_json("no witness set for " + label);
        for (const auto & name : ws.at(label)) {
            auto w = g.find_witness(detail::as_string(name, "witness id"));
            if (! w)
                throw Error(ErrorCode::InvalidInput, "unknown witness " + name.dump());
            wm[e][*w] = true;
        }
    }
    return HomProfile(std::move(gadget), std::move(graph), std::move(vm), std::move(wm));
}

// ---- towers --------------------------------------------------------------

[[nodiscard]] inline Json to_json(const Tower & t, const WitnessedGraph & g)
{
    Json j;
    j["formatVersion"] = format_version;
    j["c"] = t.prefix.values;
    j["schedule"] = t.schedule;
    j["levels"] = Json::array();
    for (std::size_t n = 0; n < t.levels.size(); ++n)
        j["levels"].push_back(to_json(PathGadget(t.prefix.take(n)), g, t.levels[n]));
    return j;
}

[[nodiscard]] inline Tower tower_from_json(const WitnessedGraph & g, const Json & j)
{
    Tower t;
    std::vector<std::uint32_t> c;
    for (const auto & v : detail::field(j, "c"))
        c.push_back(detail::as_natural(v, "parameter"));
    t.prefix = ParamPrefix(std::move(c));
    if (j.contains("schedule"))
        for (const auto & v : j.at("schedule"))
            t.schedule.push_back(detail::as_natural(v, "schedule value"));
    const auto & levels = detail::field(j, "levels");
    if (! levels.is_array() || levels.size() != t.prefix.size() + 1)
        detail::bad_json("expected one level per prefix entry plus the root");
    for (std::size_t n = 0; n < levels.size(); ++n)
        t.levels.push_back(hom_from_json(PathGadget(t.prefix.take(n)), g, levels[n]));
    return t;
}

// ---- limit-graph vertices ------------------------------------------------

[[nodiscard]] inline Json to_json(const LcVertex & v)
{
    return {{"m", v.m}, {"k", v.k}, {"x", {{"prefix", v.x.prefix()}, {"period", v.x.period()}}}};
}

[[nodiscard]] inline LcVertex lc_vertex_from_json(const Json & j)
{
    const auto & x = detail::field(j, "x");
    return {detail::as_natural(detail::field(j, "m"), "m"), detail::as_natural(detail::field(j, "k"), "k"),
        EpBits(detail::as_string(detail::field(x, "prefix"), "prefix"),
            detail::as_string(detail::field(x, "period"), "period"))};
}

// ---- equivalence towers --------------------------------------------------

[[nodiscard]] inline Json to_json(const EquivalenceTower & t)
{
    Json j;
    j["formatVersion"] = format_version;
    j["source"] = t.source.values;
    j["target"] = t.target.values;
    j["levelMap"] = t.level_map;
    j["suffixes"] = Json::array();
    for (const auto & s : t.suffixes)
        j["suffixes"].push_back({s[0], s[1]});
    j["joins"] = Json::array();
    for (const auto & walk : t.joins) {
        Json w = Json::array();
        for (const auto & v : walk)
            w.push_back(v.label());
        j["joins"].push_back(w);
    }
    j["maps"] = Json::array();
    for (std::size_t n = 0; n < t.maps.size(); ++n) {
        PathGadget src(t.source.take(n));
        Json m = Json::object();
        for (std::size_t p = 0; p < t.maps[n].size() && p < src.vertex_count(); ++p)
            m[src.at(p).label()] = t.maps[n][p].label();
        j["maps"].push_back(m);
    }
    return j;
}

[[nodiscard]] inline EquivalenceTower equivalence_from_json(const Json & j)
{
    auto prefix = [](const Json & arr) {
        std::vector<std::uint32_t> c;
        for (const auto & v : arr)
            c.push_back(detail::as_natural(v, "parameter"));
        return ParamPrefix(std::move(c));
    };
    auto label = [](const Json & s) { return GadgetVertex::parse(detail::as_string(s, "gadget label")); };

    EquivalenceTower t;
    t.source = prefix(detail::field(j, "source"));
    t.target = prefix(detail::field(j, "target"));
    for (const auto & v : detail::field(j, "levelMap"))
        t.level_map.push_back(detail::as_natural(v, "level"));
    for (const auto & s : detail::field(j, "suffixes")) {
        if (! s.is_array() || s.size() != 2)
            detail::bad_json("each suffix entry lists two strings");
        t.suffixes.push_back({detail::as_string(s[0], "suffix"), detail::as_string(s[1], "suffix")});
    }
    for (const auto & walk : detail::field(j, "joins")) {
        std::vector<GadgetVertex> w;
        for (const auto & v : walk)
            w.push_back(label(v));
        t.joins.push_back(std::move(w));
    }
    const auto & maps = detail::field(j, "maps");
    for (std::size_t n = 0; n < maps.size(); ++n) {
        if (n > t.source.size())
            detail::bad_json("more maps than source levels");
        PathGadget src(t.source.take(n));
        std::vector<GadgetVertex> m;
        for (std::size_t p = 0; p < src.vertex_count(); ++p) {
            auto key = src.at(p).label();
            if (! maps[n].contains(key))
                detail::bad_json("map " + std::to_string(n) + " has no image for " + key);
            m.push_back(label(maps[n].at(key)));
        }
        t.maps.push_back(std::move(m));
    }
    return t;
}

} // namespace l0
