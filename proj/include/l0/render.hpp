#pragma once

// DOT, TikZ and JSON drawings.  Gadget vertices are coloured by birth level:
// copies of p0 (born at level 0) share one colour, join vertices born at
// level m take the m-th colour of a fixed palette.

#include <l0/lc_graph.hpp>
#include <l0/serialization.hpp>

#include <array>
#include <sstream>
#include <string>

namespace l0 {

namespace detail {
    inline constexpr std::array<const char *, 8> palette{
        "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    inline constexpr const char * copy_colour = "#bbbbbb";

    inline const char * birth_colour(std::size_t birth)
    {
        return birth == 0 ? copy_colour : palette[(birth - 1) % palette.size()];
    }

    inline std::string gadget_header(const PathGadget & g, const std::string & comment)
    {
        std::ostringstream out;
        out << comment << " L_" << g.level() << " for c = " << g.prefix().to_string() << ": " << g.vertex_count()
            << " vertices, " << g.edge_count() << " edges\n";
        out << comment << " sizes follow V(n+1) = 2 V(n) + c(n) + 1 from the single vertex p0;"
            << " drawings started from a single edge show more vertices\n";
        out << comment << " grey: copies of p0; level m join vertices: palette colour m\n";
        return out.str();
    }

    inline std::string tikz_colour(const char * hex)
    {
        return std::string("{rgb,255:red,") + std::to_string(std::stoi(std::string(hex + 1, 2), nullptr, 16)) +
            ";green," + std::to_string(std::stoi(std::string(hex + 3, 2), nullptr, 16)) + ";blue," +
            std::to_string(std::stoi(std::string(hex + 5, 2), nullptr, 16)) + "}";
    }

    inline std::string dot_quote(const std::string & s)
    {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\')
                out += '\\';
            out += ch;
        }
        return out + "\"";
    }
} // namespace detail

[[nodiscard]] inline std::string gadget_dot(const PathGadget & g)
{
    std::ostringstream out;
    out << detail::gadget_header(g, "//");
    out << "graph L {\n  rankdir=LR;\n  node [shape=circle, style=filled, fontsize=10];\n";
    for (const auto & v : g.vertices())
        out << "  " << detail::dot_quote(v.label()) << " [fillcolor=\"" << detail::birth_colour(g.birth_level(v))
            << "\"];\n";
    for (std::size_t j = 0; j < g.edge_count(); ++j)
        out << "  " << detail::dot_quote(g.at(j).label()) << " -- " << detail::dot_quote(g.at(j + 1).label()) << ";\n";
    out << "}\n";
    return out.str();
}

[[nodiscard]] inline std::string gadget_tikz(const PathGadget & g)
{
    std::ostringstream out;
    out << detail::gadget_header(g, "%");
    out << "\\begin{tikzpicture}[every node/.style={circle, inner sep=1.5pt, draw}]\n";
    for (std::size_t p = 0; p < g.vertex_count(); ++p) {
        const auto & v = g.at(p);
        out << "  \\node[fill=" << detail::tikz_colour(detail::birth_colour(g.birth_level(v))) << ", label=below:{$"
            << "p_{" << v.k << "}" << (v.t.empty() ? "" : "^{" + v.t + "}") << "$}] (v" << p << ") at ("
            << p * 0.8 << ", 0) {};\n";
    }
    for (std::size_t j = 0; j < g.edge_count(); ++j)
        out << "  \\draw (v" << j << ") -- (v" << j + 1 << ");\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

[[nodiscard]] inline Json gadget_json(const PathGadget & g)
{
    Json j;
    j["formatVersion"] = format_version;
    j["c"] = g.prefix().values;
    j["vertices"] = Json::array();
    for (const auto & v : g.vertices())
        j["vertices"].push_back({{"label", v.label()}, {"k", v.k}, {"t", v.t}, {"birth", g.birth_level(v)}});
    j["edges"] = Json::array();
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        j["edges"].push_back({e, e + 1});
    return j;
}

[[nodiscard]] inline std::string level_quotient_dot(const LevelQuotient & q)
{
    std::ostringstream out;
    out << "// depth-" << q.prefix.size() << " classes of the limit graph for c = " << q.prefix.to_string() << "\n";
    out << "graph Q {\n  node [shape=box, style=filled, fontsize=10];\n";
    for (std::size_t i = 0; i < q.classes.size(); ++i) {
        const auto & c = q.classes[i];
        out << "  q" << i << " [label=\"(" << c.m << "," << c.k << "," << (c.bits.empty() ? "-" : c.bits)
            << "...)\", fillcolor=\"" << detail::birth_colour(c.m) << "\"];\n";
    }
    for (auto [a, b] : q.edges)
        out << "  q" << a << " -- q" << b << ";\n";
    out << "}\n";
    return out.str();
}

[[nodiscard]] inline std::string graph_dot(const WitnessedGraph & g)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto & name : g.vertex_names())
        out << "  " << detail::dot_quote(name) << ";\n";
    for (const auto & w : g.witnesses())
        out << "  " << detail::dot_quote(g.vertex_name(w.a)) << " -- " << detail::dot_quote(g.vertex_name(w.b))
            << " [label=" << detail::dot_quote(w.name) << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace l0
