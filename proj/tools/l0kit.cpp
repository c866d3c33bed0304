// l0kit: command-line front end.  Exit codes: 0 success, 1 property-suite
// failure (or no tower found), 2 input error.

#include <l0/checks.hpp>
#include <l0/render.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace l0;

std::string read_input(const std::string & path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const Json & j) { std::cout << j.dump(2) << '\n'; }

VertexSet parse_vertex_list(const WitnessedGraph & g, const std::string & text)
{
    VertexSet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto v = g.find_vertex(item);
        if (! v)
            throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + item + "'");
        out.push_back(*v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Json names(const WitnessedGraph & g, const VertexSet & s)
{
    Json j = Json::array();
    for (auto v : s)
        j.push_back(g.vertex_name(v));
    return j;
}

/// "m:k:prefix:period", e.g. "0:0::0" for (0,0,0^w).
LcVertex parse_lc_vertex(const std::string & text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (! text.empty() && text.back() == ':')
        parts.emplace_back();
    if (parts.size() != 4)
        throw Error(ErrorCode::InvalidInput, "vertex must be written m:k:prefix:period");
    auto natural = [](const std::string & s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
            throw Error(ErrorCode::InvalidInput, "not a natural number: '" + s + "'");
        return static_cast<std::uint32_t>(std::stoul(s));
    };
    return {natural(parts[0]), natural(parts[1]), EpBits(parts[2], parts[3])};
}

Schedule parse_schedule(const std::string & text)
{
    if (text == "default")
        return unbounded_schedule_default();
    return explicit_schedule(ParamPrefix::parse(text).values);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Path gadgets, homomorphism profiles and the odd-cycle dichotomy"};
    app.require_subcommand(1);

    std::string c_text, d_text, graph_path, format = "json", schedule_text = "default", set_text, vertex_text,
                other_text;
    std::size_t depth = 0, cap = 10, budget = PlannerOptions{}.budget;
    std::uint64_t seed = checks::Config{}.seed;
    bool oracle_flag = false, quotient = false;
    std::vector<std::string> only, pins;
    std::optional<std::size_t> k_value;

    auto * gadget = app.add_subcommand("gadget", "build and draw the path gadget for a prefix");
    gadget->add_option("--c", c_text, "parameter prefix, e.g. 1,3,5")->required();
    gadget->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "tikz", "text"}));

    auto * phi = app.add_subcommand("phi", "odd-walk verdicts for a vertex set");
    phi->add_option("--graph", graph_path, "graph file (JSON or edge list, - for stdin)")->required();
    phi->add_option("--set", set_text, "comma separated vertex ids");
    phi->add_option("--k", k_value, "also evaluate the bounded form for this k");

    auto * homset = app.add_subcommand("homset", "homomorphism profile of a gadget into a graph");
    homset->add_option("--graph", graph_path)->required();
    homset->add_option("--c", c_text, "parameter prefix")->required();
    homset->add_option("--cap", cap, "number of homomorphisms to list");
    homset->add_option("--pin", pins, "restrict a gadget vertex, e.g. p0^0=a");

    auto * dich = app.add_subcommand("dichotomy", "2-colouring or a coherent tower of homomorphisms");
    dich->add_option("--graph", graph_path)->required();
    dich->add_option("--depth", depth, "tower depth")->default_val(3);
    dich->add_option("--schedule", schedule_text, "'default' or explicit list of lower bounds");

    auto * lc = app.add_subcommand("lc", "neighbourhoods in the limit graph");
    lc->add_option("--c", c_text, "parameter prefix")->required();
    lc->add_option("--vertex", vertex_text, "m:k:prefix:period");
    lc->add_option("--other", other_text, "second vertex for adjacency and components");
    lc->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto * equiv = app.add_subcommand("equiv", "plan and verify a tower of gadget homomorphisms");
    equiv->add_option("--c", c_text, "source prefix")->required();
    equiv->add_option("--d", d_text, "target prefix")->required();
    equiv->add_option("--depth", depth)->required();
    equiv->add_option("--budget", budget, "search budget");

    auto * render = app.add_subcommand("render", "DOT drawing of a graph or a level quotient");
    render->add_option("--graph", graph_path);
    render->add_option("--c", c_text);
    render->add_flag("--quotient", quotient, "draw the depth-|c| quotient of the limit graph");

    auto * check = app.add_subcommand("check", "run the property suites");
    check->add_option("--seed", seed);
    check->add_flag("--oracle", oracle_flag, "add brute-force cross-checks");
    check->add_option("--only", only, "restrict to a suite")->check(CLI::IsMember(checks::suite_names()));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), 2);
    }

    try {
        if (*gadget) {
            PathGadget g(ParamPrefix::parse(c_text));
            if (format == "dot")
                std::cout << gadget_dot(g);
            else if (format == "tikz")
                std::cout << gadget_tikz(g);
            else if (format == "text") {
                for (std::size_t p = 0; p < g.vertex_count(); ++p)
                    std::cout << (p ? " -- " : "") << g.at(p).label();
                std::cout << '\n';
            }
            else
                emit(gadget_json(g));
            return 0;
        }

        if (*phi) {
            auto g = parse_graph(read_input(graph_path));
            auto a = parse_vertex_list(g, set_text);
            auto verdict = phi_bound(g, a);
            Json j;
            j["formatVersion"] = format_version;
            j["set"] = names(g, a);
            j["noOddWalk"] = verdict.no_odd_walk();
            j["minOddLength"] = verdict.min_odd_length ? Json(*verdict.min_odd_length) : Json();
            if (k_value)
                j["phiHolds"] = phi_holds(g, a, *k_value);
            j["closure"] = names(g, invariant_closure(g, a));
            if (verdict.no_odd_walk())
                j["supersetColouring"] = to_json(g, bipartite_superset_colouring(g, a).colouring);
            auto cert = bipartite_certificate(g);
            if (auto col = std::get_if<Coloring>(&cert))
                j["certificate"] = {{"coloring", to_json(g, *col)}};
            else
                j["certificate"] = {{"oddClosedWalk", to_json(g, std::get<Walk>(cert))}};
            emit(j);
            return 0;
        }

        if (*homset) {
            auto g = std::make_shared<const WitnessedGraph>(parse_graph(read_input(graph_path)));
            auto h = std::make_shared<const PathGadget>(ParamPrefix::parse(c_text));
            auto p = all_homs(h, g);
            if (! pins.empty()) {
                auto vm = p.vertex_masks();
                for (const auto & pin_text : pins) {
                    auto eq = pin_text.find('=');
                    if (eq == std::string::npos)
                        throw Error(ErrorCode::InvalidInput, "pin must be label=vertex");
                    auto pos = h->require(GadgetVertex::parse(pin_text.substr(0, eq)));
                    auto v = g->find_vertex(pin_text.substr(eq + 1));
                    if (! v)
                        throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + pin_text.substr(eq + 1) + "'");
                    for (std::size_t u = 0; u < vm[pos].size(); ++u)
                        vm[pos][u] = vm[pos][u] && u == *v;
                }
                p = HomProfile(h, g, std::move(vm), p.witness_masks());
            }
            Json j;
            j["formatVersion"] = format_version;
            j["count"] = count(p).str();
            j["profile"] = to_json(p);
            auto tiny = is_tiny(p);
            j["tiny"] = tiny.tiny;
            if (tiny.position)
                j["tinyAt"] = h->at(*tiny.position).label();
            auto large = is_large(p);
            j["large"] = large.large;
            if (large.witness)
                j["largeWitness"] = to_json(*h, *g, *large.witness);
            auto e = enumerate(p, cap);
            j["homs"] = Json::array();
            for (const auto & phi_hom : e.homs)
                j["homs"].push_back(to_json(*h, *g, phi_hom));
            emit(j);
            return 0;
        }

        if (*dich) {
            auto g = parse_graph(read_input(graph_path));
            auto decision = decide(g, depth, parse_schedule(schedule_text));
            Json j;
            j["formatVersion"] = format_version;
            if (auto col = std::get_if<Coloring>(&decision))
                j["coloring"] = to_json(g, *col);
            else {
                const auto & t = std::get<Tower>(decision);
                j["tower"] = to_json(t, g);
                j["verified"] = verify_tower(t, g).passed();
            }
            emit(j);
            return 0;
        }

        if (*lc) {
            auto prefix = ParamPrefix::parse(c_text);
            if (format == "dot") {
                std::cout << level_quotient_dot(level_quotient(prefix));
                return 0;
            }
            if (vertex_text.empty())
                throw Error(ErrorCode::InvalidInput, "--vertex is required for JSON output");
            auto v = parse_lc_vertex(vertex_text);
            Json j;
            j["formatVersion"] = format_version;
            j["c"] = prefix.values;
            j["vertex"] = to_json(v);
            j["neighbours"] = Json::array();
            for (const auto & w : neighbours(v, prefix))
                j["neighbours"].push_back(to_json(w));
            if (! other_text.empty()) {
                auto w = parse_lc_vertex(other_text);
                j["other"] = to_json(w);
                j["adjacent"] = adjacent(v, w, prefix);
                j["sameComponent"] = same_component(v, w, prefix);
            }
            emit(j);
            return 0;
        }

        if (*equiv) {
            auto c = ParamPrefix::parse(c_text);
            auto d = ParamPrefix::parse(d_text);
            Json j;
            j["formatVersion"] = format_version;
            try {
                auto t = plan_equivalence(c, d, depth, {budget});
                auto report = verify_equivalence(t);
                j["tower"] = to_json(t);
                j["verified"] = report.passed();
                emit(j);
                return report.passed() ? 0 : 1;
            }
            catch (const Error & e) {
                if (e.code() != ErrorCode::GapInsufficient)
                    throw;
                j["gap"] = e.what();
                emit(j);
                return 1;
            }
        }

        if (*render) {
            if (quotient || graph_path.empty())
                std::cout << level_quotient_dot(level_quotient(ParamPrefix::parse(c_text)));
            else
                std::cout << graph_dot(parse_graph(read_input(graph_path)));
            return 0;
        }

        if (*check) {
            checks::Config cfg{seed, oracle_flag};
            auto results = checks::run_all(cfg, only);
            auto j = checks::report_json(cfg, results);
            emit(j);
            return j["passed"].get<bool>() ? 0 : 1;
        }
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
