#pragma once

// Property suites.  Each check draws from its own generator, seeded from the
// run seed and the check's name, so results do not depend on which other
// checks ran.  The oracle flag only appends cross-checks against the slow
// reference implementations; it never changes the verdict of a base check.

#include <l0/dichotomy.hpp>
#include <l0/equiv.hpp>
#include <l0/oracle.hpp>
#include <l0/serialization.hpp>

#include <functional>
#include <string>
#include <vector>

namespace l0::checks {

using oracle::Rng;

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::string detail; // first violation, or a summary
};

struct Config {
    std::uint64_t seed = 20240601;
    bool oracle = false;
};

[[nodiscard]] inline Rng make_rng(std::uint64_t seed, const std::string & name)
{
    std::uint64_t h = 1469598103934665603ull; // FNV-1a of the check name
    for (unsigned char ch : name)
        h = (h ^ ch) * 1099511628211ull;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return Rng(seq);
}

/// Accumulates trials and keeps the first failure message.
class Tally {
public:
    Tally(std::string suite, std::string name) { result_.suite = std::move(suite), result_.name = std::move(name); }

    void trial() { ++result_.trials; }

    void expect(bool ok, const std::function<std::string()> & what)
    {
        if (ok)
            return;
        if (result_.violations++ == 0)
            result_.detail = what();
    }

    void note(std::string summary)
    {
        if (result_.violations == 0)
            result_.detail = std::move(summary);
    }

    [[nodiscard]] CheckResult finish()
    {
        result_.passed = result_.violations == 0;
        return result_;
    }

private:
    CheckResult result_;
};

namespace detail {
    inline std::string graph_text(const WitnessedGraph & g)
    {
        std::string s = std::to_string(g.vertex_count()) + " vertices:";
        for (const auto & w : g.witnesses())
            s += " " + g.vertex_name(w.a) + "-" + g.vertex_name(w.b);
        return s;
    }

    inline std::string set_text(const VertexSet & a)
    {
        std::string s = "{";
        for (std::size_t i = 0; i < a.size(); ++i)
            s += (i ? "," : "") + std::to_string(a[i]);
        return s + "}";
    }

    /// All subsets of the vertex set.
    inline std::vector<VertexSet> all_subsets(std::size_t n)
    {
        std::vector<VertexSet> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSet a;
            for (VertexId v = 0; v < n; ++v)
                if (mask >> v & 1u)
                    a.push_back(v);
            out.push_back(std::move(a));
        }
        return out;
    }

    /// Lengths 1..max_length at which some walk joins two members of `a`.
    inline std::vector<bool> walk_lengths(const WitnessedGraph & g, const VertexSet & a, std::size_t max_length)
    {
        const auto n = g.vertex_count();
        std::vector<bool> in(n);
        for (auto v : a)
            in[v] = true;
        std::vector<bool> out(max_length + 1);
        std::vector<bool> reach(n);
        for (auto v : a)
            reach[v] = true;
        for (std::size_t len = 1; len <= max_length; ++len) {
            std::vector<bool> next(n);
            for (const auto & w : g.witnesses()) {
                if (reach[w.a])
                    next[w.b] = true;
                if (reach[w.b])
                    next[w.a] = true;
            }
            reach = std::move(next);
            for (VertexId v = 0; v < n; ++v)
                if (reach[v] && in[v])
                    out[len] = true;
        }
        return out;
    }

    /// Φ(A, k) read literally: no odd A-walk of length above 2k - 1, checked
    /// up to 2k + 2|V| + 1 (padding covers every longer length).
    inline bool phi_by_definition(const std::vector<bool> & lengths, std::size_t k, std::size_t n)
    {
        const std::size_t top = 2 * k + 2 * n + 1;
        for (std::size_t len = 2 * k + 1; len <= top && len < lengths.size(); len += 2)
            if (lengths[len])
                return false;
        return true;
    }

    inline bool component_closed(const WitnessedGraph & g, const VertexSet & b)
    {
        std::vector<bool> in(g.vertex_count());
        for (auto v : b)
            in[v] = true;
        for (const auto & w : g.witnesses())
            if (in[w.a] != in[w.b])
                return false;
        return true;
    }

    inline std::vector<WitnessedGraph> random_graphs(Rng & rng, std::size_t count, std::size_t max_n, bool parallel)
    {
        std::uniform_int_distribution<std::size_t> nd(1, max_n);
        std::uniform_real_distribution<double> pd(0.1, 0.7);
        std::vector<WitnessedGraph> out;
        for (std::size_t i = 0; i < count; ++i) {
            auto n = nd(rng);
            out.push_back(oracle::random_graph(rng, n, pd(rng), parallel));
        }
        return out;
    }
} // namespace detail

// ---- graph-core ----------------------------------------------------------

/// phi_bound against walk enumeration to length 2|V|+1; phi_holds(., k) is the
/// same for every k and matches the literal reading of Φ(A, k).
[[nodiscard]] inline CheckResult phi_collapse(const Config & cfg, std::size_t exhaustive_n = 5,
    std::size_t random_graphs = 500, std::size_t random_n = 10)
{
    Tally t("graph-core", "phi_collapse");
    auto rng = make_rng(cfg.seed, "phi_collapse");
    const std::vector<std::size_t> ks{0, 1, 2, 3};
    const std::size_t max_k = ks.back();

    auto run = [&](const WitnessedGraph & g, const VertexSet & a) {
        t.trial();
        const auto n = g.vertex_count();
        auto lengths = detail::walk_lengths(g, a, 2 * max_k + 2 * n + 1);
        std::optional<std::size_t> least;
        for (std::size_t len = 1; len <= 2 * n + 1; len += 2)
            if (lengths[len]) {
                least = len;
                break;
            }
        auto verdict = phi_bound(g, a);
        t.expect(verdict.min_odd_length == least, [&] {
            return "phi_bound disagrees with walk enumeration on " + detail::graph_text(g) + ", A = " +
                detail::set_text(a);
        });
        for (auto k : ks) {
            bool h = phi_holds(g, a, k);
            t.expect(h == verdict.no_odd_walk(), [&] { return "phi_holds depends on k = " + std::to_string(k); });
            t.expect(h == detail::phi_by_definition(lengths, k, n), [&] {
                return "phi_holds(k = " + std::to_string(k) + ") differs from the definition on " +
                    detail::graph_text(g) + ", A = " + detail::set_text(a);
            });
        }
        if (cfg.oracle)
            t.expect(oracle::least_odd_walk(g, a, 2 * n + 1) == least,
                [&] { return "matrix-power oracle disagrees with the reachability oracle"; });
    };

    for (const auto & g : oracle::all_graphs_up_to(exhaustive_n))
        for (const auto & a : detail::all_subsets(g.vertex_count()))
            run(g, a);
    for (const auto & g : detail::random_graphs(rng, random_graphs, random_n, true))
        for (int s = 0; s < 4; ++s)
            run(g, oracle::random_subset(rng, g.vertex_count()));
    return t.finish();
}

[[nodiscard]] inline CheckResult bipartite_certificates(const Config & cfg, std::size_t exhaustive_n = 5,
    std::size_t random_graphs = 300)
{
    Tally t("graph-core", "bipartite_certificate");
    auto rng = make_rng(cfg.seed, "bipartite_certificate");
    auto run = [&](const WitnessedGraph & g) {
        t.trial();
        auto cert = bipartite_certificate(g);
        const bool bip = oracle::is_bipartite(g);
        if (auto col = std::get_if<Coloring>(&cert)) {
            t.expect(bip, [&] { return "colouring returned for non-bipartite " + detail::graph_text(g); });
            t.expect(is_proper(g, *col) && is_total(g, *col) && col->colour_count() <= 2,
                [&] { return "bad 2-colouring on " + detail::graph_text(g); });
        }
        else {
            const auto & w = std::get<Walk>(cert);
            t.expect(! bip, [&] { return "odd walk returned for bipartite " + detail::graph_text(g); });
            t.expect(is_valid_walk(g, w) && w.length() % 2 == 1 && w.vertices.front() == w.vertices.back(),
                [&] { return "invalid odd closed walk on " + detail::graph_text(g); });
            auto shortest = oracle::least_odd_walk(g, {w.vertices.front()}, 2 * g.vertex_count() + 1);
            t.expect(shortest && *shortest == w.length(), [&] { return "odd closed walk is not shortest"; });
        }
    };
    for (const auto & g : oracle::all_graphs_up_to(exhaustive_n))
        run(g);
    for (const auto & g : detail::random_graphs(rng, random_graphs, 10, true))
        run(g);
    return t.finish();
}

/// Whenever no odd walk joins members of A, the superset is a union of
/// components containing A and its colouring is proper.
[[nodiscard]] inline CheckResult superset_colouring(const Config & cfg, std::size_t exhaustive_n = 5,
    std::size_t random_graphs = 300)
{
    Tally t("graph-core", "superset_colouring");
    auto rng = make_rng(cfg.seed, "superset_colouring");
    auto run = [&](const WitnessedGraph & g, const VertexSet & a) {
        t.trial();
        if (oracle::least_odd_walk(g, a, 2 * g.vertex_count() + 1)) {
            bool threw = false;
            try {
                (void)bipartite_superset_colouring(g, a);
            }
            catch (const Error & e) {
                threw = e.code() == ErrorCode::PhiFails;
            }
            t.expect(threw, [&] { return "expected PhiFails on " + detail::graph_text(g); });
            return;
        }
        auto [b, col] = bipartite_superset_colouring(g, a);
        t.expect(std::includes(b.begin(), b.end(), a.begin(), a.end()),
            [&] { return "superset misses a member of A = " + detail::set_text(a); });
        t.expect(detail::component_closed(g, b),
            [&] { return "superset is not closed under components on " + detail::graph_text(g); });
        t.expect(col.colours.size() == b.size() && is_proper(g, col) && col.colour_count() <= 2,
            [&] { return "superset colouring is not a proper 2-colouring of the superset"; });
    };
    for (const auto & g : oracle::all_graphs_up_to(exhaustive_n))
        for (const auto & a : detail::all_subsets(g.vertex_count()))
            run(g, a);
    for (const auto & g : detail::random_graphs(rng, random_graphs, 10, true))
        for (int s = 0; s < 3; ++s)
            run(g, oracle::random_subset(rng, g.vertex_count()));
    return t.finish();
}

/// Random bipartite graphs with random covers by pieces.
[[nodiscard]] inline CheckResult cover_colouring(const Config & cfg, std::size_t instances = 200)
{
    Tally t("graph-core", "two_colour_from_cover");
    auto rng = make_rng(cfg.seed, "two_colour_from_cover");
    std::uniform_int_distribution<std::size_t> nd(1, 10), pieces_d(1, 4);
    std::uniform_real_distribution<double> pd(0.1, 0.8);
    std::bernoulli_distribution extra(0.2);
    for (std::size_t i = 0; i < instances; ++i) {
        t.trial();
        // A tiny piece holds vertices of one side only, so each piece gets a side.
        std::vector<int> side;
        auto g = oracle::random_bipartite(rng, nd(rng), pd(rng), &side);
        auto k = pieces_d(rng);
        std::vector<VertexSet> pieces(2 * k);
        std::uniform_int_distribution<std::size_t> which(0, k - 1);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            pieces[2 * which(rng) + side[v]].push_back(v);
            if (extra(rng))
                pieces[2 * which(rng) + side[v]].push_back(v);
        }
        for (auto & p : pieces) {
            std::sort(p.begin(), p.end());
            p.erase(std::unique(p.begin(), p.end()), p.end());
        }
        auto col = two_colour_from_cover(g, pieces);
        t.expect(is_total(g, col) && is_proper(g, col) && col.colour_count() <= 2,
            [&] { return "cover colouring is not a proper 2-colouring on " + detail::graph_text(g); });
    }
    bool not_tiny = false;
    try {
        std::vector<VertexSet> pieces{{0}, {1, 2}};
        (void)two_colour_from_cover(oracle::complete(3), pieces);
    }
    catch (const Error & e) {
        not_tiny = e.code() == ErrorCode::PieceNotTiny;
    }
    t.expect(not_tiny, [] { return "a cover of the triangle was accepted"; });
    return t.finish();
}

[[nodiscard]] inline CheckResult greedy_and_pullback(const Config & cfg, std::size_t instances = 300)
{
    Tally t("graph-core", "greedy_and_pullback");
    auto rng = make_rng(cfg.seed, "greedy_and_pullback");
    std::bernoulli_distribution coin(0.5);
    for (const auto & g : detail::random_graphs(rng, instances, 10, true)) {
        t.trial();
        auto col = greedy_colouring(g);
        t.expect(is_total(g, col) && is_proper(g, col) && col.colour_count() <= g.max_degree() + 1,
            [&] { return "greedy colouring fails on " + detail::graph_text(g); });

        // A graph H built over a random vertex map into g so that the map is a
        // homomorphism by construction.
        std::uniform_int_distribution<VertexId> img(0, static_cast<VertexId>(g.vertex_count() - 1));
        std::size_t hn = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        std::vector<VertexId> map(hn);
        for (auto & v : map)
            v = img(rng);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId a = 0; a < hn; ++a)
            for (VertexId b = a + 1; b < hn; ++b)
                if (g.adjacent(map[a], map[b]) && coin(rng))
                    edges.emplace_back(a, b);
        auto h = WitnessedGraph::simple(hn, edges);
        auto back = pullback_colouring(h, g, map, col);
        t.expect(is_total(h, back) && is_proper(h, back), [&] { return "pullback colouring is not proper"; });
    }
    return t.finish();
}

// ---- gadget --------------------------------------------------------------

[[nodiscard]] inline CheckResult gadget_recursion(const Config & cfg, std::size_t prefixes = 50,
    std::size_t max_level = 10)
{
    Tally t("gadget", "recursion");
    auto rng = make_rng(cfg.seed, "gadget_recursion");
    for (std::size_t i = 0; i < prefixes; ++i) {
        auto c = oracle::random_odd_prefix(rng, max_level, 9);
        std::uint64_t v = 1, e = 0;
        for (std::size_t n = 0; n <= max_level; ++n) {
            t.trial();
            PathGadget g(c.take(n));
            t.expect(g.vertex_count() == v && g.edge_count() == e, [&] {
                return "size mismatch at level " + std::to_string(n) + " for c = " + c.to_string();
            });
            t.expect(gadget_vertex_count(c, n) == v, [&] { return "closed-form vertex count mismatch"; });
            auto [e0, e1] = g.endpoints();
            t.expect(std::pair{e0, e1} == endpoint_labels(n),
                [&] { return "endpoints differ from the closed form at level " + std::to_string(n); });
            if (cfg.oracle || n == max_level)
                for (std::size_t p = 0; p < g.vertex_count(); ++p)
                    t.expect(position_in_level(c, n, g.at(p)) == p,
                        [&] { return "symbolic position of " + g.at(p).label() + " is wrong"; });
            if (n < max_level) {
                v = 2 * v + c[n] + 1;
                e = 2 * e + c[n] + 2;
            }
        }
    }
    return t.finish();
}

[[nodiscard]] inline CheckResult odd_distance(const Config & cfg, std::size_t prefixes = 24, std::size_t max_depth = 8)
{
    Tally t("gadget", "odd_distance");
    auto rng = make_rng(cfg.seed, "odd_distance");
    std::uniform_int_distribution<std::size_t> depth_d(1, max_depth);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < prefixes; ++i) {
        t.trial();
        auto c = oracle::random_odd_prefix(rng, i < max_depth ? i + 1 : depth_d(rng), 7);
        PathGadget g(c);
        auto report = check_odd_distance_lemma(g);
        pairs += report.pairs_checked;
        std::size_t expected = 0;
        for (const auto & v : g.vertices())
            expected += ! v.t.empty() && v.t.back() == '0';
        t.expect(report.passed() && report.pairs_checked == expected,
            [&] { return "sibling pair at even distance for c = " + c.to_string(); });
        if (cfg.oracle) {
            // Breadth-first distances over the explicit edge list.
            std::vector<std::vector<std::size_t>> adj(g.vertex_count());
            for (std::size_t j = 0; j < g.edge_count(); ++j) {
                adj[j].push_back(j + 1);
                adj[j + 1].push_back(j);
            }
            for (std::size_t s = 0; s < g.vertex_count(); ++s) {
                const auto & v = g.at(s);
                if (v.t.empty() || v.t.back() != '0')
                    continue;
                auto sib = v;
                sib.t.back() = '1';
                std::vector<std::size_t> dist(g.vertex_count(), unreachable);
                std::queue<std::size_t> q;
                dist[s] = 0;
                q.push(s);
                while (! q.empty()) {
                    auto x = q.front();
                    q.pop();
                    for (auto y : adj[x])
                        if (dist[y] == unreachable) {
                            dist[y] = dist[x] + 1;
                            q.push(y);
                        }
                }
                auto d = dist[g.require(sib)];
                t.expect(d % 2 == 1 && d == gadget_distance(g, v, sib), [&] { return "BFS distance is even"; });
            }
        }
    }
    t.note(std::to_string(pairs) + " sibling pairs");
    return t.finish();
}

// ---- homset --------------------------------------------------------------

/// Largeness of the full level-0 profile is non-bipartiteness.
[[nodiscard]] inline CheckResult small_theorem(const Config & cfg, std::size_t exhaustive_n = 5)
{
    Tally t("homset", "small_iff_bipartite");
    auto root = std::make_shared<const PathGadget>();
    for (auto & g0 : oracle::all_graphs_up_to(exhaustive_n)) {
        t.trial();
        auto g = std::make_shared<const WitnessedGraph>(std::move(g0));
        auto p = all_homs(root, g);
        const bool bip = oracle::is_bipartite(*g);
        auto verdict = is_large(p);
        t.expect(verdict.large == ! bip, [&] { return "largeness disagrees on " + detail::graph_text(*g); });
        auto s = to_explicit(p, 64);
        t.expect(is_small(s) == bip, [&] { return "is_small disagrees on " + detail::graph_text(*g); });
        if (verdict.large)
            t.expect(p.contains(*verdict.witness) && ! oracle::tiny(*g, {*verdict.witness}, 1),
                [&] { return "largeness witness is tiny"; });
        if (cfg.oracle) {
            auto homs = oracle::enumerate_homs(*root, *g, 64).homs;
            t.expect(oracle::small_by_cover_search(*g, homs, 1) == std::optional<bool>(bip),
                [&] { return "cover search disagrees on " + detail::graph_text(*g); });
        }
    }
    return t.finish();
}

/// project, count, enumerate, is_tiny and is_large on random restricted
/// profiles against exhaustive enumeration.
[[nodiscard]] inline CheckResult profile_oracle(const Config & cfg, std::size_t instances = 400,
    std::size_t max_vertices = 5, std::size_t max_depth = 3)
{
    Tally t("homset", "profile_vs_enumeration");
    auto rng = make_rng(cfg.seed, "profile_oracle");
    std::uniform_int_distribution<std::size_t> nd(1, max_vertices), depth_d(0, max_depth);
    std::uniform_int_distribution<std::uint32_t> cd(1, 3);
    std::uniform_real_distribution<double> pd(0.2, 0.8);
    std::bernoulli_distribution full(0.3), keep(0.75), keep_w(0.9);
    constexpr std::size_t budget = 50'000;
    std::size_t by_transfer = 0;

    for (std::size_t i = 0; i < instances; ++i) {
        auto g = std::make_shared<const WitnessedGraph>(oracle::random_graph(rng, nd(rng), pd(rng), true));
        std::vector<std::uint32_t> c;
        for (auto n = depth_d(rng); n > 0; --n)
            c.push_back(cd(rng));
        auto h = std::make_shared<const PathGadget>(ParamPrefix(c));
        std::vector<HomProfile::Mask> vm(h->vertex_count(), HomProfile::Mask(g->vertex_count(), true));
        std::vector<HomProfile::Mask> wm(h->edge_count(), HomProfile::Mask(g->witness_count(), true));
        if (! full(rng)) {
            for (auto & m : vm)
                for (std::size_t v = 0; v < m.size(); ++v)
                    m[v] = keep(rng);
            for (auto & m : wm)
                for (std::size_t w = 0; w < m.size(); ++w)
                    m[w] = keep_w(rng);
        }
        auto brute = oracle::enumerate_homs(*h, *g, vm, wm, budget);
        if (! brute.complete) {
            // Too many to list: compare against masked transfer matrices.
            ++by_transfer;
            t.trial();
            HomProfile p(h, g, vm, wm);
            auto where = [&] { return "c = " + ParamPrefix(c).to_string() + " on " + detail::graph_text(*g); };
            auto walks = oracle::masked_walks(*h, *g, vm, wm);
            t.expect(count(p) == walks.count, [&] { return "count differs from transfer matrices, " + where(); });
            bool tiny = false;
            for (std::size_t pos = 0; pos < h->vertex_count(); ++pos) {
                t.expect(project(p, h->at(pos)) == walks.vertex_sets[pos],
                    [&] { return "projection at " + h->at(pos).label() + " differs, " + where(); });
                tiny = tiny || ! oracle::least_odd_walk(*g, walks.vertex_sets[pos], 2 * g->vertex_count() + 1);
            }
            for (std::size_t j = 0; j < h->edge_count(); ++j)
                t.expect(p.witness_set(j) == walks.witness_sets[j],
                    [&] { return "witness projection differs, " + where(); });
            t.expect(is_tiny(p).tiny == tiny, [&] { return "is_tiny differs, " + where(); });
            auto odd = oracle::on_odd_component(*g);
            auto restricted = vm;
            for (auto & m : restricted)
                for (VertexId v = 0; v < m.size(); ++v)
                    m[v] = m[v] && odd[v];
            auto large = oracle::masked_walks(*h, *g, restricted, wm).count > 0;
            t.expect(is_large(p).large == large, [&] { return "is_large differs, " + where(); });
            continue;
        }
        t.trial();
        HomProfile p(h, g, vm, wm);
        const auto & homs = brute.homs;
        auto where = [&] { return "c = " + ParamPrefix(c).to_string() + " on " + detail::graph_text(*g); };

        t.expect(count(p) == BigInt(homs.size()), [&] { return "count differs from enumeration, " + where(); });
        t.expect(p.empty() == homs.empty(), [&] { return "emptiness differs, " + where(); });
        for (std::size_t pos = 0; pos < h->vertex_count(); ++pos) {
            std::set<VertexId> image;
            for (const auto & phi : homs)
                image.insert(phi.vertices[pos]);
            t.expect(project(p, h->at(pos)) == VertexSet(image.begin(), image.end()),
                [&] { return "projection at " + h->at(pos).label() + " differs, " + where(); });
        }
        for (std::size_t j = 0; j < h->edge_count(); ++j) {
            std::set<WitnessId> image;
            for (const auto & phi : homs)
                image.insert(phi.witnesses[j]);
            t.expect(p.witness_set(j) == std::vector<WitnessId>(image.begin(), image.end()),
                [&] { return "witness projection differs, " + where(); });
        }
        auto first = enumerate(p, 7);
        t.expect(first.homs.size() == std::min<std::size_t>(7, homs.size()) &&
                std::equal(first.homs.begin(), first.homs.end(), homs.begin()),
            [&] { return "enumeration order differs, " + where(); });
        t.expect(is_tiny(p).tiny == oracle::tiny(*g, homs, h->vertex_count()),
            [&] { return "is_tiny differs, " + where(); });
        auto large = is_large(p);
        t.expect(large.large == oracle::large(*g, homs, h->vertex_count()),
            [&] { return "is_large differs, " + where(); });
        if (large.large)
            t.expect(p.contains(*large.witness), [&] { return "largeness witness not in the profile"; });
        if (homs.size() <= 2000) {
            ExplicitHomSet s(h, g, homs);
            t.expect(is_tiny(s).tiny == is_tiny(p).tiny, [&] { return "explicit is_tiny differs, " + where(); });
            t.expect(is_small(s) == ! large.large, [&] { return "explicit is_small differs, " + where(); });
        }
        if (cfg.oracle) {
            auto fullp = HomProfile::full(h, g);
            t.expect(count(fullp) == oracle::walk_count(*g, h->edge_count()),
                [&] { return "full count differs from the transfer matrix, " + where(); });
            if (homs.size() <= 10)
                t.expect(oracle::small_by_cover_search(*g, homs, h->vertex_count()) == ! large.large,
                    [&] { return "definitional smallness differs, " + where(); });
        }
    }
    auto h1 = std::make_shared<const PathGadget>(ParamPrefix{1});
    auto k3 = std::make_shared<const WitnessedGraph>(oracle::complete(3));
    t.trial();
    t.expect(count(all_homs(h1, k3)) == 24 && oracle::walk_count(*k3, 3) == 24,
        [] { return "count(all_homs((1), K3)) is not 24"; });
    t.note(std::to_string(by_transfer) + " instances checked by transfer matrices instead of enumeration");
    return t.finish();
}

/// extend_witness and preserve_largeness on every non-bipartite small graph,
/// at level 0 and again one level up.
[[nodiscard]] inline CheckResult extension_lemmas(const Config & cfg, std::size_t exhaustive_n = 5)
{
    Tally t("homset", "extend_and_preserve");
    auto root = std::make_shared<const PathGadget>();
    auto check_level = [&](const HomProfile & p, std::size_t lower_bound, const std::string & where) {
        auto ext = extend_witness(p, lower_bound);
        t.expect(ext.join_length % 2 == 1 && ext.join_length >= lower_bound,
            [&] { return "extend_witness join length is not odd >= N, " + where; });
        t.expect(is_hom(*ext.gadget, p.graph(), ext.hom), [&] { return "extended witness is not a hom, " + where; });
        auto dbl = doubling(p, ext.join_length);
        t.expect(dbl.contains(ext.hom), [&] { return "extended witness is outside the doubling, " + where; });
        auto lower_emb0 = copy_embed(p.gadget(), *ext.gadget, 0);
        auto lower_emb1 = copy_embed(p.gadget(), *ext.gadget, 1);
        bool same = true;
        for (std::size_t q = 0; q < lower_emb0.size(); ++q)
            same = same && ext.hom.vertices[lower_emb0[q]] == ext.hom.vertices[lower_emb1[q]];
        t.expect(same, [&] { return "the two copies of the extended witness differ, " + where; });

        auto d = preserve_largeness(p, lower_bound);
        t.expect(d % 2 == 1 && d >= lower_bound, [&] { return "preserve_largeness is not odd >= N, " + where; });
        auto grown = doubling(p, d);
        t.expect(is_large(grown).large, [&] { return "doubling along the chosen length is not large, " + where; });
        if (cfg.oracle)
            t.expect(d == least_odd_at_least(lower_bound) || ! is_large(doubling(p, d - 2)).large,
                [&] { return "a smaller odd join length keeps the doubling large, " + where; });
        return grown;
    };

    for (auto & g0 : oracle::all_graphs_up_to(exhaustive_n)) {
        if (oracle::is_bipartite(g0))
            continue;
        auto g = std::make_shared<const WitnessedGraph>(std::move(g0));
        for (std::size_t bound : {1, 4}) {
            t.trial();
            auto where = "N = " + std::to_string(bound) + " on " + detail::graph_text(*g);
            auto up = check_level(all_homs(root, g), bound, where);
            check_level(up, bound, where + " (level 1)");
        }
    }

    auto c5 = std::make_shared<const WitnessedGraph>(oracle::cycle(5));
    t.trial();
    auto pinned = pin(all_homs(root, c5), Hom{{0}, {}});
    auto ext = extend_witness(pinned, 1);
    t.expect(ext.join_length == 3, [&] { return "C5 pinned gives d(0) = " + std::to_string(ext.join_length); });
    t.expect(preserve_largeness(pinned, 1) == 3, [] { return "preserve_largeness on pinned C5 is not 3"; });

    auto k3 = std::make_shared<const WitnessedGraph>(oracle::complete(3));
    t.trial();
    auto k3p = pin(all_homs(root, k3), Hom{{0}, {}});
    t.expect(extend_witness(k3p, 1).join_length == 1 && extend_witness(k3p, 4).join_length == 5,
        [] { return "K3 pinned join lengths are not 1 and 5"; });

    t.trial();
    bool not_large = false;
    try {
        (void)preserve_largeness(all_homs(root, std::make_shared<const WitnessedGraph>(oracle::cycle(4))), 1);
    }
    catch (const Error & e) {
        not_large = e.code() == ErrorCode::NotLarge;
    }
    t.expect(not_large, [] { return "C4 did not raise NotLarge"; });
    return t.finish();
}

// ---- dichotomy -----------------------------------------------------------

[[nodiscard]] inline CheckResult dichotomy_soundness(const Config & cfg, std::size_t exhaustive_n = 5,
    std::size_t small_depth = 3, std::size_t named_depth = 6)
{
    Tally t("dichotomy", "soundness");
    auto schedule = unbounded_schedule_default();
    auto run = [&](const WitnessedGraph & g, std::size_t depth, const std::string & name) {
        t.trial();
        auto decision = decide(g, depth, schedule);
        const bool bip = oracle::is_bipartite(g);
        t.expect(decision.index() == (bip ? 0u : 1u), [&] { return "wrong branch on " + name; });
        if (auto col = std::get_if<Coloring>(&decision)) {
            t.expect(is_total(g, *col) && is_proper(g, *col) && col->colour_count() <= 2,
                [&] { return "bipartite branch is not a proper 2-colouring on " + name; });
            return;
        }
        const auto & tower = std::get<Tower>(decision);
        auto report = verify_tower(tower, g);
        t.expect(report.passed(), [&] { return "tower fails on " + name + ": " + report.violations.front(); });
        t.expect(tower.depth() == depth, [&] { return "tower depth differs on " + name; });
        for (std::size_t n = 0; n < tower.prefix.size(); ++n)
            t.expect(tower.prefix[n] % 2 == 1 && tower.prefix[n] >= schedule(n),
                [&] { return "c(" + std::to_string(n) + ") is not odd >= schedule on " + name; });
        if (cfg.oracle) {
            auto q = level_quotient(tower.prefix);
            for (std::size_t i = 0; i < q.classes.size(); ++i) {
                const auto & cls = q.classes[i];
                PathGadget top(tower.prefix);
                t.expect(evaluate(tower, cls.m, cls.k, cls.bits) ==
                        tower.levels.back().vertices[top.require(q.gadget_vertices[i])],
                    [&] { return "evaluate disagrees with the top level on " + name; });
            }
        }
    };
    for (const auto & g : oracle::all_graphs_up_to(exhaustive_n))
        run(g, small_depth, detail::graph_text(g));
    run(oracle::complete(3), named_depth, "K3");
    run(oracle::cycle(5), named_depth, "C5");
    run(oracle::petersen(), named_depth, "Petersen");

    // Fault injection: a corrupted pin must be caught.
    t.trial();
    auto k3 = oracle::complete(3);
    auto tower = std::get<Tower>(decide(k3, 3, schedule));
    auto & last = tower.levels.back();
    last.vertices[0] = (last.vertices[0] + 1) % 3;
    t.expect(! verify_tower(tower, k3).passed(), [] { return "corrupted tower passed verification"; });
    return t.finish();
}

// ---- lc-graph ------------------------------------------------------------

[[nodiscard]] inline CheckResult lc_adjacency(const Config & cfg, std::size_t pairs = 1000, std::size_t level = 12)
{
    Tally t("lc-graph", "adjacency");
    auto rng = make_rng(cfg.seed, "lc_adjacency");
    auto prefix = oracle::random_odd_prefix(rng, level, 3);
    oracle::LevelTower brute(prefix, level);
    std::bernoulli_distribution coin(0.5);
    std::size_t positives = 0;

    const LcVertex base{0, 0, EpBits::constant('0')};
    t.trial();
    t.expect(neighbours(base, prefix).size() == 1 && neighbours(base, prefix).front() == LcVertex{1, 0, base.x},
        [] { return "(0,0,0^w) does not have the single neighbour (1,0,0^w)"; });

    for (std::size_t i = 0; i < pairs; ++i) {
        t.trial();
        auto a = oracle::random_vertex(rng, prefix);
        auto near = brute.neighbours(a);
        auto sym = neighbours(a, prefix);
        t.expect(sym == near, [&] { return "neighbours of " + a.to_string() + " differ from the level construction"; });
        t.expect(a == base || sym.size() == 2, [&] { return a.to_string() + " does not have degree 2"; });

        LcVertex b = coin(rng) && ! near.empty() ? near[std::uniform_int_distribution<std::size_t>(0, near.size() - 1)(rng)]
                                                  : oracle::random_vertex(rng, prefix);
        if (coin(rng) && b.x.period().size() < 3)
            b.x = EpBits(b.x.prefix(), b.x.period() + b.x.period()); // same word, other spelling
        bool expected = brute.adjacent(a, b);
        positives += expected;
        t.expect(adjacent(a, b, prefix) == expected && adjacent(b, a, prefix) == expected,
            [&] { return "adjacency of " + a.to_string() + " and " + b.to_string() + " differs"; });
        if (expected)
            t.expect(same_component(a, b, prefix), [&] { return "adjacent vertices in different components"; });
    }
    t.note(std::to_string(positives) + " adjacent pairs sampled");
    return t.finish();
}

[[nodiscard]] inline CheckResult lc_components(const Config & cfg, std::size_t pairs = 1000)
{
    Tally t("lc-graph", "components");
    auto rng = make_rng(cfg.seed, "lc_components");
    auto prefix = oracle::random_odd_prefix(rng, 12, 5);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::uint32_t> md(0, 4), sd(0, 3);
    for (std::size_t i = 0; i < pairs; ++i) {
        t.trial();
        auto a = oracle::random_vertex(rng, prefix);
        LcVertex b = oracle::random_vertex(rng, prefix);
        if (coin(rng)) {
            // Split a's word after s letters and graft a fresh head whose length
            // keeps the two on a common tail.
            auto s = sd(rng);
            auto m = md(rng);
            if (a.m + s >= m) {
                std::string head;
                for (auto n = a.m + s - m; n > 0; --n)
                    head += coin(rng) ? '1' : '0';
                b = {m, m == 0 ? 0 : std::min(b.k, prefix[m - 1]), a.x.shifted(s).prepended(head)};
            }
        }
        t.expect(same_component(a, b, prefix) == oracle::same_component(a, b),
            [&] { return "component test differs on " + a.to_string() + ", " + b.to_string(); });
        t.expect(same_component(a, a, prefix), [] { return "vertex outside its own component"; });
    }
    return t.finish();
}

[[nodiscard]] inline CheckResult lc_quotients(const Config & cfg, std::size_t prefixes = 40)
{
    Tally t("lc-graph", "quotient_and_siblings");
    auto rng = make_rng(cfg.seed, "lc_quotients");
    std::uniform_int_distribution<std::size_t> len_d(1, 6);
    for (std::size_t i = 0; i < prefixes; ++i) {
        t.trial();
        auto c = oracle::random_odd_prefix(rng, len_d(rng), 5);
        auto q = level_quotient(c);
        PathGadget g(c);
        std::vector<std::pair<std::size_t, std::size_t>> path;
        for (std::size_t j = 0; j < g.edge_count(); ++j)
            path.emplace_back(j, j + 1);
        t.expect(q.edges == path, [&] { return "quotient is not the gadget path for c = " + c.to_string(); });

        // Every sibling pair sits an odd distance apart in the quotient.
        for (const auto & v : g.vertices()) {
            if (v.t.empty() || v.t.back() != '0')
                continue;
            auto rep = odd_sibling_obstruction(c, v.k, v.t.substr(0, v.t.size() - 1));
            auto sib = v;
            sib.t.back() = '1';
            t.expect(rep.odd() && rep.distance == gadget_distance(g, v, sib),
                [&] { return "siblings of " + v.label() + " are at even distance"; });
            if (! cfg.oracle)
                break;
        }
    }
    return t.finish();
}

// ---- equiv ---------------------------------------------------------------

/// Identity towers for every prefix of length <= max_length over `values`.
[[nodiscard]] inline CheckResult identity_towers(const Config &, std::size_t max_length = 6,
    std::vector<std::uint32_t> values = {1, 3, 5})
{
    Tally t("equiv", "identity_towers");
    std::vector<ParamPrefix> layer{ParamPrefix{}};
    for (std::size_t len = 0; len <= max_length; ++len) {
        std::vector<ParamPrefix> next;
        for (const auto & c : layer) {
            t.trial();
            auto report = verify_equivalence(identity_tower(c, c.size()));
            t.expect(report.passed(), [&] { return "identity tower fails for c = " + c.to_string(); });
            if (len < max_length)
                for (auto v : values)
                    next.push_back(c.extended(v));
        }
        layer = std::move(next);
    }
    return t.finish();
}

[[nodiscard]] inline CheckResult planner(const Config & cfg, std::size_t instances = 60)
{
    Tally t("equiv", "planner");
    auto rng = make_rng(cfg.seed, "planner");
    std::size_t successes = 0, gaps = 0;

    t.trial();
    auto fixed = plan_equivalence({3, 5}, {1, 3, 5, 7}, 2);
    auto fixed_report = verify_equivalence(fixed);
    t.expect(fixed_report.passed(), [&] { return "planner tower (3,5) -> (1,3,5,7) fails verification"; });

    t.trial();
    auto broken = fixed;
    broken.suffixes[0][0].back() = broken.suffixes[0][0].back() == '0' ? '1' : '0';
    t.expect(! verify_equivalence(broken).passed(), [] { return "corrupted suffix passed verification"; });

    std::uniform_int_distribution<std::size_t> cl(1, 3), dl(3, 6);
    for (std::size_t i = 0; i < instances; ++i) {
        t.trial();
        auto c = oracle::random_odd_prefix(rng, cl(rng), 5);
        auto d = oracle::random_odd_prefix(rng, dl(rng), 7);
        try {
            auto tower = plan_equivalence(c, d, c.size(), {20'000});
            ++successes;
            auto report = verify_equivalence(tower);
            t.expect(report.passed(), [&] {
                return "planner output for " + c.to_string() + " -> " + d.to_string() +
                    " fails: " + report.violations.front();
            });
            if (cfg.oracle) {
                auto back = equivalence_from_json(Json::parse(to_json(tower).dump()));
                t.expect(back == tower, [] { return "equivalence JSON does not round-trip"; });
            }
        }
        catch (const Error & e) {
            t.expect(e.code() == ErrorCode::GapInsufficient, [&] { return std::string("planner raised ") + e.what(); });
            ++gaps;
        }
    }
    t.note(std::to_string(successes) + " planned, " + std::to_string(gaps) + " reported a gap");
    return t.finish();
}

[[nodiscard]] inline CheckResult hom_search(const Config & cfg, std::size_t instances = 150)
{
    Tally t("equiv", "search_hom");
    auto rng = make_rng(cfg.seed, "search_hom");
    std::uniform_int_distribution<std::size_t> hl(0, 2), gl(0, 3);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < instances; ++i) {
        t.trial();
        PathGadget h(oracle::random_odd_prefix(rng, hl(rng), 3));
        PathGadget g(oracle::random_odd_prefix(rng, gl(rng), 5));
        std::map<GadgetVertex, GadgetVertex> pins;
        std::uniform_int_distribution<std::size_t> hp(0, h.vertex_count() - 1), gp(0, g.vertex_count() - 1);
        for (int k = 0; k < 2; ++k)
            if (coin(rng))
                pins[h.at(hp(rng))] = g.at(gp(rng));

        // Lexicographically first walk of g's path honouring the pins.
        std::vector<std::size_t> walk(h.vertex_count());
        std::optional<std::vector<std::size_t>> expected;
        auto allowed = [&](std::size_t pos, std::size_t q) {
            auto it = pins.find(h.at(pos));
            return it == pins.end() || g.at(q) == it->second;
        };
        auto dfs = [&](auto && self, std::size_t pos) -> bool {
            if (pos == walk.size()) {
                expected = walk;
                return true;
            }
            for (std::size_t q = 0; q < g.vertex_count(); ++q) {
                if (pos > 0 && q + 1 != walk[pos - 1] && walk[pos - 1] + 1 != q)
                    continue;
                if (! allowed(pos, q))
                    continue;
                walk[pos] = q;
                if (self(self, pos + 1))
                    return true;
            }
            return false;
        };
        dfs(dfs, 0);
        auto found = search_hom(h, g, pins);
        t.expect(found.has_value() == expected.has_value(),
            [&] { return "search_hom satisfiability differs on " + h.prefix().to_string() + " -> " + g.prefix().to_string(); });
        if (found && expected)
            for (std::size_t p = 0; p < walk.size(); ++p)
                t.expect((*found)[p] == g.at((*expected)[p]), [&] { return "search_hom is not the least hom"; });
    }
    (void)cfg;
    return t.finish();
}

// ---- registry ------------------------------------------------------------

struct NamedCheck {
    std::string suite;
    std::function<CheckResult(const Config &)> run;
};

[[nodiscard]] inline std::vector<NamedCheck> registry()
{
    return {
        {"graph-core", [](const Config & c) { return phi_collapse(c); }},
        {"graph-core", [](const Config & c) { return bipartite_certificates(c); }},
        {"graph-core", [](const Config & c) { return superset_colouring(c); }},
        {"graph-core", [](const Config & c) { return cover_colouring(c); }},
        {"graph-core", [](const Config & c) { return greedy_and_pullback(c); }},
        {"gadget", [](const Config & c) { return gadget_recursion(c); }},
        {"gadget", [](const Config & c) { return odd_distance(c); }},
        {"homset", [](const Config & c) { return small_theorem(c); }},
        {"homset", [](const Config & c) { return profile_oracle(c); }},
        {"homset", [](const Config & c) { return extension_lemmas(c); }},
        {"dichotomy", [](const Config & c) { return dichotomy_soundness(c); }},
        {"lc-graph", [](const Config & c) { return lc_adjacency(c); }},
        {"lc-graph", [](const Config & c) { return lc_components(c); }},
        {"lc-graph", [](const Config & c) { return lc_quotients(c); }},
        {"equiv", [](const Config & c) { return identity_towers(c); }},
        {"equiv", [](const Config & c) { return planner(c); }},
        {"equiv", [](const Config & c) { return hom_search(c); }},
    };
}

[[nodiscard]] inline std::vector<std::string> suite_names()
{
    return {"graph-core", "gadget", "homset", "dichotomy", "lc-graph", "equiv"};
}

/// Runs every registered check whose suite is in `only` (all when empty).
[[nodiscard]] inline std::vector<CheckResult> run_all(const Config & cfg, const std::vector<std::string> & only = {})
{
    std::vector<CheckResult> out;
    for (const auto & c : registry()) {
        if (! only.empty() && std::find(only.begin(), only.end(), c.suite) == only.end())
            continue;
        try {
            out.push_back(c.run(cfg));
        }
        catch (const std::exception & e) {
            out.push_back({c.suite, "unexpected_exception", false, 0, 1, e.what()});
        }
    }
    return out;
}

[[nodiscard]] inline Json report_json(const Config & cfg, const std::vector<CheckResult> & results)
{
    Json j;
    j["formatVersion"] = format_version;
    j["seed"] = cfg.seed;
    j["oracle"] = cfg.oracle;
    bool all = true;
    j["checks"] = Json::array();
    for (const auto & r : results) {
        all = all && r.passed;
        j["checks"].push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"trials", r.trials},
            {"violations", r.violations}, {"detail", r.detail}});
    }
    j["passed"] = all;
    return j;
}

} // namespace l0::checks
