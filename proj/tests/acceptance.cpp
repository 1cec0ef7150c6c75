// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses the library end to end.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gainspec/bounds.hpp"
#include "gainspec/enumerate.hpp"
#include "gainspec/generators.hpp"
#include "gainspec/io.hpp"
#include "gainspec/report.hpp"
#include "oracles.hpp"

using namespace gainspec;

namespace {

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

double rnd01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

std::vector<GainGraph> gain_samples(const SimpleGraph& under, std::uint64_t seed,
                                    int random_samples) {
    std::vector<GainEdge> ones;
    for (auto [u, v] : under.edges()) ones.push_back({u, v, UnitComplex::one()});
    const GainGraph base(under.n, std::move(ones));
    std::vector<GainGraph> out;
    out.push_back(assign_gains(base, GainScheme::AllOne, seed));
    out.push_back(assign_gains(base, GainScheme::AllMinusOne, seed));
    for (int s = 0; s < random_samples; ++s) {
        out.push_back(assign_gains(base, GainScheme::GaussianSet, seed + s));
        out.push_back(assign_gains(base, GainScheme::UniformCircle, seed + s));
    }
    return out;
}

// --- criterion 1 ---------------------------------------------------------

void cycle_spectrum_oracle() {
    std::mt19937_64 rng(1);
    for (int n = 3; n <= 12; ++n) {
        std::vector<double> thetas{0.0, std::numbers::pi / 3, std::numbers::pi / 2,
                                   std::numbers::pi};
        for (int s = 0; s < 3; ++s) thetas.push_back(2.0 * std::numbers::pi * rnd01(rng));
        for (double theta : thetas) {
            const auto dec = eigendecompose(adjacency(make_cycle(n, theta)));
            const auto closed = oracle::cycle_spectrum(n, theta);
            for (int j = 0; j < n; ++j)
                require(std::abs(dec.eigenvalues[j] - closed[j]) < 1e-9,
                        "cycle n=" + std::to_string(n) + " spectrum deviates");
        }
    }
}

// --- criterion 2 ---------------------------------------------------------

void star_and_bipartite_energies() {
    std::mt19937_64 rng(2);
    for (int r = 1; r <= 10; ++r) {
        for (int s = 0; s < 5; ++s) {
            const GainGraph star = random_gains(make_star(r), rng());
            require(std::abs(energy(star) - 2.0 * std::sqrt(static_cast<double>(r))) < 1e-9,
                    "star r=" + std::to_string(r) + " energy off");
        }
    }
    for (int n = 1; n <= 6; ++n) {
        const GainGraph knn = make_complete_bipartite(n, n);
        require(std::abs(energy(knn) - 2.0 * n) < 1e-9, "K_{n,n} all-one energy off");
        for (int s = 0; s < 100; ++s)
            require(energy(random_gains(knn, rng())) >= 2.0 * n - 1e-8,
                    "K_{n,n} sampled energy below 2n");
    }
}

// --- criteria 3, 4, 5: one sweep over the connected n <= 7 corpus --------

struct SweepOutcome {
    long long reports = 0;
    long long violations = 0;
    long long characterizer_disagreements = 0;
    long long strictness_failures = 0;
    // Instances where equality holds outside the structural equality class.
    std::vector<std::string> beyond_class;
    bool k33_equality = false;
    bool two_stars_equality = false;
};

SweepOutcome corpus_sweep_outcome() {
    SweepOutcome out;
    CorpusSpec spec;
    spec.n_max = 7;
    for (const SimpleGraph& under : enumerate_underlying(spec)) {
        const bool bipartite = is_bipartite(under);
        int min_deg = under.n;
        for (int v = 0; v < under.n; ++v) min_deg = std::min(min_deg, under.degree(v));
        const bool pendant_not_k2 = under.n > 2 && under.edge_count() > 0 && min_deg == 1;
        const auto samples = gain_samples(under, 3000, 2);
        for (std::size_t k = 0; k < samples.size(); ++k) {
            for (const auto& b : run_all(samples[k])) {
                if (!b.report) continue;
                ++out.reports;
                if (!b.report->holds) ++out.violations;
                if (!b.report->characterizer_agrees()) ++out.characterizer_disagreements;
                if (b.report->equality_beyond_class())
                    out.beyond_class.push_back(encode_graph6(under) + "/" +
                                               std::to_string(k) + "/" + theorem_name(b.id) +
                                               "/v" + std::to_string(b.vertex));
                if (b.id == TheoremId::TWO_MU) {
                    if ((!bipartite || pendant_not_k2) && b.report->slack <= 1e-7)
                        ++out.strictness_failures;
                }
            }
        }
    }
    // Named equality witnesses.
    const auto k33 = check_two_mu(make_complete_bipartite(3, 3));
    out.k33_equality = k33.equality && k33.characterizer == true;
    std::vector<GainEdge> edges;
    for (int leaf = 1; leaf <= 4; ++leaf) {
        edges.push_back({0, leaf, UnitComplex::one()});
        edges.push_back({5, 5 + leaf, UnitComplex::one()});
    }
    const auto stars = check_tau_sqrt_delta(GainGraph(10, std::move(edges)));
    out.two_stars_equality = stars.equality && stars.characterizer == true;
    return out;
}

SweepOutcome& sweep() {
    static SweepOutcome cached = corpus_sweep_outcome();
    return cached;
}

void soundness_sweep() {
    require(sweep().reports > 100000, "sweep unexpectedly small");
    require(sweep().violations == 0,
            std::to_string(sweep().violations) + " bound violations");
}

void equality_characterizations() {
    require(sweep().characterizer_disagreements == 0,
            std::to_string(sweep().characterizer_disagreements) + " disagreements");
    require(sweep().k33_equality, "(K_{3,3},1) should meet 2mu with equality");
    require(sweep().two_stars_equality, "2x(K_{1,4},1) should meet 2tau*sqrt(Delta)");
    // Equality outside the structural class is possible for the sqrt(d/Delta)
    // vertex-energy bound and for 2*tau*sqrt(Delta): gains in {1, i, -i} can
    // make the rows of the biadjacency block pairwise orthogonal, which
    // flattens the singular spectrum. Every such instance in this corpus was
    // confirmed exact by 50-digit independent computation; the sweep must
    // reproduce that list and nothing else.
    std::vector<std::string> expected = {
        "E?~o/4/TAU_SQRT_DELTA/v-1", "ECz_/2/VE_SQRT_DEG/v3",
        "EEz_/4/VE_SQRT_DEG/v2",     "F?Bvo/4/VE_SQRT_DEG/v4",
        "F?bb_/2/VE_SQRT_DEG/v3",    "F?bb_/4/VE_SQRT_DEG/v3",
        "F?rtO/2/VE_SQRT_DEG/v3",    "F?zT_/4/TAU_SQRT_DELTA/v-1",
    };
    std::vector<std::string> seen = sweep().beyond_class;
    std::sort(seen.begin(), seen.end());
    std::sort(expected.begin(), expected.end());
    if (seen != expected) {
        std::string detail = "unexpected beyond-class set:";
        for (const auto& s : seen) detail += " " + s;
        require(false, detail);
    }
}

void strictness_properties() {
    require(sweep().strictness_failures == 0,
            std::to_string(sweep().strictness_failures) + " strictness failures");
    const GainGraph fg = make_figure_graph();
    for (int s = 0; s < 50; ++s) {
        const auto r = check_two_mu(random_gains(fg, 5000 + s));
        require(r.slack > 1e-7, "figure graph matching bound not strict");
    }
}

// --- criterion 6 ---------------------------------------------------------

void invariance_suite() {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        SimpleGraph under(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rnd01(rng) < 0.5) under.add_edge(u, v);
        std::vector<GainEdge> edges;
        for (auto [u, v] : under.edges())
            edges.push_back({u, v, UnitComplex::from_angle(2.0 * std::numbers::pi * rnd01(rng))});
        const GainGraph g(n, std::move(edges));
        std::vector<UnitComplex> s;
        for (int v = 0; v < n; ++v)
            s.push_back(UnitComplex::from_angle(2.0 * std::numbers::pi * rnd01(rng)));
        const GainGraph sw = switch_gains(g, SwitchingFunction(s));
        const auto d1 = eigendecompose(adjacency(g));
        const auto d2 = eigendecompose(adjacency(sw));
        const auto v1 = vertex_energy(d1), v2 = vertex_energy(d2);
        const auto vn = vertex_energy(negate(g));
        for (int j = 0; j < n; ++j) {
            require(std::abs(d1.eigenvalues[j] - d2.eigenvalues[j]) < 1e-10,
                    "switching changed the spectrum");
            require(std::abs(v1[j] - v2[j]) < 1e-10, "switching changed a vertex energy");
            require(std::abs(v1[j] - vn[j]) < 1e-10, "negation changed a vertex energy");
        }
    }
}

// --- criterion 7 ---------------------------------------------------------

void kronecker_double() {
    std::mt19937_64 rng(7);
    int connected_nonbip_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        SimpleGraph under(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rnd01(rng) < 0.6) under.add_edge(u, v);
        std::vector<GainEdge> edges;
        for (auto [u, v] : under.edges())
            edges.push_back({u, v, UnitComplex::from_angle(2.0 * std::numbers::pi * rnd01(rng))});
        const GainGraph g(n, std::move(edges));
        const GainGraph dbl = bipartite_double(g);
        const auto base = eigendecompose(adjacency(g));
        const auto big = eigendecompose(adjacency(dbl));
        std::vector<double> expect;
        for (double l : base.eigenvalues) { expect.push_back(l); expect.push_back(-l); }
        std::sort(expect.rbegin(), expect.rend());
        for (int j = 0; j < 2 * n; ++j)
            require(std::abs(big.eigenvalues[j] - expect[j]) < 1e-9,
                    "double spectrum is not {+-lambda}");
        require(std::abs(energy(big) - 2.0 * energy(base)) < 1e-8, "double energy != 2E");
        if (is_connected(under) && !is_bipartite(under)) {
            ++connected_nonbip_seen;
            require(is_connected(dbl.underlying()),
                    "double of connected non-bipartite must be connected");
        }
    }
    require(connected_nonbip_seen > 10, "too few non-bipartite samples");
}

// --- criterion 8 ---------------------------------------------------------

void rank_sandwich_sweep() {
    CorpusSpec spec;
    spec.n_max = 8;
    std::uint64_t seed = 8000;
    for (const SimpleGraph& under : enumerate_underlying(spec)) {
        std::vector<GainEdge> ones;
        for (auto [u, v] : under.edges()) ones.push_back({u, v, UnitComplex::one()});
        const GainGraph base(under.n, std::move(ones));
        const int lower = 2 * max_acyclic_deletion_matching(under);
        const int upper = 2 * matching_number(under) + bipartite_obstruction(under);
        for (const GainGraph& g : {assign_gains(base, GainScheme::UniformCircle, seed++),
                                   assign_gains(base, GainScheme::GaussianSet, seed++)}) {
            const int rank = numerical_rank(adjacency(g));
            require(lower <= rank && rank <= upper, "rank sandwich violated");
        }
    }
}

// --- criterion 9 ---------------------------------------------------------

void walk_gain_oracle() {
    std::uint64_t seed = 9000;
    for (const SimpleGraph& under : enumerate_all_graphs(6)) {
        std::vector<GainEdge> edges;
        for (auto [u, v] : under.edges()) edges.push_back({u, v, UnitComplex::one()});
        const GainGraph g = assign_gains(GainGraph(under.n, std::move(edges)),
                                         GainScheme::UniformCircle, seed++);
        for (int p = 0; p < under.n; ++p)
            for (int k = 0; k <= 5; ++k) {
                const auto ref = oracle::walk_gain_brute(g, k, p);
                require(std::abs(walk_gain_sum(g, k, p) - ref.real()) <= 1e-10,
                        "walk gain sum deviates from brute force");
            }
    }
}

// --- criterion 10 --------------------------------------------------------

void combinatorics_oracles() {
    for (const SimpleGraph& g : enumerate_all_graphs(8)) {
        require(matching_number(g) == oracle::matching_brute(g), "matching != brute force");
        require(vertex_cover_number(g) == oracle::vertex_cover_brute(g), "tau != brute force");
    }
    const SimpleGraph k4 = make_complete(4).underlying();
    require(odd_cycle_count(k4) == 4, "odd_cycle_count(K_4) != 4");
    require(oracle::cycle_counts_brute(k4).first == 4, "cycle oracle disagrees on K_4");
}

// --- criterion 11 --------------------------------------------------------

void format_round_trips() {
    std::uint64_t seed = 11000;
    for (const SimpleGraph& g : enumerate_all_graphs(7)) {
        const std::string enc = encode_graph6(g);
        require(parse_graph6(enc) == g, "graph6 round trip failed");
        std::vector<GainEdge> edges;
        for (auto [u, v] : g.edges()) edges.push_back({u, v, UnitComplex::one()});
        const GainGraph gg = assign_gains(GainGraph(g.n, std::move(edges)),
                                          GainScheme::UniformCircle, seed++);
        require(gg.approx_equal(parse_ggf(write_ggf(gg)), 1e-15), "GGF round trip failed");
    }
    const GainGraph probe = random_gains(make_complete(5), 123);
    const std::string a = to_json(analyze(probe, "probe", 123));
    const std::string b = to_json(analyze(random_gains(make_complete(5), 123), "probe", 123));
    require(a == b, "repeated JSON reports differ byte-wise");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"1 cycle spectrum oracle", cycle_spectrum_oracle},
        {"2 star and complete-bipartite energies", star_and_bipartite_energies},
        {"3 soundness sweep (connected n<=7, 4 gain modes)", soundness_sweep},
        {"4 equality characterizations", equality_characterizations},
        {"5 strictness properties", strictness_properties},
        {"6 invariance suite (500 triples)", invariance_suite},
        {"7 Kronecker / bipartite double", kronecker_double},
        {"8 rank sandwich (connected n<=8)", rank_sandwich_sweep},
        {"9 walk-gain oracle (n<=6, k<=5)", walk_gain_oracle},
        {"10 combinatorics oracles (n<=8)", combinatorics_oracles},
        {"11 format round-trips and JSON determinism", format_round_trips},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            fn();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.message;
            ++failures;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string("exception: ") + e.what();
            ++failures;
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s: %s (%.1fs)%s%s\n", verdict.c_str(), name.c_str(), secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
