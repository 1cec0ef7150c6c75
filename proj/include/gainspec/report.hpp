#ifndef GAINSPEC_REPORT_HPP
#define GAINSPEC_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gainspec/bounds.hpp"
#include "gainspec/combinatorics.hpp"
#include "gainspec/spectra.hpp"

namespace gainspec {

namespace detail {

/// Minimal hand-rolled JSON emitter: insertion-ordered keys, floats at 17
/// significant digits, no locale dependence — repeated runs are
/// byte-identical.
class JsonWriter {
public:
    void begin_object() { sep(); out_ += '{'; stack_.push_back(true); first_ = true; }
    void end_object() { out_ += '}'; stack_.pop_back(); first_ = false; }
    void begin_array() { sep(); out_ += '['; stack_.push_back(true); first_ = true; }
    void end_array() { out_ += ']'; stack_.pop_back(); first_ = false; }

    void key(const std::string& k) {
        sep();
        out_ += quote(k);
        out_ += ':';
        first_ = true;  // suppress the comma before the value
    }

    void value(double x) {
        sep();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out_ += buf;
    }
    void value(int x) { sep(); out_ += std::to_string(x); }
    void value(std::int64_t x) { sep(); out_ += std::to_string(x); }
    void value(std::uint64_t x) { sep(); out_ += std::to_string(x); }
    void value(bool b) { sep(); out_ += b ? "true" : "false"; }
    void value(const std::string& s) { sep(); out_ += quote(s); }
    void value(const char* s) { value(std::string(s)); }
    void null() { sep(); out_ += "null"; }

    const std::string& str() const { return out_; }

private:
    static std::string quote(const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            switch (c) {
                case '"': q += "\\\""; break;
                case '\\': q += "\\\\"; break;
                case '\n': q += "\\n"; break;
                case '\t': q += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        q += buf;
                    } else {
                        q += c;
                    }
            }
        }
        q += '"';
        return q;
    }

    void sep() {
        if (!first_ && !stack_.empty()) out_ += ',';
        first_ = false;
    }

    std::string out_;
    std::vector<bool> stack_;
    bool first_ = true;
};

}  // namespace detail

struct AnalysisReport {
    std::string input;          // file path or generator expression
    std::uint64_t seed = 0;
    int n = 0;
    int m = 0;
    std::vector<double> spectrum;
    EnergyProfile energy;
    CombinatorialProfile combinatorics;
    bool balanced = false;
    bool antibalanced = false;
    std::vector<double> cycle_angles;  // fundamental cycle gains as angles
    std::vector<EvaluatedBound> bounds;
    double elapsed_ms = 0.0;
};

inline AnalysisReport analyze(const GainGraph& g, const std::string& input,
                              std::uint64_t seed) {
    AnalysisReport r;
    r.input = input;
    r.seed = seed;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    const auto dec = eigendecompose(adjacency(g));
    r.spectrum = dec.eigenvalues;
    r.energy = energy_profile(dec);
    r.combinatorics = combinatorial_profile(g);
    r.balanced = is_balanced(g);
    r.antibalanced = is_antibalanced(g);
    for (const auto& gain : fundamental_cycles(g).gains) r.cycle_angles.push_back(gain.angle());
    r.bounds = run_all(g);
    return r;
}

inline std::string to_json(const AnalysisReport& r) {
    detail::JsonWriter w;
    w.begin_object();
    w.key("schema"); w.value("gainspec/1");
    w.key("input"); w.value(r.input);
    w.key("seed"); w.value(r.seed);
    w.key("n"); w.value(r.n);
    w.key("m"); w.value(r.m);
    w.key("spectrum"); w.begin_array();
    for (double l : r.spectrum) w.value(l);
    w.end_array();
    w.key("energy"); w.begin_object();
    w.key("total"); w.value(r.energy.total);
    w.key("per_vertex"); w.begin_array();
    for (double e : r.energy.per_vertex) w.value(e);
    w.end_array();
    w.key("spectral_radius"); w.value(r.energy.spectral_radius);
    w.key("positive_count"); w.value(r.energy.positive_count);
    w.key("rank"); w.value(r.energy.rank);
    w.end_object();
    w.key("combinatorics"); w.begin_object();
    w.key("matching_number"); w.value(r.combinatorics.matching_number);
    w.key("vertex_cover_number"); w.value(r.combinatorics.vertex_cover_number);
    w.key("odd_cycle_count"); w.value(r.combinatorics.odd_cycle_count);
    w.key("bipartite_obstruction"); w.value(r.combinatorics.bipartite_obstruction);
    w.key("bipartite"); w.value(r.combinatorics.is_bipartite);
    w.key("component_count"); w.value(static_cast<int>(r.combinatorics.components.size()));
    w.key("balanced"); w.value(r.balanced);
    w.key("antibalanced"); w.value(r.antibalanced);
    w.end_object();
    w.key("cycle_angles"); w.begin_array();
    for (double a : r.cycle_angles) w.value(a);
    w.end_array();
    w.key("bounds"); w.begin_array();
    for (const auto& b : r.bounds) {
        w.begin_object();
        w.key("theorem"); w.value(theorem_name(b.id));
        w.key("component"); w.value(b.component);
        w.key("vertex"); w.value(b.vertex);
        if (b.report) {
            w.key("bound"); w.value(b.report->bound_value);
            w.key("actual"); w.value(b.report->actual_value);
            w.key("slack"); w.value(b.report->slack);
            w.key("holds"); w.value(b.report->holds);
            w.key("equality"); w.value(b.report->equality);
            w.key("characterizer");
            if (b.report->characterizer) w.value(*b.report->characterizer);
            else w.null();
        } else {
            w.key("skipped"); w.value(b.skip_reason);
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

inline std::string to_table(const AnalysisReport& r) {
    std::ostringstream out;
    char buf[128];
    out << "input: " << r.input << " (n=" << r.n << ", m=" << r.m << ")\n";
    out << "spectrum:";
    for (double l : r.spectrum) {
        std::snprintf(buf, sizeof(buf), " %.6g", l);
        out << buf;
    }
    out << "\n";
    std::snprintf(buf, sizeof(buf), "energy: %.12g  rho: %.12g  rank: %d  positive: %d\n",
                  r.energy.total, r.energy.spectral_radius, r.energy.rank,
                  r.energy.positive_count);
    out << buf;
    out << "mu: " << r.combinatorics.matching_number
        << "  tau: " << r.combinatorics.vertex_cover_number
        << "  odd cycles: " << r.combinatorics.odd_cycle_count
        << "  bipartite: " << (r.combinatorics.is_bipartite ? "yes" : "no")
        << "  balanced: " << (r.balanced ? "yes" : "no") << "\n";
    out << "theorem          comp vert        bound       actual        slack  holds eq char\n";
    for (const auto& b : r.bounds) {
        if (!b.report) {
            std::snprintf(buf, sizeof(buf), "%-16s %4d    - skipped: %s\n", theorem_name(b.id),
                          b.component, b.skip_reason.c_str());
            out << buf;
            continue;
        }
        const char* charac = !b.report->characterizer ? "-"
                             : *b.report->characterizer ? "yes"
                                                        : "no";
        std::snprintf(buf, sizeof(buf), "%-16s %4d %4d %12.6g %12.6g %12.4g  %-5s %-2s %s\n",
                      theorem_name(b.id), b.component, b.vertex, b.report->bound_value,
                      b.report->actual_value, b.report->slack,
                      b.report->holds ? "yes" : "NO", b.report->equality ? "eq" : "-", charac);
        out << buf;
    }
    return out.str();
}

/// Per-theorem tally of a verification sweep.
struct TheoremTally {
    std::int64_t checked = 0;
    std::int64_t holds = 0;
    std::int64_t equality = 0;
    std::int64_t tolerance_events = 0;
    std::int64_t failures = 0;           // bound violated beyond tolerance
    std::int64_t characterizer_mismatch = 0;
    std::int64_t equality_beyond_class = 0;  // informational, not a failure
    double min_slack = 0.0;
    std::string min_slack_instance;
    bool has_min = false;

    void record(const BoundReport& r, const std::string& instance) {
        ++checked;
        if (r.holds) ++holds; else ++failures;
        if (r.equality) ++equality;
        if (r.tolerance_event) ++tolerance_events;
        if (!r.characterizer_agrees()) ++characterizer_mismatch;
        if (r.equality_beyond_class()) ++equality_beyond_class;
        if (!has_min || r.slack < min_slack) {
            min_slack = r.slack;
            min_slack_instance = instance;
            has_min = true;
        }
    }
};

struct SweepSummary {
    std::string corpus;
    std::int64_t instances = 0;
    std::map<std::string, TheoremTally> tallies;  // sorted by theorem name

    std::int64_t total_failures() const {
        std::int64_t f = 0;
        for (const auto& [name, t] : tallies) f += t.failures + t.characterizer_mismatch;
        return f;
    }
};

inline std::string to_json(const SweepSummary& s) {
    detail::JsonWriter w;
    w.begin_object();
    w.key("schema"); w.value("gainspec/1");
    w.key("corpus"); w.value(s.corpus);
    w.key("instances"); w.value(s.instances);
    w.key("failures"); w.value(s.total_failures());
    w.key("theorems"); w.begin_object();
    for (const auto& [name, t] : s.tallies) {
        w.key(name);
        w.begin_object();
        w.key("checked"); w.value(t.checked);
        w.key("holds"); w.value(t.holds);
        w.key("equality"); w.value(t.equality);
        w.key("tolerance_events"); w.value(t.tolerance_events);
        w.key("failures"); w.value(t.failures);
        w.key("characterizer_mismatch"); w.value(t.characterizer_mismatch);
        w.key("equality_beyond_class"); w.value(t.equality_beyond_class);
        if (t.has_min) {
            w.key("min_slack"); w.value(t.min_slack);
            w.key("min_slack_instance"); w.value(t.min_slack_instance);
        }
        w.end_object();
    }
    w.end_object();
    w.end_object();
    return w.str();
}

inline std::string to_table(const SweepSummary& s) {
    std::ostringstream out;
    out << "corpus: " << s.corpus << "\ninstances: " << s.instances << "\n";
    out << "theorem          checked   holds      eq tolev fail mismatch extra-eq    min slack\n";
    char buf[176];
    for (const auto& [name, t] : s.tallies) {
        std::snprintf(buf, sizeof(buf), "%-16s %7lld %7lld %7lld %5lld %4lld %8lld %8lld %12.4g\n",
                      name.c_str(), static_cast<long long>(t.checked),
                      static_cast<long long>(t.holds), static_cast<long long>(t.equality),
                      static_cast<long long>(t.tolerance_events),
                      static_cast<long long>(t.failures),
                      static_cast<long long>(t.characterizer_mismatch),
                      static_cast<long long>(t.equality_beyond_class), t.min_slack);
        out << buf;
    }
    out << "failures: " << s.total_failures() << "\n";
    return out.str();
}

}  // namespace gainspec

#endif
