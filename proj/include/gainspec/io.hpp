#ifndef GAINSPEC_IO_HPP
#define GAINSPEC_IO_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gainspec/gain_graph.hpp"

namespace gainspec {

/// Malformed input file or expression.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::string format17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw ParseError(std::string(what) + ": bad number '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + ": bad number '" + s + "'");
    }
}

inline long parse_long(const std::string& s, const char* what) {
    long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError(std::string(what) + ": bad integer '" + s + "'");
    return v;
}

}  // namespace detail

/// Angle expression: a plain float, or "pi", "pi/<k>", "<j>pi/<k>", "<j>pi",
/// with an optional leading '-'.
inline double parse_angle(const std::string& expr) {
    if (expr.empty()) throw ParseError("angle: empty expression");
    std::string s = expr;
    double sign = 1.0;
    if (s[0] == '-') { sign = -1.0; s = s.substr(1); }
    else if (s[0] == '+') { s = s.substr(1); }
    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) return sign * detail::parse_double(s, "angle");
    const std::string jpart = s.substr(0, pi_pos);
    std::string kpart = s.substr(pi_pos + 2);
    double j = 1.0;
    if (!jpart.empty()) j = static_cast<double>(detail::parse_long(jpart, "angle numerator"));
    double k = 1.0;
    if (!kpart.empty()) {
        if (kpart[0] != '/') throw ParseError("angle: expected '/' after pi in '" + expr + "'");
        kpart = kpart.substr(1);
        k = static_cast<double>(detail::parse_long(kpart, "angle denominator"));
        if (k == 0.0) throw ParseError("angle: zero denominator in '" + expr + "'");
    }
    return sign * j * std::numbers::pi / k;
}

/// Gain token(s): "@<angle-expr>" or two floats "<re> <im>".
inline UnitComplex parse_gain(const std::vector<std::string>& tokens) {
    if (tokens.size() == 1 && !tokens[0].empty() && tokens[0][0] == '@')
        return UnitComplex::from_angle(parse_angle(tokens[0].substr(1)));
    if (tokens.size() == 2) {
        const double re = detail::parse_double(tokens[0], "gain re");
        const double im = detail::parse_double(tokens[1], "gain im");
        if (std::abs(re * re + im * im - 1.0) > 1e-9)
            throw ParseError("gain: modulus differs from 1 beyond 1e-9");
        // Normalize tiny drift so the stored gain is unit within 1e-12.
        const double r = std::sqrt(re * re + im * im);
        return UnitComplex(re / r, im / r);
    }
    throw ParseError("gain: expected '@angle' or '<re> <im>'");
}

/// Gain from a single string: an angle expression ("pi/2", "1.2", "3pi/4")
/// or a rectangular form "a+bi" / "a-bi" / "bi" / "i" / "a".
inline UnitComplex parse_unit_complex(const std::string& expr) {
    std::string s;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("gain: empty expression");
    if (s.find('i') == std::string::npos || s.find("pi") != std::string::npos)
        return UnitComplex::from_angle(parse_angle(s));
    // Rectangular: split at the sign introducing the imaginary part.
    const std::size_t ipos = s.find('i');
    if (ipos != s.size() - 1) throw ParseError("gain: 'i' must be final in '" + expr + "'");
    std::string body = s.substr(0, ipos);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    double re = 0.0, im = 0.0;
    auto part = [](std::string t, const char* what) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return detail::parse_double(t, what);
    };
    if (split == std::string::npos) {
        im = part(body, "gain im");
    } else {
        re = detail::parse_double(body.substr(0, split), "gain re");
        im = part(body.substr(split), "gain im");
    }
    if (std::abs(re * re + im * im - 1.0) > 1e-9)
        throw ParseError("gain: modulus differs from 1 beyond 1e-9");
    const double r = std::sqrt(re * re + im * im);
    return UnitComplex(re / r, im / r);
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Parses a single graph6 line (short form, n <= 62).
inline SimpleGraph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty input");
    if (s[0] == '>') throw ParseError("graph6: headers not supported");
    if (s[0] == 126) throw ParseError("graph6: long form (n > 62) not supported");
    if (s[0] < 63 || s[0] > 125) throw ParseError("graph6: bad size character");
    const int n = s[0] - 63;
    const int bits = n * (n - 1) / 2;
    const int payload = (bits + 5) / 6;
    if (static_cast<int>(s.size()) < 1 + payload) throw ParseError("graph6: truncated payload");
    if (static_cast<int>(s.size()) > 1 + payload) throw ParseError("graph6: trailing garbage");
    SimpleGraph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const char c = s[1 + bit / 6];
            if (c < 63 || c > 126) throw ParseError("graph6: bad payload character");
            const int group = c - 63;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    // Padding bits must be zero.
    for (int b = bits; b < payload * 6; ++b) {
        const int group = s[1 + b / 6] - 63;
        if ((group >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

inline std::string encode_graph6(const SimpleGraph& g) {
    if (g.n > 62) throw std::invalid_argument("encode_graph6: n must be <= 62");
    const int bits = g.n * (g.n - 1) / 2;
    const int payload = (bits + 5) / 6;
    std::string s(1 + payload, static_cast<char>(63));
    s[0] = static_cast<char>(63 + g.n);
    int bit = 0;
    for (int col = 1; col < g.n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (g.has_edge(row, col)) s[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// GGF
// ---------------------------------------------------------------------------

/// GGF text format. Line 1: "GGF1 <n> <m>". Then m edge lines,
/// "<u> <v> <re> <im>" or "<u> <v> @<angle>", 0-indexed with u < v.
/// '#' starts a comment; blank lines are skipped.
inline GainGraph parse_ggf(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::vector<std::vector<std::string>> lines;
    while (std::getline(in, raw)) {
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) tokens.push_back(t);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    if (lines.empty()) throw ParseError("ggf: empty input");
    const auto& head = lines[0];
    if (head.size() != 3 || head[0] != "GGF1") throw ParseError("ggf: bad header");
    const long n = detail::parse_long(head[1], "ggf n");
    const long m = detail::parse_long(head[2], "ggf m");
    if (n < 0 || n > 62) throw ParseError("ggf: n out of range");
    if (m < 0) throw ParseError("ggf: negative edge count");
    if (static_cast<long>(lines.size()) - 1 != m)
        throw ParseError("ggf: edge count does not match header");
    std::vector<GainEdge> edges;
    for (long i = 1; i <= m; ++i) {
        const auto& tok = lines[i];
        if (tok.size() != 3 && tok.size() != 4) throw ParseError("ggf: bad edge line");
        const long u = detail::parse_long(tok[0], "ggf u");
        const long v = detail::parse_long(tok[1], "ggf v");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("ggf: vertex index out of range");
        if (u >= v) throw ParseError("ggf: edges must have u < v");
        const UnitComplex gain =
            parse_gain(std::vector<std::string>(tok.begin() + 2, tok.end()));
        edges.push_back({static_cast<int>(u), static_cast<int>(v), gain});
    }
    try {
        return GainGraph(static_cast<int>(n), std::move(edges));
    } catch (const std::exception& e) {
        throw ParseError(std::string("ggf: ") + e.what());
    }
}

inline std::string write_ggf(const GainGraph& g) {
    std::string out = "GGF1 " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.p) + " " + std::to_string(e.q) + " " +
               detail::format17(e.gain.re()) + " " + detail::format17(e.gain.im()) + "\n";
    }
    return out;
}

}  // namespace gainspec

#endif
