// Field files: JSON-lines (real or complex tuples) and real-only CSV.
//
// JSON-lines layout, one object per line:
//   {"meta": {"m": 1, "n": 2, "adjacency": "path"}}        optional header
//   {"point": [0.0], "tuple": [2.0, -1.0]}                  real sample
//   {"point": [0.0], "tuple": [[1.0, 0.0], [-1.0, 0.0]]}    complex sample
// "adjacency" is "path" or an explicit list of index pairs [[0, 1], ...].
//
// CSV layout: a header row naming point columns "point*" followed by tuple
// columns "tuple*", then one sample per row. Adjacency is always "path".
#pragma once

#include <charconv>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "symprod/core.hpp"
#include "symprod/metric.hpp"
#include "symprod/selection.hpp"

namespace symprod::io {

/// Parse failure; line is 1-based, 0 when not tied to a line.
struct ParseError : InvalidInput {
    ParseError(std::size_t line_no, const std::string& msg)
        : InvalidInput(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg), line(line_no) {}
    std::size_t line;
};

/// Shortest decimal that parses back to the same double.
inline std::string format_exact(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// 12 significant digits, for human-facing output.
inline std::string format_human(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline double parse_double(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw InvalidInput("not a number: '" + std::string(s) + "'");
    }
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

/// "1,5,-2.5" -> RealTuple.
inline RealTuple parse_real_list(std::string_view s) {
    std::vector<double> v;
    for (auto part : split(s, ',')) v.push_back(parse_double(part));
    return RealTuple(std::move(v));
}

/// "1:0,-1:0.5" (re:im pairs; a bare number is real) -> ComplexTuple.
inline ComplexTuple parse_complex_list(std::string_view s) {
    std::vector<std::complex<double>> v;
    for (auto part : split(s, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string_view::npos) {
            v.emplace_back(parse_double(part), 0.0);
        } else {
            v.emplace_back(parse_double(part.substr(0, colon)), parse_double(part.substr(colon + 1)));
        }
    }
    return ComplexTuple(std::move(v));
}

struct FieldDocument {
    bool complex = false;
    bool has_meta = false;
    bool explicit_adjacency = false;
    std::size_t dim_m = 0;
    std::vector<RealTuple> points;
    std::vector<RealTuple> real_tuples;
    std::vector<ComplexTuple> complex_tuples;
    std::vector<Edge> adjacency;

    std::size_t size() const { return complex ? complex_tuples.size() : real_tuples.size(); }

    SampledField to_sampled_field() const {
        if (complex) throw InvalidInput("complex field cannot be lifted; use the holonomy command");
        SampledField f{dim_m, points, {}, adjacency};
        f.values.reserve(real_tuples.size());
        for (const auto& t : real_tuples) f.values.emplace_back(t);
        f.validate();
        return f;
    }
};

namespace detail {

inline std::vector<double> json_numbers(const nlohmann::json& arr, std::size_t line, const char* key) {
    if (!arr.is_array()) throw ParseError(line, std::string("\"") + key + "\" must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number()) throw ParseError(line, std::string("\"") + key + "\" must contain numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

inline std::vector<Edge> json_edges(const nlohmann::json& adj, std::size_t line) {
    std::vector<Edge> edges;
    for (const auto& e : adj) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw ParseError(line, "adjacency entries must be pairs of nonnegative integers");
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return edges;
}

}  // namespace detail

/// Reads a JSON-lines field. Blank lines are skipped. With require_point
/// false, or for complex samples, "point" may be omitted.
inline FieldDocument read_field_jsonl(std::istream& in, bool require_point = true) {
    FieldDocument doc;
    std::optional<std::size_t> meta_m, meta_n, tuple_n;
    std::optional<bool> mode_complex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) throw ParseError(line_no, "expected a JSON object");

        if (obj.contains("meta")) {
            if (doc.has_meta || doc.size() > 0) throw ParseError(line_no, "meta header must be the first line");
            const auto& meta = obj["meta"];
            if (!meta.is_object()) throw ParseError(line_no, "\"meta\" must be an object");
            doc.has_meta = true;
            if (meta.contains("m")) {
                if (!meta["m"].is_number_unsigned()) throw ParseError(line_no, "\"m\" must be a nonnegative integer");
                meta_m = meta["m"].get<std::size_t>();
            }
            if (meta.contains("n")) {
                if (!meta["n"].is_number_unsigned()) throw ParseError(line_no, "\"n\" must be a nonnegative integer");
                meta_n = meta["n"].get<std::size_t>();
            }
            if (meta.contains("adjacency")) {
                const auto& adj = meta["adjacency"];
                if (adj.is_string()) {
                    if (adj.get<std::string>() != "path")
                        throw ParseError(line_no, "unknown adjacency '" + adj.get<std::string>() + "'");
                } else if (adj.is_array()) {
                    doc.adjacency = detail::json_edges(adj, line_no);
                    doc.explicit_adjacency = true;
                } else {
                    throw ParseError(line_no, "\"adjacency\" must be \"path\" or a list of pairs");
                }
            }
            continue;
        }

        if (!obj.contains("tuple")) throw ParseError(line_no, "missing \"tuple\"");
        const auto& tup = obj["tuple"];
        if (!tup.is_array()) throw ParseError(line_no, "\"tuple\" must be an array");
        const bool is_complex = !tup.empty() && tup.front().is_array();
        if (mode_complex && *mode_complex != is_complex)
            throw ParseError(line_no, "mixed real and complex tuples");
        mode_complex = is_complex;
        doc.complex = is_complex;

        try {
            if (is_complex) {
                std::vector<std::complex<double>> vals;
                for (const auto& pair : tup) {
                    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
                        throw ParseError(line_no, "complex entries must be [re, im] pairs");
                    vals.emplace_back(pair[0].get<double>(), pair[1].get<double>());
                }
                doc.complex_tuples.emplace_back(std::move(vals));
            } else {
                doc.real_tuples.emplace_back(detail::json_numbers(tup, line_no, "tuple"));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidInput& e) {
            throw ParseError(line_no, e.what());
        }
        const std::size_t n = tup.size();
        if (tuple_n && *tuple_n != n) throw ParseError(line_no, "tuple length differs from earlier lines");
        if (meta_n && *meta_n != n) throw ParseError(line_no, "tuple length differs from meta \"n\"");
        tuple_n = n;

        if (obj.contains("point")) {
            auto p = detail::json_numbers(obj["point"], line_no, "point");
            if (!doc.points.empty() && doc.points.front().size() != p.size())
                throw ParseError(line_no, "point dimension differs from earlier lines");
            if (meta_m && *meta_m != p.size()) throw ParseError(line_no, "point dimension differs from meta \"m\"");
            try {
                doc.points.emplace_back(std::move(p));
            } catch (const InvalidInput& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (require_point && !is_complex) {
            throw ParseError(line_no, "missing \"point\"");
        }
        if (!doc.points.empty() && doc.points.size() != doc.size())
            throw ParseError(line_no, "\"point\" present on some lines only");
    }

    doc.complex = mode_complex.value_or(false);
    if (doc.size() == 0) throw ParseError(0, "no samples");
    doc.dim_m = doc.points.empty() ? meta_m.value_or(0) : doc.points.front().size();
    if (!doc.explicit_adjacency) doc.adjacency = path_adjacency(doc.size());
    for (const auto& [a, b] : doc.adjacency)
        if (a >= doc.size() || b >= doc.size()) throw ParseError(0, "adjacency references a missing sample");
    return doc;
}

/// Reads a real-only CSV field (header required).
inline FieldDocument read_field_csv(std::istream& in) {
    FieldDocument doc;
    std::string line;
    std::size_t line_no = 0;
    std::size_t m = 0, n = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split(line, ',');
        if (!header) {
            bool in_tuple = false;
            for (auto cell : cells) {
                std::string_view c = cell;
                while (!c.empty() && (c.front() == ' ' || c.front() == '"')) c.remove_prefix(1);
                while (!c.empty() && (c.back() == ' ' || c.back() == '"' || c.back() == '\r')) c.remove_suffix(1);
                if (c.starts_with("point")) {
                    if (in_tuple) throw ParseError(line_no, "point columns must precede tuple columns");
                    ++m;
                } else if (c.starts_with("tuple")) {
                    in_tuple = true;
                    ++n;
                } else {
                    throw ParseError(line_no, "header column '" + std::string(c) +
                                                  "' must start with \"point\" or \"tuple\"");
                }
            }
            if (n == 0) throw ParseError(line_no, "header declares no tuple columns");
            header = true;
            continue;
        }
        if (cells.size() != m + n)
            throw ParseError(line_no, "expected " + std::to_string(m + n) + " columns, found " +
                                          std::to_string(cells.size()));
        std::vector<double> p, t;
        try {
            for (std::size_t i = 0; i < m; ++i) p.push_back(parse_double(cells[i]));
            for (std::size_t i = m; i < m + n; ++i) t.push_back(parse_double(cells[i]));
            doc.points.emplace_back(std::move(p));
            doc.real_tuples.emplace_back(std::move(t));
        } catch (const InvalidInput& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!header) throw ParseError(0, "missing CSV header");
    if (doc.size() == 0) throw ParseError(0, "no samples");
    doc.dim_m = m;
    doc.adjacency = path_adjacency(doc.size());
    return doc;
}

namespace detail {
inline void write_array(std::ostream& out, const RealTuple& t) {
    out << '[';
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) out << ',';
        out << format_exact(t[k]);
    }
    out << ']';
}
}  // namespace detail

/// Writes a lifted field as JSON-lines with a meta header. Output read back
/// and lifted again reproduces the same bytes.
inline void write_lifted_jsonl(std::ostream& out, const LiftedField& f, bool explicit_adjacency) {
    const std::size_t n = f.values.empty() ? 0 : f.values.front().size();
    out << "{\"meta\":{\"m\":" << f.dim_m << ",\"n\":" << n << ",\"adjacency\":";
    if (explicit_adjacency) {
        out << '[';
        for (std::size_t i = 0; i < f.adjacency.size(); ++i) {
            if (i) out << ',';
            out << '[' << f.adjacency[i].first << ',' << f.adjacency[i].second << ']';
        }
        out << ']';
    } else {
        out << "\"path\"";
    }
    out << "}}\n";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        out << "{\"point\":";
        detail::write_array(out, f.points.empty() ? RealTuple{} : f.points[i]);
        out << ",\"tuple\":";
        detail::write_array(out, f.values[i]);
        out << "}\n";
    }
}

inline std::string to_string(const RealTuple& t) {
    std::string s = "[";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ", ";
        s += format_human(t[k]);
    }
    return s + "]";
}

inline std::string to_string(const Permutation& p) {
    std::string s = "[";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) s += ", ";
        s += std::to_string(p(k));
    }
    return s + "]";
}

}  // namespace symprod::io
