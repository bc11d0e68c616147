#include <gtest/gtest.h>

#include <cstring>
#include <sstream>

#include "symprod/field_io.hpp"
#include "symprod/random.hpp"

using namespace symprod;

namespace {
io::FieldDocument parse(const std::string& text, bool require_point = true) {
    std::istringstream in(text);
    return io::read_field_jsonl(in, require_point);
}

std::size_t error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const io::ParseError& e) {
        return e.line;
    }
    return 0;
}
}  // namespace

TEST(FormatExact, RoundTripsBitExactly) {
    random::Rng rng(9);
    std::uniform_int_distribution<std::uint64_t> bits;
    for (int t = 0; t < 5000; ++t) {
        double v;
        const std::uint64_t b = bits(rng);
        std::memcpy(&v, &b, sizeof v);
        if (!std::isfinite(v)) continue;
        const double back = io::parse_double(io::format_exact(v));
        EXPECT_EQ(std::memcmp(&v, &back, sizeof v), 0) << io::format_exact(v);
    }
    EXPECT_EQ(io::format_exact(0.1), "0.1");
    EXPECT_EQ(io::format_exact(3.0), "3");
}

TEST(FormatHuman, TwelveSignificantDigits) {
    EXPECT_EQ(io::format_human(3.0), "3");
    EXPECT_EQ(io::format_human(1.0 / 3.0), "0.333333333333");
}

TEST(ParseLists, RealAndComplex) {
    EXPECT_EQ(io::parse_real_list("1, 5,-2.5"), (RealTuple{1, 5, -2.5}));
    EXPECT_THROW(io::parse_real_list("1,,2"), InvalidInput);
    EXPECT_THROW(io::parse_real_list("1,abc"), InvalidInput);
    EXPECT_THROW(io::parse_real_list("nan"), InvalidInput);
    EXPECT_EQ(io::parse_complex_list("0:1,0:-1,2"), (ComplexTuple{{0, 1}, {0, -1}, {2, 0}}));
}

TEST(ReadJsonl, RealWithMeta) {
    const auto doc = parse(R"({"meta": {"m": 1, "n": 2, "adjacency": "path"}}
{"point": [0], "tuple": [2, -1]}

{"point": [1], "tuple": [0, 0]}
)");
    EXPECT_FALSE(doc.complex);
    EXPECT_TRUE(doc.has_meta);
    EXPECT_EQ(doc.size(), 2u);
    EXPECT_EQ(doc.dim_m, 1u);
    EXPECT_EQ(doc.adjacency, (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(doc.real_tuples[0], (RealTuple{2, -1}));
}

TEST(ReadJsonl, ExplicitAdjacencyAndComplex) {
    const auto doc = parse(R"({"meta": {"adjacency": [[1, 0]]}}
{"tuple": [[1, 0], [0, 1]]}
{"tuple": [[1, 0.5], [0, 1]]}
)",
                           false);
    EXPECT_TRUE(doc.complex);
    EXPECT_TRUE(doc.explicit_adjacency);
    EXPECT_EQ(doc.adjacency, (std::vector<Edge>{{1, 0}}));
    EXPECT_THROW(doc.to_sampled_field(), InvalidInput);
}

TEST(ReadJsonl, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line("{\"point\": [0], \"tuple\": [1, 2]}\n{\"point\": [1], \"tuple\": [1]}\n"), 2u);
    EXPECT_EQ(error_line("{\"point\": [0], \"tuple\": [1, 2]}\nnot json\n"), 2u);
    EXPECT_EQ(error_line("{\"point\": [0]}\n"), 1u);
    EXPECT_EQ(error_line("{\"tuple\": [1]}\n"), 1u);
    EXPECT_EQ(error_line("\n\n{\"point\": [0], \"tuple\": [1, \"x\"]}\n"), 3u);
    EXPECT_EQ(error_line("{\"meta\": {\"n\": 3}}\n{\"point\": [0], \"tuple\": [1, 2]}\n"), 2u);
    EXPECT_EQ(error_line("{\"point\": [0], \"tuple\": [1]}\n{\"meta\": {}}\n"), 2u);
    EXPECT_EQ(error_line("{\"point\": [0], \"tuple\": [1]}\n{\"point\": [0], \"tuple\": [[1, 0]]}\n"), 2u);
    EXPECT_EQ(error_line("{\"point\": [0], \"tuple\": [1e999]}\n"), 1u);
    EXPECT_THROW(parse(""), io::ParseError);
    EXPECT_THROW(parse("{\"meta\": {\"adjacency\": [[0, 3]]}}\n{\"point\": [0], \"tuple\": [1]}\n"),
                 io::ParseError);
}

TEST(ReadCsv, RealField) {
    std::istringstream in("point0,tuple0,tuple1\n0,3,1\n1,2,2\n");
    const auto doc = io::read_field_csv(in);
    EXPECT_EQ(doc.dim_m, 1u);
    EXPECT_EQ(doc.real_tuples[1], (RealTuple{2, 2}));
    EXPECT_EQ(doc.adjacency, (std::vector<Edge>{{0, 1}}));
}

TEST(ReadCsv, Errors) {
    std::istringstream no_header("0,3,1\n");
    EXPECT_THROW(io::read_field_csv(no_header), io::ParseError);
    std::istringstream short_row("point0,tuple0\n0,1\n2\n");
    try {
        io::read_field_csv(short_row);
        FAIL();
    } catch (const io::ParseError& e) {
        EXPECT_EQ(e.line, 3u);
    }
    std::istringstream order("tuple0,point0\n0,1\n");
    EXPECT_THROW(io::read_field_csv(order), io::ParseError);
}

TEST(WriteLifted, ReadBackAndRelift) {
    random::Rng rng(12);
    SampledField phi;
    phi.dim_m = 2;
    for (int i = 0; i < 25; ++i) {
        phi.points.push_back(random::real_tuple(rng, 2));
        phi.values.emplace_back(random::real_tuple(rng, 4, -1e6, 1e6));
    }
    phi.adjacency = {{0, 3}, {3, 7}, {24, 1}};
    const auto f = lift_field(phi);
    std::ostringstream first;
    io::write_lifted_jsonl(first, f, true);

    std::istringstream in(first.str());
    const auto doc = io::read_field_jsonl(in);
    EXPECT_EQ(doc.adjacency, phi.adjacency);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        EXPECT_EQ(doc.real_tuples[i], f.values[i]);
        EXPECT_EQ(doc.points[i], f.points[i]);
    }
    std::ostringstream second;
    io::write_lifted_jsonl(second, lift_field(doc.to_sampled_field()), doc.explicit_adjacency);
    EXPECT_EQ(first.str(), second.str());
}
