#include <doctest.h>

#include <random>

#include "polydyn/families.hpp"
#include "polydyn/map_file.hpp"
#include "polydyn/report.hpp"
#include "test_util.hpp"

using namespace polydyn;

namespace {

const char* kGamma3Text = R"(map gamma3 {
  vars: x, y, z
  params: l1 = 1/3, l2 = 1/4, l3 = 1/5
  x -> l1*(y + x*z)
  y -> l2*x
  z -> l3*z
}
)";

}  // namespace

TEST_CASE("gamma3.map parses to the constructed family") {
    MapSpec spec = parse_single_map(kGamma3Text);
    CHECK(spec.name == "gamma3");
    CHECK(spec.vars == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(spec.params.size() == 3);
    CHECK(spec.params[0].second == Rational(1, 3));
    CHECK(spec.map == make_gamma3(Rational(1, 3), Rational(1, 4), Rational(1, 5)));
}

TEST_CASE("parameter substitution expands exactly") {
    MapSpec spec = parse_single_map(kGamma3Text);
    RationalPoly x = RationalPoly::variable(3, 0), y = RationalPoly::variable(3, 1),
                 z = RationalPoly::variable(3, 2);
    CHECK(spec.map.component(0) == Rational(1, 3) * y + Rational(1, 3) * (x * z));
}

TEST_CASE("undeclared identifier carries its position") {
    const char* text = "map bad {\n  vars: x\n  x -> x + undeclared_w\n}\n";
    try {
        parse_map_file(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 12);
        CHECK(std::string(e.what()).find("undeclared_w") != std::string::npos);
    }
}

TEST_CASE("grammar corners: exponents, unary minus, parentheses, integers") {
    const char* text =
        "map corners { vars: u, v\n"
        "  u -> -u^2*v + (u - 2)*(u + 2) + 7/2\n"
        "  v -> v^0 - 1\n"
        "}\n";
    MapSpec spec = parse_single_map(text);
    RationalPoly u = RationalPoly::variable(2, 0), v = RationalPoly::variable(2, 1);
    RationalPoly expect_u = -(u * u * v) + u * u + RationalPoly::constant(2, Rational(-1, 2));
    CHECK(spec.map.component(0) == expect_u);
    CHECK(spec.map.component(1).is_zero());
}

TEST_CASE("parse errors: syntax, semantics, zero denominator") {
    CHECK_THROWS_AS(parse_map_file(""), ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x\n  x -> x +\n}"), ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x\n  x -> x^y\n}"), ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x\n  y -> x\n}"), ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x\n  x -> x\n  x -> 2*x\n}"), ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x, y\n  x -> x\n}"), ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x, x\n  x -> x\n}"), ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x\n  params: x = 1\n  x -> x\n}"),
                    ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x\n  x -> 1/0\n}"), ParseError);
    CHECK_THROWS_AS(parse_map_file("map m { vars: x\n  x -> 1.5*x\n}"), ParseError);
}

TEST_CASE("multiple maps per file; identifiers do not leak across maps") {
    const char* text =
        "map first { vars: x\n  params: a = 1/2\n  x -> a*x\n}\n"
        "map second { vars: a\n  a -> a^2\n}\n";
    auto maps = parse_map_file(text);
    REQUIRE(maps.size() == 2);
    CHECK(maps[0].name == "first");
    CHECK(maps[1].name == "second");
    CHECK(maps[1].map.component(0).degree() == 2);
}

TEST_CASE("render/parse round trip") {
    MapSpec spec = parse_single_map(kGamma3Text);
    MapSpec again = parse_single_map(render_map(spec));
    CHECK(spec == again);

    // negative coefficients and exponents survive the trip
    const char* text =
        "map tricky { vars: p, q\n"
        "  p -> -3/4*p^3 + p*q - 1\n"
        "  q -> q\n"
        "}\n";
    MapSpec t1 = parse_single_map(text);
    MapSpec t2 = parse_single_map(render_map(t1));
    CHECK(t1 == t2);
}

TEST_CASE("random maps survive the render/parse round trip") {
    testutil::Rng rng(31415);
    for (int t = 0; t < 25; ++t) {
        int dim = rng.uniform(1, 3);
        std::vector<RationalPoly> comps;
        for (int i = 0; i < dim; ++i)
            comps.push_back(testutil::random_poly(rng, dim, 3, 4));
        std::vector<std::string> vars;
        for (int i = 0; i < dim; ++i) vars.push_back("v" + std::to_string(i + 1));
        MapSpec spec{"rnd", vars, {}, RationalMap(comps, "rnd", vars)};
        MapSpec back = parse_single_map(render_map(spec));
        CHECK(spec == back);
    }
}

TEST_CASE("random garbage never crashes the parser, only ParseError") {
    std::mt19937_64 eng(0xfeedface);
    const std::string alphabet = "map{}()vars:paramsxyz123/^*+-=,.>_ \n\t";
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 80);
    for (int t = 0; t < 300; ++t) {
        std::string text;
        int n = len(eng);
        for (int i = 0; i < n; ++i) text += alphabet[pick(eng)];
        try {
            parse_map_file(text);
        } catch (const ParseError&) {
            // expected for almost every input
        }
    }
    // prefix of a valid file plus garbage still fails cleanly
    std::string valid = kGamma3Text;
    for (size_t cut = 0; cut < valid.size(); cut += 7) {
        try {
            parse_map_file(valid.substr(0, cut) + "@");
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("float mode converts the exact coefficients") {
    MapSpec spec = parse_single_map(kGamma3Text);
    ComplexMap fm = to_float_map(spec);
    Complex c = fm.component(0).coefficient(Monomial::axis(3, 1));
    CHECK(std::abs(c - Complex(1.0 / 3.0, 0)) < 1e-15);
}

TEST_CASE("structured map serialization lists terms in graded-lex order") {
    MapSpec spec = parse_single_map(kGamma3Text);
    auto j = structured_map_json(spec.map);
    CHECK(j["name"] == "gamma3");
    CHECK(j["dimension"] == 3);
    REQUIRE(j["components"].size() == 3);
    // first component: 1/3*x*z before 1/3*y
    CHECK(j.dump() ==
          R"({"name":"gamma3","dimension":3,"components":[[{"exponents":[1,0,1],"coeff":"1/3"},{"exponents":[0,1,0],"coeff":"1/3"}],[{"exponents":[1,0,0],"coeff":"1/4"}],[{"exponents":[0,0,1],"coeff":"1/5"}]]})");
}

TEST_CASE("digest and CSV plumbing") {
    CHECK(digest_hex("abc") == digest_hex("abc"));
    CHECK(digest_hex("abc") != digest_hex("abd"));
    CHECK(digest_hex("abc").size() == 16);

    auto csv = to_csv({"n", "deg"}, {{"1", "2"}, {"2", "3"}});
    CHECK(csv == "n,deg\n1,2\n2,3\n");
}
