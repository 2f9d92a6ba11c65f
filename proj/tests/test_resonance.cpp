#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "polydyn/families.hpp"
#include "polydyn/jacobian.hpp"
#include "polydyn/resonance.hpp"
#include "polydyn/spectrum.hpp"

using namespace polydyn;

namespace {

std::vector<int> halves(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

TEST_CASE("eigen symbols of the gamma family") {
    auto syms = eigen_symbols_gamma_d(3);
    REQUIRE(syms.size() == 3);
    CHECK(syms[0] == EigenSymbol(1, halves({1, 1, 0})));
    CHECK(syms[1] == EigenSymbol(-1, halves({1, 1, 0})));
    CHECK(syms[2] == EigenSymbol(1, halves({0, 0, 2})));
    CHECK(syms[0].str() == "l1^(1/2)*l2^(1/2)");
    CHECK(syms[1].str() == "-l1^(1/2)*l2^(1/2)");
    CHECK(syms[2].str() == "l3");

    // product of the two square-root symbols is -l1*l2
    CHECK(syms[0].times(syms[1]) == EigenSymbol(-1, halves({2, 2, 0})));

    auto five = eigen_symbols_gamma_d(5);
    REQUIRE(five.size() == 5);
    CHECK(five[2] == EigenSymbol::parameter(5, 2));
    CHECK(five[3] == EigenSymbol::parameter(5, 3));
    CHECK(five[4] == EigenSymbol::parameter(5, 4));

    CHECK_THROWS_AS(eigen_symbols_gamma_d(2), ParameterError);
}

TEST_CASE("eigen symbol algebra: products multiply signs and add exponents") {
    std::mt19937_64 eng(31337);
    std::uniform_int_distribution<int> h(-4, 4), s(0, 1);
    for (int t = 0; t < 500; ++t) {
        std::vector<int> e1, e2;
        for (int j = 0; j < 4; ++j) {
            e1.push_back(h(eng));
            e2.push_back(h(eng));
        }
        EigenSymbol a(s(eng) ? 1 : -1, e1), b(s(eng) ? 1 : -1, e2);
        auto prod = a.times(b);
        CHECK(prod.sign() == a.sign() * b.sign());
        for (int j = 0; j < 4; ++j)
            CHECK(prod.half_exponents()[static_cast<size_t>(j)] == e1[static_cast<size_t>(j)] + e2[static_cast<size_t>(j)]);

        unsigned k = static_cast<unsigned>(s(eng) ? 2 : 3);
        auto pw = a.pow(k);
        CHECK(pw.sign() == (k % 2 == 0 ? 1 : a.sign()));
        for (int j = 0; j < 4; ++j)
            CHECK(pw.half_exponents()[static_cast<size_t>(j)] ==
                  e1[static_cast<size_t>(j)] * static_cast<int>(k));
    }
}

TEST_CASE("symbolic resonance: gamma family is non-resonant to order 12") {
    for (int d : {3, 4, 5}) {
        auto rep = check_resonance_symbolic(eigen_symbols_gamma_d(d), 12);
        CHECK_FALSE(rep.resonant);
        CHECK(rep.witnesses.empty());
        CHECK(rep.order_checked == 12);
    }
}

TEST_CASE("symbolic resonance: forced witness and sign obstruction") {
    // {l1, l1^2}: alpha_2 = alpha_1^2
    std::vector<EigenSymbol> forced{EigenSymbol(1, halves({2})), EigenSymbol(1, halves({4}))};
    auto rep = check_resonance_symbolic(forced, 6);
    CHECK(rep.resonant);
    REQUIRE(!rep.witnesses.empty());
    CHECK(rep.witnesses.front().target_index == 2);
    CHECK(rep.witnesses.front().multi_index == std::vector<int>{2, 0});

    // {+sqrt(l1 l2), -sqrt(l1 l2)}: any |m| >= 2 product has integer
    // exponents, targets have half-integer ones
    std::vector<EigenSymbol> pair{EigenSymbol(1, halves({1, 1})),
                                  EigenSymbol(-1, halves({1, 1}))};
    auto rep2 = check_resonance_symbolic(pair, 10);
    CHECK_FALSE(rep2.resonant);
}

TEST_CASE("symbolic resonance is monotone in the order bound") {
    std::mt19937_64 eng(777);
    std::uniform_int_distribution<int> h(0, 2), s(0, 1);
    for (int t = 0; t < 20; ++t) {
        std::vector<EigenSymbol> syms;
        for (int i = 0; i < 3; ++i) {
            std::vector<int> e;
            for (int j = 0; j < 2; ++j) e.push_back(h(eng));
            syms.emplace_back(s(eng) ? 1 : -1, e);
        }
        auto small = check_resonance_symbolic(syms, 4);
        auto large = check_resonance_symbolic(syms, 7);
        std::set<std::pair<int, std::vector<int>>> big;
        for (const auto& w : large.witnesses) big.emplace(w.target_index, w.multi_index);
        for (const auto& w : small.witnesses)
            CHECK(big.count({w.target_index, w.multi_index}) == 1);
    }
}

TEST_CASE("numeric resonance: witness, clean pair, gamma spectrum") {
    auto rep = check_resonance_numeric({Complex(0.5, 0), Complex(0.25, 0)}, 6, 1e-12);
    CHECK(rep.resonant);
    REQUIRE(!rep.witnesses.empty());
    CHECK(rep.witnesses.front().target_index == 2);
    CHECK(rep.witnesses.front().multi_index == std::vector<int>{2, 0});

    auto clean = check_resonance_numeric({Complex(0.5, 0), Complex(1.0 / 3.0, 0)}, 12, 1e-12);
    CHECK_FALSE(clean.resonant);
    CHECK(clean.min_gap > 1e-12);

    auto g = make_gamma3(Rational(1, 3), Rational(1, 4), Rational(1, 5));
    auto ed = eigen_decompose(to_complex(linear_part(g)));
    auto grep = check_resonance_numeric(ed.values, 12, 1e-10);
    CHECK_FALSE(grep.resonant);
    CHECK(grep.min_gap > 1e-2);  // comfortably non-resonant at the default lambda

    auto outside = check_resonance_numeric({Complex(2.0, 0), Complex(0.5, 0)}, 4, 1e-12);
    CHECK(!outside.caveats.empty());  // Poincare-domain warning
}

TEST_CASE("symbolic and numeric checkers agree on coincidence-free lambdas") {
    // prime unit fractions cannot satisfy multiplicative relations
    std::vector<std::vector<Rational>> lambda_sets{
        {Rational(1, 3), Rational(1, 5), Rational(1, 7)},
        {Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 11)},
        {Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 11), Rational(1, 13)},
    };
    for (const auto& lambdas : lambda_sets) {
        int d = static_cast<int>(lambdas.size());
        auto sym = check_resonance_symbolic(eigen_symbols_gamma_d(d), 12);
        auto g = make_gamma_d(lambdas);
        auto ed = eigen_decompose(to_complex(linear_part(g)));
        auto num = check_resonance_numeric(ed.values, 12, 1e-10);
        CHECK(sym.resonant == num.resonant);
        CHECK_FALSE(num.resonant);
    }
}

TEST_CASE("resonance input validation") {
    CHECK_THROWS_AS(check_resonance_symbolic(eigen_symbols_gamma_d(3), 1), ParameterError);
    CHECK_THROWS_AS(check_resonance_numeric({}, 4, 1e-10), ParameterError);
}
