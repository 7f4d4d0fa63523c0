#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "ncsym/morphisms.hpp"
#include "ncsym/text_io.hpp"

using namespace ncsym;

namespace {

SetPartition sp(std::vector<std::vector<int>> blocks) {
    return SetPartition::from_blocks(std::move(blocks));
}

} // namespace

TEST_CASE("rational text forms") {
    CHECK(to_text(Rational(5)) == "5");
    CHECK(to_text(Rational(-3, 2)) == "-3/2");
    CHECK(to_text(Rational(0)) == "0");
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1//2"), ParseError);
}

TEST_CASE("set partition text keeps digit form below ten elements") {
    CHECK(to_text(sp({{1, 3}, {2}})) == "13|2");
    CHECK(to_text(sp({{1, 2, 3, 4, 5, 6, 7, 8, 9}})) == "123456789");
    CHECK(to_text(SetPartition{}) == "");

    const SetPartition big = sp({{1, 3, 10}, {2, 4, 5, 6, 7, 8, 9}});
    CHECK(to_text(big) == "1,3,10|2,4,5,6,7,8,9");
    CHECK(parse_set_partition("1,3,10|2,4,5,6,7,8,9") == big);
    CHECK(parse_set_partition("1,3|2") == sp({{1, 3}, {2}}));
    CHECK(parse_set_partition("13|2") == sp({{1, 3}, {2}}));
    CHECK(parse_set_partition("") == SetPartition{});

    CHECK_THROWS_AS(parse_set_partition("12|2"), ParseError);
    CHECK_THROWS_AS(parse_set_partition("13|"), ParseError);
    CHECK_THROWS_AS(parse_set_partition("1,|2"), ParseError);

    for (int m = 0; m <= 5; ++m)
        for (const SetPartition& a : enumerate_set_partitions(m))
            CHECK(parse_set_partition(to_text(a)) == a);
}

TEST_CASE("composition and partition text forms") {
    CHECK(to_text(Composition({2, 1, 3, 2})) == "(2,1,3,2)");
    CHECK(to_text(Composition{}) == "()");
    CHECK(parse_composition("(2,1,3,2)") == Composition({2, 1, 3, 2}));
    CHECK(parse_composition("()") == Composition{});
    CHECK_THROWS_AS(parse_composition("(2,0)"), ParseError);
    CHECK_THROWS_AS(parse_composition("(2,"), ParseError);
    CHECK_THROWS_AS(parse_composition("2,1"), ParseError);

    CHECK(to_text(IntegerPartition({3, 1, 1})) == "[3,1,1]");
    CHECK(to_text(IntegerPartition{}) == "[]");
    CHECK(parse_partition("[3,1,1]") == IntegerPartition({3, 1, 1}));
    CHECK(parse_partition("[1,3,1]") == IntegerPartition({3, 1, 1}));
    CHECK(parse_partition("[]") == IntegerPartition{});
    CHECK_THROWS_AS(parse_partition("[0]"), ParseError);

    for (int n = 0; n <= 6; ++n)
        for (const Composition& alpha : compositions(n))
            CHECK(parse_composition(to_text(alpha)) == alpha);
}

TEST_CASE("word text forms") {
    CHECK(to_text(Word{1, 2, 1}) == "x1.x2.x1");
    CHECK(to_text(Word{}) == "");
    CHECK(parse_word("x1.x2.x1") == Word{1, 2, 1});
    CHECK(parse_word("x12") == Word{12});
    CHECK(parse_word("") == Word{});
    CHECK_THROWS_AS(parse_word("x1."), ParseError);
    CHECK_THROWS_AS(parse_word("y1"), ParseError);
    CHECK_THROWS_AS(parse_word("x0"), ParseError);
}

TEST_CASE("linear combination printing rules") {
    CHECK(to_text(NCSymElem{}) == "0");
    CHECK(to_text(NCSymElem(SetPartition{})) == "1");
    CHECK(to_text(NCSymElem(SetPartition{}, Rational(-1, 2))) == "-1/2");
    CHECK(to_text(NCSymElem(sp({{1, 2}}))) == "m{12}");
    CHECK(to_text(NCSymElem(sp({{1, 2}}), -1)) == "-m{12}");
    CHECK(to_text(NCSymElem(sp({{1, 2}}), Rational(1, 2))) == "1/2*m{12}");

    NCSymElem mix(sp({{1, 2}}));
    mix.add_term(sp({{1}, {2}}), -2);
    CHECK(to_text(mix) == "m{12} - 2*m{1|2}");

    NSymElem h(Composition({2, 1}), Rational(3, 2));
    h.add_term(Composition{}, -1);
    CHECK(to_text(h) == "-1 + 3/2*h(2,1)");

    CHECK(to_text(SymElem(IntegerPartition({2, 1}))) == "m[2,1]");
    CHECK(to_text(WordPoly(Word{1, 2})) == "x1.x2");
    CHECK(to_text(WordPoly(Word{})) == "1");

    NCSymTensor t;
    t.add_term({SetPartition{}, sp({{1}})}, 1);
    t.add_term({sp({{1}}), SetPartition{}}, 1);
    CHECK(to_text(t) == "1⊗m{1} + m{1}⊗1");
}

TEST_CASE("element parsing round-trips") {
    CHECK(parse_ncsym("m{12} + m{1|2}") ==
          ncsym_product(sp({{1}}), sp({{1}})));
    CHECK(parse_ncsym("2*m{1} - 1/2*m{12}") ==
          Rational(2) * NCSymElem(sp({{1}})) +
              Rational(-1, 2) * NCSymElem(sp({{1, 2}})));
    CHECK(parse_ncsym("1") == NCSymElem(SetPartition{}));
    CHECK(parse_ncsym("0") == NCSymElem{});
    CHECK(parse_ncsym("-m{1}") == -NCSymElem(sp({{1}})));
    CHECK(parse_ncsym("m{}") == NCSymElem(SetPartition{}));

    std::mt19937 gen(90210);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int m = 0; m <= 5; ++m)
        for (const SetPartition& a : enumerate_set_partitions(m)) {
            NCSymElem x(a, Rational(num(gen), den(gen)));
            x.add_term(sp({{1}}), Rational(num(gen), den(gen)));
            CHECK(parse_ncsym(to_text(x)) == x);
        }

    CHECK(parse_nsym("h(2,1)") == NSymElem(Composition({2, 1})));
    CHECK(parse_nsym("R(2,1)") == ribbon_to_h(Composition({2, 1})));
    CHECK(parse_nsym("R(1,1,1) - h(3)") ==
          ribbon_to_h(Composition({1, 1, 1})) - NSymElem(Composition({3})));
    for (int n = 0; n <= 5; ++n)
        for (const Composition& alpha : compositions(n)) {
            NSymElem x(alpha, Rational(num(gen), den(gen)));
            x.add_term(Composition({1}), Rational(num(gen), den(gen)));
            CHECK(parse_nsym(to_text(x)) == x);
        }

    CHECK(parse_sym("m[2,1]") == SymElem(IntegerPartition({2, 1})));
    CHECK(parse_sym("h[1,1]") == sym_h_to_m(IntegerPartition({1, 1})));
    for (int n = 0; n <= 5; ++n)
        for (const IntegerPartition& lambda : integer_partitions(n)) {
            SymElem x(lambda, Rational(num(gen), den(gen)));
            x.add_term(IntegerPartition({1}), Rational(num(gen), den(gen)));
            CHECK(parse_sym(to_text(x)) == x);
        }
}

TEST_CASE("parse errors carry byte positions") {
    CHECK_THROWS_AS(parse_ncsym("m{12"), ParseError);
    CHECK_THROWS_AS(parse_ncsym("m{12} +"), ParseError);
    CHECK_THROWS_AS(parse_nsym("h(2,"), ParseError);
    CHECK_THROWS_AS(parse_nsym("2*"), ParseError);
    CHECK_THROWS_AS(parse_sym("m[2] m[1]"), ParseError);

    try {
        parse_ncsym("m{13|2} + q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 10);
        CHECK(std::string(e.what()).find("(at position 10)") != std::string::npos);
    }
}

TEST_CASE("json forms") {
    NCSymElem x(sp({{1, 3}, {2}}), Rational(-1, 2));
    x.add_term(SetPartition{}, 2);
    const nlohmann::json jx = json_of(x);
    REQUIRE(jx.is_array());
    REQUIRE(jx.size() == 2);
    CHECK(jx[0]["coeff"] == "2");
    CHECK(jx[0]["partition"] == "");
    CHECK(jx[1]["coeff"] == "-1/2");
    CHECK(jx[1]["partition"] == "13|2");
    CHECK(ncsym_from_json(jx) == x);

    NSymElem y(Composition({2, 1}), Rational(1, 3));
    const nlohmann::json jy = json_of(y);
    CHECK(jy[0]["composition"] == nlohmann::json::array({2, 1}));
    CHECK(nsym_from_json(jy) == y);

    SymElem z(IntegerPartition({3, 1}), 4);
    const nlohmann::json jz = json_of(z);
    CHECK(jz[0]["partition"] == nlohmann::json::array({3, 1}));
    CHECK(sym_from_json(jz) == z);

    const nlohmann::json jw = json_of(WordPoly(Word{1, 2}, Rational(5)));
    CHECK(jw[0]["word"] == nlohmann::json::array({1, 2}));
    CHECK(jw[0]["coeff"] == "5");

    NCSymTensor t;
    t.add_term({sp({{1}}), sp({{1, 2}})}, 3);
    const nlohmann::json jt = json_of(t);
    CHECK(jt[0]["left"] == "1");
    CHECK(jt[0]["right"] == "12");
    CHECK(jt[0]["coeff"] == "3");

    const nlohmann::json jm = json_of(union_factorial_matrix(2));
    CHECK(jm == nlohmann::json::array({{"1", "1"}, {"1", "2"}}));

    const nlohmann::json js = json_of(PowerSeries(std::vector<Integer>{1, 2}));
    CHECK(js == nlohmann::json::array({"1", "2"}));

    CHECK_THROWS(ncsym_from_json(nlohmann::json{{"coeff", "1"}}));
}
