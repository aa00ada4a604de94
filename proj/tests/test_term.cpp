#include <doctest.h>

#include <random>

#include "bks/term.hpp"
#include "gen.hpp"

using namespace bks;

TEST_CASE("parse: literals and precedence") {
    CHECK(parse_term("0") == Term::zero());
    CHECK(parse_term("a") == Term::act("a"));

    // star binds stronger than sequential composition
    Term a = Term::act("a"), b = Term::act("b"), c = Term::act("c");
    CHECK(parse_term("a * b . c") == Term::mult(Term::star(a, b), c));
    // sequential composition is right-associative
    CHECK(parse_term("a . b . c") == Term::mult(a, Term::mult(b, c)));
    // plus associates to the left
    CHECK(parse_term("a + b + c") == Term::plus(Term::plus(a, b), c));
    // star associates to the left
    CHECK(parse_term("a * b * c") == Term::star(Term::star(a, b), c));
    // sequential composition binds stronger than plus
    CHECK(parse_term("a . b + c") == Term::plus(Term::mult(a, b), c));
    CHECK(parse_term("(a + b) . c") == Term::mult(Term::plus(a, b), c));
    CHECK(parse_term("ab_1") == Term::act("ab_1"));
    CHECK(parse_term(" a+ b ") == Term::plus(a, b));
}

TEST_CASE("parse: nesting guard") {
    std::string deep;
    for (int i = 0; i < 50000; ++i) deep += '(';
    deep += 'a';
    for (int i = 0; i < 50000; ++i) deep += ')';
    CHECK_THROWS_AS(parse_term(deep), SyntaxError);

    std::string ok = std::string(2000, '(') + "a" + std::string(2000, ')');
    CHECK(parse_term(ok) == Term::act("a"));
}

TEST_CASE("parse: syntax errors carry positions") {
    CHECK_THROWS_AS(parse_term(""), SyntaxError);
    CHECK_THROWS_AS(parse_term("a +"), SyntaxError);
    CHECK_THROWS_AS(parse_term("(a"), SyntaxError);
    CHECK_THROWS_AS(parse_term("a b"), SyntaxError);
    CHECK_THROWS_AS(parse_term("a & b"), SyntaxError);
    CHECK_THROWS_AS(parse_term("A"), SyntaxError);
    try {
        parse_term("a + + b");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("render: inverse of parse on the stated examples") {
    CHECK(render(Term::zero()) == "0");
    Term a = Term::act("a"), b = Term::act("b"), c = Term::act("c");
    CHECK(render(Term::mult(Term::star(a, b), c)) == "a * b . c");
    CHECK(render(Term::plus(Term::mult(a, b), Term::mult(a, c))) == "a . b + a . c");
    CHECK(render(Term::mult(a, Term::plus(b, c))) == "a . (b + c)");
    CHECK(render(Term::star(a, Term::star(b, c))) == "a * (b * c)");
    CHECK(render(Term::mult(Term::mult(a, b), c)) == "(a . b) . c");
}

TEST_CASE("render round-trip on random terms") {
    std::mt19937 rng(7);
    testgen::GenConfig cfg{12, 3, 3};
    for (int i = 0; i < 500; ++i) {
        Term t = testgen::random_term(rng, cfg);
        CHECK(parse_term(render(t)) == t);
    }
}

TEST_CASE("star_depth") {
    Term a = Term::act("a"), b = Term::act("b"), c = Term::act("c");
    CHECK(star_depth(Term::zero()) == 0);
    CHECK(star_depth(a) == 0);
    CHECK(star_depth(Term::star(a, Term::zero())) == 1);
    CHECK(star_depth(Term::star(Term::star(a, b), c)) == 2);
    CHECK(star_depth(Term::star(a, Term::star(b, c))) == 1);

    std::mt19937 rng(8);
    for (int i = 0; i < 200; ++i) {
        Term p = testgen::random_term(rng);
        Term q = testgen::random_term(rng);
        CHECK(star_depth(Term::star(p, q)) >= 1 + star_depth(p));
        CHECK(star_depth(Term::plus(p, q)) == std::max(star_depth(p), star_depth(q)));
    }
}

TEST_CASE("term_order: examples and totality") {
    Term a = Term::act("a"), b = Term::act("b"), c = Term::act("c");
    CHECK(term_order(Term::zero(), Term::zero()) == Ordering::EQ);
    CHECK(term_order(Term::zero(), a) == Ordering::LT);
    CHECK(term_order(Term::mult(a, b), Term::mult(a, c)) == Ordering::LT);

    std::mt19937 rng(9);
    testgen::GenConfig cfg{6, 2, 1};
    for (int i = 0; i < 400; ++i) {
        Term x = testgen::random_term(rng, cfg);
        Term y = testgen::random_term(rng, cfg);
        Term z = testgen::random_term(rng, cfg);
        // reflexive-EQ and antisymmetry
        CHECK(term_order(x, x) == Ordering::EQ);
        CHECK((term_order(x, y) == Ordering::EQ) == (x == y));
        Ordering xy = term_order(x, y);
        Ordering yx = term_order(y, x);
        if (xy == Ordering::LT) CHECK(yx == Ordering::GT);
        if (xy == Ordering::GT) CHECK(yx == Ordering::LT);
        // transitivity
        if (xy != Ordering::GT && term_order(y, z) != Ordering::GT)
            CHECK(term_order(x, z) != Ordering::GT);
    }
}

TEST_CASE("vertex order puts tick first") {
    CHECK(vertex_order(Vertex::tick(), Vertex::tick()) == Ordering::EQ);
    CHECK(vertex_order(Vertex::tick(), Vertex(Term::zero())) == Ordering::LT);
    CHECK(vertex_order(Vertex(Term::zero()), Vertex::tick()) == Ordering::GT);
    CHECK(render(Vertex::tick()) == "TICK");
}
