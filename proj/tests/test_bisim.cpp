#include <doctest.h>

#include <random>

#include "bks/bisim.hpp"
#include "gen.hpp"

using namespace bks;

namespace {
Term T(const char* s) { return parse_term(s); }
} // namespace

TEST_CASE("bisimilar: motivating examples") {
    CHECK(bisimilar(T("(a+a.a)*0"), T("a*0")));
    CHECK_FALSE(bisimilar(T("a.b+a.c"), T("a.(b+c)")));
    CHECK(bisimilar(Vertex::tick(), Vertex::tick()));
    CHECK_FALSE(bisimilar(Vertex::tick(), Vertex(T("0"))));
    CHECK_FALSE(bisimilar(T("0"), T("a")));
    CHECK(bisimilar(T("a+b"), T("b+a")));

    // the inner block of (a*b)*c must complete before c becomes available,
    // so the trace "ac" separates the two sides
    CHECK_FALSE(bisimilar(T("(a*b)*c"), T("(a+b)*c")));
    // the loop-entry variant of that pair is bisimilar
    CHECK(bisimilar(T("a*(b.((a+b)*c)+c)"), T("(a+b)*c")));
    CHECK(bisimilar(T("(a*b)*c"), T("(a*b)*c")));
}

TEST_CASE("bisim_naive agrees on the same examples") {
    CHECK(bisim_naive(T("0"), T("0")));
    CHECK_FALSE(bisim_naive(T("a.b+a.c"), T("a.(b+c)")));
    CHECK_FALSE(bisim_naive(T("(a*b)*c"), T("(a+b)*c")));
    CHECK(bisim_naive(T("a*(b.((a+b)*c)+c)"), T("(a+b)*c")));
    CHECK(bisim_naive(T("(a+a.a)*0"), T("a*0")));
}

TEST_CASE("oracle agreement on random pairs") {
    std::mt19937 rng(21);
    testgen::GenConfig cfg{10, 3, 2};
    int agree_true = 0;
    for (int i = 0; i < 500; ++i) {
        Term p = testgen::random_term(rng, cfg);
        Term q = i % 3 == 0 ? testgen::random_rewrite(rng, cfg, p, 2)
                            : testgen::random_term(rng, cfg);
        bool fast = bisimilar(p, q);
        bool slow = bisim_naive(p, q);
        CHECK(fast == slow);
        if (fast) ++agree_true;
    }
    CHECK(agree_true > 50); // the sample exercises both answers
}

TEST_CASE("bisim_witness") {
    Term a = T("a");
    auto w = bisim_witness(a, a);
    REQUIRE(w.has_value());
    bool has_aa = false, has_tick = false;
    for (const auto& [x, y] : w->pairs) {
        if (x == Vertex(a) && y == Vertex(a)) has_aa = true;
        if (x == Vertex::tick() && y == Vertex::tick()) has_tick = true;
    }
    CHECK(has_aa);
    CHECK(has_tick);
    CHECK(witness_valid(*w));

    CHECK_FALSE(bisim_witness(T("a"), T("b")).has_value());

    auto w2 = bisim_witness(T("(a+a.a)*0"), T("a*0"));
    REQUIRE(w2.has_value());
    CHECK(witness_valid(*w2));
}

TEST_CASE("witness validity on random bisimilar pairs") {
    std::mt19937 rng(22);
    testgen::GenConfig cfg{8, 2, 1};
    for (int i = 0; i < 100; ++i) {
        Term p = testgen::random_term(rng, cfg);
        Term q = testgen::random_rewrite(rng, cfg, p, 2);
        auto w = bisim_witness(p, q);
        REQUIRE(w.has_value());
        CHECK(witness_valid(*w));
        bool contains = false;
        for (const auto& [x, y] : w->pairs)
            if (x == Vertex(p) && y == Vertex(q)) contains = true;
        CHECK(contains);
    }
}

TEST_CASE("bisimilarity is an equivalence on samples") {
    std::mt19937 rng(23);
    testgen::GenConfig cfg{8, 2, 1};
    std::vector<Term> pool;
    for (int i = 0; i < 40; ++i) pool.push_back(testgen::random_term(rng, cfg));
    for (const Term& p : pool) CHECK(bisimilar(p, p));
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            CHECK(bisimilar(pool[i], pool[j]) == bisimilar(pool[j], pool[i]));
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            for (std::size_t k = 0; k < pool.size(); k += 7)
                if (bisimilar(pool[i], pool[j]) && bisimilar(pool[j], pool[k]))
                    CHECK(bisimilar(pool[i], pool[k]));
}

TEST_CASE("bisimilarity is a congruence (smoke)") {
    std::mt19937 rng(24);
    testgen::GenConfig cfg{7, 2, 1};
    for (int i = 0; i < 60; ++i) {
        Term p = testgen::random_term(rng, cfg);
        Term q = testgen::random_rewrite(rng, cfg, p, 2);
        Term r = testgen::random_term(rng, cfg);
        REQUIRE(bisimilar(p, q));
        CHECK(bisimilar(Term::plus(p, r), Term::plus(q, r)));
        CHECK(bisimilar(Term::mult(p, r), Term::mult(q, r)));
        CHECK(bisimilar(Term::star(p, r), Term::star(q, r)));
        CHECK(bisimilar(Term::mult(r, p), Term::mult(r, q)));
    }
}
