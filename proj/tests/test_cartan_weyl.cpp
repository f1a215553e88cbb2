#include "helpers.hpp"

using namespace qs;
using namespace th;

TEST_CASE("symmetrizer") {
    CHECK(symmetrizer({{2, -1}, {-1, 2}}) == IntVec{1, 1});
    // the short simple root gets 1
    CHECK(symmetrizer({{2, -1}, {-2, 2}}) == IntVec{2, 1});
    CHECK(symmetrizer({{2, -2}, {-1, 2}}) == IntVec{1, 2});
    CHECK(symmetrizer({{2, -1}, {-3, 2}}) == IntVec{3, 1});
    CHECK(symmetrizer({{2, -3}, {-1, 2}}) == IntVec{1, 3});
    CHECK(symmetrizer({{2, 0}, {0, 2}}) == IntVec{1, 1});
}

TEST_CASE("symmetrizer solves d_i a_ij = d_j a_ji on builtins") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}}) {
        CartanData c = CartanData::builtin(t, r);
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) CHECK(c.d(i) * c.a(i, j) == c.d(j) * c.a(j, i));
    }
}

TEST_CASE("malformed matrices") {
    auto code = [](const IntMat& m) {
        try {
            CartanData::from_gcm(m);
        } catch (const Error& e) {
            return e.code();
        }
        return std::string("ok");
    };
    CHECK(code({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}) == "NotSymmetrizable");
    CHECK(code({{2, -1}, {0, 2}}) != "ok");
    CHECK(code({{2, 1}, {1, 2}}) != "ok");
    CHECK(code({{2, -1}}) != "ok");
}

TEST_CASE("builtins") {
    CHECK(CartanData::builtin('A', 1).gcm() == IntMat{{2}});
    CHECK(CartanData::builtin('A', 1).sym() == IntVec{1});
    CHECK(CartanData::builtin('A', 2).gcm() == IntMat{{2, -1}, {-1, 2}});
    CHECK(CartanData::builtin('C', 2).gcm() == transpose(CartanData::builtin('B', 2).gcm()));
    CHECK_THROWS(CartanData::builtin('Q', 2));
}

TEST_CASE("pairings") {
    CartanData a2 = CartanData::builtin('A', 2);
    CHECK(a2.form_weight_root(a2.fundamental(1), a2.simple_root(1)) == 1);
    CHECK(a2.form_weight_root(a2.fundamental(2), a2.simple_root(1)) == 0);
    CHECK(a2.form_root_root(a2.simple_root(1), a2.simple_root(1)) == 2);
    CHECK(a2.form_root_root(a2.simple_root(1), a2.simple_root(2)) == -1);
    CHECK(a2.root_to_weight({1, 0}) == IntVec{2, -1});
    CHECK(a2.root_to_weight({0, 0}) == IntVec{0, 0});
    CHECK(a2.root_to_weight({1, 1}) == IntVec{1, 1});

    CartanData b2 = CartanData::from_gcm({{2, -2}, {-1, 2}});
    REQUIRE(b2.sym() == IntVec{1, 2});
    CHECK(b2.form_weight_root(b2.fundamental(2), b2.simple_root(2)) == 2);

    CartanData g2 = CartanData::builtin('G', 2);
    CHECK(g2.form_root_root(g2.simple_root(1), g2.simple_root(2)) ==
          g2.form_root_root(g2.simple_root(2), g2.simple_root(1)));
}

TEST_CASE("reflections") {
    CartanData a2 = CartanData::builtin('A', 2);
    CHECK(simple_reflect_root(a2, 1, {1, 0}) == IntVec{-1, 0});
    CHECK(simple_reflect_root(a2, 1, {0, 1}) == IntVec{1, 1});
    CHECK(simple_reflect_weight(a2, 1, a2.fundamental(1)) == IntVec{-1, 1});
    CHECK(simple_reflect_weight(a2, 1, a2.fundamental(2)) == a2.fundamental(2));
    for (char t : {'B', 'G'}) {
        CartanData c = CartanData::builtin(t, 2);
        IntVec beta{3, -2};
        for (int i = 1; i <= 2; ++i) CHECK(simple_reflect_root(c, i, simple_reflect_root(c, i, beta)) == beta);
    }
}

TEST_CASE("elements and words") {
    CartanData a2 = CartanData::builtin('A', 2);
    WeylElement e = identity_element(a2);
    CHECK(e.length() == 0);
    CHECK(apply_to_weight(e, {3, -1}) == IntVec{3, -1});
    CHECK(multiply_by_simple(a2, e, 1).word == Word{1});
    CHECK(multiply_by_simple(a2, el(a2, {1}), 1).is_identity());
    WeylElement x = multiply_by_simple(a2, el(a2, {1, 2}), 1);
    CHECK(x.word == Word{1, 2, 1});
    CHECK(x.length() == 3);
    CHECK(inverse(a2, el(a2, {1, 2})).word == Word{2, 1});
    CHECK(roots_of_word(a2, {1}) == std::vector<IntVec>{{1, 0}});
    CHECK(roots_of_word(a2, {1, 2, 1}) == std::vector<IntVec>{{1, 0}, {1, 1}, {0, 1}});
    CHECK_THROWS_AS(roots_of_word(a2, {1, 1}), Error);
    CHECK_THROWS_AS(element_of_reduced_word(a2, {1, 2, 2}), Error);
    CHECK_FALSE(is_reduced(a2, {1, 2, 1, 2}));
    CHECK_THROWS_AS(check_letters(a2, {1, 3}), Error);
}

TEST_CASE("bruhat order") {
    CartanData a2 = CartanData::builtin('A', 2);
    CHECK(bruhat_leq(a2, el(a2, {1}), el(a2, {1, 2, 1})));
    CHECK_FALSE(bruhat_leq(a2, el(a2, {1, 2}), el(a2, {2, 1})));
    CHECK_FALSE(bruhat_leq(a2, el(a2, {2, 1}), el(a2, {1, 2})));
    for (const auto& w : enumerate_elements(a2, 3)) CHECK(bruhat_leq(a2, identity_element(a2), w));
}

TEST_CASE("type A against the epsilon model") {
    for (int n : {2, 3}) {
        CartanData c = CartanData::builtin('A', n);
        auto elems = enumerate_elements(c, 100);
        CHECK(elems.size() == (n == 2 ? 6u : 24u));
        for (const auto& w : elems) {
            CHECK(static_cast<int>(roots_of_word(c, w.word).size()) == w.length());
            auto roots = roots_of_word(c, w.word);
            for (int k = 1; k <= w.length(); ++k) {
                oracleA::Vec b = oracleA::act(oracleA::slice(w.word, 1, k - 1), oracleA::simple_root(n, w.word[k - 1]));
                CHECK(oracleA::from_root(roots[k - 1]) == b);
            }
            for (int i = 1; i <= n; ++i)
                CHECK(apply_to_weight(w, c.fundamental(i)) ==
                      oracleA::to_weight(oracleA::act(w.word, oracleA::fundamental(n, i))));
            for (const auto& u : elems) CHECK(bruhat_leq(c, u, w) == oracleA::bruhat_leq(n, u.word, w.word));
        }
    }
}

TEST_CASE("reduced words of the longest element") {
    CartanData a3 = CartanData::builtin('A', 3);
    WeylElement w0 = el(a3, {1, 2, 1, 3, 2, 1});
    auto words = reduced_words(a3, w0);
    CHECK(words.size() == 16);
    for (const auto& w : words) CHECK(el(a3, w) == w0);
}
