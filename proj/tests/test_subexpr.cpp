#include "helpers.hpp"

using namespace qs;
using namespace th;

TEST_CASE("products over index sets") {
    CartanData a2 = CartanData::builtin('A', 2);
    Word w{1, 2, 1};
    CHECK(product_over(a2, w, {}, 1, 3).is_identity());
    CHECK(product_over(a2, w, {1, 2, 3}, 2, 3) == el(a2, {2, 1}));
    CHECK(product_over(a2, w, {3}, 2, 3) == el(a2, {1}));
    CHECK(product_over(a2, w, {1, 2, 3}, 4, 3).is_identity());
}

TEST_CASE("positive subexpressions in A2") {
    CartanData a2 = CartanData::builtin('A', 2);
    Word w{1, 2, 1};
    WeylElement s1 = el(a2, {1});
    CHECK(rp(a2, w, s1) == IndexSet{3});
    CHECK(lp(a2, w, s1) == IndexSet{1});
    CHECK(oracle_positive_subexpr(a2, w, s1, Side::Right) == IndexSet{3});
    CHECK(oracle_positive_subexpr(a2, w, s1, Side::Left) == IndexSet{1});
    CHECK(rp(a2, w, identity_element(a2)).empty());
    CHECK(lp(a2, w, identity_element(a2)).empty());
    CHECK(rp(a2, w, el(a2, w)) == IndexSet{1, 2, 3});
    CHECK(lp(a2, w, el(a2, w)) == IndexSet{1, 2, 3});
}

TEST_CASE("positivity predicate") {
    CartanData a2 = CartanData::builtin('A', 2);
    Word w{1, 2, 1};
    CHECK(is_positive(a2, w, {}, Side::Right));
    CHECK(is_positive(a2, w, {}, Side::Left));
    CHECK(is_positive(a2, w, {1, 2, 3}, Side::Right));
    CHECK_FALSE(is_positive(a2, w, {1, 3}, Side::Right));
    CHECK(product_over(a2, w, {1, 3}, 1, 3).is_identity());
}

TEST_CASE("not below") {
    CartanData a2 = CartanData::builtin('A', 2);
    auto code = [&](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return std::string("ok");
    };
    CHECK(code([&] { rp(a2, {1, 2}, el(a2, {2, 1})); }) == "NotBelow");
    CHECK(code([&] { lp(a2, {1, 2}, el(a2, {2})); }) == "ok");
    CHECK(code([&] { oracle_positive_subexpr(a2, {1, 2}, el(a2, {2, 1}), Side::Right); }) == "NotBelow");
}

TEST_CASE("greedy matches the oracle and reverses under inversion") {
    for (auto [t, r, len] : std::vector<std::tuple<char, int, int>>{{'A', 2, 3}, {'A', 3, 5}, {'B', 2, 4}, {'G', 2, 5}}) {
        CartanData c = CartanData::builtin(t, r);
        for (const auto& p : pairs(c, len)) {
            const Word& w = p.w.word;
            int N = p.w.length();
            IndexSet R = rp(c, w, p.u), L = lp(c, w, p.u);
            CHECK(R == oracle_positive_subexpr(c, w, p.u, Side::Right));
            CHECK(L == oracle_positive_subexpr(c, w, p.u, Side::Left));
            CHECK(product_over(c, w, R, 1, N) == p.u);
            CHECK(product_over(c, w, L, 1, N) == p.u);
            WeylElement ui = inverse(c, p.u);
            CHECK(reverse_indices(L, N) == rp(c, reversed(w), ui));
            CHECK(reverse_indices(R, N) == lp(c, reversed(w), ui));
        }
    }
}
