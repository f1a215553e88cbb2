#include "helpers.hpp"

using namespace qs;
using namespace th;

TEST_CASE("index correspondence example") {
    CartanData a2 = CartanData::builtin('A', 2);
    TwistCorrespondence t = twist_indices(a2, {1, 2, 1}, el(a2, {1}));
    CHECK(t.reversedWord == Word{1, 2, 1});
    CHECK(t.rp == IndexSet{3});
    CHECK(t.lp == IndexSet{1});
    CHECK(t.lpRev == IndexSet{1});
    CHECK(t.holds());

    TwistCorrespondence e = twist_indices(a2, {1, 2}, identity_element(a2));
    CHECK(e.rp.empty());
    CHECK(e.lpRev.empty());
    TwistCorrespondence full = twist_indices(a2, {1, 2}, el(a2, {1, 2}));
    CHECK(full.rp == IndexSet{1, 2});
    CHECK(full.lpRev == IndexSet{1, 2});
}

TEST_CASE("weight labels") {
    CartanData a2 = CartanData::builtin('A', 2);
    WeylElement s1 = el(a2, {1}), w = el(a2, {1, 2, 1});
    MinorLabel m = twist_weight_label(a2, s1, w, a2.fundamental(1));
    CHECK(m.mu == vsub(a2.fundamental(1), a2.root_to_weight({1, 0})));
    CHECK(m.x == s1);
    CHECK(m.y == w);
    CHECK(twist_weight_label(a2, identity_element(a2), w, a2.fundamental(2)).mu == a2.fundamental(2));
    CHECK(is_zero(twist_weight_label(a2, s1, w, IntVec{0, 0}).mu));
}

TEST_CASE("matrix correspondence with a negative control") {
    for (auto [t, r, len] : std::vector<std::tuple<char, int, int>>{{'A', 3, 6}, {'B', 2, 4}, {'G', 2, 6}}) {
        CartanData c = CartanData::builtin(t, r);
        for (const auto& pr : pairs(c, len)) {
            const Word& w = pr.w.word;
            CHECK(twist_indices(c, w, pr.u).holds());
            CHECK(matrix_correspondence_check(c, w, pr.u));
            CHECK(reverse_sequence_mismatches(c, w, pr.u) == 0);
        }
    }
    CartanData a2 = CartanData::builtin('A', 2);
    Word w{1, 2, 1};
    WeylElement u = el(a2, {1}), wrong = el(a2, {2});
    CHECK(matrix_correspondence(a2, w, u, inverse(a2, u)));
    CHECK_FALSE(matrix_correspondence(a2, w, u, wrong));
    CHECK(matrix_correspondence(a2, w, el(a2, w), el(a2, w)));
}
