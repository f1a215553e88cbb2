#include <set>

#include "helpers.hpp"

using namespace qs;
using namespace th;

TEST_CASE("model shapes") {
    QMatrixModel one = build_model(1, 1);
    CHECK(one.N() == 1);
    CHECK(one.word == Word{1});
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        QMatrixModel q = build_model(m, n);
        CHECK(q.N() == m * n);
        CHECK(q.cartan.rank() == m + n - 1);
        CHECK(static_cast<int>(q.word.size()) == m * n);
        // generators in a common row or column q-commute, the rest commute
        // up to the Ore term, read off the roots of the word
        for (int x = 1; x <= q.N(); ++x)
            for (int y = 1; y <= q.N(); ++y) {
                if (x == y) continue;
                auto [r1, c1] = q.posMap[x - 1];
                auto [r2, c2] = q.posMap[y - 1];
                Int f = q.cartan.form_root_root(q.roots[x - 1], q.roots[y - 1]);
                CHECK(f == ((r1 == r2 || c1 == c2) ? 1 : 0));
            }
    }
    CHECK_THROWS_AS(build_model(0, 2), Error);
}

TEST_CASE("restoration on the empty diagram, 2x2") {
    QMatrixModel q = build_model(2, 2);
    TorusEmbedding e = restoration(q, {}, Order::Direct);
    CHECK(relation_failures(e) == 0);
    CHECK(relation_failures(restoration(q, {}, Order::Reverse)) == 0);
    TorusElement det = quantum_minor_image(e, {1, 2}, {1, 2});
    CHECK(det.is_monomial());
    CHECK(quantum_minor_image(e, {1}, {1}) == e.images[q.position(1, 1) - 1]);
    CHECK_THROWS_AS(quantum_minor_image(e, {1, 1}, {1, 2}), Error);
    CHECK_THROWS_AS(quantum_minor_image(e, {1}, {1, 2}), Error);
    CHECK_THROWS_AS(quantum_minor_image(e, {3}, {1}), Error);
}

TEST_CASE("a perturbed correction coefficient breaks the relations") {
    QMatrixModel q = build_model(2, 2);
    TorusEmbedding e = restoration(q, {}, Order::Direct);
    REQUIRE(relation_failures(e) == 0);
    const auto& img = e.images;
    TorusElement y12 = img[q.position(1, 2) - 1], y21 = img[q.position(2, 1) - 1], y22 = img[q.position(2, 2) - 1];
    TorusElement correction = y12 * invert_monomial(y22) * y21;
    for (ScalarQ delta : {ScalarQ::s_pow(2), ScalarQ(-1), ScalarQ::s_pow(-2)}) {
        TorusEmbedding bad = e;
        bad.images[q.position(1, 1) - 1] = img[q.position(1, 1) - 1] + correction.scaled(delta);
        CHECK(relation_failures(bad) > 0);
    }
}

TEST_CASE("minor labels") {
    QMatrixModel q = build_model(2, 2);
    WeylElement id = identity_element(q.cartan);
    MinorSubsets s = minor_subsets(q, id, q.w, q.word.back());
    CHECK_FALSE(s.zero);
    CHECK(s.rows == std::vector<int>{1, 2});
    CHECK(s.cols == std::vector<int>{1, 2});
    TorusEmbedding e = restoration(q, {}, Order::Direct);
    for (int k = 1; k <= q.N(); ++k) {
        Word wk(q.word.begin(), q.word.begin() + k), wk1(q.word.begin(), q.word.begin() + k - 1);
        // the label (w_{<k} varpi, w_{<=k} varpi) is the single entry at posMap(k)
        MinorSubsets one = minor_subsets(q, el(q.cartan, wk1), el(q.cartan, wk), q.word[k - 1]);
        REQUIRE(one.rows.size() == 1);
        CHECK(std::make_pair(one.rows[0], one.cols[0]) == q.posMap[k - 1]);
    }
}

TEST_CASE("minor formulas on 2x2") {
    QMatrixModel q = build_model(2, 2);
    auto us = elements_below(q);
    CHECK(us.size() == 14);
    for (const auto& u : us) {
        for (const auto& r : verify_minor_formula_all(q, u)) CHECK(r.equal);
        for (const auto& r : verify_minor_formula_reverse_all(q, u)) CHECK(r.equal);
        CHECK(verify_vanishing(q, u).ok);
        for (int k = 1; k <= q.N(); ++k) CHECK(contraction_report(q, u, k).consistent());
        CHECK(sequence_commutation_failures(q, u) == 0);
    }
    WeylElement id = identity_element(q.cartan);
    MinorFormulaReport det = verify_minor_formula(q, id, q.N());
    CHECK(det.equal);
    CHECK(det.lhs.is_monomial());
    for (const auto& r : verify_minor_formula_all(q, q.w)) {
        REQUIRE(r.lhs.is_monomial());
        CHECK(is_zero(r.lhs.terms().begin()->first));
    }
    VanishingReport v = verify_vanishing(q, q.w);
    CHECK(v.lastInRP);
    CHECK(v.image.is_zero());
    CHECK_FALSE(verify_vanishing(q, id).lastInRP);
}

TEST_CASE("Cauchon diagrams on 2x2") {
    QMatrixModel q = build_model(2, 2);
    std::set<IndexSet> L, R;
    for (const auto& u : elements_below(q)) {
        L.insert(lp(q.cartan, q.word, u));
        R.insert(rp(q.cartan, q.word, u));
    }
    CHECK(L.size() == 14);
    for (int mask = 0; mask < 16; ++mask) {
        IndexSet D;
        for (int k = 0; k < 4; ++k)
            if (mask >> k & 1) D.push_back(k + 1);
        CHECK(diagram_is_homomorphism(q, D, Order::Direct) == (L.count(D) > 0));
        CHECK(diagram_is_homomorphism(q, D, Order::Reverse) == (R.count(D) > 0));
    }
}
