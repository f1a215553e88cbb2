#include "helpers.hpp"

using namespace qs;
using namespace th;
namespace oa = oracleA;

namespace {

// w_{<=k} and u_{<=k} as letter lists for the epsilon model
oa::Word prefix(const Word& w, int k) { return oa::slice(w, 1, k); }
oa::Word uprefix(const Word& w, const IndexSet& S, int k) { return oa::sub_word(w, S, 1, k); }

}  // namespace

TEST_CASE("a_lambda examples") {
    CartanData a2 = CartanData::builtin('A', 2);
    Word w{1, 2, 1};
    for (int k = 1; k <= 3; ++k) CHECK(a_lambda(a2, w, {3}, k, k, a2.fundamental(w[k - 1])) == 1);
    CHECK(a_lambda(a2, w, {3}, 1, 3, a2.fundamental(1)) == -1);
    CHECK_THROWS_AS(a_lambda(a2, w, {3}, 3, 2, a2.fundamental(1)), Error);
}

TEST_CASE("a-matrix examples") {
    CartanData a1 = CartanData::builtin('A', 1);
    ExponentMatrix m1 = a_matrix(a1, {1}, identity_element(a1));
    CHECK(m1.rows == IndexSet{1});
    CHECK(m1.entries == IntMat{{1}});

    CartanData a2 = CartanData::builtin('A', 2);
    ExponentMatrix m = a_matrix(a2, {1, 2, 1}, el(a2, {1}));
    CHECK(m.positive == IndexSet{3});
    CHECK(m.rows == IndexSet{1, 2});
    CHECK(m.entries == IntMat{{1, 0, -1}, {0, 1, 1}});
    CHECK(a_inverse(a2, {1, 2, 1}, el(a2, {1})) == IntMat{{1, 0}, {0, 1}});
    CHECK(a_matrix(a2, {1, 2, 1}, el(a2, {1, 2, 1})).rows.empty());
}

TEST_CASE("scalar coefficients") {
    CHECK(scalar_coeff(1, 0) == ScalarQ(1));
    ScalarQ k = ScalarQ::s_pow(-2) - ScalarQ::s_pow(2);
    CHECK(scalar_coeff(1, 1) == k);
    CHECK(scalar_coeff(1, 2) == k * k / ScalarQ::q_pow(1));
    ScalarQ k2 = ScalarQ::q_pow(-2) - ScalarQ::q_pow(2);
    CHECK(scalar_coeff(2, 3) == k2 * k2 * k2 / ScalarQ::q_pow(6));
}

TEST_CASE("orbit decomposition example") {
    CartanData a2 = CartanData::builtin('A', 2);
    Word w{1, 2, 1};
    auto d = orbit_decomposition(a2, w, {3}, 3, a2.fundamental(1));
    CHECK(d == std::map<int, Int>{{1, 1}, {2, -1}});
    CHECK(orbit_difference(a2, w, {3}, 3, a2.fundamental(1)) == IntVec{0, -1});
    CHECK(orbit_decomposition(a2, w, {1, 2, 3}, 3, a2.fundamental(1)).empty());
    CHECK(is_zero(orbit_difference(a2, w, {1}, 3, IntVec{0, 0})));
    auto [l, r] = inner_product_identity(a2, w, {}, 2, 2, a2.fundamental(2));
    CHECK(l == r);
    auto [l0, r0] = inner_product_identity(a2, w, {3}, 1, 3, IntVec{0, 0});
    CHECK(l0 == 0);
    CHECK(r0 == 0);
}

TEST_CASE("commutation exponent examples") {
    CartanData a2 = CartanData::builtin('A', 2);
    CHECK(quasi_comm_exponent_direct(a2, {1, 2}, identity_element(a2), 1, 2) == -1);
    WeylElement w = el(a2, {1, 2, 1});
    for (int j = 1; j <= 3; ++j)
        for (int k = j + 1; k <= 3; ++k) {
            CHECK(quasi_comm_exponent_direct(a2, w.word, w, j, k) == 0);
            CHECK(quasi_comm_exponent_reverse(a2, w.word, w, j, k) == 0);
        }
    CHECK(normal_comm_exponent(a2, w.word, el(a2, {1}), 3, IntVec{0, 0}) == 0);
    // u = w does not kill this one: -2 <s_1 s_2 varpi_2, alpha_1 + alpha_2> = 2
    CHECK(normal_comm_exponent(a2, w.word, w, 2, IntVec{1, 1}) == 2);
    CHECK(localized_minor_exponent(a2, w.word, w, a2.fundamental(1), a2.fundamental(2)) == 0);
}

TEST_CASE("b-matrix through the reversed word") {
    CartanData a2 = CartanData::builtin('A', 2);
    Word w{1, 2, 1};
    WeylElement s1 = el(a2, {1});
    ExponentMatrix b = b_matrix(a2, w, s1);
    CHECK(b.positive == IndexSet{1});
    CHECK(b.rows == IndexSet{2, 3});
    ExponentMatrix a = a_matrix(a2, reversed(w), inverse(a2, s1));
    for (int l : b.rows)
        for (int k = 1; k <= 3; ++k) {
            CHECK(b.at(l, k) == a.at(4 - l, 4 - k));
            if (l == k) CHECK(b.at(l, k) == 1);
            if (l < k) CHECK(b.at(l, k) == 0);
        }
}

TEST_CASE("exponents in type A against the epsilon model") {
    for (int n : {2, 3}) {
        CartanData c = CartanData::builtin('A', n);
        for (const auto& p : pairs(c, 6)) {
            const Word& w = p.w.word;
            int N = p.w.length();
            IndexSet R = rp(c, w, p.u), L = lp(c, w, p.u);
            ExponentMatrix a = a_matrix(c, w, p.u);
            for (int j : a.rows)
                for (int k = j; k <= N; ++k) {
                    oa::Vec lam = oa::act(oa::sub_word(w, R, j + 1, k), oa::fundamental(n, w[k - 1]));
                    CHECK(a.at(j, k) == oa::coroot(w[j - 1], lam));
                }
            // direct sequence: -<(w_{<=k} + u_{<=k}) varpi, (w_{<=j} - u_{<=j}) varpi>
            for (int j = 1; j <= N; ++j)
                for (int k = j + 1; k <= N; ++k) {
                    oa::Vec vk = oa::fundamental(n, w[k - 1]), vj = oa::fundamental(n, w[j - 1]);
                    oa::Vec plus = oa::add(oa::act(prefix(w, k), vk), oa::act(uprefix(w, R, k), vk));
                    oa::Vec minus = oa::sub(oa::act(prefix(w, j), vj), oa::act(uprefix(w, R, j), vj));
                    CHECK(quasi_comm_exponent_direct(c, w, p.u, j, k) == -oa::form(plus, minus));
                }
            // reverse sequence, with the inverted suffixes of w and of the LP product
            for (int k = 1; k <= N; ++k)
                for (int l = k + 1; l <= N; ++l) {
                    oa::Vec vk = oa::fundamental(n, w[k - 1]), vl = oa::fundamental(n, w[l - 1]);
                    oa::Word wk = oa::inverse_word(oa::slice(w, k, N)), wl = oa::inverse_word(oa::slice(w, l, N));
                    oa::Word uk = oa::inverse_word(oa::sub_word(w, L, k, N));
                    oa::Word ul = oa::inverse_word(oa::sub_word(w, L, l, N));
                    oa::Vec plus = oa::add(oa::act(wk, vk), oa::act(uk, vk));
                    oa::Vec minus = oa::sub(oa::act(wl, vl), oa::act(ul, vl));
                    CHECK(quasi_comm_exponent_reverse(c, w, p.u, k, l) == oa::form(plus, minus));
                }
            auto roots = roots_of_word(c, w);
            for (int k = 1; k <= N; ++k) {
                oa::Vec vk = oa::fundamental(n, w[k - 1]);
                oa::Vec plus = oa::add(oa::act(prefix(w, k), vk), oa::act(uprefix(w, R, k), vk));
                for (int j = 1; j <= N; ++j)
                    CHECK(normal_comm_exponent(c, w, p.u, k, roots[j - 1]) ==
                          -oa::form(plus, oa::from_root(roots[j - 1])));
            }
            for (int i1 = 1; i1 <= n; ++i1)
                for (int i2 = 1; i2 <= n; ++i2) {
                    oa::Vec l1 = oa::fundamental(n, i1), l2 = oa::fundamental(n, i2);
                    oa::Vec diff = oa::sub(oa::act(w, l1), oa::act(p.u.word, l1));
                    CHECK(localized_minor_exponent(c, w, p.u, c.fundamental(i1), c.fundamental(i2)) ==
                          oa::form(diff, oa::act(p.u.word, l2)));
                }
        }
    }
}

TEST_CASE("matrix structure across types") {
    for (auto [t, r, len] : std::vector<std::tuple<char, int, int>>{{'A', 3, 6}, {'B', 2, 4}, {'G', 2, 6}}) {
        CartanData c = CartanData::builtin(t, r);
        for (const auto& p : pairs(c, len)) {
            const Word& w = p.w.word;
            ExponentMatrix a = a_matrix(c, w, p.u);
            IntMat P = principal_submatrix(a);
            for (std::size_t i = 0; i < P.size(); ++i)
                for (std::size_t j = 0; j < P.size(); ++j) CHECK(P[i][j] == (i == j ? 1 : (i > j ? 0 : P[i][j])));
            CHECK(matmul(P, a_inverse(c, w, p.u)) == identity_matrix(P.size()));
            CHECK(triangular_window_holds(a));
            for (int j : a.rows)
                for (int k = j; k <= a.N(); ++k)
                    for (int i = 1; i <= r; ++i)
                        CHECK(a_lambda(c, w, a.positive, j, k, c.fundamental(i)) == a_closed_form(c, w, a.positive, j, k, i));
            IntMat Ly = lambda_Y(c, w);
            for (std::size_t i = 0; i < Ly.size(); ++i)
                for (std::size_t j = 0; j < Ly.size(); ++j) CHECK(Ly[i][j] == -Ly[j][i]);
        }
    }
}
