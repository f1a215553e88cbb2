#include "qschubert/exponents.hpp"

#include <algorithm>

namespace qs {

namespace {

void check_range(int N, int j, int k) {
    if (j < 1 || k > N || j > k) fail("IndexOutOfRange", "need 1 <= j <= k <= N");
}

WeylElement prefix(const CartanData& c, const Word& word, int k) {
    return element_of_word(c, Word(word.begin(), word.begin() + k));
}

// i_j == i_k and j <= k
bool preceq(const Word& word, int j, int k) { return j <= k && word[j - 1] == word[k - 1]; }

// entries of the b-matrix through the closed form
Int b_closed_form(const CartanData& c, const Word& word, const IndexSet& LP, int l, int k) {
    int il = word[l - 1];
    Int v = (k < l && word[k - 1] == il) ? 1 : 0;
    for (int j = k; j < l; ++j) {
        if (!preceq(word, k, j) || !contains(LP, j)) continue;
        WeylElement x = inverse(c, product_over(c, word, LP, j + 1, l - 1));
        IntVec root = apply_to_root(x, c.simple_root(word[j - 1]));
        v = sub_checked(v, c.root_to_weight(root)[il - 1]);
    }
    return v;
}

}  // namespace

Int ExponentMatrix::at(int row, int col) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), row);
    if (it == rows.end() || *it != row) fail("IndexOutOfRange", "row " + std::to_string(row) + " not in matrix");
    if (col < 1 || col > N()) fail("IndexOutOfRange", "column " + std::to_string(col));
    return entries[static_cast<std::size_t>(it - rows.begin())][col - 1];
}

std::vector<IntVec> word_roots(const CartanData& c, const Word& word) {
    check_letters(c, word);
    std::vector<IntVec> out;
    WeylElement w = identity_element(c);
    for (int i : word) {
        out.push_back(apply_to_root(w, c.simple_root(i)));
        w = multiply_by_simple(c, w, i);
    }
    return out;
}

Int a_lambda(const CartanData& c, const Word& word, const IndexSet& S, int j, int k, const IntVec& lambda) {
    check_letters(c, word);
    check_range(static_cast<int>(word.size()), j, k);
    WeylElement x = product_over(c, word, S, j + 1, k);
    return c.coroot_pair(word[j - 1], apply_to_weight(x, lambda));
}

Int a_closed_form(const CartanData& c, const Word& word, const IndexSet& S, int j, int k, int i) {
    check_range(static_cast<int>(word.size()), j, k);
    int ij = word[j - 1];
    Int v = ij == i ? 1 : 0;
    for (int l = j + 1; l <= k; ++l) {
        if (word[l - 1] != i || !contains(S, l)) continue;
        WeylElement x = product_over(c, word, S, j + 1, l - 1);
        IntVec root = apply_to_root(x, c.simple_root(i));
        v = sub_checked(v, c.root_to_weight(root)[ij - 1]);
    }
    return v;
}

ExponentMatrix a_matrix(const CartanData& c, const Word& word, const WeylElement& u) {
    ExponentMatrix m;
    m.word = word;
    m.side = Presentation::Direct;
    m.positive = rp(c, word, u);
    int N = m.N();
    m.rows = complement(m.positive, N);
    for (int j : m.rows) {
        IntVec row(N, 0);
        for (int k = j; k <= N; ++k) {
            int ik = word[k - 1];
            Int v = a_lambda(c, word, m.positive, j, k, c.fundamental(ik));
            if (v != a_closed_form(c, word, m.positive, j, k, ik))
                fail("InternalError", "closed forms of a_jk disagree");
            row[k - 1] = v;
        }
        m.entries.push_back(row);
    }
    return m;
}

IntMat principal_submatrix(const ExponentMatrix& m) {
    IntMat p;
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        IntVec row;
        for (int k : m.rows) row.push_back(m.entries[r][k - 1]);
        p.push_back(row);
    }
    return p;
}

IntMat unit_triangular_inverse(const IntMat& m) {
    std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] != 1) fail("InternalError", "diagonal entry is not 1");
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != 0) fail("InternalError", "matrix is not upper triangular");
    }
    // back substitution, column by column
    IntMat inv(n, IntVec(n, 0));
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = n; i-- > 0;) {
            Int v = i == col ? 1 : 0;
            for (std::size_t l = i + 1; l < n; ++l) v = sub_checked(v, mul_checked(m[i][l], inv[l][col]));
            inv[i][col] = v;
        }
    }
    return inv;
}

IntMat a_inverse(const CartanData& c, const Word& word, const WeylElement& u) {
    return unit_triangular_inverse(principal_submatrix(a_matrix(c, word, u)));
}

Int b_l_lambda(const CartanData& c, const Word& word, const WeylElement& u, int l, const IntVec& lambda) {
    IndexSet LP = lp(c, word, u);
    int N = static_cast<int>(word.size());
    if (l < 1 || l > N) fail("IndexOutOfRange", "l out of range");
    WeylElement x = product_over(c, word, LP, l, N);
    return c.coroot_pair(word[l - 1], apply_to_weight(x, lambda));
}

ExponentMatrix b_matrix(const CartanData& c, const Word& word, const WeylElement& u) {
    ExponentMatrix m;
    m.word = word;
    m.side = Presentation::Reverse;
    m.positive = lp(c, word, u);
    int N = m.N();
    m.rows = complement(m.positive, N);
    for (int l : m.rows) {
        IntVec row(N, 0);
        for (int k = 1; k <= l; ++k) {
            int ik = word[k - 1];
            IntVec vk = c.fundamental(ik);
            Int v = 1;
            if (k < l) {
                WeylElement x = inverse(c, product_over(c, word, m.positive, k, l - 1));
                v = c.coroot_pair(word[l - 1], apply_to_weight(x, vk));
            }
            // second route: b_l(u_bar_{>=k}^{-1} varpi_{i_k})
            WeylElement y = inverse(c, product_over(c, word, m.positive, k, N));
            WeylElement z = product_over(c, word, m.positive, l, N);
            Int v2 = c.coroot_pair(word[l - 1], apply_to_weight(z, apply_to_weight(y, vk)));
            if (v != v2) fail("InternalError", "routes to b_lk disagree");
            if (k < l && v != b_closed_form(c, word, m.positive, l, k))
                fail("InternalError", "closed form of b_lk disagrees");
            row[k - 1] = v;
        }
        m.entries.push_back(row);
    }
    return m;
}

std::map<int, Int> orbit_decomposition(const CartanData& c, const Word& word, const IndexSet& S, int k,
                                      const IntVec& lambda) {
    int N = static_cast<int>(word.size());
    if (k < 0 || k > N) fail("IndexOutOfRange", "k out of range");
    std::map<int, Int> out;
    for (int j = 1; j <= k; ++j)
        if (!contains(S, j)) out[j] = -a_lambda(c, word, S, j, k, lambda);
    return out;
}

IntVec orbit_difference(const CartanData& c, const Word& word, const IndexSet& S, int k, const IntVec& lambda) {
    auto roots = word_roots(c, word);
    IntVec v(c.rank(), 0);
    for (const auto& [j, coeff] : orbit_decomposition(c, word, S, k, lambda))
        v = vadd(v, vscale(coeff, roots[j - 1]));
    return v;
}

bool orbit_decomposition_holds(const CartanData& c, const Word& word, const IndexSet& S, int k, const IntVec& lambda) {
    IntVec lhs = vsub(apply_to_weight(prefix(c, word, k), lambda),
                      apply_to_weight(product_over(c, word, S, 1, k), lambda));
    return lhs == c.root_to_weight(orbit_difference(c, word, S, k, lambda));
}

std::pair<Int, Int> inner_product_identity(const CartanData& c, const Word& word, const IndexSet& S, int l, int k,
                                              const IntVec& lambda) {
    if (contains(S, l)) fail("PreconditionViolated", "l is in S");
    int N = static_cast<int>(word.size());
    if (l < 1 || l > k || k > N) fail("IndexOutOfRange", "need 1 <= l <= k <= N");
    auto roots = word_roots(c, word);
    Int lhs = 0;
    for (int j = 1; j <= k; ++j) {
        if (j == l || contains(S, j)) continue;
        Int t = mul_checked(c.form_root_root(roots[j - 1], roots[l - 1]), a_lambda(c, word, S, j, k, lambda));
        lhs = j < l ? add_checked(lhs, t) : sub_checked(lhs, t);
    }
    // (w + u) lambda = 2 w lambda - (w - u) lambda
    IntVec wl = apply_to_weight(prefix(c, word, k), lambda);
    Int rhs = sub_checked(mul_checked(2, c.form_weight_root(wl, roots[l - 1])),
                          c.form_root_root(orbit_difference(c, word, S, k, lambda), roots[l - 1]));
    return {lhs, rhs};
}

ScalarQ scalar_coeff(Int d, Int a) {
    ScalarQ qi = ScalarQ::s_pow(mul_checked(2, d));
    ScalarQ base = qi.inverse() - qi;
    return base.pow(a) / qi.pow(mul_checked(a, a - 1) / 2);
}

Int quasi_comm_exponent_direct(const CartanData& c, const Word& word, const WeylElement& u, int j, int k) {
    int N = static_cast<int>(word.size());
    if (j < 1 || j >= k || k > N) fail("IndexOutOfRange", "need 1 <= j < k <= N");
    IndexSet RP = rp(c, word, u);
    IntVec vk = c.fundamental(word[k - 1]);
    IntVec plus = vadd(apply_to_weight(prefix(c, word, k), vk), apply_to_weight(product_over(c, word, RP, 1, k), vk));
    IntVec minus = orbit_difference(c, word, RP, j, c.fundamental(word[j - 1]));
    return -c.form_weight_root(plus, minus);
}

Int quasi_comm_exponent_reverse(const CartanData& c, const Word& word, const WeylElement& u, int k, int l) {
    int N = static_cast<int>(word.size());
    if (k < 1 || k >= l || l > N) fail("IndexOutOfRange", "need 1 <= k < l <= N");
    IndexSet LP = lp(c, word, u);
    // on the reversed word, w^{-1}_{>=m} is the prefix of length N+1-m
    Word rev = reversed(word);
    IndexSet S = reverse_indices(LP, N);
    IntVec vk = c.fundamental(word[k - 1]);
    int kk = N + 1 - k;
    IntVec plus = vadd(apply_to_weight(prefix(c, rev, kk), vk), apply_to_weight(product_over(c, rev, S, 1, kk), vk));
    IntVec minus = orbit_difference(c, rev, S, N + 1 - l, c.fundamental(word[l - 1]));
    return c.form_weight_root(plus, minus);
}

Int normal_comm_exponent(const CartanData& c, const Word& word, const WeylElement& u, int k, const IntVec& gamma) {
    int N = static_cast<int>(word.size());
    if (k < 1 || k > N) fail("IndexOutOfRange", "k out of range");
    IndexSet RP = rp(c, word, u);
    IntVec vk = c.fundamental(word[k - 1]);
    IntVec wl = apply_to_weight(prefix(c, word, k), vk);
    IntVec ul = apply_to_weight(product_over(c, word, RP, 1, k), vk);
    Int direct = add_checked(c.form_weight_root(wl, gamma), c.form_weight_root(ul, gamma));
    Int via_decomposition = sub_checked(mul_checked(2, c.form_weight_root(wl, gamma)),
                               c.form_root_root(orbit_difference(c, word, RP, k, vk), gamma));
    if (direct != via_decomposition) fail("InternalError", "normal element exponent routes disagree");
    return -direct;
}

Int localized_minor_exponent(const CartanData& c, const Word& word, const WeylElement& u, const IntVec& lambda1,
                             const IntVec& lambda2) {
    IndexSet RP = rp(c, word, u);
    IntVec diff = orbit_difference(c, word, RP, static_cast<int>(word.size()), lambda1);
    return c.form_weight_root(apply_to_weight(u, lambda2), diff);
}

IntMat lambda_Y(const CartanData& c, const Word& word) {
    auto roots = word_roots(c, word);
    std::size_t N = roots.size();
    IntMat m(N, IntVec(N, 0));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < k; ++j) {
            Int v = c.form_root_root(roots[k], roots[j]);
            m[k][j] = -v;
            m[j][k] = v;
        }
    return m;
}

IntMat restrict_matrix(const IntMat& m, const IndexSet& idx) {
    IntMat r;
    for (int a : idx) {
        IntVec row;
        for (int b : idx) row.push_back(m[a - 1][b - 1]);
        r.push_back(row);
    }
    return r;
}

IntMat lambda_delta_direct(const CartanData& c, const Word& word, const WeylElement& u) {
    IndexSet rows = complement(rp(c, word, u), static_cast<int>(word.size()));
    std::size_t n = rows.size();
    IntMat m(n, IntVec(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < a; ++b) {
            Int v = quasi_comm_exponent_direct(c, word, u, rows[b], rows[a]);
            m[a][b] = v;
            m[b][a] = -v;
        }
    return m;
}

IntMat lambda_delta_reverse(const CartanData& c, const Word& word, const WeylElement& u) {
    IndexSet rows = complement(lp(c, word, u), static_cast<int>(word.size()));
    std::size_t n = rows.size();
    IntMat m(n, IntVec(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < a; ++b) {
            // rows[b] < rows[a]: the smaller index is the normal one, so
            // tilde Delta_{rows[a]} tilde Delta_{rows[b]} = q^{-X} (...) with X
            // the printed exponent
            Int v = -quasi_comm_exponent_reverse(c, word, u, rows[b], rows[a]);
            m[a][b] = v;
            m[b][a] = -v;
        }
    return m;
}

IntMat a_exponent_square(const ExponentMatrix& m) { return principal_submatrix(m); }

std::map<int, ScalarQ> zeta_scalars(const CartanData& c, const Word& word, const WeylElement& u) {
    ExponentMatrix a = a_matrix(c, word, u);
    const IndexSet& rows = a.rows;
    std::size_t n = rows.size();
    IntMat skew = restrict_matrix(lambda_Y(c, word), rows);
    for (auto& row : skew)
        for (auto& x : row) x = mul_checked(2, x);
    TorusPtr T = make_torus(skew);
    std::vector<TorusElement> delta;
    for (std::size_t kk = 0; kk < n; ++kk) {
        int k = rows[kk];
        std::vector<std::pair<int, Int>> factors;
        ScalarQ scalar(1);
        for (std::size_t jj = kk + 1; jj-- > 0;) {
            int j = rows[jj];
            Int e = a.entries[jj][k - 1];
            factors.push_back({static_cast<int>(jj), e});
            scalar *= scalar_coeff(c.d(word[j - 1]), e);
        }
        delta.push_back(ordered_monomial(T, factors, scalar));
    }
    IntMat B = unit_triangular_inverse(principal_submatrix(a));
    std::map<int, ScalarQ> out;
    for (std::size_t kk = 0; kk < n; ++kk) {
        TorusElement p = TorusElement::one(T);
        for (std::size_t jj = 0; jj < n; ++jj) p = p * delta[jj].pow(B[jj][kk]);
        if (!p.is_monomial() || p.terms().begin()->first != unit_vector(n, kk))
            fail("InternalError", "Delta monomials do not recover Y_k");
        out[rows[kk]] = p.terms().begin()->second.inverse();
    }
    return out;
}

bool triangular_window_holds(const ExponentMatrix& m) {
    int N = m.N();
    for (int k = 1; k <= N; ++k) {
        int lo = 1;
        for (int l : m.positive)
            if (preceq(m.word, l, k)) lo = std::max(lo, l);
        for (int j : m.rows) {
            if (j < lo || j > k) continue;
            if (m.at(j, k) != (preceq(m.word, j, k) ? 1 : 0)) return false;
        }
    }
    return true;
}

bool prefix_invariance(const CartanData& c, const Word& word, const WeylElement& u, const IntVec& lambda,
                     bool& applicable) {
    int N = static_cast<int>(word.size());
    IndexSet RP = rp(c, word, u);
    applicable = N > 0 && contains(RP, N);
    if (!applicable) return true;
    Word w1(word.begin(), word.end() - 1);
    WeylElement u1 = product_over(c, word, RP, 1, N - 1);
    IndexSet RP1 = rp(c, w1, u1);
    IndexSet expect(RP.begin(), RP.end() - 1);
    if (RP1 != expect) return false;
    IntVec l1 = simple_reflect_weight(c, word[N - 1], lambda);
    for (int j : complement(RP, N)) {
        if (a_lambda(c, word, RP, j, N, lambda) != a_lambda(c, w1, RP1, j, N - 1, l1)) return false;
    }
    return true;
}

bool suffix_invariance(const CartanData& c, const Word& word, const WeylElement& u, const IntVec& lambda,
                      bool& applicable) {
    int N = static_cast<int>(word.size());
    IndexSet LP = lp(c, word, u);
    applicable = N > 0 && contains(LP, 1);
    if (!applicable) return true;
    Word w2(word.begin() + 1, word.end());
    WeylElement u2 = left_multiply_by_simple(c, word[0], u);
    IndexSet LP2 = lp(c, w2, u2);
    IndexSet expect;
    for (std::size_t t = 1; t < LP.size(); ++t) expect.push_back(LP[t] - 1);
    if (LP2 != expect) return false;
    IntVec mu = apply_to_weight(inverse(c, u), lambda);
    IntVec lambda2 = simple_reflect_weight(c, word[0], lambda);
    IntVec mu2 = apply_to_weight(inverse(c, u2), lambda2);
    for (int l : complement(LP, N)) {
        if (b_l_lambda(c, word, u, l, mu) != b_l_lambda(c, w2, u2, l - 1, mu2)) return false;
    }
    return true;
}

}  // namespace qs
