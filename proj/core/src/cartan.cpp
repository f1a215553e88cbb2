#include "qschubert/cartan.hpp"

#include <numeric>
#include <queue>

namespace qs {

namespace {

void check_shape(const IntMat& g) {
    std::size_t r = g.size();
    if (r == 0) fail("BadShape", "empty matrix");
    for (const auto& row : g)
        if (row.size() != r) fail("BadShape", "matrix is not square");
    for (std::size_t i = 0; i < r; ++i) {
        if (g[i][i] != 2) fail("BadShape", "diagonal entry is not 2");
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            if (g[i][j] > 0) fail("BadShape", "positive off-diagonal entry");
            if ((g[i][j] == 0) != (g[j][i] == 0)) fail("BadShape", "asymmetric zero pattern");
        }
    }
}

struct Frac {
    Int num, den;
};

Frac reduce(Int n, Int d) {
    Int g = std::gcd(n, d);
    return {n / g, d / g};
}

}  // namespace

IntVec symmetrizer(const IntMat& gcm) {
    check_shape(gcm);
    std::size_t r = gcm.size();
    std::vector<Frac> d(r, {0, 0});
    std::vector<int> comp(r, -1);
    int ncomp = 0;
    // propagate d_j = d_i a_ij / a_ji along the Dynkin graph
    for (std::size_t s = 0; s < r; ++s) {
        if (comp[s] >= 0) continue;
        d[s] = {1, 1};
        comp[s] = ncomp;
        std::queue<std::size_t> todo;
        todo.push(s);
        while (!todo.empty()) {
            std::size_t i = todo.front();
            todo.pop();
            for (std::size_t j = 0; j < r; ++j) {
                if (j == i || gcm[i][j] == 0) continue;
                Frac want = reduce(mul_checked(d[i].num, gcm[i][j]), mul_checked(d[i].den, gcm[j][i]));
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    d[j] = want;
                    todo.push(j);
                } else if (mul_checked(want.num, d[j].den) != mul_checked(want.den, d[j].num)) {
                    fail("NotSymmetrizable", "inconsistent cycle in the Dynkin graph");
                }
            }
        }
        ++ncomp;
    }
    IntVec out(r);
    for (int c = 0; c < ncomp; ++c) {
        Int l = 1;
        for (std::size_t i = 0; i < r; ++i)
            if (comp[i] == c) l = std::lcm(l, d[i].den);
        Int g = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (comp[i] == c) {
                out[i] = mul_checked(d[i].num, l / d[i].den);
                g = std::gcd(g, out[i]);
            }
        for (std::size_t i = 0; i < r; ++i)
            if (comp[i] == c) out[i] /= g;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (mul_checked(out[i], gcm[i][j]) != mul_checked(out[j], gcm[j][i]))
                fail("NotSymmetrizable", "no positive symmetrizer");
    return out;
}

CartanData CartanData::from_gcm(const IntMat& gcm) {
    CartanData c;
    c.d_ = symmetrizer(gcm);
    c.gcm_ = gcm;
    return c;
}

CartanData CartanData::builtin(char type, int n) {
    auto bad = [&] { fail("UnknownType", std::string(1, type) + std::to_string(n)); };
    if (n < 1) bad();
    IntMat g = identity_matrix(n);
    for (auto& row : g)
        for (auto& x : row) x *= 2;
    auto link = [&](int i, int j) {  // 1-based simple edge
        g[i - 1][j - 1] = -1;
        g[j - 1][i - 1] = -1;
    };
    switch (type) {
        case 'A':
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case 'B':
        case 'C':
            if (n < 2) bad();
            for (int i = 1; i < n; ++i) link(i, i + 1);
            // alpha_n short in B_n: a_{n,n-1} = -2
            g[n - 1][n - 2] = -2;
            if (type == 'C') g = transpose(g);
            break;
        case 'D':
            if (n < 3) bad();
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case 'E':
            if (n < 6 || n > 8) bad();
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < n; ++i) link(i, i + 1);
            break;
        case 'F':
            if (n != 4) bad();
            link(1, 2);
            link(2, 3);
            link(3, 4);
            g[2][1] = -2;
            break;
        case 'G':
            if (n != 2) bad();
            g = {{2, -1}, {-3, 2}};
            break;
        default:
            bad();
    }
    return from_gcm(g);
}

void CartanData::check_weight(const IntVec& v) const {
    if (static_cast<int>(v.size()) != rank()) fail("RankMismatch", "vector length " + std::to_string(v.size()));
}

IntVec CartanData::fundamental(int i) const {
    if (i < 1 || i > rank()) fail("IndexOutOfRange", "fundamental weight " + std::to_string(i));
    return unit_vector(rank(), i - 1);
}

IntVec CartanData::simple_root(int i) const {
    if (i < 1 || i > rank()) fail("IndexOutOfRange", "simple root " + std::to_string(i));
    return unit_vector(rank(), i - 1);
}

Int CartanData::form_weight_root(const IntVec& lambda, const IntVec& beta) const {
    check_weight(lambda);
    check_weight(beta);
    Int s = 0;
    for (int j = 0; j < rank(); ++j) s = add_checked(s, mul_checked(mul_checked(beta[j], d_[j]), lambda[j]));
    return s;
}

Int CartanData::form_root_root(const IntVec& beta, const IntVec& gamma) const {
    check_weight(beta);
    check_weight(gamma);
    Int s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (beta[i] == 0) continue;
        for (int j = 0; j < rank(); ++j)
            s = add_checked(s, mul_checked(mul_checked(beta[i], gamma[j]), mul_checked(d_[i], gcm_[i][j])));
    }
    return s;
}

IntVec CartanData::root_to_weight(const IntVec& beta) const {
    check_weight(beta);
    IntVec w(rank(), 0);
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i < rank(); ++i) w[j] = add_checked(w[j], mul_checked(beta[i], gcm_[j][i]));
    return w;
}

Int CartanData::coroot_pair(int i, const IntVec& lambda) const {
    check_weight(lambda);
    if (i < 1 || i > rank()) fail("IndexOutOfRange", "coroot " + std::to_string(i));
    return lambda[i - 1];
}

}  // namespace qs
