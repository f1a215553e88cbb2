#include "qschubert/arith.hpp"

namespace qs {

IntVec vadd(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) fail("RankMismatch", "vector lengths differ");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = add_checked(a[i], b[i]);
    return r;
}

IntVec vsub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) fail("RankMismatch", "vector lengths differ");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub_checked(a[i], b[i]);
    return r;
}

IntVec vscale(Int c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_checked(c, a[i]);
    return r;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) fail("RankMismatch", "vector lengths differ");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add_checked(s, mul_checked(a[i], b[i]));
    return s;
}

IntVec matvec(const IntMat& m, const IntVec& v) {
    IntVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMat r(n, IntVec(p, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) fail("RankMismatch", "matrix shapes differ");
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < p; ++j)
                r[i][j] = add_checked(r[i][j], mul_checked(a[i][l], b[l][j]));
        }
    }
    return r;
}

IntMat transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t(a[0].size(), IntVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntVec unit_vector(std::size_t n, std::size_t i) {
    IntVec v(n, 0);
    v.at(i) = 1;
    return v;
}

bool is_zero(const IntVec& v) {
    for (Int x : v)
        if (x != 0) return false;
    return true;
}

std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace qs
