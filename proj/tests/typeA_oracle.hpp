#pragma once

// Type A_n in epsilon coordinates: weights and roots are vectors in Z^{n+1},
// simple reflections swap neighbouring coordinates, and the form is the dot
// product. Independent of the root-system code in the library.

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracleA {

using Vec = std::vector<long>;
using Word = std::vector<int>;

inline Vec fundamental(int n, int i) {
    Vec v(n + 1, 0);
    for (int j = 0; j < i; ++j) v[j] = 1;
    return v;
}

inline Vec simple_root(int n, int i) {
    Vec v(n + 1, 0);
    v[i - 1] = 1;
    v[i] = -1;
    return v;
}

// fundamental-weight coordinates to epsilon
inline Vec from_weight(const std::vector<long>& c) {
    int n = static_cast<int>(c.size());
    Vec v(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) v[j] += c[i - 1];
    return v;
}

inline Vec from_root(const std::vector<long>& b) {
    int n = static_cast<int>(b.size());
    Vec v(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        v[i - 1] += b[i - 1];
        v[i] -= b[i - 1];
    }
    return v;
}

inline std::vector<long> to_weight(const Vec& v) {
    std::vector<long> c(v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) c[i] = v[i] - v[i + 1];
    return c;
}

// coordinate sum must be zero
inline std::vector<long> to_root(const Vec& v) {
    std::vector<long> b(v.size() - 1);
    long acc = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) b[i] = acc += v[i];
    return b;
}

inline long coroot(int i, const Vec& v) { return v[i - 1] - v[i]; }

inline long form(const Vec& a, const Vec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0L); }

inline Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline Vec sub(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline Vec scale(long k, Vec a) {
    for (auto& x : a) x *= k;
    return a;
}

// s_{w[0]} s_{w[1]} ... applied to v (rightmost letter acts first)
inline Vec act(const Word& w, Vec v) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) std::swap(v[*it - 1], v[*it]);
    return v;
}

// letters of word at the 1-based positions in [j,k] that belong to S, in order
inline Word sub_word(const Word& word, const std::vector<int>& S, int j, int k) {
    Word out;
    for (int p : S)
        if (p >= j && p <= k) out.push_back(word[p - 1]);
    return out;
}

inline Word slice(const Word& word, int j, int k) {
    Word out;
    for (int p = j; p <= k; ++p) out.push_back(word[p - 1]);
    return out;
}

inline Word inverse_word(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

// one-line notation, 1-based values: x(e_j) = e_{line[j-1]}
inline std::vector<int> one_line(int n, const Word& w) {
    std::vector<int> line(n + 1);
    for (int j = 1; j <= n + 1; ++j) {
        Vec e(n + 1, 0);
        e[j - 1] = 1;
        Vec img = act(w, e);
        line[j - 1] = static_cast<int>(std::find(img.begin(), img.end(), 1) - img.begin()) + 1;
    }
    return line;
}

// tableau criterion for the Bruhat order of S_{n+1}
inline bool bruhat_leq(int n, const Word& u, const Word& w) {
    auto a = one_line(n, u), b = one_line(n, w);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> x(a.begin(), a.begin() + i), y(b.begin(), b.begin() + i);
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        for (int j = 0; j < i; ++j)
            if (x[j] > y[j]) return false;
    }
    return true;
}

}  // namespace oracleA
