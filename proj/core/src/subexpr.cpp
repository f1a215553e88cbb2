#include "qschubert/subexpr.hpp"

#include <algorithm>

namespace qs {

bool contains(const IndexSet& s, int k) { return std::binary_search(s.begin(), s.end(), k); }

WeylElement product_over(const CartanData& c, const Word& word, const IndexSet& D, int j, int k) {
    int N = static_cast<int>(word.size());
    if (j < 1 || j > N + 1 || k < 0 || k > N) fail("IndexOutOfRange", "range [" + std::to_string(j) + "," + std::to_string(k) + "]");
    WeylElement v = identity_element(c);
    for (int l : D) {
        if (l < 1 || l > N) fail("IndexOutOfRange", "index set entry " + std::to_string(l));
        if (l >= j && l <= k) v = multiply_by_simple(c, v, word[l - 1]);
    }
    return v;
}

IndexSet rp(const CartanData& c, const Word& word, const WeylElement& u) {
    if (!is_reduced(c, word)) fail("NotReduced", "word is not reduced");
    WeylElement v = u;
    IndexSet D;
    for (int k = static_cast<int>(word.size()); k >= 1; --k) {
        if (has_right_descent(v, word[k - 1])) {
            v = multiply_by_simple(c, v, word[k - 1]);
            D.push_back(k);
        }
    }
    if (!v.is_identity()) fail("NotBelow", "u is not below w in the Bruhat order");
    std::reverse(D.begin(), D.end());
    return D;
}

IndexSet lp(const CartanData& c, const Word& word, const WeylElement& u) {
    if (!is_reduced(c, word)) fail("NotReduced", "word is not reduced");
    WeylElement v = u;
    IndexSet D;
    for (int k = 1; k <= static_cast<int>(word.size()); ++k) {
        if (has_left_descent(c, v, word[k - 1])) {
            v = left_multiply_by_simple(c, word[k - 1], v);
            D.push_back(k);
        }
    }
    if (!v.is_identity()) fail("NotBelow", "u is not below w in the Bruhat order");
    return D;
}

namespace {

// product of w^D if positive on the given side, nothing otherwise
bool positive_product(const CartanData& c, const Word& word, const IndexSet& D, Side side, WeylElement& v) {
    int N = static_cast<int>(word.size());
    v = identity_element(c);
    if (side == Side::Right) {
        for (int k = 1; k <= N; ++k) {
            int i = word[k - 1];
            if (has_right_descent(v, i)) return false;
            if (contains(D, k)) v = multiply_by_simple(c, v, i);
        }
    } else {
        for (int k = N; k >= 1; --k) {
            int i = word[k - 1];
            if (has_left_descent(c, v, i)) return false;
            if (contains(D, k)) v = left_multiply_by_simple(c, i, v);
        }
    }
    return true;
}

}  // namespace

bool is_positive(const CartanData& c, const Word& word, const IndexSet& D, Side side) {
    check_letters(c, word);
    WeylElement v;
    return positive_product(c, word, D, side, v);
}

IndexSet oracle_positive_subexpr(const CartanData& c, const Word& word, const WeylElement& u, Side side, int bound) {
    int N = static_cast<int>(word.size());
    if (N > bound) fail("BoundExceeded", "word longer than the oracle bound");
    check_letters(c, word);
    std::vector<IndexSet> found;
    for (unsigned long mask = 0; mask < (1UL << N); ++mask) {
        IndexSet D;
        for (int k = 1; k <= N; ++k)
            if (mask >> (k - 1) & 1UL) D.push_back(k);
        WeylElement v;
        if (positive_product(c, word, D, side, v) && v == u) found.push_back(D);
    }
    if (found.empty()) fail("NotBelow", "no positive subexpression");
    if (found.size() > 1) fail("UniquenessViolated", std::to_string(found.size()) + " positive subexpressions");
    return found[0];
}

IndexSet reverse_indices(const IndexSet& D, int N) {
    IndexSet r;
    for (int k : D) r.push_back(N + 1 - k);
    std::sort(r.begin(), r.end());
    return r;
}

IndexSet complement(const IndexSet& D, int N) {
    IndexSet r;
    for (int k = 1; k <= N; ++k)
        if (!contains(D, k)) r.push_back(k);
    return r;
}

}  // namespace qs
