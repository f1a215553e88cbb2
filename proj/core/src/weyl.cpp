#include "qschubert/weyl.hpp"

#include <algorithm>
#include <set>

namespace qs {

namespace {

void check_index(const CartanData& c, int i) {
    if (i < 1 || i > c.rank()) fail("IndexOutOfRange", "simple reflection " + std::to_string(i));
}

// matrices of s_i
IntMat root_reflection(const CartanData& c, int i) {
    IntMat m = identity_matrix(c.rank());
    for (int j = 0; j < c.rank(); ++j) m[i - 1][j] = sub_checked(m[i - 1][j], c.gcm()[i - 1][j]);
    return m;
}

IntMat weight_reflection(const CartanData& c, int i) {
    IntMat m = identity_matrix(c.rank());
    for (int j = 0; j < c.rank(); ++j) m[j][i - 1] = sub_checked(m[j][i - 1], c.gcm()[j][i - 1]);
    return m;
}

}  // namespace

WeylElement identity_element(const CartanData& c) {
    return {{}, identity_matrix(c.rank()), identity_matrix(c.rank())};
}

IntVec simple_reflect_root(const CartanData& c, int i, const IntVec& beta) {
    check_index(c, i);
    if (static_cast<int>(beta.size()) != c.rank()) fail("RankMismatch", "root vector");
    IntVec out = beta;
    Int p = dot(c.gcm()[i - 1], beta);  // <beta, alpha_i^vee>
    out[i - 1] = sub_checked(out[i - 1], p);
    return out;
}

IntVec simple_reflect_weight(const CartanData& c, int i, const IntVec& lambda) {
    check_index(c, i);
    if (static_cast<int>(lambda.size()) != c.rank()) fail("RankMismatch", "weight vector");
    IntVec out = lambda;
    Int li = lambda[i - 1];
    for (int j = 0; j < c.rank(); ++j) out[j] = sub_checked(out[j], mul_checked(li, c.gcm()[j][i - 1]));
    return out;
}

IntVec apply_to_root(const WeylElement& w, const IntVec& beta) {
    if (beta.size() != w.rootAction.size()) fail("RankMismatch", "root vector");
    return matvec(w.rootAction, beta);
}

IntVec apply_to_weight(const WeylElement& w, const IntVec& lambda) {
    if (lambda.size() != w.weightAction.size()) fail("RankMismatch", "weight vector");
    return matvec(w.weightAction, lambda);
}

bool is_positive_root_vec(const IntVec& beta) {
    bool nz = false;
    for (Int x : beta) {
        if (x < 0) return false;
        if (x > 0) nz = true;
    }
    return nz;
}

bool is_negative_root_vec(const IntVec& beta) {
    bool nz = false;
    for (Int x : beta) {
        if (x > 0) return false;
        if (x < 0) nz = true;
    }
    return nz;
}

bool has_right_descent(const WeylElement& w, int i) {
    IntVec col(w.rootAction.size());
    for (std::size_t r = 0; r < col.size(); ++r) col[r] = w.rootAction[r][i - 1];
    return !is_positive_root_vec(col);
}

WeylElement multiply_by_simple(const CartanData& c, const WeylElement& w, int i) {
    check_index(c, i);
    IntVec wa(c.rank());
    for (int r = 0; r < c.rank(); ++r) wa[r] = w.rootAction[r][i - 1];
    WeylElement out = w;
    if (is_positive_root_vec(wa)) {
        out.word.push_back(i);
        out.rootAction = matmul(w.rootAction, root_reflection(c, i));
        out.weightAction = matmul(w.weightAction, weight_reflection(c, i));
        return out;
    }
    // exchange: delete the unique j with s_{i_{j+1}} ... s_{i_N}(alpha_i) = alpha_{i_j}
    IntVec gamma = c.simple_root(i);
    int found = -1;
    for (int j = w.length() - 1; j >= 0; --j) {
        if (gamma == c.simple_root(w.word[j])) {
            if (found >= 0) fail("InternalError", "exchange position not unique");
            found = j;
        }
        gamma = simple_reflect_root(c, w.word[j], gamma);
    }
    if (found < 0) fail("InternalError", "exchange position not found");
    out.word.erase(out.word.begin() + found);
    out.rootAction = matmul(w.rootAction, root_reflection(c, i));
    out.weightAction = matmul(w.weightAction, weight_reflection(c, i));
    return out;
}

WeylElement inverse(const CartanData& c, const WeylElement& w) {
    WeylElement out = identity_element(c);
    out.word = reversed(w.word);
    for (int i : out.word) {
        out.rootAction = matmul(out.rootAction, root_reflection(c, i));
        out.weightAction = matmul(out.weightAction, weight_reflection(c, i));
    }
    return out;
}

bool has_left_descent(const CartanData& c, const WeylElement& w, int i) {
    return has_right_descent(inverse(c, w), i);
}

WeylElement left_multiply_by_simple(const CartanData& c, int i, const WeylElement& w) {
    return inverse(c, multiply_by_simple(c, inverse(c, w), i));
}

WeylElement element_of_word(const CartanData& c, const Word& word) {
    WeylElement w = identity_element(c);
    for (int i : word) w = multiply_by_simple(c, w, i);
    return w;
}

bool is_reduced(const CartanData& c, const Word& word) {
    check_letters(c, word);
    WeylElement w = identity_element(c);
    for (int i : word) {
        if (has_right_descent(w, i)) return false;
        w = multiply_by_simple(c, w, i);
    }
    return true;
}

WeylElement element_of_reduced_word(const CartanData& c, const Word& word) {
    check_letters(c, word);
    WeylElement w = identity_element(c);
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (has_right_descent(w, word[k])) fail("NotReduced", "word is not reduced at position " + std::to_string(k + 1));
        w = multiply_by_simple(c, w, word[k]);
    }
    return w;
}

WeylElement multiply(const CartanData& c, const WeylElement& a, const WeylElement& b) {
    WeylElement w = a;
    for (int i : b.word) w = multiply_by_simple(c, w, i);
    return w;
}

std::vector<IntVec> roots_of_word(const CartanData& c, const Word& word) {
    check_letters(c, word);
    std::vector<IntVec> out;
    WeylElement w = identity_element(c);
    for (std::size_t k = 0; k < word.size(); ++k) {
        IntVec b = apply_to_root(w, c.simple_root(word[k]));
        if (!is_positive_root_vec(b)) fail("NotReduced", "word is not reduced at position " + std::to_string(k + 1));
        out.push_back(b);
        w = multiply_by_simple(c, w, word[k]);
    }
    return out;
}

bool bruhat_leq(const CartanData& c, const WeylElement& u, const WeylElement& w) {
    if (u.length() > w.length()) return false;
    // u <= s_i v  <=>  min(u, s_i u) <= v, peeling w from the left
    WeylElement x = u;
    for (int i : w.word)
        if (has_left_descent(c, x, i)) x = left_multiply_by_simple(c, i, x);
    return x.is_identity();
}

std::vector<WeylElement> enumerate_elements(const CartanData& c, int maxlen) {
    std::vector<WeylElement> out{identity_element(c)};
    std::set<WeylElement> seen{out[0]};
    std::size_t begin = 0;
    for (int len = 1; len <= maxlen; ++len) {
        std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k)
            for (int i = 1; i <= c.rank(); ++i) {
                if (has_right_descent(out[k], i)) continue;
                WeylElement n = multiply_by_simple(c, out[k], i);
                if (seen.insert(n).second) out.push_back(n);
            }
        begin = end;
    }
    return out;
}

std::vector<Word> reduced_words(const CartanData& c, const WeylElement& w) {
    std::vector<Word> out;
    // strip right descents recursively
    std::vector<std::pair<WeylElement, Word>> stack{{w, {}}};
    while (!stack.empty()) {
        auto [x, suffix] = stack.back();
        stack.pop_back();
        if (x.is_identity()) {
            out.push_back(reversed(suffix));
            continue;
        }
        for (int i = c.rank(); i >= 1; --i)
            if (has_right_descent(x, i)) {
                Word s = suffix;
                s.push_back(i);
                stack.push_back({multiply_by_simple(c, x, i), s});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

void check_letters(const CartanData& c, const Word& word) {
    for (int i : word) check_index(c, i);
}

}  // namespace qs
