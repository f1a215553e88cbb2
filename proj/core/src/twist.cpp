#include "qschubert/twist.hpp"

namespace qs {

TwistCorrespondence twist_indices(const CartanData& c, const Word& word, const WeylElement& u) {
    TwistCorrespondence t;
    t.word = word;
    t.reversedWord = reversed(word);
    t.u = u;
    t.uInverse = inverse(c, u);
    t.rp = rp(c, word, u);
    t.lp = lp(c, word, u);
    t.rpRev = rp(c, t.reversedWord, t.uInverse);
    t.lpRev = lp(c, t.reversedWord, t.uInverse);
    int N = t.N();
    t.rpToLp = reverse_indices(t.rp, N) == t.lpRev;
    t.lpToRp = reverse_indices(t.lp, N) == t.rpRev;
    return t;
}

bool matrix_correspondence(const CartanData& c, const Word& word, const WeylElement& u, const WeylElement& v) {
    int N = static_cast<int>(word.size());
    Word rev = reversed(word);
    if (!bruhat_leq(c, v, element_of_reduced_word(c, rev))) return false;
    ExponentMatrix b = b_matrix(c, word, u);
    ExponentMatrix a = a_matrix(c, rev, v);
    if (reverse_indices(b.rows, N) != a.rows) return false;
    for (int l : b.rows)
        for (int k = 1; k <= N; ++k)
            if (b.at(l, k) != a.at(N + 1 - l, N + 1 - k)) return false;
    return true;
}

bool matrix_correspondence_check(const CartanData& c, const Word& word, const WeylElement& u) {
    return matrix_correspondence(c, word, u, inverse(c, u));
}

MinorLabel twist_weight_label(const CartanData& c, const WeylElement& u, const WeylElement& w, const IntVec& lambda) {
    MinorLabel l;
    l.x = u;
    l.y = w;
    l.mu = apply_to_weight(inverse(c, u), lambda);
    return l;
}

int reverse_sequence_mismatches(const CartanData& c, const Word& word, const WeylElement& u) {
    int N = static_cast<int>(word.size());
    Word rev = reversed(word);
    WeylElement ui = inverse(c, u);
    IndexSet LP = lp(c, word, u);
    IndexSet RPrev = rp(c, rev, ui);
    int bad = 0;
    for (int k = 1; k <= N; ++k) {
        IntVec vk = c.fundamental(word[k - 1]);
        // reverse sequence label: x = u_bar_{>=k}, y = w_{>=k}, mu = u_bar_{>=k}^{-1} varpi
        WeylElement ubar = product_over(c, word, LP, k, N);
        MinorLabel mine{ubar, element_of_reduced_word(c, Word(word.begin() + (k - 1), word.end())),
                        apply_to_weight(inverse(c, ubar), vk)};
        // direct label on the reversed data at k' = N+1-k, sent through the twist
        int kk = N + 1 - k;
        WeylElement x = product_over(c, rev, RPrev, 1, kk);
        WeylElement y = element_of_reduced_word(c, Word(rev.begin(), rev.begin() + kk));
        MinorLabel sent = twist_weight_label(c, inverse(c, x), inverse(c, y), vk);
        if (!(mine == sent)) ++bad;
    }
    // commutation: an antiisomorphism reverses the order of products
    for (int k = 1; k <= N; ++k) {
        if (contains(LP, k)) continue;
        for (int l = k + 1; l <= N; ++l) {
            if (contains(LP, l)) continue;
            Int x = quasi_comm_exponent_reverse(c, word, u, k, l);
            Int y = quasi_comm_exponent_direct(c, rev, ui, N + 1 - l, N + 1 - k);
            if (x != -y) ++bad;
        }
    }
    return bad;
}

}  // namespace qs
