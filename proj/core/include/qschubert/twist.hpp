#pragma once

#include "qschubert/exponents.hpp"

namespace qs {

// Index-level shadow of the twist: (word, u) against (reversed word, u^{-1})
// with positions k <-> N+1-k.
struct TwistCorrespondence {
    Word word;
    Word reversedWord;
    WeylElement u;
    WeylElement uInverse;
    IndexSet rp, lp;         // of (word, u)
    IndexSet rpRev, lpRev;   // of (reversedWord, uInverse)
    bool rpToLp = false;     // reverse(rp) == lpRev
    bool lpToRp = false;     // reverse(lp) == rpRev
    int N() const { return static_cast<int>(word.size()); }
    int reverse_index(int k) const { return N() + 1 - k; }
    bool holds() const { return rpToLp && lpToRp; }
};

TwistCorrespondence twist_indices(const CartanData& c, const Word& word, const WeylElement& u);

// b_matrix(word, u) against a_matrix(reversed word, v) with rows and columns
// reversed. The correspondence is v = u^{-1}; other v serve as controls.
bool matrix_correspondence(const CartanData& c, const Word& word, const WeylElement& u, const WeylElement& v);
bool matrix_correspondence_check(const CartanData& c, const Word& word, const WeylElement& u);

// Localized minor label Delta_{x mu, y mu}.
struct MinorLabel {
    WeylElement x, y;
    IntVec mu;
    bool operator==(const MinorLabel& o) const { return x == o.x && y == o.y && mu == o.mu; }
};

// lambda -> (u (u^{-1} lambda), w (u^{-1} lambda)) with mu = u^{-1} lambda
MinorLabel twist_weight_label(const CartanData& c, const WeylElement& u, const WeylElement& w, const IntVec& lambda);

// Labels of the reverse normal sequence of (word, u) against the labels of
// the direct sequence of (reversed word, u^{-1}) sent through the twist, and
// the commutation exponents of the two sequences (which the antiisomorphism
// must swap). Returns the number of disagreeing labels plus exponents.
int reverse_sequence_mismatches(const CartanData& c, const Word& word, const WeylElement& u);

}  // namespace qs
