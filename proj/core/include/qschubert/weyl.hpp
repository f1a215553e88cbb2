#pragma once

#include <tuple>
#include <vector>

#include "qschubert/cartan.hpp"

namespace qs {

using Word = std::vector<int>;  // 1-based letters

// A Weyl group element: reduced word plus the action matrices on the root
// lattice (simple-root coordinates) and on the weight lattice
// (fundamental-weight coordinates). Equality compares the matrix pair.
struct WeylElement {
    Word word;
    IntMat rootAction;
    IntMat weightAction;

    int length() const { return static_cast<int>(word.size()); }
    bool is_identity() const { return word.empty(); }
    bool operator==(const WeylElement& o) const {
        return rootAction == o.rootAction && weightAction == o.weightAction;
    }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const {  // arbitrary total order, for maps
        return std::tie(rootAction, weightAction) < std::tie(o.rootAction, o.weightAction);
    }
};

WeylElement identity_element(const CartanData& c);

IntVec simple_reflect_root(const CartanData& c, int i, const IntVec& beta);
IntVec simple_reflect_weight(const CartanData& c, int i, const IntVec& lambda);
IntVec apply_to_root(const WeylElement& w, const IntVec& beta);
IntVec apply_to_weight(const WeylElement& w, const IntVec& lambda);

bool is_positive_root_vec(const IntVec& beta);  // nonzero, all coords >= 0
bool is_negative_root_vec(const IntVec& beta);

// w s_i and s_i w, kept reduced through the exchange condition
WeylElement multiply_by_simple(const CartanData& c, const WeylElement& w, int i);
WeylElement left_multiply_by_simple(const CartanData& c, int i, const WeylElement& w);

// Product of an arbitrary word, re-reduced letter by letter.
WeylElement element_of_word(const CartanData& c, const Word& word);
// Same, but the word must already be reduced (NotReduced otherwise).
WeylElement element_of_reduced_word(const CartanData& c, const Word& word);
bool is_reduced(const CartanData& c, const Word& word);

WeylElement multiply(const CartanData& c, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const CartanData& c, const WeylElement& w);

// beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}
std::vector<IntVec> roots_of_word(const CartanData& c, const Word& word);

// true iff l(w s_i) < l(w)
bool has_right_descent(const WeylElement& w, int i);
bool has_left_descent(const CartanData& c, const WeylElement& w, int i);

bool bruhat_leq(const CartanData& c, const WeylElement& u, const WeylElement& w);

// All elements of length <= maxlen, breadth-first, each with its first-found
// reduced word. Works for infinite groups.
std::vector<WeylElement> enumerate_elements(const CartanData& c, int maxlen);
// All reduced words of w.
std::vector<Word> reduced_words(const CartanData& c, const WeylElement& w);

Word reversed(const Word& w);
void check_letters(const CartanData& c, const Word& word);

}  // namespace qs
