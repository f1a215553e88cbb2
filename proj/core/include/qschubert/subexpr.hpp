#pragma once

#include "qschubert/weyl.hpp"

namespace qs {

using IndexSet = std::vector<int>;  // sorted ascending, 1-based positions

enum class Side { Right, Left };

bool contains(const IndexSet& s, int k);

// w^D_{[j,k]}: ordered product of s_{i_l}, l in D cap [j,k]. Identity for an
// empty range. Accepts j in [1,N+1], k in [0,N].
WeylElement product_over(const CartanData& c, const Word& word, const IndexSet& D, int j, int k);

IndexSet rp(const CartanData& c, const Word& word, const WeylElement& u);
IndexSet lp(const CartanData& c, const Word& word, const WeylElement& u);

// Marsh-Rietsch positivity at every position, see README.
bool is_positive(const CartanData& c, const Word& word, const IndexSet& D, Side side);

// Brute force over all 2^N subsets; asserts a unique survivor.
IndexSet oracle_positive_subexpr(const CartanData& c, const Word& word, const WeylElement& u, Side side,
                                 int bound = 20);

IndexSet reverse_indices(const IndexSet& D, int N);  // k -> N+1-k, re-sorted
IndexSet complement(const IndexSet& D, int N);

}  // namespace qs
