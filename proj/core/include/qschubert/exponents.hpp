#pragma once

#include <map>

#include "qschubert/qtorus.hpp"
#include "qschubert/subexpr.hpp"

namespace qs {

enum class Presentation { Direct, Reverse };

// Rows are [1,N] minus the positive subexpression (RP for the a-matrix, LP
// for the b-matrix); columns are [1,N]. entries[r][k-1] is the entry of row
// rows[r] and column k.
struct ExponentMatrix {
    Word word;
    Presentation side = Presentation::Direct;
    IndexSet positive;  // RP or LP
    IndexSet rows;
    IntMat entries;
    int N() const { return static_cast<int>(word.size()); }
    Int at(int row, int col) const;  // 1-based indices, row must be in rows
};

// beta_j for an arbitrary (possibly non-reduced) word
std::vector<IntVec> word_roots(const CartanData& c, const Word& word);

// a_jk(lambda) = <alpha_{i_j}^vee, u_{[j+1,k]} lambda>, u = w^S
Int a_lambda(const CartanData& c, const Word& word, const IndexSet& S, int j, int k, const IntVec& lambda);
// delta_{i_j,i} - sum_{j<l<=k, i_l=i, l in S} <alpha_{i_j}^vee, u_{[j+1,l-1]} alpha_i>
Int a_closed_form(const CartanData& c, const Word& word, const IndexSet& S, int j, int k, int i);

ExponentMatrix a_matrix(const CartanData& c, const Word& word, const WeylElement& u);
// inverse of the principal submatrix, indexed rows x rows
IntMat a_inverse(const CartanData& c, const Word& word, const WeylElement& u);
IntMat principal_submatrix(const ExponentMatrix& m);
IntMat unit_triangular_inverse(const IntMat& m);  // upper unit triangular

Int b_l_lambda(const CartanData& c, const Word& word, const WeylElement& u, int l, const IntVec& lambda);
ExponentMatrix b_matrix(const CartanData& c, const Word& word, const WeylElement& u);

// j -> -a_jk(lambda) for j in [1,k] \ S
std::map<int, Int> orbit_decomposition(const CartanData& c, const Word& word, const IndexSet& S, int k,
                                      const IntVec& lambda);
// (w_{<=k} - u_{<=k}) lambda in simple-root coordinates, through the decomposition
IntVec orbit_difference(const CartanData& c, const Word& word, const IndexSet& S, int k, const IntVec& lambda);
// checks the decomposition against both Weyl actions directly
bool orbit_decomposition_holds(const CartanData& c, const Word& word, const IndexSet& S, int k, const IntVec& lambda);

std::pair<Int, Int> inner_product_identity(const CartanData& c, const Word& word, const IndexSet& S, int l, int k,
                                              const IntVec& lambda);

// (q_i^{-1} - q_i)^a / q_i^{a(a-1)/2}, q_i = s^{2 d_i}
ScalarQ scalar_coeff(Int d, Int a);

// Delta_k Delta_j = q^m Delta_j Delta_k, j < k, RP-based chain
Int quasi_comm_exponent_direct(const CartanData& c, const Word& word, const WeylElement& u, int j, int k);
// X = <(w^{-1}_{>=k} + u_bar^{-1}_{>=k}) varpi_{i_k}, (w^{-1}_{>=l} - u_bar^{-1}_{>=l}) varpi_{i_l}>,
// k < l. The relation it governs is tilde Delta_k tilde Delta_l = q^X tilde Delta_l tilde Delta_k
// (the element with the smaller index is the normal one).
Int quasi_comm_exponent_reverse(const CartanData& c, const Word& word, const WeylElement& u, int k, int l);
// -<(w_{<=k} + u_{<=k}) varpi_{i_k}, gamma>
Int normal_comm_exponent(const CartanData& c, const Word& word, const WeylElement& u, int k, const IntVec& gamma);
// <(w - u) lambda1, u lambda2>
Int localized_minor_exponent(const CartanData& c, const Word& word, const WeylElement& u, const IntVec& lambda1,
                             const IntVec& lambda2);

// q-exponent commutation matrices. lambda_Y over all N positions:
// Y_k Y_j = q^{-<beta_k,beta_j>} Y_j Y_k for k > j.
IntMat lambda_Y(const CartanData& c, const Word& word);
IntMat restrict_matrix(const IntMat& m, const IndexSet& idx);  // 1-based indices
// direct normal sequence matrix over [1,N] \ RP
IntMat lambda_delta_direct(const CartanData& c, const Word& word, const WeylElement& u);
// reverse normal sequence matrix over [1,N] \ LP
IntMat lambda_delta_reverse(const CartanData& c, const Word& word, const WeylElement& u);
// exponent matrix M with M[j][k] = a_jk (rows and columns [1,N] \ RP)
IntMat a_exponent_square(const ExponentMatrix& m);

// zeta_k with Y_k = zeta_k prod_{j ascending} Delta_j^{b_jk}, computed in the
// Y-torus from the minor formula right-hand sides. Keys are positions.
std::map<int, ScalarQ> zeta_scalars(const CartanData& c, const Word& word, const WeylElement& u);

// a_jk = delta_{j <= k} on the window above the last
// l <= k (same letter) in RP
bool triangular_window_holds(const ExponentMatrix& m);

// Needs N in RP; the a-exponent vector of Delta_{u lambda, w lambda}
// equals that of the truncated data with s_{i_N} lambda. Returns false when
// the hypothesis fails.
bool prefix_invariance(const CartanData& c, const Word& word, const WeylElement& u, const IntVec& lambda,
                       bool& applicable);
// mirror: 1 in LP, b-vectors of the full and suffix data agree
bool suffix_invariance(const CartanData& c, const Word& word, const WeylElement& u, const IntVec& lambda,
                       bool& applicable);

}  // namespace qs
