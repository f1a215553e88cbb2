#pragma once

#include <functional>

#include "qschubert/exponents.hpp"

namespace qs {

// A permutation of [1,N] whose prefixes pi([1,k]) are intervals [c(k), d(k)].
// perm, c and d are stored 0-based by step (perm[k-1] = pi(k)).
struct PiElement {
    std::vector<int> perm;
    std::vector<int> c, d;

    int N() const { return static_cast<int>(perm.size()); }
    int at(int k) const { return perm[k - 1]; }
    int c_of(int k) const { return c[k - 1]; }
    int d_of(int k) const { return d[k - 1]; }
    // pi(k) = d(k); at k = 1 both hold and this one wins
    bool extends_right(int k) const { return perm[k - 1] == d[k - 1]; }
    bool operator==(const PiElement& o) const { return perm == o.perm; }
};

bool xi_contains(const std::vector<int>& perm);  // NotAPermutation
PiElement make_pi(const std::vector<int>& perm);  // also NotInXi
PiElement pi_identity(int N);
PiElement pi_reversal(int N);
// all of Xi_N in lexicographic order, 2^{N-1} elements
std::vector<PiElement> xi_enumerate(int N);
// streaming form; the callback sees elements in the same order
void xi_for_each(int N, const std::function<void(const PiElement&)>& f);

// The letters of w_{[c,d]} and index sets on it, shifted to [c,d].
Word interval_word(const Word& word, int c, int d);

// u(0), u(1), ..., u(N) with u(N) = u and u(0) = e. Both the Bruhat-min rule
// and the RP/LP membership rule are evaluated and must agree.
std::vector<WeylElement> u_sequence(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi);

IndexSet d_pi(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi);

struct FrameStep {
    int k = 0;
    int position = 0;  // pi(k)
    int c = 0, d = 0;
    bool right = true;  // pi(k) = d(k)
    WeylElement u_k;
    bool inD = false;
    IntVec mu;           // varpi_{i_d} or u(k)^{-1} varpi_{i_c}, weight coordinates
    IntVec lambdaPlus;   // weight coordinates
    IntVec lambdaMinus;  // root coordinates
};

// lambda^+ and lambda^- for one step
std::pair<IntVec, IntVec> lambda_pm(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi,
                                    int k);

struct ToricFrame {
    Word word;
    WeylElement u;
    PiElement pi;
    IndexSet D;
    std::vector<WeylElement> useq;  // index k = u(k), k in [0,N]
    std::vector<FrameStep> steps;   // index k-1
    std::vector<int> generators;    // steps k with pi(k) not in D, ascending
    IntMat bichar;                  // s-exponents of Lambda(e_a, e_b) over generators (step order)
    std::vector<int> genPositions;  // pi(k) of the generators, ascending
    IntMat bicharByPosition;        // same form, rows and columns ordered by position
};

ToricFrame frame_bicharacter(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi);

// Number of entries where the frame disagrees with the commutation matrix of
// the normal sequence: lambda_delta_direct at the identity, and the reverse
// matrix at the reversal. For the reverse case `literal` counts entries that
// disagree with the opposite orientation (see README).
int identity_frame_mismatches(const CartanData& c, const Word& word, const WeylElement& u);
int reversal_frame_mismatches(const CartanData& c, const Word& word, const WeylElement& u, int* literal = nullptr);

// Integer check that lambda_Y transported through the a-matrix (identity)
// or the b-matrix (reversal) gives the frame bicharacter.
bool frame_transport_holds(const CartanData& c, const Word& word, const WeylElement& u, bool reversal);

// Contraction labels: u(k) lies below w_{[c(k),d(k)]} and equals the product
// of D(pi) on the interval; for prefix and suffix intervals it also equals
// the RP prefix product resp. the LP suffix product.
bool contraction_labels_hold(const CartanData& c, const ToricFrame& f);

}  // namespace qs
