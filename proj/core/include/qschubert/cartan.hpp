#pragma once

#include <string>

#include "qschubert/arith.hpp"

namespace qs {

// Symmetrizable generalized Cartan matrix, a_ij = <alpha_j, alpha_i^vee>,
// with the minimal symmetrizer on each connected component.
//
// Weights are IntVec in fundamental-weight coordinates, roots are IntVec in
// simple-root coordinates. Indices in the API are 1-based, matching words.
class CartanData {
public:
    static CartanData from_gcm(const IntMat& gcm);
    static CartanData builtin(char type, int rank);

    int rank() const { return static_cast<int>(gcm_.size()); }
    const IntMat& gcm() const { return gcm_; }
    const IntVec& sym() const { return d_; }
    Int a(int i, int j) const { return gcm_[i - 1][j - 1]; }  // 1-based
    Int d(int i) const { return d_[i - 1]; }

    IntVec fundamental(int i) const;  // varpi_i
    IntVec simple_root(int i) const;  // alpha_i

    Int form_weight_root(const IntVec& lambda, const IntVec& beta) const;
    Int form_root_root(const IntVec& beta, const IntVec& gamma) const;
    IntVec root_to_weight(const IntVec& beta) const;
    Int coroot_pair(int i, const IntVec& lambda) const;  // <alpha_i^vee, lambda>

    bool operator==(const CartanData& o) const { return gcm_ == o.gcm_; }

private:
    IntMat gcm_;
    IntVec d_;
    void check_weight(const IntVec& v) const;
};

IntVec symmetrizer(const IntMat& gcm);

}  // namespace qs
