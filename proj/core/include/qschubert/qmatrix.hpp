#pragma once

#include <optional>

#include "qschubert/exponents.hpp"

namespace qs {

// Quantum m x n matrices as the Schubert cell algebra of
// w = [m+1, ..., m+n, 1, ..., m] in type A_{m+n-1}. The word lists rows
// r = 1..m, row r being the letters m+1-r, ..., m-r+n; position k of the
// word is the matrix entry posMap[k-1], row-major.
struct QMatrixModel {
    int m = 0, n = 0;
    CartanData cartan = CartanData::builtin('A', 1);
    Word word;
    WeylElement w;
    std::vector<std::pair<int, int>> posMap;  // (row, col), 1-based
    std::vector<IntVec> roots;                // beta_k, simple-root coordinates
    TorusPtr torus;                           // all N generators, s-exponents

    int N() const { return m * n; }
    int position(int row, int col) const { return (row - 1) * n + col; }  // 1-based
};

QMatrixModel build_model(int m, int n);

// Permutation x(1..m+n) of an ambient Weyl element, 1-based values.
std::vector<int> ambient_permutation(const QMatrixModel& model, const WeylElement& x);

enum class Order { Direct, Reverse };

struct TorusEmbedding {
    const QMatrixModel* model = nullptr;
    IndexSet D;
    Order order = Order::Direct;
    std::vector<TorusElement> images;  // by position, index k-1
    ScalarQ coefficient;               // derived correction coefficient
};

// Correction coefficient of the restoration pass, derived from the
// relation table of the model (see README for the formula).
ScalarQ restoration_coefficient(const QMatrixModel& model, Order order, int pivot, int other);

// Inverse deleting-derivations pass. Direct: pivots in increasing position,
// corrections to entries strictly north-west. Reverse: pivots in decreasing
// position, corrections strictly south-east. Pivots in D map to zero.
// `upto` limits the model to positions [1, upto] (the default is all).
TorusEmbedding restoration(const QMatrixModel& model, const IndexSet& D, Order order, int upto = -1);

// Number of violated quantum-matrix relations among the images (pairs of
// positions <= upto, default all).
int relation_failures(const TorusEmbedding& e, int upto = -1);

// Leibniz expansion sum_sigma (-q)^{l(sigma)} t_{r_1 c_sigma(1)} ... t_{r_p c_sigma(p)}
TorusElement quantum_minor_image(const TorusEmbedding& e, const std::vector<int>& rows, const std::vector<int>& cols);

struct MinorSubsets {
    bool zero = false;  // the label is zero by the containment rule
    std::vector<int> rows, cols;
};

// Rows and columns for the minor with label (x varpi_d, y varpi_d).
MinorSubsets minor_subsets(const QMatrixModel& model, const WeylElement& x, const WeylElement& y, int d);

// (q^{-1} - q)^{size} times the quantum minor, or zero
TorusElement label_minor_image(const TorusEmbedding& e, const WeylElement& x, const WeylElement& y, int d);

struct MinorFormulaReport {
    int k = 0;
    TorusElement lhs, rhs;
    bool equal = false;
};

MinorFormulaReport verify_minor_formula(const QMatrixModel& model, const WeylElement& u, int k);
MinorFormulaReport verify_minor_formula_reverse(const QMatrixModel& model, const WeylElement& u, int k);
// all k at once, sharing one embedding
std::vector<MinorFormulaReport> verify_minor_formula_all(const QMatrixModel& model, const WeylElement& u);
std::vector<MinorFormulaReport> verify_minor_formula_reverse_all(const QMatrixModel& model, const WeylElement& u);

struct VanishingReport {
    bool lastInRP = false;
    TorusElement image, comparison;
    bool ok = false;
};

VanishingReport verify_vanishing(const QMatrixModel& model, const WeylElement& u);

struct ContractionReport {
    int k = 0;
    bool rpPrefix = false;        // rp(w_{<=k}, u_bar_{<=k}) = RP cap [1,k]
    bool lpSuffix = false;        // lp(w_{>=k}, u_bar_{>=k}) = LP cap [k,N]
    bool vanishing = false;       // the k-th boundary minor vanishes iff k in RP
    bool truncatedImages = false;  // prefix restoration agrees with the full one on [1,k]
    bool truncatedRelations = false;
    bool consistent() const { return rpPrefix && lpSuffix && vanishing && truncatedImages && truncatedRelations; }
};

ContractionReport contraction_report(const QMatrixModel& model, const WeylElement& u, int k);

// Restoration with D is an algebra homomorphism (all relations hold).
bool diagram_is_homomorphism(const QMatrixModel& model, const IndexSet& D, Order order);

// Monomiality of the normal sequences and their commutation exponents:
// direct sequence (k not in RP) against quasi_comm_exponent_direct, reverse
// sequence (k not in LP) against quasi_comm_exponent_reverse with the
// smaller index normal. Returns the number of failures.
int sequence_commutation_failures(const QMatrixModel& model, const WeylElement& u);

// q-exponent e with a b = q^e b a for two monomials
Int monomial_commutation_exponent(const TorusElement& a, const TorusElement& b);

// every u <= w of the model
std::vector<WeylElement> elements_below(const QMatrixModel& model);

}  // namespace qs
