#pragma once

#include <map>
#include <memory>
#include <utility>

#include "qschubert/scalar.hpp"

namespace qs {

// Y_k Y_l = s^{skew[k][l]} Y_l Y_k, generators 0-based here.
struct CommutationMatrix {
    IntMat skew;

    explicit CommutationMatrix(IntMat m);
    int size() const { return static_cast<int>(skew.size()); }
};

using TorusPtr = std::shared_ptr<const CommutationMatrix>;

TorusPtr make_torus(IntMat skew);

// c(e,f) with Y^e Y^f = s^{c(e,f)} Y^{e+f}; Y^e is the ordered product
// Y_1^{e_1} ... Y_n^{e_n}.
Int mono_mul_cocycle(const CommutationMatrix& t, const IntVec& e, const IntVec& f);

class TorusElement {
public:
    using Terms = std::map<IntVec, ScalarQ>;

    explicit TorusElement(TorusPtr t) : t_(std::move(t)) {}
    static TorusElement zero(const TorusPtr& t) { return TorusElement(t); }
    static TorusElement one(const TorusPtr& t);
    static TorusElement generator(const TorusPtr& t, int k);
    static TorusElement monomial(const TorusPtr& t, IntVec e, ScalarQ c = ScalarQ(1));

    const TorusPtr& torus() const { return t_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement operator*(const TorusElement& o) const;
    TorusElement operator-() const;
    TorusElement scaled(const ScalarQ& c) const;
    TorusElement pow(Int m) const;  // negative powers need a monomial
    bool operator==(const TorusElement& o) const;
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    TorusPtr t_;
    Terms terms_;
    void same_torus(const TorusElement& o) const;
    void add_term(const IntVec& e, const ScalarQ& c);
};

TorusElement invert_monomial(const TorusElement& x);

// prod over (index, exponent) pairs in the order given; callers pass them in
// descending index order for the minor formula right-hand sides.
TorusElement ordered_monomial(const TorusPtr& t, const std::vector<std::pair<int, Int>>& factors,
                              const ScalarQ& scalar = ScalarQ(1));

// Commutation matrix of the generators Y^{M[:,c]}: M^T skew M.
IntMat transport_commutation(const IntMat& skew, const IntMat& M);

// True iff skew . e = 0 for every term exponent e.
bool is_central(const TorusElement& x);

}  // namespace qs
