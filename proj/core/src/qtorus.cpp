#include "qschubert/qtorus.hpp"

namespace qs {

CommutationMatrix::CommutationMatrix(IntMat m) : skew(std::move(m)) {
    std::size_t n = skew.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (skew[i].size() != n) fail("LengthMismatch", "commutation matrix is not square");
        if (skew[i][i] != 0) fail("LengthMismatch", "commutation matrix has nonzero diagonal");
        for (std::size_t j = 0; j < i; ++j)
            if (skew[i][j] != -skew[j][i]) fail("LengthMismatch", "commutation matrix is not skew");
    }
}

TorusPtr make_torus(IntMat skew) { return std::make_shared<const CommutationMatrix>(std::move(skew)); }

Int mono_mul_cocycle(const CommutationMatrix& t, const IntVec& e, const IntVec& f) {
    int n = t.size();
    if (static_cast<int>(e.size()) != n || static_cast<int>(f.size()) != n) fail("LengthMismatch", "exponent vector length");
    Int c = 0;
    for (int k = 1; k < n; ++k) {
        if (e[k] == 0) continue;
        for (int l = 0; l < k; ++l)
            if (f[l] != 0) c = add_checked(c, mul_checked(mul_checked(e[k], f[l]), t.skew[k][l]));
    }
    return c;
}

TorusElement TorusElement::one(const TorusPtr& t) { return monomial(t, IntVec(t->size(), 0)); }

TorusElement TorusElement::generator(const TorusPtr& t, int k) {
    if (k < 0 || k >= t->size()) fail("IndexOutOfRange", "torus generator " + std::to_string(k));
    return monomial(t, unit_vector(t->size(), k));
}

TorusElement TorusElement::monomial(const TorusPtr& t, IntVec e, ScalarQ c) {
    if (static_cast<int>(e.size()) != t->size()) fail("LengthMismatch", "exponent vector length");
    TorusElement x(t);
    if (!c.is_zero()) x.terms_.emplace(std::move(e), std::move(c));
    return x;
}

void TorusElement::same_torus(const TorusElement& o) const {
    if (t_ != o.t_ && t_->skew != o.t_->skew) fail("MixedTori", "elements of different quantum tori");
}

void TorusElement::add_term(const IntVec& e, const ScalarQ& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    same_torus(o);
    TorusElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TorusElement TorusElement::operator-() const {
    TorusElement r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::operator*(const TorusElement& o) const {
    same_torus(o);
    TorusElement r(t_);
    for (const auto& [e, a] : terms_)
        for (const auto& [f, b] : o.terms_) {
            Int c = mono_mul_cocycle(*t_, e, f);
            r.add_term(vadd(e, f), a * b * ScalarQ::s_pow(c));
        }
    return r;
}

TorusElement TorusElement::scaled(const ScalarQ& c) const {
    TorusElement r(t_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

TorusElement TorusElement::pow(Int m) const {
    if (m < 0) return invert_monomial(*this).pow(-m);
    TorusElement r = one(t_);
    for (Int i = 0; i < m; ++i) r = r * *this;
    return r;
}

bool TorusElement::operator==(const TorusElement& o) const {
    same_torus(o);
    return terms_ == o.terms_;
}

std::string TorusElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "[" + c.to_string() + "]*Y^" + qs::to_string(e);
    }
    return s;
}

TorusElement invert_monomial(const TorusElement& x) {
    if (!x.is_monomial()) fail("NotMonomial", "inverse of a non-monomial torus element");
    const auto& [e, c] = *x.terms().begin();
    IntVec ne = vscale(-1, e);
    Int k = mono_mul_cocycle(*x.torus(), e, ne);
    return TorusElement::monomial(x.torus(), ne, (c * ScalarQ::s_pow(k)).inverse());
}

TorusElement ordered_monomial(const TorusPtr& t, const std::vector<std::pair<int, Int>>& factors,
                              const ScalarQ& scalar) {
    TorusElement r = TorusElement::one(t);
    for (const auto& [k, m] : factors) {
        IntVec e(t->size(), 0);
        e.at(k) = m;
        r = r * TorusElement::monomial(t, e);
    }
    return r.scaled(scalar);
}

IntMat transport_commutation(const IntMat& skew, const IntMat& M) {
    if (M.size() != skew.size()) fail("LengthMismatch", "exponent matrix rows must match torus size");
    return matmul(matmul(transpose(M), skew), M);
}

bool is_central(const TorusElement& x) {
    for (const auto& [e, c] : x.terms())
        if (!is_zero(matvec(x.torus()->skew, e))) return false;
    return true;
}

}  // namespace qs
