#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qschubert/arith.hpp"

namespace qs {

// Laurent polynomial in s with rational coefficients. Stored as the lowest
// exponent plus a dense coefficient vector with nonzero ends.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const mpq_class& c, Int exponent = 0);

    bool is_zero() const { return c_.empty(); }
    Int low() const { return low_; }
    Int high() const { return low_ + static_cast<Int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(Int e) const;
    const mpq_class& lead() const { return c_.back(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const mpq_class& k) const;
    LaurentPoly shifted(Int e) const;
    bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Euclidean division of ordinary polynomials (low() >= 0 assumed on both).
    static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot, LaurentPoly& rem);
    static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);  // monic

    std::string to_string() const;

private:
    Int low_ = 0;
    std::vector<mpq_class> c_;
    void trim();
    friend class ScalarQ;
};

// Element of Q(s), s = q^{1/2}. Unique representation: num/den with den a
// primitive integer polynomial, positive leading coefficient, nonzero
// constant term, and gcd(num, den) = 1.
class ScalarQ {
public:
    ScalarQ() : num_(), den_(mpq_class(1)) {}
    ScalarQ(long v) : num_(mpq_class(v)), den_(mpq_class(1)) {}  // NOLINT implicit
    explicit ScalarQ(const mpq_class& v) : num_(v), den_(mpq_class(1)) {}
    ScalarQ(LaurentPoly num, LaurentPoly den);

    static ScalarQ s_pow(Int e);
    static ScalarQ q_pow(Int e) { return s_pow(mul_checked(2, e)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const;  // denominator 1
    // c * s^e for a single term; false otherwise
    bool as_monomial(mpq_class& c, Int& e) const;

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    ScalarQ operator+(const ScalarQ& o) const;
    ScalarQ operator-(const ScalarQ& o) const;
    ScalarQ operator*(const ScalarQ& o) const;
    ScalarQ operator/(const ScalarQ& o) const;
    ScalarQ operator-() const;
    ScalarQ& operator+=(const ScalarQ& o) { return *this = *this + o; }
    ScalarQ& operator*=(const ScalarQ& o) { return *this = *this * o; }
    ScalarQ inverse() const;
    ScalarQ pow(Int e) const;
    bool operator==(const ScalarQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ScalarQ& o) const { return !(*this == o); }

    std::string num_string() const { return num_.to_string(); }
    std::string den_string() const { return den_.to_string(); }
    std::string to_string() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

}  // namespace qs
