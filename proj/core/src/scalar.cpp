#include "qschubert/scalar.hpp"

#include <algorithm>

namespace qs {

LaurentPoly::LaurentPoly(const mpq_class& c, Int exponent) : low_(exponent) {
    if (c != 0) {
        c_.push_back(c);
        c_.back().canonicalize();  // mpq_class(n, d) does not reduce
    }
    trim();
}

void LaurentPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t z = 0;
    while (z < c_.size() && c_[z] == 0) ++z;
    if (z) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
        low_ += static_cast<Int>(z);
    }
    if (c_.empty()) low_ = 0;
}

mpq_class LaurentPoly::coeff(Int e) const {
    if (c_.empty() || e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    LaurentPoly r;
    r.low_ = std::min(low_, o.low_);
    Int hi = std::max(high(), o.high());
    r.c_.assign(static_cast<std::size_t>(hi - r.low_ + 1), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[static_cast<std::size_t>(low_ - r.low_) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[static_cast<std::size_t>(o.low_ - r.low_) + i] += o.c_[i];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    LaurentPoly r;
    r.low_ = add_checked(low_, o.low_);
    r.c_.assign(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& k) const {
    if (k == 0) return {};
    LaurentPoly r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

LaurentPoly LaurentPoly::shifted(Int e) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ = add_checked(r.low_, e);
    return r;
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot, LaurentPoly& rem) {
    if (b.is_zero()) fail("InternalError", "polynomial division by zero");
    // work on dense coefficient arrays starting at exponent 0
    std::vector<mpq_class> r(static_cast<std::size_t>(a.is_zero() ? 0 : a.high() + 1), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[static_cast<std::size_t>(a.low_) + i] = a.c_[i];
    std::vector<mpq_class> bd(static_cast<std::size_t>(b.high() + 1), mpq_class(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) bd[static_cast<std::size_t>(b.low_) + i] = b.c_[i];
    std::size_t db = bd.size() - 1;
    std::vector<mpq_class> q(r.size() > db ? r.size() - db : 0, mpq_class(0));
    for (std::size_t top = r.size(); top-- > db;) {
        if (r[top] == 0) continue;
        mpq_class f = r[top] / bd[db];
        q[top - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= f * bd[j];
    }
    quot = LaurentPoly();
    quot.c_ = std::move(q);
    quot.trim();
    rem = LaurentPoly();
    rem.c_ = std::move(r);
    rem.trim();
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        LaurentPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / a.lead());
}

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const mpq_class& c = c_[i];
        if (c == 0) continue;
        Int e = low_ + static_cast<Int>(i);
        mpq_class a = abs(c);
        std::string term;
        if (e == 0) {
            term = a.get_str();
        } else {
            std::string mono = e == 1 ? "s" : "s^" + std::to_string(e);
            term = a == 1 ? mono : a.get_str() + "*" + mono;
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

ScalarQ::ScalarQ(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail("InternalError", "zero denominator");
    normalize();
}

ScalarQ ScalarQ::s_pow(Int e) {
    ScalarQ r;
    r.num_ = LaurentPoly(mpq_class(1), e);
    return r;
}

bool ScalarQ::is_laurent() const { return den_.coeffs().size() == 1 && den_.low() == 0 && den_.lead() == 1; }

bool ScalarQ::is_one() const { return is_laurent() && num_.coeffs().size() == 1 && num_.low() == 0 && num_.lead() == 1; }

bool ScalarQ::as_monomial(mpq_class& c, Int& e) const {
    if (!is_laurent() || num_.coeffs().size() != 1) return false;
    c = num_.lead();
    e = num_.low();
    return true;
}

void ScalarQ::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(mpq_class(1));
        return;
    }
    // move s-powers of the denominator into the numerator
    if (den_.low() != 0) {
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
    }
    if (den_.coeffs().size() > 1) {
        LaurentPoly n0 = num_.shifted(-num_.low());
        LaurentPoly g = LaurentPoly::gcd(n0, den_);
        if (g.coeffs().size() > 1) {
            LaurentPoly q, r;
            LaurentPoly::divmod(n0, g, q, r);
            num_ = q.shifted(num_.low());
            LaurentPoly::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    // primitive integer denominator with positive leading coefficient
    mpz_class l = 1, g = 0;
    for (const auto& x : den_.coeffs()) {
        if (x == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (const auto& x : den_.coeffs()) {
        if (x == 0) continue;
        mpz_class v = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class k(l, g);
    k.canonicalize();
    if (den_.lead() < 0) k = -k;
    if (k != 1) {
        den_ = den_.scaled(k);
        num_ = num_.scaled(k);
    }
}

ScalarQ ScalarQ::operator+(const ScalarQ& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    ScalarQ r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        if (is_laurent()) {
            if (r.num_.is_zero()) r.den_ = LaurentPoly(mpq_class(1));
            return r;
        }
    } else {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    r.normalize();
    return r;
}

ScalarQ ScalarQ::operator-() const {
    ScalarQ r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarQ ScalarQ::operator-(const ScalarQ& o) const { return *this + (-o); }

ScalarQ ScalarQ::operator*(const ScalarQ& o) const {
    ScalarQ r;
    r.num_ = num_ * o.num_;
    if (is_laurent() && o.is_laurent()) {
        r.den_ = LaurentPoly(mpq_class(1));
        return r;
    }
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

ScalarQ ScalarQ::inverse() const {
    if (is_zero()) fail("InternalError", "inverse of zero scalar");
    ScalarQ r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

ScalarQ ScalarQ::operator/(const ScalarQ& o) const { return *this * o.inverse(); }

ScalarQ ScalarQ::pow(Int e) const {
    ScalarQ base = e < 0 ? inverse() : *this;
    Int n = e < 0 ? -e : e;
    ScalarQ r(1);
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

std::string ScalarQ::to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qs
