#pragma once

#include "specnet/errors.hpp"
#include "specnet/scalar/laurent_poly.hpp"

#include <optional>
#include <utility>

namespace specnet {

// num/den pair of Laurent polynomials, kept in the normal form:
//   - zero is 0/1
//   - joint monomial content stripped (both num and den have min exponent 0
//     in every variable, jointly)
//   - den has content 1 and positive leading coefficient
//   - if den divides num exactly the quotient is taken (den becomes 1)
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(size_t arity)
        : num_(LaurentPoly(arity)), den_(LaurentPoly::constant(arity, 1)) {}

    RationalFunction(LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction constant(size_t arity, BigRational c) {
        return RationalFunction(LaurentPoly::constant(arity, std::move(c)),
                                LaurentPoly::constant(arity, 1));
    }

    static RationalFunction generator(size_t arity, size_t index, int32_t power = 1) {
        return RationalFunction(LaurentPoly::generator(arity, index, power),
                                LaurentPoly::constant(arity, 1));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    size_t arity() const { return num_.arity(); }
    bool is_zero() const { return num_.is_zero(); }

    bool den_is_one() const {
        return den_.is_monomial() && total_degree(den_.leading().first) == 0 &&
               den_.leading().second == 1;
    }

    // structural identity (after normalization); not full mathematical equality
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // mathematical equality by cross-multiplication
    bool equals(const RationalFunction& o) const {
        if (*this == o) return true;
        return (num_ * o.den_ - o.num_ * den_).is_zero();
    }

    RationalFunction operator-() const {
        RationalFunction r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        // cross-cancel structurally equal pairs first
        if (a.num_ == b.den_ && !a.num_.is_zero())
            return RationalFunction(b.num_, a.den_);
        if (b.num_ == a.den_ && !b.num_.is_zero())
            return RationalFunction(a.num_, b.den_);
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero("exact division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(int64_t e) const {
        const size_t n = arity();
        if (e == 0) return constant(n, 1);
        RationalFunction base = e > 0 ? *this : inverse();
        uint64_t k = static_cast<uint64_t>(e > 0 ? e : -e);
        RationalFunction acc = constant(n, 1);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(num_.arity(), 1);
            return;
        }
        // joint monomial content
        Monomial mn = num_.min_exponents();
        Monomial md = den_.min_exponents();
        Monomial joint(mn.size());
        bool nontrivial = false;
        for (size_t i = 0; i < mn.size(); ++i) {
            joint[i] = std::min(mn[i], md[i]);
            nontrivial |= joint[i] != 0;
        }
        if (nontrivial) {
            num_ = num_.divided_by_monomial(joint);
            den_ = den_.divided_by_monomial(joint);
        }
        // exact cancellation attempts
        if (!den_.is_monomial()) {
            if (auto q = LaurentPoly::try_divide(num_, den_)) {
                num_ = std::move(*q);
                den_ = LaurentPoly::constant(num_.arity(), 1);
            }
        } else {
            // monomial denominator: fold the coefficient, keep the monomial
        }
        // scale: den content 1, positive leading coefficient
        BigRational c = den_.content();
        if (den_.leading().second < 0) c = -c;
        if (c != 1) {
            num_ = num_.divided_by_const(c);
            den_ = den_.divided_by_const(c);
        }
    }

    LaurentPoly num_, den_;
};

} // namespace specnet
