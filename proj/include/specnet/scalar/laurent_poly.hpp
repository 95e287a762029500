#pragma once

#include "specnet/errors.hpp"
#include "specnet/scalar/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace specnet {

// Exponent vector of a (Laurent) monomial in a fixed set of generators.
using Monomial = std::vector<int32_t>;

inline int64_t total_degree(const Monomial& m) {
    int64_t d = 0;
    for (int32_t e : m) d += e;
    return d;
}

// Graded lexicographic order over the declared generator order.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    const int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline bool mono_divides(const Monomial& b, const Monomial& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

// Sparse multivariate Laurent polynomial with rational coefficients.
// Terms are kept sorted descending in graded-lex order, no zero coefficients.
class LaurentPoly {
  public:
    using Term = std::pair<Monomial, BigRational>;

    LaurentPoly() = default;
    explicit LaurentPoly(size_t arity) : arity_(arity) {}

    static LaurentPoly constant(size_t arity, BigRational c) {
        LaurentPoly p(arity);
        if (c != 0) p.terms_.emplace_back(Monomial(arity, 0), std::move(c));
        return p;
    }

    static LaurentPoly generator(size_t arity, size_t index, int32_t power = 1) {
        LaurentPoly p(arity);
        Monomial m(arity, 0);
        m[index] = power;
        p.terms_.emplace_back(std::move(m), BigRational(1));
        return p;
    }

    static LaurentPoly monomial_term(Monomial m, BigRational c) {
        LaurentPoly p(m.size());
        if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_[0].first) == 0 &&
                terms_[0].first == Monomial(arity_, 0));
    }

    bool is_monomial() const { return terms_.size() == 1; }

    // leading term in graded-lex (largest)
    const Term& leading() const { return terms_.front(); }

    bool operator==(const LaurentPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.arity_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            if (a.terms_[i].first == b.terms_[j].first) {
                BigRational c = a.terms_[i].second + b.terms_[j].second;
                if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i; ++j;
            } else if (grlex_less(b.terms_[j].first, a.terms_[i].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else {
                r.terms_.push_back(b.terms_[j++]);
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + (-b);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.arity_);
        if (a.is_zero() || b.is_zero()) return r;
        if (b.is_monomial()) return mul_term(a, b.terms_[0]);
        if (a.is_monomial()) return mul_term(b, a.terms_[0]);
        for (const auto& tb : b.terms_) r = r + mul_term(a, tb);
        return r;
    }

    static LaurentPoly mul_term(const LaurentPoly& a, const Term& t) {
        LaurentPoly r(a.arity_);
        r.terms_.reserve(a.terms_.size());
        for (const auto& ta : a.terms_)
            r.terms_.emplace_back(mono_mul(ta.first, t.first), ta.second * t.second);
        return r;
    }

    // Exact polynomial division (ordinary monomial divisibility); nullopt if
    // b does not divide a. Requires min exponents >= 0 in both.
    static std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        LaurentPoly q(a.arity_), r(a);
        while (!r.is_zero()) {
            const Term& lr = r.leading();
            const Term& lb = b.leading();
            if (!mono_divides(lb.first, lr.first)) return std::nullopt;
            Term t{mono_div(lr.first, lb.first), lr.second / lb.second};
            q.terms_.push_back(t);
            r = r - mul_term(b, t);
        }
        std::sort(q.terms_.begin(), q.terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_less(y.first, x.first); });
        return q;
    }

    // per-variable minimum exponent over all terms (zero poly -> zeros)
    Monomial min_exponents() const {
        Monomial m(arity_, 0);
        if (terms_.empty()) return m;
        m = terms_[0].first;
        for (const auto& t : terms_)
            for (size_t i = 0; i < arity_; ++i) m[i] = std::min(m[i], t.first[i]);
        return m;
    }

    // gcd of |coefficients| as a positive rational
    BigRational content() const {
        BigInt gnum = 0, glcm = 1;
        using boost::multiprecision::gcd;
        using boost::multiprecision::lcm;
        for (const auto& t : terms_) {
            gnum = gcd(gnum, BigInt(boost::multiprecision::abs(boost::multiprecision::numerator(t.second))));
            glcm = lcm(glcm, BigInt(boost::multiprecision::denominator(t.second)));
        }
        if (gnum == 0) return BigRational(1);
        return BigRational(gnum, glcm);
    }

    LaurentPoly divided_by_monomial(const Monomial& m) const {
        LaurentPoly r(*this);
        for (auto& t : r.terms_) t.first = mono_div(t.first, m);
        return r;
    }

    LaurentPoly divided_by_const(const BigRational& c) const {
        LaurentPoly r(*this);
        for (auto& t : r.terms_) t.second /= c;
        return r;
    }

    Complex evaluate(const std::vector<Complex>& values) const {
        Complex acc{0.0, 0.0};
        for (const auto& t : terms_) {
            Complex term{boost::multiprecision::numerator(t.second).convert_to<double>() /
                             boost::multiprecision::denominator(t.second).convert_to<double>(),
                         0.0};
            for (size_t i = 0; i < arity_; ++i) {
                const int32_t e = t.first[i];
                if (e == 0) continue;
                term *= std::pow(values[i], e);
            }
            acc += term;
        }
        return acc;
    }

    void sort_and_prune() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_less(y.first, x.first); });
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return t.second == 0; }),
                     terms_.end());
    }

    std::vector<Term>& mutable_terms() { return terms_; }

  private:
    size_t arity_ = 0;
    std::vector<Term> terms_;
};

} // namespace specnet
