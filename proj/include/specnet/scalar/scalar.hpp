#pragma once

#include "specnet/errors.hpp"
#include "specnet/scalar/context.hpp"
#include "specnet/scalar/rational_function.hpp"

#include <cmath>
#include <sstream>
#include <variant>

namespace specnet {

struct NumericConfig {
    double zero_threshold = 1e-12;
    double compare_tol = 1e-9;
};

inline NumericConfig& numeric_config() {
    static NumericConfig cfg;
    return cfg;
}

inline bool numeric_is_zero(Complex z) {
    return std::abs(z) <= numeric_config().zero_threshold;
}

inline void check_finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error("non-finite numeric value");
}

inline bool numeric_close(Complex a, Complex b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

// Exact field element: multivariate Laurent rational function over a shared
// generator context.
class ExactScalar {
  public:
    ExactScalar() = default;
    ExactScalar(ContextPtr ctx, RationalFunction value)
        : ctx_(std::move(ctx)), value_(std::move(value)) {}

    static ExactScalar constant(const ContextPtr& ctx, BigRational c) {
        return {ctx, RationalFunction::constant(ctx->arity(), std::move(c))};
    }
    static ExactScalar integer(const ContextPtr& ctx, long long n) {
        return constant(ctx, BigRational(n));
    }
    static ExactScalar generator(const ContextPtr& ctx, const std::string& name, int32_t power = 1) {
        return {ctx, RationalFunction::generator(ctx->arity(), ctx->index_of(name), power)};
    }

    const ContextPtr& context() const { return ctx_; }
    const RationalFunction& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        a.check(b);
        return {a.ctx_, a.value_ + b.value_};
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        a.check(b);
        return {a.ctx_, a.value_ - b.value_};
    }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        a.check(b);
        return {a.ctx_, a.value_ * b.value_};
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        a.check(b);
        return {a.ctx_, a.value_ / b.value_};
    }
    ExactScalar operator-() const { return {ctx_, -value_}; }
    ExactScalar inverse() const { return {ctx_, value_.inverse()}; }
    ExactScalar pow(int64_t e) const { return {ctx_, value_.pow(e)}; }

    // mathematical equality by cross-multiplication (GCD-free)
    bool equals(const ExactScalar& o) const {
        check(o);
        return value_.equals(o.value_);
    }
    bool operator==(const ExactScalar& o) const { return equals(o); }

    Complex evaluate(const GeneratorTable& table) const {
        const auto& names = ctx_->names();
        std::vector<Complex> vals(names.size(), Complex{0, 0});
        std::vector<bool> used(names.size(), false);
        auto mark = [&](const LaurentPoly& p) {
            for (const auto& t : p.terms())
                for (size_t i = 0; i < names.size(); ++i)
                    if (t.first[i] != 0) used[i] = true;
        };
        mark(value_.num());
        mark(value_.den());
        for (size_t i = 0; i < names.size(); ++i)
            if (used[i]) vals[i] = table.value(names[i]);
        const Complex dn = value_.den().evaluate(vals);
        if (numeric_is_zero(dn)) throw PoleAtEvaluationPoint();
        const Complex nm = value_.num().evaluate(vals);
        check_finite(nm);
        check_finite(dn);
        return nm / dn;
    }

    // term list of a Laurent polynomial: pairs (exponent vector, coefficient),
    // sorted descending in graded-lex
    std::vector<std::pair<Monomial, BigRational>> laurent_terms() const {
        if (!value_.den().is_monomial())
            throw NotLaurentPolynomial("denominator is not a unit monomial");
        const auto& dt = value_.den().leading();
        std::vector<std::pair<Monomial, BigRational>> out;
        for (const auto& t : value_.num().terms())
            out.emplace_back(mono_div(t.first, dt.first), t.second / dt.second);
        return out;
    }

    bool is_laurent_polynomial() const { return value_.den().is_monomial(); }

    std::string poly_string(const LaurentPoly& p) const {
        if (p.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : p.terms()) {
            BigRational c = t.second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            const bool has_mono = t.first != Monomial(p.arity(), 0);
            if (!has_mono || c != 1) os << to_string(c);
            if (c != 1 && has_mono) os << "*";
            bool first_var = true;
            for (size_t i = 0; i < p.arity(); ++i) {
                if (t.first[i] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << ctx_->names()[i];
                if (t.first[i] != 1) os << "^" << t.first[i];
            }
        }
        return os.str();
    }

    // canonical text form "(num)/(den)"
    std::string str() const {
        return "(" + poly_string(value_.num()) + ")/(" + poly_string(value_.den()) + ")";
    }

  private:
    void check(const ExactScalar& o) const {
        if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
            throw BackendMismatch("exact scalars over different generator contexts");
    }

    ContextPtr ctx_;
    RationalFunction value_;
};

// Dynamic scalar: numeric complex or exact rational function.
class Scalar {
  public:
    Scalar() : v_(Complex{0, 0}) {}
    Scalar(Complex z) : v_(z) {}                    // NOLINT implicit
    Scalar(ExactScalar e) : v_(std::move(e)) {}     // NOLINT implicit

    bool is_numeric() const { return std::holds_alternative<Complex>(v_); }
    bool is_exact() const { return !is_numeric(); }

    Complex numeric() const {
        if (!is_numeric()) throw BackendMismatch("expected numeric scalar");
        return std::get<Complex>(v_);
    }
    const ExactScalar& exact() const {
        if (!is_exact()) throw BackendMismatch("expected exact scalar");
        return std::get<ExactScalar>(v_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_numeric() != b.is_numeric()) throw BackendMismatch();
        if (a.is_numeric()) {
            Complex r = a.numeric() + b.numeric();
            check_finite(r);
            return r;
        }
        return a.exact() + b.exact();
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.is_numeric() != b.is_numeric()) throw BackendMismatch();
        if (a.is_numeric()) {
            Complex r = a.numeric() - b.numeric();
            check_finite(r);
            return r;
        }
        return a.exact() - b.exact();
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_numeric() != b.is_numeric()) throw BackendMismatch();
        if (a.is_numeric()) {
            Complex r = a.numeric() * b.numeric();
            check_finite(r);
            return r;
        }
        return a.exact() * b.exact();
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.is_numeric() != b.is_numeric()) throw BackendMismatch();
        if (a.is_numeric()) {
            if (numeric_is_zero(b.numeric())) throw DivisionByZero();
            Complex r = a.numeric() / b.numeric();
            check_finite(r);
            return r;
        }
        return a.exact() / b.exact();
    }
    Scalar operator-() const {
        if (is_numeric()) return -numeric();
        return -exact();
    }
    Scalar inverse() const {
        if (is_numeric()) {
            if (numeric_is_zero(numeric())) throw DivisionByZero();
            return Complex{1, 0} / numeric();
        }
        return exact().inverse();
    }
    Scalar pow(int64_t e) const {
        if (is_numeric()) {
            if (e == 0) return Complex{1, 0};
            if (numeric_is_zero(numeric()) && e < 0) throw DivisionByZero();
            return std::pow(numeric(), static_cast<double>(e));
        }
        return exact().pow(e);
    }

  private:
    std::variant<Complex, ExactScalar> v_;
};

// exact backend ignores tol; numeric uses |a-b| <= tol*max(1,|a|,|b|)
inline bool scalar_eq(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_numeric() != b.is_numeric()) throw BackendMismatch();
    if (a.is_numeric()) return numeric_close(a.numeric(), b.numeric(), tol);
    return a.exact().equals(b.exact());
}

inline bool scalar_eq(const Scalar& a, const Scalar& b) {
    return scalar_eq(a, b, numeric_config().compare_tol);
}

} // namespace specnet
