#pragma once

#include "specnet/errors.hpp"
#include "specnet/scalar/scalar.hpp"
#include "specnet/surface/lift.hpp"

#include <map>
#include <string>

namespace specnet {

// constants of the scalar field in use (exact scalars need a generator context)
template <class F>
struct FieldCtx {
    F zero;
    F one;
};

inline FieldCtx<Complex> numeric_field() {
    return {Complex{0, 0}, Complex{1, 0}};
}
inline FieldCtx<ExactScalar> exact_field(const ContextPtr& ctx) {
    return {ExactScalar::integer(ctx, 0), ExactScalar::integer(ctx, 1)};
}

template <class F>
struct Mat2 {
    F a, b, c, d;  // [[a, b], [c, d]]

    static Mat2 identity(const FieldCtx<F>& k) { return {k.one, k.zero, k.zero, k.one}; }
    static Mat2 diag(const FieldCtx<F>& k, const F& x) {
        return {x, k.zero, k.zero, k.one / x};
    }
    // [[0, x], [-1/x, 0]]
    static Mat2 antidiag(const FieldCtx<F>& k, const F& x) {
        return {k.zero, x, -(k.one / x), k.zero};
    }
    // sheet-swap at a branch cut
    static Mat2 cut_swap(const FieldCtx<F>& k, bool forward) {
        if (forward) return {k.zero, k.one, -k.one, k.zero};
        return {k.zero, -k.one, k.one, k.zero};
    }
    static Mat2 unipotent(const FieldCtx<F>& k, const std::string& label, const F& s) {
        if (label == "21") return {k.one, s, k.zero, k.one};
        if (label == "12") return {k.one, k.zero, s, k.one};
        throw BadInput("bad lane label " + label);
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    F det() const { return a * d - b * c; }
    F trace() const { return a + d; }

    // inverse by adjugate over the determinant
    Mat2 inverse() const {
        F dt = det();
        return {d / dt, -(b / dt), -(c / dt), a / dt};
    }

    Mat2 scaled(const F& s) const { return {a * s, b * s, c * s, d * s}; }
};

template <class F>
bool mat_eq(const Mat2<F>& x, const Mat2<F>& y, double tol);

inline bool mat_eq(const Mat2<Complex>& x, const Mat2<Complex>& y, double tol) {
    return numeric_close(x.a, y.a, tol) && numeric_close(x.b, y.b, tol) &&
           numeric_close(x.c, y.c, tol) && numeric_close(x.d, y.d, tol);
}
inline bool mat_eq(const Mat2<ExactScalar>& x, const Mat2<ExactScalar>& y, double) {
    return x.a.equals(y.a) && x.b.equals(y.b) && x.c.equals(y.c) && x.d.equals(y.d);
}

inline bool is_zero(const Complex& z) { return numeric_is_zero(z); }
inline bool is_zero(const ExactScalar& s) { return s.is_zero(); }

// Values of an abelian representation (one scalar per generator) plus, in the
// spliced case, one scalar per wall lane.
template <class F>
struct TransportData {
    std::map<std::string, F> d;  // generator id -> value on the sheet-1 lift
    std::map<std::string, F> s;  // lane id -> S-matrix parameter
};

// Parallel transport along a path: generator legs give diagonal (or, with cut
// parity, antidiagonal) matrices; junction crossings give cut swaps and, when
// spliced, the unipotent wall matrices.
template <class F>
Mat2<F> transport(const SurfaceChart& chart, const PathWord& path,
                  const TransportData<F>& data, bool spliced, const FieldCtx<F>& k) {
    Mat2<F> acc = Mat2<F>::identity(k);
    for (const auto& item : traverse(chart, path)) {
        if (const auto* leg = std::get_if<LegItem>(&item)) {
            auto it = data.d.find(leg->gen);
            if (it == data.d.end()) throw MissingParameter("no transport value for " + leg->gen);
            Mat2<F> D = Mat2<F>::diag(k, it->second);
            if (chart.generator(leg->gen).cut_parity & 1)
                D = D * Mat2<F>::cut_swap(k, true);
            if (leg->exp == -1) D = D.inverse();
            acc = acc * D;
        } else if (const auto* lane = std::get_if<LaneItem>(&item)) {
            if (!spliced) continue;
            auto it = data.s.find(lane->lane);
            if (it == data.s.end()) throw MissingParameter("no S value for lane " + lane->lane);
            Mat2<F> S = Mat2<F>::unipotent(k, lane->label, it->second);
            if (!lane->forward) S = S.inverse();
            acc = acc * S;
        } else {
            const auto& cut = std::get<CutItem>(item);
            acc = acc * Mat2<F>::cut_swap(k, cut.forward);
        }
    }
    return acc;
}

} // namespace specnet
