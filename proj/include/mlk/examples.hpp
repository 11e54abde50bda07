#pragma once

// Built-in worked examples: fixed pipelines of law checks and constructions
// over a four-dimensional two-parameter algebra family. Each pipeline stage
// yields an ordinary CheckReport tagged with the parameter point it ran at,
// so a caller can certify a single point or sweep the whole family.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mlk/bialgebra.hpp"
#include "mlk/errors.hpp"
#include "mlk/linalg.hpp"
#include "mlk/mocklie.hpp"
#include "mlk/nijenhuis.hpp"
#include "mlk/operators.hpp"
#include "mlk/rational.hpp"
#include "mlk/report.hpp"
#include "mlk/yangbaxter.hpp"

namespace mlk {

// One pipeline stage outcome together with the parameter values it used.
struct StageReport {
    CheckReport report;
    std::map<std::string, Q> params;
};

namespace builtin {

// Four-dimensional algebra with [e1,e1] = e2 and [e1,e3] = [e3,e1] = e4.
inline MockLieAlgebra base_algebra() {
    Tensor3 c(4, 4, 4);
    c(0, 0, 1) = 1;
    c(0, 2, 3) = 1;
    c(2, 0, 3) = 1;
    return {4, c};
}

// Antisymmetric two-tensor r = e2 (x) e3 - e3 (x) e2.
inline Matrix standard_r() {
    Matrix r(4, 4);
    r(1, 2) = 1;
    r(2, 1) = -1;
    return r;
}

// Cobracket D(e1) = -(e4 (x) e2 + e2 (x) e4), the one standard_r induces.
inline MockLieCoalgebra standard_cobracket() {
    Tensor3 d(4, 4, 4);
    d(0, 3, 1) = -1;
    d(0, 1, 3) = -1;
    return {4, d};
}

// Two-parameter family of invariant skew forms on base_algebra.
inline Matrix omega_family(const Q& lambda, const Q& gamma) {
    Matrix w(4, 4);
    w(0, 2) = lambda;
    w(2, 0) = -lambda;
    w(0, 3) = gamma;
    w(3, 0) = -gamma;
    w(1, 2) = 2 * gamma;
    w(2, 1) = -2 * gamma;
    return w;
}

// The gamma = 0 slice of the form family.
inline Matrix omega_reduced(const Q& lambda) { return omega_family(lambda, 0); }

// Operator the reduced form pairs against standard_r: N(e1) = -lambda e2.
inline Matrix pairing_operator(const Q& lambda) {
    Matrix n(4, 4);
    n(1, 0) = -lambda;
    return n;
}

// Torsion-free unipotent operator: identity plus e2 -> e3.
inline Matrix shift_operator() {
    Matrix n = Matrix::identity(4);
    n(2, 1) = 1;
    return n;
}

// Two-parameter family of cobracket operators adapted to shift_operator.
inline Matrix cooperator(const Q& lambda, const Q& gamma) {
    Matrix s(4, 4);
    s(0, 0) = 1;
    s(2, 0) = lambda;
    s(3, 0) = gamma;
    s(1, 1) = 1;
    s(2, 1) = -1;
    s(2, 2) = 1;
    s(3, 3) = 1;
    return s;
}

// Certification sweep for the two parameters.
inline const std::vector<Q>& lambda_grid() {
    static const std::vector<Q> grid = {Q(0), Q(1), Q(-3)};
    return grid;
}

inline const std::vector<Q>& gamma_grid() {
    static const std::vector<Q> grid = {Q(0), Q(2), Q(5)};
    return grid;
}

}  // namespace builtin

namespace detail {

// Entry-by-entry comparison reports for derived structures, shaped like law
// reports so pipelines stay homogeneous.
inline CheckReport table_match(const std::string& law, const Tensor3& got, const Tensor3& want) {
    ReportBuilder rb(law);
    for (int i = 0; i < got.dim1(); ++i)
        for (int j = 0; j < got.dim2(); ++j)
            for (int k = 0; k < got.dim3(); ++k)
                if (got(i, j, k) != want(i, j, k))
                    rb.require_raw({i + 1, j + 1, k + 1}, Vec{got(i, j, k)}, Vec{want(i, j, k)});
    return rb.finish();
}

inline CheckReport matrix_match(const std::string& law, const Matrix& got, const Matrix& want) {
    ReportBuilder rb(law);
    for (int i = 0; i < got.rows(); ++i)
        for (int j = 0; j < got.cols(); ++j)
            if (got(i, j) != want(i, j))
                rb.require_raw({i + 1, j + 1}, Vec{got(i, j)}, Vec{want(i, j)});
    return rb.finish();
}

}  // namespace detail

inline const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = {"ex-2-20", "ex-4-12", "ex-4-21"};
    return names;
}

// Run one named example pipeline at a parameter point. Every stage is tagged
// with the point; the pipeline passes iff every stage report passes.
inline std::vector<StageReport> run_example(const std::string& name, const Q& lambda = 1,
                                            const Q& gamma = 0) {
    const std::map<std::string, Q> point{{"lambda", lambda}, {"gamma", gamma}};
    std::vector<StageReport> out;
    const auto push = [&](CheckReport r) { out.push_back({std::move(r), point}); };
    const MockLieAlgebra a = builtin::base_algebra();
    if (name == "ex-2-20") {
        const Matrix r = builtin::standard_r();
        push(check_mock_lie(a));
        push(check_cmlybe(a, r));
        push(check_quasitriangular(a, r));
        push(detail::table_match("delta-r", delta_r(a, r).cobracket,
                                 builtin::standard_cobracket().cobracket));
        push(check_symplectic(a, builtin::omega_family(lambda, gamma)));
        push(check_dual_quasitriangular(delta_r(a, r), builtin::omega_reduced(lambda)));
        push(detail::matrix_match(
            "n-from-symplectic",
            nijenhuis_from_symplectic(a, builtin::omega_reduced(lambda), r),
            builtin::pairing_operator(lambda)));
        push(check_nijenhuis(a, builtin::pairing_operator(lambda)));
        return out;
    }
    if (name == "ex-4-12") {
        const MockLieCoalgebra c = builtin::standard_cobracket();
        const Matrix nop = builtin::shift_operator();
        const Matrix s = builtin::cooperator(lambda, gamma);
        push(check_mock_lie(a));
        push(check_mock_lie_coalgebra(c));
        push(check_bialgebra({a, c}));
        push(check_nijenhuis(a, nop));
        push(check_nijenhuis_coalgebra(c, s));
        push(check_adjoint_admissible({a, nop}, s));
        push(check_nijenhuis_bialgebra({{a, c}, nop, s}));
        return out;
    }
    if (name == "ex-4-21") {
        const Matrix r = builtin::standard_r();
        const Matrix nop = builtin::shift_operator();
        const Matrix s = builtin::cooperator(lambda, gamma);
        push(check_adjoint_admissible({a, nop}, s));
        push(check_s_admissible_mlybe(a, nop, s, r));
        push(check_coboundary_compatible(a, r));
        const MockLieCoalgebra derived = delta_r(a, r);
        push(detail::table_match("delta-r", derived.cobracket,
                                 builtin::standard_cobracket().cobracket));
        push(check_nijenhuis_bialgebra({{a, derived}, nop, s}));
        return out;
    }
    throw ParseError("unknown example '" + name + "'");
}

}  // namespace mlk
