#pragma once

// Operators from a module into the algebra: the weak and full operator
// equations, the passage between such maps and antisymmetric r-tensors on
// the semidirect sum with the dual module, and the four-part admissibility
// package for operator pairs on a semidirect sum.

#include <string>
#include <utility>

#include "mlk/linalg.hpp"
#include "mlk/mocklie.hpp"
#include "mlk/nijenhuis.hpp"
#include "mlk/report.hpp"

namespace mlk {

// View an r-grid on the algebra as a map from the dual space into the
// algebra: the image of the j-th dual basis vector is the j-th row of r.
inline Matrix r_to_map(const Matrix& r) {
    if (r.rows() != r.cols()) throw DimensionError("r_to_map: grid must be square");
    return r.transpose();
}

// Weak operator equation for T: V → A over an algebra with operator N and a
// module (V, ρ) with operator α: the bracket of images is the image of the
// symmetrized action, and T intertwines α with N.
inline CheckReport check_weak_o_operator(const NijenhuisAlgebra& na, const Representation& rep,
                                         const Matrix& alpha, const Matrix& t) {
    detail::require_nijenhuis(na, "check_weak_o_operator");
    detail::require_rep(na.base, rep, "check_weak_o_operator");
    detail::require_square(alpha, rep.space_dim, "check_weak_o_operator", "alpha");
    if (t.rows() != na.base.dim || t.cols() != rep.space_dim)
        throw DimensionError("check_weak_o_operator: T must map the module space into the algebra");
    if (CheckReport rep_ok = check_representation(na.base, rep); !rep_ok.pass)
        throw HypothesisError("check_weak_o_operator", rep_ok);
    const int m = rep.space_dim;
    return run_composite(
        "weak-o-operator",
        {[&] {
             ReportBuilder rb("operator-equation");
             for (int b = 0; b < m; ++b)
                 for (int c = 0; c < m; ++c) {
                     const Vec tb = t.col(b), tc = t.col(c);
                     const Vec lhs = na.base.bracket_of(tb, tc);
                     Vec arg = rep.of(tb).col(c);
                     add_scaled(arg, 1, rep.of(tc).col(b));
                     rb.require({b, c}, lhs, t.apply(arg));
                 }
             return rb.finish();
         },
         [&] {
             ReportBuilder rb("intertwine");
             const Matrix lhs = na.op * t, rhs = t * alpha;
             for (int i = 0; i < lhs.rows(); ++i)
                 for (int j = 0; j < lhs.cols(); ++j) rb.require({i, j}, {lhs(i, j)}, {rhs(i, j)});
             return rb.finish();
         }});
}

// Full operator: the weak equations over a module whose operator actually
// makes it a Nijenhuis representation; that upgrade is a hypothesis.
inline CheckReport check_o_operator(const NijenhuisAlgebra& na, const Representation& rep,
                                    const Matrix& alpha, const Matrix& t) {
    detail::require_nijenhuis(na, "check_o_operator");
    detail::require_rep(na.base, rep, "check_o_operator");
    detail::require_square(alpha, rep.space_dim, "check_o_operator", "alpha");
    if (CheckReport rep_ok = check_nijenhuis_rep(na, {rep, alpha}); !rep_ok.pass)
        throw HypothesisError("check_o_operator", rep_ok);
    CheckReport r = check_weak_o_operator(na, rep, alpha, t);
    r.law = r.pass ? "o-operator" : "o-operator/" + r.law.substr(std::string("weak-o-operator/").size());
    return r;
}

struct OOperatorEmbedding {
    MockLieAlgebra dbl;  // semidirect sum of the algebra with the dual module
    Matrix r;            // antisymmetrized graph of T inside dbl ⊗ dbl
};

// Embed T: V → A as an antisymmetric tensor on the semidirect sum with the
// dual module: r = T̂ − τ(T̂) where T̂ couples algebra coordinates to dual
// module coordinates through the entries of T.
inline OOperatorEmbedding o_operator_to_r(const MockLieAlgebra& a, const Representation& rep,
                                          const Matrix& t) {
    detail::require_algebra(a, "o_operator_to_r");
    detail::require_rep(a, rep, "o_operator_to_r");
    if (t.rows() != a.dim || t.cols() != rep.space_dim)
        throw DimensionError("o_operator_to_r: T must map the module space into the algebra");
    const int n = a.dim, m = rep.space_dim;
    MockLieAlgebra dbl = semidirect_product(a, dual_rep(rep));
    Matrix emb(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b) emb(i, n + b) = t(i, b);
    Matrix r = emb - flip_tau(emb);
    return {std::move(dbl), std::move(r)};
}

// Admissibility package for operators (N on the algebra, α and β on the
// module, S back on the algebra) that makes the block-diagonal pairs on the
// semidirect sums behave: the module is a Nijenhuis representation, S is
// adjoint-admissible, β is admissible, and the mixed law couples β, α, S.
inline CheckReport check_semidirect_admissibility(const NijenhuisAlgebra& na, const Matrix& s,
                                                  const Representation& rep, const Matrix& alpha,
                                                  const Matrix& beta) {
    detail::require_nijenhuis(na, "check_semidirect_admissibility");
    detail::require_rep(na.base, rep, "check_semidirect_admissibility");
    detail::require_square(s, na.base.dim, "check_semidirect_admissibility", "S");
    detail::require_square(alpha, rep.space_dim, "check_semidirect_admissibility", "alpha");
    detail::require_square(beta, rep.space_dim, "check_semidirect_admissibility", "beta");
    const int n = na.base.dim, m = rep.space_dim;
    return run_composite(
        "semidirect-admissible",
        {[&] { return check_nijenhuis_rep(na, {rep, alpha}); },
         [&] { return check_adjoint_admissible(na, s); },
         [&] { return check_admissible(na, rep, beta); },
         [&] {
             ReportBuilder rb("mixed-admissible");
             const Matrix s2 = s * s;
             for (int j = 0; j < n; ++j) {
                 const Matrix& rho_j = rep.action[static_cast<std::size_t>(j)];
                 const Matrix rho_sj = rep.of(s.col(j));
                 const Matrix lhs = beta * rho_j * alpha + rep.of(s2.col(j));
                 const Matrix rhs = rho_sj * alpha + beta * rho_sj;
                 for (int b = 0; b < m; ++b) rb.require({j, b}, lhs.col(b), rhs.col(b));
             }
             return rb.finish();
         }});
}

}  // namespace mlk
