#pragma once

// Classical Yang-Baxter machinery over commutative-bracket algebras with
// cyclic Jacobi identity: the tensor equation on r, the dual equation on a
// cobracket, (dual) quasitriangularity, (co)symplectic forms, and the
// constructions that turn invertible solutions into Nijenhuis operators.

#include <stdexcept>

#include "mlk/linalg.hpp"
#include "mlk/mocklie.hpp"
#include "mlk/nijenhuis.hpp"
#include "mlk/report.hpp"

namespace mlk {

namespace detail {

inline void require_r(const MockLieAlgebra& a, const Matrix& r, const char* who) {
    require_algebra(a, who);
    require_square(r, a.dim, who, "r");
}

inline void require_w(const MockLieCoalgebra& c, const Matrix& w, const char* who) {
    require_coalgebra(c, who);
    require_square(w, c.dim, who, "form");
}

inline void require_antisymmetric(const Matrix& r, const char* who, const char* law) {
    ReportBuilder rb(law);
    const int n = static_cast<int>(r.rows());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rb.require({i, j}, {r(i, j)}, {-r(j, i)});
    CheckReport rep = rb.finish();
    if (!rep.pass) throw HypothesisError(who, rep);
}

// The obstruction tensor of r: sum of the three double-contraction terms
// whose vanishing is the tensor Yang-Baxter condition for the bracket.
inline Tensor3 ybe_tensor(const MockLieAlgebra& a, const Matrix& r) {
    const int n = a.dim;
    Tensor3 u(n, n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (r(p, q) == 0) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (r(k, l) == 0) continue;
                    const Q coeff = r(p, q) * r(k, l);
                    for (int m = 0; m < n; ++m) {
                        // [r1,r1']⊗r2⊗r2'
                        if (a.bracket(p, k, m) != 0) u(m, q, l) += coeff * a.bracket(p, k, m);
                        // r1⊗r1'⊗[r2,r2']
                        if (a.bracket(q, l, m) != 0) u(p, k, m) += coeff * a.bracket(q, l, m);
                        // -r1⊗[r1',r2]⊗r2'
                        if (a.bracket(k, q, m) != 0) u(p, m, l) -= coeff * a.bracket(k, q, m);
                    }
                }
        }
    return u;
}

}  // namespace detail

// Cobracket induced by an r-tensor: x ↦ [x, r¹]⊗r² − r¹⊗[x, r²].
inline MockLieCoalgebra delta_r(const MockLieAlgebra& a, const Matrix& r) {
    detail::require_r(a, r, "delta_r");
    const int n = a.dim;
    MockLieCoalgebra c{n, Tensor3(n, n, n)};
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < n; ++b)
            for (int m = 0; m < n; ++m) {
                if (r(m, b) != 0)
                    for (int k = 0; k < n; ++k)
                        if (a.bracket(i, m, k) != 0) c.cobracket(i, k, b) += a.bracket(i, m, k) * r(m, b);
                if (r(b, m) != 0)
                    for (int k = 0; k < n; ++k)
                        if (a.bracket(i, m, k) != 0) c.cobracket(i, b, k) -= r(b, m) * a.bracket(i, m, k);
            }
    return c;
}

// Tensor Yang-Baxter condition on r over a commutative-bracket algebra.
inline CheckReport check_cmlybe(const MockLieAlgebra& a, const Matrix& r) {
    detail::require_r(a, r, "check_cmlybe");
    const Tensor3 u = detail::ybe_tensor(a, r);
    ReportBuilder rb("cmlybe");
    const int n = a.dim;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int m = 0; m < n; ++m) rb.require_zero({p, q, m}, {u(p, q, m)});
    return rb.finish();
}

// Quasitriangularity of an antisymmetric r: the induced cobracket contracted
// back against r must reproduce the quadratic bracket terms on both legs.
inline CheckReport check_quasitriangular(const MockLieAlgebra& a, const Matrix& r) {
    detail::require_r(a, r, "check_quasitriangular");
    detail::require_antisymmetric(r, "check_quasitriangular", "antisymmetry");
    const int n = a.dim;
    const MockLieCoalgebra c = delta_r(a, r);

    // First leg: (Δ_r⊗id)(r) + Σ r1⊗r1'⊗[r2,r2'] = 0.
    // Second leg: (id⊗Δ_r)(r) − Σ [r1,r1']⊗r2⊗r2' = 0.
    Tensor3 first(n, n, n), second(n, n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (r(p, q) == 0) continue;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (c.cobracket(p, x, y) != 0) first(x, y, q) += r(p, q) * c.cobracket(p, x, y);
                    if (c.cobracket(q, x, y) != 0) second(p, x, y) += r(p, q) * c.cobracket(q, x, y);
                }
        }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (r(p, q) == 0) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (r(k, l) == 0) continue;
                    const Q coeff = r(p, q) * r(k, l);
                    for (int m = 0; m < n; ++m) {
                        if (a.bracket(q, l, m) != 0) first(p, k, m) += coeff * a.bracket(q, l, m);
                        if (a.bracket(p, k, m) != 0) second(m, q, l) -= coeff * a.bracket(p, k, m);
                    }
                }
        }

    ReportBuilder rb("quasitriangular");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) rb.require_zero({x, y, z}, {first(x, y, z)});
    CheckReport rep = rb.finish();
    if (rep.pass != second.is_zero())
        throw std::logic_error("check_quasitriangular: leg conditions disagree on a commutative-bracket algebra");
    return rep;
}

// Dual tensor Yang-Baxter condition on a bilinear form over a cocommutative
// cobracket: ω(x₍₁₎,y)ω(x₍₂₎,z) + ω(x,z₍₁₎)ω(y,z₍₂₎) − ω(x,y₍₁₎)ω(y₍₂₎,z) = 0.
inline CheckReport check_ccmlybe(const MockLieCoalgebra& c, const Matrix& w) {
    detail::require_w(c, w, "check_ccmlybe");
    const int n = c.dim;
    ReportBuilder rb("ccmlybe");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Q e = 0;
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        if (c.cobracket(i, x, y) != 0) e += c.cobracket(i, x, y) * w(x, j) * w(y, k);
                        if (c.cobracket(k, x, y) != 0) e += c.cobracket(k, x, y) * w(i, x) * w(j, y);
                        if (c.cobracket(j, x, y) != 0) e -= c.cobracket(j, x, y) * w(i, x) * w(y, k);
                    }
                rb.require_zero({i, j, k}, {e});
            }
    return rb.finish();
}

// Bracket induced by a bilinear form on a coalgebra:
// [x,y] = x₍₁₎ ω(x₍₂₎,y) − y₍₁₎ ω(x,y₍₂₎).
inline MockLieAlgebra bracket_from_omega(const MockLieCoalgebra& c, const Matrix& w) {
    detail::require_w(c, w, "bracket_from_omega");
    const int n = c.dim;
    MockLieAlgebra a{n, Tensor3(n, n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Q v = 0;
                for (int b = 0; b < n; ++b) {
                    if (c.cobracket(i, k, b) != 0) v += c.cobracket(i, k, b) * w(b, j);
                    if (c.cobracket(j, k, b) != 0) v -= c.cobracket(j, k, b) * w(i, b);
                }
                a.bracket(i, j, k) = v;
            }
    return a;
}

// Dual quasitriangularity of a skew form on a coalgebra: the induced bracket
// paired back through ω must reproduce the quadratic cobracket terms.
inline CheckReport check_dual_quasitriangular(const MockLieCoalgebra& c, const Matrix& w) {
    detail::require_w(c, w, "check_dual_quasitriangular");
    detail::require_antisymmetric(w, "check_dual_quasitriangular", "skew");
    const int n = c.dim;
    const MockLieAlgebra a = bracket_from_omega(c, w);

    ReportBuilder rb("dual-quasitriangular");
    bool second_ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // ω([x,y],z) + ω(x,z₍₁₎)ω(y,z₍₂₎) = 0
                Q e1 = 0;
                for (int m = 0; m < n; ++m)
                    if (a.bracket(i, j, m) != 0) e1 += a.bracket(i, j, m) * w(m, k);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (c.cobracket(k, x, y) != 0) e1 += c.cobracket(k, x, y) * w(i, x) * w(j, y);
                rb.require_zero({i, j, k}, {e1});

                // ω(x,[y,z]) − ω(x₍₁₎,y)ω(x₍₂₎,z) = 0
                Q e2 = 0;
                for (int m = 0; m < n; ++m)
                    if (a.bracket(j, k, m) != 0) e2 += a.bracket(j, k, m) * w(i, m);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (c.cobracket(i, x, y) != 0) e2 -= c.cobracket(i, x, y) * w(x, j) * w(y, k);
                if (e2 != 0) second_ok = false;
            }
    CheckReport rep = rb.finish();
    if (rep.pass != second_ok)
        throw std::logic_error("check_dual_quasitriangular: pairing conditions disagree on a cocommutative coalgebra");
    return rep;
}

// Symplectic form: skew and cyclically compatible with the bracket.
inline CheckReport check_symplectic(const MockLieAlgebra& a, const Matrix& w) {
    detail::require_algebra(a, "check_symplectic");
    detail::require_square(w, a.dim, "check_symplectic", "form");
    const int n = a.dim;
    ReportBuilder rb("symplectic");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rb.require({i, j}, {w(i, j)}, {-w(j, i)});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Q e = 0;
                for (int m = 0; m < n; ++m) {
                    if (a.bracket(i, j, m) != 0) e += a.bracket(i, j, m) * w(m, k);
                    if (a.bracket(j, k, m) != 0) e += a.bracket(j, k, m) * w(m, i);
                    if (a.bracket(k, i, m) != 0) e += a.bracket(k, i, m) * w(m, j);
                }
                rb.require_zero({i, j, k}, {e});
            }
    return rb.finish();
}

// Cosymplectic tensor: antisymmetric r whose cyclic coproduct expansion
// (Δ⊗id-style rotations of (Δ r¹)⊗r²) sums to zero.
inline CheckReport check_cosymplectic(const MockLieCoalgebra& c, const Matrix& r) {
    detail::require_w(c, r, "check_cosymplectic");
    detail::require_antisymmetric(r, "check_cosymplectic", "antisymmetry");
    const int n = c.dim;
    Tensor3 t(n, n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (r(p, q) == 0) continue;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (c.cobracket(p, x, y) == 0) continue;
                    const Q coeff = r(p, q) * c.cobracket(p, x, y);
                    t(x, y, q) += coeff;
                    t(q, x, y) += coeff;
                    t(y, q, x) += coeff;
                }
        }
    ReportBuilder rb("cosymplectic");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) rb.require_zero({x, y, z}, {t(x, y, z)});
    return rb.finish();
}

// Nijenhuis operator from a symplectic form and a quasitriangular r:
// N(x) = ω(x, r¹) r², i.e. N = (G·r)ᵀ on coordinates.
inline Matrix nijenhuis_from_symplectic(const MockLieAlgebra& a, const Matrix& w, const Matrix& r) {
    detail::require_r(a, r, "nijenhuis_from_symplectic");
    detail::require_square(w, a.dim, "nijenhuis_from_symplectic", "form");
    {
        CheckReport rep = check_symplectic(a, w);
        if (!rep.pass) throw HypothesisError("nijenhuis_from_symplectic", rep);
    }
    {
        CheckReport rep = check_quasitriangular(a, r);
        if (!rep.pass) throw HypothesisError("nijenhuis_from_symplectic", rep);
    }
    {
        CheckReport rep = check_dual_quasitriangular(delta_r(a, r), w);
        if (!rep.pass) throw HypothesisError("nijenhuis_from_symplectic", rep);
    }
    const int n = a.dim;
    Matrix nop(n, n);
    for (int q = 0; q < n; ++q)
        for (int i = 0; i < n; ++i) {
            Q v = 0;
            for (int p = 0; p < n; ++p) v += w(i, p) * r(p, q);
            nop(q, i) = v;
        }
    if (!check_nijenhuis(a, nop).pass)
        throw std::logic_error("nijenhuis_from_symplectic: construction failed to satisfy the deformation identity");
    return nop;
}

// Conijenhuis operator from a cosymplectic tensor and a dual-quasitriangular
// form: S(x) = r¹ ω(r², x), i.e. S = r·G on coordinates.
inline Matrix conijenhuis_from_cosymplectic(const MockLieCoalgebra& c, const Matrix& w, const Matrix& r) {
    detail::require_w(c, r, "conijenhuis_from_cosymplectic");
    detail::require_square(w, c.dim, "conijenhuis_from_cosymplectic", "form");
    {
        CheckReport rep = check_cosymplectic(c, r);
        if (!rep.pass) throw HypothesisError("conijenhuis_from_cosymplectic", rep);
    }
    {
        CheckReport rep = check_dual_quasitriangular(c, w);
        if (!rep.pass) throw HypothesisError("conijenhuis_from_cosymplectic", rep);
    }
    {
        CheckReport rep = check_quasitriangular(bracket_from_omega(c, w), r);
        if (!rep.pass) throw HypothesisError("conijenhuis_from_cosymplectic", rep);
    }
    const int n = c.dim;
    Matrix s(n, n);
    for (int p = 0; p < n; ++p)
        for (int i = 0; i < n; ++i) {
            Q v = 0;
            for (int q = 0; q < n; ++q) v += r(p, q) * w(q, i);
            s(p, i) = v;
        }
    if (!check_nijenhuis_coalgebra(c, s).pass)
        throw std::logic_error("conijenhuis_from_cosymplectic: construction failed to satisfy the coalgebra deformation identity");
    return s;
}

}  // namespace mlk
