#pragma once

// Formal deformations truncated at a finite order, their order-one cochains
// and coboundaries, and abelian extensions with a compatible operator:
// induced module data, the cocycle of a section, and reconstruction of a
// total structure from cocycle data.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlk/linalg.hpp"
#include "mlk/mocklie.hpp"
#include "mlk/nijenhuis.hpp"
#include "mlk/report.hpp"

namespace mlk {

// Coefficients of a deformation truncated at order mus.size()-1; slot 0
// holds the undeformed structure.
struct TruncatedDeformation {
    std::vector<Tensor3> mus;
    std::vector<Matrix> ops;
};

// Order-one deformation direction: a symmetric bilinear coefficient and an
// operator coefficient.
struct DeformationCochain {
    Tensor3 mu1;
    Matrix n1;
};

struct ExtensionCocycle {
    Tensor3 psi;  // n x n x m fiber-valued bilinear coefficient
    Matrix chi;   // m x n fiber-valued operator coefficient
};

// A total structure fibered over a base: the last v_dim coordinates span an
// abelian ideal preserved by the operator, and section splits the quotient.
struct ExtensionData {
    NijenhuisAlgebra total;
    int v_dim = 0;
    Matrix nv;       // restriction of the operator to the fiber
    Matrix section;  // (n+m) x n right inverse of the projection
};

namespace detail {

inline void require_deformation(const TruncatedDeformation& d, const std::string& who) {
    if (d.mus.empty() || d.mus.size() != d.ops.size())
        throw DimensionError(who + ": need equally many bracket and operator coefficients, at least one");
    const int n = d.mus.front().dim1();
    for (const Tensor3& t : d.mus)
        if (t.dim1() != n || t.dim2() != n || t.dim3() != n)
            throw DimensionError(who + ": bracket coefficient dimensions differ");
    for (const Matrix& m : d.ops) require_square(m, n, who, "operator coefficient");
}

// Cyclic Jacobi convolution at the given total order, evaluated on basis
// triple (p, q, s).
inline Vec jacobi_convolution(const TruncatedDeformation& d, int order, int p, int q, int s) {
    const int n = d.mus.front().dim1();
    Vec res(static_cast<std::size_t>(n));
    for (int a = 0; a <= order; ++a) {
        const int b = order - a;
        if (a >= static_cast<int>(d.mus.size()) || b >= static_cast<int>(d.mus.size())) continue;
        const Tensor3& mua = d.mus[static_cast<std::size_t>(a)];
        const Tensor3& mub = d.mus[static_cast<std::size_t>(b)];
        for (int m = 0; m < n; ++m) {
            const Q w1 = mub(q, s, m), w2 = mub(p, q, m), w3 = mub(s, p, m);
            if (w1 == 0 && w2 == 0 && w3 == 0) continue;
            for (int l = 0; l < n; ++l) {
                Q acc = 0;
                if (w1 != 0) acc += w1 * mua(p, m, l);
                if (w2 != 0) acc += w2 * mua(s, m, l);
                if (w3 != 0) acc += w3 * mua(q, m, l);
                res[static_cast<std::size_t>(l)] += acc;
            }
        }
    }
    return res;
}

// Both sides of the operator deformation convolution at the given total
// order, evaluated on basis pair (p, q).
inline std::pair<Vec, Vec> nijenhuis_convolution(const TruncatedDeformation& d, int order, int p, int q) {
    const int n = d.mus.front().dim1();
    const int top = static_cast<int>(d.mus.size()) - 1;
    Vec lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            const int k = order - i - j;
            if (i > top || j > top || k > top) continue;
            const Tensor3& muj = d.mus[static_cast<std::size_t>(j)];
            const Matrix& ni = d.ops[static_cast<std::size_t>(i)];
            const Matrix& nk = d.ops[static_cast<std::size_t>(k)];
            // This term of the convolution belongs to the left side when read
            // as "deformed brackets of operator images"; the mu index is i.
            const Tensor3& mui = d.mus[static_cast<std::size_t>(i)];
            const Matrix& nj = d.ops[static_cast<std::size_t>(j)];
            for (int x = 0; x < n; ++x) {
                if (nj(x, p) == 0) continue;
                for (int y = 0; y < n; ++y) {
                    if (nk(y, q) == 0) continue;
                    const Q coeff = nj(x, p) * nk(y, q);
                    for (int l = 0; l < n; ++l)
                        if (mui(x, y, l) != 0) lhs[static_cast<std::size_t>(l)] += coeff * mui(x, y, l);
                }
            }
            // Right side: operator applied to mixed brackets, minus the
            // double-operator correction.
            Vec inner(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) {
                if (nk(x, p) != 0)
                    for (int l = 0; l < n; ++l)
                        if (muj(x, q, l) != 0) inner[static_cast<std::size_t>(l)] += nk(x, p) * muj(x, q, l);
                if (nk(x, q) != 0)
                    for (int l = 0; l < n; ++l)
                        if (muj(p, x, l) != 0) inner[static_cast<std::size_t>(l)] += nk(x, q) * muj(p, x, l);
            }
            add_scaled(rhs, 1, ni.apply(inner));
            Vec core(static_cast<std::size_t>(n));
            for (int l = 0; l < n; ++l) core[static_cast<std::size_t>(l)] = muj(p, q, l);
            add_scaled(rhs, -1, ni.apply(nk.apply(core)));
        }
    return {std::move(lhs), std::move(rhs)};
}

inline void require_cochain(const NijenhuisAlgebra& base, const DeformationCochain& c,
                            const std::string& who) {
    require_nijenhuis(base, who);
    if (c.mu1.dim1() != base.base.dim || c.mu1.dim2() != base.base.dim || c.mu1.dim3() != base.base.dim)
        throw DimensionError(who + ": bilinear coefficient has wrong dimensions");
    require_square(c.n1, base.base.dim, who, "operator coefficient");
}

inline void validate_extension(const ExtensionData& e, const std::string& who) {
    require_algebra(e.total.base, who);
    require_square(e.total.op, e.total.base.dim, who, "operator");
    const int t = e.total.base.dim, m = e.v_dim, n = t - m;
    if (m < 0 || n < 0) throw DimensionError(who + ": fiber dimension does not fit the total space");
    if (e.section.rows() != t || e.section.cols() != n)
        throw DimensionError(who + ": section must map the base into the total space");
    require_square(e.nv, m, who, "fiber operator");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (e.section(i, j) != Q(i == j ? 1 : 0))
                throw Error(who + ": invariant violation: section is not a right inverse of the projection");
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            for (int k = 0; k < t; ++k)
                if (e.total.base.bracket(n + a, n + b, k) != 0)
                    throw Error(who + ": invariant violation: fiber is not abelian");
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (e.total.base.bracket(i, n + a, k) != 0 || e.total.base.bracket(n + a, i, k) != 0)
                    throw Error(who + ": invariant violation: fiber is not an ideal");
        for (int i = 0; i < n; ++i)
            if (e.total.op(i, n + a) != 0)
                throw Error(who + ": invariant violation: operator does not preserve the fiber");
        for (int b = 0; b < m; ++b)
            if (e.total.op(n + b, n + a) != e.nv(b, a))
                throw Error(who + ": invariant violation: operator restriction differs from the fiber operator");
    }
}

}  // namespace detail

// All bracket and operator convolution identities up to the truncation
// order; order 0 is the undeformed structure's own laws.
inline CheckReport check_order_n_deformation(const TruncatedDeformation& d) {
    detail::require_deformation(d, "check_order_n_deformation");
    const int n = d.mus.front().dim1();
    const int top = static_cast<int>(d.mus.size()) - 1;
    ReportBuilder rb("deformation");
    for (int order = 0; order <= top; ++order) {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                for (int s = 0; s < n; ++s) {
                    Vec res = detail::jacobi_convolution(d, order, p, q, s);
                    rb.require_raw({order, p + 1, q + 1, s + 1}, std::move(res),
                                   zero_vec(n));
                }
                auto [lhs, rhs] = detail::nijenhuis_convolution(d, order, p, q);
                rb.require_raw({order, p + 1, q + 1}, std::move(lhs), std::move(rhs));
            }
    }
    return rb.finish();
}

// Order-one cocycle conditions of a direction against a fixed base
// structure: the mixed Jacobi convolution and the mixed operator
// convolution, each with the base in all other slots.
inline CheckReport check_2cocycle(const NijenhuisAlgebra& base, const DeformationCochain& c) {
    detail::require_cochain(base, c, "check_2cocycle");
    const int n = base.base.dim;
    const TruncatedDeformation d{{base.base.bracket, c.mu1}, {base.op, c.n1}};
    return run_composite("2-cocycle",
                         {[&] {
                              ReportBuilder rb("cocycle-jacobi");
                              for (int p = 0; p < n; ++p)
                                  for (int q = 0; q < n; ++q)
                                      for (int s = 0; s < n; ++s)
                                          rb.require_zero({p, q, s},
                                                          detail::jacobi_convolution(d, 1, p, q, s));
                              return rb.finish();
                          },
                          [&] {
                              ReportBuilder rb("cocycle-nijenhuis");
                              for (int p = 0; p < n; ++p)
                                  for (int q = 0; q < n; ++q) {
                                      auto [lhs, rhs] = detail::nijenhuis_convolution(d, 1, p, q);
                                      rb.require({p, q}, std::move(lhs), std::move(rhs));
                                  }
                              return rb.finish();
                          }});
}

// The trivial direction generated by a linear map: the bracket part is the
// symmetrized action defect of psi1, the operator part its commutator with
// the base operator.
inline DeformationCochain cochain_coboundary(const NijenhuisAlgebra& base, const Matrix& psi1) {
    detail::require_nijenhuis(base, "cochain_coboundary");
    detail::require_square(psi1, base.base.dim, "cochain_coboundary", "psi1");
    const int n = base.base.dim;
    const Tensor3& c = base.base.bracket;
    DeformationCochain out{Tensor3(n, n, n), base.op * psi1 - psi1 * base.op};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Q v = 0;
                for (int m = 0; m < n; ++m) {
                    v += psi1(m, j) * c(i, m, k);
                    v += psi1(m, i) * c(m, j, k);
                    v -= c(i, j, m) * psi1(k, m);
                }
                out.mu1(i, j, k) = v;
            }
    return out;
}

// Decide whether two order-one directions differ by a coboundary; returns a
// generating map when they do. Both directions must be 2-cocycles.
inline std::optional<Matrix> deformations_equivalent_order1(const NijenhuisAlgebra& base,
                                                            const DeformationCochain& c1,
                                                            const DeformationCochain& c2) {
    detail::require_cochain(base, c1, "deformations_equivalent_order1");
    detail::require_cochain(base, c2, "deformations_equivalent_order1");
    if (CheckReport rep = check_2cocycle(base, c1); !rep.pass)
        throw HypothesisError("deformations_equivalent_order1", rep);
    if (CheckReport rep = check_2cocycle(base, c2); !rep.pass)
        throw HypothesisError("deformations_equivalent_order1", rep);
    const int n = base.base.dim;
    const Tensor3& c = base.base.bracket;
    const int vars = n * n;
    Matrix sys(n * n * n + n * n, vars);
    Vec target(static_cast<std::size_t>(n * n * n + n * n));
    auto var = [n](int a, int b) { return a * n + b; };
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++row) {
                for (int m = 0; m < n; ++m) {
                    sys(row, var(m, j)) += c(i, m, k);
                    sys(row, var(m, i)) += c(m, j, k);
                    sys(row, var(k, m)) -= c(i, j, m);
                }
                target[static_cast<std::size_t>(row)] = c1.mu1(i, j, k) - c2.mu1(i, j, k);
            }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q, ++row) {
            for (int m = 0; m < n; ++m) {
                sys(row, var(m, q)) += base.op(p, m);
                sys(row, var(p, m)) -= base.op(m, q);
            }
            target[static_cast<std::size_t>(row)] = c1.n1(p, q) - c2.n1(p, q);
        }
    LinearSolution sol = solve_linear(sys, target);
    if (!sol.x) return std::nullopt;
    Matrix psi(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) psi(a, b) = (*sol.x)[static_cast<std::size_t>(var(a, b))];
    return psi;
}

// Base structure carried by an extension: project the bracket and operator
// of sectioned basis vectors back to the base coordinates.
inline NijenhuisAlgebra extension_base(const ExtensionData& e) {
    detail::validate_extension(e, "extension_base");
    const int n = e.total.base.dim - e.v_dim;
    NijenhuisAlgebra base{{n, Tensor3(n, n, n)}, Matrix(n, n)};
    for (int i = 0; i < n; ++i) {
        const Vec ni = e.total.op.apply(e.section.col(i));
        for (int k = 0; k < n; ++k) base.op(k, i) = ni[static_cast<std::size_t>(k)];
        for (int j = 0; j < n; ++j) {
            const Vec w = e.total.base.bracket_of(e.section.col(i), e.section.col(j));
            for (int k = 0; k < n; ++k) base.base.bracket(i, j, k) = w[static_cast<std::size_t>(k)];
        }
    }
    return base;
}

// The fiber as a module over the base: each base basis vector acts on fiber
// coordinates through the total bracket; the fiber operator comes along.
inline NijenhuisRepresentation extension_induced_rep(const ExtensionData& e) {
    detail::validate_extension(e, "extension_induced_rep");
    const int t = e.total.base.dim, m = e.v_dim, n = t - m;
    Representation rep{n, m, {}};
    rep.action.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Matrix act(m, m);
        for (int a = 0; a < m; ++a) {
            const Vec w = e.total.base.bracket_of(e.section.col(i), unit_vec(t, n + a));
            for (int k = 0; k < n; ++k)
                if (w[static_cast<std::size_t>(k)] != 0)
                    throw Error("extension_induced_rep: invariant violation: action escapes the fiber");
            for (int b = 0; b < m; ++b) act(b, a) = w[static_cast<std::size_t>(n + b)];
        }
        rep.action.push_back(std::move(act));
    }
    return {std::move(rep), e.nv};
}

// Cocycle of a section: the fiber components of the bracket defect and the
// operator defect of the section.
inline ExtensionCocycle extension_cocycle(const ExtensionData& e) {
    detail::validate_extension(e, "extension_cocycle");
    const int t = e.total.base.dim, m = e.v_dim, n = t - m;
    const NijenhuisAlgebra base = extension_base(e);
    ExtensionCocycle out{Tensor3(n, n, m), Matrix(m, n)};
    for (int i = 0; i < n; ++i) {
        Vec chi = e.total.op.apply(e.section.col(i));
        add_scaled(chi, -1, e.section.apply(base.op.col(i)));
        for (int k = 0; k < n; ++k)
            if (chi[static_cast<std::size_t>(k)] != 0)
                throw Error("extension_cocycle: invariant violation: operator defect escapes the fiber");
        for (int a = 0; a < m; ++a) out.chi(a, i) = chi[static_cast<std::size_t>(n + a)];
        for (int j = 0; j < n; ++j) {
            Vec w = e.total.base.bracket_of(e.section.col(i), e.section.col(j));
            add_scaled(w, -1, e.section.apply(base.base.bracket_basis(i, j)));
            for (int k = 0; k < n; ++k)
                if (w[static_cast<std::size_t>(k)] != 0)
                    throw Error("extension_cocycle: invariant violation: bracket defect escapes the fiber");
            for (int a = 0; a < m; ++a) out.psi(i, j, a) = w[static_cast<std::size_t>(n + a)];
        }
    }
    return out;
}

// The cocycle difference generated by a fiber-valued map on the base: the
// symmetrized module action defect paired with the operator commutator
// defect, signed so that it matches a difference of section cocycles.
inline ExtensionCocycle extension_coboundary(const NijenhuisAlgebra& base, const Representation& rep,
                                             const Matrix& nv, const Matrix& gamma) {
    detail::require_nijenhuis(base, "extension_coboundary");
    detail::require_rep(base.base, rep, "extension_coboundary");
    detail::require_square(nv, rep.space_dim, "extension_coboundary", "fiber operator");
    const int n = base.base.dim, m = rep.space_dim;
    if (gamma.rows() != m || gamma.cols() != n)
        throw DimensionError("extension_coboundary: gamma must map the base into the fiber");
    ExtensionCocycle out{Tensor3(n, n, m), nv * gamma - gamma * base.op};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = rep.action[static_cast<std::size_t>(i)].apply(gamma.col(j));
            add_scaled(v, 1, rep.action[static_cast<std::size_t>(j)].apply(gamma.col(i)));
            add_scaled(v, -1, gamma.apply(base.base.bracket_basis(i, j)));
            for (int a = 0; a < m; ++a) out.psi(i, j, a) = v[static_cast<std::size_t>(a)];
        }
    return out;
}

// Decide whether two section cocycles over the same module data belong to
// one class; returns a generating fiber-valued map when they do.
inline std::optional<Matrix> extensions_same_class(const NijenhuisAlgebra& base, const Representation& rep,
                                                   const Matrix& nv, const ExtensionCocycle& c1,
                                                   const ExtensionCocycle& c2) {
    detail::require_nijenhuis(base, "extensions_same_class");
    detail::require_rep(base.base, rep, "extensions_same_class");
    detail::require_square(nv, rep.space_dim, "extensions_same_class", "fiber operator");
    const int n = base.base.dim, m = rep.space_dim;
    const int vars = m * n;
    Matrix sys(n * n * m + m * n, vars);
    Vec target(static_cast<std::size_t>(n * n * m + m * n));
    auto var = [n](int a, int i) { return a * n + i; };
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < m; ++a, ++row) {
                for (int b = 0; b < m; ++b) {
                    sys(row, var(b, j)) += rep.action[static_cast<std::size_t>(i)](a, b);
                    sys(row, var(b, i)) += rep.action[static_cast<std::size_t>(j)](a, b);
                }
                for (int q = 0; q < n; ++q) sys(row, var(a, q)) -= base.base.bracket(i, j, q);
                target[static_cast<std::size_t>(row)] = c1.psi(i, j, a) - c2.psi(i, j, a);
            }
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i, ++row) {
            for (int b = 0; b < m; ++b) sys(row, var(b, i)) += nv(a, b);
            for (int q = 0; q < n; ++q) sys(row, var(a, q)) -= base.op(q, i);
            target[static_cast<std::size_t>(row)] = c1.chi(a, i) - c2.chi(a, i);
        }
    LinearSolution sol = solve_linear(sys, target);
    if (!sol.x) return std::nullopt;
    Matrix gamma(m, n);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i) gamma(a, i) = (*sol.x)[static_cast<std::size_t>(var(a, i))];
    return gamma;
}

// Assemble a total structure from module data and a cocycle, with the
// canonical section, then insist the result satisfies the bracket and
// operator laws; a failure is reported with the failing law.
inline ExtensionData build_extension_from_cocycle(const NijenhuisAlgebra& base, const Representation& rep,
                                                  const Matrix& nv, const ExtensionCocycle& coc) {
    detail::require_nijenhuis(base, "build_extension_from_cocycle");
    detail::require_rep(base.base, rep, "build_extension_from_cocycle");
    detail::require_square(nv, rep.space_dim, "build_extension_from_cocycle", "fiber operator");
    const int n = base.base.dim, m = rep.space_dim, t = n + m;
    if (coc.psi.dim1() != n || coc.psi.dim2() != n || coc.psi.dim3() != m)
        throw DimensionError("build_extension_from_cocycle: bilinear cocycle has wrong dimensions");
    if (coc.chi.rows() != m || coc.chi.cols() != n)
        throw DimensionError("build_extension_from_cocycle: operator cocycle has wrong dimensions");
    ExtensionData e{{{t, Tensor3(t, t, t)}, Matrix(t, t)}, m, nv, Matrix(t, n)};
    for (int i = 0; i < n; ++i) {
        e.section(i, i) = 1;
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) e.total.base.bracket(i, j, k) = base.base.bracket(i, j, k);
            for (int a = 0; a < m; ++a) e.total.base.bracket(i, j, n + a) = coc.psi(i, j, a);
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                e.total.base.bracket(i, n + a, n + b) = rep.action[static_cast<std::size_t>(i)](b, a);
                e.total.base.bracket(n + a, i, n + b) = rep.action[static_cast<std::size_t>(i)](b, a);
            }
        for (int k = 0; k < n; ++k) e.total.op(k, i) = base.op(k, i);
        for (int a = 0; a < m; ++a) e.total.op(n + a, i) = coc.chi(a, i);
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) e.total.op(n + a, n + b) = nv(a, b);
    if (CheckReport rep_ok = check_mock_lie(e.total.base); !rep_ok.pass)
        throw HypothesisError("build_extension_from_cocycle", rep_ok);
    if (CheckReport rep_ok = check_nijenhuis(e.total); !rep_ok.pass)
        throw HypothesisError("build_extension_from_cocycle", rep_ok);
    return e;
}

}  // namespace mlk
