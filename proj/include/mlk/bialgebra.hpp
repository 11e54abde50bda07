#pragma once

// Bialgebra layer: a bracket and a cobracket sharing one space, matched
// pairs of algebras acting on each other, their double, the standard
// self-dual pairing on algebra-plus-dual, and the operator compatibility
// laws that tie a pair (N, S) to a coboundary cobracket built from r.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlk/linalg.hpp"
#include "mlk/mocklie.hpp"
#include "mlk/nijenhuis.hpp"
#include "mlk/report.hpp"
#include "mlk/yangbaxter.hpp"

namespace mlk {

struct MockLieBialgebra {
    MockLieAlgebra algebra;
    MockLieCoalgebra coalgebra;  // same underlying space as the algebra
};

struct NijenhuisBialgebra {
    MockLieBialgebra base;
    Matrix n;  // operator on the algebra side
    Matrix s;  // operator on the coalgebra side
};

// Two algebras acting on each other's spaces; the operators are only
// consulted by the Nijenhuis-level checks and builders.
struct MatchedPairData {
    MockLieAlgebra left, right;
    Representation left_on_right;  // left.dim matrices of size right.dim
    Representation right_on_left;  // right.dim matrices of size left.dim
    Matrix op_left, op_right;
};

inline MatchedPairData make_matched_pair(MockLieAlgebra left, MockLieAlgebra right,
                                         Representation left_on_right, Representation right_on_left) {
    const int n = left.dim, m = right.dim;
    return {std::move(left), std::move(right), std::move(left_on_right), std::move(right_on_left),
            Matrix(n, n), Matrix(m, m)};
}

struct ManinTripleData {
    NijenhuisAlgebra dbl;
    Matrix gram;   // pairing on the double
    int half_dim;  // coordinates [0, half_dim) are the first factor
};

namespace detail {

inline void require_bialgebra(const MockLieBialgebra& b, const std::string& who) {
    require_algebra(b.algebra, who);
    require_coalgebra(b.coalgebra, who);
    if (b.algebra.dim != b.coalgebra.dim)
        throw DimensionError(who + ": algebra and coalgebra dimensions differ");
}

inline void require_nijenhuis_bialgebra(const NijenhuisBialgebra& nb, const std::string& who) {
    require_bialgebra(nb.base, who);
    require_square(nb.n, nb.base.algebra.dim, who, "N");
    require_square(nb.s, nb.base.algebra.dim, who, "S");
}

inline void require_matched(const MatchedPairData& m, const std::string& who) {
    require_algebra(m.left, who);
    require_algebra(m.right, who);
    require_rep(m.left, m.left_on_right, who);
    require_rep(m.right, m.right_on_left, who);
    if (m.left_on_right.space_dim != m.right.dim)
        throw DimensionError(who + ": left action does not act on the right space");
    if (m.right_on_left.space_dim != m.left.dim)
        throw DimensionError(who + ": right action does not act on the left space");
    require_square(m.op_left, m.left.dim, who, "left operator");
    require_square(m.op_right, m.right.dim, who, "right operator");
}

// The bracket/cobracket compatibility residual, reported per bracket pair
// (i, j) as a full coefficient grid of the coproduct of [e_i, e_j].
inline CheckReport compatibility_report(const MockLieBialgebra& b) {
    const int n = b.algebra.dim;
    const Tensor3& c = b.algebra.bracket;
    const Tensor3& d = b.coalgebra.cobracket;
    ReportBuilder rb("compatibility");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix lhs(n, n), rhs(n, n);
            for (int m = 0; m < n; ++m)
                if (c(i, j, m) != 0)
                    for (int a = 0; a < n; ++a)
                        for (int bb = 0; bb < n; ++bb) lhs(a, bb) += c(i, j, m) * d(m, a, bb);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (d(j, u, v) != 0)
                        for (int a = 0; a < n; ++a) {
                            // -[x, y(1)] ⊗ y(2)  and  -y(1) ⊗ [x, y(2)]
                            if (c(i, u, a) != 0) rhs(a, v) -= d(j, u, v) * c(i, u, a);
                            if (c(i, v, a) != 0) rhs(u, a) -= d(j, u, v) * c(i, v, a);
                        }
                    if (d(i, u, v) != 0)
                        for (int a = 0; a < n; ++a) {
                            // -[y, x(1)] ⊗ x(2)  and  -x(1) ⊗ [y, x(2)]
                            if (c(j, u, a) != 0) rhs(a, v) -= d(i, u, v) * c(j, u, a);
                            if (c(j, v, a) != 0) rhs(u, a) -= d(i, u, v) * c(j, v, a);
                        }
                }
            rb.require({i, j}, lhs.flat(), rhs.flat());
        }
    return rb.finish();
}

inline CheckReport relabel(CheckReport r, const std::string& law) {
    r.law = law;
    return r;
}

}  // namespace detail

// Bracket/cobracket compatibility on one space. Both halves must already be
// valid structures; a failing half is a hypothesis error, attributed.
inline CheckReport check_bialgebra(const MockLieBialgebra& b) {
    detail::require_bialgebra(b, "check_bialgebra");
    if (CheckReport rep = check_mock_lie(b.algebra); !rep.pass) throw HypothesisError("check_bialgebra", rep);
    if (CheckReport rep = check_mock_lie_coalgebra(b.coalgebra); !rep.pass)
        throw HypothesisError("check_bialgebra", rep);
    return detail::relabel(detail::compatibility_report(b), "bialgebra");
}

// Matched pair: both actions are representations and the two mixed Jacobi
// residuals vanish. Failures are attributed to the first failing stage.
inline CheckReport check_matched_pair(const MatchedPairData& m) {
    detail::require_matched(m, "check_matched_pair");
    const int n = m.left.dim, w = m.right.dim;
    return run_composite(
        "matched-pair",
        {[&] { return detail::relabel(check_representation(m.left, m.left_on_right), "left-action"); },
         [&] { return detail::relabel(check_representation(m.right, m.right_on_left), "right-action"); },
         [&] {
             ReportBuilder rb("left-compat");
             for (int i = 0; i < n; ++i)
                 for (int j = 0; j < w; ++j)
                     for (int k = 0; k < w; ++k) {
                         Vec sum = m.left_on_right.action[static_cast<std::size_t>(i)].apply(
                             m.right.bracket_basis(j, k));
                         add_scaled(sum, 1,
                                    m.right.bracket_of(
                                        m.left_on_right.action[static_cast<std::size_t>(i)].col(j),
                                        unit_vec(w, k)));
                         add_scaled(sum, 1,
                                    m.right.bracket_of(
                                        unit_vec(w, j),
                                        m.left_on_right.action[static_cast<std::size_t>(i)].col(k)));
                         add_scaled(sum, 1,
                                    m.left_on_right
                                        .of(m.right_on_left.action[static_cast<std::size_t>(k)].col(i))
                                        .col(j));
                         add_scaled(sum, 1,
                                    m.left_on_right
                                        .of(m.right_on_left.action[static_cast<std::size_t>(j)].col(i))
                                        .col(k));
                         rb.require_zero({i, j, k}, sum);
                     }
             return rb.finish();
         },
         [&] {
             ReportBuilder rb("right-compat");
             for (int p = 0; p < w; ++p)
                 for (int i = 0; i < n; ++i)
                     for (int j = 0; j < n; ++j) {
                         Vec sum = m.right_on_left.action[static_cast<std::size_t>(p)].apply(
                             m.left.bracket_basis(i, j));
                         add_scaled(sum, 1,
                                    m.left.bracket_of(
                                        m.right_on_left.action[static_cast<std::size_t>(p)].col(i),
                                        unit_vec(n, j)));
                         add_scaled(sum, 1,
                                    m.left.bracket_of(
                                        unit_vec(n, i),
                                        m.right_on_left.action[static_cast<std::size_t>(p)].col(j)));
                         add_scaled(sum, 1,
                                    m.right_on_left
                                        .of(m.left_on_right.action[static_cast<std::size_t>(j)].col(p))
                                        .col(i));
                         add_scaled(sum, 1,
                                    m.right_on_left
                                        .of(m.left_on_right.action[static_cast<std::size_t>(i)].col(p))
                                        .col(j));
                         rb.require_zero({p, i, j}, sum);
                     }
             return rb.finish();
         }});
}

// Matched pair of Nijenhuis algebras: the base matched pair plus each
// operator being Nijenhuis on its side, plus each side's action together
// with the other side's operator forming a Nijenhuis representation.
inline CheckReport check_nijenhuis_matched_pair(const MatchedPairData& m) {
    detail::require_matched(m, "check_nijenhuis_matched_pair");
    return run_composite(
        "nijenhuis-matched-pair",
        {[&] { return check_matched_pair(m); },
         [&] { return detail::relabel(check_nijenhuis(m.left, m.op_left), "left-nijenhuis"); },
         [&] { return detail::relabel(check_nijenhuis(m.right, m.op_right), "right-nijenhuis"); },
         [&] {
             return detail::relabel(check_nijenhuis_rep({m.left, m.op_left}, {m.left_on_right, m.op_right}),
                                    "left-nijenhuis-rep");
         },
         [&] {
             return detail::relabel(
                 check_nijenhuis_rep({m.right, m.op_right}, {m.right_on_left, m.op_left}),
                 "right-nijenhuis-rep");
         }});
}

// Double of a matched pair: both brackets plus the two cross actions on the
// direct sum, with the block-diagonal operator. Never validated here; the
// double being well-formed is exactly what the matched-pair laws certify.
inline NijenhuisAlgebra double_algebra(const MatchedPairData& m) {
    detail::require_matched(m, "double_algebra");
    const int n = m.left.dim, w = m.right.dim, t = n + w;
    MockLieAlgebra d{t, Tensor3(t, t, t)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) d.bracket(i, j, k) = m.left.bracket(i, j, k);
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b)
            for (int c = 0; c < w; ++c) d.bracket(n + a, n + b, n + c) = m.right.bracket(a, b, c);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < w; ++a) {
            const Vec to_left = m.right_on_left.action[static_cast<std::size_t>(a)].col(i);
            const Vec to_right = m.left_on_right.action[static_cast<std::size_t>(i)].col(a);
            for (int k = 0; k < n; ++k) {
                d.bracket(i, n + a, k) = to_left[static_cast<std::size_t>(k)];
                d.bracket(n + a, i, k) = to_left[static_cast<std::size_t>(k)];
            }
            for (int b = 0; b < w; ++b) {
                d.bracket(i, n + a, n + b) = to_right[static_cast<std::size_t>(b)];
                d.bracket(n + a, i, n + b) = to_right[static_cast<std::size_t>(b)];
            }
        }
    return {std::move(d), block_diag(m.op_left, m.op_right)};
}

// The coadjoint matched pair of a bialgebra with operators: the dualized
// coalgebra acts back on the algebra through the dual of its own adjoint
// representation, and the operators are N and the transpose of S.
inline MatchedPairData coadjoint_matched_pair(const NijenhuisBialgebra& nb) {
    detail::require_nijenhuis_bialgebra(nb, "coadjoint_matched_pair");
    const MockLieAlgebra& a = nb.base.algebra;
    MockLieAlgebra b = dualize_coalgebra(nb.base.coalgebra);
    Representation left_on_right = dual_rep(adjoint_rep(a));
    Representation right_on_left = dual_rep(adjoint_rep(b));
    return {a, std::move(b), std::move(left_on_right), std::move(right_on_left), nb.n,
            nb.s.transpose()};
}

// Standard double of a bialgebra-with-operators, carrying the canonical
// symmetric pairing that couples the two halves.
inline ManinTripleData manin_triple(const NijenhuisBialgebra& nb) {
    detail::require_nijenhuis_bialgebra(nb, "manin_triple");
    const int n = nb.base.algebra.dim;
    NijenhuisAlgebra dbl = double_algebra(coadjoint_matched_pair(nb));
    Matrix gram(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        gram(i, n + i) = 1;
        gram(n + i, i) = 1;
    }
    return {std::move(dbl), std::move(gram), n};
}

// Full certificate for a double-with-pairing: the double is a Nijenhuis
// algebra, both halves embed as subalgebras, and the pairing is symmetric,
// invariant, and nondegenerate.
inline CheckReport check_manin_triple(const ManinTripleData& mt) {
    detail::require_algebra(mt.dbl.base, "check_manin_triple");
    detail::require_square(mt.dbl.op, mt.dbl.base.dim, "check_manin_triple", "operator");
    detail::require_square(mt.gram, mt.dbl.base.dim, "check_manin_triple", "pairing");
    if (mt.half_dim < 0 || 2 * mt.half_dim != mt.dbl.base.dim)
        throw DimensionError("check_manin_triple: half dimension does not split the double");
    const int h = mt.half_dim, t = mt.dbl.base.dim;
    return run_composite(
        "manin-triple",
        {[&] { return check_mock_lie(mt.dbl.base); },
         [&] { return check_nijenhuis(mt.dbl); },
         [&] {
             ReportBuilder rb("left-subalgebra");
             for (int i = 0; i < h; ++i)
                 for (int j = 0; j < h; ++j)
                     for (int k = h; k < t; ++k) rb.require_zero({i, j, k}, {mt.dbl.base.bracket(i, j, k)});
             return rb.finish();
         },
         [&] {
             ReportBuilder rb("right-subalgebra");
             for (int i = h; i < t; ++i)
                 for (int j = h; j < t; ++j)
                     for (int k = 0; k < h; ++k) rb.require_zero({i, j, k}, {mt.dbl.base.bracket(i, j, k)});
             return rb.finish();
         },
         [&] {
             ReportBuilder rb("symmetric");
             for (int i = 0; i < t; ++i)
                 for (int j = 0; j < t; ++j) rb.require({i, j}, {mt.gram(i, j)}, {mt.gram(j, i)});
             return rb.finish();
         },
         [&] {
             return detail::relabel(
                 check_form(mt.dbl.base, mt.gram, {.skew = false, .invariant = true, .nondegenerate = true}),
                 "pairing");
         }});
}

// The five defining conditions of a bialgebra carrying a compatible operator
// pair, in order, attributing the first failure: half structures and their
// compatibility, each operator's deformation law, the adjoint-admissibility
// of S, and the mixed cobracket law tying S, N and the coproduct.
inline CheckReport check_nijenhuis_bialgebra(const NijenhuisBialgebra& nb) {
    detail::require_nijenhuis_bialgebra(nb, "check_nijenhuis_bialgebra");
    const MockLieAlgebra& a = nb.base.algebra;
    const MockLieCoalgebra& c = nb.base.coalgebra;
    const int n = a.dim;
    return run_composite(
        "nijenhuis-bialgebra",
        {[&] { return check_mock_lie(a); },
         [&] { return check_mock_lie_coalgebra(c); },
         [&] { return detail::compatibility_report(nb.base); },
         [&] { return check_nijenhuis(a, nb.n); },
         [&] { return check_nijenhuis_coalgebra(c, nb.s); },
         [&] { return check_adjoint_admissible({a, nb.n}, nb.s); },
         [&] {
             // (S⊗id)ΔN + (id⊗N²)Δ = (S⊗N)Δ + (id⊗N)ΔN, per basis input.
             ReportBuilder rb("cobracket-admissible");
             const Matrix n2 = nb.n * nb.n;
             const Matrix nt = nb.n.transpose();
             const Matrix n2t = n2.transpose();
             for (int i = 0; i < n; ++i) {
                 Matrix di(n, n), dni(n, n);
                 for (int x = 0; x < n; ++x)
                     for (int y = 0; y < n; ++y) {
                         di(x, y) = c.cobracket(i, x, y);
                         Q acc = 0;
                         for (int m = 0; m < n; ++m)
                             if (nb.n(m, i) != 0) acc += nb.n(m, i) * c.cobracket(m, x, y);
                         dni(x, y) = acc;
                     }
                 const Matrix lhs = nb.s * dni + di * n2t;
                 const Matrix rhs = nb.s * di * nt + dni * nt;
                 rb.require({i}, lhs.flat(), rhs.flat());
             }
             return rb.finish();
         }});
}

// Coboundary admissibility of r on an algebra: the symmetric part of r is
// ad-invariant (so the induced coproduct is cocommutative) and the
// Yang-Baxter obstruction tensor of r is ad-invariant (so the induced
// coproduct satisfies the coalgebra Jacobi law).
inline CheckReport check_coboundary_compatible(const MockLieAlgebra& a, const Matrix& r) {
    detail::require_r(a, r, "check_coboundary_compatible");
    const int n = a.dim;
    const Representation ad = adjoint_rep(a);
    return run_composite(
        "coboundary",
        {[&] {
             ReportBuilder rb("symmetrized-r");
             const Matrix p = r + flip_tau(r);
             for (int i = 0; i < n; ++i) {
                 const Matrix& adi = ad.action[static_cast<std::size_t>(i)];
                 rb.require({i}, (adi * p).flat(), (p * adi.transpose()).flat());
             }
             return rb.finish();
         },
         [&] {
             ReportBuilder rb("obstruction");
             const Tensor3 u = detail::ybe_tensor(a, r);
             for (int i = 0; i < n; ++i) {
                 Tensor3 v(n, n, n);
                 for (int x = 0; x < n; ++x)
                     for (int y = 0; y < n; ++y)
                         for (int z = 0; z < n; ++z) {
                             if (u(x, y, z) == 0) continue;
                             for (int m = 0; m < n; ++m) {
                                 if (a.bracket(i, x, m) != 0) v(m, y, z) += a.bracket(i, x, m) * u(x, y, z);
                                 if (a.bracket(i, y, m) != 0) v(x, m, z) += a.bracket(i, y, m) * u(x, y, z);
                                 if (a.bracket(i, z, m) != 0) v(x, y, m) += a.bracket(i, z, m) * u(x, y, z);
                             }
                         }
                 rb.require({i}, v.flat(), zero_vec(n * n * n));
             }
             return rb.finish();
         }});
}

// The two operator/coproduct compatibility laws that make the coboundary
// cobracket of r interact correctly with an adjoint-admissible S and the
// algebra operator N. Adjoint-admissibility is a hypothesis here.
inline CheckReport check_nijenhuis_coboundary_conditions(const MockLieAlgebra& a, const Matrix& nop,
                                                         const Matrix& s, const Matrix& r) {
    detail::require_r(a, r, "check_nijenhuis_coboundary_conditions");
    detail::require_square(nop, a.dim, "check_nijenhuis_coboundary_conditions", "N");
    detail::require_square(s, a.dim, "check_nijenhuis_coboundary_conditions", "S");
    if (CheckReport rep = check_adjoint_admissible({a, nop}, s); !rep.pass)
        throw HypothesisError("check_nijenhuis_coboundary_conditions", rep);
    const int n = a.dim;
    const Representation ad = adjoint_rep(a);
    const Matrix p = s * r - r * nop.transpose();
    const Matrix q = nop * r - r * s.transpose();
    return run_composite(
        "nijenhuis-coboundary",
        {[&] {
             ReportBuilder rb("operator-compat-1");
             for (int i = 0; i < n; ++i) {
                 const Matrix& adi = ad.action[static_cast<std::size_t>(i)];
                 const Matrix b1 = ad.of(s.col(i)) - s * adi;
                 rb.require({i}, (p * b1.transpose() + b1 * q).flat(), zero_vec(n * n));
             }
             return rb.finish();
         },
         [&] {
             ReportBuilder rb("operator-compat-2");
             const Matrix n2t = (nop * nop).transpose();
             const Matrix s2 = s * s;
             for (int i = 0; i < n; ++i) {
                 const Matrix& adi = ad.action[static_cast<std::size_t>(i)];
                 const Matrix adn = ad.of(nop.col(i));
                 const Matrix res = (s * adi + adn) * p + p * (nop * adi - adn).transpose() +
                                    adi * r * n2t - adi * s2 * r;
                 rb.require({i}, res.flat(), zero_vec(n * n));
             }
             return rb.finish();
         }});
}

// r solves the Yang-Baxter tensor condition and is linked to the operator
// pair by N·r = r·Sᵀ and S·r = r·Nᵀ (r maps S-adjoint action to N action).
inline CheckReport check_s_admissible_mlybe(const MockLieAlgebra& a, const Matrix& nop, const Matrix& s,
                                            const Matrix& r) {
    detail::require_r(a, r, "check_s_admissible_mlybe");
    detail::require_square(nop, a.dim, "check_s_admissible_mlybe", "N");
    detail::require_square(s, a.dim, "check_s_admissible_mlybe", "S");
    const int n = a.dim;
    return run_composite("s-admissible-mlybe",
                         {[&] { return detail::relabel(check_cmlybe(a, r), "mlybe"); },
                          [&] {
                              ReportBuilder rb("operator-link-1");
                              const Matrix lhs = nop * r, rhs = r * s.transpose();
                              for (int i = 0; i < n; ++i)
                                  for (int j = 0; j < n; ++j) rb.require({i, j}, {lhs(i, j)}, {rhs(i, j)});
                              return rb.finish();
                          },
                          [&] {
                              ReportBuilder rb("operator-link-2");
                              const Matrix lhs = s * r, rhs = r * nop.transpose();
                              for (int i = 0; i < n; ++i)
                                  for (int j = 0; j < n; ++j) rb.require({i, j}, {lhs(i, j)}, {rhs(i, j)});
                              return rb.finish();
                          }});
}

}  // namespace mlk
