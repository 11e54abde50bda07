// Checks for truncated deformations, order-one cochains and their
// equivalence classes, and abelian operator extensions: section cocycles,
// coboundary differences, class certificates, and reconstruction.

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mlk/mlk.hpp"

using namespace mlk;

namespace {

NijenhuisAlgebra base_pair() { return {corpus::algebra_a(), corpus::n_shift()}; }

DeformationCochain zero_cochain() { return {Tensor3(4, 4, 4), Matrix(4, 4)}; }

// Vectorize a cochain: bracket entries first, then operator entries.
Vec pack_cochain(const DeformationCochain& c) {
    Vec v(static_cast<std::size_t>(64 + 16));
    int at = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) v[static_cast<std::size_t>(at++)] = c.mu1(i, j, k);
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) v[static_cast<std::size_t>(at++)] = c.n1(p, q);
    return v;
}

DeformationCochain unpack_cochain(const Vec& v) {
    DeformationCochain c{Tensor3(4, 4, 4), Matrix(4, 4)};
    int at = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) c.mu1(i, j, k) = v[static_cast<std::size_t>(at++)];
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) c.n1(p, q) = v[static_cast<std::size_t>(at++)];
    return c;
}

// All order-one residual rows of a cochain against the base: bracket
// symmetry, the mixed Jacobi convolution, and the mixed operator
// convolution. Linear and homogeneous in the cochain.
Vec cochain_residual(const NijenhuisAlgebra& base, const DeformationCochain& c) {
    const int n = base.base.dim;
    const TruncatedDeformation d{{base.base.bracket, c.mu1}, {base.op, c.n1}};
    Vec out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) out.push_back(c.mu1(i, j, k) - c.mu1(j, i, k));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            for (int s = 0; s < n; ++s) {
                const Vec row = detail::jacobi_convolution(d, 1, p, q, s);
                out.insert(out.end(), row.begin(), row.end());
            }
            auto [lhs, rhs] = detail::nijenhuis_convolution(d, 1, p, q);
            for (std::size_t t = 0; t < lhs.size(); ++t) out.push_back(lhs[t] - rhs[t]);
        }
    return out;
}

bool same_cochain(const DeformationCochain& a, const DeformationCochain& b) {
    return a.mu1 == b.mu1 && a.n1 == b.n1;
}

ExtensionCocycle zero_ext_cocycle(int n, int m) { return {Tensor3(n, n, m), Matrix(m, n)}; }

bool same_ext_cocycle(const ExtensionCocycle& a, const ExtensionCocycle& b) {
    return a.psi == b.psi && a.chi == b.chi;
}

}  // namespace

TEST_CASE("base structure alone is a valid order-zero deformation") {
    const NijenhuisAlgebra base = base_pair();
    const CheckReport rep = check_order_n_deformation({{base.base.bracket}, {base.op}});
    CHECK(rep.law == "deformation");
    CHECK(rep.pass);
}

TEST_CASE("order-zero rows detect operator torsion with raw labels") {
    Matrix bad(4, 4);
    bad(0, 1) = 1;
    const CheckReport rep = check_order_n_deformation({{corpus::algebra_a().bracket}, {bad}});
    CHECK(rep.law == "deformation");
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.witnesses.size() == 3);
    CHECK(rep.witnesses[0].indices == std::vector<int>{0, 1, 2});
    CHECK(rep.witnesses[1].indices == std::vector<int>{0, 2, 1});
    CHECK(rep.witnesses[2].indices == std::vector<int>{0, 2, 2});
    CHECK(rep.witnesses[0].lhs == Vec{Q(0), Q(0), Q(0), Q(0)});
    CHECK(rep.witnesses[0].rhs == Vec{Q(1), Q(0), Q(0), Q(0)});
    CHECK(rep.witnesses[2].lhs == Vec{Q(0), Q(1), Q(0), Q(0)});
}

TEST_CASE("the operator direction deforms the bracket to first order") {
    const NijenhuisAlgebra base = base_pair();
    const DeformationCochain dir = cochain_coboundary(base, base.op);
    // The generated bracket direction is the operator-deformed bracket and
    // the operator direction vanishes.
    CHECK(dir.mu1 == deformed_bracket(base).bracket);
    CHECK(dir.n1 == Matrix(4, 4));
    const TruncatedDeformation d{{base.base.bracket, dir.mu1}, {base.op, dir.n1}};
    const CheckReport rep = check_order_n_deformation(d);
    CHECK(rep.pass);
}

TEST_CASE("coboundaries of random linear maps are cocycles") {
    const NijenhuisAlgebra base = base_pair();
    auto gen = corpus::seeded(0xdef001u);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix psi = corpus::random_matrix(gen, 4, 4);
        const CheckReport rep = check_2cocycle(base, cochain_coboundary(base, psi));
        REQUIRE(rep.law == "2-cocycle");
        REQUIRE(rep.pass);
    }
}

TEST_CASE("cocycle attribution names the failing convolution") {
    const NijenhuisAlgebra base = base_pair();
    SECTION("bracket part failing the Jacobi convolution") {
        DeformationCochain c = zero_cochain();
        c.mu1(0, 0, 0) = 1;
        const CheckReport rep = check_2cocycle(base, c);
        CHECK(rep.law == "2-cocycle/cocycle-jacobi");
        CHECK_FALSE(rep.pass);
    }
    SECTION("operator part failing the mixed convolution") {
        DeformationCochain c = zero_cochain();
        c.n1(0, 1) = 1;
        const CheckReport rep = check_2cocycle(base, c);
        CHECK(rep.law == "2-cocycle/cocycle-nijenhuis");
        REQUIRE_FALSE(rep.pass);
        CHECK(rep.witnesses[0].indices == std::vector<int>{1, 2});
    }
}

TEST_CASE("a planted top coefficient reduces truncation to the cocycle law") {
    const NijenhuisAlgebra base = base_pair();
    auto gen = corpus::seeded(0xdef002u);
    auto agree = [&](const DeformationCochain& c) {
        const TruncatedDeformation d{{base.base.bracket, Tensor3(4, 4, 4), c.mu1},
                                     {base.op, Matrix(4, 4), c.n1}};
        const bool truncated = check_order_n_deformation(d).pass;
        const bool cocycle = check_2cocycle(base, c).pass;
        CHECK(truncated == cocycle);
        return truncated;
    };
    CHECK(agree(cochain_coboundary(base, base.op)));
    for (int trial = 0; trial < 10; ++trial) {
        agree(cochain_coboundary(base, corpus::random_matrix(gen, 4, 4)));
        DeformationCochain noise = zero_cochain();
        noise.mu1 = corpus::random_symmetric_tensor(gen, 4);
        noise.n1 = corpus::random_matrix(gen, 4, 4);
        agree(noise);
    }
}

TEST_CASE("coboundary directions are recognized as equivalent to zero") {
    const NijenhuisAlgebra base = base_pair();
    Matrix psi(4, 4);
    psi(0, 1) = 1;
    psi(2, 3) = 2;
    const DeformationCochain c1 = cochain_coboundary(base, psi);
    const auto found = deformations_equivalent_order1(base, c1, zero_cochain());
    REQUIRE(found.has_value());
    // The recovered map need not be psi itself, but must generate the same
    // difference.
    CHECK(same_cochain(cochain_coboundary(base, *found), c1));
    const auto reversed = deformations_equivalent_order1(base, zero_cochain(), c1);
    REQUIRE(reversed.has_value());
    const DeformationCochain back = cochain_coboundary(base, *reversed);
    CHECK(back.mu1 + c1.mu1 == Tensor3(4, 4, 4));
    CHECK(back.n1 + c1.n1 == Matrix(4, 4));
}

TEST_CASE("two random coboundary directions lie in one class") {
    const NijenhuisAlgebra base = base_pair();
    auto gen = corpus::seeded(0xdef003u);
    for (int trial = 0; trial < 5; ++trial) {
        const DeformationCochain c1 = cochain_coboundary(base, corpus::random_matrix(gen, 4, 4));
        const DeformationCochain c2 = cochain_coboundary(base, corpus::random_matrix(gen, 4, 4));
        const auto found = deformations_equivalent_order1(base, c1, c2);
        REQUIRE(found.has_value());
        const DeformationCochain diff = cochain_coboundary(base, *found);
        CHECK(diff.mu1 + c2.mu1 == c1.mu1);
        CHECK(diff.n1 + c2.n1 == c1.n1);
    }
}

TEST_CASE("equivalence testing requires cocycle inputs") {
    const NijenhuisAlgebra base = base_pair();
    DeformationCochain bad = zero_cochain();
    bad.mu1(0, 0, 0) = 1;
    try {
        deformations_equivalent_order1(base, bad, zero_cochain());
        FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
        CHECK(e.report.law == "2-cocycle/cocycle-jacobi");
    }
}

TEST_CASE("some cocycle direction is not a coboundary") {
    const NijenhuisAlgebra base = base_pair();
    // Cocycle space: kernel of the residual map over all 80 cochain
    // coordinates (the residual is linear and homogeneous).
    const int vars = 80;
    Vec probe = pack_cochain(zero_cochain());
    const int rows = static_cast<int>(cochain_residual(base, zero_cochain()).size());
    Matrix sys(rows, vars);
    for (int v = 0; v < vars; ++v) {
        Vec unit(static_cast<std::size_t>(vars));
        unit[static_cast<std::size_t>(v)] = 1;
        const Vec col = cochain_residual(base, unpack_cochain(unit));
        for (int r = 0; r < rows; ++r) sys(r, v) = col[static_cast<std::size_t>(r)];
    }
    const std::vector<Vec> cocycles = kernel_basis(sys);
    // Coboundary image: columns generated by the 16 unit linear maps.
    Matrix image(vars, 16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Matrix unit(4, 4);
            unit(a, b) = 1;
            const Vec col = pack_cochain(cochain_coboundary(base, unit));
            for (int r = 0; r < vars; ++r) image(r, a * 4 + b) = col[static_cast<std::size_t>(r)];
        }
    const int image_rank = rank_of(image);
    INFO("cocycle dimension " << cocycles.size() << ", coboundary rank " << image_rank);
    REQUIRE(static_cast<int>(cocycles.size()) > image_rank);
    bool found_nontrivial = false;
    for (const Vec& z : cocycles) {
        if (solve_linear(image, z).x) continue;
        found_nontrivial = true;
        const DeformationCochain zc = unpack_cochain(z);
        REQUIRE(check_2cocycle(base, zc).pass);
        CHECK_FALSE(deformations_equivalent_order1(base, zc, zero_cochain()).has_value());
        break;
    }
    REQUIRE(found_nontrivial);
}

TEST_CASE("canonical extension of the zero cocycle is the semidirect sum") {
    const NijenhuisAlgebra base = base_pair();
    const Representation ad = adjoint_rep(base.base);
    const ExtensionData e =
        build_extension_from_cocycle(base, ad, corpus::n_shift(), zero_ext_cocycle(4, 4));
    CHECK(e.total.base.dim == 8);
    CHECK(e.v_dim == 4);
    CHECK(check_mock_lie(e.total.base).pass);
    CHECK(check_nijenhuis(e.total.base, e.total.op).pass);
    // Recover every ingredient through the canonical section.
    const NijenhuisAlgebra back = extension_base(e);
    CHECK(back.base.bracket == base.base.bracket);
    CHECK(back.op == base.op);
    const NijenhuisRepresentation induced = extension_induced_rep(e);
    CHECK(induced.rep.action == ad.action);
    CHECK(induced.alpha == corpus::n_shift());
    CHECK(same_ext_cocycle(extension_cocycle(e), zero_ext_cocycle(4, 4)));
}

TEST_CASE("twisting the section shifts the cocycle by a coboundary") {
    const NijenhuisAlgebra base = base_pair();
    const Representation ad = adjoint_rep(base.base);
    const Matrix nv = corpus::n_shift();
    ExtensionData e = build_extension_from_cocycle(base, ad, nv, zero_ext_cocycle(4, 4));
    Matrix gamma(4, 4);
    gamma(0, 1) = 1;
    gamma(2, 0) = -2;
    gamma(3, 3) = 1;
    for (int a = 0; a < 4; ++a)
        for (int i = 0; i < 4; ++i) e.section(4 + a, i) = gamma(a, i);
    const ExtensionCocycle twisted = extension_cocycle(e);
    const ExtensionCocycle shift = extension_coboundary(base, ad, nv, gamma);
    CHECK(twisted.psi == shift.psi);
    CHECK(twisted.chi == shift.chi);
    // Both sections induce the same module action.
    const NijenhuisRepresentation induced = extension_induced_rep(e);
    CHECK(induced.rep.action == ad.action);
    CHECK(induced.alpha == nv);
    // And the class certificate recovers a generating map for the shift.
    const auto cert = extensions_same_class(base, ad, nv, twisted, zero_ext_cocycle(4, 4));
    REQUIRE(cert.has_value());
    const ExtensionCocycle regen = extension_coboundary(base, ad, nv, *cert);
    CHECK(same_ext_cocycle(regen, twisted));
}

TEST_CASE("cocycles differing by an operator--trace obstruction split classes") {
    const NijenhuisAlgebra base = base_pair();
    const Representation ad = adjoint_rep(base.base);
    // With matching base and fiber operators, every coboundary operator
    // part is a commutator, hence traceless; a trace-one chi cannot be one.
    ExtensionCocycle off = zero_ext_cocycle(4, 4);
    off.chi(0, 0) = 1;
    CHECK_FALSE(extensions_same_class(base, ad, corpus::n_shift(), off, zero_ext_cocycle(4, 4))
                    .has_value());
}

TEST_CASE("rebuilding from a coboundary cocycle reproduces its data") {
    const NijenhuisAlgebra base = base_pair();
    const Representation ad = adjoint_rep(base.base);
    const Matrix nv = corpus::n_shift();
    auto gen = corpus::seeded(0xdef004u);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix gamma = corpus::random_matrix(gen, 4, 4);
        const ExtensionCocycle coc = extension_coboundary(base, ad, nv, gamma);
        const ExtensionData e = build_extension_from_cocycle(base, ad, nv, coc);
        CHECK(same_ext_cocycle(extension_cocycle(e), coc));
        const NijenhuisAlgebra back = extension_base(e);
        CHECK(back.base.bracket == base.base.bracket);
        CHECK(back.op == base.op);
    }
}

TEST_CASE("reconstruction rejects data violating the laws") {
    const NijenhuisAlgebra base = base_pair();
    const Representation ad = adjoint_rep(base.base);
    SECTION("bracket law failure") {
        ExtensionCocycle coc = zero_ext_cocycle(4, 4);
        coc.psi(0, 0, 0) = 1;
        try {
            build_extension_from_cocycle(base, ad, corpus::n_shift(), coc);
            FAIL("expected a hypothesis error");
        } catch (const HypothesisError& e) {
            CHECK(e.report.law == "mock-lie");
        }
    }
    SECTION("operator law failure") {
        ExtensionCocycle coc = zero_ext_cocycle(4, 4);
        coc.chi(0, 0) = 1;
        try {
            build_extension_from_cocycle(base, ad, corpus::n_shift(), coc);
            FAIL("expected a hypothesis error");
        } catch (const HypothesisError& e) {
            CHECK(e.report.law == "nijenhuis");
        }
    }
}

TEST_CASE("malformed extension data trips the invariant checks") {
    const NijenhuisAlgebra base = base_pair();
    const Representation ad = adjoint_rep(base.base);
    const ExtensionData good =
        build_extension_from_cocycle(base, ad, corpus::n_shift(), zero_ext_cocycle(4, 4));
    SECTION("section is not a right inverse") {
        ExtensionData e = good;
        e.section(0, 0) = 2;
        CHECK_THROWS_AS(extension_base(e), Error);
    }
    SECTION("fiber is not abelian") {
        ExtensionData e = good;
        e.total.base.bracket(4, 4, 0) = 1;
        CHECK_THROWS_AS(extension_cocycle(e), Error);
    }
    SECTION("fiber is not an ideal") {
        ExtensionData e = good;
        e.total.base.bracket(0, 4, 0) = 1;
        CHECK_THROWS_AS(extension_induced_rep(e), Error);
    }
    SECTION("operator does not preserve the fiber") {
        ExtensionData e = good;
        e.total.op(0, 4) = 1;
        CHECK_THROWS_AS(extension_base(e), Error);
    }
    SECTION("fiber operator mismatch") {
        ExtensionData e = good;
        e.nv(0, 0) += 1;
        CHECK_THROWS_AS(extension_base(e), Error);
    }
}
