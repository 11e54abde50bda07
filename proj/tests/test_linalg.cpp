#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mlk/mlk.hpp"

using namespace mlk;

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(parse_rational("5") == Q(5));
  CHECK(parse_rational("-7") == Q(-7));
  CHECK(parse_rational("3/4") == Q(3) / 4);
  CHECK(parse_rational("-9/6") == Q(-3) / 2);
  CHECK(to_string(Q(-3) / 2) == "-3/2");
  CHECK(to_string(Q(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("2/"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
}

TEST_CASE("matrix product and transpose") {
  Matrix a(2, 3, {1, 2, 3, 4, 5, 6});
  Matrix b(3, 2, {7, 8, 9, 10, 11, 12});
  Matrix ab = a * b;
  CHECK(ab == Matrix(2, 2, {58, 64, 139, 154}));
  CHECK(a.transpose() == Matrix(3, 2, {1, 4, 2, 5, 3, 6}));
  CHECK(Matrix::identity(3) * b == b);
  CHECK(Q(2) * a == Matrix(2, 3, {2, 4, 6, 8, 10, 12}));
}

TEST_CASE("matrix applied to vector acts on columns") {
  Matrix m(2, 2, {0, 1, 0, 0});
  Vec v = m.apply(unit_vec(2, 1));
  CHECK(v == Vec{1, 0});
  CHECK(m.col(1) == Vec{1, 0});
}

TEST_CASE("block diagonal assembly") {
  Matrix x(2, 2, {1, 2, 3, 4});
  Matrix y(1, 1, {5});
  Matrix d = block_diag(x, y);
  REQUIRE(d.rows() == 3);
  REQUIRE(d.cols() == 3);
  CHECK(d(0, 1) == 2);
  CHECK(d(2, 2) == 5);
  CHECK(d(0, 2) == 0);
  CHECK(d(2, 0) == 0);
}

TEST_CASE("tau flip transposes a square tensor grid") {
  Matrix r = corpus::r_standard();
  Matrix t = flip_tau(r);
  CHECK(t(2, 1) == 1);
  CHECK(t(1, 2) == -1);
  CHECK(flip_tau(t) == r);
}

TEST_CASE("linear solve produces an exact solution") {
  Matrix m(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 1});
  Vec rhs{1, 2, 3};
  auto sol = solve_linear(m, rhs);
  REQUIRE(sol.x.has_value());
  Vec back = m.apply(*sol.x);
  CHECK(back == rhs);
}

TEST_CASE("linear solve reports inconsistency") {
  Matrix m(2, 2, {1, 1, 2, 2});
  auto sol = solve_linear(m, Vec{1, 3});
  CHECK_FALSE(sol.x.has_value());
}

TEST_CASE("solver handles rectangular systems with fractions") {
  auto gen = corpus::seeded(11);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix m = corpus::random_matrix(gen, 5, 3);
    Vec planted(3);
    for (auto& e : planted) e = corpus::small_q(gen);
    Vec rhs = m.apply(planted);
    auto sol = solve_linear(m, rhs);
    REQUIRE(sol.x.has_value());
    CHECK(m.apply(*sol.x) == rhs);
  }
}

TEST_CASE("kernel basis spans the null space exactly") {
  Matrix m(2, 4, {1, 0, 1, 0, 0, 1, 0, 1});
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK(is_zero(m.apply(v)));
  CHECK(rank_of(m) == 2);
}

TEST_CASE("kernel vector exists exactly for singular matrices") {
  CHECK_FALSE(kernel_vector(Matrix::identity(3)).has_value());
  Matrix sing(2, 2, {1, 2, 2, 4});
  auto v = kernel_vector(sing);
  REQUIRE(v.has_value());
  CHECK_FALSE(is_zero(*v));
  CHECK(is_zero(sing.apply(*v)));
}

TEST_CASE("rank is invariant under transpose") {
  auto gen = corpus::seeded(12);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = corpus::random_matrix(gen, 4, 6);
    CHECK(rank_of(m) == rank_of(m.transpose()));
  }
}

TEST_CASE("tensor contraction matches manual sums") {
  // Contract a bilinear grid against a vector on its second axis.
  Matrix r = corpus::r_standard();
  Vec v{1, 2, 3, 4};
  Tensor tr = Tensor::from(r);
  Tensor tv = Tensor::from(v);
  Tensor out = contract(tr, tv, {{1, 0}});
  REQUIRE(out.rank() == 1);
  for (int i = 0; i < 4; ++i) {
    Q expect = 0;
    for (int j = 0; j < 4; ++j) expect += r(i, j) * v[static_cast<std::size_t>(j)];
    CHECK(out.at({i}) == expect);
  }
}

TEST_CASE("tensor3 equality and arithmetic") {
  Tensor3 t(2, 2, 2);
  t(0, 1, 1) = Q(1) / 3;
  Tensor3 u = t + t;
  CHECK(u(0, 1, 1) == Q(2) / 3);
  CHECK((u - t) == t);
  CHECK_FALSE(t.is_zero());
  CHECK((t - t).is_zero());
}

TEST_CASE("report builder sorts witnesses and records only mismatches") {
  ReportBuilder b("demo");
  b.require({1, 0}, Vec{1}, Vec{1});
  b.require({0, 1}, Vec{2}, Vec{3});
  b.require({0, 0}, Vec{5}, Vec{4});
  CheckReport rep = b.finish();
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witnesses.size() == 2);
  CHECK(rep.witnesses[0].indices == std::vector<int>{1, 1});
  CHECK(rep.witnesses[1].indices == std::vector<int>{1, 2});
}

TEST_CASE("composite reports attribute the first failing stage") {
  auto pass = [] { return ReportBuilder("inner-a").finish(); };
  auto fail = [] {
    ReportBuilder b("inner-b");
    b.require({0}, Vec{1}, Vec{0});
    return b.finish();
  };
  CheckReport rep = run_composite("outer", {pass, fail});
  CHECK_FALSE(rep.pass);
  CHECK(rep.law == "outer/inner-b");
  CheckReport ok = run_composite("outer", {pass, pass});
  CHECK(ok.pass);
  CHECK(ok.law == "outer");
}
