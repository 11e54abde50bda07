#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mlk/mlk.hpp"

using namespace mlk;

namespace {

// Second antisymmetric tensor on the reference algebra: e1 (x) e2 - e2 (x) e1.
Matrix r_alt() {
  Matrix r(4, 4);
  r(0, 1) = 1;
  r(1, 0) = -1;
  return r;
}

// Cobracket with a single symmetric entry: D(e2) = e1 (x) e1.
MockLieCoalgebra pulse_coalgebra() {
  MockLieCoalgebra c{4, Tensor3(4, 4, 4)};
  c.cobracket(1, 0, 0) = 1;
  return c;
}

}  // namespace

TEST_CASE("induced cobracket of the standard tensor matches the frozen table") {
  MockLieCoalgebra c = delta_r(corpus::algebra_a(), corpus::r_standard());
  CHECK(c.cobracket == corpus::delta_expected().cobracket);
}

TEST_CASE("induced cobracket of the alternate tensor matches its frozen table") {
  MockLieCoalgebra c = delta_r(corpus::algebra_a(), r_alt());
  Tensor3 expect(4, 4, 4);
  expect(0, 1, 1) = 2;  // D(e1) = 2 e2 (x) e2
  expect(2, 3, 1) = 1;  // D(e3) = e4 (x) e2 + e2 (x) e4
  expect(2, 1, 3) = 1;
  CHECK(c.cobracket == expect);
}

TEST_CASE("standard tensor solves the bracket Yang-Baxter condition") {
  CheckReport rep = check_cmlybe(corpus::algebra_a(), corpus::r_standard());
  CHECK(rep.pass);
  CHECK(rep.law == "cmlybe");
}

TEST_CASE("alternate tensor fails with one exact witness") {
  CheckReport rep = check_cmlybe(corpus::algebra_a(), r_alt());
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].indices == std::vector<int>{2, 2, 2});
  CHECK(rep.witnesses[0].lhs == Vec{3});
}

TEST_CASE("quasitriangularity coincides with the Yang-Baxter verdict") {
  MockLieAlgebra a = corpus::algebra_a();
  CHECK(check_quasitriangular(a, corpus::r_standard()).pass);
  CHECK_FALSE(check_quasitriangular(a, r_alt()).pass);

  auto gen = corpus::seeded(41);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix r = corpus::random_antisymmetric(gen, 4);
    CHECK(check_quasitriangular(a, r).pass == check_cmlybe(a, r).pass);
  }
}

TEST_CASE("quasitriangularity requires antisymmetry") {
  Matrix r(4, 4);
  r(1, 2) = 1;  // no mirror entry
  CHECK_THROWS_AS(check_quasitriangular(corpus::algebra_a(), r), HypothesisError);
}

TEST_CASE("form-side Yang-Baxter condition mirrors the tensor-side one") {
  auto gen = corpus::seeded(42);
  for (int trial = 0; trial < 25; ++trial) {
    MockLieAlgebra a{4, corpus::random_symmetric_tensor(gen, 4)};
    Matrix w = corpus::random_matrix(gen, 4, 4);
    bool form_side = check_ccmlybe(dualize_algebra(a), w).pass;
    bool tensor_side = check_cmlybe(a, w).pass;
    CHECK(form_side == tensor_side);
  }
}

TEST_CASE("dual instance of the standard tensor passes the form-side checks") {
  MockLieCoalgebra dual = dualize_algebra(corpus::algebra_a());
  Matrix w = corpus::r_standard();
  CHECK(check_ccmlybe(dual, w).pass);
  CHECK(check_dual_quasitriangular(dual, w).pass);

  MockLieAlgebra m = bracket_from_omega(dual, w);
  Tensor3 expect(4, 4, 4);
  expect(3, 1, 0) = -1;  // [f4,f2] = [f2,f4] = -f1
  expect(1, 3, 0) = -1;
  CHECK(m.bracket == expect);
  CHECK(check_mock_lie(m).pass);
}

TEST_CASE("dual quasitriangularity requires a skew form") {
  Matrix w(4, 4);
  w(0, 0) = 1;
  CHECK_THROWS_AS(check_dual_quasitriangular(corpus::delta_expected(), w), HypothesisError);
}

TEST_CASE("two-parameter family is symplectic for every parameter choice") {
  MockLieAlgebra a = corpus::algebra_a();
  for (const Q& l : corpus::lambda_grid)
    for (const Q& g : corpus::gamma_grid) {
      CheckReport rep = check_symplectic(a, corpus::omega_family(l, g));
      CHECK(rep.pass);
      CHECK(rep.law == "symplectic");
    }
}

TEST_CASE("cyclic compatibility failures of a skew form are witnessed") {
  MockLieAlgebra a = corpus::algebra_a();
  Matrix w(4, 4);
  w(0, 1) = 1;
  w(1, 0) = -1;
  CheckReport rep = check_symplectic(a, w);
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.witnesses.empty());
  CHECK(rep.witnesses[0].indices == std::vector<int>{1, 1, 1});
  CHECK(rep.witnesses[0].lhs == Vec{-3});
}

TEST_CASE("induced cobracket satisfies the dual cyclic condition") {
  CheckReport rep = check_cosymplectic(corpus::delta_expected(), corpus::r_standard());
  CHECK(rep.pass);
  CHECK(rep.law == "cosymplectic");
}

TEST_CASE("dual cyclic condition fails with exact witnesses") {
  CheckReport rep = check_cosymplectic(pulse_coalgebra(), corpus::r_standard());
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witnesses.size() == 3);
  CHECK(rep.witnesses[0].indices == std::vector<int>{1, 1, 3});
  CHECK(rep.witnesses[1].indices == std::vector<int>{1, 3, 1});
  CHECK(rep.witnesses[2].indices == std::vector<int>{3, 1, 1});
  for (const auto& w : rep.witnesses) CHECK(w.lhs == Vec{1});
}

TEST_CASE("dual cyclic condition mirrors the cyclic form condition") {
  auto gen = corpus::seeded(43);
  for (int trial = 0; trial < 25; ++trial) {
    Tensor3 t(4, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) t(i, j, k) = corpus::small_q(gen);
    MockLieCoalgebra c{4, t};
    Matrix r = corpus::random_antisymmetric(gen, 4);
    bool dual_side = check_cosymplectic(c, r).pass;
    bool form_side = check_symplectic(dualize_coalgebra(c), r.transpose()).pass;
    CHECK(dual_side == form_side);
  }
}

TEST_CASE("operator from a symplectic pairing matches the frozen family") {
  MockLieAlgebra a = corpus::algebra_a();
  for (const Q& l : corpus::lambda_grid) {
    Matrix n = nijenhuis_from_symplectic(a, corpus::omega_reduced(l), corpus::r_standard());
    CHECK(n == corpus::n_from_pairing(l));
    CHECK(check_nijenhuis(a, n).pass);
  }
}

TEST_CASE("pairing construction attributes the failing hypothesis") {
  MockLieAlgebra a = corpus::algebra_a();
  // With the second parameter nonzero the form stays symplectic but the
  // induced cobracket is no longer dual-quasitriangular against it.
  try {
    nijenhuis_from_symplectic(a, corpus::omega_family(1, 2), corpus::r_standard());
    FAIL("expected a hypothesis failure");
  } catch (const HypothesisError& e) {
    CHECK(e.report.law == "dual-quasitriangular");
    REQUIRE_FALSE(e.report.witnesses.empty());
    CHECK(e.report.witnesses[0].indices == std::vector<int>{1, 1, 3});
    CHECK(e.report.witnesses[0].lhs == Vec{16});
  }
  // A non-skew form already fails the symplectic stage.
  Matrix bad(4, 4);
  bad(0, 0) = 1;
  try {
    nijenhuis_from_symplectic(a, bad, corpus::r_standard());
    FAIL("expected a hypothesis failure");
  } catch (const HypothesisError& e) {
    CHECK(e.report.law == "symplectic");
  }
}

TEST_CASE("coalgebra-side operator from a dual pairing matches its frozen form") {
  for (const Q& l : corpus::lambda_grid) {
    Matrix s = conijenhuis_from_cosymplectic(corpus::delta_expected(), corpus::omega_reduced(l),
                                             corpus::r_standard());
    Matrix expect(4, 4);
    expect(1, 0) = -l;
    CHECK(s == expect);
    CHECK(check_nijenhuis_coalgebra(corpus::delta_expected(), s).pass);
  }
}

TEST_CASE("dual pairing construction validates its hypotheses") {
  CHECK_THROWS_AS(
      conijenhuis_from_cosymplectic(pulse_coalgebra(), corpus::omega_reduced(1), corpus::r_standard()),
      HypothesisError);
}
