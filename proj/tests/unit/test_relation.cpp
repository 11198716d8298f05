#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "relcalc/errors.hpp"
#include "relcalc/relation.hpp"
#include "support/generators.hpp"

using namespace relcalc;
using testgen::Rng;

namespace {

Vector unit(Eigen::Index n, Eigen::Index i) {
  Vector e = Vector::Zero(n);
  e(i) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("graph of the zero matrix") {
  const LinearRelation T = LinearRelation::graph(Matrix::Zero(3, 3));
  const RelationParts p = parts(T);
  CHECK(p.ker.dim() == 3);
  CHECK(p.mul.dim() == 0);
  CHECK(p.dom.dim() == 3);
}

TEST_CASE("graph of the identity is the diagonal") {
  const LinearRelation T = LinearRelation::graph(Matrix::Identity(4, 4));
  CHECK(T.dim() == 4);
  CHECK(inverse(T).equals(T));
}

TEST_CASE("purely multivalued relation") {
  const LinearRelation T =
      LinearRelation::from_pairs({{Vector::Zero(2), unit(2, 0)}});
  const RelationParts p = parts(T);
  CHECK(p.dom.dim() == 0);
  CHECK(p.mul.equals(Subspace::span(std::vector<Vector>{unit(2, 0)})));
  const auto c = classify(T);
  CHECK(c.is_symmetric);
  CHECK(c.is_dissipative);
  CHECK_FALSE(c.is_operator);
}

TEST_CASE("parts of a graph and kernel of the matrix") {
  Rng rng(21);
  Matrix A = testgen::random_matrix(rng, 4, 4);
  A.col(3) = A.col(0);  // force a nullspace
  const RelationParts p = parts(LinearRelation::graph(A));
  CHECK(p.dom.dim() == 4);
  CHECK(p.mul.dim() == 0);
  CHECK(p.ker.dim() == 4 - testgen::elimination_rank(A));
}

TEST_CASE("inverse swaps dom/ran and ker/mul") {
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    const LinearRelation T = testgen::random_relation(rng, 4, 3);
    const RelationParts p = parts(T), pi = parts(inverse(T));
    CHECK(p.dom.equals(pi.ran));
    CHECK(p.ran.equals(pi.dom));
    CHECK(p.ker.equals(pi.mul));
    CHECK(p.mul.equals(pi.ker));
  }
}

TEST_CASE("hand-enumerated two-pair relation") {
  const LinearRelation T = LinearRelation::from_pairs(
      {{unit(2, 0), unit(2, 0)}, {Vector::Zero(2), unit(2, 1)}});
  const RelationParts p = parts(T);
  CHECK(p.dom.equals(Subspace::span(std::vector<Vector>{unit(2, 0)})));
  CHECK(p.mul.equals(Subspace::span(std::vector<Vector>{unit(2, 1)})));
}

TEST_CASE("rotate_W squared negates pairs, fixes the subspace") {
  Rng rng(23);
  const LinearRelation T = testgen::random_relation(rng, 3, 2);
  const LinearRelation WW = rotate_W(rotate_W(T));
  CHECK(WW.equals(T));
  // On explicit pair vectors W^2 is multiplication by -1.
  const Vector f = T.f_block().col(0), g = T.g_block().col(0);
  CHECK((rotate_W(rotate_W(T)).space().member(
      (Matrix(2 * 3, 1) << -f, -g).finished().col(0))));
}

TEST_CASE("inverse of an invertible graph is the graph of the inverse") {
  Rng rng(24);
  for (int t = 0; t < 10; ++t) {
    const Matrix A =
        testgen::random_matrix(rng, 3, 3) + 3.0 * Matrix::Identity(3, 3);
    CHECK(inverse(LinearRelation::graph(A))
              .equals(LinearRelation::graph(A.inverse())));
  }
}

TEST_CASE("adjoint of a graph is the graph of the conjugate transpose") {
  Rng rng(25);
  const Matrix A = testgen::random_matrix(rng, 4, 4);
  CHECK(adjoint(LinearRelation::graph(A))
            .equals(LinearRelation::graph(A.adjoint())));
}

TEST_CASE("adjoint involution and multivalued-domain duality") {
  Rng rng(26);
  std::uniform_int_distribution<int> dims(1, 7);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = 4;
    const LinearRelation T = testgen::random_relation(rng, n, dims(rng));
    CHECK(adjoint(adjoint(T)).equals(T));
    CHECK(parts(T).mul.equals(parts(adjoint(T)).dom.complement()));
  }
}

TEST_CASE("sum and composition of graphs") {
  Rng rng(27);
  const Matrix A = testgen::random_matrix(rng, 3, 3);
  const Matrix B = testgen::random_matrix(rng, 3, 3);
  CHECK(add(LinearRelation::graph(A), LinearRelation::graph(B))
            .equals(LinearRelation::graph(A + B)));
  CHECK(compose(LinearRelation::graph(B), LinearRelation::graph(A))
            .equals(LinearRelation::graph(B * A)));
}

TEST_CASE("inverse of a composition reverses the factors") {
  Rng rng(28);
  for (int t = 0; t < 20; ++t) {
    const LinearRelation T = testgen::random_relation(rng, 3, 2);
    const LinearRelation S = testgen::random_relation(rng, 3, 2);
    CHECK(inverse(compose(S, T)).equals(compose(inverse(T), inverse(S))));
  }
}

TEST_CASE("direct_sum rejects overlapping summands") {
  const LinearRelation T = LinearRelation::graph(Matrix::Identity(2, 2));
  CHECK_THROWS_AS(direct_sum(T, T), NonTrivialIntersection);
}

TEST_CASE("operator and multivalued parts") {
  Rng rng(29);
  const Matrix A = testgen::random_matrix(rng, 3, 3);
  CHECK(operator_part(LinearRelation::graph(A))
            .equals(LinearRelation::graph(A)));

  // Operator acting on e1 only, plus a multivalued direction e2.
  const LinearRelation T = LinearRelation::from_pairs(
      {{unit(2, 0), Vector::Zero(2)}, {Vector::Zero(2), unit(2, 1)}});
  const LinearRelation op = operator_part(T);
  CHECK(parts(op).dom.equals(Subspace::span(std::vector<Vector>{unit(2, 0)})));
  CHECK(multivalued_part(T).dim() == 1);
  CHECK(parts(multivalued_part(T)).mul.equals(Subspace::span(std::vector<Vector>{unit(2, 1)})));
}

TEST_CASE("reduction of a dissipative relation is its operator part") {
  Rng rng(30);
  for (int t = 0; t < 20; ++t) {
    // Dissipative relations satisfy dom T inside (mul T)^perp.
    const LinearRelation T = testgen::random_dissipative_relation(rng, 4, 3);
    CHECK(parts(T).mul.complement().contains(parts(T).dom));
    CHECK(reduce(T, T).equals(operator_part(T)));
  }
}

TEST_CASE("classifier basics") {
  const Eigen::Index n = 3;
  const Complex I(0.0, 1.0);
  const auto ci = classify(LinearRelation::graph(I * Matrix::Identity(n, n)));
  CHECK(ci.is_dissipative);
  CHECK_FALSE(ci.is_symmetric);

  Rng rng(31);
  const Matrix H = testgen::random_hermitian(rng, n);
  const auto ch = classify(LinearRelation::graph(H));
  CHECK(ch.is_symmetric);
  CHECK(ch.is_selfadjoint);
  CHECK(ch.is_maximal_dissipative);
}

TEST_CASE("classifier implication chain on random instances") {
  Rng rng(32);
  std::uniform_int_distribution<int> dims(1, 6);
  for (int t = 0; t < 100; ++t) {
    LinearRelation T(3);
    switch (t % 4) {
      case 0: T = testgen::random_relation(rng, 3, dims(rng)); break;
      case 1: T = testgen::random_symmetric_relation(rng, 3, 2); break;
      case 2: T = testgen::random_isometric_relation(rng, 3, 2); break;
      default:
        T = LinearRelation::graph(testgen::random_unitary(rng, 3));
        break;
    }
    const auto c = classify(T);
    if (c.is_selfadjoint) CHECK(c.is_symmetric);
    if (c.is_symmetric) CHECK(c.is_dissipative);
    if (c.is_positive) CHECK(c.is_symmetric);
    if (c.is_unitary) CHECK(c.is_isometry);
    if (c.is_isometry) CHECK(c.is_contraction);
  }
}

TEST_CASE("deficiency spaces and indices") {
  Rng rng(33);
  const Matrix H = testgen::random_hermitian(rng, 4);
  CHECK(deficiency_index(LinearRelation::graph(H), Complex(0.0, 1.0)) == 0);

  // dim N_{conj zeta}(T*) equals the deficiency index of T at zeta.
  for (int t = 0; t < 20; ++t) {
    const LinearRelation T = testgen::random_relation(rng, 4, 3);
    const Complex zeta = testgen::random_complex(rng);
    if (deficiency_space(T, zeta).dim() > 0) continue;  // need quasi-regular
    CHECK(deficiency_space(adjoint(T), std::conj(zeta)).dim() ==
          deficiency_index(T, zeta));
  }
}

TEST_CASE("operator norms") {
  CHECK(operator_norm(LinearRelation::graph(Matrix::Identity(3, 3))) ==
        doctest::Approx(1.0));
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 3.0;
  D(1, 1) = Complex(0.0, 4.0);
  CHECK(operator_norm(LinearRelation::graph(D)) == doctest::Approx(4.0));
  const LinearRelation M =
      LinearRelation::from_pairs({{Vector::Zero(2), unit(2, 0)}});
  CHECK_THROWS_AS(operator_norm(M), NotAnOperator);
}

TEST_CASE("relative bounds") {
  const LinearRelation T = LinearRelation::graph(Matrix::Identity(3, 3));
  CHECK(relative_bound(LinearRelation::graph(Matrix::Zero(3, 3)), T) ==
        doctest::Approx(0.0));
  CHECK(relative_bound(T, T) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("adjoint of a sum of graphs splits") {
  Rng rng(34);
  const Matrix A = testgen::random_matrix(rng, 3, 3);
  const Matrix B = testgen::random_matrix(rng, 3, 3);
  const LinearRelation lhs =
      adjoint(add(LinearRelation::graph(A), LinearRelation::graph(B)));
  const LinearRelation rhs = add(adjoint(LinearRelation::graph(A)),
                                 adjoint(LinearRelation::graph(B)));
  CHECK(lhs.equals(rhs));
}

TEST_CASE("scaled adjoint identity") {
  Rng rng(35);
  for (int t = 0; t < 20; ++t) {
    const LinearRelation T = testgen::random_relation(rng, 3, 2);
    const Complex alpha = testgen::random_complex(rng) + Complex(2.0, 0.0);
    CHECK(adjoint(scale(alpha, T)).equals(scale(std::conj(alpha), adjoint(T))));
  }
}

TEST_CASE("range-kernel orthogonal decomposition") {
  Rng rng(36);
  for (int t = 0; t < 20; ++t) {
    const LinearRelation T = testgen::random_relation(rng, 4, 3);
    CHECK(parts(T).ran.complement().equals(parts(adjoint(T)).ker));
  }
}

TEST_CASE("adjoint reverses containment") {
  Rng rng(37);
  for (int t = 0; t < 20; ++t) {
    const LinearRelation T = testgen::random_relation(rng, 3, 3);
    const LinearRelation S = LinearRelation::from_stacked(
        3, T.space().basis().leftCols(2), T.tol());
    CHECK(T.contains(S));
    CHECK(adjoint(S).contains(adjoint(T)));
  }
}
