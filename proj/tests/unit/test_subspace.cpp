#include <doctest.h>

#include "relcalc/subspace.hpp"
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

TEST_CASE("span of duplicate vectors collapses") {
  const Subspace S = Subspace::span(std::vector<Vector>{unit(2, 0), unit(2, 0)});
  CHECK(S.dim() == 1);
  CHECK(S.member(unit(2, 0)));
  CHECK_FALSE(S.member(unit(2, 1)));
}

TEST_CASE("span of the zero vector is the zero subspace") {
  const Subspace S = Subspace::span(std::vector<Vector>{Vector::Zero(3)});
  CHECK(S.dim() == 0);
}

TEST_CASE("rank of random spans matches an elimination oracle") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Matrix A = testgen::random_matrix(rng, 3, 5);
    const Subspace S = Subspace::span(A);
    CHECK(S.dim() == testgen::elimination_rank(A));
    const Matrix P = S.projector();
    CHECK(spectral_norm(P * P - P) <= 1e-10);
    CHECK(spectral_norm(P - P.adjoint()) <= 1e-12);
  }
}

TEST_CASE("complement basics in C^2") {
  const Subspace S = Subspace::span(std::vector<Vector>{unit(2, 0)});
  CHECK(S.complement().equals(Subspace::span(std::vector<Vector>{unit(2, 1)})));
  const Subspace Z(2);
  CHECK(Z.complement().equals(Subspace::full(2)));
}

TEST_CASE("double complement is the identity") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const Subspace S = Subspace::span(testgen::random_matrix(rng, 5, 2));
    CHECK(testgen::projector_distance(S.complement().complement(), S) <= 1e-10);
  }
}

TEST_CASE("sum and intersect basics") {
  const Subspace A = Subspace::span(std::vector<Vector>{unit(3, 0)});
  const Subspace B = Subspace::span(std::vector<Vector>{unit(3, 1)});
  CHECK(A.sum(B).equals(Subspace::span(std::vector<Vector>{unit(3, 0), unit(3, 1)})));
  CHECK(A.intersect(A.complement()).dim() == 0);
}

TEST_CASE("Grassmann dimension formula on random pairs") {
  Rng rng(13);
  std::uniform_int_distribution<int> d(0, 4);
  for (int t = 0; t < 100; ++t) {
    const Subspace A = Subspace::span(testgen::random_matrix(rng, 4, d(rng)));
    const Subspace B = Subspace::span(testgen::random_matrix(rng, 4, d(rng)));
    // Oracle: dim(A+B) from the rank of the stacked basis matrix.
    Matrix stacked(4, A.dim() + B.dim());
    stacked << A.basis(), B.basis();
    const Eigen::Index sum_dim = testgen::elimination_rank(stacked);
    CHECK(A.sum(B).dim() == sum_dim);
    CHECK(A.sum(B).dim() + A.intersect(B).dim() == A.dim() + B.dim());
  }
}

TEST_CASE("membership is invariant under basis enlargement") {
  Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    const Subspace S = Subspace::span(testgen::random_matrix(rng, 4, 2));
    const Vector v = testgen::random_vector(rng, 4);
    Matrix enlarged(4, S.dim() + 1);
    enlarged << S.basis(), v;
    const bool inside = Subspace::span(enlarged).dim() == S.dim();
    CHECK(S.member(v) == inside);
    CHECK(S.member(S.basis() * testgen::random_vector(rng, S.dim())));
  }
}

TEST_CASE("equality is basis independent") {
  Rng rng(15);
  const Subspace S = Subspace::span(testgen::random_matrix(rng, 4, 2));
  const Matrix mix = S.basis() * testgen::random_unitary(rng, 2);
  CHECK(S.equals(Subspace::span(mix)));
}
