#include <doctest.h>

#include "helpers.hpp"

using namespace lindoa;
using test::random_complex;

TEST_CASE("hs_inner matches its definition") {
  Operator i2 = identity_op(HilbertDim(2));
  CHECK(hs_inner(i2, i2) == Complex(2.0));
  Operator sz = pauli('Z');
  CHECK(hs_inner(sz, sz) == Complex(2.0));

  // brute-force elementwise sum on random inputs
  Operator a(random_complex(5, 5)), b(random_complex(5, 5));
  Complex direct = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) direct += std::conj(a.entries(i, j)) * b.entries(i, j);
  CHECK(std::abs(hs_inner(a, b) - direct) < 1e-12);
  CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
}

TEST_CASE("hs_inner is sesquilinear") {
  Operator a(random_complex(3, 3)), b(random_complex(3, 3)), c(random_complex(3, 3));
  Complex alpha(0.7, -1.3), beta(-0.2, 0.4);
  Complex lhs = hs_inner(a, alpha * b + beta * c);
  CHECK(std::abs(lhs - (alpha * hs_inner(a, b) + beta * hs_inner(a, c))) < 1e-12);
  Complex lhs2 = hs_inner(alpha * a, b);
  CHECK(std::abs(lhs2 - std::conj(alpha) * hs_inner(a, b)) < 1e-12);
}

TEST_CASE("hs_norm basics and triangle inequality") {
  CHECK(hs_norm(zero_op(HilbertDim(3))) == 0.0);
  CHECK(hs_norm(0.5 * identity_op(HilbertDim(2))) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CVec psi = qubit_ket("01");
  Operator pure(HilbertDim(4, {2, 2}), psi * psi.adjoint());
  CHECK(hs_norm(pure) == doctest::Approx(1.0));
  for (int trial = 0; trial < 20; ++trial) {
    Operator a(random_complex(4, 4)), b(random_complex(4, 4));
    CHECK(hs_norm(a + b) <= hs_norm(a) + hs_norm(b) + 1e-12);
  }
}

TEST_CASE("kron products") {
  Operator i2 = identity_op(HilbertDim(2));
  CHECK((kron(i2, i2).entries - CMat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  // direct Kronecker expansion: sigma^- = |1><0| has its 1 at row 0, col 1,
  // so sigma^- (x) I2 carries 1's at (0,2) and (1,3)
  Operator sm_i = kron(pauli('-'), i2);
  CMat want = CMat::Zero(4, 4);
  want(0, 2) = 1.0;
  want(1, 3) = 1.0;
  CHECK((sm_i.entries - want).cwiseAbs().maxCoeff() == 0.0);
  CHECK(sm_i.dim.factors == std::vector<int>{2, 2});

  // mixed-product property on random 2x2 inputs
  for (int trial = 0; trial < 10; ++trial) {
    Operator a(random_complex(2, 2)), b(random_complex(2, 2)), c(random_complex(2, 2)),
        d(random_complex(2, 2));
    CHECK(hs_distance(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }

  // associativity, exact on integer entries
  CMat ia = (CMat(2, 2) << 1, 2, 3, 4).finished();
  CMat ib = (CMat(2, 2) << 0, 1, 1, 0).finished();
  CMat ic = (CMat(2, 2) << 2, 0, 0, 5).finished();
  Operator a(ia), b(ib), c(ic);
  CHECK((kron(kron(a, b), c).entries - kron(a, kron(b, c)).entries).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embed_site places operators and keeps distinct sites commuting") {
  HilbertDim two(4, {2, 2});
  CHECK(hs_distance(embed_site(pauli('Z'), 0, two), kron(pauli('Z'), identity_op(HilbertDim(2)))) ==
        0.0);

  HilbertDim four(16, {2, 2, 2, 2});
  Operator sigma1m = embed_site(pauli('-'), 0, four);
  Operator manual = kron(pauli('-'), identity_op(HilbertDim(8, {2, 2, 2})));
  CHECK(hs_distance(sigma1m, manual) == 0.0);

  for (int trial = 0; trial < 10; ++trial) {
    Operator a(random_complex(2, 2)), b(random_complex(2, 2));
    Operator ea = embed_site(a, 1, four), eb = embed_site(b, 3, four);
    CHECK(hs_distance(ea * eb, eb * ea) < 1e-12);
  }

  CHECK_THROWS_AS(embed_site(pauli('Z'), 4, four), std::invalid_argument);
  CHECK_THROWS_AS(embed_site(pauli('Z'), 0, HilbertDim(4)), std::invalid_argument);
}

TEST_CASE("vectorize is the column-stacking bijection") {
  CVec vi = vectorize(identity_op(HilbertDim(2)));
  CHECK(vi(0) == Complex(1.0));
  CHECK(vi(1) == Complex(0.0));
  CHECK(vi(2) == Complex(0.0));
  CHECK(vi(3) == Complex(1.0));

  // |1><0| has entry (0,1); column stacking puts it at index 0 + 2*1 = 2
  CVec vm = vectorize(pauli('-'));
  CHECK(vm(2) == Complex(1.0));
  CHECK(vm(0) == Complex(0.0));
  CHECK(vm(1) == Complex(0.0));
  CHECK(vm(3) == Complex(0.0));

  for (int trial = 0; trial < 10; ++trial) {
    Operator a(random_complex(3, 3)), b(random_complex(3, 3));
    CHECK(hs_distance(devectorize(vectorize(a)), a) == 0.0);
    Complex via_vec = (vectorize(a).adjoint() * vectorize(b))(0, 0);
    CHECK(std::abs(hs_inner(a, b) - via_vec) < 1e-12);
  }

  CHECK_THROWS_AS(devectorize(CVec::Zero(5)), std::invalid_argument);
}

TEST_CASE("density validation accepts states and names violations") {
  Tolerances tol;
  CHECK(check_density(0.5 * identity_op(HilbertDim(2)), tol).ok);

  CMat bad = CMat::Zero(2, 2);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  DensityCheck check = check_density(Operator(bad), tol);
  CHECK_FALSE(check.ok);
  CHECK(check.min_eigenvalue == doctest::Approx(-0.5));
  CHECK(check.violation.find("PSD") != std::string::npos);
  CHECK_THROWS_AS(make_density(Operator(bad), tol), std::invalid_argument);

  CVec psi = (qubit_ket("0110") - qubit_ket("1001")) / std::sqrt(2.0);
  CHECK(check_density(Operator(psi * psi.adjoint()), tol).ok);

  CMat nh = CMat::Zero(2, 2);
  nh(0, 1) = 1.0;
  nh(0, 0) = 0.5;
  nh(1, 1) = 0.5;
  CHECK(check_density(Operator(nh), tol).violation.find("hermiticity") != std::string::npos);

  CHECK_FALSE(check_density(identity_op(HilbertDim(2)), tol).ok);  // trace 2
}

TEST_CASE("qubit kets follow the fixed basis ordering") {
  CVec k1 = qubit_ket("1");
  CHECK(k1(0) == Complex(1.0));
  CHECK(k1(1) == Complex(0.0));
  CVec k0110 = qubit_ket("0110");
  // |0110>: site bits map 1 -> index 0, 0 -> index 1, leftmost most significant
  int idx = (1 << 3) + (0 << 2) + (0 << 1) + 1;
  for (int i = 0; i < 16; ++i) CHECK(k0110(i) == (i == idx ? Complex(1.0) : Complex(0.0)));
}
