#include <doctest.h>

#include "equiknot/laurent.hpp"

using equiknot::Laurent;

TEST_CASE("monomial arithmetic") {
  Laurent a = Laurent::monomial(2, 3);
  Laurent b = Laurent::monomial(-1, -2);
  Laurent sum = a + b;
  CHECK(sum.coeff(2) == 3);
  CHECK(sum.coeff(-1) == -2);
  CHECK(sum.coeff(0) == 0);

  Laurent prod = a * b;
  CHECK(prod.coeff(1) == -6);
  CHECK(prod.terms().size() == 1);
}

TEST_CASE("zero coefficients are never stored") {
  Laurent p = Laurent::monomial(5, 7);
  p.add_coeff(5, -7);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());

  Laurent q = Laurent::one() - Laurent::one();
  CHECK(q.is_zero());
}

TEST_CASE("mirror and canonical form") {
  Laurent trefoil;  // -t^-4 + t^-3 + t^-1
  trefoil.set_coeff(-4, -1);
  trefoil.set_coeff(-3, 1);
  trefoil.set_coeff(-1, 1);

  Laurent m = trefoil.mirrored();
  CHECK(m.coeff(4) == -1);
  CHECK(m.coeff(3) == 1);
  CHECK(m.coeff(1) == 1);
  CHECK(equal_up_to_mirror(trefoil, m));
  CHECK(trefoil.mirror_canonical() == m.mirror_canonical());
  CHECK(trefoil.mirrored().mirrored() == trefoil);
}

TEST_CASE("span and evaluation at -1") {
  Laurent trefoil;
  trefoil.set_coeff(-4, -1);
  trefoil.set_coeff(-3, 1);
  trefoil.set_coeff(-1, 1);
  CHECK(trefoil.span() == 3);
  CHECK(trefoil.eval_at_minus_one() == -3);  // |V(-1)| = det = 3

  Laurent fig8;  // t^-2 - t^-1 + 1 - t + t^2
  fig8.set_coeff(-2, 1);
  fig8.set_coeff(-1, -1);
  fig8.set_coeff(0, 1);
  fig8.set_coeff(1, -1);
  fig8.set_coeff(2, 1);
  CHECK(fig8.span() == 4);
  CHECK(fig8.eval_at_minus_one() == 5);
  CHECK(fig8.mirrored() == fig8);  // amphichiral
}

TEST_CASE("exponent rescaling") {
  Laurent p = Laurent::monomial(-12, 1) + Laurent::monomial(4, 2);
  CHECK(p.exponents_divisible_by(4));
  Laurent q = p.with_exponents_divided(-4);
  CHECK(q.coeff(3) == 1);
  CHECK(q.coeff(-1) == 2);
  CHECK_FALSE((Laurent::monomial(2, 1) + p).exponents_divisible_by(4));
}

TEST_CASE("printing") {
  Laurent p;
  p.set_coeff(-4, -1);
  p.set_coeff(-3, 1);
  p.set_coeff(-1, 1);
  CHECK(p.to_string() == "-t^-4 + t^-3 + t^-1");
  CHECK(Laurent::one().to_string() == "1");
  CHECK(Laurent::zero().to_string() == "0");
  CHECK(Laurent::monomial(1, -2).to_string() == "-2*t");
}

TEST_CASE("product of joneses stays exact") {
  Laurent t3;  // left trefoil
  t3.set_coeff(-4, -1);
  t3.set_coeff(-3, 1);
  t3.set_coeff(-1, 1);
  Laurent sq = t3 * t3;
  // (-t^-4 + t^-3 + t^-1)^2
  CHECK(sq.coeff(-8) == 1);
  CHECK(sq.coeff(-7) == -2);
  CHECK(sq.coeff(-6) == 1);
  CHECK(sq.coeff(-5) == -2);
  CHECK(sq.coeff(-4) == 2);
  CHECK(sq.coeff(-2) == 1);
  CHECK(sq.eval_at_minus_one() == 9);
}
