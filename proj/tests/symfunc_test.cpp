#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "hyperchar/partition.hpp"
#include "hyperchar/structures.hpp"
#include "hyperchar/symfunc.hpp"

using namespace hyperchar;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

SymFunc T(std::vector<int> parts, TPoly c, int cap) {
  return SymFunc::term(P(std::move(parts)), std::move(c), cap);
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(P({3, 1, 1}).weight() == 5);
  CHECK(P({3, 1, 1}).length() == 3);
  CHECK(P({3, 1, 1}).mult(1) == 2);
  CHECK(P({3, 1, 1}).mult(2) == 0);
  CHECK(P({3, 1, 1}).str() == "[3,1,1]");
  CHECK(Partition().weight() == 0);
  CHECK(Partition().empty());

  // z_lambda = prod k^{m_k} m_k!
  CHECK(P({1, 1, 1}).z() == 6);
  CHECK(P({2, 1}).z() == 2);
  CHECK(P({3}).z() == 3);
  CHECK(P({2, 2}).z() == 8);
  CHECK(P({4, 2, 1, 1}).z() == 16);

  CHECK(P({2, 1}).merged(P({3, 1})) == P({3, 2, 1, 1}));
  CHECK(P({2, 1}).stretched(3) == P({6, 3}));
  CHECK(P({2, 1, 1}).without_one_part_one() == P({2, 1}));
  CHECK_THROWS_AS(P({2}).without_one_part_one(), std::logic_error);

  auto parts4 = partitions_of(4);
  REQUIRE(parts4.size() == 5);
  CHECK(parts4[0] == P({1, 1, 1, 1}));
  CHECK(parts4[1] == P({2, 1, 1}));
  CHECK(parts4[2] == P({2, 2}));
  CHECK(parts4[3] == P({3, 1}));
  CHECK(parts4[4] == P({4}));
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(8).size() == 22);

  CHECK(P({2, 1}) < P({3}));      // same weight, lex on parts
  CHECK(P({3}) < P({1, 1, 1, 1}));  // weight first
}

TEST_CASE("SymFunc arithmetic basics") {
  const int cap = 5;
  SymFunc p1 = SymFunc::p(1, cap);
  SymFunc p2 = SymFunc::p(2, cap);
  CHECK((p1 * p1).coeff(P({1, 1})) == TPoly(1));
  CHECK((p1 * p2).coeff(P({2, 1})) == TPoly(1));
  CHECK((p1 * p1 * p1 * p1 * p1 * p1).is_zero());  // degree 6 > cap

  SymFunc f = p1.scaled(Rational(1, 2)) + p2.scaled(TPoly::t());
  CHECK(f.coeff(P({1})) == TPoly(Rational(1, 2)));
  CHECK(f.coeff(P({2})) == TPoly::t());
  CHECK(f.homogeneous(1) == p1.scaled(Rational(1, 2)));
  CHECK(f.homogeneous(3).is_zero());
  CHECK(f.times_t(1).coeff(P({2})) == TPoly::t(2));
  CHECK((f - f).is_zero());
  CHECK(SymFunc::first_difference(f, f) == -1);
  CHECK(SymFunc::first_difference(f, p1) == 1);
  CHECK(SymFunc::first_difference(f, p1.scaled(Rational(1, 2)) +
                                         p2.scaled(TPoly::t(2))) == 2);
  // Comparison against a shorter truncation only looks below the common cap.
  CHECK(SymFunc::first_difference(f, f.truncated(1)) == -1);

  CHECK(f.truncated(1).cap() == 1);
  CHECK(f.truncated(1).coeff(P({2})).is_zero());

  CHECK(SymFunc::one(cap).coeff(Partition()) == TPoly(1));
  CHECK_THROWS_AS(SymFunc::p(0, cap), std::invalid_argument);
}

TEST_CASE("stretching and plethysm") {
  const int cap = 6;
  SymFunc p1 = SymFunc::p(1, cap);
  SymFunc p2 = SymFunc::p(2, cap);

  CHECK(p1.stretched(2) == p2);
  // t is stretched along with the parts.
  SymFunc g = T({1}, TPoly::t(), cap);
  CHECK(g.stretched(3) == T({3}, TPoly::t(3), cap));

  // p_k plethysm g = g stretched by k.
  SymFunc h = T({2}, TPoly::t(), cap) + T({1, 1}, TPoly(Rational(1, 3)), cap);
  CHECK(p2.plethysm(h) == h.stretched(2));
  CHECK(p1.plethysm(h) == h);

  // plethysm is associative.
  SymFunc f = operad_cyc(cap);
  SymFunc k = T({1}, TPoly(1) + TPoly::t(), cap) + T({2, 1}, TPoly::t(2), cap);
  CHECK(f.plethysm(h).plethysm(k) == f.plethysm(h.plethysm(k)));

  // and linear in the outer argument.
  SymFunc a = operad_comm(cap), b = operad_lie(cap);
  CHECK((a + b).plethysm(h) == a.plethysm(h) + b.plethysm(h));

  // g may not have a degree-0 term.
  CHECK_THROWS_AS(p1.plethysm(SymFunc::one(cap)), std::invalid_argument);
}

TEST_CASE("suspension") {
  const int cap = 5;
  SymFunc p1 = SymFunc::p(1, cap);
  CHECK(p1.suspension() == p1);
  CHECK(SymFunc::p(2, cap).suspension() == T({2}, TPoly::t(), cap));
  CHECK((p1 * p1).suspension() == T({1, 1}, -TPoly::t(), cap));
  CHECK(T({2, 1}, TPoly(1), cap).suspension() == T({2, 1}, -TPoly::t(2), cap));

  // Involution at t = 1 on a t-free argument.
  SymFunc prelie = operad_prelie(cap);
  auto s1 = [](const SymFunc& f) { return f.suspension().eval_t(1); };
  CHECK(s1(s1(prelie)) == prelie);

  // At t = 1 the suspension is anti-multiplicative.
  SymFunc a = operad_comm(cap) - SymFunc::one(cap);
  SymFunc b = operad_lie(cap);
  CHECK(s1(a * b) == -(s1(a) * s1(b)));
}

TEST_CASE("d_p1 and invert_unit") {
  const int cap = 5;
  SymFunc p1 = SymFunc::p(1, cap);
  SymFunc f = T({1, 1, 1}, TPoly(1), cap) + T({2, 1}, TPoly::t(), cap) +
              T({3}, TPoly(2), cap);
  SymFunc df = f.d_p1();
  CHECK(df.coeff(P({1, 1})) == TPoly(3));
  CHECK(df.coeff(P({2})) == TPoly::t());
  CHECK(df.coeff(P({3})).is_zero());

  // d/dp1 commutes with suspension up to the factor -t (degree n -> n-1).
  SymFunc g = T({1, 1}, TPoly(1), cap);
  CHECK(g.suspension().d_p1() == g.d_p1().suspension().times_t(1).scaled(Rational(-1)));

  SymFunc u = SymFunc::one(cap) + p1;
  SymFunc inv = u.invert_unit();
  CHECK(u * inv == SymFunc::one(cap));
  for (int n = 0; n <= cap; ++n) {
    Rational expect = (n % 2 == 0) ? 1 : -1;  // 1/(1+p1) = sum (-p1)^n
    CHECK(inv.coeff(P(std::vector<int>(n, 1))) == TPoly(expect));
  }
  CHECK_THROWS_AS(p1.invert_unit(), std::invalid_argument);
}

TEST_CASE("operad characters, pinned small degrees") {
  const int cap = 4;
  SymFunc comm = operad_comm(cap);
  // Comm_n = sum over partitions of n of p_lambda / z_lambda = h_n.
  CHECK(comm.coeff(Partition()).is_zero());
  CHECK(comm.homogeneous(2) ==
        T({1, 1}, TPoly(Rational(1, 2)), cap) + T({2}, TPoly(Rational(1, 2)), cap));
  CHECK(comm.homogeneous(3) == T({1, 1, 1}, TPoly(Rational(1, 6)), cap) +
                                   T({2, 1}, TPoly(Rational(1, 2)), cap) +
                                   T({3}, TPoly(Rational(1, 3)), cap));

  SymFunc assoc = operad_assoc(cap);
  for (int n = 1; n <= cap; ++n)
    CHECK(assoc.homogeneous(n) == T(std::vector<int>(n, 1), TPoly(1), cap));

  SymFunc lie = operad_lie(cap);
  CHECK(lie.homogeneous(2) ==
        T({1, 1}, TPoly(Rational(1, 2)), cap) - T({2}, TPoly(Rational(1, 2)), cap));
  CHECK(lie.homogeneous(3) ==
        T({1, 1, 1}, TPoly(Rational(1, 3)), cap) - T({3}, TPoly(Rational(1, 3)), cap));

  SymFunc prelie = operad_prelie(cap);
  CHECK(prelie.homogeneous(1) == SymFunc::p(1, cap));
  CHECK(prelie.homogeneous(2) == T({1, 1}, TPoly(1), cap));
  CHECK(prelie.homogeneous(3) ==
        T({1, 1, 1}, TPoly(Rational(3, 2)), cap) + T({2, 1}, TPoly(Rational(1, 2)), cap));

  SymFunc perm = operad_perm(cap);
  CHECK(perm == SymFunc::p(1, cap) * (SymFunc::one(cap) + comm));

  CHECK(operad("Comm", cap) == comm);
  CHECK(operad("PreLie", cap) == prelie);
  CHECK_THROWS_AS(operad("comm", cap), std::invalid_argument);
}

TEST_CASE("Cyc character against brute-force fixed necklaces") {
  // A cyclic order on {0..n-1} is a sequence starting at 0; sigma fixes it
  // when applying sigma pointwise gives a rotation of the same cycle.
  for (int n = 1; n <= 6; ++n) {
    SymFunc cyc = operad_cyc(n);
    std::vector<std::vector<int>> cycles;
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
      std::vector<int> c{0};
      c.insert(c.end(), rest.begin(), rest.end());
      cycles.push_back(c);
    } while (std::next_permutation(rest.begin(), rest.end()));

    auto canon = [&](std::vector<int> c) {
      auto it = std::find(c.begin(), c.end(), 0);
      std::rotate(c.begin(), it, c.end());
      return c;
    };
    for (const Partition& lam : partitions_of(n)) {
      Perm sigma = perm_from_cycle_type(lam, n);
      long long fixed = 0;
      for (const auto& c : cycles) {
        std::vector<int> image(c.size());
        for (size_t i = 0; i < c.size(); ++i) image[i] = sigma[c[i]];
        if (canon(image) == c) ++fixed;
      }
      CHECK(cyc.coeff(lam) == TPoly(Rational(fixed) / Rational(Int(lam.z()))));
    }
  }
}

TEST_CASE("exponential specialization") {
  const int cap = 6;
  // Comm -> exp(x) - 1
  Series sc = operad_comm(cap).exp_specialize();
  CHECK(sc.coeff(0).is_zero());
  for (int n = 1; n <= cap; ++n) CHECK(sc.coeff(n) == MultiPoly(1));
  // Lie -> -log(1-x): c_n = (n-1)!
  Series sl = operad_lie(cap).exp_specialize();
  for (int n = 1; n <= cap; ++n)
    CHECK(sl.coeff(n) == MultiPoly(Rational(factorial(n - 1))));
  // PreLie -> rooted trees: c_n = n^{n-1}
  Series sp = operad_prelie(cap).exp_specialize();
  for (int n = 1; n <= cap; ++n)
    CHECK(sp.coeff(n) == MultiPoly(rational_pow(Rational(n), n - 1)));
}

TEST_CASE("symfunc fixpoint solver") {
  // h = p1 + p1 h  =>  h = sum_n p1^n.
  SymFunc geo = solve_symfunc_fixpoint(
      [](const SymFunc& h) {
        SymFunc p1 = SymFunc::p(1, h.cap());
        return p1 + p1 * h;
      },
      5);
  for (int n = 1; n <= 5; ++n)
    CHECK(geo.coeff(P(std::vector<int>(n, 1))) == TPoly(1));

  CHECK_THROWS_AS(solve_symfunc_fixpoint(
                      [](const SymFunc& h) { return h + SymFunc::p(1, h.cap()); }, 3),
                  ConsistencyError);
}

TEST_CASE("operad identity checks all pass") {
  auto checks = verify_identities(6);
  REQUIRE(checks.size() == 6);
  const char* names[] = {"koszul_comm", "poisson",        "koszul_perm",
                         "vertebres",   "prelie_product", "somme1"};
  for (size_t i = 0; i < checks.size(); ++i) {
    CHECK(checks[i].name == names[i]);
    CHECK(checks[i].pass);
    CHECK(checks[i].first_bad_degree == -1);
  }
}

TEST_CASE("degree_json layout") {
  SymFunc f = T({2, 1}, TPoly::t() * Rational(1, 2), 4) + T({1}, TPoly(1), 4);
  auto j = f.degree_json(3);
  CHECK(j["degree"] == 3);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["partition"] == nlohmann::json::array({2, 1}));
  CHECK(j["terms"][0]["coef"]["t^1"] == "1/2");
}
