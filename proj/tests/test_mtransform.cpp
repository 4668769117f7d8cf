#include <doctest.h>

#include "core/error.hpp"
#include "core/mtransform.hpp"
#include "core/parallel.hpp"
#include "core/perm.hpp"
#include "support.hpp"

using namespace gia;

TEST_CASE("entries are subgraph counts between members") {
  for (int n = 2; n <= 5; ++n) {
    const GPoset p = build_full_poset(n);
    const IntMatrix e = build_mtransform(p);
    CHECK(e.is_lower_unitriangular());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        CHECK(e(i, j) == BigInt(static_cast<unsigned long>(testing::brute_subgraph_count(p[j], p.host(i)))));
  }
}

TEST_CASE("parallel width does not change the result") {
  const GPoset p = build_full_poset(6);
  set_parallelism(1);
  const IntMatrix one = build_mtransform(p);
  set_parallelism(4);
  const IntMatrix four = build_mtransform(p);
  set_parallelism(1);
  CHECK(one == four);
}

TEST_CASE("weighted powers") {
  const GPoset p = build_full_poset(5);
  const IntMatrix e = build_mtransform(p);
  for (long k = 0; k <= 4; ++k) CHECK(mnukhin_power(p, e, k) == matrix_power(e, static_cast<unsigned>(k)));
  const IntMatrix inv = mtransform_inverse(p, e);
  CHECK(inv * e == IntMatrix::identity(p.size()));
  CHECK(mnukhin_power(p, e, -1) == inv);
  CHECK(mnukhin_power(p, e, -2) == matrix_power(inv, 2));
  // sign pattern of the inverse
  const auto deg = p.degrees();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) CHECK(inv(i, j) == ((deg[i] - deg[j]) % 2 ? -e(i, j) : e(i, j)));
}

TEST_CASE("complement expansion matches direct complement counts") {
  for (int n = 3; n <= 5; ++n) {
    const GPoset p = build_full_poset(n);
    for (const auto& g : p.members()) {
      const LinComb l = complement_invariant_expansion(g, p, n);
      for (std::size_t h = 0; h < p.size(); ++h)
        CHECK(l.evaluate(p.host(h)) == Rational(from_uint64(count_subgraphs(g, complement(p.host(h), n)))));
    }
  }
}

TEST_CASE("complement pairing is an involution") {
  const GPoset p = build_full_poset(5);
  const auto pair = complement_pairing(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(pair[pair[i]] == i);
    CHECK(is_isomorphic(complement(p.host(i), 5), p.host(pair[i])));
  }
}

TEST_CASE("upper half from lower half") {
  for (int n = 3; n <= 6; ++n) {
    const GPoset p = build_full_poset(n);
    const IntMatrix e = build_mtransform(p);
    IntMatrix lower = e;
    const auto deg = p.degrees();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (deg[i] > n * (n - 1) / 4)
        for (std::size_t j = 0; j < p.size(); ++j) lower(i, j) = 0;
    CHECK(solve_upper_half(p, lower) == e);
  }
}

TEST_CASE("degree minors have full rank") {
  const GPoset p = build_full_poset(5);
  const IntMatrix e = build_mtransform(p);
  const auto deg = p.degrees();
  for (int lo = 0; lo <= 10; ++lo)
    for (int hi = lo; hi <= 10; ++hi) {
      const IntMatrix m = degree_minor(e, deg, lo, hi);
      CHECK(exact_rank(m) == std::min(m.rows(), m.cols()));
    }
}

TEST_CASE("trivial-group minors by recursion") {
  for (int n = 1; n <= 7; ++n)
    for (int hi = 0; hi <= n; ++hi)
      for (int lo = 0; lo <= hi; ++lo) {
        const IntMatrix d = trivial_minor_direct(n, lo, hi);
        CHECK(d.rows() == static_cast<std::size_t>(binomial(n, hi).get_ui()));
        CHECK(d.cols() == static_cast<std::size_t>(binomial(n, lo).get_ui()));
        CHECK(trivial_minor_recursive(n, lo, hi) == d);
      }
}

TEST_CASE("matrix helpers") {
  const IntMatrix m = IntMatrix::from_rows({{1, 0, 0}, {2, 1, 0}, {3, 4, 1}});
  const IntMatrix inv = unitriangular_inverse(m);
  CHECK(m * inv == IntMatrix::identity(3));
  const std::vector<Rational> v = {1, 2, 3};
  const auto x = solve_lower_unitriangular(m, v);
  const auto y = solve_left_unitriangular(m, v);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational ex = 0, ye = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      ex += Rational(m(i, j)) * x[j];
      ye += y[j] * Rational(m(j, i));
    }
    CHECK(ex == v[i]);
    CHECK(ye == v[i]);
  }
  CHECK(exact_rank(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(m.to_csv() == "1,0,0\n2,1,0\n3,4,1\n");
  const std::vector<std::vector<Rational>> a = {{1, 1}, {1, 2}, {1, 3}};
  const std::vector<Rational> b = {3, 5, 7};
  const auto s = solve_full_column_rank(a, b);
  REQUIRE(s);
  CHECK((*s)[0] == 1);
  CHECK((*s)[1] == 2);
  const std::vector<Rational> bad = {3, 5, 8};
  CHECK_FALSE(solve_full_column_rank(a, bad));
}
