#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dbcalc/builtins.hpp"
#include "dbcalc/chains.hpp"
#include "dbcalc/complex.hpp"
#include "dbcalc/rng.hpp"
#include "helpers.hpp"

using namespace dbcalc;
using dbcalc::testing::naive_cup;
using dbcalc::testing::random_chain;
using dbcalc::testing::random_cochain;

TEST_CASE("rationals and residues mod 1") {
  CHECK(mod1(Rat(7, 3)) == Rat(1, 3));
  CHECK(mod1(Rat(-1, 4)) == Rat(3, 4));
  CHECK(mod1(Rat(5)) == 0);
  RmodZ a(Rat(3, 4)), b(Rat(1, 2));
  CHECK((a + b).representative() == Rat(1, 4));
  CHECK((a - b).representative() == Rat(1, 4));
  CHECK((-b).representative() == Rat(1, 2));
  CHECK(a.times(4).is_zero());
  CHECK(a.times(-2) == b);
  CHECK(RmodZ(Rat(9, 4)) == RmodZ(Rat(1, 4)));
  CHECK(parse_rat("-3/6") == Rat(-1, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("x"), InputError);
  CHECK(RmodZ(Rat(1, 3)).str() == "1/3");
}

TEST_CASE("deterministic rng streams") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42);
  for (int i = 0; i < 50; ++i) {
    long v = c.range(-3, 7);
    CHECK(v >= -3);
    CHECK(v <= 7);
  }
  Rng d(7);
  Rng child = d.fork();
  CHECK(child.next() != d.next());  // streams decouple
}

TEST_CASE("simplex helpers") {
  Simplex s{1, 4, 7};
  CHECK(dim(s) == 2);
  CHECK(face(s, 1) == Simplex{1, 7});
  CHECK(front_face(s, 1) == Simplex{1, 4});
  CHECK(back_face(s, 0) == Simplex{7});
  CHECK(contains(s, Simplex{4}));
  CHECK(!contains(s, Simplex{2}));
  CHECK(position(s, 5) == 2);
  Simplex out;
  CHECK(insert_sign(s, 0, &out) == 1);
  CHECK(out == Simplex{0, 1, 4, 7});
  CHECK(insert_sign(s, 5, &out) == 1);
  CHECK(out == Simplex{1, 4, 5, 7});
  CHECK(insert_sign(s, 2, &out) == -1);
  CHECK(insert_sign(s, 4, &out) == 0);
  CHECK(join(Simplex{1, 3}, Simplex{2, 3}) == Simplex{1, 2, 3});
}

TEST_CASE("complex construction and validation") {
  SimplicialComplex K = sphere(2);
  CHECK(K.n() == 2);
  CHECK(K.simplices(0).size() == 4);
  CHECK(K.simplices(1).size() == 6);
  CHECK(K.simplices(2).size() == 4);
  CHECK(K.euler_characteristic() == 2);
  CHECK(K.has(Simplex{0, 2}));
  CHECK(!K.has(Simplex{0, 1, 2, 3}));
  CHECK(K.index_of(Simplex{0, 1}) == 0);

  // A 2-sphere with one triangle removed is not closed.
  std::vector<Simplex> open_tops = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
  CHECK_THROWS_AS(SimplicialComplex::from_top_simplices(
                      2, {"a", "b", "c", "d"}, open_tops),
                  InputError);

  // Two disjoint circles are not connected.
  std::vector<Simplex> two = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_THROWS_AS(SimplicialComplex::from_top_simplices(
                      1, {"a", "b", "c", "d", "e", "f"}, two),
                  InputError);
}

TEST_CASE("orientation propagation on the 3-cycle") {
  SimplicialComplex K = circle(3);
  // Starting from +[0,1], consistency forces +[1,2] and -[0,2].
  CHECK(K.orientation_of(Simplex{0, 1}) == 1);
  CHECK(K.orientation_of(Simplex{1, 2}) == 1);
  CHECK(K.orientation_of(Simplex{0, 2}) == -1);
}

TEST_CASE("orientation is verified when given explicitly") {
  std::map<Simplex, int> good = {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, -1}};
  SimplicialComplex K = SimplicialComplex::from_oriented(1, {"a", "b", "c"}, good);
  CHECK(K.orientation_of(Simplex{0, 2}) == -1);
  std::map<Simplex, int> bad = {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}};
  CHECK_THROWS_AS(SimplicialComplex::from_oriented(1, {"a", "b", "c"}, bad),
                  InputError);
}

TEST_CASE("stars") {
  SimplicialComplex K = torus2();
  auto open0 = K.open_star(Simplex{0});
  for (const Simplex& s : open0) CHECK(has_vertex(s, 0));
  auto closed0 = K.closed_star(Simplex{0});
  CHECK(closed0.size() > open0.size());
  for (const Simplex& s : open0) {
    if (dim(s) == 0) continue;  // faces of a vertex drop below dimension 0
    for (int i = 0; i <= dim(s); ++i) {
      Simplex f = face(s, i);
      CHECK(std::binary_search(closed0.begin(), closed0.end(), f));
    }
  }
  // Open star of an edge in a surface: the edge plus its two triangles.
  auto opene = K.open_star(Simplex{0, 1});
  CHECK(opene.size() == 3);
}

TEST_CASE("chain arithmetic drops zeros") {
  Chain a;
  a.d = 1;
  a.add({0, 1}, Rat(1, 2));
  a.add({0, 1}, Rat(-1, 2));
  CHECK(a.is_zero());
  a.add({1, 2}, Rat(2));
  Chain b = Rat(0) * a;
  CHECK(b.is_zero());
  CHECK(degree_b0(Chain{0, {{{0}, Rat(2)}, {{3}, Rat(-3)}}}) == Rat(-1));
  CHECK(degree_b0(Chain{0, {}}) == 0);
  CHECK_THROWS_AS(degree_b0(Chain{0, {{{0}, Rat(-1, 2)}}}), PreconditionError);
  CHECK_THROWS_AS(degree_b0(Chain{1, {{{0, 1}, Rat(1)}}}), PreconditionError);
}

TEST_CASE("boundary squares to zero") {
  Chain t;
  t.d = 2;
  t.c[{0, 1, 2}] = 1;
  Chain b = boundary(t);
  CHECK(b.at({1, 2}) == 1);
  CHECK(b.at({0, 2}) == -1);
  CHECK(b.at({0, 1}) == 1);
  CHECK(boundary(b).is_zero());

  SimplicialComplex K = torus2();
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    Chain c = random_chain(K, 2, rng);
    CHECK(boundary(boundary(c)).is_zero());
  }
}

TEST_CASE("coboundary is adjoint to boundary and squares to zero") {
  SimplicialComplex K = torus2();
  Rng rng(2);
  for (int d = 1; d <= 2; ++d)
    for (int i = 0; i < 20; ++i) {
      Cochain w = random_cochain(K, d - 1, rng);
      Chain c = random_chain(K, d, rng);
      CHECK(pairing(coboundary(K, w), c) == pairing(w, boundary(c)));
    }
  for (int i = 0; i < 10; ++i) {
    Cochain w = random_cochain(K, 0, rng);
    CHECK(coboundary(K, coboundary(K, w)).is_zero());
  }
}

TEST_CASE("cup matches the exhaustive reference") {
  Rng rng(3);
  for (const char* which : {"torus2", "sphere:2", "circle:4"}) {
    SimplicialComplex K = builtin_complex(which);
    for (int p = 0; p <= K.n(); ++p)
      for (int q = 0; p + q <= K.n(); ++q)
        for (int i = 0; i < 8; ++i) {
          Cochain x = random_cochain(K, p, rng);
          Cochain y = random_cochain(K, q, rng);
          CHECK(cup(K, x, y) == naive_cup(K, x, y));
        }
  }
}

TEST_CASE("cup algebra: unit, associativity, Leibniz") {
  SimplicialComplex K = torus2();
  Rng rng(4);
  Cochain one = unit_cochain(K);
  for (int p = 0; p <= 2; ++p)
    for (int i = 0; i < 10; ++i) {
      Cochain x = random_cochain(K, p, rng);
      CHECK(cup(K, one, x) == x);
      CHECK(cup(K, x, one) == x);
    }
  for (int i = 0; i < 15; ++i) {
    Cochain x = random_cochain(K, 0, rng);
    Cochain y = random_cochain(K, 1, rng);
    Cochain z = random_cochain(K, 1, rng);
    CHECK(cup(K, cup(K, x, y), z) == cup(K, x, cup(K, y, z)));
  }
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; p + q <= 1; ++q)
      for (int i = 0; i < 15; ++i) {
        Cochain x = random_cochain(K, p, rng);
        Cochain y = random_cochain(K, q, rng);
        Cochain lhs = coboundary(K, cup(K, x, y));
        Cochain rhs = cup(K, coboundary(K, x), y);
        Cochain sy = cup(K, x, coboundary(K, y));
        rhs = (p % 2 == 0) ? rhs + sy : rhs - sy;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("caps are adjoint to cups") {
  SimplicialComplex K = torus2();
  Rng rng(5);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; p + q <= 2; ++q)
      for (int i = 0; i < 12; ++i) {
        Cochain x = random_cochain(K, p, rng);
        Cochain y = random_cochain(K, q, rng);
        Chain c = random_chain(K, p + q, rng);
        CHECK(pairing(cup(K, x, y), c) == pairing(y, cap_front(x, c)));
        CHECK(pairing(cup(K, y, x), c) == pairing(y, cap_back(x, c)));
      }
  // Front caps compose through the cup.
  for (int i = 0; i < 12; ++i) {
    Cochain x = random_cochain(K, 1, rng);
    Cochain y = random_cochain(K, 0, rng);
    Chain c = random_chain(K, 2, rng);
    CHECK(cap_front(y, cap_front(x, c)) == cap_front(cup(K, x, y), c));
  }
}

TEST_CASE("boundary rules for caps") {
  SimplicialComplex K = torus2();
  Rng rng(6);
  // For x of degree p and m of dimension q:
  //   d(cap_back(x, m))  = cap_back(x, dm) + (-1)^(q-p) cap_back(dx, m)
  //   d(cap_front(x, m)) = (-1)^p (cap_front(x, dm) - cap_front(dx, m))
  for (int p = 0; p <= 1; ++p)
    for (int q = p + 1; q <= 2; ++q)
      for (int i = 0; i < 15; ++i) {
        Cochain x = random_cochain(K, p, rng);
        Chain m = random_chain(K, q, rng);
        Chain back_lhs = boundary(cap_back(x, m));
        Chain back_rhs = cap_back(x, boundary(m));
        Chain bt = cap_back(coboundary(K, x), m);
        back_rhs = ((q - p) % 2 == 0) ? back_rhs + bt : back_rhs - bt;
        CHECK(back_lhs == back_rhs);

        Chain front_lhs = boundary(cap_front(x, m));
        Chain front_rhs = cap_front(x, boundary(m)) - cap_front(coboundary(K, x), m);
        if (p % 2 != 0) front_rhs = Rat(-1) * front_rhs;
        CHECK(front_lhs == front_rhs);
      }
}

TEST_CASE("builtin complex sizes") {
  SimplicialComplex c5 = circle(5);
  CHECK(c5.simplices(0).size() == 5);
  CHECK(c5.simplices(1).size() == 5);

  SimplicialComplex s3 = sphere(3);
  CHECK(s3.simplices(0).size() == 5);
  CHECK(s3.simplices(3).size() == 5);
  CHECK(s3.euler_characteristic() == 0);

  SimplicialComplex t2 = torus2();
  CHECK(t2.simplices(0).size() == 7);
  CHECK(t2.simplices(1).size() == 21);
  CHECK(t2.simplices(2).size() == 14);
  CHECK(t2.euler_characteristic() == 0);

  SimplicialComplex t3 = torus3();
  CHECK(t3.simplices(0).size() == 27);
  CHECK(t3.simplices(1).size() == 189);
  CHECK(t3.simplices(2).size() == 324);
  CHECK(t3.simplices(3).size() == 162);
  CHECK(t3.euler_characteristic() == 0);

  CHECK_THROWS_AS(circle(2), PreconditionError);
  CHECK_THROWS_AS(builtin_complex("klein"), InputError);
}

TEST_CASE("lens space size and regularity") {
  SimplicialComplex L = lens(4);
  CHECK(L.simplices(0).size() == 72);
  CHECK(L.simplices(1).size() == 456);
  CHECK(L.simplices(2).size() == 768);
  CHECK(L.simplices(3).size() == 384);
  CHECK(L.euler_characteristic() == 0);

  SimplicialComplex L2 = lens(2);
  CHECK(L2.euler_characteristic() == 0);
  CHECK(L2.simplices(3).size() == 192);  // two squares: 16 * 24 sd-tops over 2
}

TEST_CASE("barycentric subdivision of the 2-sphere") {
  SimplicialComplex sd = barycentric_subdivision(sphere(2));
  CHECK(sd.simplices(0).size() == 14);   // 4 + 6 + 4 cells
  CHECK(sd.simplices(2).size() == 24);   // 4 tops * 3! flags
  CHECK(sd.euler_characteristic() == 2);
}
