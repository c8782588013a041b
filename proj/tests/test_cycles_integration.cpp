#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "dbcalc/builtins.hpp"
#include "dbcalc/cycles.hpp"
#include "dbcalc/random_objects.hpp"
#include "helpers.hpp"

using namespace dbcalc;
using dbcalc::testing::FlatSample;
using dbcalc::testing::random_flat_sample;
using dbcalc::testing::random_integer_chain_layer;

namespace {

const char* kManifolds[] = {"circle:3", "sphere:2", "torus2", "torus3",
                            "lens:4"};

struct Setup {
  SimplicialComplex k;
  StarCover cover;
  ComplexHomology hom;

  explicit Setup(const std::string& name)
      : k(builtin_complex(name)), cover(k), hom(k) {}
};

// Decomposition-shaped tuple that is a total boundary of the given homotopy
// layers: layer k picks up b h_(k) + cech_partial h_(k+1).
CycleDecomposition difference_tuple(const StarCover& cover,
                                    const std::vector<ChainLayer>& h, int p) {
  CycleDecomposition t = CycleDecomposition::zero(p);
  for (int k = 0; k <= p; ++k) {
    if (k >= 1)
      t.layers[k] = t.layers[k] +
                    layer_boundary(cover, h[k - 1], StarSupport::closed);
    t.layers[k] = t.layers[k] + cech_partial(h[k]);
  }
  t.bottom = augmentation_chain(t.layers[p]);
  return t;
}

CycleDecomposition add_tuple(const CycleDecomposition& d,
                             const CycleDecomposition& t) {
  CycleDecomposition r = d;
  for (std::size_t k = 0; k < r.layers.size(); ++k)
    r.layers[k] = r.layers[k] + t.layers[k];
  r.bottom = d.bottom + t.bottom;
  return r;
}

}  // namespace

TEST_CASE("worked decomposition on the triangle circle") {
  Setup s("circle:3");
  Chain z = s.hom.fundamental_cycle();  // [01] + [12] - [02]
  CycleDecomposition d = decompose_cycle(s.cover, z);
  CHECK(check_decomposition(s.cover, d, z));

  CHECK(d.p == 1);
  Chain c00 = d.layers[0].at({0});
  CHECK(c00.at({0, 1}) == 1);
  CHECK(c00.at({0, 2}) == -1);
  Chain c01 = d.layers[0].at({1});
  CHECK(c01.at({1, 2}) == 1);
  CHECK(d.layers[0].at({2}).is_zero());

  CHECK(d.layers[1].at({0, 1}).at({1}) == -1);
  CHECK(d.layers[1].at({0, 2}).at({2}) == 1);
  CHECK(d.layers[1].at({1, 2}).at({2}) == -1);

  // per-carrier degrees assemble the negated cycle
  CHECK(d.bottom == Rat(-1) * z);

  CycleDecomposition dmax = decompose_cycle(s.cover, z, true);
  CHECK(check_decomposition(s.cover, dmax, z));
  CHECK(boundary(dmax.bottom).is_zero());
}

TEST_CASE("degenerate and rejected inputs") {
  Setup s("torus2");
  Chain zero;
  zero.d = 2;
  CycleDecomposition d = decompose_cycle(s.cover, zero);
  CHECK(check_decomposition(s.cover, d, zero));
  for (const auto& lay : d.layers) CHECK(lay.is_zero());
  CHECK(d.bottom.is_zero());

  Chain open_edge;
  open_edge.d = 1;
  open_edge.add(s.k.simplices(1).front(), 1);
  CHECK_THROWS_AS(decompose_cycle(s.cover, open_edge), PreconditionError);

  Chain half = Rat(1, 2) * s.hom.fundamental_cycle();
  CHECK_THROWS_AS(decompose_cycle(s.cover, half), PreconditionError);

  GaugeField a = field_from_form(s.cover, Cochain{1, {}});
  CHECK_THROWS_AS(integrate(a, decompose_cycle(s.cover, zero)),
                  PreconditionError);

  CHECK(degree_b0(boundary(Chain{1, {{{0, 1}, Rat(3)}}})) == 0);
}

TEST_CASE("decomposition identities hold for random cycles everywhere") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0x11d0 + s.k.n());
    for (int p = 0; p <= s.k.n(); ++p)
      for (int it = 0; it < 6; ++it) {
        Chain z = random_integer_cycle(s.hom, p, rng);
        for (bool back : {false, true}) {
          CycleDecomposition d = decompose_cycle(s.cover, z, back);
          CHECK(check_decomposition(s.cover, d, z));
        }
      }
  }
}

TEST_CASE("bottom class is the dimension sign times the cycle class") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0x51611);
    for (int p = 0; p <= s.k.n(); ++p) {
      auto& q = s.hom.homology(p);
      for (int it = 0; it < 5; ++it) {
        Chain z = random_integer_cycle(s.hom, p, rng);
        CycleDecomposition d = decompose_cycle(s.cover, z, rng.coin());
        std::vector<Int> scaled = s.hom.chain_vector(z);
        for (auto& v : scaled) v *= dimension_sign(p);
        auto want = q.coords(scaled);
        auto got = q.coords(s.hom.chain_vector(d.bottom));
        CHECK(got.free == want.free);
        CHECK(got.torsion == want.torsion);
      }
    }
  }
}

TEST_CASE("fundamental cycle comparison signs") {
  // machine-pinned table; the sign only depends on the dimension
  struct Row {
    const char* name;
    int t;
  } rows[] = {{"circle:3", -1}, {"circle:5", -1}, {"sphere:2", -1},
              {"torus2", -1},   {"sphere:3", 1},  {"torus3", 1},
              {"lens:2", 1},    {"lens:4", 1}};
  for (const auto& row : rows) {
    CAPTURE(row.name);
    Setup s(row.name);
    int n = s.k.n();
    Chain z = s.hom.fundamental_cycle();
    CycleDecomposition d = decompose_cycle(s.cover, z);
    auto& q = s.hom.homology(n);
    auto cz = q.coords(s.hom.chain_vector(z));
    auto cb = q.coords(s.hom.chain_vector(d.bottom));
    REQUIRE(cz.free.size() == 1);
    REQUIRE(cb.free.size() == 1);
    CHECK(cb.free[0] == Int(row.t) * cz.free[0]);
    CHECK(row.t == dimension_sign(n));
  }
}

TEST_CASE("decomposing a boundary gives a bottom that bounds") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0xb0b0);
    for (int p = 0; p + 1 <= s.k.n(); ++p)
      for (int it = 0; it < 4; ++it) {
        Chain z = boundary(random_integer_chain(s.k, p + 1, rng));
        CycleDecomposition d = decompose_cycle(s.cover, z, rng.coin());
        CHECK(check_decomposition(s.cover, d, z));
        CHECK(s.hom.homology(p).is_zero_class(s.hom.chain_vector(d.bottom)));
      }
  }
}

TEST_CASE("integral of a global form field is the plain pairing") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0xf02);
    for (int p = 0; p <= s.k.n(); ++p)
      for (int it = 0; it < 8; ++it) {
        Cochain chi = random_rational_cochain(s.k, p, rng);
        Chain z = random_integer_cycle(s.hom, p, rng);
        CycleDecomposition d = decompose_cycle(s.cover, z, rng.coin());
        // exact equality of the raw values, not just mod 1
        CHECK(integrate(field_from_form(s.cover, chi), d).raw ==
              pairing(chi, z));
      }
  }
}

TEST_CASE("integration is linear in the field") {
  Setup s("torus2");
  Rng rng(0x11ea);
  for (int it = 0; it < 10; ++it) {
    int p = static_cast<int>(rng.below(3));
    GaugeField a = random_gauge_field(s.cover, s.hom, p, rng);
    GaugeField b = random_gauge_field(s.cover, s.hom, p, rng);
    CycleDecomposition d =
        decompose_cycle(s.cover, random_integer_cycle(s.hom, p, rng));
    CHECK(integrate(a + b, d).raw == integrate(a, d).raw + integrate(b, d).raw);
  }
}

TEST_CASE("integral mod 1 is independent of the decomposition") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0xdeca + s.k.vertex_count());
    for (int p = 0; p <= s.k.n(); ++p)
      for (int it = 0; it < 5; ++it) {
        GaugeField a = random_gauge_field(s.cover, s.hom, p, rng);
        Chain z = random_integer_cycle(s.hom, p, rng);
        CycleDecomposition dmin = decompose_cycle(s.cover, z, false);
        CycleDecomposition dmax = decompose_cycle(s.cover, z, true);
        CHECK(integrate(a, dmin).value() == integrate(a, dmax).value());
      }
  }
}

TEST_CASE("difference tuples evaluate to the frozen integer") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0xd1ff);
    for (int it = 0; it < 5; ++it) {
      int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(s.k.n() + 1)));
      std::vector<ChainLayer> h;
      for (int j = 1; j <= p + 1; ++j)
        h.push_back(
            random_integer_chain_layer(s.cover, j, p - j + 1, rng));
      CycleDecomposition t = difference_tuple(s.cover, h, p);

      // adding a total boundary to a decomposition yields a decomposition
      Chain z = random_integer_cycle(s.hom, p, rng);
      CycleDecomposition d = decompose_cycle(s.cover, z, rng.coin());
      CHECK(check_decomposition(s.cover, add_tuple(d, t), z));

      GaugeField a = random_gauge_field(s.cover, s.hom, p, rng);
      Rat gap = integrate(a, add_tuple(d, t)).raw - integrate(a, d).raw;
      CHECK(is_integer(gap));
      // telescoped closed form of the evaluation of the tuple itself
      Rat want = (p % 2 == 0 ? 1 : -1) *
                 pairing(a.top, augmentation_chain(h[static_cast<std::size_t>(p)]));
      CHECK(gap == want);
    }
  }
}

TEST_CASE("gauge transformations integrate to exact integers") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0x6a06e);
    for (int p = 0; p <= s.k.n(); ++p)
      for (int it = 0; it < 5; ++it) {
        GaugeTransformation t = random_gauge_transformation(s.cover, p, rng);
        GaugeField dt = transformation_field(s.cover, t);
        Chain z = random_integer_cycle(s.hom, p, rng);
        CycleDecomposition d = decompose_cycle(s.cover, z, rng.coin());
        CHECK(is_integer(integrate(dt, d).raw));

        GaugeField a = random_gauge_field(s.cover, s.hom, p, rng);
        Rat shift = integrate(a + dt, d).raw - integrate(a, d).raw;
        CHECK(is_integer(shift));
        CHECK(integrate(a + dt, d).value() == integrate(a, d).value());
      }
  }
}

TEST_CASE("boundary holonomy is the curvature pairing") {
  // the discrete Stokes identity that pins holonomy as a differential
  // character: hol(A, bd w) = <F(A), w> mod 1
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0x570c);
    for (int p = 0; p + 1 <= s.k.n(); ++p)
      for (int it = 0; it < 5; ++it) {
        GaugeField a = random_gauge_field(s.cover, s.hom, p, rng);
        Chain w = random_integer_chain(s.k, p + 1, rng);
        CHECK(holonomy(s.cover, a, boundary(w)) ==
              RmodZ(pairing(curvature(s.cover, a), w)));
      }
  }
}

TEST_CASE("flat fields have homology-invariant holonomy") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0xf1a7);
    for (int p = 0; p + 1 <= s.k.n(); ++p)
      for (int it = 0; it < 5; ++it) {
        GaugeField a = random_flat_sample(s.cover, s.hom, p, rng).field;
        REQUIRE(curvature(s.cover, a).is_zero());
        Chain z = random_integer_cycle(s.hom, p, rng);
        Chain w = random_integer_chain(s.k, p + 1, rng);
        CHECK(holonomy(s.cover, a, z + boundary(w)) == holonomy(s.cover, a, z));
        // doubling the cycle doubles the holonomy
        CHECK(holonomy(s.cover, a, Rat(2) * z) ==
              holonomy(s.cover, a, z).times(2));
      }
  }
}

TEST_CASE("flat holonomy closed forms") {
  for (const char* name : kManifolds) {
    CAPTURE(name);
    Setup s(name);
    Rng rng(0xc105ed);
    for (int p = 0; p <= s.k.n(); ++p)
      for (int it = 0; it < 5; ++it) {
        // any flat representative: hol = (-1)^p <r, bottom>
        FlatSample fs = random_flat_sample(s.cover, s.hom, p, rng);
        const GaugeField& a = fs.field;
        Chain z = random_integer_cycle(s.hom, p, rng);
        CycleDecomposition d = decompose_cycle(s.cover, z, rng.coin());
        Rat raw = pairing(fs.rep, d.bottom);
        if (p % 2 != 0) raw = -raw;
        CHECK(integrate(a, d).value() == RmodZ(raw));

        // closed representative: hol collapses to a signed global pairing
        Cochain rc;
        rc.d = p;
        for (const auto& gen : s.hom.cohomology(p).free_generators())
          rc = rc + rng.rat(3, 5) * s.hom.vector_cochain(p, gen);
        GaugeField b = field_from_flat_class(s.cover, FlatClassRep(p, rc));
        int sign = (p * (p + 3) / 2) % 2 != 0 ? -1 : 1;
        CHECK(holonomy(s.cover, b, z) == RmodZ(Rat(sign) * pairing(rc, z)));
      }
  }
}

TEST_CASE("torus holonomy one third along a chosen generator") {
  Setup s("torus2");
  auto& qh = s.hom.homology(1);
  auto& qc = s.hom.cohomology(1);
  REQUIRE(qh.betti() == 2);
  REQUIRE(qc.betti() == 2);
  Chain z0 = s.hom.vector_chain(1, qh.free_generators()[0]);
  Chain z1 = s.hom.vector_chain(1, qh.free_generators()[1]);
  Cochain g0 = s.hom.vector_cochain(1, qc.free_generators()[0]);
  Cochain g1 = s.hom.vector_cochain(1, qc.free_generators()[1]);

  // the intersection pairing of the generator bases is unimodular
  Rat p00 = pairing(g0, z0), p01 = pairing(g1, z0);
  Rat p10 = pairing(g0, z1), p11 = pairing(g1, z1);
  Rat det = p00 * p11 - p01 * p10;
  REQUIRE((det == 1 || det == -1));

  // solve <r, z0> = 1/3, <r, z1> = 0 inside the closed generators
  Rat c0 = p11 / det / 3;
  Rat c1 = -p10 / det / 3;
  Cochain r = c0 * g0 + c1 * g1;
  GaugeField a = field_from_flat_class(s.cover, FlatClassRep(1, r));
  CHECK(curvature(s.cover, a).is_zero());
  CHECK(holonomy(s.cover, a, z0) == RmodZ(Rat(1, 3)));
  CHECK(holonomy(s.cover, a, z1) == RmodZ(0));
  CHECK(holonomy(s.cover, a, Rat(2) * z0) == RmodZ(Rat(2, 3)));
}
