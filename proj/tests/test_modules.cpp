#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace sftest;

namespace {

FreeModuleElement elem(const RingPtr& ring, std::initializer_list<const char*> comps) {
  std::vector<Polynomial> ps;
  for (auto* c : comps) ps.push_back(poly(ring, c));
  return FreeModuleElement(ps);
}

ModuleContext ctx(const RingPtr& ring) { return ModuleContext{ring, kDefaultBudget, ModuleOrderKind::TermOverPosition}; }

/// Every entry of map * k is a multiple of f.
bool in_kernel(const PolyMatrix& map, const FreeModuleElement& k, const Polynomial& f) {
  auto image = map.apply(k);
  for (auto& c : image.components) {
    if (f.is_zero() ? !c.is_zero() : !naive_remainder(c, {f}).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST(ModuleGroebner, CoordinateSubmodule) {
  auto ring = make_ring({"x", "y"});
  Polynomial zero(ring);
  auto G = module_groebner({elem(ring, {"1", "0"})}, zero, 2, ctx(ring));
  EXPECT_TRUE(G.membership(elem(ring, {"x", "0"})));
  EXPECT_FALSE(G.membership(elem(ring, {"0", "1"})));
}

TEST(ModuleGroebner, MultipleOfGenerator) {
  auto ring = make_ring({"x", "y"});
  auto G = module_groebner({elem(ring, {"x", "y"})}, Polynomial(ring), 2, ctx(ring));
  EXPECT_TRUE(G.membership(elem(ring, {"x*y", "y^2"})));
  EXPECT_FALSE(G.membership(elem(ring, {"y", "x"})));
}

TEST(ModuleGroebner, RowRelationsModelTheQuotientRing) {
  auto ring = make_ring({"x", "y"});
  auto G = module_groebner({elem(ring, {"x"})}, poly(ring, "x*y"), 1, ctx(ring));
  EXPECT_TRUE(G.membership(elem(ring, {"x*y"})));
  EXPECT_FALSE(G.membership(elem(ring, {"y"})));
  EXPECT_THROW(G.membership(elem(ring, {"x", "y"})), InputError);
}

TEST(ModuleKernel, ZeroMapKernelIsEverything) {
  auto ring = make_ring({"x", "y"});
  PolyMatrix zero(ring, 1, 2);
  auto ker = module_kernel(zero, Polynomial(ring), ctx(ring));
  auto G = module_groebner(ker, Polynomial(ring), 2, ctx(ring));
  EXPECT_TRUE(G.membership(FreeModuleElement::basis(ring, 2, 0)));
  EXPECT_TRUE(G.membership(FreeModuleElement::basis(ring, 2, 1)));
}

TEST(ModuleKernel, IdentityIsInjective) {
  auto ring = make_ring({"x", "y"});
  PolyMatrix id(ring, 2, 2);
  id.at(0, 0) = poly(ring, "1");
  id.at(1, 1) = poly(ring, "1");
  for (auto& k : module_kernel(id, Polynomial(ring), ctx(ring))) EXPECT_TRUE(k.is_zero());
}

TEST(ModuleKernel, KoszulSyzygyOfRow) {
  auto ring = make_ring({"x", "y"});
  PolyMatrix row(ring, 1, 2);
  row.at(0, 0) = poly(ring, "x");
  row.at(0, 1) = poly(ring, "y");
  auto ker = module_kernel(row, Polynomial(ring), ctx(ring));
  ASSERT_EQ(ker.size(), 1u);
  auto G = module_groebner(ker, Polynomial(ring), 2, ctx(ring));
  EXPECT_TRUE(G.membership(elem(ring, {"y", "-x"})));
  auto H = module_groebner({elem(ring, {"y", "-x"})}, Polynomial(ring), 2, ctx(ring));
  EXPECT_TRUE(H.membership(ker[0]));
}

TEST(ModuleKernel, GeneratorsAnnihilateEveryKoszulMap) {
  for (auto& fx : singular_fixtures()) {
    auto K = build_koszul(poly(fx.vars, fx.f));
    ModuleContext c{K.ring(), kDefaultBudget, ModuleOrderKind::TermOverPosition};
    for (int p = 0; p <= K.n(); ++p)
      for (auto& k : module_kernel(K.map(p), K.f(), c, K.shifts(p + 1)))
        EXPECT_TRUE(in_kernel(K.map(p), k, K.f())) << fx.name << " p=" << p;
  }
}

TEST(ModuleSaturation, TorsionFreeModuleHasNoTorsion) {
  auto ring = make_ring({"x", "y"});
  auto M = ModulePresentation::free_module(ring, Polynomial(ring), 2);
  auto T = module_saturation(M, {poly(ring, "x"), poly(ring, "y")});
  EXPECT_TRUE(is_zero(T));
}

TEST(ModuleSaturation, EverythingKilledByNilpotent) {
  auto ring = make_ring({"x"});
  auto M = ModulePresentation::free_module(ring, poly(ring, "x^2"), 1);
  M.den = {elem(ring, {"x"})};
  auto T = module_saturation(M, {poly(ring, "x")});
  EXPECT_TRUE(same_submodule(T, M));
}

TEST(ModuleSaturation, QuadricTwoFormsMatchKernelImage) {
  auto K = build_koszul(poly("x,y,z", "x^2+y^2+z^2"));
  auto r = torsion_oracle(K, 2);
  EXPECT_TRUE(r.agree());
  EXPECT_FALSE(r.zero);
}

TEST(ModuleSaturation, Idempotent) {
  for (auto& fx : singular_fixtures()) {
    if (fx.name == "quadric_fourfold") continue;
    auto K = build_koszul(poly(fx.vars, fx.f));
    auto J = singular_ideal(K.f()).generators();
    for (int p = 1; p <= K.n() + 1; ++p) {
      auto T = module_saturation(kahler_presentation(K, p), J);
      auto TT = module_saturation(T, J);
      EXPECT_TRUE(same_submodule(T, TT)) << fx.name << " p=" << p;
    }
  }
}

TEST(MinimalGenerators, FreeModule) {
  auto ring = make_ring({"x", "y", "z"});
  auto m = minimal_generators(ModulePresentation::free_module(ring, Polynomial(ring), 3));
  EXPECT_EQ(m.count, 3u);
  EXPECT_EQ(m.degrees, (std::vector<int>{0, 0, 0}));
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(minimal_generators(ModulePresentation::free_module(ring, Polynomial(ring), k)).count, k);
}

TEST(MinimalGenerators, MaximalIdealOfThePlane) {
  auto ring = make_ring({"x", "y"});
  ModulePresentation M{ring, Polynomial(ring), 1, {0}, {elem(ring, {"x"}), elem(ring, {"y"}), elem(ring, {"x+y"})}, {}};
  auto m = minimal_generators(M);
  EXPECT_EQ(m.count, 2u);
  EXPECT_EQ(m.degrees, (std::vector<int>{1, 1}));
}

TEST(MinimalGenerators, TopCohomologyOfFermatCubic) {
  auto K = build_koszul(poly("x,y,z", "x^3+y^3+z^3"));
  auto H = koszul_cohomology(K, 3);
  EXPECT_EQ(H.min_gen_count, 1u);
  ASSERT_TRUE(H.total_dimension);
  EXPECT_EQ(*H.total_dimension, 8);
}

TEST(MinimalGenerators, RejectsInhomogeneousData) {
  auto ring = make_ring({"x", "y"});
  ModulePresentation M{ring, Polynomial(ring), 1, {0}, {elem(ring, {"x+y^2"})}, {}};
  EXPECT_THROW(minimal_generators(M), InputError);
}

TEST(Exterior, IdentityStaysIdentity) {
  EXPECT_EQ(exterior_power_matrix(RationalMatrix::identity(3), 2), RationalMatrix::identity(3));
}

TEST(Exterior, DiagonalMinors) {
  RationalMatrix a(3, 3);
  a(0, 0) = 2;
  a(1, 1) = 3;
  a(2, 2) = 5;
  auto w = exterior_power_matrix(a, 2);
  RationalMatrix expected(3, 3);
  expected(0, 0) = 6;
  expected(1, 1) = 10;
  expected(2, 2) = 15;
  EXPECT_EQ(w, expected);
  EXPECT_EQ(determinant(w), 900);
}

TEST(Exterior, RangeChecked) {
  EXPECT_THROW(exterior_power_matrix(RationalMatrix::identity(3), 0), InputError);
  EXPECT_THROW(exterior_power_matrix(RationalMatrix::identity(3), 4), InputError);
}

TEST(Exterior, DeterminantMatchesCofactorExpansion) {
  std::mt19937 rng(5);
  for (int k = 0; k < 30; ++k) {
    auto a = random_matrix(rng, 1 + k % 5);
    EXPECT_EQ(determinant(a), laplace_det(a));
  }
}

TEST(Exterior, DeterminantOfWedgePowerIsPower) {
  std::mt19937 rng(13);
  for (int k = 0; k < 40; ++k) {
    const std::size_t r = 2 + k % 4;
    auto a = random_matrix(rng, r, k % 5 == 0 ? 1 : 5);
    if (k % 7 == 0)
      for (std::size_t j = 0; j < r; ++j) a(r - 1, j) = 2 * a(0, j);
    Rational det = laplace_det(a);
    // det of the k-th exterior power is det^C(r-1, k-1)
    for (int e = 1; e <= static_cast<int>(r); ++e) {
      Rational expected = 1;
      for (long i = 0; i < binomial(static_cast<long>(r) - 1, e - 1); ++i) expected *= det;
      EXPECT_EQ(determinant(exterior_power_matrix(a, e)), expected) << "size " << r << " power " << e;
    }
  }
}
