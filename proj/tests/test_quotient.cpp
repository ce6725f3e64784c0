#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace sftest;

namespace {

using Vecs = std::vector<std::vector<long>>;

bool small_faithful(const QuotientType& t) { return is_faithful(t) && is_small(t); }

/// Whether the canonical form is 1/s(1,...,1) with s | n - 1 (s = 1 is the trivial type).
bool veronese_type(const QuotientType& t) {
  auto c = canonical_type(t);
  const long n = static_cast<long>(t.n());
  if (c.r == 1) return true;
  return std::all_of(c.a.begin(), c.a.end(), [](long x) { return x == 1; }) && (n - 1) % c.r == 0;
}

}  // namespace

TEST(ValidateType, Examples) {
  auto v = validate_type(2, {1, 1, 1});
  EXPECT_EQ(v.type, (QuotientType{2, {1, 1, 1}}));
  EXPECT_EQ(v.reduced_by, 1);
  auto w = validate_type(4, {2, 2, 2});
  EXPECT_EQ(w.type, (QuotientType{2, {1, 1, 1}}));
  EXPECT_EQ(w.reduced_by, 2);
  try {
    validate_type(3, {1, 0, 0});
    FAIL() << "expected NotSmallError";
  } catch (const NotSmallError& e) {
    EXPECT_EQ(e.k(), 1);
    EXPECT_EQ(e.index(), 0u);
  }
  EXPECT_EQ(validate_type(5, {7, -3}).type, (QuotientType{5, {2, 2}}));
  EXPECT_THROW(validate_type(0, {1}), InputError);
}

TEST(Fiber, Examples) {
  EXPECT_EQ(fiber_minimal_elements({2, {1, 1, 1}}, 0), (Vecs{{0, 0, 0}}));
  EXPECT_EQ(fiber_minimal_elements({3, {1, 1, 2}}, 1), (Vecs{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_EQ(fiber_minimal_elements({2, {1, 1, 1}}, 1), (Vecs{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Fiber, AntichainMatchesBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n)
    for_each_sorted_type(n, 4, [&](const QuotientType& t) {
      for (long c = 0; c < t.r; ++c) {
        auto fast = fiber_minimal_elements(t, c);
        EXPECT_EQ(fast, brute_minimal(t, c, 2 * t.r)) << t.to_string() << " c=" << c;
        for (auto& m : fast)
          for (long x : m) EXPECT_LE(x, t.r - 1);
      }
    });
}

TEST(Fiber, LeastElementTestAgrees) {
  for (std::size_t n = 1; n <= 4; ++n)
    for_each_sorted_type(n, 7, [&](const QuotientType& t) {
      if (!is_faithful(t)) return;
      for (long c = 0; c < t.r; ++c)
        EXPECT_EQ(fiber_has_least_element(t, c), fiber_minimal_elements(t, c).size() == 1) << t.to_string() << " c=" << c;
    });
}

TEST(InvariantForms, Examples) {
  auto g = invariant_form_generators({2, {1, 1, 1}}, 2);
  ASSERT_EQ(g.size(), 3u);
  std::vector<std::string> forms;
  for (auto& x : g) {
    EXPECT_EQ(x.m, (std::vector<long>{0, 0, 0}));
    forms.push_back(form_string(x));
  }
  EXPECT_EQ(forms, (std::vector<std::string>{"dx∧dy", "dx∧dz", "dy∧dz"}));
  auto top = invariant_form_generators({2, {1, 1, 1, 1}}, 4);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(form_string(top[0]), "dx∧dy∧dz∧dw");
  auto h = invariant_form_generators({3, {1, 1, 2}}, 2);
  ASSERT_EQ(h.size(), 5u);
  EXPECT_EQ(std::count_if(h.begin(), h.end(), [](auto& x) { return x.I == IndexSet{0, 1}; }), 3);
}

TEST(InvariantForms, GeneratorsAreInvariant) {
  for_each_sorted_type(3, 6, [&](const QuotientType& t) {
    if (!small_faithful(t)) return;
    for (int p = 0; p <= 3; ++p)
      for (auto& g : invariant_form_generators(t, p)) {
        long s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += g.m[i] * t.a[i];
        for (int i : g.I) s += t.a[i];
        EXPECT_EQ(mod(s, t.r), 0);
      }
  });
}

TEST(ReflexiveFreeness, Examples) {
  auto a = reflexive_freeness({2, {1, 1, 1}}, 2);
  EXPECT_TRUE(a.free);
  EXPECT_EQ(a.generator_count, 3);
  auto b = reflexive_freeness({3, {1, 1, 2}}, 2);
  EXPECT_FALSE(b.free);
  EXPECT_EQ(b.generator_count, 5);
  auto c = reflexive_freeness({4, {1, 1, 1, 1, 1}}, 4);
  EXPECT_TRUE(c.free);
  EXPECT_EQ(c.generator_count, 5);
  EXPECT_EQ(reflexive_freeness({2, {1, 1, 1, 1}}, 2).generator_count, 6);
}

TEST(ReflexiveFreeness, FreeExactlyForVeroneseTypes) {
  for (std::size_t n = 2; n <= 5; ++n)
    for_each_sorted_type(n, 12, [&](const QuotientType& t) {
      if (!small_faithful(t)) return;
      const int p = static_cast<int>(n) - 1;
      bool free = reflexive_freeness(t, p).free;
      EXPECT_EQ(free, veronese_type(t)) << t.to_string();
      EXPECT_EQ(free, reflexive_free_fast(t, p)) << t.to_string();
    });
}

TEST(ReidTai, Examples) {
  EXPECT_TRUE(reid_tai_terminal({2, {1, 1, 1}}));
  EXPECT_TRUE(reid_tai_terminal({2, {1, 1, 1, 1}}));
  EXPECT_FALSE(reid_tai_terminal({3, {1, 2}}));
  EXPECT_TRUE(reid_tai_terminal({1, {0, 0}}));
  EXPECT_TRUE(reid_tai_terminal({3, {1, 1, 2}}));
}

TEST(Gorenstein, Examples) {
  EXPECT_TRUE(gorenstein_check({2, {1, 1, 1, 1}}));
  EXPECT_FALSE(gorenstein_check({2, {1, 1, 1}}));
  EXPECT_TRUE(gorenstein_check({3, {1, 2}}));
}

TEST(Gorenstein, MatchesCanonicalModuleGenerators) {
  for_each_sorted_type(3, 8, [&](const QuotientType& t) {
    if (!small_faithful(t)) return;
    auto g = invariant_form_generators(t, 3);
    bool unit = g.size() == 1 && g[0].m == std::vector<long>(3, 0);
    EXPECT_EQ(gorenstein_check(t), unit) << t.to_string();
  });
}

TEST(CanonicalType, Examples) {
  EXPECT_EQ(canonical_type({3, {2, 2, 2}}), (QuotientType{3, {1, 1, 1}}));
  EXPECT_EQ(canonical_type({2, {1, 1, 1}}), (QuotientType{2, {1, 1, 1}}));
  EXPECT_EQ(canonical_type({5, {2, 3}}), (QuotientType{5, {1, 4}}));
}

TEST(CanonicalType, IdempotentAndPermutationInvariant) {
  for_each_sorted_type(3, 9, [&](const QuotientType& t) {
    if (!is_faithful(t)) return;
    auto c = canonical_type(t);
    EXPECT_EQ(canonical_type(c), c);
    QuotientType rotated{t.r, {t.a[2], t.a[0], t.a[1]}};
    EXPECT_EQ(canonical_type(rotated), c);
  });
}

TEST(Classify, Examples) {
  auto types = [](int n, long r) {
    std::vector<QuotientType> out;
    for (auto& c : classify_dimension(n, r)) out.push_back(c.type);
    return out;
  };
  EXPECT_EQ(types(3, 10), (std::vector<QuotientType>{{1, {0, 0, 0}}, {2, {1, 1, 1}}}));
  EXPECT_EQ(types(5, 10), (std::vector<QuotientType>{{1, {0, 0, 0, 0, 0}}, {2, {1, 1, 1, 1, 1}}, {4, {1, 1, 1, 1, 1}}}));
  EXPECT_EQ(types(2, 10), (std::vector<QuotientType>{{1, {0, 0}}}));
  for (auto& c : classify_dimension(4, 12)) {
    EXPECT_TRUE(c.terminal) << c.type.to_string();
    EXPECT_TRUE(c.isolated) << c.type.to_string();
  }
}

TEST(SemigroupFibers, ComplementsGenerateExactlyForSmallTypes) {
  for (std::size_t n = 2; n <= 4; ++n)
    for_each_sorted_type(n, 10, [&](const QuotientType& t) {
      if (!is_faithful(t)) return;
      auto gen = complement_generates(t);
      bool all = std::all_of(gen.begin(), gen.end(), [](bool b) { return b; });
      EXPECT_EQ(all, is_small(t)) << t.to_string();
    });
}

TEST(SemigroupFibers, DesignatedFiberHasTwoMinimalElements) {
  for (std::size_t n = 2; n <= 4; ++n)
    for_each_sorted_type(n, 8, [&](const QuotientType& t) {
      if (!small_faithful(t)) return;
      for (std::size_t i = 0; i < n; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) s += t.a[j];
        if (mod(s, t.r) == 0) continue;
        EXPECT_GE(fiber_minimal_elements(t, mod(-s, t.r)).size(), 2u) << t.to_string() << " i=" << i;
      }
    });
}

TEST(Isolated, Examples) {
  EXPECT_TRUE(is_isolated({2, {1, 1, 1}}));
  EXPECT_FALSE(is_isolated({4, {1, 2, 3}}));
}
