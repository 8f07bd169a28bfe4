#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dioph/classifier.hpp"

using dioph::CaseId;
using dioph::EquationParams;
using dioph::Int;

namespace {

// The case relations, written out independently of the classifier.
bool relation_holds(CaseId id, const EquationParams& p) {
  const Int s = p.k + p.l;
  switch (id) {
    case CaseId::Case1: return p.n == p.m && p.m == s;
    case CaseId::Case2: return p.n < p.m && p.m < s;
    case CaseId::Case3: return s < p.n && p.n < p.m;
    case CaseId::Case4: return p.n < s && s < p.m;
    case CaseId::Case5: return p.n == s && s < p.m;
    case CaseId::Case6: return p.m < p.n && p.n == s;
    case CaseId::Case7: return p.m == p.n && p.n < s;
    case CaseId::Case8: return s < p.m && p.m == p.n;
  }
  return false;
}

}  // namespace

TEST_CASE("hand classifications") {
  auto c1 = dioph::classify({2, 2, 1, 1, 2});
  CHECK(c1.case_id == CaseId::Case1);
  CHECK(c1.hypothesis_met);
  CHECK_FALSE(c1.swapped);

  auto c5 = dioph::classify({2, 3, 1, 1, 3});
  CHECK(c5.case_id == CaseId::Case5);
  CHECK_FALSE(c5.swapped);
  CHECK(c5.hypothesis_met);

  // n < m = k+l lands in case 6 and is flipped into the coordinates the
  // theorem is proved in: m < n = k+l.
  auto c6 = dioph::classify({1, 2, 1, 1, 1});
  CHECK(c6.case_id == CaseId::Case6);
  CHECK(c6.swapped);
  CHECK(c6.canonical == EquationParams{2, 1, 1, 1, 1});
  CHECK(c6.hypothesis_met);  // m = 1 <= l = 1

  auto swapped = dioph::classify({3, 2, 1, 1, 5});
  auto plain = dioph::classify({2, 3, 1, 1, 5});
  CHECK(swapped.case_id == plain.case_id);
  CHECK(swapped.swapped);
  CHECK_FALSE(plain.swapped);
  CHECK(swapped.canonical == plain.canonical);
}

TEST_CASE("hypothesis side conditions") {
  // Case 2 with n > k.
  auto a = dioph::classify({2, 3, 1, 4, 5});
  CHECK(a.case_id == CaseId::Case2);
  CHECK_FALSE(a.hypothesis_met);
  // Case 2 with n <= k.
  auto b = dioph::classify({2, 3, 2, 2, 5});
  CHECK(b.case_id == CaseId::Case2);
  CHECK(b.hypothesis_met);
  // Case 4 with n > k.
  auto c = dioph::classify({2, 5, 1, 2, 5});
  CHECK(c.case_id == CaseId::Case4);
  CHECK_FALSE(c.hypothesis_met);
  // Case 6 with m > l in theorem coordinates.
  auto d = dioph::classify({4, 2, 3, 1, 1});
  CHECK(d.case_id == CaseId::Case6);
  CHECK_FALSE(d.swapped);
  CHECK_FALSE(d.hypothesis_met);
}

TEST_CASE("exactly one case, relation holds canonically") {
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m)
      for (long k = 1; k <= 4; ++k)
        for (long l = 1; l <= 4; ++l) {
          const EquationParams p{n, m, k, l, 3};
          const auto cls = dioph::classify(p);
          CHECK(relation_holds(cls.case_id, cls.canonical));
          // No other case relation may hold for the canonical params.
          int matches = 0;
          for (int id = 1; id <= 8; ++id)
            if (relation_holds(static_cast<CaseId>(id), cls.canonical)) ++matches;
          CHECK(matches == 1);
          // The canonical instance is the original or its mirror.
          const bool same = cls.canonical == p;
          const bool mirror = cls.canonical == p.swapped();
          CHECK((cls.swapped ? mirror : same));
        }
}

TEST_CASE("swap coherence of classification") {
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m)
      for (long k = 1; k <= 4; ++k)
        for (long l = 1; l <= 4; ++l) {
          const auto a = dioph::classify({n, m, k, l, 2});
          const auto b = dioph::classify({m, n, l, k, 2});
          CHECK(a.case_id == b.case_id);
          CHECK(a.hypothesis_met == b.hypothesis_met);
          // A tie n = m keeps k, l as given, so the two orientations keep
          // their own canonical form; otherwise they must coincide.
          if (n != m) CHECK(a.canonical == b.canonical);
        }
}

TEST_CASE("unswap mirrors concrete pairs") {
  dioph::SolutionSet s;
  s.kind = dioph::SolutionKind::Finite;
  s.solutions = {{2, 4, {}}};
  const auto m = dioph::unswap_solutions(s, true);
  REQUIRE(m.solutions.size() == 1);
  CHECK(m.solutions[0].x == 4);
  CHECK(m.solutions[0].y == 2);

  // (1,1) and the diagonal family are fixed points.
  dioph::SolutionSet unit;
  unit.kind = dioph::SolutionKind::Finite;
  unit.solutions = {{1, 1, {}}};
  CHECK(dioph::unswap_solutions(unit, true).solutions[0].x == 1);

  dioph::SolutionSet diag;
  diag.kind = dioph::SolutionKind::ParametricDiagonal;
  CHECK(dioph::unswap_solutions(diag, true).kind ==
        dioph::SolutionKind::ParametricDiagonal);

  // swapped = false is the identity.
  const auto same = dioph::unswap_solutions(s, false);
  CHECK(same.solutions[0].x == 2);
  CHECK(same.solutions[0].y == 4);

  // Mirrored lists come back lexicographically sorted.
  dioph::SolutionSet two;
  two.kind = dioph::SolutionKind::Finite;
  two.solutions = {{2, 2, {}}, {4, 2, {}}};
  const auto mm = dioph::unswap_solutions(two, true);
  REQUIRE(mm.solutions.size() == 2);
  CHECK(mm.solutions[0].x == 2);
  CHECK(mm.solutions[0].y == 2);
  CHECK(mm.solutions[1].x == 2);
  CHECK(mm.solutions[1].y == 4);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(dioph::classify({0, 1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dioph::classify({1, 1, 1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_WITH(dioph::classify({1, 1, 1, 1, 0}), "c must be >= 1");
}
