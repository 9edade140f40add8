#include <gtest/gtest.h>

#include <set>

#include "tribuild/projective_plane.hpp"

using namespace tribuild;

namespace {

std::set<unsigned> as_set(const std::vector<PointId>& pts) {
  std::set<unsigned> s;
  for (PointId p : pts) s.insert(p.value);
  return s;
}

// Brute force over all pairs of the raw line lists.
void expect_plane_axioms(const ProjectivePlane& plane) {
  const unsigned q = plane.order();
  const std::size_t n = q * q + q + 1;
  ASSERT_EQ(plane.size(), n);
  const auto& lines = plane.lines();
  for (const auto& l : lines) EXPECT_EQ(as_set(l).size(), q + 1);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) {
      int through_both = 0;
      for (const auto& l : lines) through_both += as_set(l).contains(a) && as_set(l).contains(b);
      EXPECT_EQ(through_both, 1) << a << "," << b;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::set<unsigned> common;
      for (unsigned p : as_set(lines[i]))
        if (as_set(lines[j]).contains(p)) common.insert(p);
      EXPECT_EQ(common.size(), 1u);
    }
}

}  // namespace

TEST(ProjectivePlane, FanoLinesAreShiftsOf124) {
  const ProjectivePlane plane = build_plane(2);
  ASSERT_EQ(plane.size(), 7u);
  for (unsigned i = 0; i < 7; ++i) {
    const std::set<unsigned> expected{(i + 1) % 7, (i + 2) % 7, (i + 4) % 7};
    EXPECT_EQ(as_set(plane.points_on(LineId{i})), expected);
  }
  expect_plane_axioms(plane);
}

TEST(ProjectivePlane, OrderThreeAxioms) {
  const ProjectivePlane plane = build_plane(3);
  EXPECT_EQ(plane.size(), 13u);
  for (std::uint32_t l = 0; l < 13; ++l) EXPECT_EQ(plane.points_on(LineId{l}).size(), 4u);
  expect_plane_axioms(plane);
}

TEST(ProjectivePlane, Incidence) {
  const ProjectivePlane plane = build_plane(2);
  const LineId l124 = *plane.find_line({PointId{1}, PointId{2}, PointId{4}});
  EXPECT_TRUE(plane.incident(PointId{1}, l124));
  EXPECT_FALSE(plane.incident(PointId{0}, l124));
  for (std::uint32_t p = 0; p < 7; ++p)
    for (LineId l : plane.lines_through(PointId{p})) EXPECT_TRUE(plane.incident(PointId{p}, l));
}

TEST(ProjectivePlane, MeetAndJoin) {
  const ProjectivePlane plane = build_plane(2);
  auto line = [&](unsigned a, unsigned b, unsigned c) { return *plane.find_line({PointId{a}, PointId{b}, PointId{c}}); };
  EXPECT_EQ(plane.meet(line(1, 2, 4), line(2, 3, 5)), PointId{2});
  EXPECT_EQ(plane.meet(line(0, 1, 3), line(1, 2, 4)), PointId{1});
  EXPECT_EQ(plane.join(PointId{3}, PointId{0}), line(0, 1, 3));
  EXPECT_EQ(plane.join(PointId{3}, PointId{0}), LineId{6});
  EXPECT_EQ(plane.join(PointId{1}, PointId{2}), line(1, 2, 4));
}

TEST(ProjectivePlane, MeetJoinDuality) {
  for (unsigned q : {2u, 3u}) {
    const ProjectivePlane plane = build_plane(q);
    const auto n = static_cast<std::uint32_t>(plane.size());
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        if (a == b) continue;
        const LineId l = plane.join(PointId{a}, PointId{b});
        EXPECT_TRUE(plane.incident(PointId{a}, l) && plane.incident(PointId{b}, l));
        const PointId p = plane.meet(LineId{a}, LineId{b});
        EXPECT_TRUE(plane.incident(p, LineId{a}) && plane.incident(p, LineId{b}));
      }
  }
}

TEST(ProjectivePlane, Errors) {
  const ProjectivePlane plane = build_plane(2);
  try {
    plane.meet(LineId{3}, LineId{3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EqualLines);
  }
  try {
    plane.join(PointId{5}, PointId{5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EqualPoints);
  }
  try {
    plane.incident(PointId{7}, LineId{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  try {
    build_plane(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedOrder);
  }
  try {
    build_plane(2, std::vector<unsigned>{0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDifferenceSet);
  }
}

TEST(ProjectivePlane, AlternativeDifferenceSet) {
  // {0,1,3} is the other Singer difference set mod 7.
  expect_plane_axioms(build_plane(2, std::vector<unsigned>{0, 1, 3}));
}

TEST(Lambda, IdentityAndInverse) {
  const Lambda lam = Lambda::identity(7);
  for (std::uint32_t p = 0; p < 7; ++p) {
    EXPECT_EQ(lam(PointId{p}), LineId{p});
    EXPECT_EQ(lam.inverse(LineId{p}), PointId{p});
  }
  EXPECT_THROW(Lambda({LineId{0}, LineId{0}}), Error);
}
