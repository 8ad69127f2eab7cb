#include <doctest.h>

#include <set>

#include "localelab/corpus.hpp"
#include "localelab/points.hpp"
#include "oracles.hpp"

using namespace localelab;

TEST_SUITE("points") {

TEST_CASE("fixture point counts") {
  CHECK(points_of(fixtures::two()).size() == 1);
  CHECK(points_of(fixtures::chain3()).size() == 2);
  CHECK(points_of(fixtures::square()).size() == 2);
}

TEST_CASE("points equal the assignment oracle and are homs into TWO") {
  const FramePtr two = fixtures::two();
  for (const auto& c : frame_corpus(4)) {
    const auto pts = points_of(c.frame);
    std::set<std::uint64_t> got, want;
    for (const auto& p : pts) {
      got.insert(p.filter.bits());
      std::vector<Elem> table(c.frame->size());
      for (Elem a = 0; a < c.frame->size(); ++a) table[a] = p(a) ? two->top() : two->bottom();
      REQUIRE(check_frame_hom(*c.frame, *two, table).passed);
    }
    for (ElemSet p : oracle::points(*c.frame)) want.insert(p.bits());
    REQUIRE(got == want);
  }
}

TEST_CASE("corpus frames are spatial and spatialization is injective") {
  for (const auto& c : frame_corpus(4)) {
    const SpatialReport r = is_spatial(c.frame);
    REQUIRE(r.spatial);
    REQUIRE(is_injective(spatialization(c.frame)) == r.spatial);
  }
}

TEST_CASE("Sigma commutes with meets and joins") {
  for (const auto& c : frame_corpus(3)) {
    const Frame& f = *c.frame;
    const FrameHom s = spatialization(c.frame);
    const Frame& o = *s.target;
    for (Elem a = 0; a < f.size(); ++a) {
      for (Elem b = 0; b < f.size(); ++b) {
        REQUIRE(s(f.meet(a, b)) == o.meet(s(a), s(b)));
        REQUIRE(s(f.join(a, b)) == o.join(s(a), s(b)));
      }
    }
  }
}

TEST_CASE("pt of SQUARE is the discrete two-point space") {
  const FiniteSpace sp = pt_space(fixtures::square());
  CHECK(sp.size() == 2);
  CHECK(sp.opens().size() == 4);
  CHECK(pt_space(fixtures::two()).size() == 1);
}

TEST_CASE("sobrification") {
  const Sobrification sierp = sobrification(fixtures::sierpinski());
  CHECK(sierp.validation.passed);
  CHECK(sierp.target.size() == 2);
  CHECK(sierp.point_map[0] != sierp.point_map[1]);

  const Sobrification indisc = sobrification(fixtures::indiscrete(2));
  CHECK(indisc.validation.passed);
  CHECK(indisc.target.size() == 1);
  CHECK(indisc.point_map[0] == indisc.point_map[1]);

  const Sobrification one = sobrification(fixtures::discrete(1));
  CHECK(one.target.size() == 1);
}

}
