#include <doctest.h>

#include "localelab/corpus.hpp"
#include "localelab/error.hpp"
#include "oracles.hpp"

using namespace localelab;

TEST_SUITE("frame-maps") {

TEST_CASE("hom enumeration matches exhaustive table search") {
  std::vector<FramePtr> frames;
  for (const auto& c : frame_corpus(3)) {
    if (c.frame->size() <= 5) frames.push_back(c.frame);
  }
  frames.push_back(fixtures::square());
  for (const auto& m : frames) {
    for (const auto& l : frames) {
      REQUIRE(static_cast<long>(enumerate_frame_homs(m, l).size()) == oracle::frame_hom_count(*m, *l));
    }
  }
}

TEST_CASE("right adjoints are localic and recover their hom") {
  for (const auto& mc : frame_corpus(3)) {
    for (const auto& lc : frame_corpus(3)) {
      for (const auto& h : enumerate_frame_homs(mc.frame, lc.frame)) {
        const LocalicMap f = right_adjoint(h);
        REQUIRE(f.source == lc.frame);
        REQUIRE(f.target == mc.frame);
        // f(x) is the largest m with h(m) <= x
        for (Elem x = 0; x < lc.frame->size(); ++x) {
          ElemSet below;
          for (Elem m = 0; m < mc.frame->size(); ++m) {
            if (lc.frame->le(h(m), x)) below.insert(m);
          }
          REQUIRE(f(x) == oracle::lub(*mc.frame, below));
        }
        REQUIRE(left_adjoint(f.source, f.target, f.map) == h);
        REQUIRE_NOTHROW(make_localic_map(f.source, f.target, f.map));
      }
    }
  }
}

TEST_CASE("a meet-breaking map is rejected as NotLocalic") {
  const FramePtr sq = fixtures::square(), two = fixtures::two();
  // 0 -> 0, everything else -> 1 sends a ^ b = 0 to 0 but a, b to 1
  try {
    make_localic_map(sq, two, {0, 1, 1, 1});
    FAIL("expected NotLocalic");
  } catch (const LocaleError& e) {
    CHECK(e.kind() == ErrorKind::NotLocalic);
    CHECK(e.witness() == "a,b");
  }
}

TEST_CASE("TWO -> CHAIN3 has exactly two localic maps") {
  const auto homs = enumerate_frame_homs(fixtures::chain3(), fixtures::two());
  CHECK(homs.size() == 2);
  for (const auto& h : homs) {
    const LocalicMap f = right_adjoint(h);
    CHECK(f(fixtures::two()->top()) == fixtures::chain3()->top());
  }
}

TEST_CASE("composition and identities") {
  const FramePtr two = fixtures::two(), ch = fixtures::chain3();
  const LocalicMap f = right_adjoint(enumerate_frame_homs(ch, two).front());
  CHECK(compose_localic(identity_localic(ch), f) == f);
  CHECK(compose_localic(f, identity_localic(two)) == f);
  try {
    compose_localic(f, f);
    FAIL("expected DomainMismatch");
  } catch (const LocaleError& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
}

TEST_CASE("continuous maps give frame homs between opens") {
  const FiniteSpace s = fixtures::sierpinski();
  const ContinuousMap id{s, s, {0, 1}};
  CHECK_NOTHROW(omega_of_map(id));
  const ContinuousMap swap{s, s, {1, 0}};
  try {
    omega_of_map(swap);
    FAIL("expected NotContinuous");
  } catch (const LocaleError& e) {
    CHECK(e.kind() == ErrorKind::NotContinuous);
  }
  const ContinuousMap collapse{fixtures::discrete(2), fixtures::indiscrete(1), {0, 0}};
  CHECK_NOTHROW(omega_of_map(collapse));
}

}
