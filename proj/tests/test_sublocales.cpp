#include <doctest.h>

#include <algorithm>

#include "localelab/corpus.hpp"
#include "localelab/error.hpp"
#include "localelab/points.hpp"
#include "localelab/sublocales.hpp"
#include "oracles.hpp"

using namespace localelab;

namespace {

std::vector<FramePtr> small_frames(int max_poset) {
  std::vector<FramePtr> out{fixtures::two(), fixtures::chain3(), fixtures::square()};
  for (const auto& c : frame_corpus(max_poset)) out.push_back(c.frame);
  return out;
}

}  // namespace

TEST_SUITE("sublocales") {

TEST_CASE("fixture counts") {
  CHECK(enumerate_sublocales(fixtures::two()).size() == 2);
  CHECK(enumerate_sublocales(fixtures::chain3()).size() == 4);
  CHECK(enumerate_sublocales(fixtures::square()).size() == 4);
  const auto sl = enumerate_sublocales(fixtures::chain3());
  CHECK(sl.render(sl.bottom()) == "{1}");
  CHECK(sl.render(sl.top()) == "{0,m,1}");
}

TEST_CASE("enumeration equals the exhaustive subset oracle") {
  for (const auto& f : small_frames(4)) {
    const auto sl = enumerate_sublocales(f, 16);
    auto expected = oracle::sublocales(*f);
    auto got = sl.all();
    std::sort(expected.begin(), expected.end(), [](ElemSet a, ElemSet b) { return a.bits() < b.bits(); });
    std::sort(got.begin(), got.end(), [](ElemSet a, ElemSet b) { return a.bits() < b.bits(); });
    REQUIRE(got == expected);
    REQUIRE(sl.size() == (1 << points_of(f).size()));
    for (ElemSet s : sl.all()) REQUIRE(is_sublocale(*f, s).passed);
  }
}

TEST_CASE("open and closed sublocales are complements") {
  for (const auto& f : small_frames(4)) {
    const auto sl = enumerate_sublocales(f, 16);
    const oracle::Tables t(*f);
    for (Elem a = 0; a < f->size(); ++a) {
      const ElemSet up = f->up(a);
      ElemSet open;
      for (Elem x = 0; x < f->size(); ++x) open.insert(t.imp[a * t.n + x]);
      REQUIRE(sl.members(sl.closed(a)) == up);
      REQUIRE(sl.members(sl.open(a)) == open);
      REQUIRE(sl.complement(sl.open(a)) == sl.closed(a));
      REQUIRE(sl.meet(sl.open(a), sl.closed(a)) == sl.bottom());
      REQUIRE(sl.join(sl.open(a), sl.closed(a)) == sl.top());
    }
  }
}

TEST_CASE("joins are meet-closures of unions and meets are intersections") {
  for (const auto& f : small_frames(3)) {
    const auto sl = enumerate_sublocales(f, 16);
    const auto subs = oracle::sublocales(*f);
    for (int a = 0; a < sl.size(); ++a) {
      for (int b = 0; b < sl.size(); ++b) {
        const ElemSet u = sl.members(a) | sl.members(b);
        REQUIRE(sl.members(sl.join(a, b)) == oracle::least_containing(subs, u, f->all()));
        REQUIRE(sub_join(f, {sl.sublocale(a), sl.sublocale(b)}).members == sl.members(sl.join(a, b)));
        REQUIRE(meet_closure(*f, u) == sl.members(sl.join(a, b)));
        REQUIRE(sl.members(sl.meet(a, b)) == (sl.members(a) & sl.members(b)));
      }
    }
  }
}

TEST_CASE("the printed join formula differs from the join on CHAIN3") {
  // {join M : M subset of {1} u {1}} contains the empty join 0.
  const FramePtr ch = fixtures::chain3();
  const auto sl = enumerate_sublocales(ch);
  const ElemSet u = sl.members(sl.bottom()) | sl.members(sl.bottom());
  CHECK(join_closure(*ch, u) == (ElemSet::single(ch->bottom()) | ElemSet::single(ch->top())));
  CHECK(sl.members(sl.join(sl.bottom(), sl.bottom())) == ElemSet::single(ch->top()));
}

TEST_CASE("sloc-core is the largest sublocale inside a meet-closed set") {
  for (const auto& f : small_frames(3)) {
    const auto subs = oracle::sublocales(*f);
    const oracle::Tables t(*f);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f->size()); ++bits) {
      const ElemSet a{bits};
      bool meet_closed = a.contains(f->top());
      a.for_each([&](Elem x) { a.for_each([&](Elem y) { meet_closed = meet_closed && a.contains(t.m[x * t.n + y]); }); });
      if (!meet_closed) continue;
      REQUIRE(sloc_core(f, a).members == oracle::largest_inside(subs, a));
      const auto trace = sloc_core_trace(*f, a);
      REQUIRE(trace.front() == a);
      REQUIRE(trace.back() == sloc_core(f, a).members);
    }
  }
  try {
    sloc_core(fixtures::chain3(), ElemSet{0b011});  // {0,m} lacks top
    FAIL("expected NotMeetClosed");
  } catch (const LocaleError& e) {
    CHECK(e.kind() == ErrorKind::NotMeetClosed);
  }
}

TEST_CASE("every sublocale is generated by o(x) v c(y)") {
  for (const auto& f : small_frames(3)) {
    if (f->size() > 6) continue;
    const auto sl = enumerate_sublocales(f);
    for (int s = 0; s < sl.size(); ++s) REQUIRE(generation_check(sl, s).passed);
  }
}

TEST_CASE("image and preimage form an adjunction with unit and counit") {
  const auto corpus = frame_corpus(3);
  for (const auto& mc : corpus) {
    for (const auto& lc : corpus) {
      const auto lsl = share(enumerate_sublocales(lc.frame)), msl = share(enumerate_sublocales(mc.frame));
      for (const auto& h : enumerate_frame_homs(mc.frame, lc.frame)) {
        const InducedMaps ind = induce(right_adjoint(h), lsl, msl);
        REQUIRE(check_adjunction(ind).report.passed);
        for (int s = 0; s < lsl->size(); ++s) {
          // image is pointwise
          ElemSet img;
          lsl->members(s).for_each([&](Elem x) { img.insert(ind.map(x)); });
          REQUIRE(msl->members(ind.img(s)) == img);
          REQUIRE(lsl->le(s, ind.pre(ind.img(s))));
        }
        for (int t = 0; t < msl->size(); ++t) {
          REQUIRE(msl->le(ind.img(ind.pre(t)), t));
          REQUIRE(lsl->members(ind.pre(t)) == sloc_core(lc.frame, set_preimage(ind.map, msl->members(t))).members);
        }
      }
    }
  }
}

TEST_CASE("size limit is enforced") {
  try {
    enumerate_sublocales(fixtures::square(), 3);
    FAIL("expected SizeLimit");
  } catch (const LocaleError& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}

}
