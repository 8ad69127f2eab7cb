#include <doctest.h>

#include <array>

#include "localelab/corpus.hpp"
#include "localelab/error.hpp"
#include "localelab/interior_ops.hpp"

using namespace localelab;

namespace {

SublocaleLatticePtr lattice_of(const FramePtr& f) { return share(enumerate_sublocales(f)); }

InducedMaps two_to_chain3(int which) {
  const auto homs = enumerate_frame_homs(fixtures::chain3(), fixtures::two());
  const LocalicMap f = right_adjoint(homs.at(which));
  return induce(f, lattice_of(f.source), lattice_of(f.target));
}

/// Every table on S_l(L), kept when it is an interior operator.
std::vector<InteriorOperator> all_interior(const SublocaleLatticePtr& sl) {
  const int n = sl->size();
  std::vector<InteriorOperator> out;
  std::vector<int> t(n, 0);
  while (true) {
    if (check_interior(*sl, t).passed()) out.push_back({sl, t});
    int i = 0;
    while (i < n && ++t[i] == n) t[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("interior-ops") {

TEST_CASE("discrete and trivial operators") {
  const auto sl = lattice_of(fixtures::chain3());
  CHECK(check_interior(discrete_op(sl)).passed());
  CHECK(check_interior(trivial_op(sl)).passed());
  const InteriorOperator t = trivial_op(sl);
  for (int s = 0; s < sl->size(); ++s) CHECK(t(s) == (s == sl->top() ? sl->top() : sl->bottom()));
}

TEST_CASE("axiom violations name their witness") {
  const auto sl = lattice_of(fixtures::chain3());
  std::vector<int> grow = discrete_op(sl).table;
  grow[0] = sl->top();  // {1} |-> L
  const AxiomReport r = check_interior(*sl, grow);
  CHECK_FALSE(r.at("I1").passed);
  CHECK(r.at("I1").witness_ids.front() == 0);
  std::vector<int> low = discrete_op(sl).table;
  low[sl->top()] = 0;
  CHECK_FALSE(check_interior(*sl, low).at("I3").passed);
}

TEST_CASE("random operators are valid and sit between trivial and discrete") {
  for (const auto& c : frame_corpus(3)) {
    const auto sl = lattice_of(c.frame);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 100; ++k) {
      const InteriorOperator a = random_interior(sl, rng), b = random_interior(sl, rng);
      REQUIRE(check_interior(a).passed());
      REQUIRE(op_le(trivial_op(sl), a).holds);
      REQUIRE(op_le(a, discrete_op(sl)).holds);
      const std::array<InteriorOperator, 2> pair{a, b};
      REQUIRE(check_interior(op_join(pair)).passed());
      REQUIRE(check_interior(op_meet(pair)).passed());
      REQUIRE(op_le(op_meet(pair), a).holds);
      REQUIRE(op_le(a, op_join(pair)).holds);
    }
  }
}

TEST_CASE("operator families need a common lattice and at least one member") {
  CHECK_THROWS_AS(op_join(std::span<const InteriorOperator>{}), LocaleError);
  const std::array<InteriorOperator, 2> mixed{discrete_op(lattice_of(fixtures::two())),
                                              discrete_op(lattice_of(fixtures::chain3()))};
  CHECK_THROWS_AS(op_meet(mixed), LocaleError);
}

TEST_CASE("initial operator of TWO -> CHAIN3 with the trivial operator fails I3") {
  for (int which = 0; which < 2; ++which) {
    const InducedMaps f = two_to_chain3(which);
    const InitialResult r = initial_interior(f, trivial_op(f.target));
    CHECK_FALSE(r.image_is_total);
    CHECK(r.candidate(f.source->top()) == f.source->bottom());
    CHECK_FALSE(r.report.at("I3").passed);
    CHECK(r.report.at("I1").passed);
    CHECK(r.report.at("I2").passed);
  }
}

TEST_CASE("initial operator of the identity returns the operator") {
  const auto sl = lattice_of(fixtures::square());
  const InducedMaps id = induce(identity_localic(sl->host()), sl, sl);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const InteriorOperator op = random_interior(sl, rng);
    const InitialResult r = initial_interior(id, op);
    CHECK(r.candidate == op);
    CHECK(r.report.passed());
  }
}

TEST_CASE("I1 of the initial operator fails exactly at unit gaps") {
  // With the discrete operator on M the candidate is S |-> f_{-1}[f[S]].
  for (const auto& mc : frame_corpus(3)) {
    for (const auto& lc : frame_corpus(3)) {
      const auto lsl = lattice_of(lc.frame), msl = lattice_of(mc.frame);
      for (const auto& h : enumerate_frame_homs(mc.frame, lc.frame)) {
        const InducedMaps f = induce(right_adjoint(h), lsl, msl);
        const InitialResult r = initial_interior(f, discrete_op(msl));
        bool gap = false;
        for (int s = 0; s < lsl->size(); ++s) gap = gap || f.pre(f.img(s)) != s;
        REQUIRE(r.report.at("I1").passed == !gap);
        REQUIRE(r.report.at("I3").passed == (r.image_is_total || r.candidate(lsl->top()) == lsl->top()));
      }
    }
  }
}

TEST_CASE("least continuous source is the minimum over all admissible operators") {
  const auto corpus = frame_corpus(2);
  std::vector<FramePtr> sources{fixtures::chain3(), fixtures::square()};
  for (const auto& l : sources) {
    const auto lsl = lattice_of(l);
    const auto admissible_pool = all_interior(lsl);
    for (const auto& mc : corpus) {
      const auto msl = lattice_of(mc.frame);
      for (const auto& h : enumerate_frame_homs(mc.frame, l)) {
        const InducedMaps f = induce(right_adjoint(h), lsl, msl);
        for (const InteriorOperator& op_m : {discrete_op(msl), trivial_op(msl)}) {
          const InteriorOperator least = least_continuous_source(f, op_m);
          REQUIRE(check_interior(least).passed());
          REQUIRE(is_I_continuous(f, least, op_m).passed);
          for (const auto& cand : admissible_pool) {
            if (is_I_continuous(f, cand, op_m).passed) REQUIRE(op_le(least, cand).holds);
          }
        }
      }
    }
  }
}

TEST_CASE("composition of continuous maps") {
  const auto sl = lattice_of(fixtures::square());
  const InducedMaps id = induce(identity_localic(sl->host()), sl, sl);
  const InteriorOperator d = discrete_op(sl), t = trivial_op(sl);
  CHECK(check_composition(id, id, d, d, d).verdict == Verdict::Pass);
  // identity is not continuous from (L, trivial) to (L, discrete)
  CHECK(check_composition(id, id, t, d, d).verdict == Verdict::PreconditionUnmet);
  CHECK(compose_induced(id, id).image == id.image);
}

TEST_CASE("universal property with g the identity") {
  const InducedMaps f = two_to_chain3(0);
  const InducedMaps id = induce(identity_localic(f.source->host()), f.source, f.source);
  const InteriorOperator d = discrete_op(f.target);
  const UniversalReport r = check_universal_property(f, d, id, discrete_op(f.source));
  CHECK(r.agree());
}

TEST_CASE("open preimage under continuous maps") {
  const auto lsl = lattice_of(fixtures::chain3()), msl = lattice_of(fixtures::square());
  std::mt19937_64 rng(11);
  for (const auto& h : enumerate_frame_homs(fixtures::square(), fixtures::chain3())) {
    const InducedMaps f = induce(right_adjoint(h), lsl, msl);
    for (int k = 0; k < 20; ++k) {
      const InteriorOperator op_m = random_interior(msl, rng);
      const InteriorOperator op_l = least_continuous_source(f, op_m);
      CHECK(check_open_preimage(f, op_l, op_m).verdict == Verdict::Pass);
      for (int t : open_fixpoints(op_m)) CHECK(op_l(f.pre(t)) == f.pre(t));
    }
  }
}

}
