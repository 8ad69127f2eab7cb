#include <doctest.h>

#include <array>

#include "localelab/corpus.hpp"
#include "localelab/h_ops.hpp"

using namespace localelab;

namespace {

FragmentPtr fragment_of(const FramePtr& f) { return share(complemented_fragment(share(enumerate_sublocales(f, 16)))); }

/// h2 by brute force over all pairs.
bool h2_holds(const ComplementedFragment& frag, const std::vector<int>& table) {
  const auto& sl = *frag.lattice;
  for (int p = 0; p < frag.size(); ++p) {
    for (int q = 0; q < frag.size(); ++q) {
      const int s = frag.indices[p], t = frag.indices[q];
      if (sl.le(s, t) && !sl.le(sl.meet(s, table[p]), sl.meet(t, table[q]))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("h-ops") {

TEST_CASE("every sublocale of a corpus frame is complemented") {
  for (const auto& c : frame_corpus(4)) REQUIRE(fragment_of(c.frame)->is_everything());
  const auto frag = fragment_of(fixtures::chain3());
  CHECK(frag->size() == 4);
  CHECK(frag->contains(frag->lattice->bottom()));
  CHECK(frag->contains(frag->lattice->top()));
}

TEST_CASE("h1 is reported vacuous and the trivial table passes") {
  const auto frag = fragment_of(fixtures::chain3());
  const AxiomReport r = check_h(trivial_h(frag));
  CHECK(r.passed());
  CHECK(r.at("h1").vacuous);
  CHECK(check_h(discrete_h(frag)).passed());
}

TEST_CASE("a hand-written CHAIN3 table matches the exhaustive h2 scan") {
  const auto frag = fragment_of(fixtures::chain3());
  const auto& sl = *frag->lattice;
  const Frame& f = *sl.host();
  auto idx = [&](std::initializer_list<const char*> labels) {
    ElemSet s;
    for (const char* l : labels) s.insert(f.index_of(l));
    return sl.index_of(s);
  };
  std::vector<int> table(frag->size());
  table[frag->position[idx({"0", "1"})]] = idx({"m", "1"});
  table[frag->position[idx({"0", "m", "1"})]] = idx({"0", "m", "1"});
  table[frag->position[idx({"m", "1"})]] = idx({"1"});
  table[frag->position[idx({"1"})]] = idx({"1"});
  CHECK(check_h(*frag, table).at("h2").passed == h2_holds(*frag, table));
}

TEST_CASE("random operators, joins and meets") {
  for (const auto& c : frame_corpus(3)) {
    const auto frag = fragment_of(c.frame);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
      const HOperator x = random_h(frag, rng), y = random_contractive_h(frag, rng);
      REQUIRE(check_h(x).passed());
      REQUIRE(check_h(y).passed());
      REQUIRE(h2_holds(*frag, x.table));
      REQUIRE(h_le(trivial_h(frag), x).holds);
      REQUIRE(h_le(y, discrete_h(frag)).holds);
      const std::array<HOperator, 2> pair{x, y};
      REQUIRE(check_h(h_join(pair)).passed());
      REQUIRE(check_h(h_meet(pair)).passed());
      const std::array<HOperator, 2> tx{trivial_h(frag), x};
      REQUIRE(h_meet(tx) == trivial_h(frag));
    }
    const std::array<HOperator, 2> td{trivial_h(frag), discrete_h(frag)};
    CHECK(h_join(td) == discrete_h(frag));
  }
}

TEST_CASE("a valid h operator can lie above discrete pointwise") {
  // On TWO, h({1}) = L satisfies h1-h3 but is not below h({1}) = {1}.
  const auto frag = fragment_of(fixtures::two());
  const auto& sl = *frag->lattice;
  HOperator big = discrete_h(frag);
  big.table[frag->position[sl.bottom()]] = sl.top();
  CHECK(check_h(big).passed());
  CHECK_FALSE(h_le(big, discrete_h(frag)).holds);
  CHECK(h_le(discrete_h(frag), big).holds);
}

TEST_CASE("initial h operator of TWO -> CHAIN3") {
  const auto homs = enumerate_frame_homs(fixtures::chain3(), fixtures::two());
  const LocalicMap f = right_adjoint(homs.front());
  const auto lfrag = fragment_of(f.source), mfrag = fragment_of(f.target);
  const InducedMaps ind = induce(f, lfrag->lattice, mfrag->lattice);
  const HInitialResult trivial = initial_h(ind, trivial_h(mfrag), lfrag);
  CHECK_FALSE(trivial.report.at("h3").passed);
  CHECK(trivial.candidate(lfrag->lattice->top()) == lfrag->lattice->bottom());
  CHECK(trivial.escapes.empty());
  const HInitialResult discrete = initial_h(ind, discrete_h(mfrag), lfrag);
  CHECK(discrete.candidate == discrete_h(lfrag));
  CHECK(discrete.report.passed());
}

TEST_CASE("interior operators restrict to h operators") {
  for (const auto& c : frame_corpus(3)) {
    const auto frag = fragment_of(c.frame);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 20; ++k) {
      const InteriorOperator op = random_interior(frag->lattice, rng);
      REQUIRE(check_h(restrict_to_fragment(frag, op)).passed());
    }
  }
}

TEST_CASE("h-continuity of identities and composition") {
  const auto frag = fragment_of(fixtures::square());
  const InducedMaps id = induce(identity_localic(frag->lattice->host()), frag->lattice, frag->lattice);
  const HOperator d = discrete_h(frag);
  const auto c = is_h_continuous(id, d, d);
  CHECK(c.passed);
  CHECK(c.escapes.empty());
  CHECK(check_h_composition(id, id, d, d, d).result.verdict == Verdict::Pass);
  CHECK(check_h_universal(id, d, frag, id, d).result.agree());
}

}
