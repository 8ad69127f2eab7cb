#include "localelab/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace localelab {

std::uint64_t canonical_code(const Poset& poset) {
  const int n = poset.size();
  if (n > 8) throw LocaleError(ErrorKind::SizeLimit, "canonical form limited to 8 points");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    // perm[i] is the new position of element i
    std::uint64_t code = 0;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (a != b && poset.le(a, b)) code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Poset from_code(int n, std::uint64_t code) {
  std::vector<ElemSet> below(n);
  for (Elem b = 0; b < n; ++b) {
    below[b].insert(b);
    for (Elem a = 0; a < n; ++a) {
      if ((code >> (a * n + b)) & 1u) below[b].insert(a);
    }
  }
  return Poset::from_downsets(numeric_labels(n), std::move(below));
}

}  // namespace

std::vector<Poset> posets_up_to_iso(int n) {
  if (n < 1 || n > 6) throw LocaleError(ErrorKind::SizeLimit, "poset generation supports 1..6 points");
  // Every poset has a linear extension, so it suffices to scan strict
  // relations contained in i < j and keep the transitive ones.
  std::vector<std::pair<Elem, Elem>> slots;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::set<std::uint64_t> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<ElemSet> below(n);
    for (Elem i = 0; i < n; ++i) below[i].insert(i);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1u) below[slots[k].second].insert(slots[k].first);
    }
    bool transitive = true;
    for (Elem j = 0; j < n && transitive; ++j) {
      below[j].for_each([&](Elem i) { transitive = transitive && below[i].subset_of(below[j]); });
    }
    if (!transitive) continue;
    codes.insert(canonical_code(Poset::from_downsets(numeric_labels(n), std::move(below))));
  }
  std::vector<Poset> out;
  for (std::uint64_t code : codes) out.push_back(from_code(n, code));
  return out;
}

std::vector<CorpusFrame> frame_corpus(int max_poset_size) {
  std::vector<CorpusFrame> out;
  for (int n = 1; n <= max_poset_size; ++n) {
    const auto posets = posets_up_to_iso(n);
    for (std::size_t k = 0; k < posets.size(); ++k) {
      out.push_back({"D" + std::to_string(n) + "." + std::to_string(k), posets[k], share(downset_frame(posets[k]))});
    }
  }
  return out;
}

namespace fixtures {

FramePtr two() { return share(build_frame({"0", "1"}, {{"0", "1"}})); }

FramePtr chain3() { return share(build_frame({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}})); }

FramePtr square() {
  return share(build_frame({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
}

std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>> m3() {
  return {{"0", "a", "b", "c", "1"},
          {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}};
}

FiniteSpace sierpinski() { return FiniteSpace({"x", "y"}, {ElemSet{0b00}, ElemSet{0b01}, ElemSet{0b11}}); }

FiniteSpace discrete(int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back("x" + std::to_string(i));
  std::vector<ElemSet> opens;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) opens.emplace_back(b);
  return FiniteSpace(std::move(pts), std::move(opens));
}

FiniteSpace indiscrete(int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back("x" + std::to_string(i));
  return FiniteSpace(std::move(pts), {ElemSet{}, ElemSet::full(n)});
}

}  // namespace fixtures

}  // namespace localelab
