#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "localelab/frame_maps.hpp"

namespace localelab {

/// Lexicographically minimal strict-order adjacency encoding over all
/// relabellings. Two posets are isomorphic iff their codes agree. n <= 8.
std::uint64_t canonical_code(const Poset& poset);

/// One representative per isomorphism class of posets on n points, labelled
/// "0".."n-1", in increasing canonical-code order.
std::vector<Poset> posets_up_to_iso(int n);

struct CorpusFrame {
  std::string name;  // "D<n>.<k>": downsets of the k-th poset on n points
  Poset base;
  FramePtr frame;
};

/// Downset frames of every poset with 1..max_poset_size points.
std::vector<CorpusFrame> frame_corpus(int max_poset_size);

namespace fixtures {

FramePtr two();     // 0 < 1
FramePtr chain3();  // 0 < m < 1
FramePtr square();  // 0 < a, b < 1
/// Labels and pairs of the diamond M3 (not distributive).
std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>> m3();
FiniteSpace sierpinski();  // points x, y; opens {}, {x}, {x,y}
FiniteSpace discrete(int n);
FiniteSpace indiscrete(int n);

}  // namespace fixtures

}  // namespace localelab
