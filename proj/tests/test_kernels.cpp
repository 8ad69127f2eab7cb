#include <doctest.h>

#include "localelab/corpus.hpp"
#include "localelab/kernels.hpp"
#include "localelab/points.hpp"
#include "localelab/sublocales.hpp"

using namespace localelab;

TEST_SUITE("kernels") {

TEST_CASE("parallel scans equal the serial reference on the corpus") {
  for (const auto& c : frame_corpus(4)) {
    REQUIRE(kernels::sublocale_scan(*c.frame) == kernels::sublocale_scan_serial(*c.frame));
    REQUIRE(kernels::point_scan(*c.frame) == kernels::point_scan_serial(*c.frame));
  }
}

TEST_CASE("parallel scans equal the serial reference on larger frames") {
  std::vector<std::string> labels;
  std::vector<std::pair<Elem, Elem>> chain;
  for (int i = 0; i < 13; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i > 0) chain.emplace_back(i - 1, i);
  }
  const Frame big = downset_frame(Poset::from_pairs(labels, chain));
  CHECK(big.size() == 14);
  const auto par = kernels::sublocale_scan(big);
  CHECK(par == kernels::sublocale_scan_serial(big));
  CHECK(par.size() == 8192);
  CHECK(kernels::point_scan(big) == kernels::point_scan_serial(big));
}

TEST_CASE("results come in canonical order") {
  for (const auto& c : frame_corpus(3)) {
    const auto subs = kernels::sublocale_scan(*c.frame);
    for (std::size_t i = 1; i < subs.size(); ++i) {
      const bool ordered = subs[i - 1].size() < subs[i].size() ||
                           (subs[i - 1].size() == subs[i].size() && subs[i - 1].bits() < subs[i].bits());
      REQUIRE(ordered);
    }
  }
}

TEST_CASE("lattice and point wrappers agree across both paths") {
  for (const auto& c : frame_corpus(3)) {
    CHECK(enumerate_sublocales(c.frame).all() == enumerate_sublocales_serial(c.frame).all());
    CHECK(points_of(c.frame) == points_of_serial(c.frame));
  }
  CHECK(kernels::max_threads() >= 1);
}

}
