#pragma once

#include <vector>

#include "localelab/lattice.hpp"

// Exhaustive subset scans behind sublocale and point enumeration. Each scan
// has an OpenMP version and a serial reference; both return the same sets
// in canonical (cardinality, bit pattern) order.
namespace localelab::kernels {

/// Subsets of the carrier containing top, closed under binary meets and
/// under x -> (-) for every x.
std::vector<ElemSet> sublocale_scan(const Frame& frame);
std::vector<ElemSet> sublocale_scan_serial(const Frame& frame);

/// Filters F such that the indicator of F is a frame hom into 2.
std::vector<ElemSet> point_scan(const Frame& frame);
std::vector<ElemSet> point_scan_serial(const Frame& frame);

/// Number of worker threads OpenMP would use (1 when built without it).
int max_threads();

}  // namespace localelab::kernels
