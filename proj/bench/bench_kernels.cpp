// Serial vs OpenMP timings for the subset-scan kernels.
//
// usage: bench_kernels [repetitions]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "localelab/kernels.hpp"

using namespace localelab;

namespace {

struct Case {
  std::string name;
  Frame frame;
};

Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return Poset::from_pairs(labels, {});
}

Poset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Elem, Elem>> le;
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i > 0) le.emplace_back(i - 1, i);
  }
  return Poset::from_pairs(labels, le);
}

// Two chains of length n above a common root.
Poset fork(int n) {
  std::vector<std::string> labels{"r"};
  std::vector<std::pair<Elem, Elem>> le;
  for (const std::string arm : {"a", "b"}) {
    Elem prev = 0;
    for (int i = 0; i < n; ++i) {
      labels.push_back(arm + std::to_string(i));
      const Elem cur = static_cast<Elem>(labels.size() - 1);
      le.emplace_back(prev, cur);
      prev = cur;
    }
  }
  return Poset::from_pairs(labels, le);
}

template <class Fn>
double time_ms(int reps, Fn&& fn, std::size_t& out) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) out = fn().size();
  const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
  return d.count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::vector<Case> cases;
  cases.push_back({"chain(13)", downset_frame(chain(13))});
  cases.push_back({"antichain(4)", downset_frame(antichain(4))});
  cases.push_back({"fork(2)", downset_frame(fork(2))});
  cases.push_back({"chain(15)", downset_frame(chain(15))});

  std::printf("threads %d, repetitions %d\n", kernels::max_threads(), reps);
  std::printf("%-10s %-14s %4s %8s %12s %12s %8s %s\n", "kernel", "frame", "|L|", "results", "serial_ms",
              "parallel_ms", "speedup", "agree");
  int mismatches = 0;
  for (const auto& c : cases) {
    struct Kernel {
      const char* name;
      std::vector<ElemSet> (*serial)(const Frame&);
      std::vector<ElemSet> (*parallel)(const Frame&);
    };
    for (const Kernel& k : {Kernel{"sublocale", kernels::sublocale_scan_serial, kernels::sublocale_scan},
                            Kernel{"point", kernels::point_scan_serial, kernels::point_scan}}) {
      std::size_t ns = 0, np = 0;
      const double ts = time_ms(reps, [&] { return k.serial(c.frame); }, ns);
      const double tp = time_ms(reps, [&] { return k.parallel(c.frame); }, np);
      const bool agree = k.serial(c.frame) == k.parallel(c.frame);
      mismatches += !agree;
      std::printf("%-10s %-14s %4d %8zu %12.2f %12.2f %8.2f %s\n", k.name, c.name.c_str(), c.frame.size(), np, ts,
                  tp, tp > 0 ? ts / tp : 0.0, agree ? "yes" : "NO");
    }
  }
  return mismatches == 0 ? 0 : 1;
}
