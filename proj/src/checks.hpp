#pragma once

// Per-claim evaluators shared by the verification harness and replay. Each
// one re-runs a single corpus item and returns counted outcomes; failures are
// linked to a registered anomaly only when the condition that explains them
// holds at the failing witness.

#include <map>
#include <string>
#include <vector>

#include "localelab/h_ops.hpp"
#include "localelab/points.hpp"

namespace localelab::verify::detail {

struct Finding {
  std::string summary;
  std::string anomaly;  // empty when unexplained
  std::vector<std::string> steps;
};

struct Eval {
  long instances = 0;
  long failures = 0;
  long expected = 0;
  long unmet = 0;
  long escapes = 0;
  long operators = 0;
  std::map<std::string, long> by_anomaly;
  std::vector<Finding> findings;

  void fail(Finding f);
  void add(const Eval& o);
};

Eval eval_poset_counts(int max_n, bool trace);
Eval eval_distributive(const Frame& frame, bool trace);
Eval eval_heyting(const Frame& frame, bool trace);
Eval eval_heyting_identities(const Frame& frame, bool trace);
Eval eval_heyting_printed(const Frame& frame, bool trace);

Eval eval_open_closed(const SublocaleLattice& sl, bool trace);
Eval eval_intersection(const SublocaleLattice& sl, bool trace);
Eval eval_join(const SublocaleLattice& sl, bool trace);
Eval eval_join_printed(const SublocaleLattice& sl, bool trace);
Eval eval_core(const SublocaleLattice& sl, bool trace);
Eval eval_generation(const SublocaleLattice& sl, bool trace);

/// h: M -> L; the localic map is its right adjoint L -> M.
Eval eval_localic(const FrameHom& h, bool trace);
Eval eval_adjunction(const InducedMaps& f, bool trace);

Eval eval_interior_axioms(const InteriorOperator& a, const InteriorOperator& b, bool trace);
Eval eval_upward(const InducedMaps& f, const InteriorOperator& op_l, const InteriorOperator& op_l2,
                 const InteriorOperator& op_m, bool trace);
Eval eval_h_axioms(const HOperator& a, const HOperator& b, bool trace);
Eval eval_fragment(const InteriorOperator& op, const FragmentPtr& fragment, bool trace);

Eval eval_composition(const InducedMaps& f, const InducedMaps& g, const InteriorOperator& op_l,
                      const InteriorOperator& op_m, const InteriorOperator& op_n, bool trace);
Eval eval_h_composition(const InducedMaps& f, const InducedMaps& g, const HOperator& h_l, const HOperator& h_m,
                        const HOperator& h_n, bool trace);

Eval eval_initial(const InducedMaps& f, const InteriorOperator& op_m, bool trace);
Eval eval_h_initial(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& l_fragment, bool trace);
Eval eval_coarseness(const InducedMaps& f, const InteriorOperator& op_m, const InteriorOperator& op_l, bool trace);
Eval eval_universal(const InducedMaps& f, const InteriorOperator& op_m, const InducedMaps& g,
                    const InteriorOperator& op_n, bool trace);
Eval eval_h_universal(const InducedMaps& f, const HOperator& h_m, const FragmentPtr& l_fragment,
                      const InducedMaps& g, const HOperator& h_n, bool trace);
Eval eval_open_preimage(const InducedMaps& f, const InteriorOperator& op_l, const InteriorOperator& op_m,
                        bool trace);

Eval eval_spatial(const FramePtr& frame, bool trace);
Eval eval_sobrification(const Poset& base, bool trace);

}  // namespace localelab::verify::detail
