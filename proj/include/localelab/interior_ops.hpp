#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "localelab/sublocales.hpp"

namespace localelab {

/// One axiom outcome. A failed axiom always names the sublocale indices
/// that violate it, so the failure can be re-evaluated.
struct AxiomResult {
  std::string name;
  bool passed = true;
  bool vacuous = false;
  std::string witness;
  std::vector<int> witness_ids;
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;

  bool passed() const;
  /// Outcome of the named axiom; throws InvalidInput if it was not evaluated.
  const AxiomResult& at(const std::string& name) const;
};

/// Table on the sublocale indices of one lattice. Any total table is a
/// candidate; check_interior decides whether it is an interior operator.
struct InteriorOperator {
  SublocaleLatticePtr lattice;
  std::vector<int> table;

  int operator()(int s) const { return table[s]; }
  bool operator==(const InteriorOperator& o) const { return table == o.table; }
};

/// (I1) i(S) <= S, (I2) S <= T => i(S) <= i(T), (I3) i(L) = L.
AxiomReport check_interior(const SublocaleLattice& lattice, const std::vector<int>& table);
inline AxiomReport check_interior(const InteriorOperator& op) { return check_interior(*op.lattice, op.table); }

InteriorOperator discrete_op(const SublocaleLatticePtr& lattice);
InteriorOperator trivial_op(const SublocaleLatticePtr& lattice);

/// Pointwise join/meet; throws EmptyFamily or HostMismatch.
InteriorOperator op_join(std::span<const InteriorOperator> family);
InteriorOperator op_meet(std::span<const InteriorOperator> family);

struct OrderCheck {
  bool holds = true;
  int witness = -1;  // first S with i(S) not inside j(S)
};

/// i(S) <= j(S) for all S.
OrderCheck op_le(const InteriorOperator& i, const InteriorOperator& j);

/// Random valid operator: S |-> join of g(T) over T <= S, for a random
/// contractive g, with the top entry forced to L.
InteriorOperator random_interior(const SublocaleLatticePtr& lattice, std::mt19937_64& rng);

struct ContinuityReport {
  bool passed = true;
  int witness = -1;  // T in S_l(M)
  int checked = 0;
};

/// f_{-1}[i_M(T)] <= i_L(f_{-1}[T]) for every T in S_l(M).
ContinuityReport is_I_continuous(const InducedMaps& f, const InteriorOperator& op_l, const InteriorOperator& op_m);

enum class Verdict { Pass, Fail, PreconditionUnmet };
std::string_view to_string(Verdict v);

struct CompositionReport {
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

/// Induced maps of g after f, on the outer lattices of `f` and `g`.
InducedMaps compose_induced(const InducedMaps& g, const InducedMaps& f);

/// With f: L -> M and g: M -> N both I-continuous, g f is I-continuous;
/// also (g f)_{-1} = f_{-1} g_{-1} and (g f)[S] = g[f[S]] on all sublocales.
CompositionReport check_composition(const InducedMaps& f, const InducedMaps& g, const InteriorOperator& op_l,
                                    const InteriorOperator& op_m, const InteriorOperator& op_n);

struct InitialResult {
  InteriorOperator candidate;
  AxiomReport report;         // I1, I2, I3 and "f I-continuous"
  bool image_is_total = false;  // f[L] = M
};

/// S |-> f_{-1}[i_M(f[S])], returned with its axiom report rather than
/// rejected when an axiom fails.
InitialResult initial_interior(const InducedMaps& f, const InteriorOperator& op_m);

/// Least interior operator on L for which f is I-continuous:
/// S |-> join{ f_{-1}[i_M(T)] : f_{-1}[T] <= S }.
InteriorOperator least_continuous_source(const InducedMaps& f, const InteriorOperator& op_m);

struct UniversalReport {
  bool g_continuous = false;   // (N, op_N) -> (L, initial)
  bool fg_continuous = false;  // (N, op_N) -> (M, op_M)
  int g_witness = -1;
  int fg_witness = -1;
  bool agree() const { return g_continuous == fg_continuous; }
};

/// g: N -> L, f: L -> M. Checks g continuous for the initial operator iff f g continuous.
UniversalReport check_universal_property(const InducedMaps& f, const InteriorOperator& op_m, const InducedMaps& g,
                                         const InteriorOperator& op_n);

/// All S with i(S) = S.
std::vector<int> open_fixpoints(const InteriorOperator& op);

struct OpenPreimageReport {
  Verdict verdict = Verdict::Pass;
  int witness = -1;  // open T of M whose preimage is not open
};

OpenPreimageReport check_open_preimage(const InducedMaps& f, const InteriorOperator& op_l,
                                       const InteriorOperator& op_m);

struct FamilyProbe {
  InducedMaps g;  // N -> L
  InteriorOperator op_n;
};

struct FamilyReport {
  InteriorOperator candidate;
  AxiomReport axioms;
  int continuity_failures = 0;  // maps f_i not continuous for the candidate
  int probes = 0;
  int probe_disagreements = 0;
};

/// Join of the per-map initial operators on the common source, then the
/// continuity and lifting checks for every probe g.
FamilyReport family_initial_check(std::span<const InducedMaps> maps, std::span<const InteriorOperator> ops,
                                  std::span<const FamilyProbe> probes);

}  // namespace localelab
