#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gyro/finite.hpp"
#include "gyro/report.hpp"
#include "gyro/topology.hpp"

namespace gyro {

/// A finite gyrogroup together with a topology on its carrier.
struct Instance {
  std::string name;
  FiniteGyrogroup group;
  FiniteTopology topology;
};

struct WitnessedBool {
  bool value = false;
  std::string witness;
  explicit operator bool() const { return value; }
};

// joint continuity of +: on a finite space this is exactly
// min_nbhd(x) + min_nbhd(y) subset of min_nbhd(x + y) for all pairs
WitnessedBool check_paratopological(const FiniteGyrogroup& g,
                                    const FiniteTopology& t);

// every gyration fixes the minimal neighborhood of 0 setwise (every base at 0
// of a finite space contains it, so this decides the existential definition)
bool check_strongly(const FiniteGyrogroup& g, const FiniteTopology& t);

bool inverse_continuous_at_zero(const FiniteGyrogroup& g,
                                const FiniteTopology& t);

// continuity of negation everywhere
bool check_topological(const FiniteGyrogroup& g, const FiniteTopology& t);

enum class Separation { none, t0, t1, t2 };

std::string to_string(Separation s);

// strongest level that holds; on finite carriers t1 and t2 coincide with
// discreteness
Separation separation(const FiniteTopology& t);

enum class HsValue { one, unbounded };

std::string to_string(HsValue v);

// Hausdorff number specialized to a finite carrier: every neighborhood of 0
// contains M = min_nbhd(0) and V >= M forces V -. V >= M -. M, so the search
// collapses to {1, unbounded}. Both the defining search (over enumerable
// neighborhoods of 0) and the M-shortcut run and must agree.
HsValue hausdorff_number(const FiniteGyrogroup& g, const FiniteTopology& t);
HsValue weak_hausdorff_number(const FiniteGyrogroup& g,
                              const FiniteTopology& t);

// the two-clause subordination condition for a family of neighborhoods of 0
bool is_subordinated(const FiniteGyrogroup& g, const std::vector<Mask>& family,
                     Mask u);

bool is_omega_balanced(const FiniteGyrogroup& g, const FiniteTopology& t);

bool is_omega_good(const FiniteGyrogroup& g, const FiniteTopology& t, Mask v);

// builds V = union of V_n with V_1 = chain[0], V_n = V_{n-1} + chain[n-1],
// requiring u0 >= chain[0] >= ... and chain[k+1] + chain[k+1] <= chain[k];
// the result is certified open, omega-good, and inside u0
Mask good_refinement(const FiniteGyrogroup& g, const FiniteTopology& t,
                     Mask u0, const std::vector<Mask>& chain);

struct InvariantCoreResult {
  Mask core = 0;
  bool condition_d = false;  // intersection of -V already falls inside each U
  Report certificate;
};

// N = intersection of U and -U over the family; hypotheses (a)-(c) are
// checked, (d) selects the variant that needs no gyrocommutativity, and
// the certificate covers subgyrogroup-ness, full gyration invariance and the
// normality criterion; with (d), also N = intersection of U and closedness
InvariantCoreResult invariant_core(const FiniteGyrogroup& g,
                                   const FiniteTopology& t,
                                   const std::vector<Mask>& gamma);

struct GeneratedTopology {
  std::optional<FiniteTopology> topology;
  Report report;
  bool ok() const { return topology.has_value(); }
};

// topology generated by a neighborhood family of 0 satisfying the five base
// conditions (each checked, the failing one reported with a witness); the
// result is certified to have {a + U} as a base, jointly continuous addition,
// and a gyration-invariant base at 0
GeneratedTopology generate_topology(const FiniteGyrogroup& g,
                                    const std::vector<Mask>& family);

// base laws at 0 plus the round trip: regenerating from the gyration
// invariant neighborhoods of 0 reproduces the topology on strongly
// paratopological instances
Report base_properties(const FiniteGyrogroup& g, const FiniteTopology& t);

// (a+U)+W = a+(U+W); U+V <= W forces -V-U <= -W; V+V <= U forces
// -(cl(-V)) <= U — all over the gyration-invariant base sets
Report strongly_lemmas(const FiniteGyrogroup& g, const FiniteTopology& t);

struct CosetSpace {
  std::vector<Mask> cosets;     // coset of 0 first
  std::vector<int> projection;  // element -> coset index
  FiniteTopology topology;
  Report certificate;           // projection continuous and open
};

// coset space G/H for an L-subgyrogroup H with the finest topology making
// the projection continuous
CosetSpace quotient_topology(const FiniteGyrogroup& g, const FiniteTopology& t,
                             Mask h);

enum class RefineMode { t0, t1, t2 };

std::string to_string(RefineMode m);

struct RefinementResult {
  bool infeasible = false;
  std::string infeasibility_reason;
  std::vector<Mask> gamma;
  Mask core = 0;
  std::optional<QuotientResult> quotient;
  std::optional<FiniteTopology> quotient_topology;
  Mask v0 = 0;  // neighborhood of 0 in the quotient with p^-1(v0) <= u0
  bool certified = false;
  Report report;
};

// the inductive neighborhood-family construction run to its set-theoretic
// fixed point: builds a countable (here finite) family gamma around u0,
// quotients by its invariant core, topologizes the quotient from the
// projected base and certifies the projection open, continuous, separated as
// requested, with p^-1(v0) inside u0. Mode infeasibility (e.g. t2 with
// unbounded Hausdorff number) is a reported outcome, not an error.
RefinementResult projective_refine(const FiniteGyrogroup& g,
                                   const FiniteTopology& t, Mask u0,
                                   RefineMode mode);

struct ProductResult {
  Instance instance;
  Report preservation;  // omega-balance and Hausdorff-number bounds
};

ProductResult product(const Instance& a, const Instance& b);
ProductResult product(std::span<const Instance> instances);

struct EmbeddingReport {
  bool homomorphism = false;
  bool injective = false;
  bool continuous = false;
  bool open_onto_image = false;
  bool image_subgyrogroup = false;
  bool embedding = false;
  std::string kernel_witness;  // a nonzero kernel element when not injective
  Report report;
};

// diagonal map x -> (p_i(x)) into the product of the refinement quotients;
// injectivity is equivalent to the cores intersecting trivially
EmbeddingReport diagonal_embedding(const FiniteGyrogroup& g,
                                   const FiniteTopology& t,
                                   std::span<const RefinementResult> refs);

bool is_topologically_periodic(const FiniteGyrogroup& g,
                               const FiniteTopology& t);

// every decreasing chain of nonempty opens stabilizes at its minimum, so the
// literal check quantifies over the possible minima
bool is_2_pseudocompact(const FiniteGyrogroup& g, const FiniteTopology& t);

struct CardinalReport {
  int character = 1;
  int pseudocharacter = 1;
  int lindelof = 1;
};

CardinalReport cardinal_report(const FiniteTopology& t);

struct Classification {
  bool paratopological = false;
  std::string paratopological_witness;
  bool strongly = false;
  bool topological = false;
  Separation sep = Separation::none;
  std::optional<HsValue> hs;   // meaningful for paratopological instances
  std::optional<HsValue> whs;
  bool omega_balanced = false;
  bool topologically_periodic = false;
  bool two_pseudocompact = false;
  CardinalReport cardinals;
};

Classification classify(const FiniteGyrogroup& g, const FiniteTopology& t);

// restriction of a classified instance to a subgyrogroup, relabeled so the
// identity stays at 0
Instance subgyrogroup_instance(const Instance& inst, Mask members,
                               const std::string& name);

}  // namespace gyro
