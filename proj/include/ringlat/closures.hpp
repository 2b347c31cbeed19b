#pragma once

/* Seminormalization +R and t-closure tR of R in S, the canonical tower
 * R <= +R <= tR <= S with re-verified certificates, the conductor-graded
 * chain R_k = R + M^{n-k}S over a local base, and R-module machinery for
 * MS/M (uniserial test, length, the four-statement chain report).
 */

#include "ringlat/lattice.hpp"

namespace ringlat {

enum class ClosureMethod { Ascent, Oracle };

/* Greatest B in [R,S] with R <= B subintegral.  Ascent adjoins elements b
 * with b^2, b^3 in the current ring; the oracle filters the enumerated
 * interval and asserts a unique greatest element.  Both return the same set
 * (the ascent result is certified by the extension predicates). */
IdxSet seminormalization(const Extension& E, ClosureMethod m = ClosureMethod::Ascent);

/* Greatest B in [R,S] with R <= B infra-integral.  Ascent adjoins b when
 * b^2 - rb, b^3 - rb^2 land in the current ring for some r in it. */
IdxSet t_closure(const Extension& E, ClosureMethod m = ClosureMethod::Ascent);

struct TowerCertificates {
  bool base_to_plus_subintegral = false;  // R <= +R
  bool plus_seminormal_in_top = false;    // +R <= S
  bool base_to_t_infraintegral = false;   // R <= tR
  bool t_tclosed_in_top = false;          // tR <= S
};

struct CanonicalTower {
  IdxSet base;       // R
  IdxSet plus_ring;  // +R
  IdxSet t_ring;     // tR
  IdxSet top;        // S's full index set
  TowerCertificates certificates;  // all four verified true on return
};

CanonicalTower canonical_tower(const Extension& E);

/* Nilpotency index n of M/(R:S) inside R/(R:S); 1 when the conductor is M.
 * Requires R local with maximal ideal M. */
int conductor_nilpotency_index(const Extension& E);

/* The chain R_k := R + M^{n-k}S for k = 0..n-1 (ambient subsets); each
 * entry is verified to be a subring, R_0 = R and R_{n-1} = R + MS. */
std::vector<IdxSet> rk_chain(const Extension& E);

/* M^j S as an ideal of S, where M is any ambient generating subset. */
IdxSet ideal_power_times_s(const RingPtr& S, const IdxSet& M, int j);

/* A finite R-module presented on coset indices with full tables. */
struct RModule {
  RingPtr ambient;             // ring where the arithmetic happens
  IdxSet scalars;              // the acting subring R (ambient indices)
  std::vector<int> reps;       // element id -> least ambient coset representative
  std::vector<int> add;       // id x id -> id, row-major
  std::vector<std::vector<int>> scale;  // per scalar position: id -> id
  int size() const { return int(reps.size()); }
};

/* The quotient module big/small, both additive subgroups of the ambient
 * ring closed under multiplication by `scalars`. */
RModule quotient_module(const RingPtr& S, const IdxSet& scalars, const IdxSet& big,
                        const IdxSet& small);

/* MS/M as an R-module; requires R local with maximal ideal M. */
RModule ms_mod_m(const Extension& E);

/* All submodules (as sorted id sets), join-closure of the cyclic ones. */
std::vector<std::vector<int>> submodules(const RModule& M);

/* True iff the submodules form a chain. */
bool is_uniserial(const RModule& M);

/* Composition length: longest chain in the submodule poset. */
int module_length(const RModule& M);

/* Four conditions tied to [R, R+MS] being a chain, evaluated independently
 * (their equivalence is a theorem only over infinite residue fields, so the
 * vector is reported as-is), plus the ideal I = (M : MS). */
struct ChainConditions {
  bool uniserial = false;         // (1) MS/M uniserial
  bool interval_chained = false;  // (2) [R, R+MS] chained
  bool length_matches = false;    // (3) len_R(MS/M) = n - 1
  bool spir_clause = false;       // (4) R/I a SPIR or field, and MS = M + Rx for some x
  const char* spir_branch = "";   // "spir" | "field" | "degenerate" | ""
  bool degenerate = false;        // MS <= R (conductor equals M): all four hold trivially
  IdxSet I;                       // (M : MS) as an ambient subset of R
  bool I_equals_conductor_colon_M = false;  // I = ((R:S) : M)
  int n = 0;                      // nilpotency index of M/(R:S)
  int length = 0;                 // len_R(MS/M)
};
ChainConditions chain_conditions(const Extension& E);

}  // namespace ringlat
