#pragma once

/* Spectral structure of a finite commutative ring: nilradical, idempotents,
 * the canonical decomposition into local factors, maximal ideals, and ideal
 * enumeration.  For finite rings Spec = Max and the ring is the product of
 * finitely many local rings, one per primitive idempotent.
 */

#include <optional>

#include "ringlat/ring.hpp"

namespace ringlat {

/* An ideal with its ambient ring; membership verified on admission. */
struct IdealSet {
  RingPtr ring;
  IdxSet members;
};
IdealSet make_ideal(const RingPtr& R, IdxSet members);

/* {x : x^k = 0 for some k}; equals the intersection of all maximal ideals. */
IdxSet nilradical(const FiniteRing& R);

bool is_nilpotent_elem(const FiniteRing& R, int x);

struct Idempotent {
  int idx;
  bool primitive;
};
/* All e with e*e = e, ascending by index, primitivity flagged. */
std::vector<Idempotent> idempotents(const FiniteRing& R);

enum class LocalTag { Field, Spir, FiniteLocal };
const char* local_tag_name(LocalTag t);

/* One local factor e*R of the canonical decomposition. */
struct LocalFactor {
  int idempotent;            // primitive idempotent in the ambient ring
  SubringView view;          // e*R materialized (unit = e)
  IdxSet max_ideal_local;    // maximal ideal in factor indices
  IdxSet max_ideal_ambient;  // its preimage in the ambient ring
  LocalTag tag;
  int uniformizer_local;     // SPIR only, else -1
  int nilpotency_index;      // least k >= 1 with M^k = 0 (1 for a field)
};

struct LocalDecomposition {
  std::vector<LocalFactor> factors;
};
/* Factors ordered by their idempotent's index. */
LocalDecomposition local_decomposition(const RingPtr& R);

/* Maximal ideals as ambient subsets, canonically ordered by (size, lex).
 * For a finite commutative ring these are exactly the primes. */
std::vector<IdxSet> maximal_ideals(const RingPtr& R);

IdealSet ideal_generated(const RingPtr& R, std::span<const int> gens);

/* Every ideal, canonically ordered; requires order <= Caps::ideal_enum(). */
std::vector<IdxSet> enumerate_ideals(const RingPtr& R);

bool is_radical_ideal(const RingPtr& R, const IdxSet& ideal);

/* Least k >= 1 with I^k = 0 (the zero ideal has index 1).  Throws
 * BAD_ARGUMENT when I is not nilpotent. */
int ideal_nilpotency_index(const FiniteRing& R, const IdxSet& I);

/* Decomposition report: every finite commutative ring is a finite product
 * of local rings (fields / SPIRs / other finite local rings). */
struct FmirReport {
  LocalDecomposition decomp;
  int field_count = 0;
  int spir_count = 0;
  int other_local_count = 0;
};
FmirReport fmir_decomposition(const RingPtr& R);

bool is_local_ring(const FiniteRing& R);

}  // namespace ringlat
