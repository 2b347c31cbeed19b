#pragma once

/* Named reference extensions with frozen expected facts.  Each fixture is
 * built by the exact presentation it is known by (polynomial quotients and
 * products over F_2, F_3, F_4, Z/4), ships a ring-spec transcription, and
 * optionally marks a distinguished intermediate ring.
 */

#include "ringlat/closures.hpp"

namespace ringlat {

struct Fixture {
  std::string id;
  Extension ext;
  IdxSet marked;  // distinguished intermediate ring (ambient subset); may be empty
  std::vector<std::pair<std::string, std::string>> facts;  // frozen expected facts
  std::string ringspec;  // grammar transcription of the same construction
};

/* Known ids: FX-2.8.3, FX-RAM, FX-4.8, FX-4.41-Z2, FX-4.41-Z4, FX-Z4SQ,
 * FX-F2F4, FX-DIAG(q,n) for q in {2,3,4} and small n.  Unknown ids fail
 * with UNKNOWN_FIXTURE. */
Fixture fixture(const std::string& id);

/* Every id fixture() accepts, in canonical order. */
std::vector<std::string> fixture_ids();

/* Recompute every fact of `f` from scratch and return one line per
 * mismatch (empty means the fixture is exactly as frozen). */
std::vector<std::string> verify_fixture(const Fixture& f);

/* Index of a named generator in a constructed ring. */
int gen_index(const FiniteRing& R, const std::string& name);

/* M_i := M + M^{n-i}S over a local base, 1 <= i <= n-1 (ambient subset). */
IdxSet graded_submodule(const Extension& E, int i);

}  // namespace ringlat
