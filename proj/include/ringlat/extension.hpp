#pragma once

/* A ring extension R <= S presented as an ambient finite ring S together
 * with the sorted index set of a unital subring R.  All structural data
 * (conductor, support, fibers, residual extensions) is computed on demand
 * and cached; Extension values are cheap to copy once warm.
 */

#include <optional>

#include "ringlat/spectrum.hpp"

namespace ringlat {

/* Residual field extension attached to one maximal ideal Q of S. */
struct ResidualData {
  IdxSet Q;  // ambient subset of S
  IdxSet P;  // Q intersect R, ambient subset
  QuotientView kQ;
  QuotientView kP;                // quotient of the materialized R
  std::vector<int> map_kP_to_kQ;  // induced embedding on class indices
  bool residual_iso = false;
  int residual_degree = 1;  // [kQ : kP]
};

struct SpectralData {
  std::vector<IdxSet> max_R;  // ambient subsets, canonical order
  std::vector<IdxSet> max_S;
  std::vector<ResidualData> residuals;       // one per max_S entry, same order
  std::vector<std::vector<int>> fiber_of_P;  // per max_R entry: indices into max_S
};

enum class MinimalClass { Inert, Decomposed, Ramified };
const char* minimal_class_name(MinimalClass c);

class Extension;

struct LocalizedExtension {
  std::shared_ptr<Extension> ext;
  SubringView ambient_view;  // factor of the original ambient (identity when e = 1)
  int e_ambient = 0;
};

class Extension {
public:
  /* Subring generated by `gens` inside S. */
  static Extension make(RingPtr S, std::span<const int> gens);
  /* An already-closed subring (verified). */
  static Extension from_set(RingPtr S, IdxSet sub);

  const RingPtr& ambient() const { return ambient_; }
  const IdxSet& sub() const { return sub_; }
  bool proper() const { return int(sub_.size()) < ambient_->order(); }

  const SubringView& sub_view() const;

  /* (R : S) = {x in S : xS <= R}; an ideal of S contained in R. */
  const IdxSet& conductor() const;

  /* Maximal ideals of R containing the conductor (ambient subsets).
   * Cross-checked against the annihilator of S/R as an R-module. */
  const std::vector<IdxSet>& support() const;

  const std::vector<IdxSet>& max_R() const;  // ambient subsets of R's maximal ideals
  const std::vector<IdxSet>& max_S() const;
  const SpectralData& spectral() const;

  /* Restriction to the idempotent factor carrying the support. */
  LocalizedExtension localize_at_conductor() const;

  bool is_seminormal() const;
  bool is_tclosed() const;
  bool is_subintegral() const;
  bool is_infraintegral() const;
  bool is_flat() const;
  bool is_unramified() const;
  bool is_etale() const;

  /* True when every single element of S \ R generates all of S over R. */
  bool is_minimal() const;

  /* Inert / Decomposed / Ramified per the conductor criterion; requires a
   * proper minimal extension. */
  MinimalClass classify_minimal() const;

  /* Local decomposition of the materialized subring, plus the ambient
   * images of its primitive idempotents. */
  const LocalDecomposition& sub_decomposition() const;
  const std::vector<int>& sub_idempotents_ambient() const;

private:
  Extension(RingPtr S, IdxSet sub) : ambient_(std::move(S)), sub_(std::move(sub)) {}

  RingPtr ambient_;
  IdxSet sub_;

  mutable std::optional<SubringView> sub_view_;
  mutable std::optional<IdxSet> conductor_;
  mutable std::optional<std::vector<IdxSet>> support_;
  mutable std::optional<std::vector<IdxSet>> max_R_;
  mutable std::optional<std::vector<IdxSet>> max_S_;
  mutable std::optional<SpectralData> spectral_;
  mutable std::optional<LocalDecomposition> sub_decomp_;
  mutable std::optional<std::vector<int>> sub_idem_amb_;
  mutable std::optional<LocalDecomposition> amb_decomp_;

  const LocalDecomposition& amb_decomposition() const;
};

/* e*S materialized as a unital ring with unit e. */
SubringView idempotent_factor(const RingPtr& S, int e);

/* The extension sub <= sup rebased so that sup is the ambient ring; `view`
 * maps the rebased indices back to the original ambient. */
struct SegmentExtension {
  Extension ext;
  SubringView view;
};
SegmentExtension segment_extension(const RingPtr& S, const IdxSet& sub, const IdxSet& sup);

}  // namespace ringlat
