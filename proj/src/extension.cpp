#include "ringlat/extension.hpp"

#include <algorithm>

namespace ringlat {

const char* minimal_class_name(MinimalClass c) {
  switch (c) {
    case MinimalClass::Inert: return "inert";
    case MinimalClass::Decomposed: return "decomposed";
    case MinimalClass::Ramified: return "ramified";
  }
  return "?";
}

Extension Extension::make(RingPtr S, std::span<const int> gens) {
  IdxSet sub = subring_closure(*S, gens);
  return Extension(std::move(S), std::move(sub));
}

Extension Extension::from_set(RingPtr S, IdxSet sub) {
  if (!is_subring_set(*S, sub)) fail(Err::NotASubring, "set is not a unital subring");
  return Extension(std::move(S), std::move(sub));
}

const SubringView& Extension::sub_view() const {
  if (!sub_view_) sub_view_ = restrict_to_subring(ambient_, sub_);
  return *sub_view_;
}

const IdxSet& Extension::conductor() const {
  if (!conductor_) {
    const auto& S = *ambient_;
    std::vector<char> in_R(S.order(), 0);
    for (int x : sub_) in_R[x] = 1;
    IdxSet c;
    for (int x = 0; x < S.order(); ++x) {
      bool ok = true;
      for (int y = 0; y < S.order() && ok; ++y) ok = in_R[S.mul(x, y)];
      if (ok) c.push_back(x);  // x = x*1 lies in R automatically
    }
    conductor_ = std::move(c);
  }
  return *conductor_;
}

const LocalDecomposition& Extension::sub_decomposition() const {
  if (!sub_decomp_) sub_decomp_ = local_decomposition(sub_view().ring);
  return *sub_decomp_;
}

const LocalDecomposition& Extension::amb_decomposition() const {
  if (!amb_decomp_) amb_decomp_ = local_decomposition(ambient_);
  return *amb_decomp_;
}

const std::vector<int>& Extension::sub_idempotents_ambient() const {
  if (!sub_idem_amb_) {
    std::vector<int> out;
    for (const auto& f : sub_decomposition().factors)
      out.push_back(sub_view().to_ambient[f.idempotent]);
    sub_idem_amb_ = std::move(out);
  }
  return *sub_idem_amb_;
}

const std::vector<IdxSet>& Extension::max_R() const {
  if (!max_R_) {
    std::vector<IdxSet> out;
    for (const auto& f : sub_decomposition().factors) {
      IdxSet amb;
      for (int i : f.max_ideal_ambient) amb.push_back(sub_view().to_ambient[i]);
      std::sort(amb.begin(), amb.end());
      out.push_back(std::move(amb));
    }
    std::sort(out.begin(), out.end(), setops::size_lex_less);
    max_R_ = std::move(out);
  }
  return *max_R_;
}

const std::vector<IdxSet>& Extension::max_S() const {
  if (!max_S_) {
    std::vector<IdxSet> out;
    for (const auto& f : amb_decomposition().factors) out.push_back(f.max_ideal_ambient);
    std::sort(out.begin(), out.end(), setops::size_lex_less);
    max_S_ = std::move(out);
  }
  return *max_S_;
}

const std::vector<IdxSet>& Extension::support() const {
  if (!support_) {
    const IdxSet& c = conductor();
    /* annihilator of S/R as an R-module: {r in R : rS <= R}; must agree
     * with the conductor restricted to R (it is the conductor). */
    IdxSet ann;
    {
      const auto& S = *ambient_;
      std::vector<char> in_R(S.order(), 0);
      for (int x : sub_) in_R[x] = 1;
      for (int r : sub_) {
        bool ok = true;
        for (int y = 0; y < S.order() && ok; ++y) ok = in_R[S.mul(r, y)];
        if (ok) ann.push_back(r);
      }
    }
    if (ann != c) throw std::logic_error("conductor and annihilator of S/R disagree");
    std::vector<IdxSet> out;
    for (const auto& M : max_R())
      if (setops::is_subset(c, M)) out.push_back(M);
    support_ = std::move(out);
  }
  return *support_;
}

namespace {

/* Quotient of the materialized subring by the ambient subset P (a maximal
 * ideal of R given in ambient indices). */
QuotientView quotient_of_sub(const SubringView& rv, const IdxSet& P_ambient) {
  IdxSet local;
  for (int a : P_ambient) {
    int l = rv.from_ambient[a];
    if (l < 0) throw std::logic_error("ideal element outside the subring");
    local.push_back(l);
  }
  std::sort(local.begin(), local.end());
  return quotient_by_ideal(rv.ring, local);
}

}  // namespace

const SpectralData& Extension::spectral() const {
  if (!spectral_) {
    SpectralData sd;
    sd.max_R = max_R();
    sd.max_S = max_S();
    const auto& rv = sub_view();
    for (const auto& Q : sd.max_S) {
      ResidualData rd;
      rd.Q = Q;
      rd.P = setops::intersect(Q, sub_);
      /* Q cap R is maximal in R: locate it. */
      bool found = false;
      for (const auto& M : sd.max_R)
        if (M == rd.P) {
          found = true;
          break;
        }
      if (!found) throw std::logic_error("contraction of a maximal ideal is not maximal");
      rd.kQ = quotient_by_ideal(ambient_, Q);
      rd.kP = quotient_of_sub(rv, rd.P);
      /* induced map: class of r (local rep) -> class of r in S/Q */
      rd.map_kP_to_kQ.resize(rd.kP.ring->order());
      for (int c = 0; c < rd.kP.ring->order(); ++c) {
        int local_rep = rd.kP.reps[c];
        int amb = rv.to_ambient[local_rep];
        rd.map_kP_to_kQ[c] = rd.kQ.proj[amb];
      }
      /* the map is a unital injective homomorphism of fields; verify */
      {
        const auto& kp = *rd.kP.ring;
        const auto& kq = *rd.kQ.ring;
        const auto& f = rd.map_kP_to_kQ;
        if (f[kp.one()] != kq.one()) throw std::logic_error("residual map not unital");
        for (int a = 0; a < kp.order(); ++a)
          for (int b = 0; b < kp.order(); ++b) {
            if (f[kp.add(a, b)] != kq.add(f[a], f[b]) || f[kp.mul(a, b)] != kq.mul(f[a], f[b]))
              throw std::logic_error("residual map not a homomorphism");
            if (a != b && f[a] == f[b]) throw std::logic_error("residual map not injective");
          }
      }
      int q = rd.kQ.ring->order(), p = rd.kP.ring->order();
      rd.residual_iso = q == p;
      rd.residual_degree = 0;
      for (long long t = p; ; t *= p) {
        ++rd.residual_degree;
        if (t == q) break;
        if (t > q) throw std::logic_error("residue field sizes not compatible");
      }
      sd.residuals.push_back(std::move(rd));
    }
    sd.fiber_of_P.assign(sd.max_R.size(), {});
    for (size_t qi = 0; qi < sd.residuals.size(); ++qi) {
      bool placed = false;
      for (size_t pi = 0; pi < sd.max_R.size(); ++pi)
        if (sd.max_R[pi] == sd.residuals[qi].P) {
          sd.fiber_of_P[pi].push_back(int(qi));
          placed = true;
          break;
        }
      if (!placed) throw std::logic_error("fiber entry without a base prime");
    }
    for (const auto& f : sd.fiber_of_P)
      if (f.empty()) throw std::logic_error("spectral map of an integral extension must be onto");
    spectral_ = std::move(sd);
  }
  return *spectral_;
}

SegmentExtension segment_extension(const RingPtr& S, const IdxSet& sub, const IdxSet& sup) {
  if (!setops::is_subset(sub, sup)) fail(Err::BadArgument, "segment endpoints not nested");
  SubringView view = restrict_to_subring(S, sup);
  IdxSet local;
  for (int a : sub) local.push_back(view.from_ambient[a]);
  std::sort(local.begin(), local.end());
  return SegmentExtension{Extension::from_set(view.ring, std::move(local)), std::move(view)};
}

SubringView idempotent_factor(const RingPtr& S, int e) {
  if (S->mul(e, e) != e) fail(Err::BadArgument, "not an idempotent");
  if (e == S->zero()) fail(Err::BadArgument, "zero idempotent has no unital factor");
  std::vector<int> mem;
  for (int x = 0; x < S->order(); ++x) mem.push_back(S->mul(e, x));
  std::sort(mem.begin(), mem.end());
  mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
  int m = int(mem.size());
  std::vector<int> from(S->order(), -1);
  for (int i = 0; i < m; ++i) from[mem[i]] = i;
  std::vector<uint16_t> add(size_t(m) * m), mul(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[size_t(i) * m + j] = uint16_t(from[S->add(mem[i], mem[j])]);
      mul[size_t(i) * m + j] = uint16_t(from[S->mul(mem[i], mem[j])]);
    }
  SubringView v;
  v.ring = std::make_shared<FiniteRing>(m, from[S->zero()], from[e], std::move(add), std::move(mul),
                                        "factor(" + S->provenance() + ",e=" + std::to_string(e) + ")");
  v.to_ambient = mem;
  v.from_ambient = std::move(from);
  return v;
}

LocalizedExtension Extension::localize_at_conductor() const {
  const auto& supp = support();
  if (supp.empty()) fail(Err::EmptySupport, "support of S/R is empty (R = S)");
  /* sum the primitive idempotents of R whose maximal ideal lies in Supp */
  int e = ambient_->zero();
  const auto& rv = sub_view();
  for (const auto& f : sub_decomposition().factors) {
    IdxSet M_amb;
    for (int i : f.max_ideal_ambient) M_amb.push_back(rv.to_ambient[i]);
    std::sort(M_amb.begin(), M_amb.end());
    bool in_supp = false;
    for (const auto& M : supp)
      if (M == M_amb) {
        in_supp = true;
        break;
      }
    if (in_supp) e = ambient_->add(e, rv.to_ambient[f.idempotent]);
  }
  LocalizedExtension out;
  out.e_ambient = e;
  if (e == ambient_->one()) {
    out.ext = std::make_shared<Extension>(Extension(ambient_, sub_));
    SubringView id;
    id.ring = ambient_;
    id.to_ambient.resize(ambient_->order());
    id.from_ambient.resize(ambient_->order());
    for (int i = 0; i < ambient_->order(); ++i) id.to_ambient[i] = id.from_ambient[i] = i;
    out.ambient_view = std::move(id);
    return out;
  }
  out.ambient_view = idempotent_factor(ambient_, e);
  IdxSet img;
  for (int x : sub_) img.push_back(out.ambient_view.from_ambient[ambient_->mul(e, x)]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  out.ext = std::make_shared<Extension>(Extension(out.ambient_view.ring, std::move(img)));
  return out;
}

bool Extension::is_seminormal() const {
  const auto& S = *ambient_;
  std::vector<char> in_R(S.order(), 0);
  for (int x : sub_) in_R[x] = 1;
  for (int b = 0; b < S.order(); ++b) {
    if (in_R[b]) continue;
    int b2 = S.mul(b, b);
    if (in_R[b2] && in_R[S.mul(b2, b)]) return false;
  }
  return true;
}

bool Extension::is_tclosed() const {
  const auto& S = *ambient_;
  std::vector<char> in_R(S.order(), 0);
  for (int x : sub_) in_R[x] = 1;
  for (int b = 0; b < S.order(); ++b) {
    if (in_R[b]) continue;
    int b2 = S.mul(b, b);
    int b3 = S.mul(b2, b);
    for (int r : sub_) {
      if (in_R[S.sub(b2, S.mul(r, b))] && in_R[S.sub(b3, S.mul(r, b2))]) return false;
    }
  }
  return true;
}

bool Extension::is_infraintegral() const {
  for (const auto& rd : spectral().residuals)
    if (!rd.residual_iso) return false;
  return true;
}

bool Extension::is_subintegral() const {
  const auto& sd = spectral();
  if (sd.max_S.size() != sd.max_R.size()) return false;
  return is_infraintegral();
}

bool Extension::is_flat() const {
  const auto& rv = sub_view();
  for (const auto& f : sub_decomposition().factors) {
    int e_amb = rv.to_ambient[f.idempotent];
    SubringView SM = idempotent_factor(ambient_, e_amb);
    /* image of the maximal ideal of R_M inside S_M */
    std::vector<int> gens;
    for (int i : f.max_ideal_ambient)
      gens.push_back(SM.from_ambient[ambient_->mul(e_amb, rv.to_ambient[i])]);
    IdxSet MS = ideal_closure(*SM.ring, gens);
    long long sm = SM.ring->order();
    long long rm = f.view.ring->order();
    long long k = rm / long(f.max_ideal_local.size());  // residue field size
    long long fiber = sm / long(MS.size());             // |S_M / M S_M|
    int mu = 0;
    long long t = 1;
    while (t < fiber) {
      t *= k;
      ++mu;
    }
    if (t != fiber) throw std::logic_error("fiber size is not a power of the residue field size");
    /* minimal generator count mu; free of rank mu iff the sizes match */
    long long need = 1;
    bool over = false;
    for (int i = 0; i < mu && !over; ++i) {
      need *= rm;
      if (need > sm) over = true;
    }
    if (over || need != sm) return false;
  }
  return true;
}

bool Extension::is_unramified() const {
  const auto& sd = spectral();
  /* locate, for each Q, the primitive idempotent of S carrying it */
  const auto& dec = amb_decomposition();
  bool all_ok = true;
  std::vector<char> q_ok(sd.max_S.size(), 0);
  for (size_t qi = 0; qi < sd.max_S.size(); ++qi) {
    const auto& Q = sd.max_S[qi];
    const LocalFactor* lf = nullptr;
    for (const auto& f : dec.factors)
      if (f.max_ideal_ambient == Q) {
        lf = &f;
        break;
      }
    if (!lf) throw std::logic_error("maximal ideal without its local factor");
    /* P S_Q vs Q S_Q inside the factor */
    std::vector<int> gens;
    for (int a : sd.residuals[qi].P)
      gens.push_back(lf->view.from_ambient[ambient_->mul(lf->idempotent, a)]);
    IdxSet PSQ = ideal_closure(*lf->view.ring, gens);
    q_ok[qi] = PSQ == lf->max_ideal_local;
    if (!q_ok[qi]) all_ok = false;
  }
  /* cross-check: P S = intersection of the fiber primes, per base prime */
  for (size_t pi = 0; pi < sd.max_R.size(); ++pi) {
    IdxSet PS = ideal_closure(*ambient_, sd.max_R[pi]);
    IdxSet meet;
    bool first = true;
    bool fiber_ok = true;
    for (int qi : sd.fiber_of_P[pi]) {
      if (!q_ok[qi]) fiber_ok = false;
      meet = first ? sd.max_S[qi] : setops::intersect(meet, sd.max_S[qi]);
      first = false;
    }
    if ((PS == meet) != fiber_ok)
      throw std::logic_error("local and radical unramifiedness criteria disagree");
  }
  /* residual separability holds automatically over finite residue fields */
  return all_ok;
}

bool Extension::is_etale() const { return is_flat() && is_unramified(); }

bool Extension::is_minimal() const {
  if (!proper()) fail(Err::ImproperExtension, "R = S has no minimal classification");
  const auto& S = *ambient_;
  std::vector<char> in_R(S.order(), 0);
  for (int x : sub_) in_R[x] = 1;
  for (int t = 0; t < S.order(); ++t) {
    if (in_R[t]) continue;
    IdxSet gens = sub_;
    gens.push_back(t);
    if (int(subring_closure(S, gens).size()) != S.order()) return false;
  }
  return true;
}

MinimalClass Extension::classify_minimal() const {
  if (!proper()) fail(Err::ImproperExtension, "R = S has no minimal classification");
  if (!is_minimal()) fail(Err::NotMinimal, "extension is not minimal");
  const IdxSet& M = conductor();
  bool m_maximal = false;
  for (const auto& N : max_R())
    if (N == M) {
      m_maximal = true;
      break;
    }
  if (!m_maximal)
    fail(Err::ClassificationFailed, "conductor of a minimal extension must be maximal in R");

  auto dim_over = [&](const QuotientView& big, long long small_order) {
    int d = 0;
    long long t = 1;
    while (t < big.ring->order()) {
      t *= small_order;
      ++d;
    }
    if (t != big.ring->order())
      fail(Err::ClassificationFailed, "quotient size is not a power of the residue field size");
    return d;
  };

  QuotientView SmodM = quotient_by_ideal(ambient_, M);
  QuotientView kM = quotient_of_sub(sub_view(), M);
  long long kM_size = kM.ring->order();

  int matches = 0;
  MinimalClass cls = MinimalClass::Inert;

  /* inert: M stays maximal in S and the residue extension has prime degree */
  for (const auto& Q : max_S())
    if (Q == M) {
      int d = dim_over(SmodM, kM_size);
      if (is_prime_u(d)) {
        ++matches;
        cls = MinimalClass::Inert;
      }
    }

  /* decomposed: M = M1 cap M2 with both residual maps isomorphisms */
  {
    const auto& ms = max_S();
    bool found = false;
    for (size_t i = 0; i < ms.size() && !found; ++i)
      for (size_t j = i + 1; j < ms.size() && !found; ++j)
        if (setops::intersect(ms[i], ms[j]) == M) {
          long long s1 = quotient_by_ideal(ambient_, ms[i]).ring->order();
          long long s2 = quotient_by_ideal(ambient_, ms[j]).ring->order();
          if (s1 == kM_size && s2 == kM_size) found = true;
        }
    if (found) {
      ++matches;
      cls = MinimalClass::Decomposed;
    }
  }

  /* ramified: some M' in Max(S) with M'^2 <= M strictly inside M',
   * [S/M : R/M] = 2 and R/M = S/M' */
  {
    bool found = false;
    for (const auto& Mp : max_S()) {
      if (found) break;
      if (!setops::is_subset(M, Mp) || M == Mp) continue;
      /* M'^2 */
      std::vector<int> gens;
      for (int a : Mp)
        for (int b : Mp) gens.push_back(ambient_->mul(a, b));
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      IdxSet Mp2 = ideal_closure(*ambient_, gens);
      if (!setops::is_subset(Mp2, M)) continue;
      if (dim_over(SmodM, kM_size) != 2) continue;
      if (quotient_by_ideal(ambient_, Mp).ring->order() != kM_size) continue;
      found = true;
    }
    if (found) {
      ++matches;
      cls = MinimalClass::Ramified;
    }
  }

  if (matches != 1)
    fail(Err::ClassificationFailed,
         "expected exactly one classification case, found " + std::to_string(matches));
  return cls;
}

}  // namespace ringlat
