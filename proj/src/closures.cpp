#include "ringlat/closures.hpp"

#include <algorithm>
#include <unordered_set>

#include "ringlat/spectrum.hpp"

namespace ringlat {

namespace {

IdxSet full_set(const RingPtr& S) {
  IdxSet out(S->order());
  for (int i = 0; i < S->order(); ++i) out[i] = i;
  return out;
}

IdxSet oracle_closure(const Extension& E, bool infra_only) {
  SubalgebraLattice L = enumerate_interval(E);
  std::vector<const IdxSet*> hits;
  for (const auto& node : L.nodes) {
    SegmentExtension seg = segment_extension(E.ambient(), E.sub(), node);
    bool ok = infra_only ? seg.ext.is_infraintegral() : seg.ext.is_subintegral();
    if (ok) hits.push_back(&node);
  }
  if (hits.empty()) throw std::logic_error("the bottom itself must satisfy the closure predicate");
  /* a greatest element exists; locate the largest hit and check it absorbs
   * all the others */
  const IdxSet* best = hits[0];
  for (const auto* h : hits)
    if (h->size() > best->size()) best = h;
  for (const auto* h : hits)
    if (!setops::is_subset(*h, *best))
      throw std::logic_error("closure candidates are not dominated by a greatest element");
  return *best;
}

}  // namespace

IdxSet seminormalization(const Extension& E, ClosureMethod m) {
  if (m == ClosureMethod::Oracle) return oracle_closure(E, /*infra_only=*/false);
  const auto& S = *E.ambient();
  IdxSet cur = E.sub();
  for (;;) {
    int found = -1;
    for (int b = 0; b < S.order() && found < 0; ++b) {
      if (setops::contains(cur, b)) continue;
      int b2 = S.mul(b, b);
      if (setops::contains(cur, b2) && setops::contains(cur, S.mul(b2, b))) found = b;
    }
    if (found < 0) break;
    IdxSet gens = cur;
    gens.push_back(found);
    cur = subring_closure(S, gens);
  }
  return cur;
}

IdxSet t_closure(const Extension& E, ClosureMethod m) {
  if (m == ClosureMethod::Oracle) return oracle_closure(E, /*infra_only=*/true);
  const auto& S = *E.ambient();
  IdxSet cur = E.sub();
  for (;;) {
    int found = -1;
    for (int b = 0; b < S.order() && found < 0; ++b) {
      if (setops::contains(cur, b)) continue;
      int b2 = S.mul(b, b);
      int b3 = S.mul(b2, b);
      for (int r : cur) {
        if (setops::contains(cur, S.sub(b2, S.mul(r, b))) &&
            setops::contains(cur, S.sub(b3, S.mul(r, b2)))) {
          found = b;
          break;
        }
      }
    }
    if (found < 0) break;
    IdxSet gens = cur;
    gens.push_back(found);
    cur = subring_closure(S, gens);
  }
  return cur;
}

CanonicalTower canonical_tower(const Extension& E) {
  CanonicalTower t;
  t.base = E.sub();
  t.top = full_set(E.ambient());
  t.plus_ring = seminormalization(E);
  t.t_ring = t_closure(E);
  if (!setops::is_subset(t.base, t.plus_ring) || !setops::is_subset(t.plus_ring, t.t_ring) ||
      !setops::is_subset(t.t_ring, t.top))
    throw std::logic_error("tower rings must be nested");

  SegmentExtension base_to_plus = segment_extension(E.ambient(), t.base, t.plus_ring);
  t.certificates.base_to_plus_subintegral = base_to_plus.ext.is_subintegral();
  Extension plus_in_top = Extension::from_set(E.ambient(), t.plus_ring);
  t.certificates.plus_seminormal_in_top = plus_in_top.is_seminormal();
  SegmentExtension base_to_t = segment_extension(E.ambient(), t.base, t.t_ring);
  t.certificates.base_to_t_infraintegral = base_to_t.ext.is_infraintegral();
  Extension t_in_top = Extension::from_set(E.ambient(), t.t_ring);
  t.certificates.t_tclosed_in_top = t_in_top.is_tclosed();

  /* the four certificates pin the two rings uniquely, so a failure is a bug */
  if (!t.certificates.base_to_plus_subintegral || !t.certificates.plus_seminormal_in_top ||
      !t.certificates.base_to_t_infraintegral || !t.certificates.t_tclosed_in_top)
    throw std::logic_error("canonical tower certificate failed");
  return t;
}

namespace {

/* M^j * S as an ideal of S, where M is an ambient subset generating in S. */
IdxSet ideal_power_times_s(const RingPtr& S, const IdxSet& M, int j) {
  IdxSet cur = ideal_closure(*S, M);
  for (int step = 1; step < j; ++step) {
    std::vector<int> gens;
    for (int a : cur)
      for (int b : M) gens.push_back(S->mul(a, b));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    cur = additive_closure(*S, gens);  // already an ideal: s(ab) = (sa)b
  }
  return cur;
}

const IdxSet& single_max_ideal(const Extension& E) {
  if (E.max_R().size() != 1) fail(Err::NotLocal, "base ring is not local");
  return E.max_R()[0];
}

}  // namespace

int conductor_nilpotency_index(const Extension& E) {
  const IdxSet& M = single_max_ideal(E);
  const IdxSet& c = E.conductor();
  const auto& rv = E.sub_view();
  IdxSet c_local;
  for (int a : c) c_local.push_back(rv.from_ambient[a]);
  std::sort(c_local.begin(), c_local.end());
  QuotientView q = quotient_by_ideal(rv.ring, c_local);
  IdxSet m_image;
  for (int a : M) m_image.push_back(q.proj[rv.from_ambient[a]]);
  std::sort(m_image.begin(), m_image.end());
  m_image.erase(std::unique(m_image.begin(), m_image.end()), m_image.end());
  return ideal_nilpotency_index(*q.ring, m_image);
}

std::vector<IdxSet> rk_chain(const Extension& E) {
  const IdxSet& M = single_max_ideal(E);
  int n = conductor_nilpotency_index(E);
  const auto& S = E.ambient();
  std::vector<IdxSet> chain;
  for (int k = 0; k < n; ++k) {
    IdxSet part = ideal_power_times_s(S, M, n - k);
    IdxSet gens = setops::unite(E.sub(), part);
    IdxSet rk = additive_closure(*S, gens);  // R + ideal is multiplicatively closed
    if (!is_subring_set(*S, rk)) throw std::logic_error("R_k must be a subring");
    chain.push_back(std::move(rk));
  }
  if (chain.front() != E.sub()) throw std::logic_error("R_0 must equal R");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!setops::is_subset(chain[i], chain[i + 1]))
      throw std::logic_error("conductor-graded chain must ascend");
  return chain;
}

RModule quotient_module(const RingPtr& S, const IdxSet& scalars, const IdxSet& big,
                        const IdxSet& small) {
  if (!setops::is_subset(small, big)) fail(Err::BadArgument, "quotient needs nested subgroups");
  /* coset of u = least element of u + small */
  std::vector<int> coset_rep(S->order(), -1);
  for (int u : big) {
    if (coset_rep[u] >= 0) continue;
    int least = u;
    std::vector<int> members;
    for (int m : small) {
      int v = S->add(u, m);
      members.push_back(v);
      least = std::min(least, v);
    }
    for (int v : members) {
      if (coset_rep[v] >= 0 && coset_rep[v] != least)
        throw std::logic_error("cosets must partition the subgroup");
      coset_rep[v] = least;
    }
  }
  RModule M;
  M.ambient = S;
  M.scalars = scalars;
  for (int u : big)
    if (coset_rep[u] == u) M.reps.push_back(u);
  std::vector<int> id_of(S->order(), -1);
  for (size_t i = 0; i < M.reps.size(); ++i) id_of[M.reps[i]] = int(i);
  int m = M.size();
  M.add.resize(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      M.add[size_t(i) * m + j] = id_of[coset_rep[S->add(M.reps[i], M.reps[j])]];
  M.scale.resize(scalars.size());
  for (size_t r = 0; r < scalars.size(); ++r) {
    M.scale[r].resize(m);
    for (int i = 0; i < m; ++i) {
      int prod = S->mul(scalars[r], M.reps[i]);
      if (coset_rep[prod] < 0) throw std::logic_error("scaling must stay inside the subgroup");
      M.scale[r][i] = id_of[coset_rep[prod]];
    }
  }
  if (M.reps.empty() || M.reps[0] != coset_rep[S->zero()])
    throw std::logic_error("zero coset must come first");
  return M;
}

RModule ms_mod_m(const Extension& E) {
  const IdxSet& M = single_max_ideal(E);
  IdxSet MS = ideal_closure(*E.ambient(), M);
  if (!setops::is_subset(M, MS)) throw std::logic_error("M must embed in MS");
  return quotient_module(E.ambient(), E.sub(), MS, M);
}

namespace {

std::vector<int> cyclic_submodule(const RModule& M, int x) {
  /* additive closure of the scalar orbit of x */
  std::vector<char> in(M.size(), 0);
  std::vector<int> work;
  auto push = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      work.push_back(v);
    }
  };
  push(0);
  for (const auto& sc : M.scale) push(sc[x]);
  push(x);
  for (size_t qi = 0; qi < work.size(); ++qi)
    for (size_t qj = 0; qj <= qi; ++qj) push(M.add[size_t(work[qi]) * M.size() + work[qj]]);
  std::vector<int> out;
  for (int v = 0; v < M.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<int> module_join(const RModule& M, const std::vector<int>& a,
                             const std::vector<int>& b) {
  std::vector<char> in(M.size(), 0);
  std::vector<int> work;
  auto push = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      work.push_back(v);
    }
  };
  for (int v : a) push(v);
  for (int v : b) push(v);
  for (size_t qi = 0; qi < work.size(); ++qi)
    for (size_t qj = 0; qj <= qi; ++qj) push(M.add[size_t(work[qi]) * M.size() + work[qj]]);
  std::vector<int> out;
  for (int v = 0; v < M.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::vector<int>> submodules(const RModule& M) {
  std::vector<std::vector<int>> cyclics;
  {
    std::unordered_set<Bits, Bits::Hash> seen;
    for (int x = 0; x < M.size(); ++x) {
      std::vector<int> c = cyclic_submodule(M, x);
      Bits key = Bits::from_set(M.size(), c);
      if (seen.insert(std::move(key)).second) cyclics.push_back(std::move(c));
    }
  }
  std::unordered_set<Bits, Bits::Hash> seen;
  std::vector<std::vector<int>> out;
  for (const auto& c : cyclics) {
    Bits key = Bits::from_set(M.size(), c);
    if (seen.insert(std::move(key)).second) out.push_back(c);
  }
  for (size_t qi = 0; qi < out.size(); ++qi) {
    std::vector<int> cur = out[qi];
    for (const auto& c : cyclics) {
      std::vector<int> j = module_join(M, cur, c);
      Bits key = Bits::from_set(M.size(), j);
      if (seen.insert(std::move(key)).second) {
        out.push_back(std::move(j));
        if (int(out.size()) > Caps::ideal_enum())
          fail(Err::CapExceeded, "submodule enumeration passed " +
                                     std::to_string(Caps::ideal_enum()) + " entries");
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_uniserial(const RModule& M) {
  auto subs = submodules(M);
  for (size_t i = 0; i + 1 < subs.size(); ++i) {
    if (subs[i].size() == subs[i + 1].size()) return false;
    if (!std::includes(subs[i + 1].begin(), subs[i + 1].end(), subs[i].begin(), subs[i].end()))
      return false;
  }
  return true;
}

int module_length(const RModule& M) {
  auto subs = submodules(M);
  /* longest chain in the inclusion poset, DP over canonical order */
  int n = int(subs.size());
  std::vector<int> best(n, 0);
  int answer = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (subs[j].size() >= subs[i].size()) continue;
      if (std::includes(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end()))
        best[i] = std::max(best[i], best[j] + 1);
    }
    answer = std::max(answer, best[i]);
  }
  return answer;
}

ChainConditions chain_conditions(const Extension& E) {
  const IdxSet& M = single_max_ideal(E);
  const auto& S = E.ambient();
  ChainConditions rep;
  rep.n = conductor_nilpotency_index(E);
  IdxSet MS = ideal_closure(*S, M);

  /* I = (M : MS) inside R */
  for (int r : E.sub()) {
    bool ok = true;
    for (int u : MS)
      if (!setops::contains(M, S->mul(r, u))) {
        ok = false;
        break;
      }
    if (ok) rep.I.push_back(r);
  }
  {
    /* ((R:S) : M) inside R, compared against I */
    const IdxSet& c = E.conductor();
    IdxSet colon;
    for (int r : E.sub()) {
      bool ok = true;
      for (int u : M)
        if (!setops::contains(c, S->mul(r, u))) {
          ok = false;
          break;
        }
      if (ok) colon.push_back(r);
    }
    rep.I_equals_conductor_colon_M = colon == rep.I;
  }

  rep.degenerate = setops::is_subset(MS, E.sub());
  if (rep.degenerate) {
    /* MS = M: the quotient is zero and every statement holds trivially */
    rep.uniserial = rep.interval_chained = rep.length_matches = rep.spir_clause = true;
    rep.spir_branch = "degenerate";
    rep.length = 0;
    return rep;
  }

  RModule Q = ms_mod_m(E);
  rep.uniserial = is_uniserial(Q);
  rep.length = module_length(Q);
  rep.length_matches = rep.length == rep.n - 1;

  IdxSet r_plus_ms = additive_closure(*S, setops::unite(E.sub(), MS));
  if (!is_subring_set(*S, r_plus_ms)) throw std::logic_error("R + MS must be a subring");
  rep.interval_chained = is_chained(enumerate_segment(S, E.sub(), r_plus_ms));

  /* (4): R/I a SPIR or a field, and MS = M + Rx for some x in MS */
  {
    const auto& rv = E.sub_view();
    IdxSet I_local;
    for (int a : rep.I) I_local.push_back(rv.from_ambient[a]);
    std::sort(I_local.begin(), I_local.end());
    QuotientView q = quotient_by_ideal(rv.ring, I_local);
    bool ring_ok = false;
    if (q.ring->order() >= 2) {
      LocalDecomposition dec = local_decomposition(q.ring);
      if (dec.factors.size() == 1) {
        LocalTag tag = dec.factors[0].tag;
        if (tag == LocalTag::Spir) {
          ring_ok = true;
          rep.spir_branch = "spir";
        } else if (tag == LocalTag::Field) {
          ring_ok = true;
          rep.spir_branch = "field";
        }
      }
    }
    bool monogenic = false;
    for (int x : MS) {
      std::vector<int> gens;
      for (int r : E.sub()) gens.push_back(S->mul(r, x));
      for (int m : M) gens.push_back(m);
      if (additive_closure(*S, gens) == MS) {
        monogenic = true;
        break;
      }
    }
    rep.spir_clause = ring_ok && monogenic;
    if (!ring_ok) rep.spir_branch = "";
  }
  return rep;
}

}  // namespace ringlat
