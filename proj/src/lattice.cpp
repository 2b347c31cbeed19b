#include "ringlat/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringlat {

namespace {

/* Partitions of {0..n-1} as restricted growth strings: a[i] <= 1 + max(a[0..i-1]).
 * Visits each partition once, lexicographically by the string. */
template <typename F>
void for_each_partition(int n, F&& visit) {
  std::vector<int> a(n, 0);
  for (;;) {
    visit(a);
    int i = n - 1;
    while (i > 0) {
      int pref = 0;
      for (int j = 0; j < i; ++j) pref = std::max(pref, a[j]);
      if (a[i] <= pref) break;  // a[i] may still grow to pref + 1
      --i;
    }
    if (i == 0) return;
    ++a[i];
    for (int j = i + 1; j < n; ++j) a[j] = 0;
  }
}

SubalgebraLattice finish_lattice(RingPtr S, IdxSet bottom, IdxSet top, std::vector<IdxSet> nodes) {
  std::sort(nodes.begin(), nodes.end(), setops::size_lex_less);
  SubalgebraLattice L;
  L.ambient = std::move(S);
  L.bottom = std::move(bottom);
  L.top = std::move(top);

  /* covering pairs: i < j in canonical order, nodes[i] strictly inside
   * nodes[j] with nothing in between */
  int n = int(nodes.size());
  std::vector<Bits> bits;
  bits.reserve(n);
  for (const auto& v : nodes) bits.push_back(Bits::from_set(L.ambient->order(), v));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (nodes[i].size() >= nodes[j].size() || !bits[i].subset_of(bits[j])) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        if (nodes[k].size() <= nodes[i].size() || nodes[k].size() >= nodes[j].size()) continue;
        if (bits[i].subset_of(bits[k]) && bits[k].subset_of(bits[j])) covered = false;
      }
      if (covered) L.hasse_edges.emplace_back(i, j);
    }
  L.nodes = std::move(nodes);
  return L;
}

}  // namespace

SubalgebraLattice enumerate_segment(const RingPtr& S, const IdxSet& lo, const IdxSet& hi) {
  if (!is_subring_set(*S, hi)) fail(Err::NotASubring, "segment top is not a subring");
  if (!setops::is_subset(lo, hi)) fail(Err::BadArgument, "segment bottom not inside top");
  if (!is_subring_set(*S, lo)) fail(Err::NotASubring, "segment bottom is not a subring");

  std::unordered_set<Bits, Bits::Hash> seen;
  std::vector<IdxSet> nodes;
  nodes.push_back(lo);
  seen.insert(Bits::from_set(S->order(), lo));
  for (size_t qi = 0; qi < nodes.size(); ++qi) {
    IdxSet cur = nodes[qi];  // copy: nodes reallocates
    if (cur.size() == hi.size()) continue;
    for (int s : hi) {
      if (setops::contains(cur, s)) continue;
      IdxSet gens = cur;
      gens.push_back(s);
      IdxSet next = subring_closure(*S, gens);
      Bits key = Bits::from_set(S->order(), next);
      if (seen.insert(std::move(key)).second) {
        nodes.push_back(std::move(next));
        if (int(nodes.size()) > Caps::lattice_nodes())
          fail(Err::LatticeCapExceeded,
               "interval enumeration passed " + std::to_string(Caps::lattice_nodes()) +
                   " nodes (partial count " + std::to_string(nodes.size()) + ")");
      }
    }
  }
  return finish_lattice(S, lo, hi, std::move(nodes));
}

SubalgebraLattice enumerate_interval(const Extension& E) {
  IdxSet top(E.ambient()->order());
  for (int i = 0; i < E.ambient()->order(); ++i) top[i] = i;
  return enumerate_segment(E.ambient(), E.sub(), top);
}

MinimalStepPath maximal_chain(const SubalgebraLattice& L) {
  MinimalStepPath path;
  int cur = 0;  // canonical order puts the bottom first
  if (!L.nodes.empty() && L.nodes[0] != L.bottom)
    throw std::logic_error("canonical order must start at the bottom");
  path.chain.push_back(L.nodes[cur]);
  for (;;) {
    int next = -1;
    for (const auto& [a, b] : L.hasse_edges)
      if (a == cur && (next < 0 || b < next)) next = b;
    if (next < 0) break;
    path.chain.push_back(L.nodes[next]);
    SegmentExtension step = segment_extension(L.ambient, L.nodes[cur], L.nodes[next]);
    path.classes.push_back(step.ext.classify_minimal());
    cur = next;
  }
  if (path.chain.back() != L.top) throw std::logic_error("maximal chain must end at the top");
  return path;
}

bool is_chained(const SubalgebraLattice& L) {
  /* canonical order sorts by size; a chain has pairwise distinct sizes and
   * consecutive inclusions */
  for (size_t i = 0; i + 1 < L.nodes.size(); ++i) {
    if (L.nodes[i].size() == L.nodes[i + 1].size()) return false;
    if (!setops::is_subset(L.nodes[i], L.nodes[i + 1])) return false;
  }
  return true;
}

PartitionCheckReport partition_count_check(const Extension& E) {
  if (E.max_R().size() != 1) fail(Err::NotLocal, "partition identity needs a local base ring");
  const auto& S = E.ambient();
  SubalgebraLattice L = enumerate_interval(E);

  PartitionCheckReport rep;
  rep.lattice_count = int(L.nodes.size());

  const auto& dec = local_decomposition(S);
  int t = int(dec.factors.size());
  rep.max_ideals = t;
  if (t > 12)
    fail(Err::LatticeCapExceeded, "too many maximal ideals for partition enumeration: " +
                                      std::to_string(t));

  /* |[R, A_X]_loc| for each nonempty subset X of Max(A), memoized */
  std::vector<long long> loc_count(size_t(1) << t, -1);
  auto local_count = [&](unsigned mask) -> long long {
    if (loc_count[mask] >= 0) return loc_count[mask];
    int e = S->zero();
    for (int i = 0; i < t; ++i)
      if (mask & (1u << i)) e = S->add(e, dec.factors[i].idempotent);
    SubringView AX = idempotent_factor(S, e);
    IdxSet img;
    for (int r : E.sub()) img.push_back(AX.from_ambient[S->mul(e, r)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    IdxSet full(AX.ring->order());
    for (int i = 0; i < AX.ring->order(); ++i) full[i] = i;
    SubalgebraLattice sub = enumerate_segment(AX.ring, img, full);
    long long cnt = 0;
    for (const auto& node : sub.nodes) {
      /* a finite commutative ring is local iff its only idempotents are 0,1 */
      int idem = 0;
      for (int x : node)
        if (AX.ring->mul(x, x) == x) ++idem;
      if (idem == 2) ++cnt;
    }
    loc_count[mask] = cnt;
    return cnt;
  };

  long long total = 0;
  for_each_partition(t, [&](const std::vector<int>& rgs) {
    int blocks = 0;
    for (int v : rgs) blocks = std::max(blocks, v + 1);
    long long prod = 1;
    for (int b = 0; b < blocks && prod != 0; ++b) {
      unsigned mask = 0;
      for (int i = 0; i < t; ++i)
        if (rgs[i] == b) mask |= 1u << i;
      prod *= local_count(mask);
    }
    total += prod;
  });
  rep.partition_sum = total;
  rep.equal = rep.partition_sum == rep.lattice_count;
  return rep;
}

std::string hasse_dot(const SubalgebraLattice& L) {
  std::string out;
  out += "digraph subalgebra_interval {\n";
  out += "  rankdir=BT;\n";
  for (size_t i = 0; i < L.nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"n" + std::to_string(i) + " size=" +
           std::to_string(L.nodes[i].size()) + "\"];\n";
  for (const auto& [a, b] : L.hasse_edges) {
    SegmentExtension step = segment_extension(L.ambient, L.nodes[a], L.nodes[b]);
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [label=\"" +
           minimal_class_name(step.ext.classify_minimal()) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::vector<IdxSet> powerset_nodes(const Extension& E) {
  const auto& S = *E.ambient();
  IdxSet outside;
  for (int i = 0; i < S.order(); ++i)
    if (!setops::contains(E.sub(), i)) outside.push_back(i);
  if (outside.size() > 20) fail(Err::CapExceeded, "powerset oracle limited to |S \\ R| <= 20");
  std::vector<IdxSet> out;
  for (uint64_t m = 0; m < (uint64_t{1} << outside.size()); ++m) {
    IdxSet cand = E.sub();
    for (size_t i = 0; i < outside.size(); ++i)
      if (m & (uint64_t{1} << i)) cand.push_back(outside[i]);
    std::sort(cand.begin(), cand.end());
    if (is_subring_set(S, cand)) out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), setops::size_lex_less);
  return out;
}

std::vector<IdxSet> additive_nodes(const Extension& E) {
  const auto& S = E.ambient();
  if (S->order() > 64) fail(Err::CapExceeded, "additive-subgroup oracle limited to |S| <= 64");
  /* enumerate every additive subgroup containing R, then keep the rings */
  std::unordered_set<Bits, Bits::Hash> seen;
  std::vector<IdxSet> groups;
  groups.push_back(E.sub());
  seen.insert(Bits::from_set(S->order(), E.sub()));
  for (size_t qi = 0; qi < groups.size(); ++qi) {
    IdxSet cur = groups[qi];
    for (int s = 0; s < S->order(); ++s) {
      if (setops::contains(cur, s)) continue;
      IdxSet gens = cur;
      gens.push_back(s);
      IdxSet next = additive_closure(*S, gens);
      Bits key = Bits::from_set(S->order(), next);
      if (seen.insert(std::move(key)).second) {
        groups.push_back(std::move(next));
        if (groups.size() > 2'000'000u)
          fail(Err::CapExceeded, "additive-subgroup interval too large");
      }
    }
  }
  std::vector<IdxSet> out;
  for (auto& g : groups) {
    bool closed = true;
    for (size_t i = 0; i < g.size() && closed; ++i)
      for (size_t j = i; j < g.size() && closed; ++j)
        if (!setops::contains(g, S->mul(g[i], g[j]))) closed = false;
    if (closed) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), setops::size_lex_less);
  return out;
}

}  // namespace ringlat
