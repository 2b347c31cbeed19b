#include "ringlat/spectrum.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringlat {

IdealSet make_ideal(const RingPtr& R, IdxSet members) {
  if (!is_ideal_set(*R, members)) fail(Err::NotAnIdeal, "set is not an ideal");
  return IdealSet{R, std::move(members)};
}

bool is_nilpotent_elem(const FiniteRing& R, int x) {
  /* the nilpotency index is at most the order, so log2(order)+1 squarings decide */
  int y = x;
  int steps = 1;
  while ((1LL << steps) < R.order()) ++steps;
  for (int i = 0; i <= steps; ++i) {
    if (y == R.zero()) return true;
    y = R.mul(y, y);
  }
  return y == R.zero();
}

IdxSet nilradical(const FiniteRing& R) {
  IdxSet out;
  for (int x = 0; x < R.order(); ++x)
    if (is_nilpotent_elem(R, x)) out.push_back(x);
  return out;
}

std::vector<Idempotent> idempotents(const FiniteRing& R) {
  std::vector<int> es;
  for (int e = 0; e < R.order(); ++e)
    if (R.mul(e, e) == e) es.push_back(e);
  std::vector<Idempotent> out;
  out.reserve(es.size());
  for (int e : es) {
    bool primitive = e != R.zero();
    if (primitive)
      for (int f : es) {
        if (f == R.zero() || f == e) continue;
        if (R.mul(f, e) == f) {  // f <= e in the idempotent order
          primitive = false;
          break;
        }
      }
    out.push_back({e, primitive});
  }
  return out;
}

namespace {

/* Non-units of a local ring form its maximal ideal. */
IdxSet nonunits(const FiniteRing& R) {
  std::vector<char> unit(R.order(), 0);
  for (int a = 0; a < R.order(); ++a)
    for (int b = 0; b < R.order(); ++b)
      if (R.mul(a, b) == R.one()) {
        unit[a] = 1;
        break;
      }
  IdxSet out;
  for (int a = 0; a < R.order(); ++a)
    if (!unit[a]) out.push_back(a);
  return out;
}

int ideal_nilpotency_index(const FiniteRing& R, const IdxSet& I) {
  /* least k >= 1 with I^k = 0; the zero ideal has index 1 */
  IdxSet power = I;
  int k = 1;
  while (power.size() != 1) {
    std::vector<int> gens;
    for (int a : I)
      for (int b : power) gens.push_back(R.mul(a, b));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    IdxSet next = additive_closure(R, gens);
    /* I.power <= power since power is an ideal, so stabilizing means not nilpotent */
    if (next == power) fail(Err::BadArgument, "ideal is not nilpotent");
    power = std::move(next);
    ++k;
  }
  if (power[0] != R.zero()) throw std::logic_error("singleton ideal must be the zero ideal");
  return k;
}

}  // namespace

bool is_local_ring(const FiniteRing& R) {
  for (int e = 0; e < R.order(); ++e)
    if (R.mul(e, e) == e && e != R.zero() && e != R.one()) return false;
  return true;
}

LocalDecomposition local_decomposition(const RingPtr& R) {
  auto es = idempotents(*R);
  LocalDecomposition out;
  for (const auto& [e, prim] : es) {
    if (!prim) continue;
    // factor carrier e*R
    std::vector<int> mem;
    for (int x = 0; x < R->order(); ++x) mem.push_back(R->mul(e, x));
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    // materialize with unit e (e*R is a ring though not a unital subring of R)
    int m = int(mem.size());
    std::vector<int> from(R->order(), -1);
    for (int i = 0; i < m; ++i) from[mem[i]] = i;
    std::vector<uint16_t> add(size_t(m) * m), mul(size_t(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        add[size_t(i) * m + j] = uint16_t(from[R->add(mem[i], mem[j])]);
        mul[size_t(i) * m + j] = uint16_t(from[R->mul(mem[i], mem[j])]);
      }
    SubringView view;
    view.ring = std::make_shared<FiniteRing>(m, from[R->zero()], from[e], std::move(add),
                                             std::move(mul),
                                             "factor(" + R->provenance() + ",e=" + std::to_string(e) + ")");
    view.to_ambient = mem;
    view.from_ambient = std::move(from);

    LocalFactor f;
    f.idempotent = e;
    f.max_ideal_local = nonunits(*view.ring);
    f.max_ideal_ambient.clear();
    for (int x = 0; x < R->order(); ++x)
      if (setops::contains(f.max_ideal_local, view.from_ambient[R->mul(e, x)]))
        f.max_ideal_ambient.push_back(x);
    if (f.max_ideal_local.size() == 1) {
      f.tag = LocalTag::Field;
      f.uniformizer_local = -1;
      f.nilpotency_index = 1;
    } else {
      f.nilpotency_index = ideal_nilpotency_index(*view.ring, f.max_ideal_local);
      f.uniformizer_local = -1;
      for (int t : f.max_ideal_local) {
        if (t == view.ring->zero()) continue;
        if (ideal_closure(*view.ring, std::span<const int>(&t, 1)) == f.max_ideal_local) {
          f.uniformizer_local = t;
          break;
        }
      }
      f.tag = f.uniformizer_local >= 0 ? LocalTag::Spir : LocalTag::FiniteLocal;
    }
    f.view = std::move(view);
    out.factors.push_back(std::move(f));
  }
  if (out.factors.empty()) throw std::logic_error("no primitive idempotents found");
  /* sanity: primitive idempotents are orthogonal and sum to 1 */
  int sum = R->zero();
  for (const auto& f : out.factors) {
    for (const auto& g : out.factors)
      if (&f != &g && R->mul(f.idempotent, g.idempotent) != R->zero())
        throw std::logic_error("primitive idempotents not orthogonal");
    sum = R->add(sum, f.idempotent);
  }
  if (sum != R->one()) throw std::logic_error("primitive idempotents do not sum to 1");
  long long prod = 1;
  for (const auto& f : out.factors) prod *= f.view.ring->order();
  if (prod != R->order()) throw std::logic_error("factor orders do not multiply to the ring order");
  return out;
}

const char* local_tag_name(LocalTag t) {
  switch (t) {
    case LocalTag::Field: return "field";
    case LocalTag::Spir: return "spir";
    case LocalTag::FiniteLocal: return "finite-local";
  }
  return "?";
}

std::vector<IdxSet> maximal_ideals(const RingPtr& R) {
  auto dec = local_decomposition(R);
  std::vector<IdxSet> out;
  out.reserve(dec.factors.size());
  for (const auto& f : dec.factors) out.push_back(f.max_ideal_ambient);
  std::sort(out.begin(), out.end(), setops::size_lex_less);
  return out;
}

IdealSet ideal_generated(const RingPtr& R, std::span<const int> gens) {
  return IdealSet{R, ideal_closure(*R, gens)};
}

std::vector<IdxSet> enumerate_ideals(const RingPtr& R) {
  if (R->order() > Caps::ideal_enum())
    fail(Err::CapExceeded, "ring order beyond the exhaustive ideal enumeration cap");
  std::vector<IdxSet> nodes;
  std::unordered_set<Bits, Bits::Hash> seen;
  IdxSet zero{R->zero()};
  nodes.push_back(zero);
  seen.insert(Bits::from_set(R->order(), zero));
  for (size_t qi = 0; qi < nodes.size(); ++qi) {
    IdxSet cur = nodes[qi];  // copy: nodes reallocates
    for (int x = 0; x < R->order(); ++x) {
      if (setops::contains(cur, x)) continue;
      IdxSet gens = cur;
      gens.push_back(x);
      IdxSet bigger = ideal_closure(*R, gens);
      Bits key = Bits::from_set(R->order(), bigger);
      if (seen.insert(key).second) nodes.push_back(std::move(bigger));
    }
  }
  std::sort(nodes.begin(), nodes.end(), setops::size_lex_less);
  return nodes;
}

bool is_radical_ideal(const RingPtr& R, const IdxSet& ideal) {
  auto q = quotient_by_ideal(R, ideal);
  return nilradical(*q.ring).size() == 1;
}

FmirReport fmir_decomposition(const RingPtr& R) {
  FmirReport rep;
  rep.decomp = local_decomposition(R);
  for (const auto& f : rep.decomp.factors) switch (f.tag) {
      case LocalTag::Field: rep.field_count++; break;
      case LocalTag::Spir: rep.spir_count++; break;
      case LocalTag::FiniteLocal: rep.other_local_count++; break;
    }
  return rep;
}

}  // namespace ringlat
