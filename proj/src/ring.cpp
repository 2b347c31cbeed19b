#include "ringlat/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ringlat {

FiniteRing::FiniteRing(int order, int zero, int one, std::vector<uint16_t> add,
                       std::vector<uint16_t> mul, std::string provenance)
    : order_(order),
      zero_(zero),
      one_(one),
      add_(std::move(add)),
      mul_(std::move(mul)),
      provenance_(std::move(provenance)) {
  if (order < 2) fail(Err::BadArgument, "ring must have at least two elements (zero ring rejected)");
  if (order > kCarrierHardLimit) fail(Err::CapExceeded, "order exceeds table encoding limit");
  if (add_.size() != size_t(order) * order || mul_.size() != size_t(order) * order)
    fail(Err::BadArgument, "table size mismatch");
  neg_.assign(order, 0);
  for (int a = 0; a < order; ++a) {
    bool found = false;
    for (int b = 0; b < order; ++b)
      if (this->add(a, b) == zero_) {
        neg_[a] = uint16_t(b);
        found = true;
        break;
      }
    if (!found) fail(Err::BadArgument, "element without additive inverse");
  }
}

int FiniteRing::pow(int a, long long e) const {
  if (e < 0) fail(Err::BadArgument, "negative exponent");
  int acc = one_;
  int base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteRing::product_encode(std::span<const int> comps) const {
  if (factors_.empty()) fail(Err::BadArgument, "not a product ring");
  if (comps.size() != factors_.size()) fail(Err::BadArgument, "component count mismatch");
  long long idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    int ni = factors_[i]->order();
    if (comps[i] < 0 || comps[i] >= ni) fail(Err::ElementNotInRing, "component index out of range");
    idx = idx * ni + comps[i];
  }
  return int(idx);
}

std::vector<int> FiniteRing::product_decode(int idx) const {
  if (factors_.empty()) fail(Err::BadArgument, "not a product ring");
  std::vector<int> comps(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    int ni = factors_[i]->order();
    comps[i] = idx % ni;
    idx /= ni;
  }
  return comps;
}

bool FiniteRing::same_tables(const FiniteRing& other) const {
  return order_ == other.order_ && zero_ == other.zero_ && one_ == other.one_ &&
         add_ == other.add_ && mul_ == other.mul_;
}

RingPtr construct_zmod(long long n) {
  if (n < 2) fail(Err::BadArgument, "zmod requires n >= 2");
  if (n > Caps::carrier()) fail(Err::CapExceeded, "zmod order beyond carrier cap");
  int m = int(n);
  std::vector<uint16_t> add(size_t(m) * m), mul(size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      add[size_t(a) * m + b] = uint16_t((a + b) % m);
      mul[size_t(a) * m + b] = uint16_t((int64_t(a) * b) % m);
    }
  auto r = std::make_shared<FiniteRing>(m, 0, 1 % m, std::move(add), std::move(mul),
                                        "zmod(" + std::to_string(n) + ")");
  return r;
}

namespace {

/* Multiply polynomials over F_p and reduce mod the monic f (degree d). */
std::vector<int> gf_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                           const std::vector<int>& f, long long p, int d) {
  std::vector<int> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = int((prod[i + j] + int64_t(a[i]) * b[j]) % p);
  for (int i = 2 * d - 2; i >= d; --i) {
    int c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < d; ++j)
      prod[i - d + j] = int(((prod[i - d + j] - int64_t(c) * f[j]) % p + p) % p);
  }
  prod.resize(d);
  return prod;
}

bool gf_poly_is_zero(const std::vector<int>& a) {
  for (int c : a)
    if (c) return false;
  return true;
}

/* Remainder of monic-ish division a mod b over F_p; b need not be monic but
 * its leading coefficient must be a unit (always true over a field). */
std::vector<int> gf_poly_rem(std::vector<int> a, const std::vector<int>& b, long long p) {
  int db = int(b.size()) - 1;
  while (db > 0 && b[db] == 0) --db;
  // leading inverse
  long long lead = b[db], inv = 1;
  for (long long t = 1; t < p; ++t)
    if (lead * t % p == 1) {
      inv = t;
      break;
    }
  int da = int(a.size()) - 1;
  while (da >= db) {
    while (da >= 0 && a[da] == 0) --da;
    if (da < db) break;
    long long q = a[da] * inv % p;
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = int(((a[da - db + j] - q * b[j]) % p + p) % p);
  }
  a.resize(std::max(db, 1));
  return a;
}

bool gf_irreducible(const std::vector<int>& f, long long p, int d) {
  if (d == 1) return true;
  // trial division by every polynomial of degree 1..d/2 with nonzero lead
  for (int deg = 1; deg <= d / 2; ++deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long long lo = 0; lo < count; ++lo)
      for (int lead = 1; lead < p; ++lead) {
        std::vector<int> g(deg + 1, 0);
        long long v = lo;
        for (int i = 0; i < deg; ++i) {
          g[i] = int(v % p);
          v /= p;
        }
        g[deg] = lead;
        std::vector<int> fd(f);
        fd.push_back(1);  // f is stored without its monic lead
        if (gf_poly_is_zero(gf_poly_rem(fd, g, p))) return false;
      }
  }
  return true;
}

}  // namespace

RingPtr construct_gf(long long p, int d) {
  if (!is_prime_u(p)) fail(Err::NotPrime, "gf characteristic must be prime");
  if (d < 1) fail(Err::BadArgument, "gf degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > Caps::carrier()) fail(Err::CapExceeded, "gf order beyond carrier cap");
  }
  // least monic irreducible, coefficient tuples compared high degree first
  std::vector<int> f(d, 0);
  bool found = false;
  for (long long code = 0; code < q && !found; ++code) {
    long long v = code;
    for (int i = 0; i < d; ++i) {
      f[i] = int(v % p);
      v /= p;
    }
    if (gf_irreducible(f, p, d)) found = true;
  }
  if (!found) fail(Err::BadArgument, "no irreducible polynomial found");

  int n = int(q);
  auto decode = [&](int idx) {
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i) {
      c[i] = int(idx % p);
      idx = int(idx / p);
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    long long idx = 0;
    for (int i = d - 1; i >= 0; --i) idx = idx * p + c[i];
    return int(idx);
  };
  std::vector<uint16_t> add(size_t(n) * n), mul(size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    auto ca = decode(a);
    for (int b = 0; b < n; ++b) {
      auto cb = decode(b);
      std::vector<int> s(d);
      for (int i = 0; i < d; ++i) s[i] = int((ca[i] + cb[i]) % p);
      add[size_t(a) * n + b] = uint16_t(encode(s));
      mul[size_t(a) * n + b] = uint16_t(encode(gf_mulmod(ca, cb, f, p, d)));
    }
  }
  auto r = std::make_shared<FiniteRing>(n, 0, 1, std::move(add), std::move(mul),
                                        "gf(" + std::to_string(p) + "," + std::to_string(d) + ")");
  std::vector<int> xpoly(d, 0);
  if (d > 1)
    xpoly[1] = 1;
  else
    xpoly = gf_poly_rem({0, 1}, {f[0], 1}, p);  // x mod f for the degree-1 case
  const_cast<FiniteRing&>(*r).set_gen_names({{"x", encode(xpoly)}});
  return r;
}

RingPtr construct_product(std::vector<RingPtr> factors) {
  if (factors.empty()) fail(Err::BadArgument, "product needs at least one factor");
  long long n = 1;
  for (auto& f : factors) {
    n *= f->order();
    if (n > Caps::carrier()) fail(Err::CapExceeded, "product order beyond carrier cap");
  }
  int m = int(n);
  size_t k = factors.size();
  std::vector<int> strides(k);
  {
    long long s = 1;
    for (size_t i = k; i-- > 0;) {
      strides[i] = int(s);
      s *= factors[i]->order();
    }
  }
  std::vector<uint16_t> add(size_t(m) * m), mul(size_t(m) * m);
  std::vector<int> ca(k), cb(k);
  for (int a = 0; a < m; ++a) {
    {
      int v = a;
      for (size_t i = k; i-- > 0;) {
        ca[i] = v % factors[i]->order();
        v /= factors[i]->order();
      }
    }
    for (int b = 0; b < m; ++b) {
      {
        int v = b;
        for (size_t i = k; i-- > 0;) {
          cb[i] = v % factors[i]->order();
          v /= factors[i]->order();
        }
      }
      long long s = 0, pml = 0;
      for (size_t i = 0; i < k; ++i) {
        s += int64_t(factors[i]->add(ca[i], cb[i])) * strides[i];
        pml += int64_t(factors[i]->mul(ca[i], cb[i])) * strides[i];
      }
      add[size_t(a) * m + b] = uint16_t(s);
      mul[size_t(a) * m + b] = uint16_t(pml);
    }
  }
  std::ostringstream prov;
  prov << "product(";
  for (size_t i = 0; i < k; ++i) prov << (i ? "," : "") << factors[i]->provenance();
  prov << ")";
  long long zero = 0, one = 0;
  for (size_t i = 0; i < k; ++i) {
    zero += int64_t(factors[i]->zero()) * strides[i];
    one += int64_t(factors[i]->one()) * strides[i];
  }
  auto r = std::make_shared<FiniteRing>(m, int(zero), int(one), std::move(add), std::move(mul),
                                        prov.str());
  const_cast<FiniteRing&>(*r).set_factors(std::move(factors));
  return r;
}

namespace {

enum class ClosureKind { Subring, Ideal, Module, Additive };

/* Worklist closure.  Each popped element is combined with everything found
 * so far, so total work is quadratic in the result.  Additive subgroups of
 * a finite ring have order dividing the carrier, so once more than half the
 * carrier is reached the closure must be everything. */
IdxSet close_under(const FiniteRing& S, std::span<const int> seeds, ClosureKind kind,
                   const IdxSet* scalars) {
  int n = S.order();
  std::vector<char> in(n, 0);
  std::vector<int> members;
  members.reserve(64);
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  push(S.zero());
  if (kind == ClosureKind::Subring) push(S.one());
  for (int g : seeds) {
    if (g < 0 || g >= n) fail(Err::ElementNotInRing, "generator index out of range");
    push(g);
  }
  for (size_t qi = 0; qi < members.size(); ++qi) {
    int x = members[qi];
    size_t snapshot = members.size();
    for (size_t j = 0; j < snapshot; ++j) {
      int y = members[j];
      push(S.add(x, y));
      if (kind == ClosureKind::Subring) push(S.mul(x, y));
    }
    if (kind == ClosureKind::Ideal)
      for (int y = 0; y < n; ++y) push(S.mul(x, y));
    if (kind == ClosureKind::Module)
      for (int y : *scalars) push(S.mul(x, y));
    if (int(members.size()) * 2 > n) {  // Lagrange: must be the whole ring
      IdxSet all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      return all;
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

IdxSet subring_closure(const FiniteRing& S, std::span<const int> gens) {
  return close_under(S, gens, ClosureKind::Subring, nullptr);
}

IdxSet ideal_closure(const FiniteRing& S, std::span<const int> gens) {
  return close_under(S, gens, ClosureKind::Ideal, nullptr);
}

IdxSet module_span(const FiniteRing& S, const IdxSet& scalars, std::span<const int> gens) {
  return close_under(S, gens, ClosureKind::Module, &scalars);
}

IdxSet additive_closure(const FiniteRing& S, std::span<const int> gens) {
  return close_under(S, gens, ClosureKind::Additive, nullptr);
}

bool is_subring_set(const FiniteRing& S, const IdxSet& a) {
  std::vector<char> in(S.order(), 0);
  for (int x : a) in[x] = 1;
  if (!in[S.zero()] || !in[S.one()]) return false;
  for (int x : a)
    for (int y : a)
      if (!in[S.add(x, y)] || !in[S.mul(x, y)]) return false;
  return true;
}

bool is_ideal_set(const FiniteRing& S, const IdxSet& a) {
  std::vector<char> in(S.order(), 0);
  for (int x : a) in[x] = 1;
  if (!in[S.zero()]) return false;
  for (int x : a) {
    for (int y : a)
      if (!in[S.add(x, y)]) return false;
    for (int y = 0; y < S.order(); ++y)
      if (!in[S.mul(x, y)]) return false;
  }
  return true;
}

SubringView restrict_to_subring(const RingPtr& S, const IdxSet& members) {
  if (!is_subring_set(*S, members)) fail(Err::NotASubring, "set is not a subring");
  int m = int(members.size());
  std::vector<int> from(S->order(), -1);
  for (int i = 0; i < m; ++i) from[members[i]] = i;
  std::vector<uint16_t> add(size_t(m) * m), mul(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[size_t(i) * m + j] = uint16_t(from[S->add(members[i], members[j])]);
      mul[size_t(i) * m + j] = uint16_t(from[S->mul(members[i], members[j])]);
    }
  auto r = std::make_shared<FiniteRing>(m, from[S->zero()], from[S->one()], std::move(add),
                                        std::move(mul),
                                        "subring(" + S->provenance() + ",#" + std::to_string(m) + ")");
  return SubringView{std::move(r), members, std::move(from)};
}

QuotientView quotient_by_ideal(const RingPtr& S, const IdxSet& ideal) {
  if (!is_ideal_set(*S, ideal)) fail(Err::NotAnIdeal, "set is not an ideal");
  int n = S->order();
  std::vector<int> proj(n, -1);
  IdxSet reps;
  for (int x = 0; x < n; ++x) {
    if (proj[x] >= 0) continue;
    int cls = int(reps.size());
    reps.push_back(x);  // x is the least index of its coset by scan order
    for (int i : ideal) proj[S->add(x, i)] = cls;
  }
  int m = int(reps.size());
  std::vector<uint16_t> add(size_t(m) * m), mul(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[size_t(i) * m + j] = uint16_t(proj[S->add(reps[i], reps[j])]);
      mul[size_t(i) * m + j] = uint16_t(proj[S->mul(reps[i], reps[j])]);
    }
  auto r = std::make_shared<FiniteRing>(
      m, proj[S->zero()], proj[S->one()], std::move(add), std::move(mul),
      "quotient(" + S->provenance() + ",#" + std::to_string(ideal.size()) + ")");
  return QuotientView{std::move(r), std::move(proj), std::move(reps)};
}

namespace {

void axiom_triple(const FiniteRing& S, int a, int b, int c) {
  if (S.add(S.add(a, b), c) != S.add(a, S.add(b, c)))
    throw std::logic_error("additive associativity violated");
  if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c)))
    throw std::logic_error("multiplicative associativity violated");
  if (S.mul(a, S.add(b, c)) != S.add(S.mul(a, b), S.mul(a, c)))
    throw std::logic_error("distributivity violated");
}

}  // namespace

void verify_ring_axioms(const FiniteRing& S, int exhaustive_limit, int samples, uint64_t seed) {
  int n = S.order();
  if (S.zero() == S.one()) throw std::logic_error("zero ring");
  for (int a = 0; a < n; ++a) {
    if (S.add(a, S.zero()) != a) throw std::logic_error("additive identity violated");
    if (S.mul(a, S.one()) != a) throw std::logic_error("multiplicative identity violated");
    if (S.add(a, S.neg(a)) != S.zero()) throw std::logic_error("additive inverse violated");
    for (int b = 0; b < n; ++b) {
      if (S.add(a, b) != S.add(b, a)) throw std::logic_error("additive commutativity violated");
      if (S.mul(a, b) != S.mul(b, a)) throw std::logic_error("multiplicative commutativity violated");
    }
  }
  if (n <= exhaustive_limit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) axiom_triple(S, a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i)
      axiom_triple(S, int(rng() % n), int(rng() % n), int(rng() % n));
  }
}

RingElem elem(const RingPtr& R, int idx) {
  if (idx < 0 || idx >= R->order()) fail(Err::ElementNotInRing, "index out of range");
  return RingElem{R, idx};
}

namespace {
void check_same(const RingElem& a, const RingElem& b) {
  if (a.ring.get() != b.ring.get()) fail(Err::RingMismatch, "elements of different rings");
}
}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
  check_same(a, b);
  return {a.ring, a.ring->add(a.idx, b.idx)};
}
RingElem operator-(const RingElem& a, const RingElem& b) {
  check_same(a, b);
  return {a.ring, a.ring->sub(a.idx, b.idx)};
}
RingElem operator*(const RingElem& a, const RingElem& b) {
  check_same(a, b);
  return {a.ring, a.ring->mul(a.idx, b.idx)};
}
RingElem operator-(const RingElem& a) { return {a.ring, a.ring->neg(a.idx)}; }
RingElem pow(const RingElem& a, long long e) { return {a.ring, a.ring->pow(a.idx, e)}; }

}  // namespace ringlat
