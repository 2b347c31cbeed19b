#pragma once

/* Finite commutative unital rings as dense operation tables.  A ring of
 * order n carries its elements as indices 0..n-1; add/mul are n*n lookup
 * tables.  Constructors guarantee a fixed deterministic indexing, so equal
 * recipes produce bit-identical tables.
 */

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringlat/common.hpp"

namespace ringlat {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
public:
  /* Tables are row-major: op[a * order + b]. */
  FiniteRing(int order, int zero, int one, std::vector<uint16_t> add, std::vector<uint16_t> mul,
             std::string provenance);

  int order() const { return order_; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_[size_t(a) * order_ + b]; }
  int mul(int a, int b) const { return mul_[size_t(a) * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int pow(int a, long long e) const;

  const std::string& provenance() const { return provenance_; }
  const std::vector<uint16_t>& add_table() const { return add_; }
  const std::vector<uint16_t>& mul_table() const { return mul_; }

  /* Named generators exposed to the ring-spec language (e.g. "x" for a
   * field extension, declared variables for polynomial quotients). */
  const std::vector<std::pair<std::string, int>>& gen_names() const { return gen_names_; }
  void set_gen_names(std::vector<std::pair<std::string, int>> g) { gen_names_ = std::move(g); }

  /* Product structure when built by construct_product; empty otherwise. */
  const std::vector<RingPtr>& factors() const { return factors_; }
  void set_factors(std::vector<RingPtr> f) { factors_ = std::move(f); }

  /* Mixed-radix helpers for product rings (first factor most significant). */
  int product_encode(std::span<const int> comps) const;
  std::vector<int> product_decode(int idx) const;

  bool same_tables(const FiniteRing& other) const;

private:
  int order_;
  int zero_;
  int one_;
  std::vector<uint16_t> add_;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> neg_;
  std::vector<std::pair<std::string, int>> gen_names_;
  std::vector<RingPtr> factors_;
  std::string provenance_;
};

/* Z/n with index i representing residue i.  Rejects n < 2. */
RingPtr construct_zmod(long long n);

/* GF(p^d) as F_p[x]/(f) where f is the least monic irreducible of degree d,
 * coefficient tuples ordered high degree first (the usual table convention:
 * d=3, p=2 picks x^3+x+1).  Element index encodes the coefficient vector
 * c_0 + c_1 p + ... + c_{d-1} p^{d-1}.  Generator "x" is recorded. */
RingPtr construct_gf(long long p, int d);

/* Direct product; index is the mixed-radix encoding of component indices
 * with the first factor most significant. */
RingPtr construct_product(std::vector<RingPtr> factors);

/* A polynomial relation over a base ring: sum of terms, each a base
 * coefficient times a monomial given by its exponent vector. */
struct PolyTerm {
  int coeff;  // element index in the base ring
  std::vector<int> exps;
};
using Poly = std::vector<PolyTerm>;

/* base[vars]/(relations) for a chain-ring base (Z/p^k or GF(q)).  Elements
 * are canonical residue representatives on the surviving monomial basis;
 * construction fails with RING_NOT_FINITE when the basis does not stabilize
 * below the degree cap. */
RingPtr construct_polyquot(const RingPtr& base, const std::vector<std::string>& vars,
                           const std::vector<Poly>& relations);

/* Smallest subring containing the generators (always contains 0 and 1). */
IdxSet subring_closure(const FiniteRing& S, std::span<const int> gens);

/* Smallest ideal containing the generators. */
IdxSet ideal_closure(const FiniteRing& S, std::span<const int> gens);

/* Smallest additive subgroup closed under multiplication by `scalars`
 * containing the generators (an R-submodule when scalars form a subring). */
IdxSet module_span(const FiniteRing& S, const IdxSet& scalars, std::span<const int> gens);

/* Additive subgroup generated by `gens` (no multiplicative closure). */
IdxSet additive_closure(const FiniteRing& S, std::span<const int> gens);

bool is_subring_set(const FiniteRing& S, const IdxSet& a);
bool is_ideal_set(const FiniteRing& S, const IdxSet& a);

/* A subring materialized as a standalone ring; index i of the view is the
 * i-th smallest ambient index.  from_ambient is -1 off the subring. */
struct SubringView {
  RingPtr ring;
  IdxSet to_ambient;
  std::vector<int> from_ambient;
};
SubringView restrict_to_subring(const RingPtr& S, const IdxSet& members);

/* Quotient by an ideal; classes are represented by their least ambient
 * index, classes ordered by that representative. */
struct QuotientView {
  RingPtr ring;
  std::vector<int> proj;  // ambient index -> class index
  IdxSet reps;            // class index -> least ambient representative
};
QuotientView quotient_by_ideal(const RingPtr& S, const IdxSet& ideal);

/* Exhaustive axiom check up to `exhaustive_limit`, randomized sampling with
 * `samples` triples above it.  Throws logic_error on the first violation. */
void verify_ring_axioms(const FiniteRing& S, int exhaustive_limit = 4096, int samples = 10000,
                        uint64_t seed = 0);

/* Typed element handle for one-off arithmetic; ring identity is by pointer. */
struct RingElem {
  RingPtr ring;
  int idx = 0;
};
RingElem elem(const RingPtr& R, int idx);
RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator*(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a);
RingElem pow(const RingElem& a, long long e);

}  // namespace ringlat
