#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ringlat/ring.hpp"

/* base[vars]/(relations) for a chain-ring base: Z/p^k or GF(q).
 *
 * Monomials are ordered by (total degree, exponent vector); the ideal is
 * spanned, degree window by degree window, by monomial multiples of the
 * relations, and brought to a fully reduced Howell form over the base.  A
 * pivot with leading coefficient p^v (v = 0 over a field) constrains its
 * monomial to residues mod p^v; v = 0 eliminates the monomial outright.
 * The basis has stabilized once every monomial of some degree d0 is
 * eliminated: multiplicativity then eliminates all higher degrees too.
 * Carrier indices are the mixed-radix encoding of the canonical residue
 * representative over the surviving monomials.
 */

namespace ringlat {

namespace {

using Mono = std::vector<int>;  // exponent per variable

int mono_deg(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool mono_less(const Mono& a, const Mono& b) {
  int da = mono_deg(a), db = mono_deg(b);
  if (da != db) return da < db;
  return a < b;
}

std::vector<Mono> monomials_up_to(int nvars, int deg) {
  std::vector<Mono> out;
  Mono cur(nvars, 0);
  // iterate exponent vectors in product order, filter by degree, then sort
  while (true) {
    if (mono_deg(cur) <= deg) out.push_back(cur);
    int i = nvars - 1;
    while (i >= 0 && cur[i] == deg) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

/* Scalar arithmetic in the base ring, with p-adic valuations for the
 * chain structure.  For Z/p^k the element index is the residue; for GF(q)
 * every nonzero element is a unit (k = 1). */
struct ChainBase {
  RingPtr ring;
  long long p = 0;
  int k = 0;
  bool is_field = false;
  std::vector<int> inv;  // multiplicative inverse per unit, -1 otherwise

  int val(int c) const {
    if (c == ring->zero()) return k;
    if (is_field) return 0;
    int v = 0;
    long long x = c;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  }
  /* exact division by p^v; only called on Z/p^k indices */
  int div_pow(int c, int v) const {
    if (is_field || v == 0) return c;
    long long x = c;
    for (int i = 0; i < v; ++i) x /= p;
    return int(x);
  }
  int ppow(int v) const {
    if (is_field) return v == 0 ? ring->one() : ring->zero();
    long long x = 1;
    for (int i = 0; i < v; ++i) x = x * p % ring->order();
    return int(x);
  }
};

ChainBase make_chain_base(const RingPtr& base) {
  ChainBase cb;
  cb.ring = base;
  const std::string& prov = base->provenance();
  if (prov.rfind("gf(", 0) == 0) {
    cb.is_field = true;
    cb.k = 1;
    cb.p = 0;
  } else if (prov.rfind("zmod(", 0) == 0) {
    auto [p, k] = prime_power_split(base->order());
    if (p == 0)
      fail(Err::BadCoefficientRing, "polyquot base must be Z/p^k or a finite field");
    cb.p = p;
    cb.k = k;
  } else {
    fail(Err::BadCoefficientRing, "polyquot base must be Z/p^k or a finite field");
  }
  cb.inv.assign(base->order(), -1);
  for (int a = 0; a < base->order(); ++a)
    for (int b = 0; b < base->order(); ++b)
      if (base->mul(a, b) == base->one()) {
        cb.inv[a] = b;
        break;
      }
  return cb;
}

using Row = std::vector<int>;  // dense over columns; entries are base indices

/* Fully reduced Howell form.  Columns are monomials in DESCENDING order
 * (column 0 = largest monomial); pivot leading coefficients are p^v after
 * unit normalization.  For every pivot with v > 0 the annihilator multiple
 * p^(k-v) * row is folded back in, which makes membership and canonical
 * reduction work over Z/p^k. */
struct Howell {
  const ChainBase* B = nullptr;
  int ncols = 0;
  std::vector<Row> rows;        // rows[i] has its pivot at pivot_col[i]
  std::vector<int> pivot_col;   // ascending
  std::vector<int> pivot_of;    // column -> row index or -1

  void init(const ChainBase& b, int cols) {
    B = &b;
    ncols = cols;
    pivot_of.assign(cols, -1);
  }

  void scale_row(Row& r, int c) const {
    const auto& R = *B->ring;
    for (auto& x : r) x = R.mul(x, c);
  }
  void axpy(Row& r, int c, const Row& s) const {  // r -= c * s
    const auto& R = *B->ring;
    for (int i = 0; i < ncols; ++i) r[i] = R.sub(r[i], R.mul(c, s[i]));
  }

  void insert(Row r) {
    const auto& R = *B->ring;
    for (int col = 0; col < ncols; ++col) {
      if (r[col] == R.zero()) continue;
      int pr = pivot_of[col];
      if (pr < 0) {
        // new pivot: strip the unit so the lead becomes exactly p^v (1 over a field)
        int v = B->val(r[col]);
        int u = B->is_field ? r[col] : B->div_pow(r[col], v);
        scale_row(r, B->inv[u]);
        pivot_of[col] = int(rows.size());
        rows.push_back(r);
        pivot_col.push_back(col);
        if (v > 0 && v < B->k) {
          Row ann = rows.back();
          scale_row(ann, B->ppow(B->k - v));
          insert(std::move(ann));
        }
        return;
      }
      int pv = B->val(rows[pr][col]);
      int rv = B->val(r[col]);
      if (rv >= pv) {
        // exact elimination: the quotient is r[col] / p^pv (times inv(lead) = 1)
        int q = B->is_field ? R.mul(r[col], B->inv[rows[pr][col]]) : B->div_pow(r[col], pv);
        axpy(r, q, rows[pr]);
      } else {
        // incoming row has the smaller valuation: swap it into the basis
        std::swap(r, rows[pr]);
        int v = B->val(rows[pr][col]);
        int u = B->div_pow(rows[pr][col], v);
        scale_row(rows[pr], B->inv[B->is_field ? rows[pr][col] : u]);
        if (v > 0 && v < B->k) {
          Row ann = rows[pr];
          scale_row(ann, B->ppow(B->k - v));
          insert(std::move(ann));
        }
        // keep eliminating the displaced row at this same column
        int q = B->div_pow(r[col], v);
        axpy(r, q, rows[pr]);
      }
    }
  }

  /* Reduce entries of every row at every other pivot column, giving a
   * unique canonical basis. */
  void full_reduce() {
    const auto& R = *B->ring;
    // process pivots from the left so tails settle
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivot_col[a] < pivot_col[b]; });
    for (int ri : order) {
      for (int col = pivot_col[ri] + 1; col < ncols; ++col) {
        int pr = pivot_of[col];
        if (pr < 0 || rows[ri][col] == R.zero()) continue;
        int pv = B->val(rows[pr][col]);
        int c = rows[ri][col];
        int q;
        if (B->is_field)
          q = R.mul(c, B->inv[rows[pr][col]]);
        else
          q = B->div_pow(c, pv);  // floor division: leaves c mod p^pv
        axpy(rows[ri], q, rows[pr]);
      }
    }
  }

  /* Canonical residue: at each pivot column, coefficient reduced mod p^v
   * (entirely eliminated when v = 0). */
  void reduce_vector(Row& r) const {
    const auto& R = *B->ring;
    for (int col = 0; col < ncols; ++col) {
      if (r[col] == R.zero()) continue;
      int pr = pivot_of[col];
      if (pr < 0) continue;
      int pv = B->val(rows[pr][col]);
      int q = B->is_field ? R.mul(r[col], B->inv[rows[pr][col]]) : B->div_pow(r[col], pv);
      if (q == R.zero()) continue;
      axpy(r, q, rows[pr]);
    }
  }
};

}  // namespace

RingPtr construct_polyquot(const RingPtr& base, const std::vector<std::string>& vars,
                           const std::vector<Poly>& relations) {
  if (vars.empty()) fail(Err::BadArgument, "polyquot needs at least one variable");
  for (auto& v : vars)
    if (std::count(vars.begin(), vars.end(), v) != 1)
      fail(Err::BadArgument, "duplicate variable name");
  ChainBase B = make_chain_base(base);
  int nvars = int(vars.size());
  int maxrel = 1;
  for (const auto& g : relations)
    for (const auto& t : g) {
      if (int(t.exps.size()) != nvars) fail(Err::BadArgument, "relation arity mismatch");
      maxrel = std::max(maxrel, mono_deg(t.exps));
    }

  int degree_cap = Caps::poly_degree();
  auto build = [&](int window) {
    auto monos = monomials_up_to(nvars, window);
    std::map<Mono, int> col_of;  // column = position in DESCENDING order
    int ncols = int(monos.size());
    for (int i = 0; i < ncols; ++i) col_of[monos[i]] = ncols - 1 - i;
    Howell H;
    H.init(B, ncols);
    // rows: monomial multiples m*g with deg(m*g) <= window
    for (const auto& g : relations) {
      int gdeg = 1;
      for (const auto& t : g) gdeg = std::max(gdeg, mono_deg(t.exps));
      for (const auto& m : monos) {
        if (mono_deg(m) + gdeg > window) continue;
        Row r(ncols, base->zero());
        bool in_window = true;
        for (const auto& t : g) {
          Mono prod(nvars);
          for (int i = 0; i < nvars; ++i) prod[i] = m[i] + t.exps[i];
          auto it = col_of.find(prod);
          if (it == col_of.end()) {
            in_window = false;
            break;
          }
          r[it->second] = base->add(r[it->second], t.coeff);
        }
        if (in_window) H.insert(std::move(r));
      }
    }
    H.full_reduce();
    return std::pair{std::move(H), std::move(monos)};
  };

  /* Find the least degree d0 <= cap at which every monomial is eliminated. */
  int d0 = -1;
  for (int D = maxrel + 1; D <= degree_cap + maxrel; ++D) {
    auto [H, monos] = build(D);
    int ncols = int(monos.size());
    for (int cand = 1; cand <= D - maxrel; ++cand) {
      bool all_gone = true;
      for (int i = 0; i < ncols && all_gone; ++i) {
        if (mono_deg(monos[i]) != cand) continue;
        int col = ncols - 1 - i;
        int pr = H.pivot_of[col];
        if (pr < 0 || B.val(H.rows[pr][col]) != 0) all_gone = false;
      }
      if (all_gone) {
        d0 = cand;
        break;
      }
    }
    if (d0 >= 0) break;
  }
  if (d0 < 0)
    fail(Err::RingNotFinite, "monomial basis does not stabilize below the degree cap");

  /* Products of basis monomials reach degree 2*(d0-1); the window must hold
   * elimination rows for everything up to that degree.  Monomials beyond it
   * near the window edge may lack their eliminators; they are unreachable
   * by any reduction we perform and are ignored. */
  int prod_max = std::max(2 * (d0 - 1), d0);
  int window = prod_max + maxrel;
  auto [H, monos] = build(window);
  int ncols = int(monos.size());

  /* Surviving monomials (ascending order) with their residue moduli p^v. */
  std::vector<Mono> basis;
  std::vector<int> basis_mod;  // number of residues for that coordinate
  for (int i = 0; i < ncols; ++i) {
    int col = ncols - 1 - i;
    int pr = H.pivot_of[col];
    int v = pr < 0 ? B.k : B.val(H.rows[pr][col]);
    if (v == 0) continue;
    int deg = mono_deg(monos[i]);
    if (deg > prod_max) continue;  // boundary junk outside the product range
    if (deg >= d0)
      throw std::logic_error("monomial above the stabilized degree survived");
    basis.push_back(monos[i]);
    long long mod = 1;
    for (int j = 0; j < v; ++j) mod *= (B.is_field ? base->order() : B.p);
    basis_mod.push_back(int(mod));
  }
  if (basis.empty() || basis[0] != Mono(nvars, 0))
    fail(Err::BadArgument, "relations generate the unit ideal (zero ring)");

  long long order = 1;
  for (int m : basis_mod) {
    order *= m;
    if (order > Caps::carrier()) fail(Err::CapExceeded, "polyquot order beyond carrier cap");
  }
  int n = int(order);

  /* index <-> residue vector (coefficients over the basis, first monomial
   * most significant would be unusual; use first = least significant so the
   * zero polynomial is index 0 and 1 is index 1) */
  auto decode = [&](int idx) {
    std::vector<int> c(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
      c[i] = idx % basis_mod[i];
      idx /= basis_mod[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    long long idx = 0;
    for (size_t i = basis.size(); i-- > 0;) idx = idx * basis_mod[i] + c[i];
    return int(idx);
  };

  /* For Z/p^k the residue digit at a monomial with modulus p^v is a residue
   * mod p^v; lift it straight into the base ring.  For GF(q) the digit IS a
   * base element. */
  auto digit_to_base = [&](int digit) { return digit; };
  auto base_to_digit = [&](int c, int mod) {
    if (B.is_field) return c;
    return c % mod;
  };

  std::vector<int> basis_col(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    auto it = std::find(monos.begin(), monos.end(), basis[i]);
    basis_col[i] = ncols - 1 - int(it - monos.begin());
  }

  /* Normal form of each basis product, as a residue vector. */
  auto nf_of_row = [&](Row r) {
    H.reduce_vector(r);
    std::vector<int> c(basis.size(), 0);
    for (int i = 0; i < ncols; ++i) {
      if (r[i] == base->zero()) continue;
      // i is a column (descending); find its basis slot
      auto bit = std::find(basis_col.begin(), basis_col.end(), i);
      if (bit == basis_col.end())
        throw std::logic_error("reduction left a non-basis monomial");
      size_t slot = size_t(bit - basis_col.begin());
      c[slot] = base_to_digit(r[i], basis_mod[slot]);
    }
    return c;
  };

  std::vector<std::vector<std::vector<int>>> prod_nf(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    prod_nf[i].resize(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
      Mono m(nvars);
      for (int t = 0; t < nvars; ++t) m[t] = basis[i][t] + basis[j][t];
      auto it = std::find(monos.begin(), monos.end(), m);
      if (it == monos.end()) throw std::logic_error("product monomial outside window");
      Row r(ncols, base->zero());
      r[ncols - 1 - int(it - monos.begin())] = base->one();
      prod_nf[i][j] = nf_of_row(std::move(r));
    }
  }

  std::vector<uint16_t> add(size_t(n) * n), mul(size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    auto ca = decode(a);
    for (int b = 0; b < n; ++b) {
      auto cb = decode(b);
      // addition: base-ring sum over the window, then canonical reduction
      Row r(ncols, base->zero());
      for (size_t i = 0; i < basis.size(); ++i)
        r[basis_col[i]] =
            base->add(base->add(r[basis_col[i]], digit_to_base(ca[i])), digit_to_base(cb[i]));
      add[size_t(a) * n + b] = uint16_t(encode(nf_of_row(std::move(r))));
      // multiplication: bilinear combination of precomputed basis products
      Row rm(ncols, base->zero());
      for (size_t i = 0; i < basis.size(); ++i) {
        if (ca[i] == 0 && !B.is_field) continue;
        for (size_t j = 0; j < basis.size(); ++j) {
          if (cb[j] == 0 && !B.is_field) continue;
          int coef = base->mul(digit_to_base(ca[i]), digit_to_base(cb[j]));
          if (coef == base->zero()) continue;
          const auto& nf = prod_nf[i][j];
          for (size_t t = 0; t < basis.size(); ++t) {
            if (nf[t] == 0) continue;
            rm[basis_col[t]] = base->add(rm[basis_col[t]], base->mul(coef, digit_to_base(nf[t])));
          }
        }
      }
      mul[size_t(a) * n + b] = uint16_t(encode(nf_of_row(std::move(rm))));
    }
  }

  std::ostringstream prov;
  prov << "polyquot(" << base->provenance() << ";";
  for (size_t i = 0; i < vars.size(); ++i) prov << (i ? "," : "") << vars[i];
  prov << ";rels=" << relations.size() << ")";

  std::vector<int> one_c(basis.size(), 0);
  one_c[0] = 1;
  auto r = std::make_shared<FiniteRing>(n, 0, encode(one_c), std::move(add), std::move(mul),
                                        prov.str());

  std::vector<std::pair<std::string, int>> gens;
  for (int vI = 0; vI < nvars; ++vI) {
    Mono m(nvars, 0);
    m[vI] = 1;
    auto it = std::find(monos.begin(), monos.end(), m);
    Row rr(ncols, base->zero());
    rr[ncols - 1 - int(it - monos.begin())] = base->one();
    gens.emplace_back(vars[vI], encode(nf_of_row(std::move(rr))));
  }
  const_cast<FiniteRing&>(*r).set_gen_names(std::move(gens));
  return r;
}

}  // namespace ringlat
