#include "ringlat/common.hpp"

#include <algorithm>

namespace ringlat {

const char* err_name(Err e) {
  switch (e) {
    case Err::BadArgument: return "BAD_ARGUMENT";
    case Err::CapExceeded: return "CAP_EXCEEDED";
    case Err::NotPrime: return "NOT_PRIME";
    case Err::BadCoefficientRing: return "BAD_COEFFICIENT_RING";
    case Err::RingNotFinite: return "RING_NOT_FINITE";
    case Err::RingMismatch: return "RING_MISMATCH";
    case Err::NotAnIdeal: return "NOT_AN_IDEAL";
    case Err::NotASubring: return "NOT_A_SUBRING";
    case Err::ElementNotInRing: return "ELEMENT_NOT_IN_RING";
    case Err::ImproperExtension: return "IMPROPER_EXTENSION";
    case Err::NotMinimal: return "NOT_MINIMAL";
    case Err::ClassificationFailed: return "CLASSIFICATION_FAILED";
    case Err::NotLocal: return "NOT_LOCAL";
    case Err::LatticeCapExceeded: return "LATTICE_CAP_EXCEEDED";
    case Err::EmptySupport: return "EMPTY_SUPPORT";
    case Err::UnknownFixture: return "UNKNOWN_FIXTURE";
    case Err::UnknownCheck: return "UNKNOWN_CHECK";
    case Err::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

int& Caps::carrier() {
  static int v = 4096;
  return v;
}
int& Caps::lattice_nodes() {
  static int v = 100000;
  return v;
}
int& Caps::ideal_enum() {
  static int v = 1024;
  return v;
}
int& Caps::poly_degree() {
  static int v = 16;
  return v;
}

namespace setops {

bool contains(const IdxSet& a, int x) { return std::binary_search(a.begin(), a.end(), x); }

bool is_subset(const IdxSet& a, const IdxSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IdxSet intersect(const IdxSet& a, const IdxSet& b) {
  IdxSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

IdxSet unite(const IdxSet& a, const IdxSet& b) {
  IdxSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool size_lex_less(const IdxSet& a, const IdxSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace setops

int Bits::count() const {
  int c = 0;
  for (uint64_t x : w_) c += __builtin_popcountll(x);
  return c;
}

bool Bits::subset_of(const Bits& other) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~other.w_[i]) return false;
  return true;
}

Bits Bits::from_set(int n, const IdxSet& s) {
  Bits b(n);
  for (int i : s) b.set(i);
  return b;
}

IdxSet Bits::to_set() const {
  IdxSet s;
  for (int i = 0; i < n_; ++i)
    if (test(i)) s.push_back(i);
  return s;
}

size_t Bits::Hash::operator()(const Bits& b) const {
  size_t h = 1469598103934665603ull;
  for (uint64_t x : b.w_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_prime_u(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<long long, int> prime_power_split(long long n) {
  if (n < 2) return {0, 0};
  long long p = n;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  int k = 0;
  long long m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return {0, 0};
  return {p, k};
}

}  // namespace ringlat
