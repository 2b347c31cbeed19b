#pragma once

/* Shared infrastructure: error codes, size caps, index-set helpers and a
 * small bitset keyed on carrier indices.  Everything downstream works with
 * sorted vectors of element indices ("IdxSet") relative to one ambient ring.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlat {

enum class Err {
  BadArgument,
  CapExceeded,
  NotPrime,
  BadCoefficientRing,
  RingNotFinite,
  RingMismatch,
  NotAnIdeal,
  NotASubring,
  ElementNotInRing,
  ImproperExtension,
  NotMinimal,
  ClassificationFailed,
  NotLocal,
  LatticeCapExceeded,
  EmptySupport,
  UnknownFixture,
  UnknownCheck,
  ParseError,
};

const char* err_name(Err e);

class RingError : public std::runtime_error {
public:
  RingError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw RingError(code, what); }

/* Mutable global limits.  Defaults keep everything desk-scale; the CLI can
 * override the carrier cap (flag wins over the RINGLAT_MAX_CARRIER
 * environment variable).  Not synchronized: set them before doing work. */
struct Caps {
  static int& carrier();        // max ring order a constructor accepts (default 4096)
  static int& lattice_nodes();  // max nodes enumerate_interval materializes (default 100000)
  static int& ideal_enum();     // max ring order for exhaustive ideal enumeration (default 1024)
  static int& poly_degree();    // max total degree tried before declaring non-finite (default 16)
};

/* Hard ceiling imposed by the uint16_t table encoding. */
constexpr int kCarrierHardLimit = 65535;

using IdxSet = std::vector<int>;  // sorted ascending, unique

namespace setops {

bool contains(const IdxSet& a, int x);
bool is_subset(const IdxSet& a, const IdxSet& b);  // a included in b
IdxSet intersect(const IdxSet& a, const IdxSet& b);
IdxSet unite(const IdxSet& a, const IdxSet& b);
/* (|a|, elements) ordering used everywhere a canonical node order is needed. */
bool size_lex_less(const IdxSet& a, const IdxSet& b);

}  // namespace setops

/* Fixed-width bitset over carrier indices; cheap dedupe key for set-valued
 * searches (subring lattices, ideal enumeration, submodule scans). */
class Bits {
public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  int count() const;
  bool subset_of(const Bits& other) const;
  bool operator==(const Bits& other) const { return n_ == other.n_ && w_ == other.w_; }

  static Bits from_set(int n, const IdxSet& s);
  IdxSet to_set() const;

  struct Hash {
    size_t operator()(const Bits& b) const;
  };

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

/* Small integer helpers used by constructors. */
bool is_prime_u(long long n);
/* n = p^k with p prime, k >= 1; returns {p, k} or {0, 0}. */
std::pair<long long, int> prime_power_split(long long n);

}  // namespace ringlat
