#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qed/errors.hpp"

namespace qed::quat {

namespace detail {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline bool is_squarefree(long long n) {
  for (long long q = 2; q * q <= n; ++q)
    if (n % (q * q) == 0) return false;
  return true;
}

// Jacobi symbol (a/n) for odd n > 0, extended multiplicatively in a.
inline int jacobi(long long a, long long n) {
  a %= n;
  if (a < 0) a += n;
  int s = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (n % 8 == 3 || n % 8 == 5) s = -s;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) s = -s;
    a %= n;
  }
  return n == 1 ? s : 0;
}

}  // namespace detail

/**
 * Orders of the possible nontrivial torsion elements in the unit groups under
 * consideration: m >= 3 with phi(m) dividing 4, so that the cyclotomic field
 * Q(zeta_m) can sit inside a quaternion algebra over a real quadratic field.
 */
inline std::vector<long long> torsion_orders() { return {3, 4, 5, 6, 8, 10, 12}; }

inline long long torsion_lcm() {
  long long l = 1;
  for (long long m : torsion_orders()) l = std::lcm(l, m);
  return l;
}

// k = Q(sqrt(d)) for squarefree d > 1.
struct RealQuadraticField {
  long long d = 0;
  long long disc = 0;

  friend bool operator==(const RealQuadraticField&, const RealQuadraticField&) = default;
};

inline RealQuadraticField make_field(long long d) {
  if (d <= 1) throw error(errc::invalid_argument, "field parameter must exceed 1");
  if (!detail::is_squarefree(d))
    throw error(errc::invalid_argument, "field parameter must be squarefree");
  return {d, d % 4 == 1 ? d : 4 * d};
}

enum class SplitType { Split, Inert, Ramified };

inline const char* split_type_name(SplitType t) {
  switch (t) {
    case SplitType::Split:    return "split";
    case SplitType::Inert:    return "inert";
    case SplitType::Ramified: return "ramified";
  }
  return "?";
}

inline SplitType split_prime(const RealQuadraticField& k, long long p) {
  if (!detail::is_prime(p)) throw error(errc::bad_prime, std::to_string(p) + " is not prime");
  if (k.disc % p == 0) return SplitType::Ramified;
  if (p == 2) return k.d % 8 == 1 ? SplitType::Split : SplitType::Inert;
  return detail::jacobi(k.d, p) == 1 ? SplitType::Split : SplitType::Inert;
}

/**
 * A finite prime of k lying over p, recorded by the residue degree f (1 for
 * split or ramified p, 2 for inert p) and, over a split p, which of the two
 * conjugate primes is meant.
 */
struct PrimeIdeal {
  long long p = 0;
  int f = 1;
  int conjugate_index = 0;

  friend auto operator<=>(const PrimeIdeal&, const PrimeIdeal&) = default;
};

inline std::string prime_ideal_name(const PrimeIdeal& P) {
  return "(" + std::to_string(P.p) + "|f" + std::to_string(P.f) + "|c" +
         std::to_string(P.conjugate_index) + ")";
}

/**
 * Galois data of k(zeta_120)/k, realized as the subgroup of (Z/120)^* fixing
 * k: the full unit group when k is linearly disjoint from Q(zeta_120), and
 * the kernel of the quadratic character of discriminant disc(k) otherwise.
 */
struct CyclotomicContext {
  RealQuadraticField k;
  std::vector<int> galois;  // sorted residues mod 120

  bool contains(int a) const { return std::binary_search(galois.begin(), galois.end(), a); }
};

inline constexpr long long kCycloModulus = 120;

inline CyclotomicContext make_context(const RealQuadraticField& k) {
  CyclotomicContext ctx{k, {}};
  bool disjoint = kCycloModulus % k.disc != 0;
  for (int a = 1; a < kCycloModulus; ++a) {
    if (std::gcd<long long>(a, kCycloModulus) != 1) continue;
    if (disjoint || detail::jacobi(k.disc, a) == 1) ctx.galois.push_back(a);
  }
  return ctx;
}

inline CyclotomicContext make_context(long long d) { return make_context(make_field(d)); }

/**
 * Frobenius of an unramified prime in Gal(k(zeta_120)/k): the residue field
 * has p^f elements, so the arithmetic Frobenius acts on roots of unity as
 * raising to that power. Primes meeting 120 or disc(k) are rejected.
 */
inline int frobenius(const CyclotomicContext& ctx, const PrimeIdeal& P) {
  if (!detail::is_prime(P.p))
    throw error(errc::bad_prime, std::to_string(P.p) + " is not prime");
  if (std::gcd(P.p, kCycloModulus) != 1)
    throw error(errc::bad_prime, std::to_string(P.p) + " divides the cyclotomic level");
  SplitType t = split_prime(ctx.k, P.p);
  if (t == SplitType::Ramified)
    throw error(errc::bad_prime, std::to_string(P.p) + " ramifies in the field");
  int expected_f = t == SplitType::Split ? 1 : 2;
  if (P.f != expected_f)
    throw error(errc::invalid_argument,
                "residue degree of " + prime_ideal_name(P) + " should be " +
                    std::to_string(expected_f));
  if (P.conjugate_index != 0 && (t != SplitType::Split || P.conjugate_index != 1))
    throw error(errc::invalid_argument, "bad conjugate index on " + prime_ideal_name(P));
  long long r = P.p % kCycloModulus;
  if (P.f == 2) r = r * r % kCycloModulus;
  return static_cast<int>(r);
}

/**
 * The index-2 subgroups of the Galois group, i.e. the quadratic extensions
 * of k inside k(zeta_120). Computed as kernels of the nonzero functionals on
 * G / G^2. Each subgroup is returned sorted; the list is sorted as well.
 */
inline std::vector<std::vector<int>> quadratic_subgroups(const CyclotomicContext& ctx) {
  const auto& g = ctx.galois;
  auto mul = [](int a, int b) { return int(1LL * a * b % kCycloModulus); };

  std::set<int> squares;
  for (int a : g) squares.insert(mul(a, a));

  // Greedy basis of the elementary abelian quotient G / G^2.
  std::set<int> span = squares;
  std::vector<int> basis;
  for (int a : g) {
    if (span.count(a)) continue;
    basis.push_back(a);
    std::set<int> grown = span;
    for (int s : span) grown.insert(mul(s, a));
    span.swap(grown);
  }

  size_t r = basis.size();
  // Coordinates of a mod G^2 with respect to the basis, by exhausting the
  // 2^r products (the quotient is tiny).
  auto coords = [&](int a) {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      int prod = 1;
      for (size_t i = 0; i < r; ++i)
        if (mask & (1u << i)) prod = mul(prod, basis[i]);
      // a and prod agree mod G^2 iff a * prod^-1 is a square; in an
      // elementary abelian quotient prod^-1 = prod.
      if (squares.count(mul(a, prod))) return mask;
    }
    throw error(errc::inconsistent, "element escapes the square-class basis");
  };

  std::vector<std::vector<int>> out;
  for (unsigned functional = 1; functional < (1u << r); ++functional) {
    std::vector<int> h;
    for (int a : g) {
      unsigned c = coords(a) & functional;
      int parity = 0;
      while (c) {
        parity ^= c & 1;
        c >>= 1;
      }
      if (parity == 0) h.push_back(a);
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Subgroup of the Galois group acting trivially on zeta_m, i.e. fixing
// k(zeta_m). Requires m | 120.
inline std::vector<int> cyclotomic_handle(const CyclotomicContext& ctx, long long m) {
  if (m < 1 || kCycloModulus % m != 0)
    throw error(errc::invalid_argument, "level must divide 120");
  std::vector<int> h;
  for (int a : ctx.galois)
    if (a % m == 1) h.push_back(a);
  return h;
}

// True iff P splits in the quadratic extension of k cut out by the index-2
// subgroup H, i.e. iff its Frobenius lands in H.
inline bool splits_in(const CyclotomicContext& ctx, const std::vector<int>& subgroup,
                      const PrimeIdeal& P) {
  return std::binary_search(subgroup.begin(), subgroup.end(), frobenius(ctx, P));
}

/**
 * Torsion levels m for which k(zeta_m)/k is quadratic, so that m-torsion in
 * a unit group is obstructed exactly by a ramified prime that stays
 * non-split in k(zeta_m). Always {3, 4, 6}; levels with phi(m) = 4 join in
 * when k is the real quadratic subfield of Q(zeta_m).
 */
inline std::vector<long long> quadratic_torsion_levels(const CyclotomicContext& ctx) {
  std::vector<long long> out;
  for (long long m : torsion_orders())
    if (ctx.galois.size() == 2 * cyclotomic_handle(ctx, m).size()) out.push_back(m);
  return out;
}

// Ramification data: the even-cardinality set of finite primes of k at which
// the quaternion algebra ramifies (both infinite places stay split).
struct RamificationData {
  RealQuadraticField k;
  std::vector<PrimeIdeal> primes;  // sorted, distinct

  friend bool operator==(const RamificationData&, const RamificationData&) = default;
};

inline std::string class_tag(const RamificationData& data) {
  std::ostringstream os;
  os << "d=" << data.k.d << " S={";
  for (size_t i = 0; i < data.primes.size(); ++i)
    os << (i ? "," : "") << prime_ideal_name(data.primes[i]);
  os << "}";
  return os.str();
}

inline void validate_ramification_data(const CyclotomicContext& ctx,
                                       const RamificationData& data) {
  if (data.k != ctx.k) throw error(errc::invalid_argument, "field mismatch");
  if (data.primes.size() % 2 != 0)
    throw error(errc::invariant_violation, "ramification set has odd cardinality");
  if (!std::is_sorted(data.primes.begin(), data.primes.end()))
    throw error(errc::invariant_violation, "ramification set not sorted");
  if (std::adjacent_find(data.primes.begin(), data.primes.end()) != data.primes.end())
    throw error(errc::invariant_violation, "ramification set has a repeated prime");
  for (const auto& P : data.primes) frobenius(ctx, P);  // validates each prime
}

struct TorsionWitness {
  long long level = 0;
  bool split_found = false;
  PrimeIdeal witness;  // meaningful only when split_found
};

struct TorsionReport {
  bool torsion_free = false;
  std::vector<TorsionWitness> levels;
};

/**
 * A unit group of the algebra ramified exactly at S is torsion free iff for
 * every quadratic torsion level m some P in S splits in k(zeta_m)/k (a split
 * ramified prime blocks the embedding of Q(zeta_m)). The split test here is
 * the direct congruence p^f = 1 mod m on the residue field size.
 */
inline TorsionReport verify_torsion_free(const CyclotomicContext& ctx,
                                         const RamificationData& data) {
  validate_ramification_data(ctx, data);
  TorsionReport report;
  report.torsion_free = true;
  for (long long m : quadratic_torsion_levels(ctx)) {
    TorsionWitness w;
    w.level = m;
    for (const auto& P : data.primes) {
      long long size = P.p % m;
      if (P.f == 2) size = size * size % m;
      if (size % m == 1) {
        w.split_found = true;
        w.witness = P;
        break;
      }
    }
    if (!w.split_found) report.torsion_free = false;
    report.levels.push_back(w);
  }
  return report;
}

namespace detail {

// Smallest-first stream of the usable prime ideals: p prime with
// gcd(p, 120 disc) = 1, split primes contributing conjugate indices 0 and 1.
inline std::vector<PrimeIdeal> usable_ideals(const CyclotomicContext& ctx, long long p_bound) {
  std::vector<PrimeIdeal> out;
  for (long long p = 2; p <= p_bound; ++p) {
    if (!is_prime(p)) continue;
    if (std::gcd(p, kCycloModulus) != 1 || ctx.k.disc % p == 0) continue;
    if (split_prime(ctx.k, p) == SplitType::Split) {
      out.push_back({p, 1, 0});
      out.push_back({p, 1, 1});
    } else {
      out.push_back({p, 2, 0});
    }
  }
  return out;
}

}  // namespace detail

/**
 * Builds a torsion-free ramification set: for each quadratic torsion level,
 * scan primes upward (conjugate index 0 first) until one splits in
 * k(zeta_m)/k, take the union of the witnesses, and pad with the smallest
 * unused ideal if the count comes out odd.
 */
inline RamificationData construct_S(const CyclotomicContext& ctx) {
  std::set<PrimeIdeal> chosen;
  for (long long m : quadratic_torsion_levels(ctx)) {
    bool found = false;
    for (long long p = 2; !found; ++p) {
      if (!detail::is_prime(p)) continue;
      if (std::gcd(p, kCycloModulus) != 1 || ctx.k.disc % p == 0) continue;
      int f = split_prime(ctx.k, p) == SplitType::Split ? 1 : 2;
      long long size = p % m;
      if (f == 2) size = size * size % m;
      if (size % m == 1) {
        chosen.insert({p, f, 0});
        found = true;
      }
      if (p > 1000000)
        throw error(errc::scan_exhausted, "no split prime found for level " + std::to_string(m));
    }
  }
  if (chosen.size() % 2 != 0) {
    for (const auto& P : detail::usable_ideals(ctx, 1000)) {
      if (!chosen.count(P)) {
        chosen.insert(P);
        break;
      }
    }
  }
  RamificationData data{ctx.k, {chosen.begin(), chosen.end()}};
  validate_ramification_data(ctx, data);
  return data;
}

/**
 * Torsion-free ramification classes with primes up to p_bound: the core set
 * from construct_S, then the core enlarged by each pair of further usable
 * ideals (pairs keep the cardinality even; enlarging never re-introduces
 * torsion). max_classes = 0 means no cap.
 */
inline std::vector<RamificationData> enumerate_classes(const CyclotomicContext& ctx,
                                                       long long p_bound,
                                                       size_t max_classes = 0) {
  RamificationData core = construct_S(ctx);
  std::vector<RamificationData> out{core};
  std::vector<PrimeIdeal> extras;
  for (const auto& P : detail::usable_ideals(ctx, p_bound))
    if (std::find(core.primes.begin(), core.primes.end(), P) == core.primes.end())
      extras.push_back(P);
  for (size_t i = 0; i < extras.size(); ++i) {
    for (size_t j = i + 1; j < extras.size(); ++j) {
      if (max_classes && out.size() >= max_classes) return out;
      RamificationData cls = core;
      cls.primes.push_back(extras[i]);
      cls.primes.push_back(extras[j]);
      std::sort(cls.primes.begin(), cls.primes.end());
      out.push_back(std::move(cls));
    }
  }
  return out;
}

}  // namespace qed::quat
