#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qed/errors.hpp"

namespace qed::orb {

// Closed orientable 2-orbifold datum: base genus plus cone point orders.
struct OrbifoldSignature {
  long long genus = 0;
  std::vector<long long> cone_orders;  // sorted, each >= 2

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

inline OrbifoldSignature make_signature(long long genus, std::vector<long long> cone_orders) {
  if (genus < 0) throw error(errc::invalid_argument, "genus must be nonnegative");
  for (long long m : cone_orders)
    if (m < 2) throw error(errc::invalid_argument, "cone orders must be at least 2");
  std::sort(cone_orders.begin(), cone_orders.end());
  return {genus, std::move(cone_orders)};
}

inline std::string signature_name(const OrbifoldSignature& sig) {
  std::string s = "(" + std::to_string(sig.genus) + "; [";
  for (size_t i = 0; i < sig.cone_orders.size(); ++i)
    s += (i ? "," : "") + std::to_string(sig.cone_orders[i]);
  return s + "])";
}

// Spheres with at most two cone points: the orbifold group is finite cyclic
// and the quotient machinery does not apply.
inline bool exceptional_case(const OrbifoldSignature& sig) {
  return sig.genus == 0 && sig.cone_orders.size() <= 2;
}

// Order of the (cyclic) orbifold group in the exceptional cases: trivial with
// up to one cone point, gcd of the two orders otherwise.
inline long long exceptional_order(const OrbifoldSignature& sig) {
  if (!exceptional_case(sig))
    throw error(errc::invalid_argument, "signature is not exceptional");
  if (sig.cone_orders.size() < 2) return 1;
  return std::gcd(sig.cone_orders[0], sig.cone_orders[1]);
}

// Classification of the degenerate orbifold groups over genus 0: no cone
// point or one cone point gives the trivial group, two cone points the
// cyclic group of order gcd (reported as trivial when the orders are
// coprime); everything else has an infinite-or-interesting orbifold group.
enum class ExceptionalKind { NonExceptional, TrivialGroup, CyclicOfOrder };

struct ExceptionalClass {
  ExceptionalKind kind = ExceptionalKind::NonExceptional;
  long long order = 0;  // meaningful for CyclicOfOrder

  friend bool operator==(const ExceptionalClass&, const ExceptionalClass&) = default;
};

inline ExceptionalClass classify_exceptional(const OrbifoldSignature& sig) {
  if (!exceptional_case(sig)) return {ExceptionalKind::NonExceptional, 0};
  const long long n = exceptional_order(sig);
  if (n <= 1) return {ExceptionalKind::TrivialGroup, 1};
  return {ExceptionalKind::CyclicOfOrder, n};
}

inline std::string exceptional_class_name(const ExceptionalClass& c) {
  switch (c.kind) {
    case ExceptionalKind::NonExceptional: return "NonExceptional";
    case ExceptionalKind::TrivialGroup:   return "TrivialGroup";
    case ExceptionalKind::CyclicOfOrder:  return "CyclicOfOrder(" + std::to_string(c.order) + ")";
  }
  return "?";
}

inline long long signature_lcm(const OrbifoldSignature& sig) {
  long long l = 1;
  for (long long m : sig.cone_orders) l = std::lcm(l, m);
  return l;
}

inline long long signature_gcd(const OrbifoldSignature& sig) {
  long long g = 0;
  for (long long m : sig.cone_orders) g = std::gcd(g, m);
  return g;
}

// Divide every cone order by the common gcd and drop the resulting trivial
// cone points; the base genus is unchanged.
inline OrbifoldSignature coprime_reduction(const OrbifoldSignature& sig) {
  long long g = signature_gcd(sig);
  OrbifoldSignature out{sig.genus, {}};
  if (g == 0) return out;
  for (long long m : sig.cone_orders)
    if (m / g > 1) out.cone_orders.push_back(m / g);
  return out;
}

/**
 * Finite presentation of the orbifold fundamental group. Generators are
 * numbered from 1: handle generators a_1, b_1, ..., a_g, b_g first, then the
 * cone generators x_1, ..., x_r. Relators are words in signed generator
 * indices (negative = inverse): one power word per cone point and the long
 * relator prod [a_i, b_i] prod x_j.
 */
struct OrbifoldPresentation {
  long long genus = 0;
  long long num_generators = 0;
  std::vector<std::vector<long long>> relators;
};

inline OrbifoldPresentation presentation(const OrbifoldSignature& sig) {
  long long g = sig.genus;
  long long r = static_cast<long long>(sig.cone_orders.size());
  OrbifoldPresentation p{g, 2 * g + r, {}};
  for (long long j = 0; j < r; ++j)
    p.relators.emplace_back(sig.cone_orders[j], 2 * g + 1 + j);
  std::vector<long long> word;
  for (long long i = 1; i <= g; ++i) {
    word.push_back(2 * i - 1);
    word.push_back(2 * i);
    word.push_back(-(2 * i - 1));
    word.push_back(-(2 * i));
  }
  for (long long j = 0; j < r; ++j) word.push_back(2 * g + 1 + j);
  p.relators.push_back(std::move(word));
  return p;
}

}  // namespace qed::orb
