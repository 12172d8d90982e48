#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qed/errors.hpp"

namespace qed {

enum class KodairaDim { MinusInf, Zero, One, Two };

inline const char* kodaira_dim_name(KodairaDim k) {
  switch (k) {
    case KodairaDim::MinusInf: return "-inf";
    case KodairaDim::Zero:     return "0";
    case KodairaDim::One:      return "1";
    case KodairaDim::Two:      return "2";
  }
  return "?";
}

enum class SurfaceClass {
  Ruled,
  Torus,
  K3,
  Enriques,
  Hyperelliptic,
  KodairaPrimary,
  KodairaSecondary,
  ProperlyElliptic,
  GeneralType,
  PolydiskQuotient,
};

inline const char* surface_class_name(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Ruled:            return "Ruled";
    case SurfaceClass::Torus:            return "Torus";
    case SurfaceClass::K3:               return "K3";
    case SurfaceClass::Enriques:         return "Enriques";
    case SurfaceClass::Hyperelliptic:    return "Hyperelliptic";
    case SurfaceClass::KodairaPrimary:   return "KodairaPrimary";
    case SurfaceClass::KodairaSecondary: return "KodairaSecondary";
    case SurfaceClass::ProperlyElliptic: return "ProperlyElliptic";
    case SurfaceClass::GeneralType:      return "GeneralType";
    case SurfaceClass::PolydiskQuotient: return "PolydiskQuotient";
  }
  return "?";
}

inline KodairaDim class_kodaira_dim(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Ruled:
      return KodairaDim::MinusInf;
    case SurfaceClass::Torus:
    case SurfaceClass::K3:
    case SurfaceClass::Enriques:
    case SurfaceClass::Hyperelliptic:
    case SurfaceClass::KodairaPrimary:
    case SurfaceClass::KodairaSecondary:
      return KodairaDim::Zero;
    case SurfaceClass::ProperlyElliptic:
      return KodairaDim::One;
    case SurfaceClass::GeneralType:
    case SurfaceClass::PolydiskQuotient:
      return KodairaDim::Two;
  }
  return KodairaDim::Two;
}

// Rational double point marks: A(n>=1), D(n>=4), E(6..8). Also used as
// fiber-type marks on a fibration.
struct RdpType {
  char kind = 'A';
  int n = 1;

  friend auto operator<=>(const RdpType&, const RdpType&) = default;
};

inline bool rdp_type_valid(const RdpType& t) {
  switch (t.kind) {
    case 'A': return t.n >= 1;
    case 'D': return t.n >= 4;
    case 'E': return t.n >= 6 && t.n <= 8;
    default:  return false;
  }
}

inline std::string rdp_type_name(const RdpType& t) { return t.kind + std::to_string(t.n); }

struct FibrationData {
  long long base_genus = 0;
  std::vector<long long> multiplicities;  // kept sorted, entries >= 2
  bool has_section = false;
  std::vector<RdpType> singular_fibers;   // kept sorted
  long long euler_contribution = 0;

  friend bool operator==(const FibrationData&, const FibrationData&) = default;
};

/**
 * Numerical model of a compact complex surface: the deformation-relevant
 * invariants plus the coarse class tag. `singularities` nonempty marks a
 * model with rational double points; everything else refers to that model.
 * `polydisk_class` carries the canonical ramification-class string.
 */
struct SurfaceDescriptor {
  KodairaDim kod = KodairaDim::Zero;
  long long b1 = 0, q = 0, pg = 0, k2 = 0, e = 0;
  bool minimal = true;
  SurfaceClass class_tag = SurfaceClass::K3;
  std::optional<FibrationData> fibration;
  std::vector<RdpType> singularities;     // kept sorted
  std::optional<std::string> polydisk_class;

  friend bool operator==(const SurfaceDescriptor&, const SurfaceDescriptor&) = default;

  bool smooth() const { return singularities.empty(); }
};

inline long long chi(const SurfaceDescriptor& d) { return 1 - d.q + d.pg; }

inline std::vector<std::string> descriptor_violations(const SurfaceDescriptor& d) {
  std::vector<std::string> v;
  if (d.b1 < 0 || d.q < 0 || d.pg < 0) v.push_back("negative-invariant");
  if (d.b1 != 2 * d.q && d.b1 != 2 * d.q - 1) v.push_back("b1-q-mismatch");
  if (d.fibration) {
    const auto& f = *d.fibration;
    if (f.base_genus < 0) v.push_back("negative-base-genus");
    for (long long m : f.multiplicities)
      if (m < 2) v.push_back("multiplicity");
    if (!std::is_sorted(f.multiplicities.begin(), f.multiplicities.end()))
      v.push_back("multiplicities-unsorted");
    for (const auto& t : f.singular_fibers)
      if (!rdp_type_valid(t)) v.push_back("fiber-mark");
  }
  for (const auto& t : d.singularities)
    if (!rdp_type_valid(t)) v.push_back("rdp-type");
  if (!std::is_sorted(d.singularities.begin(), d.singularities.end()))
    v.push_back("singularities-unsorted");
  if (class_kodaira_dim(d.class_tag) != d.kod) v.push_back("class-kod");
  if (d.class_tag == SurfaceClass::KodairaPrimary && d.b1 != 3) v.push_back("kodaira-b1");
  if (d.class_tag == SurfaceClass::KodairaSecondary && d.b1 != 1) v.push_back("kodaira-b1");
  if (d.class_tag == SurfaceClass::Ruled && d.pg != 0) v.push_back("ruled-pg");
  if (d.minimal && d.smooth()) {
    if (12 * chi(d) != d.k2 + d.e) v.push_back("noether");
    if (d.class_tag == SurfaceClass::PolydiskQuotient && d.e != 4 * (1 + d.pg))
      v.push_back("polydisk-euler");
  }
  if (d.class_tag == SurfaceClass::PolydiskQuotient && d.b1 != 0) v.push_back("polydisk-b1");
  return v;
}

inline SurfaceDescriptor make_descriptor(SurfaceDescriptor d) {
  if (d.fibration)
    std::sort(d.fibration->multiplicities.begin(), d.fibration->multiplicities.end());
  std::sort(d.singularities.begin(), d.singularities.end());
  auto v = descriptor_violations(d);
  if (!v.empty()) throw error(errc::invariant_violation, v.front());
  return d;
}

// True iff the Noether relation 12 chi = K^2 + e holds.
inline bool check_noether(const SurfaceDescriptor& d) {
  if (!d.minimal) throw error(errc::non_minimal_input, "check_noether needs a minimal model");
  return 12 * chi(d) == d.k2 + d.e;
}

// Geometric genus of a fake-quadric-free ball-quotient-type surface read off
// from its Euler number, p_g = e/12 - 1.
inline long long exceptional_pg(long long e) {
  if (e <= 0) throw error(errc::invalid_argument, "euler number must be positive");
  if (e % 12 != 0) throw error(errc::not_divisible, "euler number not divisible by 12");
  return e / 12 - 1;
}

struct PolydiskRelations {
  long long e = 0, b1 = 0, k2 = 0;

  friend bool operator==(const PolydiskRelations&, const PolydiskRelations&) = default;
};

// Invariant package of a smooth minimal quotient of the bidisk: vanishing
// first Betti number, e determined by p_g, and K^2 forced by Noether.
inline PolydiskRelations polydisk_relations(long long pg) {
  if (pg < 0) throw error(errc::invalid_argument, "pg must be nonnegative");
  return {4 * (1 + pg), 0, 8 * (1 + pg)};
}

// Minimal surfaces of Kodaira dimension zero are pinned down by (b1, q, pg).
inline SurfaceClass classify_kod0(const SurfaceDescriptor& d) {
  if (d.kod != KodairaDim::Zero)
    throw error(errc::wrong_kodaira_dim, "classify_kod0 expects kodaira dimension 0");
  if (!d.minimal) throw error(errc::non_minimal_input, "classify_kod0 expects a minimal model");
  auto fail = [&] {
    throw error(errc::inconsistent, "invariants (b1=" + std::to_string(d.b1) +
                                        ", q=" + std::to_string(d.q) +
                                        ", pg=" + std::to_string(d.pg) +
                                        ") match no minimal class");
  };
  switch (d.b1) {
    case 4:
      if (d.q == 2 && d.pg == 1) return SurfaceClass::Torus;
      fail();
      break;
    case 3:
      if (d.q == 2 && d.pg == 1) return SurfaceClass::KodairaPrimary;
      fail();
      break;
    case 2:
      if (d.q == 1 && d.pg == 0) return SurfaceClass::Hyperelliptic;
      fail();
      break;
    case 1:
      if (d.q == 1 && d.pg == 0) return SurfaceClass::KodairaSecondary;
      fail();
      break;
    case 0:
      if (d.q == 0 && d.pg == 1) return SurfaceClass::K3;
      if (d.q == 0 && d.pg == 0) return SurfaceClass::Enriques;
      fail();
      break;
    default:
      fail();
  }
  return SurfaceClass::K3;  // unreachable
}

inline SurfaceDescriptor blow_up(const SurfaceDescriptor& d) {
  SurfaceDescriptor out = d;
  out.e = d.e + 1;
  out.k2 = d.k2 - 1;
  out.minimal = false;
  return out;
}

inline SurfaceDescriptor blow_down(const SurfaceDescriptor& d, bool minimal_after = false) {
  if (d.minimal) throw error(errc::invalid_argument, "blow_down of a minimal model");
  SurfaceDescriptor out = d;
  out.e = d.e - 1;
  out.k2 = d.k2 + 1;
  out.minimal = minimal_after;
  return out;
}

}  // namespace qed
