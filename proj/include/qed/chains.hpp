#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qed/certificate.hpp"
#include "qed/errors.hpp"
#include "qed/invariants.hpp"
#include "qed/orbifold.hpp"
#include "qed/quotient_search.hpp"

namespace qed {

// ---------------------------------------------------------------------------
// Standard models used as chain targets
// ---------------------------------------------------------------------------

namespace chain_detail {

inline std::vector<RdpType> nodes(long long count) {
  return std::vector<RdpType>(static_cast<size_t>(count), RdpType{'A', 1});
}

inline long long chi_budget(const SurfaceDescriptor& d) {
  long long s = 0;
  for (const auto& t : d.singularities) s += t.n;
  return d.k2 + d.e + s;
}

}  // namespace chain_detail

// C_g x P1: the minimal ruled surface over a genus-g curve.
inline SurfaceDescriptor ruled_product(long long genus) {
  if (genus < 0) throw error(errc::invalid_argument, "genus must be nonnegative");
  SurfaceDescriptor d;
  d.kod = KodairaDim::MinusInf;
  d.class_tag = SurfaceClass::Ruled;
  d.q = genus;
  d.b1 = 2 * genus;
  d.pg = 0;
  d.k2 = 8 - 8 * genus;
  d.e = 4 - 4 * genus;
  d.minimal = true;
  return make_descriptor(d);
}

// (C_g x P1) / (iota x j) for involutions with isolated fixed points: a
// rational model with 4g+4 nodes, Euler number 4 and K^2 = 4 - 4g.
inline SurfaceDescriptor ruled_quotient_model(long long genus) {
  if (genus < 1) throw error(errc::invalid_argument, "genus must be at least 1");
  SurfaceDescriptor d;
  d.kod = KodairaDim::MinusInf;
  d.class_tag = SurfaceClass::Ruled;
  d.q = 0;
  d.b1 = 0;
  d.pg = 0;
  d.k2 = 4 - 4 * genus;
  d.e = 4;
  d.minimal = false;
  d.singularities = chain_detail::nodes(4 * genus + 4);
  return make_descriptor(d);
}

inline SurfaceDescriptor torus_descriptor() {
  SurfaceDescriptor d;
  d.kod = KodairaDim::Zero;
  d.class_tag = SurfaceClass::Torus;
  d.b1 = 4;
  d.q = 2;
  d.pg = 1;
  d.k2 = 0;
  d.e = 0;
  return make_descriptor(d);
}

inline SurfaceDescriptor k3_descriptor() {
  SurfaceDescriptor d;
  d.kod = KodairaDim::Zero;
  d.class_tag = SurfaceClass::K3;
  d.b1 = 0;
  d.q = 0;
  d.pg = 1;
  d.k2 = 0;
  d.e = 24;
  return make_descriptor(d);
}

// Quotient of a torus by the sign involution: K3 class, sixteen nodes.
inline SurfaceDescriptor kummer_model() {
  SurfaceDescriptor d;
  d.kod = KodairaDim::Zero;
  d.class_tag = SurfaceClass::K3;
  d.b1 = 0;
  d.q = 0;
  d.pg = 1;
  d.k2 = 0;
  d.e = 8;
  d.minimal = false;
  d.singularities = chain_detail::nodes(16);
  return make_descriptor(d);
}

inline SurfaceDescriptor enriques_descriptor() {
  SurfaceDescriptor d;
  d.kod = KodairaDim::Zero;
  d.class_tag = SurfaceClass::Enriques;
  d.b1 = 0;
  d.q = 0;
  d.pg = 0;
  d.k2 = 0;
  d.e = 12;
  return make_descriptor(d);
}

inline SurfaceDescriptor hyperelliptic_descriptor() {
  SurfaceDescriptor d;
  d.kod = KodairaDim::Zero;
  d.class_tag = SurfaceClass::Hyperelliptic;
  d.b1 = 2;
  d.q = 1;
  d.pg = 0;
  d.k2 = 0;
  d.e = 0;
  return make_descriptor(d);
}

inline SurfaceDescriptor kodaira_primary_descriptor() {
  SurfaceDescriptor d;
  d.kod = KodairaDim::Zero;
  d.class_tag = SurfaceClass::KodairaPrimary;
  d.b1 = 3;
  d.q = 2;
  d.pg = 1;
  d.k2 = 0;
  d.e = 0;
  return make_descriptor(d);
}

inline SurfaceDescriptor kodaira_secondary_descriptor() {
  SurfaceDescriptor d;
  d.kod = KodairaDim::Zero;
  d.class_tag = SurfaceClass::KodairaSecondary;
  d.b1 = 1;
  d.q = 1;
  d.pg = 0;
  d.k2 = 0;
  d.e = 0;
  return make_descriptor(d);
}

// Elliptic bundle over a genus-g curve (Euler number zero, no multiple
// fibers, q = g + 1); with a section it is the product B_g x F.
inline SurfaceDescriptor elliptic_bundle(long long base_genus, bool has_section) {
  if (base_genus < 2)
    throw error(errc::invalid_argument, "base genus must be at least 2");
  SurfaceDescriptor d;
  d.kod = KodairaDim::One;
  d.class_tag = SurfaceClass::ProperlyElliptic;
  d.q = base_genus + 1;
  d.b1 = 2 * d.q;
  d.pg = base_genus;
  d.k2 = 0;
  d.e = 0;
  d.minimal = true;
  d.fibration = FibrationData{base_genus, {}, has_section, {}, 0};
  return make_descriptor(d);
}

inline SurfaceDescriptor elliptic_product(long long base_genus) {
  return elliptic_bundle(base_genus, true);
}

// Resolution of (B_g x F)/(iota x (-1)) with g = q + pg: the standard smooth
// minimal elliptic surface with invariants (q, pg), no multiple fibers and
// 2 chi fibers with affine D4 dual graph.
inline SurfaceDescriptor standard_elliptic(long long q, long long pg) {
  if (q < 0 || pg < q)
    throw error(errc::invalid_argument, "need q >= 0 and pg >= q");
  if (q == 0 && pg < 2)
    throw error(errc::invalid_argument, "kodaira dimension 1 over P1 needs pg >= 2");
  const long long cx = pg - q + 1;
  SurfaceDescriptor d;
  d.kod = KodairaDim::One;
  d.class_tag = SurfaceClass::ProperlyElliptic;
  d.q = q;
  d.b1 = 2 * q;
  d.pg = pg;
  d.k2 = 0;
  d.e = 12 * cx;
  d.minimal = true;
  d.fibration = FibrationData{
      q, {}, false,
      std::vector<RdpType>(static_cast<size_t>(2 * cx), RdpType{'D', 4}), 12 * cx};
  return make_descriptor(d);
}

// The same surface with its affine-D4 fibers contracted: 8 chi nodes, Euler
// number 4 chi, and a multiplicity-2 fiber through each contracted quadruple.
inline SurfaceDescriptor contracted_elliptic(long long q, long long pg) {
  if (q < 0 || pg < q)
    throw error(errc::invalid_argument, "need q >= 0 and pg >= q");
  if (q == 0 && pg < 2)
    throw error(errc::invalid_argument, "kodaira dimension 1 over P1 needs pg >= 2");
  const long long cx = pg - q + 1;
  SurfaceDescriptor d;
  d.kod = KodairaDim::One;
  d.class_tag = SurfaceClass::ProperlyElliptic;
  d.q = q;
  d.b1 = 2 * q;
  d.pg = pg;
  d.k2 = 0;
  d.e = 4 * cx;
  d.minimal = false;
  d.singularities = chain_detail::nodes(8 * cx);
  d.fibration = FibrationData{
      q, std::vector<long long>(static_cast<size_t>(2 * cx), 2), false, {}, 4 * cx};
  return make_descriptor(d);
}

// General smooth minimal elliptic surface of Kodaira dimension one: base
// genus, multiple-fiber multiplicities and chi(O) determine the numerics.
inline SurfaceDescriptor elliptic_surface(long long base_genus,
                                          std::vector<long long> multiplicities,
                                          long long chi_value,
                                          bool has_section = false) {
  if (base_genus < 0 || chi_value < 0)
    throw error(errc::invalid_argument, "base genus and chi must be nonnegative");
  SurfaceDescriptor d;
  d.kod = KodairaDim::One;
  d.class_tag = SurfaceClass::ProperlyElliptic;
  d.e = 12 * chi_value;
  d.k2 = 0;
  d.q = base_genus + (d.e == 0 ? 1 : 0);
  d.b1 = 2 * d.q;
  d.pg = chi_value - 1 + d.q;
  d.minimal = true;
  d.fibration = FibrationData{base_genus, std::move(multiplicities), has_section, {}, d.e};
  return make_descriptor(d);
}

// Reference endpoints of the three reduction routes.
inline SurfaceDescriptor ref_minus_infinity() { return ruled_product(0); }  // P1 x P1
inline SurfaceDescriptor ref_zero() { return torus_descriptor(); }          // E x E
inline SurfaceDescriptor ref_one() { return elliptic_product(2); }          // B_2 x F

// ---------------------------------------------------------------------------
// Chain constructors
// ---------------------------------------------------------------------------

namespace chain_detail {

struct Builder {
  Certificate cert;

  explicit Builder(const SurfaceDescriptor& start) {
    cert.first = start;
    cert.last = start;
  }

  void push(const QedMove& move, const SurfaceDescriptor& to) {
    cert.steps.push_back({cert.last, move, to});
    cert.last = to;
  }
};

[[noreturn]] inline void inconsistent(const std::string& what) {
  throw error(errc::invariant_violation, "inconsistent invariants: " + what);
}

}  // namespace chain_detail

/**
 * Reduce a descriptor of Kodaira dimension -infinity to P1 x P1.  Rational
 * models take one minimal-model step; an irregular ruled surface passes to
 * the minimal ruled model C_g x P1, deforms C_g to a hyperelliptic curve,
 * divides by the product of the hyperelliptic involution of C_g and an
 * involution of P1, and resolves the resulting nodal rational model.
 */
inline Certificate chain_kod_minus_infty(const SurfaceDescriptor& d) {
  if (d.kod != KodairaDim::MinusInf)
    throw error(errc::wrong_kodaira_dim, "chain expects kodaira dimension -infinity");
  if (d.b1 % 2 != 0) chain_detail::inconsistent("ruled surface with odd b1");

  chain_detail::Builder b(d);
  const auto ref = ref_minus_infinity();
  if (d == ref) return b.cert;

  const char* resolution = d.smooth() ? "minimal-model" : "Noether";
  if (chain_detail::chi_budget(d) != 12 * (1 - d.q))
    chain_detail::inconsistent("ruled surface invariants off the 12-chi budget");

  if (d.q == 0) {
    b.push(birational_move(BirationalKind::MinimalModel, resolution), ref);
    return b.cert;
  }

  const long long g = d.q;
  const auto product = ruled_product(g);
  b.push(birational_move(BirationalKind::MinimalModel, resolution), product);
  b.push(deformation_move("curves-genus-g"), product);
  b.push(quotient_move(2, "Z/2", "iota-j-quotient"), ruled_quotient_model(g));
  b.push(birational_move(BirationalKind::MinimalModel, "Noether"), ref);
  return b.cert;
}

/**
 * Reduce a Kahler descriptor of Kodaira dimension zero to the product torus
 * E x E: tori deform there directly, a K3 deforms to the Kummer model whose
 * torus double cover is E x E, an Enriques surface first passes to its K3
 * cover, and a hyperelliptic surface to its torus cover.
 */
inline Certificate chain_kod0(const SurfaceDescriptor& d) {
  if (d.kod != KodairaDim::Zero)
    throw error(errc::wrong_kodaira_dim, "chain expects kodaira dimension 0");
  if (d.class_tag == SurfaceClass::KodairaPrimary ||
      d.class_tag == SurfaceClass::KodairaSecondary)
    throw error(errc::non_kahler_input, "Kodaira surfaces are not Kahler");
  if (d.b1 % 2 != 0)
    throw error(errc::non_kahler_input, "odd first Betti number is not Kahler");

  chain_detail::Builder b(d);
  const auto ref = ref_zero();
  if (d == ref) return b.cert;

  SurfaceDescriptor minimal_form;
  switch (d.class_tag) {
    case SurfaceClass::Torus:         minimal_form = torus_descriptor(); break;
    case SurfaceClass::K3:            minimal_form = k3_descriptor(); break;
    case SurfaceClass::Enriques:      minimal_form = enriques_descriptor(); break;
    case SurfaceClass::Hyperelliptic: minimal_form = hyperelliptic_descriptor(); break;
    default:
      chain_detail::inconsistent("unrecognized kodaira-dimension-0 class");
  }
  if (d.q != minimal_form.q || d.pg != minimal_form.pg || d.b1 != minimal_form.b1)
    chain_detail::inconsistent("invariants do not match the class tag");
  if (chain_detail::chi_budget(d) != chain_detail::chi_budget(minimal_form))
    chain_detail::inconsistent("invariants off the 12-chi budget");
  if (d.minimal && d.smooth() && (d.k2 != minimal_form.k2 || d.e != minimal_form.e))
    chain_detail::inconsistent("minimal model must carry the class numerics");

  SurfaceDescriptor cur = d;
  if (!cur.minimal || !cur.smooth()) {
    b.push(birational_move(BirationalKind::MinimalModel,
                           cur.smooth() ? "minimal-model" : "Noether"),
           minimal_form);
    cur = minimal_form;
  }

  auto k3_tail = [&] {
    b.push(deformation_move("K3-family"), k3_descriptor());
    b.push(deformation_move("K3-family"), kummer_model());
    b.push(cover_move(2, "±1", "Kummer"), ref);
  };

  switch (cur.class_tag) {
    case SurfaceClass::Torus:
      if (!(cur == ref)) b.push(deformation_move("tori"), ref);
      break;
    case SurfaceClass::K3:
      k3_tail();
      break;
    case SurfaceClass::Enriques:
      b.push(cover_move(2, "Z/2", "Enriques-cover"), k3_descriptor());
      k3_tail();
      break;
    case SurfaceClass::Hyperelliptic:
      b.push(cover_move(2, "Z/2", "Hyperelliptic-cover"), torus_descriptor());
      b.push(deformation_move("tori"), ref);
      break;
    default:
      break;  // unreachable: tags checked above
  }
  return b.cert;
}

/**
 * Normalize a Kodaira-surface descriptor: a secondary surface passes to its
 * primary double cover, and every primary surface deforms to the standard
 * one.  Used by decide_equivalence for pairs of Kodaira-surface tags.
 */
inline Certificate chain_kodaira(const SurfaceDescriptor& d) {
  if (d.class_tag != SurfaceClass::KodairaPrimary &&
      d.class_tag != SurfaceClass::KodairaSecondary)
    throw error(errc::invalid_argument, "chain expects a Kodaira-surface tag");

  chain_detail::Builder b(d);
  const auto ref = kodaira_primary_descriptor();
  const bool secondary = d.class_tag == SurfaceClass::KodairaSecondary;
  const auto canonical = secondary ? kodaira_secondary_descriptor() : ref;

  if (d.q != canonical.q || d.pg != canonical.pg || d.b1 != canonical.b1)
    chain_detail::inconsistent("Kodaira-surface invariants");
  if (chain_detail::chi_budget(d) != 0)
    chain_detail::inconsistent("Kodaira-surface invariants off the 12-chi budget");

  SurfaceDescriptor cur = d;
  if (!cur.minimal || !cur.smooth()) {
    b.push(birational_move(BirationalKind::MinimalModel,
                           cur.smooth() ? "minimal-model" : "Noether"),
           canonical);
    cur = canonical;
  } else if (cur.k2 != 0 || cur.e != 0) {
    chain_detail::inconsistent("Kodaira-surface invariants");
  }

  if (secondary) {
    b.push(cover_move(2, "Z/2", "Kodaira-secondary-cover"), ref);
    b.push(deformation_move("FM-II-7.17"), ref);
  } else if (!(cur == ref)) {
    b.push(deformation_move("FM-II-7.17"), ref);
  }
  return b.cert;
}

/**
 * Reduce a Kahler descriptor of Kodaira dimension one to the product B_2 x F.
 *
 * Route: normalize to a smooth minimal model; remove multiple fibers (orbifold
 * base covers for non-exceptional signatures, a cyclic gcd cover for two
 * non-coprime multiplicities over P1, and for one or two coprime ones a
 * deformation acquiring affine-D4 fibers followed by their contraction, which
 * re-enters the orbifold case); if the Euler number is positive, deform to the
 * standard model, contract its affine-D4 fibers and split off the double
 * cover B_g x F; finally descend along an etale base cover to genus two.
 */
inline Certificate chain_kod1(const SurfaceDescriptor& d, long long search_bound = 512) {
  if (d.kod != KodairaDim::One)
    throw error(errc::wrong_kodaira_dim, "chain expects kodaira dimension 1");
  if (!d.fibration)
    throw error(errc::missing_fibration_data, "chain needs the elliptic fibration data");
  if (d.b1 % 2 != 0)
    throw error(errc::odd_b1, "odd first Betti number is not Kahler");

  chain_detail::Builder b(d);
  SurfaceDescriptor cur = d;

  // Normalization to a smooth relatively minimal model (K^2 = 0).
  if (!cur.minimal || !cur.smooth()) {
    SurfaceDescriptor min = cur;
    min.k2 = 0;
    min.e = chain_detail::chi_budget(cur);
    min.minimal = true;
    min.singularities.clear();
    min.fibration->singular_fibers.clear();
    min.fibration->euler_contribution = min.e;
    min = make_descriptor(min);  // rejects budgets violating Noether
    b.push(birational_move(BirationalKind::MinimalModel,
                           cur.smooth() ? "minimal-model" : "Noether"),
           min);
    cur = min;
  }

  if (cur.k2 != 0)
    chain_detail::inconsistent("a minimal elliptic surface has K^2 = 0");
  if (cur.e < 0 || cur.e % 12 != 0)
    chain_detail::inconsistent("elliptic Euler number must be a nonnegative multiple of 12");
  if (cur.q != cur.fibration->base_genus + (cur.e == 0 ? 1 : 0))
    chain_detail::inconsistent("irregularity does not match the base genus");

  {
    // Positivity of the canonical degree 2g - 2 + chi + sum (1 - 1/m_j),
    // cleared of denominators: zero or less would contradict kodaira
    // dimension one.
    long long prod = 1;
    for (long long m : cur.fibration->multiplicities) prod *= m;
    long long deg = (2 * cur.fibration->base_genus - 2 + chi(cur)) * prod;
    for (long long m : cur.fibration->multiplicities) deg += (prod / m) * (m - 1);
    if (deg <= 0) chain_detail::inconsistent("canonical degree is not positive");
  }

  // Phase 1: remove multiple fibers.
  while (!cur.fibration->multiplicities.empty()) {
    const auto sig =
        orb::make_signature(cur.fibration->base_genus, cur.fibration->multiplicities);

    if (orb::exceptional_case(sig)) {
      const auto r = static_cast<long long>(sig.cone_orders.size());
      const long long g = r == 2 ? std::gcd(sig.cone_orders[0], sig.cone_orders[1]) : 1;

      if (r == 2 && g >= 2) {
        // Cyclic base cover of degree gcd branched at the two points.
        SurfaceDescriptor nxt = cur;
        nxt.fibration->multiplicities = orb::coprime_reduction(sig).cone_orders;
        nxt.e = cur.e * g;
        nxt.pg = nxt.e / 12 - 1;
        nxt.fibration->euler_contribution = nxt.e;
        nxt = make_descriptor(nxt);
        b.push(cover_move(g, "Z/" + std::to_string(g), "Step-I-gcd-cyclic"), nxt);
        cur = nxt;
        continue;
      }

      // One or two coprime multiplicities over P1: acquire 3 - r fibers with
      // affine D4 dual graph by deformation, then contract the four outer
      // (-2)-curves of each; the central curves become multiplicity-2 fibers.
      const long long add = 3 - r;
      SurfaceDescriptor deformed = cur;
      for (long long i = 0; i < add; ++i)
        deformed.fibration->singular_fibers.push_back({'D', 4});
      std::sort(deformed.fibration->singular_fibers.begin(),
                deformed.fibration->singular_fibers.end());
      deformed = make_descriptor(deformed);
      b.push(deformation_move("Step-VI-D4"), deformed);

      SurfaceDescriptor contracted = cur;
      contracted.e = cur.e - 4 * add;
      contracted.minimal = false;
      contracted.singularities = chain_detail::nodes(4 * add);
      for (long long i = 0; i < add; ++i)
        contracted.fibration->multiplicities.push_back(2);
      contracted.fibration->euler_contribution = contracted.e;
      contracted = make_descriptor(contracted);
      b.push(birational_move(BirationalKind::SmallContraction, "small-contraction"),
             contracted);
      cur = contracted;
      continue;
    }

    // Non-exceptional signature: pull back along the base covering realizing
    // a finite quotient of the orbifold group.
    const auto witness = orb::find_good_quotient(sig, search_bound);
    const long long deg = witness.target_order;
    long long branch = 0;
    for (long long m : sig.cone_orders) branch += (deg / m) * (m - 1);
    const long long cover_genus = (deg * (2 * sig.genus - 2) + branch + 2) / 2;
    const long long cover_euler =
        cur.smooth() ? deg * cur.e
                     : deg * (2 * cur.e - static_cast<long long>(cur.singularities.size())) / 2;

    SurfaceDescriptor nxt;
    nxt.kod = KodairaDim::One;
    nxt.class_tag = SurfaceClass::ProperlyElliptic;
    nxt.e = cover_euler;
    nxt.k2 = 0;
    nxt.q = cover_genus + (cover_euler == 0 ? 1 : 0);
    nxt.pg = cover_euler / 12 - 1 + nxt.q;
    nxt.b1 = 2 * nxt.q;
    nxt.minimal = true;
    nxt.fibration = FibrationData{cover_genus, {}, false, {}, cover_euler};
    nxt = make_descriptor(nxt);
    b.push(cover_move(deg, witness.group_name, "Step-I-orbifold"), nxt);
    cur = nxt;
  }

  // Phase 2: no multiple fibers left.
  if (cur.e > 0) {
    const auto model = standard_elliptic(cur.q, cur.pg);
    if (!(cur == model)) b.push(deformation_move("FM-7.6"), model);
    b.push(birational_move(BirationalKind::SmallContraction, "small-contraction"),
           contracted_elliptic(cur.q, cur.pg));
    const long long g = cur.q + cur.pg;
    b.push(cover_move(2, "Z/2", "Main-Observation"), elliptic_product(g));
    cur = b.cert.last;
  } else {
    if (!cur.fibration->singular_fibers.empty() ||
        cur.fibration->euler_contribution != 0)
      chain_detail::inconsistent("Euler number zero forbids singular fibers");
    const long long g = cur.fibration->base_genus;
    if (!cur.fibration->has_section) {
      if (!(cur == elliptic_bundle(g, false)))
        chain_detail::inconsistent("elliptic bundle numerics");
      b.push(cover_move(2, "Z/2", "Step-IV-bundle"), elliptic_product(2 * g - 1));
      cur = b.cert.last;
    } else if (!(cur == elliptic_product(g))) {
      chain_detail::inconsistent("product numerics");
    }
  }

  // Descend to the genus-2 reference product along an etale base cover.
  if (!(cur == ref_one())) {
    const long long g = cur.fibration->base_genus;
    b.push(quotient_move(g - 1, "Z/" + std::to_string(g - 1), "curve-etale-cover"),
           ref_one());
  }
  return b.cert;
}

// ---------------------------------------------------------------------------
// Equivalence decision
// ---------------------------------------------------------------------------

struct EquivalenceResult {
  enum class Outcome { Equivalent, Obstructed, Unknown };
  Outcome outcome = Outcome::Unknown;
  Certificate certificate;  // meaningful only when outcome == Equivalent
  std::string reason;
};

inline const char* equivalence_outcome_name(EquivalenceResult::Outcome o) {
  switch (o) {
    case EquivalenceResult::Outcome::Equivalent: return "Equivalent";
    case EquivalenceResult::Outcome::Obstructed: return "Obstructed";
    case EquivalenceResult::Outcome::Unknown:    return "Unknown";
  }
  return "?";
}

inline bool is_kodaira_surface_tag(const SurfaceDescriptor& d) {
  return d.class_tag == SurfaceClass::KodairaPrimary ||
         d.class_tag == SurfaceClass::KodairaSecondary;
}

// Descriptors the reduction chains accept: even b1 and, per Kodaira
// dimension, a class tag of Kahler type (with fibration data when kod = 1).
inline bool kahler_chain_input(const SurfaceDescriptor& d) {
  if (d.b1 % 2 != 0) return false;
  switch (d.kod) {
    case KodairaDim::MinusInf:
      return d.class_tag == SurfaceClass::Ruled;
    case KodairaDim::Zero:
      return d.class_tag == SurfaceClass::Torus || d.class_tag == SurfaceClass::K3 ||
             d.class_tag == SurfaceClass::Enriques ||
             d.class_tag == SurfaceClass::Hyperelliptic;
    case KodairaDim::One:
      return d.class_tag == SurfaceClass::ProperlyElliptic && d.fibration.has_value();
    case KodairaDim::Two:
      return false;
  }
  return false;
}

/**
 * Decide equivalence under the move relation.  Never throws: pairs outside
 * the supported constructions come back Unknown with a reason.
 *
 *  - different Kodaira dimension: Obstructed ("Siu invariance"),
 *  - exactly one Kodaira-surface tag: Obstructed ("Thm 7.1"),
 *  - two Kodaira-surface tags: Equivalent through the primary normal form,
 *  - Kahler with kod <= 1: Equivalent by composing the reduction chains,
 *  - polydisk quotients with distinct ramification classes: Obstructed
 *    ("Thm 6.9"); with equal classes: Unknown,
 *  - anything else: Unknown.
 */
inline EquivalenceResult decide_equivalence(const SurfaceDescriptor& a,
                                            const SurfaceDescriptor& b,
                                            long long search_bound = 512) {
  EquivalenceResult res;

  if (a.kod != b.kod) {
    res.outcome = EquivalenceResult::Outcome::Obstructed;
    res.reason = "Siu invariance";
    return res;
  }

  const bool ka = is_kodaira_surface_tag(a), kb = is_kodaira_surface_tag(b);
  if (ka != kb) {
    res.outcome = EquivalenceResult::Outcome::Obstructed;
    res.reason = "Thm 7.1";
    return res;
  }

  auto certify = [&res](Certificate ca, Certificate cb) {
    res.certificate = concat(std::move(ca), reverse_certificate(cb));
    res.outcome = EquivalenceResult::Outcome::Equivalent;
    res.reason = "explicit chain";
  };

  if (ka && kb) {
    try {
      certify(chain_kodaira(a), chain_kodaira(b));
    } catch (const error& e) {
      res.outcome = EquivalenceResult::Outcome::Unknown;
      res.reason = e.what();
    }
    return res;
  }

  if (kahler_chain_input(a) && kahler_chain_input(b) && a.kod != KodairaDim::Two) {
    try {
      switch (a.kod) {
        case KodairaDim::MinusInf:
          certify(chain_kod_minus_infty(a), chain_kod_minus_infty(b));
          break;
        case KodairaDim::Zero:
          certify(chain_kod0(a), chain_kod0(b));
          break;
        default:
          certify(chain_kod1(a, search_bound), chain_kod1(b, search_bound));
          break;
      }
    } catch (const error& e) {
      res.outcome = EquivalenceResult::Outcome::Unknown;
      res.reason = e.what();
    }
    return res;
  }

  if (a.kod == KodairaDim::Two && a.class_tag == SurfaceClass::PolydiskQuotient &&
      b.class_tag == SurfaceClass::PolydiskQuotient) {
    if (a.polydisk_class && b.polydisk_class) {
      if (*a.polydisk_class != *b.polydisk_class) {
        res.outcome = EquivalenceResult::Outcome::Obstructed;
        res.reason = "Thm 6.9";
      } else {
        res.outcome = EquivalenceResult::Outcome::Unknown;
        res.reason = "equal ramification classes decide nothing further";
      }
      return res;
    }
    res.outcome = EquivalenceResult::Outcome::Unknown;
    res.reason = "missing ramification class";
    return res;
  }

  res.outcome = EquivalenceResult::Outcome::Unknown;
  res.reason = "no decision procedure applies";
  return res;
}

}  // namespace qed
