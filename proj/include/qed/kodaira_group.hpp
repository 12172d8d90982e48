#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qed/errors.hpp"
#include "qed/exact_complex.hpp"

namespace qed::kod {

/**
 * Affine transformation z = (z1, z2) |-> (z1 + a, z2 + conj(a) z1 + b) of C^2.
 * The group of all such elements is closed under composition because the
 * z1-coefficient of the second row stays the conjugate of the a-slot.
 */
struct GroupElement {
  ExactComplex a, b;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement identity_element() { return {ExactComplex::zero(), ExactComplex::zero()}; }

// h after g: closed form (a_g + a_h, b_g + b_h + conj(a_h) a_g).
inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
  return {g.a + h.a, g.b + h.b + h.a.conj() * g.a};
}

inline GroupElement inverse(const GroupElement& g) {
  return {-g.a, -g.b + g.a.conj() * g.a};
}

// g h g^-1 h^-1; the a-slot cancels and the b-slot is the antisymmetric
// pairing conj(a_h) a_g - conj(a_g) a_h of the two translation parts.
inline GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return compose(compose(compose(g, h), inverse(g)), inverse(h));
}

/**
 * Generator data (alpha_1..4, beta_1..4, m) for a cocompact affine group
 * with generators g_i = (alpha_i, beta_i). Validity means:
 *
 *   alpha_1 = alpha_2 = 0,
 *   beta_1 conj(beta_2) - beta_2 conj(beta_1) != 0,
 *   alpha_4 conj(alpha_3) - alpha_3 conj(alpha_4) = m beta_2 != 0,  m >= 1.
 *
 * The pairing is oriented so that the reference data below satisfies it with
 * positive m; with the opposite orientation the same data would force m < 0.
 */
struct KodairaGroupData {
  std::array<ExactComplex, 4> alpha;
  std::array<ExactComplex, 4> beta;
  long long m = 1;

  friend bool operator==(const KodairaGroupData&, const KodairaGroupData&) = default;
};

inline ExactComplex pairing(const ExactComplex& x, const ExactComplex& y) {
  return y * x.conj() - x * y.conj();
}

inline std::vector<std::string> group_data_violations(const KodairaGroupData& d) {
  std::vector<std::string> v;
  if (!d.alpha[0].is_zero()) v.push_back("alpha1-nonzero");
  if (!d.alpha[1].is_zero()) v.push_back("alpha2-nonzero");
  if (pairing(d.beta[0], d.beta[1]).is_zero()) v.push_back("beta-pairing-degenerate");
  if (d.m < 1) v.push_back("m-not-positive");
  ExactComplex p = pairing(d.alpha[2], d.alpha[3]);
  if (p.is_zero()) v.push_back("alpha-pairing-zero");
  if (!(p == d.beta[1].scaled(d.m))) v.push_back("alpha-pairing-mismatch");
  return v;
}

inline void validate_group_data(const KodairaGroupData& d) {
  auto v = group_data_violations(d);
  if (!v.empty()) throw error(errc::invariant_violation, "group data: " + v.front());
}

inline KodairaGroupData s0_data() {
  KodairaGroupData d;
  d.alpha = {ExactComplex::zero(), ExactComplex::zero(), ExactComplex::one(), ExactComplex::i()};
  d.beta = {ExactComplex::one(), ExactComplex::i().scaled(2), ExactComplex::zero(),
            ExactComplex::zero()};
  d.m = 1;
  return d;
}

inline KodairaGroupData conjugate_data(const KodairaGroupData& d) {
  KodairaGroupData out = d;
  for (auto& x : out.alpha) x = x.conj();
  for (auto& x : out.beta) x = x.conj();
  return out;
}

// Divide alpha_3 by m; the pairing then equals beta_2 on the nose.
inline KodairaGroupData rescale(const KodairaGroupData& d) {
  validate_group_data(d);
  KodairaGroupData out = d;
  out.alpha[2] = out.alpha[2].scaled(Rational(1, d.m));
  out.m = 1;
  return out;
}

namespace detail {

inline bool lex_negative(const ExactComplex& x) {
  for (const Rational* r : {&x.a, &x.b, &x.c, &x.e}) {
    if (*r == 0) continue;
    return *r < 0;
  }
  return false;
}

}  // namespace detail

// Canonical form used for generator-tuple equality: the sign of (alpha_4,
// beta_2) is normalized so that the leading coefficient of beta_2 is
// positive. Replacing (g_2, g_4) by their inverses regenerates the same
// group, so data differing only by that sign describe one group.
inline KodairaGroupData canonical_group_data(const KodairaGroupData& d) {
  KodairaGroupData out = d;
  if (detail::lex_negative(out.beta[1])) {
    out.beta[1] = -out.beta[1];
    out.alpha[3] = -out.alpha[3];
  }
  return out;
}

inline bool same_group_data(const KodairaGroupData& x, const KodairaGroupData& y) {
  return canonical_group_data(x) == canonical_group_data(y);
}

inline std::array<GroupElement, 4> generators(const KodairaGroupData& d) {
  std::array<GroupElement, 4> g;
  for (int idx = 0; idx < 4; ++idx) g[idx] = {d.alpha[idx], d.beta[idx]};
  return g;
}

struct PresentationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// On rescaled data the only non-commuting generator pair is (g_3, g_4), whose
// commutator must be the central translation g_2 or its inverse.
inline PresentationReport verify_presentation(const KodairaGroupData& d) {
  if (d.m != 1)
    throw error(errc::invalid_argument, "verify_presentation expects rescaled data (m = 1)");
  auto g = generators(d);
  PresentationReport rep;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      GroupElement c = commutator(g[i], g[j]);
      bool ok;
      if (i == 2 && j == 3)
        ok = c == g[1] || c == inverse(g[1]);
      else
        ok = c == identity_element();
      if (!ok) {
        rep.ok = false;
        rep.violations.push_back("commutator-pair-" + std::to_string(i + 1) +
                                 std::to_string(j + 1));
      }
    }
  }
  return rep;
}

/**
 * Automorphism of C^2 of the shape
 *
 *   phi(z1, z2) = (sigma z1 + h0, h1 z1 + z2 + h2),
 *
 * with sigma a root of unity of order dividing 12.
 */
struct AffineAuto {
  ExactComplex sigma, h0, h1, h2;

  AffineAuto(ExactComplex s, ExactComplex h0_, ExactComplex h1_, ExactComplex h2_)
      : sigma(std::move(s)), h0(std::move(h0_)), h1(std::move(h1_)), h2(std::move(h2_)) {
    if (!sigma.is_root_of_unity_order_dividing_12())
      throw error(errc::invariant_violation, "sigma must be a root of unity of order dividing 12");
  }
};

enum class FixedPointSet { Empty, Codim1Line, AllOfC2, IsolatedPoints };

inline const char* fixed_point_set_name(FixedPointSet s) {
  switch (s) {
    case FixedPointSet::Empty:          return "empty";
    case FixedPointSet::Codim1Line:     return "codimension-one line";
    case FixedPointSet::AllOfC2:        return "all of C^2";
    case FixedPointSet::IsolatedPoints: return "isolated points";
  }
  return "?";
}

// Fixed points solve (sigma - 1) z1 + h1 z2 + h0 = 0 together with the
// constant constraint h2 = 0, so the locus is never zero-dimensional.
inline FixedPointSet fixed_point_set(const AffineAuto& phi) {
  if (!phi.h2.is_zero()) return FixedPointSet::Empty;
  bool sigma_is_one = phi.sigma == ExactComplex::one();
  if (!sigma_is_one || !phi.h1.is_zero()) return FixedPointSet::Codim1Line;
  if (!phi.h0.is_zero()) return FixedPointSet::Empty;
  return FixedPointSet::AllOfC2;
}

}  // namespace qed::kod
