#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qed/errors.hpp"
#include "qed/invariants.hpp"
#include "qed/moves.hpp"
#include "qed/orbifold.hpp"

namespace qed {

/**
 * Registered justification rules for moves.  Each entry pairs a citation id
 * with a machine-checkable premise on the two endpoint descriptors.  The
 * verifier accepts a move only when its tag is registered for the move kind
 * and the premise holds; failed premises are reported by rule name.
 *
 * Checker orientation:
 *  - birational and deformation rules receive (src, dst) and may be evaluated
 *    in either orientation by the verifier,
 *  - quasi-etale rules always receive (base, cover, move), i.e. the covered
 *    surface first, regardless of whether the move is written as a cover or
 *    as a quotient.
 */

enum class LemmaUsage { Birational, DeformationFamily, QuasiEtale };

using LemmaCheck = std::vector<std::string> (*)(const SurfaceDescriptor&,
                                                const SurfaceDescriptor&,
                                                const QedMove&);

struct LemmaInfo {
  std::string id;
  std::string statement;
  LemmaUsage usage = LemmaUsage::DeformationFamily;
  std::optional<BirationalKind> required_sub;  // birational usage only
  LemmaCheck check = nullptr;
};

namespace lemma_detail {

inline long long sing_index_sum(const SurfaceDescriptor& d) {
  long long s = 0;
  for (const auto& t : d.singularities) s += t.n;
  return s;
}

inline bool all_nodes(const SurfaceDescriptor& d) {
  return std::all_of(d.singularities.begin(), d.singularities.end(),
                     [](const RdpType& t) { return t.kind == 'A' && t.n == 1; });
}

inline long long node_count(const SurfaceDescriptor& d) {
  return static_cast<long long>(d.singularities.size());
}

// k2 + e + (number of exceptional curves over the double points): invariant
// under resolving rational double points, blow-ups and minimal models.
inline long long chi_budget(const SurfaceDescriptor& d) {
  return d.k2 + d.e + sing_index_sum(d);
}

inline bool equal_numerics(const SurfaceDescriptor& x, const SurfaceDescriptor& y) {
  return x.q == y.q && x.pg == y.pg && x.b1 == y.b1 && x.k2 == y.k2 && x.e == y.e;
}

inline bool equal_coarse(const SurfaceDescriptor& x, const SurfaceDescriptor& y) {
  return x.class_tag == y.class_tag && x.q == y.q && x.pg == y.pg && x.b1 == y.b1;
}

inline const std::vector<long long>& mults(const SurfaceDescriptor& d) {
  static const std::vector<long long> none;
  return d.fibration ? d.fibration->multiplicities : none;
}

inline long long base_genus(const SurfaceDescriptor& d) {
  return d.fibration ? d.fibration->base_genus : -1;
}

// Fibers marked with an affine D- or E-type dual graph.
inline long long dtilde_fiber_count(const SurfaceDescriptor& d) {
  if (!d.fibration) return 0;
  long long n = 0;
  for (const auto& t : d.fibration->singular_fibers)
    if (t.kind == 'D' || t.kind == 'E') ++n;
  return n;
}

// Smooth minimal elliptic surface of the shape B x F: Euler number zero, no
// multiple fibers, irregularity base_genus + 1 (hence pg = q - 1).
inline bool product_shape(const SurfaceDescriptor& d, bool need_section) {
  if (d.kod != KodairaDim::One || !d.fibration || !d.smooth()) return false;
  const auto& f = *d.fibration;
  if (!f.multiplicities.empty()) return false;
  if (need_section && !f.has_section) return false;
  return d.e == 0 && d.k2 == 0 && d.q == f.base_genus + 1 && d.pg == f.base_genus &&
         d.b1 == 2 * d.q;
}

inline std::vector<std::string> minimal_model_rules(const SurfaceDescriptor& x,
                                                    const SurfaceDescriptor& y) {
  std::vector<std::string> v;
  if (!y.minimal) v.push_back("dst-not-minimal");
  if (!y.smooth()) v.push_back("dst-singular");
  if (!equal_coarse(x, y)) v.push_back("invariants");
  if (chi_budget(x) != chi_budget(y)) v.push_back("chi-bookkeeping");
  return v;
}

inline std::vector<std::string> elliptic_family_rules(const SurfaceDescriptor& x,
                                                      const SurfaceDescriptor& y,
                                                      bool need_sections) {
  std::vector<std::string> v;
  if (x.kod != KodairaDim::One || y.kod != KodairaDim::One) v.push_back("kodaira-one");
  if (!x.fibration || !y.fibration) {
    v.push_back("fibration-data");
    return v;
  }
  if (!mults(x).empty() || !mults(y).empty()) v.push_back("multiple-fibers");
  if (!x.smooth() || !y.smooth()) v.push_back("smooth");
  if (x.e <= 0 || y.e <= 0) v.push_back("euler-positive");
  if (x.q != y.q || x.pg != y.pg) v.push_back("q-pg");
  if (x.b1 != y.b1 || x.k2 != y.k2 || x.e != y.e) v.push_back("invariants");
  if (need_sections && (!x.fibration->has_section || !y.fibration->has_section))
    v.push_back("section");
  return v;
}

}  // namespace lemma_detail

inline const std::map<std::string, LemmaInfo>& lemma_table() {
  using namespace lemma_detail;
  using SD = SurfaceDescriptor;
  using VS = std::vector<std::string>;

  static const std::map<std::string, LemmaInfo> table = [] {
    std::map<std::string, LemmaInfo> t;
    auto add = [&t](LemmaInfo info) { t.emplace(info.id, std::move(info)); };

    // ---- birational rules -------------------------------------------------

    LemmaCheck minimal_model_check = [](const SD& x, const SD& y, const QedMove&) -> VS {
      return minimal_model_rules(x, y);
    };

    add({"minimal-model",
         "Every compact complex surface admits a minimal model with the same "
         "irregularity, geometric genus and first Betti number.",
         LemmaUsage::Birational, BirationalKind::MinimalModel, minimal_model_check});

    add({"Noether",
         "Noether's formula 12 chi(O) = K^2 + e is preserved when rational double "
         "points are resolved and a minimal model is taken.",
         LemmaUsage::Birational, BirationalKind::MinimalModel, minimal_model_check});

    add({"blow-up",
         "Blowing up a point raises e by one, lowers K^2 by one and changes no "
         "other deformation invariant.",
         LemmaUsage::Birational, BirationalKind::BlowUp,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           VS v;
           if (!x.smooth() || !y.smooth()) v.push_back("smooth");
           if (y.e != x.e + 1 || y.k2 != x.k2 - 1) v.push_back("bookkeeping");
           if (y.minimal) v.push_back("dst-minimal-flag");
           if (!equal_coarse(x, y)) v.push_back("invariants");
           return v;
         }});

    add({"blow-down",
         "Contracting a (-1)-curve lowers e by one, raises K^2 by one and changes "
         "no other deformation invariant.",
         LemmaUsage::Birational, BirationalKind::BlowDown,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           VS v;
           if (!x.smooth() || !y.smooth()) v.push_back("smooth");
           if (y.e != x.e - 1 || y.k2 != x.k2 + 1) v.push_back("bookkeeping");
           if (x.minimal) v.push_back("src-minimal-flag");
           if (!equal_coarse(x, y)) v.push_back("invariants");
           return v;
         }});

    add({"small-contraction",
         "Contracting disjoint ADE configurations of (-2)-curves produces rational "
         "double points; K^2 and e + (number of contracted curves) are unchanged.",
         LemmaUsage::Birational, BirationalKind::SmallContraction,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           VS v;
           if (!equal_coarse(x, y)) v.push_back("invariants");
           if (x.k2 != y.k2) v.push_back("k2");
           if (x.e + sing_index_sum(x) != y.e + sing_index_sum(y))
             v.push_back("euler-bookkeeping");
           if (sing_index_sum(y) <= sing_index_sum(x)) v.push_back("no-contraction");
           return v;
         }});

    // ---- deformation families --------------------------------------------

    add({"tori",
         "Two-dimensional complex tori form a connected family, so any two are "
         "deformation equivalent.",
         LemmaUsage::DeformationFamily, std::nullopt,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           VS v;
           if (x.class_tag != SurfaceClass::Torus || y.class_tag != SurfaceClass::Torus)
             v.push_back("class-tag");
           if (!x.smooth() || !y.smooth()) v.push_back("smooth");
           if (!equal_numerics(x, y)) v.push_back("invariants");
           return v;
         }});

    add({"curves-genus-g",
         "Smooth curves of a fixed genus form a connected moduli space, so the "
         "products C x P1 of a fixed genus are deformation equivalent.",
         LemmaUsage::DeformationFamily, std::nullopt,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           VS v;
           if (x.class_tag != SurfaceClass::Ruled || y.class_tag != SurfaceClass::Ruled)
             v.push_back("class-tag");
           if (!x.smooth() || !y.smooth()) v.push_back("smooth");
           if (!equal_numerics(x, y)) v.push_back("invariants");
           return v;
         }});

    add({"K3-family",
         "The K3 surfaces, together with the nodal models obtained by contracting "
         "(-2)-configurations on them, form a connected family.",
         LemmaUsage::DeformationFamily, std::nullopt,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           VS v;
           if (x.class_tag != SurfaceClass::K3 || y.class_tag != SurfaceClass::K3)
             v.push_back("class-tag");
           if (x.q != y.q || x.pg != y.pg || x.b1 != y.b1 || x.k2 != y.k2)
             v.push_back("invariants");
           if (x.e + sing_index_sum(x) != y.e + sing_index_sum(y))
             v.push_back("euler-bookkeeping");
           return v;
         }});

    add({"FM-7.6",
         "Friedman-Morgan 7.6: relatively minimal elliptic surfaces with positive "
         "Euler number, no multiple fibers and equal (q, pg) are deformation "
         "equivalent.",
         LemmaUsage::DeformationFamily, std::nullopt,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           return elliptic_family_rules(x, y, false);
         }});

    add({"Seiler",
         "Seiler: Jacobian elliptic fibrations with fixed (q, pg) and positive "
         "Euler number form an irreducible algebraic family.",
         LemmaUsage::DeformationFamily, std::nullopt,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           return elliptic_family_rules(x, y, true);
         }});

    add({"Kodaira-11.5",
         "Kodaira: an elliptic surface without multiple fibers is algebraic exactly "
         "when its twisting cocycle is torsion; equal (q, pg) then connects the "
         "surfaces through algebraic families.",
         LemmaUsage::DeformationFamily, std::nullopt,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           return elliptic_family_rules(x, y, false);
         }});

    add({"Step-VI-D4",
         "A relatively minimal elliptic surface over P1 with r = 1 or 2 multiple "
         "fibers of coprime multiplicities deforms, keeping all invariants, to one "
         "carrying 3 - r additional fibers with affine D-type dual graph.",
         LemmaUsage::DeformationFamily, std::nullopt,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           VS v;
           if (x.kod != KodairaDim::One || y.kod != KodairaDim::One)
             v.push_back("kodaira-one");
           if (!x.fibration || !y.fibration) {
             v.push_back("fibration-data");
             return v;
           }
           if (base_genus(x) != 0 || base_genus(y) != 0) v.push_back("base-genus");
           if (mults(x) != mults(y)) v.push_back("multiplicities");
           const auto r = static_cast<long long>(mults(x).size());
           if (r < 1 || r > 2) v.push_back("exceptional-range");
           if (r == 2 && std::gcd(mults(x)[0], mults(x)[1]) != 1) v.push_back("coprime");
           if (!x.smooth() || !y.smooth()) v.push_back("smooth");
           if (!equal_numerics(x, y)) v.push_back("invariants");
           if (r >= 1 && r <= 2 && dtilde_fiber_count(y) < 3 - r)
             v.push_back("dtilde-fibers");
           return v;
         }});

    add({"FM-II-7.17",
         "Friedman-Morgan II.7.17: primary Kodaira surfaces with the same numerical "
         "invariants are deformation equivalent.",
         LemmaUsage::DeformationFamily, std::nullopt,
         [](const SD& x, const SD& y, const QedMove&) -> VS {
           VS v;
           if (x.class_tag != SurfaceClass::KodairaPrimary ||
               y.class_tag != SurfaceClass::KodairaPrimary)
             v.push_back("class-tag");
           if (!x.smooth() || !y.smooth()) v.push_back("smooth");
           if (!equal_numerics(x, y)) v.push_back("invariants");
           return v;
         }});

    // ---- quasi-etale rules (checker receives base, cover, move) -----------

    add({"Enriques-cover",
         "The universal cover of an Enriques surface is a K3 surface and the "
         "covering map is etale of degree 2.",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (b.class_tag != SurfaceClass::Enriques || c.class_tag != SurfaceClass::K3)
             v.push_back("class-tags");
           if (m.degree != 2) v.push_back("degree-two");
           if (!b.smooth() || !c.smooth()) v.push_back("smooth");
           return v;
         }});

    add({"Hyperelliptic-cover",
         "A hyperelliptic surface is covered by a complex torus through an etale "
         "map whose degree divides 12.",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (b.class_tag != SurfaceClass::Hyperelliptic ||
               c.class_tag != SurfaceClass::Torus)
             v.push_back("class-tags");
           if (m.degree < 2 || 12 % m.degree != 0) v.push_back("degree-divides-12");
           if (!b.smooth() || !c.smooth()) v.push_back("smooth");
           return v;
         }});

    add({"Kummer",
         "A two-dimensional complex torus double-covers the quotient by its sign "
         "involution, which has sixteen nodes and K3 resolution.",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (b.class_tag != SurfaceClass::K3 || c.class_tag != SurfaceClass::Torus)
             v.push_back("class-tags");
           if (!all_nodes(b) || node_count(b) != 16) v.push_back("sixteen-nodes");
           if (!c.smooth()) v.push_back("smooth-cover");
           if (m.degree != 2) v.push_back("degree-two");
           return v;
         }});

    add({"Kodaira-secondary-cover",
         "A secondary Kodaira surface has an etale cyclic cover which is a primary "
         "Kodaira surface.",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove&) -> VS {
           VS v;
           if (b.class_tag != SurfaceClass::KodairaSecondary ||
               c.class_tag != SurfaceClass::KodairaPrimary)
             v.push_back("class-tags");
           if (b.pg != 0 || b.e != 0 || b.k2 != 0) v.push_back("base-shape");
           if (c.q != 2 || c.pg != 1 || c.e != 0 || c.k2 != 0) v.push_back("cover-shape");
           if (!b.smooth() || !c.smooth()) v.push_back("smooth");
           return v;
         }});

    add({"iota-j-quotient",
         "The quotient of C x P1 by the product of a hyperelliptic involution and "
         "z -> -z has 4g+4 nodes, Euler number 4 and rational minimal resolution.",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (c.class_tag != SurfaceClass::Ruled || !c.smooth() || c.q < 1 ||
               c.pg != 0 || c.b1 != 2 * c.q)
             v.push_back("cover-shape");
           if (c.e != 4 - 4 * c.q || c.k2 != 8 - 8 * c.q) v.push_back("cover-numbers");
           if (m.degree != 2) v.push_back("degree-two");
           if (b.class_tag != SurfaceClass::Ruled || b.q != 0 || b.pg != 0 || b.b1 != 0)
             v.push_back("base-shape");
           if (b.e != 4 || b.k2 != 4 - 4 * c.q) v.push_back("base-numbers");
           if (!all_nodes(b) || node_count(b) != 4 * c.q + 4) v.push_back("base-nodes");
           return v;
         }});

    add({"Main-Observation",
         "The quotient of a product B x F of smooth curves by a diagonal involution "
         "with isolated fixed points is quasi-etale of degree 2 and carries only "
         "nodes, eight per unit of chi(O).",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (!product_shape(c, true) || base_genus(c) < 2) v.push_back("cover-shape");
           if (b.kod != KodairaDim::One || !b.fibration || base_genus(b) != b.q ||
               b.k2 != 0 || b.b1 != 2 * b.q)
             v.push_back("base-shape");
           if (m.degree != 2) v.push_back("degree-two");
           if (!b.fibration || !c.fibration) return v;
           const long long cx = chi(b);
           if (base_genus(c) != b.q + b.pg) v.push_back("genus-sum");
           if (!all_nodes(b) || node_count(b) != 8 * cx) v.push_back("base-nodes");
           if (b.e != 4 * cx) v.push_back("base-euler");
           if (mults(b) != std::vector<long long>(static_cast<size_t>(2 * cx), 2))
             v.push_back("base-multiplicities");
           return v;
         }});

    add({"Step-I-orbifold",
         "An elliptic fibration with multiple fibers pulls back, along the finite "
         "covering of its base that realizes the orbifold group quotient, to an "
         "elliptic surface without multiple fibers; the covering base genus is "
         "given by orbifold Riemann-Hurwitz.",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (b.kod != KodairaDim::One || c.kod != KodairaDim::One)
             v.push_back("kodaira-one");
           if (!b.fibration || !c.fibration) {
             v.push_back("fibration-data");
             return v;
           }
           if (!c.smooth() || !mults(c).empty()) v.push_back("cover-shape");
           if (mults(b).empty()) v.push_back("base-multiplicities");
           const long long gb = base_genus(b), gc = base_genus(c), d = m.degree;
           if (orb::exceptional_case({gb, mults(b)})) v.push_back("exceptional-signature");
           bool divisible = d >= 2;
           for (long long mm : mults(b)) divisible = divisible && d % mm == 0;
           if (!divisible) {
             v.push_back("degree-divisibility");
           } else {
             long long branch = 0;
             for (long long mm : mults(b)) branch += (d / mm) * (mm - 1);
             if (2 * gc - 2 != d * (2 * gb - 2) + branch) v.push_back("riemann-hurwitz");
           }
           if (b.smooth()) {
             if (c.e != d * b.e) v.push_back("euler");
           } else {
             // Nodes sitting on multiplicity-2 fibers lift to smooth points; each
             // contributes e = 1/2 to the orbifold Euler number of the base model.
             if (!all_nodes(b)) v.push_back("base-singularities");
             if (2 * c.e != d * (2 * b.e - node_count(b))) v.push_back("euler-orbifold");
           }
           if (c.e < 0 || c.e % 12 != 0) v.push_back("euler-divisibility");
           if (b.q != gb + (b.e == 0 ? 1 : 0) || c.q != gc + (c.e == 0 ? 1 : 0) ||
               b.b1 != 2 * b.q || c.b1 != 2 * c.q)
             v.push_back("irregularity");
           if (b.k2 != 0 || c.k2 != 0) v.push_back("k2");
           return v;
         }});

    add({"Step-I-gcd-cyclic",
         "For an elliptic fibration over P1 with two multiple fibers of non-coprime "
         "multiplicities, the cyclic base cover of degree gcd branched at the two "
         "points divides both multiplicities by the gcd.",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (b.kod != KodairaDim::One || c.kod != KodairaDim::One)
             v.push_back("kodaira-one");
           if (!b.fibration || !c.fibration) {
             v.push_back("fibration-data");
             return v;
           }
           if (base_genus(b) != 0 || base_genus(c) != 0) v.push_back("base-genus");
           if (mults(b).size() != 2) {
             v.push_back("two-fibers");
             return v;
           }
           const long long g = std::gcd(mults(b)[0], mults(b)[1]);
           if (g < 2 || m.degree != g) v.push_back("degree-gcd");
           if (mults(c) != orb::coprime_reduction({0, mults(b)}).cone_orders)
             v.push_back("reduced-multiplicities");
           if (!b.smooth() || !c.smooth()) v.push_back("smooth");
           if (b.e <= 0) v.push_back("euler-positive");
           if (c.e != m.degree * b.e) v.push_back("euler");
           if (b.q != 0 || c.q != 0 || b.b1 != 0 || c.b1 != 0) v.push_back("irregularity");
           if (b.k2 != 0 || c.k2 != 0) v.push_back("k2");
           return v;
         }});

    add({"Step-IV-bundle",
         "An elliptic bundle with even first Betti number pulls back to a product "
         "along an etale cover of its base: the classifying map for the bundle "
         "lands in the translation part after the cover.",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (!product_shape(b, false)) v.push_back("base-shape");
           if (b.fibration && b.fibration->has_section) v.push_back("base-section");
           if (!product_shape(c, true)) v.push_back("cover-shape");
           if (!b.fibration || !c.fibration) return v;
           if (base_genus(b) < 2) v.push_back("hyperbolic-base");
           if (base_genus(c) - 1 != m.degree * (base_genus(b) - 1))
             v.push_back("base-cover");
           return v;
         }});

    add({"curve-etale-cover",
         "An unramified degree-d cover B' -> B of smooth curves induces an etale "
         "cover of products B' x F -> B x F with g(B') - 1 = d (g(B) - 1).",
         LemmaUsage::QuasiEtale, std::nullopt,
         [](const SD& b, const SD& c, const QedMove& m) -> VS {
           VS v;
           if (!product_shape(b, true)) v.push_back("base-shape");
           if (!product_shape(c, true)) v.push_back("cover-shape");
           if (!b.fibration || !c.fibration) return v;
           if (base_genus(b) < 2) v.push_back("hyperbolic-base");
           if (base_genus(c) - 1 != m.degree * (base_genus(b) - 1))
             v.push_back("base-cover");
           return v;
         }});

    return t;
  }();

  return table;
}

inline const LemmaInfo* find_lemma(const std::string& id) {
  const auto& t = lemma_table();
  auto it = t.find(id);
  return it == t.end() ? nullptr : &it->second;
}

// Tag with the registered statement filled in; unknown ids are rejected.
inline LemmaTag make_lemma(const std::string& id) {
  const LemmaInfo* info = find_lemma(id);
  if (!info) throw error(errc::invalid_argument, "unknown lemma id: " + id);
  return {info->id, info->statement};
}

}  // namespace qed
