#pragma once

#include <string>

#include "qed/errors.hpp"

namespace qed {

/**
 * One rewriting move between surface models.  Four kinds:
 *
 *  - Birational: pass between birational models (minimal model, single
 *    blow-up / blow-down, contraction of (-2)-curve configurations).
 *  - Deformation: move inside a registered flat family.
 *  - QuasiEtaleCover(src, d, dst): there is a finite degree-d morphism
 *    dst -> src which is etale away from a codimension-2 set.
 *  - QuasiEtaleQuotient(src, d, dst): same with the map src -> dst.
 *
 * Every move carries a justification tag naming a registered rule whose
 * premises the verifier re-checks against both endpoints.
 */

enum class MoveKind { Birational, Deformation, QuasiEtaleCover, QuasiEtaleQuotient };

enum class BirationalKind { MinimalModel, BlowUp, BlowDown, SmallContraction };

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Birational:         return "birational";
    case MoveKind::Deformation:        return "deformation";
    case MoveKind::QuasiEtaleCover:    return "cover";
    case MoveKind::QuasiEtaleQuotient: return "quotient";
  }
  return "?";
}

inline const char* birational_kind_name(BirationalKind k) {
  switch (k) {
    case BirationalKind::MinimalModel:     return "minimal-model";
    case BirationalKind::BlowUp:           return "blow-up";
    case BirationalKind::BlowDown:         return "blow-down";
    case BirationalKind::SmallContraction: return "small-contraction";
  }
  return "?";
}

struct LemmaTag {
  std::string id;         // key into the registered lemma table
  std::string statement;  // human-readable statement (informational)

  friend bool operator==(const LemmaTag& a, const LemmaTag& b) { return a.id == b.id; }
};

struct QedMove {
  MoveKind kind = MoveKind::Deformation;
  BirationalKind birational = BirationalKind::MinimalModel;  // Birational only
  std::string family;                                        // Deformation only
  long long degree = 0;                                      // quasi-etale only, >= 2
  std::string group;                                         // quasi-etale deck group label
  LemmaTag lemma;

  friend bool operator==(const QedMove& a, const QedMove& b) {
    if (a.kind != b.kind || !(a.lemma == b.lemma)) return false;
    switch (a.kind) {
      case MoveKind::Birational:  return a.birational == b.birational;
      case MoveKind::Deformation: return a.family == b.family;
      case MoveKind::QuasiEtaleCover:
      case MoveKind::QuasiEtaleQuotient:
        return a.degree == b.degree && a.group == b.group;
    }
    return true;
  }
};

inline QedMove birational_move(BirationalKind sub, const std::string& lemma_id) {
  QedMove m;
  m.kind = MoveKind::Birational;
  m.birational = sub;
  m.lemma.id = lemma_id;
  return m;
}

inline QedMove deformation_move(const std::string& family_id) {
  QedMove m;
  m.kind = MoveKind::Deformation;
  m.family = family_id;
  m.lemma.id = family_id;
  return m;
}

inline QedMove cover_move(long long degree, const std::string& group,
                          const std::string& lemma_id) {
  QedMove m;
  m.kind = MoveKind::QuasiEtaleCover;
  m.degree = degree;
  m.group = group;
  m.lemma.id = lemma_id;
  return m;
}

inline QedMove quotient_move(long long degree, const std::string& group,
                             const std::string& lemma_id) {
  QedMove m;
  m.kind = MoveKind::QuasiEtaleQuotient;
  m.degree = degree;
  m.group = group;
  m.lemma.id = lemma_id;
  return m;
}

/**
 * The move read backwards: deformations are their own reverse, covers and
 * quotients swap kinds, single blow-ups and blow-downs swap, and passing to
 * a minimal model or contracting curves reverses to the same relation read
 * from the other side (their rules are checked symmetrically).
 */
inline QedMove reverse_move(const QedMove& m) {
  QedMove out = m;
  switch (m.kind) {
    case MoveKind::Deformation:
      break;
    case MoveKind::QuasiEtaleCover:
      out.kind = MoveKind::QuasiEtaleQuotient;
      break;
    case MoveKind::QuasiEtaleQuotient:
      out.kind = MoveKind::QuasiEtaleCover;
      break;
    case MoveKind::Birational:
      if (m.birational == BirationalKind::BlowUp) {
        out.birational = BirationalKind::BlowDown;
        if (m.lemma.id == "blow-up") out.lemma.id = "blow-down";
      } else if (m.birational == BirationalKind::BlowDown) {
        out.birational = BirationalKind::BlowUp;
        if (m.lemma.id == "blow-down") out.lemma.id = "blow-up";
      }
      break;
  }
  return out;
}

}  // namespace qed
