#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qed/errors.hpp"
#include "qed/moves.hpp"

namespace qed {

/**
 * Nodes of the explicit chain connecting a degree-d hypersurface of
 * dimension n with P^n.  A node is a variety built from a few shapes:
 * smooth hypersurfaces V^n_d in P^{n+1} (for n = 1 a plane curve C1_d),
 * rational nodal plane curves C'_d, projective spaces, cones over a base,
 * and flat products.
 */
struct TChainNode {
  enum class Kind {
    Hypersurface,        // V^n_d in P^{n+1}, n >= 2
    PlaneCurve,          // C1_d: smooth plane curve of degree d
    NodalRationalCurve,  // C'_d: rational nodal plane curve of degree d
    ProjectiveSpace,     // P^n
    Cone,                // projective cone over factors[0]
    Product              // factors[0] x factors[1] x ... (flat, no nesting)
  };

  Kind kind = Kind::ProjectiveSpace;
  long long n = 0;  // dimension (Hypersurface, ProjectiveSpace)
  long long d = 0;  // degree (Hypersurface, PlaneCurve, NodalRationalCurve)
  std::vector<TChainNode> factors;

  bool operator==(const TChainNode&) const = default;
};

inline TChainNode plane_curve_node(long long d) {
  TChainNode v;
  v.kind = TChainNode::Kind::PlaneCurve;
  v.d = d;
  return v;
}

// A dimension-1 hypersurface in P^2 is a plane curve; the factory collapses
// the two spellings into the single node C1_d.
inline TChainNode hypersurface_node(long long n, long long d) {
  if (n == 1) return plane_curve_node(d);
  TChainNode v;
  v.kind = TChainNode::Kind::Hypersurface;
  v.n = n;
  v.d = d;
  return v;
}

inline TChainNode nodal_curve_node(long long d) {
  TChainNode v;
  v.kind = TChainNode::Kind::NodalRationalCurve;
  v.d = d;
  return v;
}

inline TChainNode projective_space_node(long long n) {
  TChainNode v;
  v.kind = TChainNode::Kind::ProjectiveSpace;
  v.n = n;
  return v;
}

inline TChainNode cone_node(TChainNode base) {
  TChainNode v;
  v.kind = TChainNode::Kind::Cone;
  v.factors.push_back(std::move(base));
  return v;
}

inline std::string serialize_t_node(const TChainNode& v) {
  using K = TChainNode::Kind;
  switch (v.kind) {
    case K::Hypersurface:
      return "V" + std::to_string(v.n) + "_" + std::to_string(v.d);
    case K::PlaneCurve:
      return "C1_" + std::to_string(v.d);
    case K::NodalRationalCurve:
      return "C'_" + std::to_string(v.d);
    case K::ProjectiveSpace:
      return "P" + std::to_string(v.n);
    case K::Cone:
      return "C(" + serialize_t_node(v.factors.at(0)) + ")";
    case K::Product: {
      std::string s;
      for (size_t i = 0; i < v.factors.size(); ++i) {
        if (i) s += " x ";
        s += serialize_t_node(v.factors[i]);
      }
      return s;
    }
  }
  return "?";
}

/**
 * One entry of the chain: a node together with the move that produced it
 * from the previous node (absent on the first entry).  Only two move kinds
 * occur: deformations (degenerations within a family) and birational moves
 * (blow-ups, normalizations and collapses).
 */
struct TChainStep {
  TChainNode node;
  bool has_move = false;
  MoveKind move_kind = MoveKind::Deformation;
  std::string move_label;

  bool operator==(const TChainStep&) const = default;
};

using TChain = std::vector<TChainStep>;

namespace t_detail {

inline TChainStep plain(TChainNode v) {
  TChainStep s;
  s.node = std::move(v);
  return s;
}

inline TChainStep moved(TChainNode v, MoveKind k, std::string label) {
  TChainStep s;
  s.node = std::move(v);
  s.has_move = true;
  s.move_kind = k;
  s.move_label = std::move(label);
  return s;
}

// View any node as its flat factor list.
inline std::vector<TChainNode> flatten(const TChainNode& v) {
  if (v.kind == TChainNode::Kind::Product) return v.factors;
  return {v};
}

inline TChainNode from_factors(std::vector<TChainNode> fs) {
  if (fs.size() == 1) return fs.front();
  TChainNode v;
  v.kind = TChainNode::Kind::Product;
  v.factors = std::move(fs);
  return v;
}

inline TChainNode p1_times(const TChainNode& v) {
  std::vector<TChainNode> fs{projective_space_node(1)};
  for (auto& f : flatten(v)) fs.push_back(f);
  return from_factors(std::move(fs));
}

}  // namespace t_detail

/**
 * The explicit chain from the degree-d dimension-n hypersurface to P^n,
 * with 3n nodes:
 *
 *   n = 1:  C1_d --deform--> C'_d --normalize--> P1
 *   n >= 2: V^n_d degenerates to the cone over V^{n-1}_d, the vertex blow-up
 *           turns the cone into P1 x V^{n-1}_d, the chain for V^{n-1}_d runs
 *           in the last factor, and a final collapse merges P1 x P^{n-1}
 *           into P^n.
 */
inline TChain t_chain(long long n, long long d) {
  if (n < 1) throw error(errc::invalid_argument, "dimension must be at least 1");
  if (d < 1) throw error(errc::invalid_argument, "degree must be at least 1");

  using t_detail::moved;
  using t_detail::plain;

  if (n == 1) {
    TChain out;
    out.push_back(plain(plane_curve_node(d)));
    out.push_back(moved(nodal_curve_node(d), MoveKind::Deformation, "nodal-degeneration"));
    out.push_back(moved(projective_space_node(1), MoveKind::Birational, "normalization"));
    return out;
  }

  const TChain inner = t_chain(n - 1, d);
  TChain out;
  out.push_back(plain(hypersurface_node(n, d)));
  out.push_back(moved(cone_node(hypersurface_node(n - 1, d)), MoveKind::Deformation,
                      "cone-degeneration"));
  for (size_t i = 0; i < inner.size(); ++i) {
    TChainStep step = inner[i];
    step.node = t_detail::p1_times(step.node);
    if (i == 0) {
      step.has_move = true;
      step.move_kind = MoveKind::Birational;
      step.move_label = "vertex-blowup";
    }
    out.push_back(std::move(step));
  }
  out.push_back(moved(projective_space_node(n), MoveKind::Birational, "product-collapse"));
  return out;
}

namespace t_detail {

inline bool node_valid(const TChainNode& v) {
  using K = TChainNode::Kind;
  switch (v.kind) {
    case K::Hypersurface:       return v.n >= 2 && v.d >= 1 && v.factors.empty();
    case K::PlaneCurve:         return v.d >= 1 && v.factors.empty();
    case K::NodalRationalCurve: return v.d >= 1 && v.factors.empty();
    case K::ProjectiveSpace:    return v.n >= 1 && v.factors.empty();
    case K::Cone:
      return v.factors.size() == 1 && v.factors[0].kind != K::Product &&
             v.factors[0].kind != K::Cone && node_valid(v.factors[0]);
    case K::Product: {
      if (v.factors.size() < 2) return false;
      for (const auto& f : v.factors)
        if (f.kind == K::Product || !node_valid(f)) return false;
      return true;
    }
  }
  return false;
}

// The five transition rules.  Each receives the flattened factor lists of
// the source and target and reports whether the move matches.

inline bool prefixes_equal(const std::vector<TChainNode>& a,
                           const std::vector<TChainNode>& b, size_t na, size_t nb) {
  if (na != nb) return false;
  for (size_t i = 0; i < na; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

inline bool rule_cone_degeneration(const std::vector<TChainNode>& src,
                                   const std::vector<TChainNode>& dst) {
  if (src.size() != dst.size() || src.empty()) return false;
  if (!prefixes_equal(src, dst, src.size() - 1, dst.size() - 1)) return false;
  const auto& a = src.back();
  const auto& b = dst.back();
  if (a.kind != TChainNode::Kind::Hypersurface || b.kind != TChainNode::Kind::Cone)
    return false;
  return b.factors[0] == hypersurface_node(a.n - 1, a.d);
}

inline bool rule_vertex_blowup(const std::vector<TChainNode>& src,
                               const std::vector<TChainNode>& dst) {
  if (dst.size() != src.size() + 1 || src.empty()) return false;
  if (!prefixes_equal(src, dst, src.size() - 1, src.size() - 1)) return false;
  const auto& a = src.back();
  if (a.kind != TChainNode::Kind::Cone) return false;
  return dst[dst.size() - 2] == projective_space_node(1) &&
         dst.back() == a.factors[0];
}

inline bool rule_nodal_degeneration(const std::vector<TChainNode>& src,
                                    const std::vector<TChainNode>& dst) {
  if (src.size() != dst.size() || src.empty()) return false;
  if (!prefixes_equal(src, dst, src.size() - 1, dst.size() - 1)) return false;
  const auto& a = src.back();
  const auto& b = dst.back();
  return a.kind == TChainNode::Kind::PlaneCurve &&
         b.kind == TChainNode::Kind::NodalRationalCurve && a.d == b.d;
}

inline bool rule_normalization(const std::vector<TChainNode>& src,
                               const std::vector<TChainNode>& dst) {
  if (src.size() != dst.size() || src.empty()) return false;
  if (!prefixes_equal(src, dst, src.size() - 1, dst.size() - 1)) return false;
  return src.back().kind == TChainNode::Kind::NodalRationalCurve &&
         dst.back() == projective_space_node(1);
}

inline bool rule_product_collapse(const std::vector<TChainNode>& src,
                                  const std::vector<TChainNode>& dst) {
  if (src.size() < 2 || dst.size() != src.size() - 1) return false;
  if (!prefixes_equal(src, dst, src.size() - 2, dst.size() - 1)) return false;
  const auto& a = src[src.size() - 2];
  const auto& b = src.back();
  if (a.kind != TChainNode::Kind::ProjectiveSpace ||
      b.kind != TChainNode::Kind::ProjectiveSpace)
    return false;
  return dst.back() == projective_space_node(a.n + b.n);
}

}  // namespace t_detail

/**
 * Re-derive every transition of a chain from the node data alone.  Returns
 * the list of violations ("step i: ..."), empty when the chain is valid.
 */
inline std::vector<std::string> verify_t_chain(const TChain& chain) {
  std::vector<std::string> out;
  if (chain.empty()) {
    out.push_back("empty-chain");
    return out;
  }
  if (chain.front().has_move) out.push_back("step 0: leading move");

  for (size_t i = 0; i < chain.size(); ++i)
    if (!t_detail::node_valid(chain[i].node))
      out.push_back("step " + std::to_string(i) + ": malformed node");
  if (!out.empty()) return out;

  struct Rule {
    const char* label;
    MoveKind kind;
    bool (*check)(const std::vector<TChainNode>&, const std::vector<TChainNode>&);
  };
  static constexpr Rule rules[] = {
      {"cone-degeneration", MoveKind::Deformation, t_detail::rule_cone_degeneration},
      {"nodal-degeneration", MoveKind::Deformation, t_detail::rule_nodal_degeneration},
      {"vertex-blowup", MoveKind::Birational, t_detail::rule_vertex_blowup},
      {"normalization", MoveKind::Birational, t_detail::rule_normalization},
      {"product-collapse", MoveKind::Birational, t_detail::rule_product_collapse},
  };

  for (size_t i = 1; i < chain.size(); ++i) {
    const auto tag = "step " + std::to_string(i) + ": ";
    if (!chain[i].has_move) {
      out.push_back(tag + "missing move");
      continue;
    }
    const Rule* rule = nullptr;
    for (const auto& r : rules)
      if (chain[i].move_label == r.label) rule = &r;
    if (!rule) {
      out.push_back(tag + "unknown rule " + chain[i].move_label);
      continue;
    }
    if (chain[i].move_kind != rule->kind) {
      out.push_back(tag + "rule " + chain[i].move_label + " has the wrong move kind");
      continue;
    }
    const auto src = t_detail::flatten(chain[i - 1].node);
    const auto dst = t_detail::flatten(chain[i].node);
    if (!rule->check(src, dst))
      out.push_back(tag + "rule " + chain[i].move_label + " does not apply");
  }
  return out;
}

inline std::string serialize_t_chain(const TChain& chain) {
  std::string out;
  for (const auto& step : chain) {
    if (step.has_move) {
      out += "  --";
      out += move_kind_name(step.move_kind);
      out += "[" + step.move_label + "]-->\n";
    }
    out += serialize_t_node(step.node);
    out += '\n';
  }
  return out;
}

}  // namespace qed
