#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qed/descriptor_io.hpp"
#include "qed/errors.hpp"
#include "qed/invariants.hpp"
#include "qed/lemma_table.hpp"
#include "qed/moves.hpp"

namespace qed {

/**
 * A certificate is a finite chain of moves
 *
 *   first = S_0  --m_1-->  S_1  --m_2-->  ...  --m_k-->  S_k = last
 *
 * with every endpoint descriptor embedded, so that a verifier can re-check
 * each move against the registered rule table without re-running any of the
 * chain construction.  Zero-step certificates (first == last) are legal and
 * certify the identity.  The mode records whether every deformation step is
 * justified inside algebraic families or merely inside complex-analytic ones;
 * it is carried as bookkeeping and does not affect verification.
 */

enum class CertMode { Complex, Algebraic };

inline const char* cert_mode_name(CertMode m) {
  return m == CertMode::Complex ? "complex" : "algebraic";
}

struct CertStep {
  SurfaceDescriptor src;
  QedMove move;
  SurfaceDescriptor dst;

  friend bool operator==(const CertStep&, const CertStep&) = default;
};

struct Certificate {
  SurfaceDescriptor first;
  SurfaceDescriptor last;
  std::vector<CertStep> steps;
  CertMode mode = CertMode::Complex;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline Certificate identity_certificate(const SurfaceDescriptor& d,
                                        CertMode mode = CertMode::Complex) {
  return {d, d, {}, mode};
}

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// ---------------------------------------------------------------------------
// Single-move verification
// ---------------------------------------------------------------------------

namespace cert_detail {

inline void append_prefixed(std::vector<std::string>& out, const std::string& prefix,
                            const std::vector<std::string>& rules) {
  for (const auto& r : rules) out.push_back(prefix + r);
}

// Rules for passing to a minimal model and for contracting (-2)-curves name a
// symmetric birational relation, so either orientation may satisfy them; a
// single blow-up or blow-down is directional and its reverse is the swapped
// kind.
inline bool symmetric_birational(BirationalKind k) {
  return k == BirationalKind::MinimalModel || k == BirationalKind::SmallContraction;
}

}  // namespace cert_detail

/**
 * Check one move between explicit endpoint descriptors.  Returns the list of
 * violated rules (empty = the move verifies).  Shared with no construction
 * code: everything is re-derived from the descriptors, the move data and the
 * registered lemma table.
 */
inline std::vector<std::string> verify_move(const SurfaceDescriptor& src,
                                            const QedMove& move,
                                            const SurfaceDescriptor& dst) {
  std::vector<std::string> v;
  for (const auto& r : descriptor_violations(src)) v.push_back("invalid-src:" + r);
  for (const auto& r : descriptor_violations(dst)) v.push_back("invalid-dst:" + r);
  if (src.kod != dst.kod) v.push_back("kodaira-dimension");

  const LemmaInfo* lemma = find_lemma(move.lemma.id);
  if (!lemma) {
    v.push_back("unknown-lemma:" + move.lemma.id);
    return v;
  }
  const std::string prefix = lemma->id + ":";

  switch (move.kind) {
    case MoveKind::Birational: {
      if (lemma->usage != LemmaUsage::Birational) {
        v.push_back("lemma-kind:" + lemma->id);
        break;
      }
      if (lemma->required_sub && *lemma->required_sub != move.birational)
        v.push_back("sub-kind:" + lemma->id);
      auto forward = lemma->check(src, dst, move);
      if (forward.empty()) break;
      if (cert_detail::symmetric_birational(move.birational) &&
          lemma->check(dst, src, move).empty())
        break;
      cert_detail::append_prefixed(v, prefix, forward);
      break;
    }
    case MoveKind::Deformation: {
      if (move.family != move.lemma.id) v.push_back("family-lemma-mismatch");
      if (lemma->usage != LemmaUsage::DeformationFamily) {
        v.push_back("lemma-kind:" + lemma->id);
        break;
      }
      // Deformation equivalence is symmetric: either orientation may match.
      auto forward = lemma->check(src, dst, move);
      if (forward.empty() || lemma->check(dst, src, move).empty()) break;
      cert_detail::append_prefixed(v, prefix, forward);
      break;
    }
    case MoveKind::QuasiEtaleCover:
    case MoveKind::QuasiEtaleQuotient: {
      if (lemma->usage != LemmaUsage::QuasiEtale) {
        v.push_back("lemma-kind:" + lemma->id);
        break;
      }
      if (move.degree < 2) v.push_back("degree-minimum");
      if (move.group.empty()) v.push_back("group-name");
      // Normalize to covering orientation: `base` is the covered surface.
      const bool is_cover = move.kind == MoveKind::QuasiEtaleCover;
      const SurfaceDescriptor& base = is_cover ? src : dst;
      const SurfaceDescriptor& cover = is_cover ? dst : src;
      if (base.smooth() && cover.smooth()) {
        if (cover.e != move.degree * base.e) v.push_back("euler-unramified");
        if (cover.k2 != move.degree * base.k2) v.push_back("k2-unramified");
      }
      cert_detail::append_prefixed(v, prefix, lemma->check(base, cover, move));
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Whole-certificate verification, composition, reversal
// ---------------------------------------------------------------------------

inline VerifyReport verify_certificate(const Certificate& cert) {
  VerifyReport report;
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };

  if (cert.steps.empty()) {
    if (!(cert.first == cert.last)) fail("identity-endpoints");
  } else {
    if (!(cert.first == cert.steps.front().src)) fail("endpoint-first");
    if (!(cert.last == cert.steps.back().dst)) fail("endpoint-last");
    for (size_t i = 0; i + 1 < cert.steps.size(); ++i)
      if (!(cert.steps[i].dst == cert.steps[i + 1].src))
        fail("chain-break:" + std::to_string(i));
  }
  for (const auto& r : descriptor_violations(cert.first)) fail("invalid-first:" + r);
  for (const auto& r : descriptor_violations(cert.last)) fail("invalid-last:" + r);

  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    for (const auto& r : verify_move(s.src, s.move, s.dst))
      fail("step " + std::to_string(i) + ": " + r);
  }
  return report;
}

// Concatenation is defined when the endpoints meet; it is associative, and a
// composite of algebraic certificates is algebraic.
inline Certificate concat(const Certificate& a, const Certificate& b) {
  if (!(a.last == b.first))
    throw error(errc::invalid_argument, "certificate endpoints do not meet");
  Certificate out;
  out.first = a.first;
  out.last = b.last;
  out.steps = a.steps;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  out.mode = (a.mode == CertMode::Algebraic && b.mode == CertMode::Algebraic)
                 ? CertMode::Algebraic
                 : CertMode::Complex;
  return out;
}

inline Certificate reverse_certificate(const Certificate& cert) {
  Certificate out;
  out.first = cert.last;
  out.last = cert.first;
  out.mode = cert.mode;
  out.steps.reserve(cert.steps.size());
  for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it)
    out.steps.push_back({it->dst, reverse_move(it->move), it->src});
  return out;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------
//
//   qed-certificate v1
//   mode: complex
//   first: <hash16>
//   last: <hash16>
//   descriptor <hash16>: surface { ... }
//   ...
//   step 0: <hash16> --move[kind,params,lemma]--> <hash16>
//   ...
//
// Every hash is the canonical-field-order digest of the embedded descriptor
// record, so tampering with either a record or a step line is detected.

namespace cert_detail {

inline std::string move_token(const QedMove& m) {
  std::string out = "move[";
  out += move_kind_name(m.kind);
  out += ',';
  switch (m.kind) {
    case MoveKind::Birational:
      out += birational_kind_name(m.birational);
      break;
    case MoveKind::Deformation:
      out += m.family;
      break;
    case MoveKind::QuasiEtaleCover:
    case MoveKind::QuasiEtaleQuotient:
      out += std::to_string(m.degree);
      out += ',';
      out += m.group;
      break;
  }
  out += ',';
  out += m.lemma.id;
  out += ']';
  return out;
}

[[noreturn]] inline void bad_line(size_t line_no, const std::string& msg) {
  throw error(errc::syntax_error,
              "certificate:" + std::to_string(line_no) + ": " + msg);
}

inline std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Group labels may contain commas (e.g. matrix group names), so cover and
// quotient tokens are parsed positionally: kind, degree, group..., lemma.
inline QedMove parse_move_token(const std::string& token, size_t line_no) {
  if (token.size() < 7 || token.substr(0, 5) != "move[" || token.back() != ']')
    bad_line(line_no, "malformed move token");
  auto fields = split_fields(token.substr(5, token.size() - 6));
  if (fields.size() < 3) bad_line(line_no, "move token needs kind, params, lemma");
  const std::string& kind = fields.front();
  const std::string& lemma_id = fields.back();

  QedMove m;
  m.lemma.id = lemma_id;
  if (kind == "birational") {
    if (fields.size() != 3) bad_line(line_no, "birational move takes one parameter");
    m.kind = MoveKind::Birational;
    const std::string& sub = fields[1];
    if (sub == "minimal-model")
      m.birational = BirationalKind::MinimalModel;
    else if (sub == "blow-up")
      m.birational = BirationalKind::BlowUp;
    else if (sub == "blow-down")
      m.birational = BirationalKind::BlowDown;
    else if (sub == "small-contraction")
      m.birational = BirationalKind::SmallContraction;
    else
      bad_line(line_no, "unknown birational move parameter: " + sub);
  } else if (kind == "deformation") {
    if (fields.size() != 3) bad_line(line_no, "deformation move takes one parameter");
    m.kind = MoveKind::Deformation;
    m.family = fields[1];
  } else if (kind == "cover" || kind == "quotient") {
    if (fields.size() < 4) bad_line(line_no, "covering move needs degree and group");
    m.kind = kind == "cover" ? MoveKind::QuasiEtaleCover : MoveKind::QuasiEtaleQuotient;
    try {
      size_t used = 0;
      m.degree = std::stoll(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      bad_line(line_no, "bad covering degree: " + fields[1]);
    }
    std::string group = fields[2];
    for (size_t i = 3; i + 1 < fields.size(); ++i) group += "," + fields[i];
    m.group = group;
  } else {
    bad_line(line_no, "unknown move kind: " + kind);
  }
  if (const LemmaInfo* info = find_lemma(lemma_id)) m.lemma.statement = info->statement;
  return m;
}

}  // namespace cert_detail

inline std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "qed-certificate v1\n";
  out << "mode: " << cert_mode_name(cert.mode) << "\n";
  out << "first: " << descriptor_hash_hex(cert.first) << "\n";
  out << "last: " << descriptor_hash_hex(cert.last) << "\n";

  std::vector<std::string> order;
  std::map<std::string, std::string> records;
  auto record = [&](const SurfaceDescriptor& d) {
    std::string h = descriptor_hash_hex(d);
    if (!records.count(h)) {
      records.emplace(h, serialize_descriptor(d));
      order.push_back(h);
    }
  };
  record(cert.first);
  for (const auto& s : cert.steps) {
    record(s.src);
    record(s.dst);
  }
  record(cert.last);
  for (const auto& h : order) out << "descriptor " << h << ": " << records.at(h) << "\n";

  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    out << "step " << i << ": " << descriptor_hash_hex(s.src) << " --"
        << cert_detail::move_token(s.move) << "--> " << descriptor_hash_hex(s.dst)
        << "\n";
  }
  return out.str();
}

inline Certificate parse_certificate(const std::string& text) {
  using cert_detail::bad_line;

  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string cur;
  if (!next_line(cur) || cur != "qed-certificate v1")
    bad_line(line_no ? line_no : 1, "expected header 'qed-certificate v1'");

  Certificate cert;
  std::string first_hash, last_hash;
  bool saw_mode = false, saw_first = false, saw_last = false;
  std::map<std::string, SurfaceDescriptor> by_hash;
  struct RawStep {
    size_t index;
    std::string src, dst;
    QedMove move;
    size_t line_no;
  };
  std::vector<RawStep> raw_steps;

  while (next_line(cur)) {
    if (cur.rfind("mode: ", 0) == 0) {
      std::string m = cur.substr(6);
      if (m == "complex")
        cert.mode = CertMode::Complex;
      else if (m == "algebraic")
        cert.mode = CertMode::Algebraic;
      else
        bad_line(line_no, "unknown mode: " + m);
      saw_mode = true;
    } else if (cur.rfind("first: ", 0) == 0) {
      first_hash = cur.substr(7);
      saw_first = true;
    } else if (cur.rfind("last: ", 0) == 0) {
      last_hash = cur.substr(6);
      saw_last = true;
    } else if (cur.rfind("descriptor ", 0) == 0) {
      size_t colon = cur.find(": ", 11);
      if (colon == std::string::npos) bad_line(line_no, "malformed descriptor record");
      std::string h = cur.substr(11, colon - 11);
      SurfaceDescriptor d;
      try {
        d = parse_descriptor(cur.substr(colon + 2));
      } catch (const error& err) {
        bad_line(line_no, std::string("bad descriptor record: ") + err.what());
      }
      if (descriptor_hash_hex(d) != h)
        bad_line(line_no, "descriptor hash mismatch for " + h);
      by_hash.emplace(h, std::move(d));
    } else if (cur.rfind("step ", 0) == 0) {
      size_t colon = cur.find(": ", 5);
      if (colon == std::string::npos) bad_line(line_no, "malformed step line");
      size_t index = 0;
      try {
        index = static_cast<size_t>(std::stoull(cur.substr(5, colon - 5)));
      } catch (const std::exception&) {
        bad_line(line_no, "bad step index");
      }
      std::string rest = cur.substr(colon + 2);
      size_t arrow_in = rest.find(" --move[");
      size_t arrow_out = rest.rfind("]--> ");
      if (arrow_in == std::string::npos || arrow_out == std::string::npos ||
          arrow_out + 5 >= rest.size() || arrow_out < arrow_in)
        bad_line(line_no, "malformed step arrow");
      RawStep s;
      s.index = index;
      s.src = rest.substr(0, arrow_in);
      s.move = cert_detail::parse_move_token(
          rest.substr(arrow_in + 3, arrow_out + 1 - (arrow_in + 3)), line_no);
      s.dst = rest.substr(arrow_out + 5);
      s.line_no = line_no;
      raw_steps.push_back(std::move(s));
    } else {
      bad_line(line_no, "unrecognized line");
    }
  }

  if (!saw_mode) bad_line(line_no, "missing mode line");
  if (!saw_first || !saw_last) bad_line(line_no, "missing first/last lines");

  auto lookup = [&](const std::string& h, size_t at) -> const SurfaceDescriptor& {
    auto it = by_hash.find(h);
    if (it == by_hash.end()) bad_line(at, "undefined descriptor hash: " + h);
    return it->second;
  };

  cert.first = lookup(first_hash, line_no);
  cert.last = lookup(last_hash, line_no);

  std::sort(raw_steps.begin(), raw_steps.end(),
            [](const RawStep& a, const RawStep& b) { return a.index < b.index; });
  for (size_t i = 0; i < raw_steps.size(); ++i) {
    if (raw_steps[i].index != i) bad_line(raw_steps[i].line_no, "step indices not 0..k-1");
    cert.steps.push_back({lookup(raw_steps[i].src, raw_steps[i].line_no),
                          raw_steps[i].move,
                          lookup(raw_steps[i].dst, raw_steps[i].line_no)});
  }

  // Structural coherence of the parsed chain (moves are checked separately).
  if (cert.steps.empty()) {
    if (!(cert.first == cert.last)) bad_line(line_no, "empty chain with distinct endpoints");
  } else {
    if (!(cert.first == cert.steps.front().src)) bad_line(line_no, "first does not match step 0");
    if (!(cert.last == cert.steps.back().dst)) bad_line(line_no, "last does not match final step");
    for (size_t i = 0; i + 1 < cert.steps.size(); ++i)
      if (!(cert.steps[i].dst == cert.steps[i + 1].src))
        bad_line(line_no, "steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                              " do not chain");
  }
  return cert;
}

}  // namespace qed
