#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qed/errors.hpp"
#include "qed/invariants.hpp"

namespace qed {

/**
 * Single-line text form of a SurfaceDescriptor, e.g.
 *
 *   surface { kod=1 b1=2 q=1 pg=1 k2=0 e=0 minimal=true tag=ProperlyElliptic
 *             fibration { g=1 mult=[2,3] section=false fibers=[] efib=0 } }
 *
 * Optional keys: sing=[A1,D4,...] for a singular model, qclass="..." for the
 * ramification-class string of a bidisk quotient. Parsing ignores key order
 * and whitespace; serialization is canonical (fixed key order, no extras),
 * so equal descriptors always serialize identically.
 */

inline std::string serialize_descriptor(const SurfaceDescriptor& d) {
  std::ostringstream os;
  os << "surface { kod=" << kodaira_dim_name(d.kod) << " b1=" << d.b1 << " q=" << d.q
     << " pg=" << d.pg << " k2=" << d.k2 << " e=" << d.e
     << " minimal=" << (d.minimal ? "true" : "false")
     << " tag=" << surface_class_name(d.class_tag);
  auto list = [&os](const std::vector<RdpType>& ts) {
    os << '[';
    for (size_t i = 0; i < ts.size(); ++i) os << (i ? "," : "") << rdp_type_name(ts[i]);
    os << ']';
  };
  if (!d.singularities.empty()) {
    os << " sing=";
    list(d.singularities);
  }
  if (d.polydisk_class) os << " qclass=\"" << *d.polydisk_class << '"';
  if (d.fibration) {
    const auto& f = *d.fibration;
    os << " fibration { g=" << f.base_genus << " mult=[";
    for (size_t i = 0; i < f.multiplicities.size(); ++i)
      os << (i ? "," : "") << f.multiplicities[i];
    os << "] section=" << (f.has_section ? "true" : "false") << " fibers=";
    list(f.singular_fibers);
    os << " efib=" << f.euler_contribution << " }";
  }
  os << " }";
  return os.str();
}

namespace detail {

struct Token {
  enum Kind { Ident, Number, String, Punct, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

class DescriptorLexer {
 public:
  explicit DescriptorLexer(const std::string& src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ',' || c == '=') {
      t.kind = Token::Punct;
      t.text = c;
      advance();
      return t;
    }
    if (c == '"') {
      advance();
      t.kind = Token::String;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        t.text += src_[pos_];
        advance();
      }
      if (pos_ >= src_.size()) fail(t, "unterminated string");
      advance();
      return t;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      t.text += c;
      advance();
      if (c == '-' && src_.compare(pos_, 3, "inf") == 0) {
        t.kind = Token::Ident;  // the dimension value "-inf"
        t.text = "-inf";
        advance();
        advance();
        advance();
        return t;
      }
      t.kind = Token::Number;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text += src_[pos_];
        advance();
      }
      if (t.text == "-") fail(t, "expected digits after '-'");
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t.text += src_[pos_];
        advance();
      }
      return t;
    }
    fail(t, std::string("unexpected character '") + c + "'");
    return t;
  }

  [[noreturn]] static void fail(const Token& at, const std::string& what) {
    throw error(errc::syntax_error, "descriptor:" + std::to_string(at.line) + ":" +
                                        std::to_string(at.col) + ": " + what);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class DescriptorParser {
 public:
  explicit DescriptorParser(const std::string& src) : lex_(src) { shift(); }

  SurfaceDescriptor parse() {
    expect_ident("surface");
    expect_punct("{");
    SurfaceDescriptor d;
    std::set<std::string> seen;
    while (!at_punct("}")) {
      Token key = expect(Token::Ident, "key");
      if (!seen.insert(key.text).second)
        DescriptorLexer::fail(key, "duplicate key '" + key.text + "'");
      if (key.text == "fibration") {
        d.fibration = parse_fibration();
        continue;
      }
      expect_punct("=");
      if (key.text == "kod") {
        d.kod = parse_kod();
      } else if (key.text == "b1") {
        d.b1 = parse_number();
      } else if (key.text == "q") {
        d.q = parse_number();
      } else if (key.text == "pg") {
        d.pg = parse_number();
      } else if (key.text == "k2") {
        d.k2 = parse_number();
      } else if (key.text == "e") {
        d.e = parse_number();
      } else if (key.text == "minimal") {
        d.minimal = parse_bool();
      } else if (key.text == "tag") {
        d.class_tag = parse_tag();
      } else if (key.text == "sing") {
        d.singularities = parse_rdp_list();
      } else if (key.text == "qclass") {
        d.polydisk_class = expect(Token::String, "quoted class string").text;
      } else {
        DescriptorLexer::fail(key, "unknown key '" + key.text + "'");
      }
    }
    shift();  // '}'
    if (cur_.kind != Token::End) DescriptorLexer::fail(cur_, "trailing input");
    for (const char* k : {"kod", "b1", "q", "pg", "k2", "e", "minimal", "tag"})
      if (!seen.count(k))
        throw error(errc::syntax_error, std::string("descriptor: missing key '") + k + "'");
    return make_descriptor(d);
  }

 private:
  FibrationData parse_fibration() {
    expect_punct("{");
    FibrationData f;
    std::set<std::string> seen;
    while (!at_punct("}")) {
      Token key = expect(Token::Ident, "key");
      if (!seen.insert(key.text).second)
        DescriptorLexer::fail(key, "duplicate key '" + key.text + "'");
      expect_punct("=");
      if (key.text == "g") {
        f.base_genus = parse_number();
      } else if (key.text == "mult") {
        expect_punct("[");
        while (!at_punct("]")) {
          f.multiplicities.push_back(parse_number());
          if (!at_punct("]")) expect_punct(",");
        }
        shift();
      } else if (key.text == "section") {
        f.has_section = parse_bool();
      } else if (key.text == "fibers") {
        f.singular_fibers = parse_rdp_list();
      } else if (key.text == "efib") {
        f.euler_contribution = parse_number();
      } else {
        DescriptorLexer::fail(key, "unknown fibration key '" + key.text + "'");
      }
    }
    shift();  // '}'
    if (!seen.count("g")) throw error(errc::syntax_error, "descriptor: missing fibration key 'g'");
    return f;
  }

  KodairaDim parse_kod() {
    Token t = cur_;
    if (t.kind != Token::Number && t.kind != Token::Ident)
      DescriptorLexer::fail(t, "expected kodaira dimension");
    std::string s = t.text;
    shift();
    if (s == "-inf") return KodairaDim::MinusInf;
    if (s == "0") return KodairaDim::Zero;
    if (s == "1") return KodairaDim::One;
    if (s == "2") return KodairaDim::Two;
    DescriptorLexer::fail(t, "bad kodaira dimension '" + s + "'");
  }

  SurfaceClass parse_tag() {
    Token t = expect(Token::Ident, "class tag");
    for (auto c : {SurfaceClass::Ruled, SurfaceClass::Torus, SurfaceClass::K3,
                   SurfaceClass::Enriques, SurfaceClass::Hyperelliptic,
                   SurfaceClass::KodairaPrimary, SurfaceClass::KodairaSecondary,
                   SurfaceClass::ProperlyElliptic, SurfaceClass::GeneralType,
                   SurfaceClass::PolydiskQuotient})
      if (t.text == surface_class_name(c)) return c;
    DescriptorLexer::fail(t, "unknown class tag '" + t.text + "'");
  }

  std::vector<RdpType> parse_rdp_list() {
    expect_punct("[");
    std::vector<RdpType> out;
    while (!at_punct("]")) {
      Token t = expect(Token::Ident, "singularity mark");
      RdpType r;
      r.kind = t.text[0];
      if (t.text.size() < 2) DescriptorLexer::fail(t, "bad mark '" + t.text + "'");
      try {
        r.n = std::stoi(t.text.substr(1));
      } catch (const std::exception&) {
        DescriptorLexer::fail(t, "bad mark '" + t.text + "'");
      }
      if (!rdp_type_valid(r)) DescriptorLexer::fail(t, "bad mark '" + t.text + "'");
      out.push_back(r);
      if (!at_punct("]")) expect_punct(",");
    }
    shift();
    return out;
  }

  long long parse_number() {
    Token t = expect(Token::Number, "integer");
    return std::stoll(t.text);
  }

  bool parse_bool() {
    Token t = expect(Token::Ident, "'true' or 'false'");
    if (t.text == "true") return true;
    if (t.text == "false") return false;
    DescriptorLexer::fail(t, "expected 'true' or 'false', got '" + t.text + "'");
  }

  Token expect(Token::Kind k, const std::string& what) {
    if (cur_.kind != k)
      DescriptorLexer::fail(cur_, "expected " + what + (cur_.kind == Token::End
                                                            ? " before end of input"
                                                            : ", got '" + cur_.text + "'"));
    Token t = cur_;
    shift();
    return t;
  }

  void expect_ident(const std::string& s) {
    if (cur_.kind != Token::Ident || cur_.text != s)
      DescriptorLexer::fail(cur_, "expected '" + s + "'");
    shift();
  }

  void expect_punct(const std::string& s) {
    if (cur_.kind != Token::Punct || cur_.text != s)
      DescriptorLexer::fail(cur_, "expected '" + s + "'");
    shift();
  }

  bool at_punct(const std::string& s) const { return cur_.kind == Token::Punct && cur_.text == s; }

  void shift() { cur_ = lex_.next(); }

  DescriptorLexer lex_;
  Token cur_;
};

}  // namespace detail

inline SurfaceDescriptor parse_descriptor(const std::string& text) {
  return detail::DescriptorParser(text).parse();
}

// FNV-1a, 64 bit: stable content hash used to name chain endpoints.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t descriptor_hash(const SurfaceDescriptor& d) {
  return fnv1a64(serialize_descriptor(d));
}

inline std::string descriptor_hash_hex(const SurfaceDescriptor& d) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = descriptor_hash(d);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace qed
