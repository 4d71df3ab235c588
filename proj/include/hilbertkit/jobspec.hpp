#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbertkit/ideal.hpp"
#include "hilbertkit/parse.hpp"

namespace hk {

// Input format:
//
//   ring { char = 32003; vars = x, y; }
//   ideal I = x^6, y^6, x^5*y + x^2*y^4;
//   reduction J1 = x^6, x^5*y + y^6;
//
// A reduction block belongs to the ideal defined last before it. '#' starts
// a comment that runs to the end of the line.

struct PolyText {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ReductionDef {
  std::string name;
  std::vector<PolyText> gens;
  std::size_t line = 1;
};

struct IdealDef {
  std::string name;
  std::vector<PolyText> gens;
  std::vector<ReductionDef> reductions;
  std::size_t line = 1;
};

struct JobSpec {
  std::optional<std::uint32_t> characteristic;  // unset: caller's default
  std::vector<std::string> vars;
  std::vector<IdealDef> ideals;
};

namespace detail {

class JobScanner {
 public:
  explicit JobScanner(std::string_view text) : text_(text) {}

  JobSpec parse() {
    JobSpec spec;
    skip();
    expect_word("ring");
    ring_block(spec);
    for (skip(); !at_end(); skip()) {
      const std::size_t l = line_, c = col_;
      const std::string kw = word("'ideal' or 'reduction'");
      if (kw == "ideal") {
        IdealDef d;
        d.line = l;
        d.name = word("ideal name");
        for (const auto& other : spec.ideals)
          if (other.name == d.name) fail("ideal '" + d.name + "' defined twice", l, c);
        expect('=');
        d.gens = poly_list("ideal '" + d.name + "'");
        spec.ideals.push_back(std::move(d));
      } else if (kw == "reduction") {
        if (spec.ideals.empty()) fail("reduction before any ideal", l, c);
        ReductionDef r;
        r.line = l;
        r.name = word("reduction name");
        for (const auto& other : spec.ideals.back().reductions)
          if (other.name == r.name) fail("reduction '" + r.name + "' defined twice", l, c);
        expect('=');
        r.gens = poly_list("reduction '" + r.name + "'");
        spec.ideals.back().reductions.push_back(std::move(r));
      } else {
        fail("expected 'ideal' or 'reduction', found '" + kw + "'", l, c);
      }
    }
    if (spec.ideals.empty()) fail("no ideal defined", line_, col_);
    return spec;
  }

 private:
  void ring_block(JobSpec& spec) {
    expect('{');
    bool have_vars = false;
    for (skip(); peek() != '}'; skip()) {
      if (at_end()) fail("unterminated ring block", line_, col_);
      const std::size_t l = line_, c = col_;
      const std::string key = word("ring field");
      expect('=');
      if (key == "char") {
        skip();
        const std::size_t vl = line_, vc = col_;
        std::uint64_t v = 0;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer characteristic", vl, vc);
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
          if (v > 0xFFFFFFFFull) fail("characteristic too large", vl, vc);
          advance();
        }
        spec.characteristic = static_cast<std::uint32_t>(v);
      } else if (key == "vars") {
        spec.vars.push_back(word("variable name"));
        for (skip(); peek() == ','; skip()) {
          advance();
          spec.vars.push_back(word("variable name"));
        }
        have_vars = true;
      } else {
        fail("unknown ring field '" + key + "'", l, c);
      }
      expect(';');
    }
    advance();
    if (!have_vars) fail("ring block without vars", line_, col_);
  }

  std::vector<PolyText> poly_list(const std::string& what) {
    std::vector<PolyText> out;
    skip();
    const std::size_t l0 = line_, c0 = col_;
    PolyText cur{{}, line_, col_};
    int depth = 0;
    auto flush = [&] {
      std::size_t end = cur.text.find_last_not_of(" \t\r\n");
      cur.text = end == std::string::npos ? std::string() : cur.text.substr(0, end + 1);
      if (cur.text.empty()) {
        if (!out.empty() || peek() == ',') fail("empty generator in " + what, line_, col_);
      } else {
        out.push_back(cur);
      }
    };
    for (;;) {
      if (at_end()) fail("missing ';' after " + what, line_, col_);
      const char ch = peek();
      if (ch == '#') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      if (depth == 0 && (ch == ',' || ch == ';')) {
        flush();
        advance();
        if (ch == ';') break;
        skip();
        cur = {{}, line_, col_};
        continue;
      }
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (cur.text.empty() && std::isspace(static_cast<unsigned char>(ch))) {
        advance();
        cur.line = line_;
        cur.column = col_;
        continue;
      }
      cur.text += ch == '\n' || ch == '\r' ? ' ' : ch;
      advance();
    }
    if (out.empty()) fail("no generators in " + what, l0, c0);
    return out;
  }

  std::string word(const std::string& what) {
    skip();
    const char ch = peek();
    if (!(std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'))
      fail("expected " + what, line_, col_);
    std::string w;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      w += peek();
      advance();
    }
    return w;
  }

  void expect_word(const std::string& w) {
    const std::size_t l = line_, c = col_;
    if (word("'" + w + "'") != w) fail("expected '" + w + "'", l, c);
  }

  void expect(char ch) {
    skip();
    if (peek() != ch) fail(std::string("expected '") + ch + "'", line_, col_);
    advance();
  }

  void skip() {
    while (!at_end()) {
      if (peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] static void fail(const std::string& what, std::size_t l, std::size_t c) { throw ParseError(what, l, c); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace detail

struct LoadedIdeal {
  std::string name;
  Ideal ideal;
  std::vector<std::pair<std::string, Ideal>> reductions;
};

/// Builds the ring and parses every generator.
inline std::vector<LoadedIdeal> instantiate(const JobSpec& spec, std::uint32_t characteristic) {
  RingPtr ring;
  try {
    ring = make_ring(characteristic, spec.vars);
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  auto polys = [&](const std::vector<PolyText>& gens) {
    std::vector<Polynomial> out;
    for (const auto& g : gens) out.push_back(parse_poly(g.text, ring->base(), g.line, g.column));
    return out;
  };
  std::vector<LoadedIdeal> out;
  for (const auto& d : spec.ideals) {
    LoadedIdeal li{d.name, Ideal(ring, polys(d.gens)), {}};
    for (const auto& r : d.reductions) li.reductions.emplace_back(r.name, Ideal(ring, polys(r.gens)));
    out.push_back(std::move(li));
  }
  return out;
}

/// Validated job; the generators are parsed once against the declared ring
/// (or `default_char` when the file gives none) so that unknown variables
/// and syntax errors surface here.
inline JobSpec parse_input(std::string_view text, std::uint32_t default_char = 32003) {
  JobSpec spec = detail::JobScanner(text).parse();
  instantiate(spec, spec.characteristic.value_or(default_char));
  return spec;
}

}  // namespace hk
