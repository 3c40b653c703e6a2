#include "pbij/parse.hpp"

#include <cctype>

namespace pbij {
namespace {

// Shared cursor for the tiny hand-rolled grammars. Skips whitespace
// between tokens.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }
  bool try_keyword(std::string_view kw) {
    skip_ws();
    if (text.substr(pos, kw.size()) == kw) {
      pos += kw.size();
      return true;
    }
    return false;
  }
  void expect_keyword(std::string_view kw) {
    if (!try_keyword(kw))
      throw ParseError("expected '" + std::string(kw) + "'", pos);
  }
  unsigned number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected a number", pos);
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (v > 0xffffffffUL) throw ParseError("number too large", pos);
      ++pos;
    }
    return static_cast<unsigned>(v);
  }
};

std::vector<unsigned> number_list_in_braces(Cursor& c) {
  std::vector<unsigned> out;
  c.expect('{');
  if (!c.try_consume('}')) {
    do {
      out.push_back(c.number());
    } while (c.try_consume(','));
    c.expect('}');
  }
  return out;
}

}  // namespace

PartialBijection parse_pbij(std::string_view text, GroundSet ground) {
  Cursor c{text};
  std::vector<PartialBijection::Pair> pairs;
  c.expect('{');
  if (!c.try_consume('}')) {
    do {
      unsigned x = c.number();
      c.expect('-');
      c.expect('>');
      unsigned y = c.number();
      pairs.emplace_back(x, y);
    } while (c.try_consume(','));
    c.expect('}');
  }
  if (c.try_consume(';')) {
    c.expect_keyword("id");
    c.expect_keyword("from");
    unsigned start = c.number();
    std::vector<unsigned> punctures;
    if (c.try_keyword("except")) punctures = number_list_in_braces(c);
    if (!c.at_end()) throw ParseError("trailing input", c.pos);
    try {
      return PartialBijection(ground, std::move(pairs),
                              PartialBijection::Tail{start, std::move(punctures)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), c.pos);
    }
  }
  if (!c.at_end()) throw ParseError("trailing input", c.pos);
  try {
    return PartialBijection(ground, std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), c.pos);
  }
}

NatSet parse_nat_set(std::string_view text) {
  Cursor c{text};
  bool cofinite = c.try_consume('~');
  auto pts = number_list_in_braces(c);
  if (!c.at_end()) throw ParseError("trailing input", c.pos);
  return cofinite ? NatSet::cofinite(std::move(pts))
                  : NatSet::finite(std::move(pts));
}

std::vector<unsigned> parse_permutation_images(std::string_view text) {
  Cursor c{text};
  std::vector<unsigned> images;
  c.expect('[');
  if (!c.try_consume(']')) {
    do {
      images.push_back(c.number());
    } while (c.try_consume(','));
    c.expect(']');
  }
  if (!c.at_end()) throw ParseError("trailing input", c.pos);
  return images;
}

}  // namespace pbij
