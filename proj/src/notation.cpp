#include "fintop/notation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fintop {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      message_(message),
      position_(position) {}

namespace {

enum class TokenKind { lbrace, rbrace, comma, relator, mapsto, label, end };

struct Token {
  Token(TokenKind k, std::size_t pos, Relator r = Relator::glue, std::string t = {})
      : kind(k), position(pos), relator(r), text(std::move(t)) {}
  TokenKind kind;
  std::size_t position;
  Relator relator;
  std::string text;
};

bool is_label_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '\'' ||
         c == '~' || c == '*' || c == '-';
}

// Multi-byte aliases.
constexpr std::string_view kSearrow = "\xE2\x86\x98";   // south-east arrow
constexpr std::string_view kSwarrow = "\xE2\x86\x99";   // south-west arrow
constexpr std::string_view kLrarrow = "\xE2\x86\x94";   // left-right arrow
constexpr std::string_view kLongTo = "\xE2\x9F\xB6";    // long right arrow
constexpr std::string_view kOverline = "\xE2\x80\xBE";  // overline, read as '~'

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {TokenKind::end, start};
    const char c = text_[pos_];
    switch (c) {
      case '{': ++pos_; return {TokenKind::lbrace, start};
      case '}': ++pos_; return {TokenKind::rbrace, start};
      case ',': ++pos_; return {TokenKind::comma, start};
      case '>': ++pos_; return {TokenKind::relator, start, Relator::down_right};
      case '=': ++pos_; return {TokenKind::relator, start, Relator::glue};
      case '<':
        if (text_.substr(pos_, 3) == "<->") {
          pos_ += 3;
          return {TokenKind::relator, start, Relator::bidirectional};
        }
        ++pos_;
        return {TokenKind::relator, start, Relator::down_left};
      default: break;
    }
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return {TokenKind::mapsto, start};
    }
    if (consume(kSearrow)) return {TokenKind::relator, start, Relator::down_right};
    if (consume(kSwarrow)) return {TokenKind::relator, start, Relator::down_left};
    if (consume(kLrarrow)) return {TokenKind::relator, start, Relator::bidirectional};
    if (consume(kLongTo)) return {TokenKind::mapsto, start};
    std::string label;
    while (pos_ < text_.size()) {
      if (consume(kOverline)) {
        label += '~';
        continue;
      }
      const char d = text_[pos_];
      if (!is_label_char(d)) break;
      if (d == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
      label += d;
      ++pos_;
    }
    if (label.empty()) throw ParseError(std::string("unexpected character '") + c + "'", start);
    return {TokenKind::label, start, Relator::glue, std::move(label)};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool consume(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  SpaceExpr space() {
    expect(TokenKind::lbrace, "expected '{'");
    SpaceExpr expr;
    if (current_.kind == TokenKind::rbrace) {
      advance();
      return expr;
    }
    expr.chains.push_back(chain());
    while (current_.kind == TokenKind::comma) {
      advance();
      expr.chains.push_back(chain());
    }
    expect(TokenKind::rbrace, "expected ',' or '}'");
    return expr;
  }

  void mapsto() { expect(TokenKind::mapsto, "expected '->'"); }

  void finish() {
    if (current_.kind != TokenKind::end) throw ParseError("unexpected trailing input", current_.position);
  }

 private:
  Chain chain() {
    Chain c;
    c.labels.push_back(label());
    while (current_.kind == TokenKind::relator) {
      c.relators.push_back(current_.relator);
      advance();
      c.labels.push_back(label());
    }
    return c;
  }

  std::string label() {
    if (current_.kind != TokenKind::label) throw ParseError("expected a point label", current_.position);
    std::string text = std::move(current_.text);
    advance();
    return text;
  }

  void expect(TokenKind kind, const char* message) {
    if (current_.kind != kind) throw ParseError(message, current_.position);
    advance();
  }

  void advance() { current_ = lexer_.next(); }

  Lexer lexer_;
  Token current_{TokenKind::end, 0};
};

// Labels glued into classes, with the arrows between them.
struct Resolved {
  std::vector<std::string> class_labels;           // one per point, "a=b" when glued
  std::map<std::string, PointIndex> point_of;      // label -> point
  std::vector<Arrow> arrows;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

Resolved resolve(const std::vector<const Chain*>& chains) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> name_id;
  UnionFind uf;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = name_id.try_emplace(label, names.size());
    if (inserted) {
      names.push_back(label);
      uf.add();
    }
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> raw_arrows;
  for (const Chain* c : chains) {
    for (const auto& l : c->labels) id_of(l);
    for (std::size_t i = 0; i < c->relators.size(); ++i) {
      const std::size_t a = id_of(c->labels[i]);
      const std::size_t b = id_of(c->labels[i + 1]);
      switch (c->relators[i]) {
        case Relator::down_right: raw_arrows.emplace_back(a, b); break;
        case Relator::down_left: raw_arrows.emplace_back(b, a); break;
        case Relator::bidirectional:
          raw_arrows.emplace_back(a, b);
          raw_arrows.emplace_back(b, a);
          break;
        case Relator::glue: uf.unite(a, b); break;
      }
    }
  }
  Resolved r;
  std::map<std::size_t, PointIndex> point_of_root;
  for (std::size_t id = 0; id < names.size(); ++id) {
    const std::size_t root = uf.find(id);
    auto [it, inserted] = point_of_root.try_emplace(root, r.class_labels.size());
    if (inserted) {
      r.class_labels.push_back(names[id]);
    } else {
      r.class_labels[it->second] += "=" + names[id];
    }
    r.point_of[names[id]] = it->second;
  }
  if (r.class_labels.size() > kMaxPoints) throw TopologyError("too many points in expression");
  for (auto [a, b] : raw_arrows) r.arrows.emplace_back(point_of_root[uf.find(a)], point_of_root[uf.find(b)]);
  return r;
}

std::vector<std::string> split_glued(const std::string& label) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto eq = label.find('=', start);
    parts.push_back(label.substr(start, eq == std::string::npos ? std::string::npos : eq - start));
    if (eq == std::string::npos) break;
    start = eq + 1;
  }
  return parts;
}

std::vector<std::string> generated_labels(std::size_t n) {
  std::vector<std::string> out;
  if (n == 1) return {"*"};
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  }
  return out;
}

// Labels usable in output: each '='-separated part valid and no part reused.
std::vector<std::string> printable_labels(const FiniteSpace& space) {
  if (!space.has_labels()) return generated_labels(space.size());
  std::set<std::string> seen;
  for (const auto& label : space.labels()) {
    for (const auto& part : split_glued(label)) {
      if (!is_valid_label(part) || part.back() == '-' || !seen.insert(part).second) {
        return generated_labels(space.size());
      }
    }
  }
  return space.labels();
}

std::vector<std::string> format_chains(const FiniteSpace& space, const std::vector<std::string>& names) {
  const std::size_t n = space.size();
  std::vector<PointIndex> rep(n);
  for (PointIndex x = 0; x < n; ++x) {
    rep[x] = static_cast<PointIndex>(std::countr_zero(space.closure_bits(x) & space.neighbourhood_bits(x)));
  }
  const auto arrows = generating_arrows(space);
  std::vector<bool> mentioned(n, false);
  for (auto [a, b] : arrows) mentioned[a] = mentioned[b] = true;
  std::vector<std::string> chains;
  for (PointIndex r = 0; r < n; ++r) {
    if (rep[r] != r) continue;
    std::string klass = names[r];
    for (PointIndex x = r + 1; x < n; ++x) {
      if (rep[x] == r) klass += "<->" + names[x];
    }
    if (klass != names[r]) chains.push_back(klass);
    for (auto [a, b] : arrows) {
      if (a == r && rep[b] == b && rep[a] == a && !space.leq(b, a)) chains.push_back(names[a] + ">" + names[b]);
    }
    if (!mentioned[r]) chains.push_back(names[r]);
  }
  return chains;
}

std::string join_chains(const std::vector<std::string>& chains) {
  std::string out = "{";
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (i > 0) out += ", ";
    out += chains[i];
  }
  return out + "}";
}

}  // namespace

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (!is_label_char(c)) return false;
  }
  return label.find("->") == std::string_view::npos;
}

SpaceExpr parse_space_expr(std::string_view text) {
  Parser p(text);
  SpaceExpr expr = p.space();
  p.finish();
  return expr;
}

MapExpr parse_map_expr(std::string_view text) {
  Parser p(text);
  MapExpr expr;
  expr.domain = p.space();
  p.mapsto();
  expr.codomain = p.space();
  p.finish();
  return expr;
}

FiniteSpace to_space(const SpaceExpr& expr) {
  std::vector<const Chain*> chains;
  for (const auto& c : expr.chains) chains.push_back(&c);
  Resolved r = resolve(chains);
  const std::size_t n = r.class_labels.size();
  return build_space(n, r.arrows, std::move(r.class_labels));
}

FiniteSpace parse_space(std::string_view text) { return to_space(parse_space_expr(text)); }

ContinuousMap parse_map(std::string_view text) {
  const MapExpr expr = parse_map_expr(text);
  std::vector<const Chain*> dom_chains;
  for (const auto& c : expr.domain.chains) dom_chains.push_back(&c);
  Resolved dom = resolve(dom_chains);

  auto dom_space = share(build_space(dom.class_labels.size(), dom.arrows, dom.class_labels));

  // "{*}" is the one-point space, the target of the map collapsing everything.
  const auto& cc = expr.codomain.chains;
  if (cc.size() == 1 && cc[0].labels.size() == 1 && cc[0].labels[0] == "*" && !dom.point_of.contains("*")) {
    return constant_map(std::move(dom_space), share(point_space()), 0);
  }

  // Otherwise the codomain carries its own material followed by everything in the domain.
  std::vector<const Chain*> cod_chains;
  for (const auto& c : expr.codomain.chains) cod_chains.push_back(&c);
  for (const auto& c : expr.domain.chains) cod_chains.push_back(&c);
  Resolved cod = resolve(cod_chains);

  std::vector<PointIndex> image(dom.class_labels.size());
  for (const auto& [label, point] : dom.point_of) image[point] = cod.point_of.at(label);

  auto cod_space = share(build_space(cod.class_labels.size(), cod.arrows, cod.class_labels));
  return ContinuousMap(std::move(dom_space), std::move(cod_space), std::move(image));
}

std::string format_space(const FiniteSpace& space) {
  return join_chains(format_chains(space, printable_labels(space)));
}

std::string format_map(const ContinuousMap& map) {
  const FiniteSpace& dom = map.domain();
  const FiniteSpace& cod = map.codomain();
  const auto dom_names = printable_labels(dom);
  auto cod_names = printable_labels(cod);

  const bool dom_uses_star = std::any_of(dom_names.begin(), dom_names.end(), [](const std::string& name) {
    const auto parts = split_glued(name);
    return std::find(parts.begin(), parts.end(), "*") != parts.end();
  });
  if (cod.size() == 1 && cod_names[0] == "*" && !dom_uses_star) {
    return join_chains(format_chains(dom, dom_names)) + " -> {*}";
  }

  // A domain name may reuse a codomain name only when it names the image point.
  auto clashes = [&]() {
    std::map<std::string, PointIndex> cod_part_owner;
    for (PointIndex c = 0; c < cod.size(); ++c) {
      for (const auto& part : split_glued(cod_names[c])) cod_part_owner[part] = c;
    }
    for (PointIndex x = 0; x < dom.size(); ++x) {
      for (const auto& part : split_glued(dom_names[x])) {
        auto it = cod_part_owner.find(part);
        if (it != cod_part_owner.end() && it->second != map(x)) return true;
      }
    }
    return false;
  };
  while (clashes()) {
    for (auto& name : cod_names) {
      std::string renamed;
      for (const auto& part : split_glued(name)) renamed += (renamed.empty() ? "" : "=") + part + "'";
      name = renamed;
    }
  }

  std::vector<std::string> cod_chains = format_chains(cod, cod_names);
  std::set<std::string> cod_parts;
  for (const auto& name : cod_names) {
    for (const auto& part : split_glued(name)) cod_parts.insert(part);
  }
  std::map<PointIndex, std::string> glue;
  for (PointIndex x = 0; x < dom.size(); ++x) {
    for (const auto& part : split_glued(dom_names[x])) {
      if (cod_parts.count(part) != 0) continue;
      auto [it, inserted] = glue.try_emplace(map(x), cod_names[map(x)]);
      it->second += "=" + part;
    }
  }
  for (const auto& [point, chain] : glue) cod_chains.push_back(chain);

  return join_chains(format_chains(dom, dom_names)) + " -> " + join_chains(cod_chains);
}

}  // namespace fintop
