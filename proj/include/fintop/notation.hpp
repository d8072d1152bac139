#pragma once

// Brace-and-arrow notation for finite spaces and maps.
//
//   space  := '{' [chain (',' chain)*] '}'
//   chain  := label (rel label)*
//   rel    := '>' | '<' | '<->' | '='
//   map    := space '->' space
//   label  := [A-Za-z0-9_'~*-]+
//
// "a>b" puts b in the closure of a, "a<b" puts a in the closure of b, "a<->b"
// does both, and "a=b" names one point twice. Unicode arrows are accepted as
// aliases. Whitespace is ignored.
//
// In a map "D -> C" every point and arrow of D is implicitly part of C as
// well, and each point of D goes to the point of C carrying its label, so
// "{a} -> {b}" is the inclusion of a point into the discrete space {a,b}.

#include <string>
#include <string_view>
#include <vector>

#include "fintop/morphism.hpp"
#include "fintop/space.hpp"

namespace fintop {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the input.
  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

enum class Relator { down_right, down_left, bidirectional, glue };

struct Chain {
  std::vector<std::string> labels;
  std::vector<Relator> relators;  // relators[i] sits between labels[i] and labels[i + 1]
};

struct SpaceExpr {
  std::vector<Chain> chains;
};

struct MapExpr {
  SpaceExpr domain;
  SpaceExpr codomain;
};

SpaceExpr parse_space_expr(std::string_view text);
MapExpr parse_map_expr(std::string_view text);

/// Points in order of first mention; glued labels become one point labelled "a=b".
FiniteSpace to_space(const SpaceExpr& expr);

FiniteSpace parse_space(std::string_view text);
ContinuousMap parse_map(std::string_view text);

/// Valid notation for the space. Labels are kept when they can be re-parsed,
/// otherwise points are named a, b, c, ... (or "*" for a single point).
std::string format_space(const FiniteSpace& space);
/// Notation that parse_map turns back into the same map up to relabeling.
std::string format_map(const ContinuousMap& map);

/// True when the text is a single label accepted by the grammar.
bool is_valid_label(std::string_view label);

}  // namespace fintop
