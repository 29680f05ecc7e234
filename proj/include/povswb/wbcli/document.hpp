#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "povswb/exactnum/matrix.hpp"
#include "povswb/order/space.hpp"
#include "povswb/semilin/semilinear_set.hpp"
#include "povswb/seq/sequence.hpp"

namespace povswb::wbcli {

using exact::Matrix;
using exact::Rational;
using exact::Vector;
using semilin::SemiLinearSet;

/// A parse failure at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct SpaceDecl {
  std::string name;
  std::size_t dim = 0;
  SemiLinearSet wedge = SemiLinearSet(0);
  std::size_t line = 0;
};

struct VectorDecl {
  std::string name;
  std::string space;
  Vector value;
};

/// Not necessarily homogeneous.
struct SetDecl {
  std::string name;
  std::string space;
  SemiLinearSet set = SemiLinearSet(0);
};

struct MapDecl {
  std::string name;
  std::string domain;
  std::string codomain;
  Matrix matrix;
};

struct SeqDecl {
  std::string name;
  std::optional<seq::SeqClass> ambient;
  seq::SymbolicSequence value;
};

/// `expect NAME property = value`, checked by the check command.
struct Expectation {
  std::string subject;
  std::string property;
  std::string value;
  std::size_t line = 0;
};

struct WorkbenchFile {
  std::vector<SpaceDecl> spaces;
  std::vector<VectorDecl> vectors;
  std::vector<SetDecl> sets;
  std::vector<MapDecl> maps;
  std::vector<SeqDecl> sequences;
  std::vector<Expectation> expectations;

  const SpaceDecl* find_space(std::string_view name) const;
  const MapDecl* find_map(std::string_view name) const;
  order::PreOrderedSpace space(std::string_view name) const;
};

/// Grammar, one declaration per line. Brackets and parentheses may span
/// lines, as may a line starting with | or &; `#` starts a comment.
///
///   space X dim 2
///   wedge X.pos := (x1 > 0) | (x1 = 0 & x2 >= 0)
///   wedge W := x1 >= 0 & x2 >= 0          declares W with the largest index used
///   vector u in X := [1, 1/2]
///   set S in X := x1 + x2 >= 1
///   map f : X -> Y matrix [[1, 0], [0, 1]]
///   seq s in c0 := (3/4)^k - 2*k^(-1/2) + 5*delta(3)
///   expect X alpha = 1
///
/// Atoms are `form rel form` with rel one of < <= = >= >; `&` binds tighter
/// than `|`; `true` and `false` are atoms.
WorkbenchFile parse(std::string_view text);

/// Parses a sequence expression on its own.
seq::SymbolicSequence parse_sequence(std::string_view text);

/// A set as a wedge/set expression over x1..xd that parse accepts back.
std::string to_dsl(const SemiLinearSet& s);
std::string to_dsl(const Matrix& m);
std::string to_dsl(const Vector& v);

}  // namespace povswb::wbcli
