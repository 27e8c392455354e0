#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orbsum/realization.hpp"

namespace orbsum {

struct NamedRealization {
  std::string name;
  RealizationTree tree;

  bool operator==(const NamedRealization&) const = default;
};

/// A parsed input file: atom declarations plus named realizations.
/// Built-in identity atoms are referenced, never declared.
struct Document {
  std::vector<Atom> atoms;
  std::vector<NamedRealization> realizations;

  const Atom* find_atom(const std::string& name) const;
  const RealizationTree* find_realization(const std::string& name) const;

  bool operator==(const Document&) const = default;
};

struct ParseError {
  int line = 0;
  int col = 0;
  std::string message;

  std::string to_string() const;
};

/// Parses the declaration format:
///
///   atom Kp { circle 2 }
///   atom W  { graph { edges 2 2 3 ; vertices (2,2,3) (2,2,3) } }
///   realization A {
///     node X0 = S3c(2);
///     node X1 = Kp;
///     sum X1 -> X0 : cyclic(2) at X1.c0, X0.c0;
///   }
///
/// `sum A -> B` attaches A to the component already containing B; build
/// order is declaration order. Whitespace-insensitive, `#` starts a line
/// comment. Attachments may be omitted when the target is unambiguous.
/// Semantic problems (unknown names, bad orders, ambiguous attachments)
/// are reported as ParseError with a source position.
std::variant<Document, ParseError> parse(std::string_view text);

/// Canonical text form; parse(serialize(d)) reproduces d exactly.
std::string serialize(const Document& doc);

}  // namespace orbsum
