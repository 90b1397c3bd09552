#pragma once

// Command-line front end: JSON specification files in, JSON reports and
// Graphviz diagrams out. Every reported value is a direct library result.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "grs/carter.hpp"
#include "grs/error.hpp"
#include "grs/presentation.hpp"

namespace grs::cli {

struct GrsSpecFile {
  std::size_t rank = 0;
  IntMatrix cartan;
  std::optional<std::string> label;
};

// Malformed JSON; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed JSON that is not a valid specification. `kind` names the
// failed presentation precondition when there is one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, std::optional<ErrorKind> kind = std::nullopt)
      : std::runtime_error(what), kind_(kind) {}
  std::optional<ErrorKind> kind() const noexcept { return kind_; }

 private:
  std::optional<ErrorKind> kind_;
};

// Strict parse of {"rank": int, "cartan": [[int]], "label": string?}: no
// other keys, no trailing content, integer entries only, and the matrix must
// be a valid presentation.
GrsSpecFile parse_spec(std::string_view text);

GrsPresentation to_presentation(const GrsSpecFile& spec);

// Pretty-printed JSON of a specification, as read back by parse_spec.
std::string spec_to_json(const GrsSpecFile& spec);

// Graphviz text for one diagram: graph name is the diagram name, nodes are
// unlabeled circles, edges undirected.
std::string to_dot(const CarterDiagram& d);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitVerification = 3;

int exit_code_for(ErrorKind kind);

// Runs one command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grs::cli
