#ifndef EVEX_ERROR_HPP_
#define EVEX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evex {

enum class Errc {
  // ontology
  UnknownParentClass,
  DuplicateName,
  InvalidName,
  UnknownClass,
  UnknownRole,
  UnknownInstance,
  UnknownRelation,
  RoleClassMismatch,
  // rules
  UnknownPredicate,
  AmbiguousPredicate,
  ArityMismatch,
  UnsafeRule,
  HeadNotRole,
  NotDerived,
  // text formats
  Syntax,
  MalformedTriple,
  EmptyAfterNormalization,
  // io / config
  Io,
  Config,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownParentClass: return "UnknownParentClass";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::InvalidName: return "InvalidName";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::UnknownRole: return "UnknownRole";
    case Errc::UnknownInstance: return "UnknownInstance";
    case Errc::UnknownRelation: return "UnknownRelation";
    case Errc::RoleClassMismatch: return "RoleClassMismatch";
    case Errc::UnknownPredicate: return "UnknownPredicate";
    case Errc::AmbiguousPredicate: return "AmbiguousPredicate";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::UnsafeRule: return "UnsafeRule";
    case Errc::HeadNotRole: return "HeadNotRole";
    case Errc::NotDerived: return "NotDerived";
    case Errc::Syntax: return "Syntax";
    case Errc::MalformedTriple: return "MalformedTriple";
    case Errc::EmptyAfterNormalization: return "EmptyAfterNormalization";
    case Errc::Io: return "Io";
    case Errc::Config: return "Config";
  }
  return "Unknown";
}

/// Location inside a text input. Zero means "not known".
struct SourceLocation {
  std::string source;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Error(Errc code, const std::string& message, SourceLocation where)
      : std::runtime_error(format(code, message, where)), code_(code), where_(std::move(where)) {}

  Errc code() const noexcept { return code_; }
  const SourceLocation& where() const noexcept { return where_; }

 private:
  static std::string format(Errc code, const std::string& message, const SourceLocation& w) {
    std::string out = w.source.empty() ? std::string("<input>") : w.source;
    out += ':' + std::to_string(w.line);
    if (w.column != 0) out += ':' + std::to_string(w.column);
    out += ": ";
    out += errc_name(code);
    out += ": ";
    out += message;
    return out;
  }

  Errc code_;
  SourceLocation where_;
};

}  // namespace evex

#endif  // EVEX_ERROR_HPP_
