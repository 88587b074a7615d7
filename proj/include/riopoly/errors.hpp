#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace riopoly {

// Base for all domain errors. `name()` is the stable identifier the CLI
// prints on its diagnostic stream before exiting with code 2.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

struct ZeroConstantTerm : DomainError {
  explicit ZeroConstantTerm(const std::string& d) : DomainError("ZeroConstantTerm", d) {}
};

struct OrderMismatch : DomainError {
  explicit OrderMismatch(const std::string& d) : DomainError("OrderMismatch", d) {}
};

struct ZeroDivisor : DomainError {
  explicit ZeroDivisor(const std::string& d) : DomainError("ZeroDivisor", d) {}
};

struct InnerOrderZero : DomainError {
  explicit InnerOrderZero(const std::string& d) : DomainError("InnerOrderZero", d) {}
};

struct NotInvertible : DomainError {
  explicit NotInvertible(const std::string& d) : DomainError("NotInvertible", d) {}
};

struct NotHadamardUnit : DomainError {
  explicit NotHadamardUnit(const std::string& d) : DomainError("NotHadamardUnit", d) {}
};

struct UnknownName : DomainError {
  explicit UnknownName(const std::string& d) : DomainError("UnknownName", d) {}
};

struct InsufficientTruncation : DomainError {
  explicit InsufficientTruncation(const std::string& d)
      : DomainError("InsufficientTruncation", d) {}
};

struct NotProper : DomainError {
  explicit NotProper(const std::string& d) : DomainError("NotProper", d) {}
};

struct NotRiordan : DomainError {
  explicit NotRiordan(const std::string& d) : DomainError("NotRiordan", d) {}
};

struct ZeroDiagonal : DomainError {
  explicit ZeroDiagonal(const std::string& d) : DomainError("ZeroDiagonal", d) {}
};

struct LengthMismatch : DomainError {
  explicit LengthMismatch(const std::string& d) : DomainError("LengthMismatch", d) {}
};

struct ZeroParameter : DomainError {
  explicit ZeroParameter(const std::string& d) : DomainError("ZeroParameter", d) {}
};

struct NonzeroConstantTerm : DomainError {
  explicit NonzeroConstantTerm(const std::string& d)
      : DomainError("NonzeroConstantTerm", d) {}
};

struct UnknownCase : DomainError {
  explicit UnknownCase(const std::string& d) : DomainError("UnknownCase", d) {}
};

struct UnknownFamily : DomainError {
  explicit UnknownFamily(const std::string& d) : DomainError("UnknownFamily", d) {}
};

}  // namespace riopoly
