#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace topo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotATopology : public Error {
 public:
  using Error::Error;
};

class NotContinuous : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class CensusTooLarge : public Error {
 public:
  using Error::Error;
};

class SpaceTooLarge : public Error {
 public:
  using Error::Error;
};

class EmptyProfile : public Error {
 public:
  EmptyProfile() : Error("cofinal profile must be nonempty") {}
};

class InvalidClass : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownProperty : public Error {
 public:
  explicit UnknownProperty(const std::string& id) : Error("unknown property '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class MalformedKnowledgeBase : public Error {
 public:
  using Error::Error;
};

/// Raised when forward chaining derives both P and not-P for one space.
class Contradiction : public Error {
 public:
  Contradiction(std::string space, std::string property, std::vector<std::string> positive_chain,
                std::vector<std::string> negative_chain);

  const std::string& space() const { return space_; }
  const std::string& property() const { return property_; }
  const std::vector<std::string>& positive_chain() const { return positive_; }
  const std::vector<std::string>& negative_chain() const { return negative_; }

 private:
  std::string space_;
  std::string property_;
  std::vector<std::string> positive_;
  std::vector<std::string> negative_;
};

}  // namespace topo
