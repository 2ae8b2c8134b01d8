#pragma once

#include <stdexcept>
#include <string>

namespace covers {

struct NotABasis : std::runtime_error {
  explicit NotABasis(const std::string& what) : std::runtime_error(what) {}
};

struct NotSimple : std::runtime_error {
  explicit NotSimple(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidVertex : std::runtime_error {
  explicit InvalidVertex(const std::string& what) : std::runtime_error(what) {}
};

struct NotATriangle : std::runtime_error {
  explicit NotATriangle(const std::string& what) : std::runtime_error(what) {}
};

struct NeighborUnderflow : std::runtime_error {
  explicit NeighborUnderflow(const std::string& what) : std::runtime_error(what) {}
};

struct BasisMismatch : std::runtime_error {
  explicit BasisMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct EquatorInvalid : std::runtime_error {
  explicit EquatorInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct ChainComplexInvalid : std::runtime_error {
  explicit ChainComplexInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct CodeAlternationViolated : std::runtime_error {
  explicit CodeAlternationViolated(const std::string& what) : std::runtime_error(what) {}
};

struct EnumerationCapExceeded : std::runtime_error {
  explicit EnumerationCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace covers
