#ifndef LATTICEKIT_ERRORS_HPP
#define LATTICEKIT_ERRORS_HPP

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "element_set.hpp"

namespace latticekit {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some pair of elements has no greatest lower bound or no least upper bound.
class NotALattice : public LatticeError {
 public:
  NotALattice(Element x, Element y, std::string const& what)
      : LatticeError(what), x_(x), y_(y) {}
  Element x() const noexcept { return x_; }
  Element y() const noexcept { return y_; }

 private:
  Element x_;
  Element y_;
};

class CyclicCovers : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class NoBounds : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// A configured size cap was exceeded (construction, enumeration, search).
class SizeCapExceeded : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class SearchBudgetExceeded : public SizeCapExceeded {
 public:
  using SizeCapExceeded::SizeCapExceeded;
};

class EmptyInterval : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class NotCentralPair : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class NotAChain : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class InvalidElement : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// Bad argument or malformed input (descriptor, JSON document, out-of-range n).
class InputError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// An invariant the theory guarantees was found violated: always a bug
/// (or a deliberately corrupted table).
class IntegrityError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// Size caps. LATTICEKIT_SIZE_CAP, when set to a positive integer, overrides
/// the construction cap.
struct Limits {
  std::size_t construction = 4096;
  std::size_t isomorphism = 64;
  std::size_t isomorphism_nodes = 20'000'000;
  std::size_t congruence_enumeration = 12;
  std::size_t sp_base = 8;
  std::size_t co_base = 10;
  std::size_t boolean_rank = 12;
  std::size_t enumerate = 10;

  static Limits const& defaults() {
    static Limits const limits = [] {
      Limits l;
      if (char const* env = std::getenv("LATTICEKIT_SIZE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) l.construction = static_cast<std::size_t>(v);
      }
      return l;
    }();
    return limits;
  }
};

}  // namespace latticekit

#endif  // LATTICEKIT_ERRORS_HPP
