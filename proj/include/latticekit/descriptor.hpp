#ifndef LATTICEKIT_DESCRIPTOR_HPP
#define LATTICEKIT_DESCRIPTOR_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "constructions.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "operations.hpp"

namespace latticekit {

namespace detail {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  FiniteLattice parse() {
    FiniteLattice L = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return L;
  }

 private:
  FiniteLattice expr() {
    skip_space();
    std::string const word = identifier();
    if (word == "boolean" || word == "chain") {
      expect(':');
      std::size_t const n = number();
      return word == "boolean" ? boolean(n) : chain(n);
    }
    if (word == "M3" || word == "N5") return named(word);
    if (word == "sp" || word == "co") {
      expect('(');
      FiniteLattice inner = expr();
      expect(')');
      return word == "sp" ? sp(inner).lattice : co(to_poset(inner)).lattice;
    }
    if (word == "product") {
      expect('(');
      FiniteLattice a = expr();
      expect(',');
      FiniteLattice b = expr();
      expect(')');
      return direct_product(a, b);
    }
    fail("unknown family '" + word + "'");
  }

  std::string identifier() {
    std::size_t const start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_space();
    std::size_t const start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::string const& why) const {
    throw InputError("descriptor '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds a lattice from a family descriptor: boolean:N, chain:N, M3, N5,
/// sp(D), co(D) (convex subsets of D's order), product(D,D).
inline FiniteLattice from_descriptor(std::string_view descriptor) {
  return detail::DescriptorParser(descriptor).parse();
}

}  // namespace latticekit

#endif  // LATTICEKIT_DESCRIPTOR_HPP
