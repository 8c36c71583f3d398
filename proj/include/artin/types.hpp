#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace artin {

// Exact coefficient type for all chain-complex arithmetic.
using Integer = boost::multiprecision::cpp_int;

// A positive word over the generators; each char holds a generator index.
// The empty word is the identity.
using Word = std::string;

// Subset of generators as a bitmask; bit i = generator i in declaration order.
using GenSet = std::uint32_t;

inline constexpr int kInfinity = std::numeric_limits<int>::max();
inline constexpr std::size_t kDefaultClassCap = 1'000'000;

// Library error with a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

constexpr GenSet gen_bit(int i) { return GenSet{1} << i; }
constexpr bool gen_in(GenSet set, int i) { return (set >> i) & 1u; }
constexpr bool gs_subset(GenSet a, GenSet b) { return (a & ~b) == 0; }
inline int gs_size(GenSet set) { return std::popcount(set); }

inline std::vector<int> gs_elements(GenSet set) {
  std::vector<int> out;
  for (int i = 0; (set >> i) != 0; ++i)
    if (gen_in(set, i)) out.push_back(i);
  return out;
}

// Length first, then letterwise; the canonical-word order everywhere.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline GenSet word_support(const Word& w) {
  GenSet s = 0;
  for (char c : w) s |= gen_bit(static_cast<unsigned char>(c));
  return s;
}

}  // namespace artin
