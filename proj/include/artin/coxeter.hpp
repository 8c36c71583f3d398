#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artin/types.hpp"

namespace artin {

// A finite generating set together with a symmetric bond matrix.
// Diagonal entries are 1, off-diagonal entries are >= 2 or kInfinity.
class CoxeterSystem {
 public:
  CoxeterSystem(std::vector<std::string> names,
                std::vector<std::vector<int>> matrix);

  // Line-oriented format:
  //   generators = a b c
  //   default = 2            (optional, at most once)
  //   m a b = 3              (or "inf"; order of names irrelevant)
  // '#' starts a comment. Throws Error("parse_error", ...) with line numbers.
  static CoxeterSystem parse(std::string_view text);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int bond(int s, int t) const { return m_[s][t]; }
  std::optional<int> index_of(std::string_view name) const;
  GenSet all() const { return rank() == 32 ? ~GenSet{0} : gen_bit(rank()) - 1; }

  // Word I/O. With single-character generator names a word is the plain
  // concatenation of letters; otherwise tokens are separated by spaces or '.'.
  Word parse_word(std::string_view text) const;
  std::string render_word(const Word& w) const;  // identity renders as "1"
  std::string render_set(GenSet J) const;        // "{a,b}"

  // Re-parsable description; also the cache key.
  std::string describe() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> m_;
  bool single_char_ = true;
};

// One connected finite-type diagram: series 'A'..'I' plus rank, and the
// defining bond for the dihedral series.
struct CoxeterFamily {
  char series = 'A';
  int rank = 1;
  int bond = 0;  // set for I2(m)
  std::string to_string() const;
};

struct SubsetClassification {
  GenSet subset = 0;
  bool finite = false;
  // Connected components with their matched families; empty when infinite.
  std::vector<std::pair<GenSet, CoxeterFamily>> components;
};

// Exact finite-type decision by matching each connected component of the
// diagram against the catalogue of finite types.
SubsetClassification classify_subset(const CoxeterSystem& sys, GenSet subset);

// All finite-type subsets (including the empty set), ordered by size and
// then lexicographically in declaration order.
std::vector<GenSet> enumerate_sf(const CoxeterSystem& sys);

// Floating-point cross-check: the cosine form of the subset is positive
// definite iff the subset is finite type. Estimates within kGramBand of
// zero are inconclusive.
inline constexpr double kGramBand = 1e-6;
struct GramVerdict {
  bool positive_definite = false;
  double min_eigenvalue = 0.0;
  bool conclusive() const {
    return min_eigenvalue > kGramBand || min_eigenvalue < -kGramBand;
  }
};
GramVerdict gram_positive_definite(const CoxeterSystem& sys, GenSet subset);

// All words reachable from `w` by single braid-move substitutions
// <s,t>^m <-> <t,s>^m. Throws Error("cap_exceeded") past `cap` words.
std::vector<Word> braid_class(const CoxeterSystem& sys, const Word& w,
                              std::size_t cap);

// Word problem for the Coxeter group of the system, solved by exhaustive
// braid closure plus deletion of adjacent equal letters. Desk scale only;
// the class cap turns blow-ups into explicit errors.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterSystem sys, std::size_t cap = kDefaultClassCap);

  const CoxeterSystem& system() const { return sys_; }

  // Shortlex-minimal reduced word of the element; idempotent.
  Word canonical(const Word& w) const;
  int length(const Word& w) const { return static_cast<int>(canonical(w).size()); }

  // All elements of the standard parabolic subgroup on J as canonical words,
  // in BFS order by length. `max_len` truncates; `count_cap` guards.
  std::vector<Word> elements(GenSet J, std::optional<int> max_len = {},
                             std::size_t count_cap = kDefaultClassCap) const;

  // The unique maximal-length element of a nonempty finite-type subset,
  // found by greedy length-increasing multiplication.
  Word longest_element(GenSet J) const;

 private:
  CoxeterSystem sys_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Word> canon_;
};

}  // namespace artin
