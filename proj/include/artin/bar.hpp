#pragma once

#include <vector>

#include "artin/complex.hpp"
#include "artin/monoid.hpp"
#include "artin/morse.hpp"

namespace artin {

// A cell [x_n|...|x_1] of the normalized bar complex. entries[k-1] holds x_k
// as a canonical word, so entries.front() is the rightmost factor; no entry
// is the identity.
struct BarCell {
  std::vector<Word> entries;

  int degree() const { return static_cast<int>(entries.size()); }
  long total_length() const {
    long n = 0;
    for (const Word& w : entries) n += static_cast<long>(w.size());
    return n;
  }
  auto operator<=>(const BarCell&) const = default;
};

std::string bar_label(const CoxeterSystem& sys, const BarCell& cell);

// Alternating face sum; faces either drop an outer entry (shortening the
// product) or merge two adjacent entries (preserving it).
FormalSum<BarCell> bar_boundary(const ArtinMonoid& m, const BarCell& cell);

// All cells with entry-length sum <= max_total_length and degree <= max_degree,
// grouped by degree. The set is closed under the boundary.
std::vector<std::vector<BarCell>> enumerate_bar_cells(const ArtinMonoid& m,
                                                      long max_total_length,
                                                      int max_degree);

// Height of the longest right prefix whose partial products are all lifts of
// longest elements.
int mu1_height(const ArtinMonoid& m, const BarCell& cell);

// The matching: essential cells are those where every partial product is such
// a lift; otherwise the entry just past the height is merged down or split
// along the normal form, depending on the ending set at that point.
MatchingClassification<BarCell> mu1_classify(const ArtinMonoid& m,
                                             const BarCell& cell);

// Essential cells per degree; these biject with strictly increasing chains
// of nonempty finite-type subsets, so the list is finite for every system.
std::vector<std::vector<BarCell>> mu1_essentials(const ArtinMonoid& m,
                                                 int max_degree);

// Engine preconfigured with the bar boundary, the matching above and the
// entry-length filtration.
MorseEngine<BarCell> make_mu1_engine(const ArtinMonoid& m);

// Reduced differential of an essential cell: the merge faces stay, the face
// dropping the rightmost entry is replaced by its flow.
FormalSum<BarCell> d_theta1(const ArtinMonoid& m, MorseEngine<BarCell>& engine,
                            const BarCell& cell);

// The supports of all entries jointly span a finite-type subset.
bool in_K(const ArtinMonoid& m, const BarCell& cell);

// Finite truncation of the bar complex as a based complex.
BasedComplex truncated_bar_complex(const ArtinMonoid& m, long max_total_length,
                                   int max_degree);

// Morse reduction of the full bar complex; finite for every system.
BasedComplex mu1_morse_complex(const ArtinMonoid& m);

}  // namespace artin
