#pragma once

#include <vector>

#include "artin/bar.hpp"
#include "artin/complex.hpp"
#include "artin/monoid.hpp"
#include "artin/morse.hpp"

namespace artin {

// A strictly increasing chain I_1 < I_2 < ... < I_n of nonempty finite-type
// subsets; sets[k-1] holds I_k. These chains characterize the basis cells
// left over after the first reduction of the bar complex.
struct ChainCell {
  std::vector<GenSet> sets;

  int degree() const { return static_cast<int>(sets.size()); }
  GenSet top() const { return sets.empty() ? 0 : sets.back(); }
  auto operator<=>(const ChainCell&) const = default;
};

// Ranks of the generators: order[i] is the position of generator i, with
// larger meaning later. The default is declaration order.
using GenOrder = std::vector<int>;
GenOrder declaration_order(const CoxeterSystem& sys);
int max_generator(const GenOrder& order, GenSet set);  // index of the maximum

std::string chain_label(const CoxeterSystem& sys, const ChainCell& cell);

// Conversions between chains and the bar cells they characterize.
BarCell chain_to_bar(const ArtinMonoid& m, const ChainCell& cell);
ChainCell bar_to_chain(const ArtinMonoid& m, const BarCell& cell);

// All chain cells of the system, grouped by degree. Finite.
std::vector<std::vector<ChainCell>> enumerate_chain_cells(const ArtinMonoid& m);

// Second matching, on chains: essential when every step adds exactly one
// generator which is the new maximum; otherwise the set at the height is
// deleted (equal maxima) or an intermediate set is inserted (growing maxima).
int mu2_height(const GenOrder& order, const ChainCell& cell);
MatchingClassification<ChainCell> mu2_classify(const GenOrder& order,
                                               const ChainCell& cell);

// The strict order on characterizing sequences along which redundant
// successors increase: compare the sequences of maxima first, then the
// sequences of sizes in reverse.
bool chain_sequence_less(const GenOrder& order, const ChainCell& a,
                         const ChainCell& b);

// Boundary of a chain through the reduced bar differential, re-expressed on
// chains.
FormalSum<ChainCell> chain_boundary(const ArtinMonoid& m,
                                    MorseEngine<BarCell>& mu1_engine,
                                    const ChainCell& cell);

// Complex on the finite-type subsets themselves, obtained by reducing the
// chain complex along mu2; ranks are the subset counts by size.
BasedComplex mu2_morse_complex(const ArtinMonoid& m, const GenOrder& order);

// Squier's explicit alternating-sum differential on the same subsets.
FormalSum<CellId> squier_boundary_direct(const ArtinMonoid& m,
                                         const GenOrder& order, GenSet subset);
BasedComplex squier_complex(const ArtinMonoid& m, const GenOrder& order);

CellId subset_cell(const CoxeterSystem& sys, GenSet subset);

struct DifferentialComparison {
  struct Entry {
    GenSet subset;
    bool equal;
    std::string via_matching;  // rendered reduced differential
    std::string direct;        // rendered explicit formula
  };
  std::vector<Entry> entries;
  bool all_equal = true;
  bool homology_equal = false;
  HomologyResult matching_homology;
  HomologyResult direct_homology;
};

// Reports, per subset, whether the reduced differential coincides with the
// explicit formula, and certifies that both complexes have equal homology.
DifferentialComparison compare_squier_vs_mu2(const ArtinMonoid& m,
                                             const GenOrder& order);

}  // namespace artin
