#include "artin/squier.hpp"

#include <algorithm>
#include <sstream>

namespace artin {

GenOrder declaration_order(const CoxeterSystem& sys) {
  GenOrder order(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) order[i] = i;
  return order;
}

int max_generator(const GenOrder& order, GenSet set) {
  int best = -1;
  for (int i : gs_elements(set))
    if (best < 0 || order[i] > order[best]) best = i;
  return best;
}

std::string chain_label(const CoxeterSystem& sys, const ChainCell& cell) {
  if (cell.sets.empty()) return "{}";
  std::string out;
  for (std::size_t k = 0; k < cell.sets.size(); ++k) {
    if (k) out.push_back('<');
    out += sys.render_set(cell.sets[k]);
  }
  return out;
}

BarCell chain_to_bar(const ArtinMonoid& m, const ChainCell& cell) {
  BarCell out;
  GenSet prev = 0;
  for (GenSet j : cell.sets) {
    out.entries.push_back(
        m.quotient_by_right_divisor(m.delta(j), m.delta_or_identity(prev)));
    prev = j;
  }
  return out;
}

ChainCell bar_to_chain(const ArtinMonoid& m, const BarCell& cell) {
  ChainCell out;
  Word acc;
  GenSet prev = 0;
  for (const Word& x : cell.entries) {
    acc = m.product(x, acc);
    if (!m.in_delta_set(acc))
      fail("not_essential",
           "cell is not characterized by a chain of finite-type subsets");
    GenSet j = m.ending_set(acc);
    if (!gs_subset(prev, j) || prev == j)
      fail("not_essential", "characterizing sequence is not strictly increasing");
    out.sets.push_back(j);
    prev = j;
  }
  return out;
}

std::vector<std::vector<ChainCell>> enumerate_chain_cells(const ArtinMonoid& m) {
  const auto& sf = m.sf();
  std::vector<std::vector<ChainCell>> out(m.system().rank() + 1);
  out[0].push_back(ChainCell{});
  std::vector<ChainCell> frontier = out[0];
  for (int deg = 1; deg <= m.system().rank() && !frontier.empty(); ++deg) {
    std::vector<ChainCell> next;
    for (const ChainCell& cell : frontier)
      for (GenSet j : sf) {
        if (j == 0 || j == cell.top() || !gs_subset(cell.top(), j)) continue;
        ChainCell extended = cell;
        extended.sets.push_back(j);
        next.push_back(extended);
      }
    std::sort(next.begin(), next.end());
    out[deg] = next;
    frontier = std::move(next);
  }
  while (out.size() > 1 && out.back().empty()) out.pop_back();
  return out;
}

int mu2_height(const GenOrder& order, const ChainCell& cell) {
  int h = 0;
  GenSet prev = 0;
  for (GenSet j : cell.sets) {
    GenSet added = j & ~prev;
    if (gs_size(added) != 1) break;
    int a = gs_elements(added)[0];
    if (a != max_generator(order, j)) break;
    prev = j;
    ++h;
  }
  return h;
}

MatchingClassification<ChainCell> mu2_classify(const GenOrder& order,
                                               const ChainCell& cell) {
  const int n = cell.degree();
  const int h = mu2_height(order, cell);
  if (h == n) return {CellKind::Essential, std::nullopt};

  const int max_next = max_generator(order, cell.sets[h]);
  if (h > 0 && max_next == max_generator(order, cell.sets[h - 1])) {
    ChainCell partner = cell;
    partner.sets.erase(partner.sets.begin() + h - 1);
    return {CellKind::Collapsible, std::move(partner)};
  }
  const GenSet below = h > 0 ? cell.sets[h - 1] : 0;
  ChainCell partner = cell;
  partner.sets.insert(partner.sets.begin() + h, below | gen_bit(max_next));
  return {CellKind::Redundant, std::move(partner)};
}

bool chain_sequence_less(const GenOrder& order, const ChainCell& a,
                         const ChainCell& b) {
  const int m = a.degree(), l = b.degree();
  const int n = std::max(m, l);
  if (n == 0) return false;
  // Entries past the top repeat the top set.
  auto set_at = [](const ChainCell& c, int i) {
    return c.sets[std::min(i, c.degree() - 1)];
  };
  for (int i = 0; i < n - 1; ++i) {
    int ma = order[max_generator(order, set_at(a, i))];
    int mb = order[max_generator(order, set_at(b, i))];
    if (ma != mb) return ma < mb;
  }
  // All maxima agree up to position n-1; require full agreement, then compare
  // sizes with the inequality reversed.
  if (order[max_generator(order, set_at(a, n - 1))] !=
      order[max_generator(order, set_at(b, n - 1))])
    return false;
  for (int i = 0; i < n - 1; ++i) {
    int sa = gs_size(set_at(a, i));
    int sb = gs_size(set_at(b, i));
    if (sa != sb) return sa > sb;
  }
  return false;
}

FormalSum<ChainCell> chain_boundary(const ArtinMonoid& m,
                                    MorseEngine<BarCell>& mu1_engine,
                                    const ChainCell& cell) {
  FormalSum<ChainCell> out;
  if (cell.degree() == 0) return out;
  BarCell bar = chain_to_bar(m, cell);
  for (const auto& [face, coeff] : d_theta1(m, mu1_engine, bar))
    out.add(bar_to_chain(m, face), coeff);
  return out;
}

CellId subset_cell(const CoxeterSystem& sys, GenSet subset) {
  return CellId{gs_size(subset), sys.render_set(subset)};
}

namespace {

// The essential chain of a subset: peel off the maximum repeatedly.
ChainCell descending_max_chain(const GenOrder& order, GenSet subset) {
  ChainCell out;
  GenSet j = subset;
  while (j != 0) {
    out.sets.push_back(j);
    j &= ~gen_bit(max_generator(order, j));
  }
  std::reverse(out.sets.begin(), out.sets.end());
  return out;
}

}  // namespace

BasedComplex mu2_morse_complex(const ArtinMonoid& m, const GenOrder& order) {
  const auto& sys = m.system();
  int top = 0;
  for (GenSet j : m.sf()) top = std::max(top, gs_size(j));
  std::vector<std::vector<ChainCell>> essentials(top + 1);
  for (GenSet j : m.sf())
    essentials[gs_size(j)].push_back(descending_max_chain(order, j));
  for (auto& cells : essentials) std::sort(cells.begin(), cells.end());

  auto mu1_engine = std::make_shared<MorseEngine<BarCell>>(make_mu1_engine(m));
  MorseEngine<ChainCell> engine(
      [&m, mu1_engine](const ChainCell& cell) {
        return chain_boundary(m, *mu1_engine, cell);
      },
      [order](const ChainCell& cell) { return mu2_classify(order, cell); }, {},
      [&m](const ChainCell& cell) {
        return cell.degree() == 0
                   ? 0L
                   : static_cast<long>(m.delta(cell.top()).size());
      });
  return morse_complex<ChainCell>(engine, essentials,
                                  [&sys](const ChainCell& cell) {
                                    return sys.render_set(cell.top());
                                  });
}

FormalSum<CellId> squier_boundary_direct(const ArtinMonoid& m,
                                         const GenOrder& order, GenSet subset) {
  FormalSum<CellId> out;
  if (subset == 0) return out;
  if (!m.in_sf(subset))
    fail("infinite_type", "subset is not finite type");
  auto gens = gs_elements(subset);
  std::sort(gens.begin(), gens.end(),
            [&order](int a, int b) { return order[a] < order[b]; });
  const Word d_full = m.delta(subset);
  int outer_sign = 1;
  for (int a : gens) {
    GenSet rest = subset & ~gen_bit(a);
    Word t = m.quotient_by_right_divisor(d_full, m.delta_or_identity(rest));
    Integer inner = 0;
    for (const Word& u : m.left_divisors(t))
      inner += (u.size() % 2 == 0) ? 1 : -1;
    out.add(subset_cell(m.system(), rest), Integer(outer_sign) * inner);
    outer_sign = -outer_sign;
  }
  return out;
}

BasedComplex squier_complex(const ArtinMonoid& m, const GenOrder& order) {
  BasedComplex out;
  const auto& sys = m.system();
  for (GenSet j : m.sf()) out.add_cell(subset_cell(sys, j));
  for (GenSet j : m.sf()) {
    if (j == 0) continue;
    out.set_boundary(subset_cell(sys, j), squier_boundary_direct(m, order, j));
  }
  return out;
}

namespace {

std::string render_subset_sum(const FormalSum<CellId>& sum) {
  if (sum.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [cell, coeff] : sum) {
    if (coeff >= 0 && !first) os << " +";
    if (coeff == 1)
      os << (first ? "" : " ") << "[" << cell.label << "]";
    else if (coeff == -1)
      os << (first ? "-" : " -") << "[" << cell.label << "]";
    else
      os << (first ? "" : " ") << coeff << "*[" << cell.label << "]";
    first = false;
  }
  return os.str();
}

}  // namespace

DifferentialComparison compare_squier_vs_mu2(const ArtinMonoid& m,
                                             const GenOrder& order) {
  DifferentialComparison out;
  BasedComplex via_matching = mu2_morse_complex(m, order);
  BasedComplex direct = squier_complex(m, order);
  const auto& sys = m.system();
  for (GenSet j : m.sf()) {
    if (j == 0) continue;
    const FormalSum<CellId>& lhs = via_matching.boundary(subset_cell(sys, j));
    FormalSum<CellId> rhs = squier_boundary_direct(m, order, j);
    bool equal = lhs == rhs;
    out.entries.push_back({j, equal, render_subset_sum(lhs),
                           render_subset_sum(rhs)});
    out.all_equal = out.all_equal && equal;
  }
  out.matching_homology = homology(via_matching);
  out.direct_homology = homology(direct);
  out.homology_equal = out.matching_homology == out.direct_homology;
  return out;
}

}  // namespace artin
