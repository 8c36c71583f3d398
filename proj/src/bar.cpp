#include "artin/bar.hpp"

#include <algorithm>

namespace artin {

std::string bar_label(const CoxeterSystem& sys, const BarCell& cell) {
  std::string out = "[";
  for (int k = cell.degree() - 1; k >= 0; --k) {
    out += sys.render_word(cell.entries[k]);
    if (k > 0) out.push_back('|');
  }
  out.push_back(']');
  return out;
}

FormalSum<BarCell> bar_boundary(const ArtinMonoid& m, const BarCell& cell) {
  FormalSum<BarCell> out;
  const int n = cell.degree();
  if (n == 0) return out;
  // d_0 drops the rightmost entry.
  BarCell face0{{cell.entries.begin() + 1, cell.entries.end()}};
  out.add(face0, 1);
  // d_i merges x_{i+1} x_i for 1 <= i <= n-1.
  int sign = -1;
  for (int i = 1; i <= n - 1; ++i) {
    BarCell face = cell;
    face.entries[i - 1] = m.product(cell.entries[i], cell.entries[i - 1]);
    face.entries.erase(face.entries.begin() + i);
    out.add(face, sign);
    sign = -sign;
  }
  // d_n drops the leftmost entry.
  BarCell facen{{cell.entries.begin(), cell.entries.end() - 1}};
  out.add(facen, sign);
  return out;
}

std::vector<std::vector<BarCell>> enumerate_bar_cells(const ArtinMonoid& m,
                                                      long max_total_length,
                                                      int max_degree) {
  auto levels = m.elements_by_length(static_cast<int>(max_total_length));
  std::vector<std::vector<BarCell>> out(std::max(0, max_degree) + 1);
  out[0].push_back(BarCell{});
  // Extend cells degree by degree, spending remaining length on new entries.
  std::vector<std::pair<BarCell, long>> frontier{{BarCell{}, max_total_length}};
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::vector<std::pair<BarCell, long>> next;
    for (const auto& [cell, budget] : frontier)
      for (long len = 1; len <= budget; ++len)
        for (const Word& x : levels[len]) {
          BarCell extended = cell;
          extended.entries.push_back(x);
          out[deg].push_back(extended);
          next.emplace_back(std::move(extended), budget - len);
        }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  for (auto& cells : out) std::sort(cells.begin(), cells.end());
  return out;
}

namespace {

// Partial products p_k = x_k ... x_1, canonical.
std::vector<Word> partial_products(const ArtinMonoid& m, const BarCell& cell) {
  std::vector<Word> p;
  p.reserve(cell.entries.size());
  Word acc;
  for (const Word& x : cell.entries) {
    acc = m.product(x, acc);
    p.push_back(acc);
  }
  return p;
}

}  // namespace

int mu1_height(const ArtinMonoid& m, const BarCell& cell) {
  int h = 0;
  Word acc;
  for (const Word& x : cell.entries) {
    acc = m.product(x, acc);
    if (!m.in_delta_set(acc)) break;
    ++h;
  }
  return h;
}

MatchingClassification<BarCell> mu1_classify(const ArtinMonoid& m,
                                             const BarCell& cell) {
  const int n = cell.degree();
  auto p = partial_products(m, cell);
  int h = 0;
  while (h < n && m.in_delta_set(p[h])) ++h;
  if (h == n) return {CellKind::Essential, std::nullopt};

  const GenSet ih = h > 0 ? m.ending_set(p[h - 1]) : 0;
  const GenSet j = m.ending_set(p[h]);  // = I(x_{h+1} ... x_1)
  if (j == ih) {
    // Merge x_{h+1} into x_h; only reachable with h >= 1.
    BarCell partner = cell;
    partner.entries[h - 1] = m.product(cell.entries[h], cell.entries[h - 1]);
    partner.entries.erase(partner.entries.begin() + h);
    return {CellKind::Collapsible, std::move(partner)};
  }
  if (!gs_subset(ih, j))
    fail("internal_error", "ending set dropped below the height prefix");
  // Split x_{h+1} = y * z with z the delta quotient.
  const Word dj = m.delta(j);
  const Word z = m.quotient_by_right_divisor(dj, m.delta_or_identity(ih));
  const Word y = m.quotient_by_right_divisor(p[h], dj);
  BarCell partner = cell;
  partner.entries[h] = z;
  partner.entries.insert(partner.entries.begin() + h + 1, y);
  return {CellKind::Redundant, std::move(partner)};
}

std::vector<std::vector<BarCell>> mu1_essentials(const ArtinMonoid& m,
                                                 int max_degree) {
  std::vector<std::vector<BarCell>> out(std::max(0, max_degree) + 1);
  out[0].push_back(BarCell{});
  const auto& sf = m.sf();
  // Chains of nonempty finite-type subsets, extended by strict supersets;
  // the cell entries are the successive delta quotients.
  struct Item {
    GenSet top;
    BarCell cell;
  };
  std::vector<Item> frontier;
  for (GenSet j : sf) {
    if (j == 0) continue;
    BarCell cell{{m.delta(j)}};
    if (max_degree >= 1) out[1].push_back(cell);
    frontier.push_back({j, std::move(cell)});
  }
  for (int deg = 2; deg <= max_degree && !frontier.empty(); ++deg) {
    std::vector<Item> next;
    for (const auto& item : frontier)
      for (GenSet j : sf) {
        if (j == item.top || !gs_subset(item.top, j)) continue;
        BarCell cell = item.cell;
        cell.entries.push_back(
            m.quotient_by_right_divisor(m.delta(j), m.delta(item.top)));
        out[deg].push_back(cell);
        next.push_back({j, std::move(cell)});
      }
    frontier = std::move(next);
  }
  for (auto& cells : out) std::sort(cells.begin(), cells.end());
  return out;
}

MorseEngine<BarCell> make_mu1_engine(const ArtinMonoid& m) {
  return MorseEngine<BarCell>(
      [&m](const BarCell& cell) { return bar_boundary(m, cell); },
      [&m](const BarCell& cell) { return mu1_classify(m, cell); }, {},
      [](const BarCell& cell) { return cell.total_length(); });
}

FormalSum<BarCell> d_theta1(const ArtinMonoid& m, MorseEngine<BarCell>& engine,
                            const BarCell& cell) {
  FormalSum<BarCell> out = bar_boundary(m, cell);
  BarCell face0{{cell.entries.begin() + 1, cell.entries.end()}};
  out.add(face0, -1);
  FormalSum<BarCell> seed;
  seed.add(face0, 1);
  out += engine.theta_infinity(seed);
  return out;
}

bool in_K(const ArtinMonoid& m, const BarCell& cell) {
  GenSet support = 0;
  for (const Word& x : cell.entries) support |= word_support(x);
  return m.in_sf(support);
}

BasedComplex truncated_bar_complex(const ArtinMonoid& m, long max_total_length,
                                   int max_degree) {
  auto cells = enumerate_bar_cells(m, max_total_length, max_degree);
  BasedComplex out;
  const auto& sys = m.system();
  for (int deg = 0; deg < static_cast<int>(cells.size()); ++deg)
    for (const BarCell& cell : cells[deg])
      out.add_cell(CellId{deg, bar_label(sys, cell)});
  for (int deg = 1; deg < static_cast<int>(cells.size()); ++deg)
    for (const BarCell& cell : cells[deg]) {
      FormalSum<CellId> translated;
      for (const auto& [face, coeff] : bar_boundary(m, cell))
        translated.add(CellId{face.degree(), bar_label(sys, face)}, coeff);
      out.set_boundary(CellId{deg, bar_label(sys, cell)}, std::move(translated));
    }
  return out;
}

BasedComplex mu1_morse_complex(const ArtinMonoid& m) {
  auto essentials = mu1_essentials(m, m.system().rank());
  while (essentials.size() > 1 && essentials.back().empty())
    essentials.pop_back();
  auto engine = make_mu1_engine(m);
  const auto& sys = m.system();
  return morse_complex<BarCell>(
      engine, essentials,
      [&sys](const BarCell& cell) { return bar_label(sys, cell); });
}

}  // namespace artin
