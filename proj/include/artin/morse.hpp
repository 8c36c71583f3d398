#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "artin/complex.hpp"
#include "artin/types.hpp"

namespace artin {

enum class CellKind { Essential, Collapsible, Redundant };

template <class Cell>
struct MatchingClassification {
  CellKind kind = CellKind::Essential;
  std::optional<Cell> partner;  // set iff not essential
};

struct EngineLimits {
  // Total redundant-cell expansions per engine before giving up.
  std::size_t max_expansions = 1'000'000;
};

// Morse flow over a based complex given by oracles, so the underlying
// complex may be infinite: only cells actually reached are ever touched.
//
// theta sends an essential cell to itself, a collapsible cell to zero and a
// redundant cell x to x - eps * d(mu(x)) with eps = <d(mu(x)), x>; its
// fixpoint theta_infinity is computed cell by cell with memoization. A cycle
// among redundant cells (a non-noetherian matching) is reported as an error
// instead of looping.
template <class Cell>
class MorseEngine {
 public:
  using BoundaryFn = std::function<FormalSum<Cell>(const Cell&)>;
  using ClassifyFn = std::function<MatchingClassification<Cell>(const Cell&)>;
  using FiltrationFn = std::function<long(const Cell&)>;

  MorseEngine(BoundaryFn boundary, ClassifyFn classify, EngineLimits limits = {},
              FiltrationFn filtration = nullptr)
      : boundary_(std::move(boundary)),
        classify_(std::move(classify)),
        filtration_(std::move(filtration)),
        limits_(limits) {}

  const BoundaryFn& boundary() const { return boundary_; }
  const ClassifyFn& classify() const { return classify_; }
  std::size_t expansions() const { return expansions_; }

  // One flow step, linearly extended.
  FormalSum<Cell> theta(const FormalSum<Cell>& s) const {
    FormalSum<Cell> out;
    for (const auto& [cell, coeff] : s) {
      auto cls = classify_(cell);
      switch (cls.kind) {
        case CellKind::Essential:
          out.add(cell, coeff);
          break;
        case CellKind::Collapsible:
          break;
        case CellKind::Redundant: {
          FormalSum<Cell> dmu = boundary_(*cls.partner);
          Integer eps = dmu.coeff(cell);
          if (eps != 1 && eps != -1)
            fail("invalid_matching", "matched incidence is not a unit");
          out.add(cell, coeff);
          for (const auto& [face, c] : dmu) out.add(face, -eps * c * coeff);
          break;
        }
      }
    }
    return out;
  }

  // Stable value of the flow; supported on essential cells only.
  FormalSum<Cell> theta_infinity(const FormalSum<Cell>& s) {
    FormalSum<Cell> out;
    for (const auto& [cell, coeff] : s) {
      const FormalSum<Cell>& f = flow(cell);
      for (const auto& [e, c] : f) out.add(e, coeff * c);
    }
    return out;
  }

 private:
  const FormalSum<Cell>& flow(const Cell& x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    auto cls = classify_(x);
    FormalSum<Cell> result;
    if (cls.kind == CellKind::Essential) {
      result.add(x, 1);
    } else if (cls.kind == CellKind::Redundant) {
      if (on_path_.count(x))
        fail("non_noetherian", "flow revisits a redundant cell; the matching "
                               "admits a descending cycle");
      if (++expansions_ > limits_.max_expansions)
        fail("cap_exceeded", "flow expansion limit reached");
      on_path_.insert(x);
      FormalSum<Cell> dmu = boundary_(*cls.partner);
      Integer eps = dmu.coeff(x);
      if (eps != 1 && eps != -1) {
        on_path_.erase(x);
        fail("invalid_matching", "matched incidence is not a unit");
      }
      for (const auto& [face, c] : dmu) {
        if (face == x) continue;
        if (filtration_ && filtration_(face) > filtration_(x)) {
          on_path_.erase(x);
          fail("filtration_violation",
               "flow reached a cell above the filtration level of its source");
        }
        const FormalSum<Cell>& sub = flow(face);
        for (const auto& [e, c2] : sub) result.add(e, -eps * c * c2);
      }
      on_path_.erase(x);
    }
    return memo_.emplace(x, std::move(result)).first->second;
  }

  BoundaryFn boundary_;
  ClassifyFn classify_;
  FiltrationFn filtration_;
  EngineLimits limits_;
  std::map<Cell, FormalSum<Cell>> memo_;
  std::set<Cell> on_path_;
  std::size_t expansions_ = 0;
};

// Complex on the essential cells with differential theta_infinity o d.
// `essentials[k]` must list exactly the essential cells in degree k.
template <class Cell>
BasedComplex morse_complex(MorseEngine<Cell>& engine,
                           const std::vector<std::vector<Cell>>& essentials,
                           const std::function<std::string(const Cell&)>& label) {
  BasedComplex out;
  std::map<Cell, CellId> ids;
  for (int deg = 0; deg < static_cast<int>(essentials.size()); ++deg)
    for (const Cell& cell : essentials[deg]) {
      CellId id{deg, label(cell)};
      out.add_cell(id);
      ids.emplace(cell, id);
    }
  for (int deg = 1; deg < static_cast<int>(essentials.size()); ++deg)
    for (const Cell& cell : essentials[deg]) {
      FormalSum<Cell> d = engine.theta_infinity(engine.boundary()(cell));
      FormalSum<CellId> translated;
      for (const auto& [face, coeff] : d) {
        auto it = ids.find(face);
        if (it == ids.end())
          fail("not_essential",
               "flowed boundary leaves the declared essential basis");
        translated.add(it->second, coeff);
      }
      out.set_boundary(ids.at(cell), std::move(translated));
    }
  if (auto bad = out.boundary_square_counterexample())
    fail("boundary_not_square_zero",
         "reduced differential does not square to zero at '" + bad->label + "'");
  return out;
}

struct ValidationFinding {
  std::string check;
  std::string cell;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;
  std::size_t cells = 0;
  std::size_t matched_pairs = 0;
  std::size_t redundant = 0;
  bool ok() const { return findings.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << cells << " cells, " << matched_pairs << " matched pairs, "
       << redundant << " redundant; "
       << (ok() ? "all checks passed" : std::to_string(findings.size()) + " violation(s)");
    return os.str();
  }
};

// Full battery on a finite, boundary- and matching-closed set of cells:
// involution and degree shifts, unit matched incidences, acyclicity of the
// redundant-successor relation, and an optional strict progress measure
// that every successor must increase.
template <class Cell>
ValidationReport validate_matching(
    const std::vector<Cell>& universe,
    const std::function<FormalSum<Cell>(const Cell&)>& boundary,
    const std::function<MatchingClassification<Cell>(const Cell&)>& classify,
    const std::function<int(const Cell&)>& degree,
    const std::function<std::string(const Cell&)>& label,
    const std::function<bool(const Cell&, const Cell&)>& successor_increases =
        nullptr) {
  ValidationReport report;
  report.cells = universe.size();
  std::set<Cell> known(universe.begin(), universe.end());
  auto note = [&](std::string check, const Cell& cell, std::string detail) {
    report.findings.push_back(
        {std::move(check), label(cell), std::move(detail)});
  };

  std::vector<Cell> redundant;
  for (const Cell& cell : universe) {
    auto cls = classify(cell);
    if (cls.kind == CellKind::Essential) {
      if (cls.partner) note("involution", cell, "essential cell has a partner");
      continue;
    }
    if (!cls.partner) {
      note("involution", cell, "matched cell without a partner");
      continue;
    }
    const Cell& p = *cls.partner;
    int shift = cls.kind == CellKind::Redundant ? 1 : -1;
    if (degree(p) != degree(cell) + shift)
      note("degree_shift", cell,
           "partner sits in degree " + std::to_string(degree(p)) +
               ", expected " + std::to_string(degree(cell) + shift));
    if (!known.count(p)) {
      note("universe_not_closed", cell, "partner " + label(p) + " is outside");
      continue;
    }
    auto back = classify(p);
    if (back.kind == CellKind::Essential || !back.partner ||
        !(*back.partner == cell))
      note("involution", cell, "partner of partner is not the cell");
    else if ((cls.kind == CellKind::Redundant) ==
             (back.kind == CellKind::Redundant))
      note("involution", cell, "partner has the same kind");
    if (cls.kind == CellKind::Redundant) {
      ++report.matched_pairs;
      redundant.push_back(cell);
      Integer eps = boundary(p).coeff(cell);
      if (eps != 1 && eps != -1)
        note("z_compatibility", cell,
             "matched incidence is " + eps.str() + ", expected +-1");
    }
  }
  report.redundant = redundant.size();

  // Successor digraph on redundant cells.
  std::map<Cell, std::vector<Cell>> succ;
  std::set<Cell> redundant_set(redundant.begin(), redundant.end());
  for (const Cell& x : redundant) {
    auto cls = classify(x);
    if (!cls.partner) continue;
    for (const auto& [face, coeff] : boundary(*cls.partner)) {
      if (face == x || !redundant_set.count(face)) continue;
      succ[x].push_back(face);
      if (successor_increases && !successor_increases(x, face))
        note("progress_measure", x,
             "successor " + label(face) + " does not strictly increase");
    }
  }
  // Cycle search: 0 = white, 1 = on stack, 2 = done.
  std::map<Cell, int> color;
  std::function<bool(const Cell&)> dfs = [&](const Cell& x) -> bool {
    color[x] = 1;
    for (const Cell& y : succ[x]) {
      int c = color.count(y) ? color[y] : 0;
      if (c == 1) {
        note("acyclicity", x, "successor chain returns to " + label(y));
        return true;
      }
      if (c == 0 && dfs(y)) return true;
    }
    color[x] = 2;
    return false;
  };
  for (const Cell& x : redundant) {
    if (!color.count(x) && dfs(x)) break;
  }
  return report;
}

}  // namespace artin
