#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/types.hpp"

namespace artin {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

// Sparse integer combination of basis cells. Zero coefficients are never
// stored; iteration order is the cell order, so rendering is deterministic.
template <class Cell>
class FormalSum {
 public:
  using Terms = std::map<Cell, Integer>;

  FormalSum() = default;

  void add(const Cell& cell, const Integer& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(cell);
    if (it == terms_.end()) {
      terms_.emplace(cell, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // <cell, sum>: the coefficient of a basis cell.
  Integer coeff(const Cell& cell) const {
    auto it = terms_.find(cell);
    return it == terms_.end() ? Integer{0} : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& [cell, c] : other) add(cell, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& other) {
    for (const auto& [cell, c] : other) add(cell, -c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Integer& k, const FormalSum& s) {
    FormalSum out;
    for (const auto& [cell, c] : s) out.add(cell, k * c);
    return out;
  }
  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

struct CellId {
  int degree = 0;
  std::string label;
  auto operator<=>(const CellId&) const = default;
};

// Graded free complex with an explicit cell basis and sparse boundaries.
class BasedComplex {
 public:
  void add_cell(const CellId& id);
  void set_boundary(const CellId& id, FormalSum<CellId> boundary);

  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<CellId>& basis(int degree) const;
  std::vector<long> ranks() const;
  const FormalSum<CellId>& boundary(const CellId& id) const;

  // Verifies dd = 0 on every basis cell; returns a counterexample if any.
  std::optional<CellId> boundary_square_counterexample() const;

  // Matrix of the degree-k boundary: rows index basis(k-1), columns basis(k).
  IntMatrix boundary_matrix(int k) const;

 private:
  std::vector<std::vector<CellId>> basis_;
  std::map<CellId, FormalSum<CellId>> boundary_;
  std::map<CellId, std::size_t> index_;
};

struct SmithResult {
  // Nonzero diagonal entries, each dividing the next; size equals the rank.
  std::vector<Integer> factors;
  long rank = 0;
};

// Exact Smith normal form over arbitrary-precision integers, pivoting by
// minimal absolute value.
SmithResult smith_normal_form(IntMatrix m);

struct HomologyGroup {
  long betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
  bool trivial() const { return betti == 0 && torsion.empty(); }
  std::string to_string() const;  // "Z^2 + Z/3" or "0"
};

struct HomologyResult {
  std::vector<HomologyGroup> groups;  // groups[k] = H_k

  const HomologyGroup& at(int k) const;
  // Equality up to trailing trivial groups.
  friend bool operator==(const HomologyResult& a, const HomologyResult& b);
  std::string to_string() const;
};

// Integral homology from Smith normal forms of the boundary matrices.
// Throws Error("boundary_not_square_zero") when dd != 0.
HomologyResult homology(const BasedComplex& c);

long euler_characteristic_from_ranks(const std::vector<long>& ranks);
long euler_characteristic(const HomologyResult& h);

}  // namespace artin
