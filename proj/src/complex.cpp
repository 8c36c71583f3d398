#include "artin/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace artin {

void BasedComplex::add_cell(const CellId& id) {
  if (id.degree < 0) fail("invalid_cell", "negative degree");
  if (index_.count(id))
    fail("invalid_cell", "duplicate cell '" + id.label + "' in degree " +
                             std::to_string(id.degree));
  if (static_cast<int>(basis_.size()) <= id.degree)
    basis_.resize(id.degree + 1);
  index_.emplace(id, basis_[id.degree].size());
  basis_[id.degree].push_back(id);
}

void BasedComplex::set_boundary(const CellId& id, FormalSum<CellId> boundary) {
  if (!index_.count(id))
    fail("invalid_cell", "boundary set for unknown cell '" + id.label + "'");
  for (const auto& [face, coeff] : boundary) {
    if (face.degree != id.degree - 1)
      fail("invalid_cell", "boundary of '" + id.label +
                               "' is not concentrated one degree lower");
    if (!index_.count(face))
      fail("invalid_cell",
           "boundary of '" + id.label + "' hits unknown cell '" + face.label + "'");
  }
  boundary_[id] = std::move(boundary);
}

const std::vector<CellId>& BasedComplex::basis(int degree) const {
  static const std::vector<CellId> empty;
  if (degree < 0 || degree > top_degree()) return empty;
  return basis_[degree];
}

std::vector<long> BasedComplex::ranks() const {
  std::vector<long> out;
  out.reserve(basis_.size());
  for (const auto& cells : basis_) out.push_back(static_cast<long>(cells.size()));
  return out;
}

const FormalSum<CellId>& BasedComplex::boundary(const CellId& id) const {
  static const FormalSum<CellId> zero;
  auto it = boundary_.find(id);
  return it == boundary_.end() ? zero : it->second;
}

std::optional<CellId> BasedComplex::boundary_square_counterexample() const {
  for (int deg = 2; deg <= top_degree(); ++deg) {
    for (const CellId& cell : basis_[deg]) {
      FormalSum<CellId> dd;
      for (const auto& [face, coeff] : boundary(cell))
        for (const auto& [ff, c2] : boundary(face)) dd.add(ff, coeff * c2);
      if (!dd.empty()) return cell;
    }
  }
  return std::nullopt;
}

IntMatrix BasedComplex::boundary_matrix(int k) const {
  const auto& cols = basis(k);
  const auto& rows = basis(k - 1);
  IntMatrix m(rows.size(), cols.size());
  m.setZero();
  std::map<CellId, Eigen::Index> row_index;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(rows.size()); ++i)
    row_index.emplace(rows[i], i);
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(cols.size()); ++j)
    for (const auto& [face, coeff] : boundary(cols[j]))
      m(row_index.at(face), j) = coeff;
  return m;
}

namespace {

Integer iabs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

SmithResult smith_normal_form(IntMatrix a) {
  const Eigen::Index nr = a.rows(), nc = a.cols();
  SmithResult out;
  Eigen::Index t = 0;
  while (t < nr && t < nc) {
    // Pick the submatrix entry of minimal nonzero absolute value.
    Eigen::Index pi = -1, pj = -1;
    Integer best;
    for (Eigen::Index i = t; i < nr; ++i)
      for (Eigen::Index j = t; j < nc; ++j) {
        if (a(i, j) == 0) continue;
        Integer v = iabs(a(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    a.row(t).swap(a.row(pi));
    a.col(t).swap(a.col(pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        if (q != 0) a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) {
          // Remainder became the smaller pivot candidate.
          a.row(t).swap(a.row(i));
          clean = false;
        }
      }
      if (!clean) continue;
      for (Eigen::Index j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        if (q != 0) a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      for (Eigen::Index i = t + 1; i < nr && clean; ++i)
        for (Eigen::Index j = t + 1; j < nc && clean; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            clean = false;
          }
    }
    ++t;
  }
  out.rank = static_cast<long>(t);
  out.factors.reserve(t);
  for (Eigen::Index i = 0; i < t; ++i) out.factors.push_back(iabs(a(i, i)));
  // The divisibility fix-up above makes the chain ordered already; normalize
  // defensively so callers can rely on it.
  for (std::size_t i = 0; i + 1 < out.factors.size(); ++i)
    for (std::size_t j = i + 1; j < out.factors.size(); ++j)
      if (out.factors[j] % out.factors[i] != 0) {
        Integer g = boost::multiprecision::gcd(out.factors[i], out.factors[j]);
        Integer l = out.factors[i] / g * out.factors[j];
        out.factors[i] = g;
        out.factors[j] = l;
      }
  return out;
}

std::string HomologyGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (betti == 1) {
    os << "Z";
    first = false;
  } else if (betti > 1) {
    os << "Z^" << betti;
    first = false;
  }
  for (const Integer& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

const HomologyGroup& HomologyResult::at(int k) const {
  static const HomologyGroup trivial_group;
  if (k < 0 || k >= static_cast<int>(groups.size())) return trivial_group;
  return groups[k];
}

bool operator==(const HomologyResult& a, const HomologyResult& b) {
  std::size_t n = std::max(a.groups.size(), b.groups.size());
  for (std::size_t k = 0; k < n; ++k)
    if (a.at(static_cast<int>(k)) != b.at(static_cast<int>(k))) return false;
  return true;
}

std::string HomologyResult::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (k) os << ", ";
    os << "H_" << k << " = " << groups[k].to_string();
  }
  return os.str();
}

HomologyResult homology(const BasedComplex& c) {
  if (auto bad = c.boundary_square_counterexample())
    fail("boundary_not_square_zero",
         "dd != 0 at cell '" + bad->label + "' in degree " +
             std::to_string(bad->degree));
  const int top = c.top_degree();
  HomologyResult out;
  if (top < 0) return out;
  std::vector<SmithResult> snf(top + 2);
  for (int k = 1; k <= top; ++k) snf[k] = smith_normal_form(c.boundary_matrix(k));
  out.groups.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    long n = static_cast<long>(c.basis(k).size());
    long rk = k >= 1 ? snf[k].rank : 0;
    long rk1 = snf[k + 1].rank;
    out.groups[k].betti = n - rk - rk1;
    for (const Integer& d : snf[k + 1].factors)
      if (d > 1) out.groups[k].torsion.push_back(d);
  }
  return out;
}

long euler_characteristic_from_ranks(const std::vector<long>& ranks) {
  long chi = 0;
  int sign = 1;
  for (long r : ranks) {
    chi += sign * r;
    sign = -sign;
  }
  return chi;
}

long euler_characteristic(const HomologyResult& h) {
  long chi = 0;
  int sign = 1;
  for (const auto& g : h.groups) {
    chi += sign * g.betti;
    sign = -sign;
  }
  return chi;
}

}  // namespace artin
