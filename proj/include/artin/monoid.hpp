#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/types.hpp"

namespace artin {

// Exact arithmetic in the positive monoid of a Coxeter system. Elements are
// identified with the shortlex-minimal word of their braid-equivalence class;
// the class itself (finite, since the relations preserve length) is the
// ground-truth oracle for equality, divisibility and factorizations.
class ArtinMonoid {
 public:
  explicit ArtinMonoid(CoxeterSystem sys, std::size_t class_cap = kDefaultClassCap);

  const CoxeterSystem& system() const { return sys_; }
  const CoxeterGroup& coxeter() const { return cox_; }

  Word canonical(const Word& w) const;
  bool equal(const Word& u, const Word& v) const {
    return canonical(u) == canonical(v);
  }
  Word product(const Word& u, const Word& v) const { return canonical(u + v); }

  // All words of the braid-equivalence class, sorted shortlex.
  std::shared_ptr<const std::vector<Word>> word_class(const Word& w) const;

  GenSet support(const Word& w) const { return word_support(canonical(w)); }

  // I(x): the letters a word for x may end with. Always a finite-type set.
  GenSet ending_set(const Word& x) const;

  bool is_right_divisor(const Word& d, const Word& x) const;
  bool is_left_divisor(const Word& d, const Word& x) const;
  // The unique q with x = q * d. Throws Error("not_divisible") otherwise.
  Word quotient_by_right_divisor(const Word& x, const Word& d) const;

  std::vector<Word> left_divisors(const Word& x) const;
  std::vector<Word> right_divisors(const Word& x) const;

  // Finite-type bookkeeping shared by all the complexes.
  bool in_sf(GenSet J) const;
  const std::vector<GenSet>& sf() const;

  // The lift of the longest element of a nonempty finite-type subset.
  Word delta(GenSet J) const;
  // Same, with the empty set mapped to the identity.
  Word delta_or_identity(GenSet J) const { return J ? delta(J) : Word{}; }
  // x lies in the distinguished generating set D of all such lifts.
  bool in_delta_set(const Word& x) const;

  struct Lcm {
    enum class Status { Found, NoCommonMultiple, Inconclusive };
    Status status = Status::Inconclusive;
    Word value;
    // Search depth reached; meaningful for Inconclusive.
    int bound = 0;
  };

  // Least common left multiple by iterative deepening over left multiples
  // of `a`. NoCommonMultiple is only returned with proof: any common left
  // multiple is right-divisible by every letter of I(a) and I(b), so their
  // union must be finite type. Past the bound the verdict is Inconclusive,
  // never a silent miss.
  Lcm left_lcm(const Word& a, const Word& b, std::optional<int> bound = {}) const;
  int default_lcm_bound(const Word& a, const Word& b) const;

  // x/y with llcm(x,y) = (x/y) * y; status mirrors left_lcm.
  Lcm left_complement(const Word& x, const Word& y,
                      std::optional<int> bound = {}) const;

  // Greedy right-stripping factorization into delta factors, leftmost factor
  // first: x = delta(out[0]) * ... * delta(out.back()).
  std::vector<GenSet> bs_normal_form(const Word& x) const;

  // No word of the class contains a doubled letter.
  bool is_square_free(const Word& x) const;
  // Lifts of all Coxeter-group elements except the identity; `max_len`
  // truncates by length, and the full enumeration requires finite type.
  std::vector<Word> square_free_elements(std::optional<int> max_len = {}) const;

  // Canonical forms grouped by length, levels[l] for l = 0..max_len.
  std::vector<std::vector<Word>> elements_by_length(int max_len) const;

  // Memo import/export for the optional canonical-form cache.
  std::vector<std::pair<Word, Word>> canonical_pairs() const;
  void seed_canonical(const Word& w, const Word& canon) const;

 private:
  CoxeterSystem sys_;
  CoxeterGroup cox_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Word> canon_;
  mutable std::unordered_map<Word, std::shared_ptr<const std::vector<Word>>> class_;
  mutable std::map<GenSet, bool> sf_verdict_;
  mutable std::map<GenSet, Word> delta_;
  mutable std::optional<std::vector<GenSet>> sf_list_;
};

}  // namespace artin
