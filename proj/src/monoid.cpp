#include "artin/monoid.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace artin {

ArtinMonoid::ArtinMonoid(CoxeterSystem sys, std::size_t class_cap)
    : sys_(sys), cox_(std::move(sys), class_cap), cap_(class_cap) {}

Word ArtinMonoid::canonical(const Word& w) const {
  for (char c : w)
    if (static_cast<unsigned char>(c) >= static_cast<unsigned>(sys_.rank()))
      fail("unknown_generator", "letter index out of range");
  {
    std::lock_guard lock(mutex_);
    if (auto it = canon_.find(w); it != canon_.end()) return it->second;
  }
  auto cls = braid_class(sys_, w, cap_);
  std::sort(cls.begin(), cls.end(), shortlex_less);
  Word canon = cls.front();
  auto shared = std::make_shared<const std::vector<Word>>(std::move(cls));
  std::lock_guard lock(mutex_);
  canon_.emplace(w, canon);
  canon_.emplace(canon, canon);
  class_.emplace(canon, std::move(shared));
  return canon;
}

std::shared_ptr<const std::vector<Word>> ArtinMonoid::word_class(
    const Word& w) const {
  Word canon = canonical(w);
  {
    std::lock_guard lock(mutex_);
    if (auto it = class_.find(canon); it != class_.end()) return it->second;
  }
  auto cls = braid_class(sys_, canon, cap_);
  std::sort(cls.begin(), cls.end(), shortlex_less);
  auto shared = std::make_shared<const std::vector<Word>>(std::move(cls));
  std::lock_guard lock(mutex_);
  class_.emplace(canon, shared);
  return shared;
}

GenSet ArtinMonoid::ending_set(const Word& x) const {
  auto cls = word_class(x);
  if (cls->front().empty())
    fail("identity_input", "the identity has no ending set");
  GenSet out = 0;
  for (const Word& rep : *cls)
    out |= gen_bit(static_cast<unsigned char>(rep.back()));
  return out;
}

bool ArtinMonoid::is_right_divisor(const Word& d, const Word& x) const {
  Word cd = canonical(d);
  if (cd.empty()) return true;
  auto cls = word_class(x);
  const std::size_t k = cd.size();
  if (cls->front().size() < k) return false;
  std::unordered_set<Word> suffixes;
  for (const Word& rep : *cls) suffixes.insert(rep.substr(rep.size() - k));
  for (const Word& s : suffixes)
    if (canonical(s) == cd) return true;
  return false;
}

bool ArtinMonoid::is_left_divisor(const Word& d, const Word& x) const {
  Word cd = canonical(d);
  if (cd.empty()) return true;
  auto cls = word_class(x);
  const std::size_t k = cd.size();
  if (cls->front().size() < k) return false;
  std::unordered_set<Word> prefixes;
  for (const Word& rep : *cls) prefixes.insert(rep.substr(0, k));
  for (const Word& p : prefixes)
    if (canonical(p) == cd) return true;
  return false;
}

Word ArtinMonoid::quotient_by_right_divisor(const Word& x, const Word& d) const {
  Word cd = canonical(d);
  if (cd.empty()) return canonical(x);
  auto cls = word_class(x);
  const std::size_t k = cd.size();
  if (cls->front().size() >= k) {
    for (const Word& rep : *cls) {
      if (canonical(rep.substr(rep.size() - k)) == cd)
        return canonical(rep.substr(0, rep.size() - k));
    }
  }
  fail("not_divisible", sys_.render_word(cd) + " does not right-divide " +
                            sys_.render_word(cls->front()));
}

std::vector<Word> ArtinMonoid::left_divisors(const Word& x) const {
  auto cls = word_class(x);
  std::set<Word> canon;
  for (const Word& rep : *cls)
    for (std::size_t k = 0; k <= rep.size(); ++k)
      canon.insert(canonical(rep.substr(0, k)));
  std::vector<Word> out(canon.begin(), canon.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<Word> ArtinMonoid::right_divisors(const Word& x) const {
  auto cls = word_class(x);
  std::set<Word> canon;
  for (const Word& rep : *cls)
    for (std::size_t k = 0; k <= rep.size(); ++k)
      canon.insert(canonical(rep.substr(rep.size() - k)));
  std::vector<Word> out(canon.begin(), canon.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

bool ArtinMonoid::in_sf(GenSet J) const {
  std::lock_guard lock(mutex_);
  if (auto it = sf_verdict_.find(J); it != sf_verdict_.end()) return it->second;
  bool finite = classify_subset(sys_, J).finite;
  sf_verdict_.emplace(J, finite);
  return finite;
}

const std::vector<GenSet>& ArtinMonoid::sf() const {
  std::lock_guard lock(mutex_);
  if (!sf_list_) sf_list_ = enumerate_sf(sys_);
  return *sf_list_;
}

Word ArtinMonoid::delta(GenSet J) const {
  if (J == 0) fail("empty_subset", "delta needs a nonempty subset");
  {
    std::lock_guard lock(mutex_);
    if (auto it = delta_.find(J); it != delta_.end()) return it->second;
  }
  if (!in_sf(J))
    fail("infinite_type",
         "subset " + sys_.render_set(J) + " has no least common multiple");
  Word w = canonical(cox_.longest_element(J));
  std::lock_guard lock(mutex_);
  delta_.emplace(J, w);
  return w;
}

bool ArtinMonoid::in_delta_set(const Word& x) const {
  Word c = canonical(x);
  if (c.empty()) return false;
  return c == delta(ending_set(c));
}

int ArtinMonoid::default_lcm_bound(const Word& a, const Word& b) const {
  const int la = static_cast<int>(canonical(a).size());
  const int lb = static_cast<int>(canonical(b).size());
  GenSet J = support(a) | support(b);
  if (J != 0 && in_sf(J))
    return la + lb + static_cast<int>(delta(J).size());
  return std::max({24, la, lb});
}

ArtinMonoid::Lcm ArtinMonoid::left_lcm(const Word& a, const Word& b,
                                       std::optional<int> bound) const {
  using Status = Lcm::Status;
  Word ca = canonical(a), cb = canonical(b);
  if (ca.empty()) return {Status::Found, cb, 0};
  if (cb.empty()) return {Status::Found, ca, 0};

  // Provable nonexistence: a common left multiple is right-divisible by every
  // letter of I(a) and I(b), so that union must be finite type.
  GenSet ends = ending_set(ca) | ending_set(cb);
  if (!in_sf(ends)) return {Status::NoCommonMultiple, {}, 0};

  const int limit = bound ? *bound : default_lcm_bound(ca, cb);
  const int start = static_cast<int>(std::max(ca.size(), cb.size()));
  if (limit < start)
    fail("invalid_bound", "lcm bound below max(|a|,|b|)");

  // Level sets of distinct left multiples x*a with |x| = len - |a|.
  std::vector<Word> level{ca};
  for (int len = static_cast<int>(ca.size()); len <= limit; ++len) {
    std::set<Word> hits;
    for (const Word& c : level)
      if (static_cast<int>(c.size()) >= start && is_right_divisor(cb, c))
        hits.insert(c);
    if (!hits.empty()) {
      // Minimal-length common multiples are least ones, hence unique.
      if (hits.size() != 1)
        fail("internal_error", "distinct minimal common multiples found");
      return {Status::Found, *hits.begin(), len};
    }
    if (len == limit) break;
    std::set<Word> next;
    for (const Word& c : level)
      for (int s = 0; s < sys_.rank(); ++s)
        next.insert(canonical(Word(1, static_cast<char>(s)) + c));
    level.assign(next.begin(), next.end());
  }
  return {Status::Inconclusive, {}, limit};
}

ArtinMonoid::Lcm ArtinMonoid::left_complement(const Word& x, const Word& y,
                                              std::optional<int> bound) const {
  Lcm lcm = left_lcm(x, y, bound);
  if (lcm.status != Lcm::Status::Found) return lcm;
  lcm.value = quotient_by_right_divisor(lcm.value, y);
  return lcm;
}

std::vector<GenSet> ArtinMonoid::bs_normal_form(const Word& x) const {
  Word cur = canonical(x);
  if (cur.empty()) fail("identity_input", "the identity has no normal form");
  std::vector<GenSet> rightmost_first;
  while (!cur.empty()) {
    GenSet J = ending_set(cur);
    rightmost_first.push_back(J);
    cur = quotient_by_right_divisor(cur, delta(J));
  }
  return {rightmost_first.rbegin(), rightmost_first.rend()};
}

bool ArtinMonoid::is_square_free(const Word& x) const {
  auto cls = word_class(x);
  for (const Word& rep : *cls)
    for (std::size_t i = 0; i + 1 < rep.size(); ++i)
      if (rep[i] == rep[i + 1]) return false;
  return true;
}

std::vector<Word> ArtinMonoid::square_free_elements(
    std::optional<int> max_len) const {
  if (!max_len && !in_sf(sys_.all()))
    fail("infinite_type",
         "full square-free enumeration requires a finite-type system");
  auto words = cox_.elements(sys_.all(), max_len, cap_);
  std::vector<Word> out;
  out.reserve(words.size());
  for (const Word& w : words) {
    if (w.empty()) continue;
    out.push_back(canonical(w));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<std::vector<Word>> ArtinMonoid::elements_by_length(
    int max_len) const {
  std::vector<std::vector<Word>> levels{{Word{}}};
  for (int len = 1; len <= max_len; ++len) {
    std::set<Word> next;
    for (const Word& w : levels.back())
      for (int s = 0; s < sys_.rank(); ++s)
        next.insert(canonical(w + static_cast<char>(s)));
    if (next.size() > cap_)
      fail("cap_exceeded", "element census exceeds the class cap");
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

std::vector<std::pair<Word, Word>> ArtinMonoid::canonical_pairs() const {
  std::lock_guard lock(mutex_);
  std::vector<std::pair<Word, Word>> out;
  out.reserve(canon_.size());
  for (const auto& [w, c] : canon_) out.emplace_back(w, c);
  std::sort(out.begin(), out.end());
  return out;
}

void ArtinMonoid::seed_canonical(const Word& w, const Word& canon) const {
  if (canon.size() > w.size()) return;  // cannot be a valid pair
  for (char c : w)
    if (static_cast<unsigned char>(c) >= static_cast<unsigned>(sys_.rank()))
      return;
  for (char c : canon)
    if (static_cast<unsigned char>(c) >= static_cast<unsigned>(sys_.rank()))
      return;
  std::lock_guard lock(mutex_);
  canon_.emplace(w, canon);
}

}  // namespace artin
