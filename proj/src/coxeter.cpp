#include "artin/coxeter.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace artin {

namespace {

bool is_reserved(std::string_view tok) {
  return tok == "generators" || tok == "default" || tok == "m" ||
         tok == "=" || tok == "inf";
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_bond_value(const std::string& tok, int line_no) {
  if (tok == "inf") return kInfinity;
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    if (v < 2) fail("parse_error", "line " + std::to_string(line_no) +
                                       ": bond must be >= 2 or inf");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail("parse_error", "line " + std::to_string(line_no) +
                            ": expected an integer >= 2 or 'inf', got '" +
                            tok + "'");
  }
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> names,
                             std::vector<std::vector<int>> matrix)
    : names_(std::move(names)), m_(std::move(matrix)) {
  const int n = static_cast<int>(names_.size());
  if (n == 0) fail("parse_error", "a system needs at least one generator");
  if (n > 32) fail("parse_error", "at most 32 generators are supported");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) fail("parse_error", "empty generator name");
    if (!seen.insert(name).second)
      fail("parse_error", "duplicate generator '" + name + "'");
    if (name.size() > 1) single_char_ = false;
  }
  if (static_cast<int>(m_.size()) != n)
    fail("parse_error", "bond matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m_[i].size()) != n)
      fail("parse_error", "bond matrix has wrong size");
    if (m_[i][i] != 1) fail("parse_error", "diagonal bonds must be 1");
    for (int j = 0; j < n; ++j) {
      if (i != j && m_[i][j] != kInfinity && m_[i][j] < 2)
        fail("parse_error", "off-diagonal bond below 2 for pair (" +
                                names_[i] + "," + names_[j] + ")");
      if (m_[i][j] != m_[j][i])
        fail("parse_error", "bond matrix is not symmetric");
    }
  }
}

CoxeterSystem CoxeterSystem::parse(std::string_view text) {
  std::vector<std::string> names;
  std::optional<int> default_bond;
  // overrides keyed by (min,max) index pair
  std::map<std::pair<int, int>, int> bonds;
  auto index = [&](const std::string& tok, int line_no) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == tok) return i;
    fail("parse_error", "line " + std::to_string(line_no) +
                            ": unknown generator '" + tok + "'");
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "generators") {
      if (!names.empty())
        fail("parse_error",
             "line " + std::to_string(line_no) + ": duplicate generators line");
      if (toks.size() < 3 || toks[1] != "=")
        fail("parse_error", "line " + std::to_string(line_no) +
                                ": expected 'generators = <name> ...'");
      for (std::size_t i = 2; i < toks.size(); ++i) {
        if (is_reserved(toks[i]))
          fail("parse_error", "line " + std::to_string(line_no) +
                                  ": reserved word '" + toks[i] +
                                  "' cannot name a generator");
        names.push_back(toks[i]);
      }
    } else if (toks[0] == "default") {
      if (names.empty())
        fail("parse_error", "line " + std::to_string(line_no) +
                                ": generators line must come first");
      if (default_bond)
        fail("parse_error",
             "line " + std::to_string(line_no) + ": duplicate default line");
      if (toks.size() != 3 || toks[1] != "=")
        fail("parse_error", "line " + std::to_string(line_no) +
                                ": expected 'default = <int|inf>'");
      default_bond = parse_bond_value(toks[2], line_no);
    } else if (toks[0] == "m") {
      if (names.empty())
        fail("parse_error", "line " + std::to_string(line_no) +
                                ": generators line must come first");
      if (toks.size() != 5 || toks[3] != "=")
        fail("parse_error", "line " + std::to_string(line_no) +
                                ": expected 'm <name> <name> = <int|inf>'");
      int a = index(toks[1], line_no);
      int b = index(toks[2], line_no);
      if (a == b)
        fail("parse_error", "line " + std::to_string(line_no) +
                                ": bond requires two distinct generators");
      int v = parse_bond_value(toks[4], line_no);
      auto key = std::minmax(a, b);
      auto [it, inserted] = bonds.emplace(key, v);
      if (!inserted && it->second != v)
        fail("parse_error", "line " + std::to_string(line_no) +
                                ": bond for (" + toks[1] + "," + toks[2] +
                                ") contradicts an earlier line");
    } else {
      fail("parse_error", "line " + std::to_string(line_no) +
                              ": unrecognized directive '" + toks[0] + "'");
    }
  }
  if (names.empty()) fail("parse_error", "missing generators line");

  const int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto it = bonds.find({i, j});
      int v;
      if (it != bonds.end()) {
        v = it->second;
      } else if (default_bond) {
        v = *default_bond;
      } else {
        fail("parse_error", "bond for (" + names[i] + "," + names[j] +
                                ") is not declared and no default is set");
      }
      m[i][j] = m[j][i] = v;
    }
  return CoxeterSystem(std::move(names), std::move(m));
}

std::optional<int> CoxeterSystem::index_of(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Word CoxeterSystem::parse_word(std::string_view text) const {
  Word out;
  if (text == "1") return out;  // identity
  if (single_char_) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '.') continue;
      auto idx = index_of(std::string_view(&c, 1));
      if (!idx)
        fail("unknown_generator",
             std::string("unknown generator '") + c + "'");
      out.push_back(static_cast<char>(*idx));
    }
    return out;
  }
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    auto idx = index_of(cur);
    if (!idx) fail("unknown_generator", "unknown generator '" + cur + "'");
    out.push_back(static_cast<char>(*idx));
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return out;
}

std::string CoxeterSystem::render_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) out.push_back('.');
    out += names_[static_cast<unsigned char>(w[i])];
  }
  return out;
}

std::string CoxeterSystem::render_set(GenSet J) const {
  std::string out = "{";
  bool first = true;
  for (int i : gs_elements(J)) {
    if (!first) out.push_back(',');
    out += names_[i];
    first = false;
  }
  out.push_back('}');
  return out;
}

std::string CoxeterSystem::describe() const {
  std::ostringstream os;
  os << "generators =";
  for (const auto& n : names_) os << ' ' << n;
  os << '\n';
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) {
      os << "m " << names_[i] << ' ' << names_[j] << " = ";
      if (m_[i][j] == kInfinity)
        os << "inf";
      else
        os << m_[i][j];
      os << '\n';
    }
  return os.str();
}

std::string CoxeterFamily::to_string() const {
  if (series == 'I') return "I2(" + std::to_string(bond) + ")";
  return std::string(1, series) + std::to_string(rank);
}

namespace {

// Matches one connected diagram against the finite-type catalogue.
// `vertices` are generator indices; edges are the bonds >= 3.
std::optional<CoxeterFamily> classify_component(const CoxeterSystem& sys,
                                                const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sys.bond(vertices[i], vertices[j]) == kInfinity) return std::nullopt;

  if (n == 1) return CoxeterFamily{'A', 1, 0};
  if (n == 2) {
    int m = sys.bond(vertices[0], vertices[1]);
    if (m == 3) return CoxeterFamily{'A', 2, 0};
    if (m == 4) return CoxeterFamily{'B', 2, 0};
    return CoxeterFamily{'I', 2, m};
  }

  // Adjacency inside the component.
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sys.bond(vertices[i], vertices[j]) >= 3) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
  if (edges != n - 1) return std::nullopt;  // contains a cycle

  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) {
      if (branch >= 0) return std::nullopt;  // two branch points
      branch = i;
    }
  }

  auto bond_at = [&](int i, int j) { return sys.bond(vertices[i], vertices[j]); };

  if (branch < 0) {
    // A path; walk it from one endpoint and read off the bond labels.
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (adj[i].size() == 1) start = i;
    std::vector<int> labels;
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int t : adj[cur])
        if (t != prev) next = t;
      if (next < 0) break;
      labels.push_back(bond_at(cur, next));
      prev = cur;
      cur = next;
    }
    int big = 0, big_pos = -1;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] > 3) {
        ++big;
        big_pos = static_cast<int>(i);
      }
    if (big == 0) return CoxeterFamily{'A', n, 0};
    if (big > 1) return std::nullopt;
    bool at_end = big_pos == 0 || big_pos == static_cast<int>(labels.size()) - 1;
    if (labels[big_pos] == 4) {
      if (at_end) return CoxeterFamily{'B', n, 0};
      if (n == 4) return CoxeterFamily{'F', 4, 0};
      return std::nullopt;
    }
    if (labels[big_pos] == 5 && at_end) {
      if (n == 3) return CoxeterFamily{'H', 3, 0};
      if (n == 4) return CoxeterFamily{'H', 4, 0};
    }
    return std::nullopt;
  }

  // One degree-3 vertex: D or E shapes, simply laced only.
  for (int i = 0; i < n; ++i)
    for (int j : adj[i])
      if (bond_at(i, j) != 3) return std::nullopt;
  std::vector<int> arms;
  for (int t : adj[branch]) {
    int len = 1, prev = branch, cur = t;
    while (true) {
      int next = -1;
      for (int u : adj[cur])
        if (u != prev) next = u;
      if (next < 0) break;
      ++len;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return CoxeterFamily{'D', arms[2] + 3, 0};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return CoxeterFamily{'E', arms[2] + 4, 0};
  return std::nullopt;
}

}  // namespace

SubsetClassification classify_subset(const CoxeterSystem& sys, GenSet subset) {
  if (!gs_subset(subset, sys.all()))
    fail("unknown_generator", "subset contains bits outside the system");
  SubsetClassification out;
  out.subset = subset;
  out.finite = true;

  // Connected components of the diagram restricted to the subset.
  // Edges are all bonds != 2, including infinite ones.
  auto members = gs_elements(subset);
  std::set<int> todo(members.begin(), members.end());
  while (!todo.empty()) {
    std::vector<int> comp;
    std::deque<int> queue{*todo.begin()};
    todo.erase(todo.begin());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (auto it = todo.begin(); it != todo.end();) {
        if (sys.bond(v, *it) != 2) {
          queue.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    auto family = classify_component(sys, comp);
    if (!family) {
      out.finite = false;
      out.components.clear();
      return out;
    }
    GenSet mask = 0;
    for (int v : comp) mask |= gen_bit(v);
    out.components.emplace_back(mask, *family);
  }
  return out;
}

std::vector<GenSet> enumerate_sf(const CoxeterSystem& sys) {
  std::vector<GenSet> out;
  const GenSet full = sys.all();
  for (GenSet J = 0;; ++J) {
    if (classify_subset(sys, J).finite) out.push_back(J);
    if (J == full) break;
  }
  std::sort(out.begin(), out.end(), [](GenSet a, GenSet b) {
    if (gs_size(a) != gs_size(b)) return gs_size(a) < gs_size(b);
    return gs_elements(a) < gs_elements(b);
  });
  return out;
}

GramVerdict gram_positive_definite(const CoxeterSystem& sys, GenSet subset) {
  if (!gs_subset(subset, sys.all()))
    fail("unknown_generator", "subset contains bits outside the system");
  auto members = gs_elements(subset);
  const int n = static_cast<int>(members.size());
  if (n == 0)
    return GramVerdict{true, std::numeric_limits<double>::infinity()};
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        g(i, j) = 1.0;
      } else {
        int m = sys.bond(members[i], members[j]);
        g(i, j) = m == kInfinity ? -1.0 : -std::cos(M_PI / m);
      }
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g,
                                                        Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  return GramVerdict{min_eig > 0.0, min_eig};
}

std::vector<Word> braid_class(const CoxeterSystem& sys, const Word& w,
                              std::size_t cap) {
  std::unordered_set<Word> seen{w};
  std::deque<Word> queue{w};
  std::vector<Word> out;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    out.push_back(cur);
    const std::size_t len = cur.size();
    for (std::size_t i = 0; i + 1 < len; ++i) {
      int s = static_cast<unsigned char>(cur[i]);
      int t = static_cast<unsigned char>(cur[i + 1]);
      if (s == t) continue;
      int m = sys.bond(s, t);
      if (m == kInfinity || i + m > len) continue;
      bool match = true;
      for (int k = 0; k < m && match; ++k)
        match = static_cast<unsigned char>(cur[i + k]) == (k % 2 == 0 ? s : t);
      if (!match) continue;
      Word next = cur;
      for (int k = 0; k < m; ++k)
        next[i + k] = static_cast<char>(k % 2 == 0 ? t : s);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          fail("cap_exceeded", "braid class exceeds " + std::to_string(cap) +
                                   " words; raise the cap for larger runs");
        queue.push_back(next);
      }
    }
  }
  return out;
}

CoxeterGroup::CoxeterGroup(CoxeterSystem sys, std::size_t cap)
    : sys_(std::move(sys)), cap_(cap) {}

Word CoxeterGroup::canonical(const Word& w) const {
  for (char c : w)
    if (static_cast<unsigned char>(c) >= static_cast<unsigned>(sys_.rank()))
      fail("unknown_generator", "letter index out of range");
  {
    std::lock_guard lock(mutex_);
    if (auto it = canon_.find(w); it != canon_.end()) return it->second;
  }
  Word working = w;
  Word result;
  while (true) {
    auto cls = braid_class(sys_, working, cap_);
    const Word* shorten = nullptr;
    std::size_t at = 0;
    for (const Word& u : cls) {
      for (std::size_t i = 0; i + 1 < u.size(); ++i)
        if (u[i] == u[i + 1]) {
          shorten = &u;
          at = i;
          break;
        }
      if (shorten) break;
    }
    if (shorten) {
      working = *shorten;
      working.erase(at, 2);
      continue;
    }
    result = *std::min_element(cls.begin(), cls.end(), shortlex_less);
    break;
  }
  std::lock_guard lock(mutex_);
  canon_.emplace(w, result);
  canon_.emplace(result, result);
  return result;
}

std::vector<Word> CoxeterGroup::elements(GenSet J, std::optional<int> max_len,
                                         std::size_t count_cap) const {
  std::vector<Word> out{Word{}};
  std::unordered_set<Word> seen{Word{}};
  std::vector<Word> level{Word{}};
  auto gens = gs_elements(J);
  while (!level.empty()) {
    std::vector<Word> next;
    for (const Word& wrd : level) {
      if (max_len && static_cast<int>(wrd.size()) >= *max_len) continue;
      for (int s : gens) {
        Word ext = wrd;
        ext.push_back(static_cast<char>(s));
        Word c = canonical(ext);
        if (c.size() != ext.size()) continue;  // descent, already seen shorter
        if (seen.insert(c).second) {
          if (seen.size() > count_cap)
            fail("cap_exceeded",
                 "group enumeration exceeds " + std::to_string(count_cap));
          next.push_back(c);
          out.push_back(c);
        }
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

Word CoxeterGroup::longest_element(GenSet J) const {
  if (J == 0) fail("empty_subset", "longest element needs a nonempty subset");
  if (!classify_subset(sys_, J).finite)
    fail("infinite_type",
         "subset " + sys_.render_set(J) + " is not finite type");
  Word w;
  auto gens = gs_elements(J);
  while (true) {
    bool extended = false;
    for (int s : gens) {
      Word ext = w;
      ext.push_back(static_cast<char>(s));
      Word c = canonical(ext);
      if (c.size() > w.size()) {
        w = std::move(c);
        extended = true;
        break;
      }
    }
    if (!extended) return w;
  }
}

}  // namespace artin
