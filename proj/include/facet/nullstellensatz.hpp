#pragma once

// Graph polynomials prod (X_i - X_j) and exact coefficient extraction.
//
// Monomials are packed into a uint64: 4 bits per variable, variable 0 in the
// most significant nibble. Up to 16 variables with exponents up to 15 fit,
// and numeric order of the packed keys is lexicographic order of the
// exponent vectors. Coefficients are arbitrary precision.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "facet/error.hpp"
#include "facet/peg.hpp"

namespace facet {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int max_poly_vars = 16;
inline constexpr int max_poly_exponent = 15;

struct Monomial {
  std::vector<int> exponents;

  int vars() const noexcept { return static_cast<int>(exponents.size()); }
  int degree() const {
    int s = 0;
    for (int k : exponents) s += k;
    return s;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline std::uint64_t pack(const Monomial& m) {
  if (m.vars() > max_poly_vars) throw InputError("at most 16 variables are supported");
  std::uint64_t key = 0;
  for (int i = 0; i < m.vars(); ++i) {
    int k = m.exponents[static_cast<std::size_t>(i)];
    if (k < 0 || k > max_poly_exponent) throw InputError("exponent " + std::to_string(k) + " outside [0,15]");
    key |= static_cast<std::uint64_t>(k) << (4 * (max_poly_vars - 1 - i));
  }
  return key;
}

inline int nibble(std::uint64_t key, int var) {
  return static_cast<int>((key >> (4 * (max_poly_vars - 1 - var))) & 0xF);
}

inline Monomial unpack(std::uint64_t key, int vars) {
  Monomial m;
  for (int i = 0; i < vars; ++i) m.exponents.push_back(nibble(key, i));
  return m;
}

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.vars(); ++i) {
    int k = m.exponents[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    if (!out.empty()) out += ' ';
    out += "X" + std::to_string(i + 1);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

/// Factors (X_i - X_j) over variables 0..vars-1.
struct ConflictPairs {
  int vars = 0;
  std::vector<std::pair<int, int>> pairs;

  ConflictPairs() = default;
  ConflictPairs(int n, std::vector<std::pair<int, int>> p) : vars(n), pairs(std::move(p)) { validate(); }

  /// Builds from 1-based pairs as written in the lemma proofs.
  static ConflictPairs one_based(int n, std::initializer_list<std::pair<int, int>> p) {
    std::vector<std::pair<int, int>> z;
    for (auto [i, j] : p) z.emplace_back(i - 1, j - 1);
    return ConflictPairs(n, std::move(z));
  }

  void validate() const {
    if (vars < 0 || vars > max_poly_vars) throw InputError("variable count must be in [0,16]");
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : pairs) {
      if (i < 0 || i >= vars || j < 0 || j >= vars)
        throw InputError("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") out of range");
      if (i == j) throw InputError("pair repeats variable " + std::to_string(i + 1));
      if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
        throw InputError("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") listed twice");
    }
  }

  int size() const noexcept { return static_cast<int>(pairs.size()); }
  int occurrences(int var) const {
    int c = 0;
    for (auto [i, j] : pairs) c += (i == var) + (j == var);
    return c;
  }
};

class SparsePoly {
 public:
  explicit SparsePoly(int vars = 0) : vars_(vars) {}

  static SparsePoly constant(int vars, const BigInt& c) {
    SparsePoly p(vars);
    if (c != 0) p.terms_[0] = c;
    return p;
  }

  int vars() const noexcept { return vars_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<std::uint64_t, BigInt>& terms() const noexcept { return terms_; }

  BigInt coefficient(const Monomial& m) const {
    if (m.vars() != vars_) throw InputError("monomial has the wrong number of variables");
    auto it = terms_.find(pack(m));
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Multiplies by (X_i - X_j), keeping only monomials accepted by `keep`.
  template <class Keep>
  void multiply_difference(int i, int j, Keep&& keep) {
    std::map<std::uint64_t, BigInt> next;
    const std::uint64_t bump_i = std::uint64_t{1} << (4 * (max_poly_vars - 1 - i));
    const std::uint64_t bump_j = std::uint64_t{1} << (4 * (max_poly_vars - 1 - j));
    auto add = [&](std::uint64_t key, const BigInt& c) {
      if (!keep(key)) return;
      auto [it, fresh] = next.emplace(key, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) next.erase(it);
      }
    };
    for (const auto& [key, c] : terms_) {
      if (nibble(key, i) == max_poly_exponent || nibble(key, j) == max_poly_exponent)
        throw InputError("exponent would exceed 15");
      add(key + bump_i, c);
      add(key + bump_j, -c);
    }
    terms_ = std::move(next);
  }

  /// Value at the point where every variable equals `x`.
  BigInt evaluate_uniform(long long x) const {
    BigInt total = 0;
    for (const auto& [key, c] : terms_) {
      BigInt term = c;
      for (int v = 0; v < vars_; ++v)
        for (int k = 0; k < nibble(key, v); ++k) term *= x;
      total += term;
    }
    return total;
  }

 private:
  int vars_;
  std::map<std::uint64_t, BigInt> terms_;
};

/// Full expansion of the graph polynomial, restricted to monomials whose
/// exponent of X_v never exceeds limit[v]. Exponents only grow, so the
/// restriction does not change any surviving coefficient.
inline SparsePoly expand(const ConflictPairs& cp, const std::vector<int>& limit) {
  cp.validate();
  SparsePoly p = SparsePoly::constant(cp.vars, 1);
  for (auto [i, j] : cp.pairs)
    p.multiply_difference(i, j, [&](std::uint64_t key) {
      return nibble(key, i) <= limit[static_cast<std::size_t>(i)] && nibble(key, j) <= limit[static_cast<std::size_t>(j)];
    });
  return p;
}

inline SparsePoly expand(const ConflictPairs& cp) {
  std::vector<int> limit;
  for (int v = 0; v < cp.vars; ++v) limit.push_back(std::min(cp.occurrences(v), max_poly_exponent));
  return expand(cp, limit);
}

struct CoefficientResult {
  BigInt value = 0;
  bool degree_mismatch = false;
};

/// Coefficient of the target in prod (X_i - X_j). Besides the exponent cap,
/// a partial product is dropped when the factors still to come cannot lift
/// some variable up to its target exponent.
inline CoefficientResult coefficient(const ConflictPairs& cp, const Monomial& target) {
  cp.validate();
  if (target.vars() != cp.vars) throw InputError("target has " + std::to_string(target.vars()) +
                                                 " exponents, expected " + std::to_string(cp.vars));
  pack(target);
  CoefficientResult r;
  if (target.degree() != cp.size()) {
    r.degree_mismatch = true;
    return r;
  }
  std::vector<int> remaining(static_cast<std::size_t>(cp.vars), 0);
  for (auto [i, j] : cp.pairs) ++remaining[static_cast<std::size_t>(i)], ++remaining[static_cast<std::size_t>(j)];

  SparsePoly p = SparsePoly::constant(cp.vars, 1);
  for (auto [i, j] : cp.pairs) {
    --remaining[static_cast<std::size_t>(i)];
    --remaining[static_cast<std::size_t>(j)];
    p.multiply_difference(i, j, [&](std::uint64_t key) {
      for (int v : {i, j}) {
        int k = nibble(key, v), want = target.exponents[static_cast<std::size_t>(v)];
        if (k > want || k + remaining[static_cast<std::size_t>(v)] < want) return false;
      }
      return true;
    });
  }
  r.value = p.coefficient(target);
  return r;
}

struct Witness {
  Monomial monomial;
  BigInt coefficient;
};

/// Lexicographically smallest monomial with k_i <= caps_i - 1 and a nonzero
/// coefficient, if any.
inline std::optional<Witness> cn_witness(const ConflictPairs& cp, const std::vector<int>& caps) {
  cp.validate();
  if (static_cast<int>(caps.size()) != cp.vars) throw InputError("caps must list one bound per variable");
  std::vector<int> limit;
  int room = 0;
  for (int v = 0; v < cp.vars; ++v) {
    int cap = caps[static_cast<std::size_t>(v)];
    if (cap < 1) throw InputError("caps must be positive");
    limit.push_back(std::min({cap - 1, cp.occurrences(v), max_poly_exponent}));
    room += limit.back();
  }
  if (room < cp.size()) return std::nullopt;

  // slack tracks how much the remaining factors can still be absorbed.
  SparsePoly p = SparsePoly::constant(cp.vars, 1);
  int left = cp.size();
  for (auto [i, j] : cp.pairs) {
    --left;
    p.multiply_difference(i, j, [&](std::uint64_t key) {
      if (nibble(key, i) > limit[static_cast<std::size_t>(i)] || nibble(key, j) > limit[static_cast<std::size_t>(j)])
        return false;
      int slack = 0;
      for (int v = 0; v < cp.vars; ++v) slack += limit[static_cast<std::size_t>(v)] - nibble(key, v);
      return slack >= left;
    });
  }
  if (p.terms().empty()) return std::nullopt;
  const auto& [key, c] = *p.terms().begin();
  return Witness{unpack(key, cp.vars), c};
}

struct LemmaPolynomial {
  std::string name;
  ConflictPairs pairs;
  Monomial target;
  std::vector<int> caps;  // lower bounds on list sizes; 1 marks an already colored edge
  long long published = 0;
};

inline std::vector<std::string> lemma_names() {
  return {"four-vertex", "nine-face", "ten-face-adjacent", "ten-face-dist3", "ten-face-dist4"};
}

inline LemmaPolynomial lemma_polynomial(const std::string& name) {
  if (name == "four-vertex")
    return {name,
            ConflictPairs::one_based(8, {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {1, 8}, {2, 3}, {2, 5}, {2, 6}, {2, 7}, {3, 4},
                                         {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 7}, {4, 8}, {5, 6}, {5, 8}, {6, 7}, {7, 8}}),
            Monomial{{3, 3, 3, 3, 2, 2, 2, 2}},
            {4, 4, 4, 4, 4, 4, 4, 4},
            6};
  if (name == "nine-face")
    return {name,
            ConflictPairs::one_based(7, {{1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 7}, {3, 4}, {3, 5}, {4, 5},
                                         {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}}),
            Monomial{{2, 2, 2, 2, 2, 3, 2}},
            {3, 3, 3, 3, 4, 4, 3},
            -3};
  if (name == "ten-face-adjacent")
    return {name,
            ConflictPairs::one_based(10, {{1, 2}, {1, 3}, {1, 9}, {1, 10}, {2, 3}, {2, 5}, {2, 9}, {2, 10}, {3, 5},
                                          {3, 6}, {3, 10}, {5, 6}, {5, 7}, {6, 7}, {6, 9}, {7, 9}, {7, 10}, {9, 10}}),
            Monomial{{4, 4, 2, 0, 2, 1, 2, 0, 0, 3}},
            {5, 5, 3, 1, 3, 3, 3, 1, 3, 5},
            1};
  if (name == "ten-face-dist3" || name == "ten-face-dist4") {
    LemmaPolynomial lp{name,
                       ConflictPairs::one_based(10, {{1, 2}, {1, 3}, {1, 4}, {1, 8}, {1, 10}, {2, 3}, {2, 4}, {2, 10},
                                                     {3, 4}, {3, 6}, {3, 10}, {4, 6}, {4, 7}, {6, 7}, {6, 8}, {7, 8},
                                                     {7, 10}, {8, 10}}),
                       Monomial{{3, 2, 2, 3, 0, 2, 2, 1, 0, 3}},
                       {4, 3, 4, 4, 1, 3, 3, 3, 1, 4},
                       -1};
    if (name == "ten-face-dist4") lp.caps[2] = 3;
    return lp;
  }
  throw InputError("unknown lemma '" + name + "'");
}

struct PairsFile {
  ConflictPairs pairs;
  std::optional<Monomial> target;
  std::optional<std::vector<int>> caps;
};

/// Text form, 1-based: `vars <n>` (optional), `p <i> <j>` per factor,
/// `t <k1> ... <kn>` for a target, `caps <c1> ... <cn>` for list sizes.
inline PairsFile parse_pairs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<int> declared;
  std::vector<std::pair<int, int>> raw;
  std::optional<std::vector<int>> target, caps;
  auto ints = [&](const std::vector<std::string>& tok) {
    std::vector<int> out;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      long long x = detail::parse_int(tok[i], line_no);
      if (x < -1000000 || x > 1000000) throw InputError("line " + std::to_string(line_no) + ": value out of range");
      out.push_back(static_cast<int>(x));
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = detail::tokens_of(line);
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "vars") {
      auto v = ints(tok);
      if (v.size() != 1) throw InputError(where + "expected 'vars <n>'");
      declared = v[0];
    } else if (tok[0] == "p") {
      auto v = ints(tok);
      if (v.size() != 2) throw InputError(where + "expected 'p <i> <j>'");
      if (v[0] < 1 || v[1] < 1) throw InputError(where + "variables are numbered from 1");
      raw.emplace_back(v[0] - 1, v[1] - 1);
    } else if (tok[0] == "t") {
      if (target) throw InputError(where + "target given twice");
      target = ints(tok);
    } else if (tok[0] == "caps") {
      if (caps) throw InputError(where + "caps given twice");
      caps = ints(tok);
    } else {
      throw InputError(where + "unknown directive '" + tok[0] + "'");
    }
  }
  int n = declared.value_or(0);
  if (!declared) {
    for (auto [i, j] : raw) n = std::max({n, i + 1, j + 1});
    if (target) n = std::max(n, static_cast<int>(target->size()));
    if (caps) n = std::max(n, static_cast<int>(caps->size()));
  }
  PairsFile f{ConflictPairs(n, std::move(raw)), std::nullopt, caps};
  if (target) {
    if (static_cast<int>(target->size()) != n)
      throw InputError("target has " + std::to_string(target->size()) + " exponents, expected " + std::to_string(n));
    for (int k : *target)
      if (k < 0) throw InputError("exponents must be nonnegative");
    f.target = Monomial{*target};
  }
  if (caps && static_cast<int>(caps->size()) != n)
    throw InputError("caps line has " + std::to_string(caps->size()) + " entries, expected " + std::to_string(n));
  return f;
}

inline std::string serialize_pairs(const ConflictPairs& cp, const std::optional<Monomial>& target = std::nullopt,
                                   const std::optional<std::vector<int>>& caps = std::nullopt) {
  std::ostringstream out;
  out << "vars " << cp.vars << "\n";
  for (auto [i, j] : cp.pairs) out << "p " << i + 1 << ' ' << j + 1 << "\n";
  if (target) {
    out << "t";
    for (int k : target->exponents) out << ' ' << k;
    out << "\n";
  }
  if (caps) {
    out << "caps";
    for (int c : *caps) out << ' ' << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace facet
