#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tihecke/errors.hpp"

namespace tihecke {

inline constexpr std::int32_t npos = -1;

// Coxeter matrix plus a diagram involution. Generators are 0-based
// internally; all user-facing text is 1-based. Matrix entry 0 encodes an
// infinite bond.
struct CoxeterSpec {
  std::vector<std::vector<int>> matrix;
  std::vector<int> star;  // 0-based permutation of generators
  std::string label;      // preset name when constructed from one

  int rank() const { return static_cast<int>(matrix.size()); }

  static CoxeterSpec from_matrix(std::vector<std::vector<int>> m, std::vector<int> star_zero_based = {}) {
    CoxeterSpec spec;
    spec.matrix = std::move(m);
    if (star_zero_based.empty()) {
      spec.star.resize(spec.matrix.size());
      for (std::size_t i = 0; i < spec.star.size(); ++i) spec.star[i] = static_cast<int>(i);
    } else {
      spec.star = std::move(star_zero_based);
    }
    spec.validate();
    return spec;
  }

  CoxeterSpec with_star_one_based(const std::vector<int>& perm) const {
    CoxeterSpec spec = *this;
    spec.star.clear();
    for (int v : perm) spec.star.push_back(v - 1);
    spec.validate();
    return spec;
  }

  void validate() const {
    const int n = rank();
    if (n == 0) fail(errc::invalid_spec, "empty Coxeter matrix");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(matrix[i].size()) != n) fail(errc::invalid_spec, "matrix is not square");
      if (matrix[i][i] != 1) fail(errc::invalid_spec, "m[" + std::to_string(i + 1) + "][" + std::to_string(i + 1) + "] must be 1");
      for (int j = 0; j < n; ++j) {
        if (matrix[i][j] != matrix[j][i])
          fail(errc::invalid_spec, "matrix not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        if (i != j && matrix[i][j] != 0 && matrix[i][j] < 2)
          fail(errc::invalid_spec, "m[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] must be >= 2 or 0 (infinity)");
      }
    }
    if (static_cast<int>(star.size()) != n) fail(errc::invalid_spec, "star permutation has wrong size");
    std::vector<bool> seen(n, false);
    for (int v : star) {
      if (v < 0 || v >= n) fail(errc::invalid_spec, "star entry out of range");
      if (seen[v]) fail(errc::invalid_spec, "star is not a permutation");
      seen[v] = true;
    }
    for (int i = 0; i < n; ++i)
      if (star[star[i]] != i) fail(errc::invalid_spec, "star is not an involution");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (matrix[star[i]][star[j]] != matrix[i][j])
          fail(errc::invalid_spec, "star incompatible with matrix at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")");
  }

  bool star_is_identity() const {
    for (std::size_t i = 0; i < star.size(); ++i)
      if (star[i] != static_cast<int>(i)) return false;
    return true;
  }

  // Named families: A n>=1, B n>=2, D n>=4, E 6..8, F4, G2, H3, H4, I2(m).
  static CoxeterSpec preset(const std::string& name) {
    auto chain = [](int n, std::vector<std::pair<std::pair<int, int>, int>> extra = {}) {
      std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
      for (auto& [ij, v] : extra) {
        m[ij.first][ij.second] = m[ij.second][ij.first] = v;
      }
      return m;
    };
    auto bad = [&]() -> CoxeterSpec { fail(errc::invalid_spec, "unknown preset '" + name + "'"); };
    if (name.size() < 2) return bad();
    CoxeterSpec spec;
    const char family = name[0];
    if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
      int m = 0;
      try {
        m = std::stoi(name.substr(3, name.size() - 4));
      } catch (...) {
        return bad();
      }
      if (m < 3) fail(errc::invalid_spec, "I2(m) requires m >= 3");
      spec.matrix = {{1, m}, {m, 1}};
    } else {
      int n = 0;
      try {
        n = std::stoi(name.substr(1));
      } catch (...) {
        return bad();
      }
      switch (family) {
        case 'A':
          if (n < 1) return bad();
          spec.matrix = chain(n);
          break;
        case 'B':
        case 'C':
          if (n < 2) return bad();
          spec.matrix = chain(n, {{{n - 2, n - 1}, 4}});
          break;
        case 'D':
          if (n < 4) return bad();
          spec.matrix = chain(n - 1);
          spec.matrix.emplace_back(n, 2);
          for (auto& row : spec.matrix) row.resize(n, 2);
          spec.matrix[n - 1][n - 1] = 1;
          spec.matrix[n - 3][n - 1] = spec.matrix[n - 1][n - 3] = 3;
          break;
        case 'E':
          if (n < 6 || n > 8) return bad();
          // chain 0-2-3-...-(n-1) with node 1 attached to node 3
          spec.matrix.assign(n, std::vector<int>(n, 2));
          for (int i = 0; i < n; ++i) spec.matrix[i][i] = 1;
          spec.matrix[0][2] = spec.matrix[2][0] = 3;
          for (int i = 2; i + 1 < n; ++i) spec.matrix[i][i + 1] = spec.matrix[i + 1][i] = 3;
          spec.matrix[1][3] = spec.matrix[3][1] = 3;
          break;
        case 'F':
          if (n != 4) return bad();
          spec.matrix = chain(4, {{{1, 2}, 4}});
          break;
        case 'G':
          if (n != 2) return bad();
          spec.matrix = {{1, 6}, {6, 1}};
          break;
        case 'H':
          if (n != 3 && n != 4) return bad();
          spec.matrix = chain(n, {{{0, 1}, 5}});
          break;
        default:
          return bad();
      }
    }
    spec.star.resize(spec.matrix.size());
    for (std::size_t i = 0; i < spec.star.size(); ++i) spec.star[i] = static_cast<int>(i);
    spec.label = name;
    spec.validate();
    return spec;
  }

  // Stable textual form used for cache keys and reports.
  std::string canonical_string() const {
    std::string s = "{\"matrix\":[";
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += "[";
      for (int j = 0; j < rank(); ++j) {
        if (j) s += ",";
        s += std::to_string(matrix[i][j]);
      }
      s += "]";
    }
    s += "],\"star\":[";
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += std::to_string(star[i] + 1);
    }
    s += "]}";
    return s;
  }

  std::string display_name() const {
    std::string s = label.empty() ? canonical_string() : label;
    if (!star_is_identity()) {
      s += " star=";
      for (std::size_t i = 0; i < star.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(star[i] + 1);
      }
    }
    return s;
  }
};

namespace backends {

// Reflection representation on the simple-root lattice, exact over Z.
// Supported bond labels: 2, 3, 4, 6 and 0 (infinity).
class Geometric {
 public:
  using Elem = std::vector<std::int64_t>;  // n*n row-major; column c = image of alpha_c
  static constexpr const char* name = "geometric";

  explicit Geometric(const CoxeterSpec& spec) : n_(spec.rank()) {
    cartan_.assign(n_, std::vector<std::int64_t>(n_, 0));
    for (int i = 0; i < n_; ++i) cartan_[i][i] = 2;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        int m = spec.matrix[i][j];
        std::int64_t lo = 0, hi = 0;
        switch (m) {
          case 2: break;
          case 3: lo = hi = -1; break;
          case 4: lo = -1; hi = -2; break;
          case 6: lo = -1; hi = -3; break;
          case 0: lo = hi = -2; break;
          default:
            fail(errc::unsupported_matrix,
                 "m[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]=" + std::to_string(m) +
                     " is not crystallographic; only rank-2 systems support arbitrary bond labels");
        }
        cartan_[i][j] = lo;
        cartan_[j][i] = hi;
      }
  }

  Elem identity() const {
    Elem e(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) e[static_cast<std::size_t>(i) * n_ + i] = 1;
    return e;
  }

  // w * s: column ops  col_j -= a[s][j] * col_s  (col_s itself negates).
  Elem right_mul(const Elem& w, int s) const {
    Elem r = w;
    for (int row = 0; row < n_; ++row) {
      const std::int64_t ws = w[static_cast<std::size_t>(row) * n_ + s];
      for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(row) * n_ + j] -= cartan_[s][j] * ws;
    }
    return r;
  }

  // s * w: row op on coordinate s of every column.
  Elem left_mul(const Elem& w, int s) const {
    Elem r = w;
    for (int c = 0; c < n_; ++c) {
      std::int64_t pairing = 0;
      for (int row = 0; row < n_; ++row) pairing += cartan_[s][row] * w[static_cast<std::size_t>(row) * n_ + c];
      r[static_cast<std::size_t>(s) * n_ + c] -= pairing;
    }
    return r;
  }

 private:
  int n_;
  std::vector<std::vector<std::int64_t>> cartan_;
};

// Dihedral group I2(m) acting on Z/2m as x -> (-1)^a x + 2k.
class Dihedral {
 public:
  using Elem = std::vector<std::int64_t>;  // {a, k} with a in {0,1}, k mod m
  static constexpr const char* name = "dihedral";

  explicit Dihedral(const CoxeterSpec& spec) : m_(spec.matrix[0][1]) {
    if (spec.rank() != 2) fail(errc::unsupported_matrix, "dihedral backend requires rank 2");
    if (m_ < 2) fail(errc::unsupported_matrix, "dihedral backend requires a finite bond label >= 2");
  }

  Elem identity() const { return {0, 0}; }
  Elem right_mul(const Elem& w, int s) const { return compose(w, gen(s)); }
  Elem left_mul(const Elem& w, int s) const { return compose(gen(s), w); }

 private:
  Elem gen(int s) const { return {1, s == 0 ? 0 : 1}; }
  Elem compose(const Elem& g, const Elem& h) const {
    std::int64_t a = g[0] ^ h[0];
    std::int64_t k = ((g[0] ? -h[1] : h[1]) + g[1]) % m_;
    if (k < 0) k += m_;
    return {a, k};
  }
  std::int64_t m_;
};

// Symmetric group on rank+1 letters; oracle backend for type A chains.
class SymmetricPerm {
 public:
  using Elem = std::vector<std::int64_t>;  // one-line notation, 0-based values
  static constexpr const char* name = "perm_a";

  explicit SymmetricPerm(const CoxeterSpec& spec) : n_(spec.rank() + 1) {
    for (int i = 0; i < spec.rank(); ++i)
      for (int j = i + 1; j < spec.rank(); ++j) {
        int expect = (j == i + 1) ? 3 : 2;
        if (spec.matrix[i][j] != expect)
          fail(errc::unsupported_matrix, "perm_a backend requires a type A Coxeter matrix");
      }
  }

  Elem identity() const {
    Elem e(n_);
    for (int i = 0; i < n_; ++i) e[i] = i;
    return e;
  }
  Elem right_mul(const Elem& w, int s) const {
    Elem r = w;
    std::swap(r[s], r[s + 1]);
    return r;
  }
  Elem left_mul(const Elem& w, int s) const {
    Elem r = w;
    for (auto& v : r) {
      if (v == s)
        v = s + 1;
      else if (v == s + 1)
        v = s;
    }
    return r;
  }

 private:
  int n_;
};

// Hyperoctahedral group of signed permutations; oracle backend for type B
// chains (bond label 4 on the last edge).
class SignedPerm {
 public:
  using Elem = std::vector<std::int64_t>;  // e[pos] = +-(value+1)
  static constexpr const char* name = "signed_perm_b";

  explicit SignedPerm(const CoxeterSpec& spec) : n_(spec.rank()) {
    if (n_ < 2) fail(errc::unsupported_matrix, "signed_perm_b backend requires rank >= 2");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        int expect = 2;
        if (j == i + 1) expect = (j == n_ - 1) ? 4 : 3;
        if (spec.matrix[i][j] != expect)
          fail(errc::unsupported_matrix, "signed_perm_b backend requires a type B Coxeter matrix");
      }
  }

  Elem identity() const {
    Elem e(n_);
    for (int i = 0; i < n_; ++i) e[i] = i + 1;
    return e;
  }
  Elem right_mul(const Elem& w, int s) const {
    Elem r = w;
    if (s == n_ - 1)
      r[n_ - 1] = -r[n_ - 1];
    else
      std::swap(r[s], r[s + 1]);
    return r;
  }
  Elem left_mul(const Elem& w, int s) const {
    Elem r = w;
    if (s == n_ - 1) {
      for (auto& v : r)
        if (v == n_ || v == -n_) v = -v;
    } else {
      for (auto& v : r) {
        if (v == s + 1)
          v = s + 2;
        else if (v == s + 2)
          v = s + 1;
        else if (v == -(s + 1))
          v = -(s + 2);
        else if (v == -(s + 2))
          v = -(s + 1);
      }
    }
    return r;
  }

 private:
  int n_;
};

}  // namespace backends

struct EnumerateOptions {
  long max_elements = 2'000'000;
  std::optional<int> length_cutoff;  // produces a truncated table when set
  enum class Backend { automatic, geometric, dihedral, perm_a, signed_perm_b };
  Backend backend = Backend::automatic;
};

// Fully enumerated group: indices are BFS discovery order (layered by
// length, parents in index order, generators ascending), which depends only
// on the abstract Coxeter system and not on the backend.
class GroupTable {
 public:
  const CoxeterSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  std::int32_t size() const { return static_cast<std::int32_t>(length_.size()); }
  bool truncated() const { return truncated_; }
  const std::string& backend_name() const { return backend_name_; }

  int length(std::int32_t w) const { return length_[w]; }
  int max_length() const { return length_.empty() ? 0 : length_.back(); }

  std::int32_t lmul(int s, std::int32_t w) const { return lprod_[static_cast<std::size_t>(w) * rank_ + s]; }
  std::int32_t rmul(std::int32_t w, int s) const { return rprod_[static_cast<std::size_t>(w) * rank_ + s]; }
  std::int32_t inverse(std::int32_t w) const { return inverse_[w]; }
  std::int32_t star(std::int32_t w) const { return star_[w]; }
  int star_gen(int s) const { return spec_.star[s]; }

  bool left_descent(int s, std::int32_t w) const {
    std::int32_t sw = lmul(s, w);
    return sw != npos && length_[sw] < length_[w];
  }
  bool right_descent(std::int32_t w, int s) const {
    std::int32_t ws = rmul(w, s);
    return ws != npos && length_[ws] < length_[w];
  }

  // ShortLex-least reduced word, 0-based generators.
  const std::vector<std::uint8_t>& word(std::int32_t w) const { return word_[w]; }

  std::int32_t element_of_word(std::span<const std::uint8_t> letters) const {
    std::int32_t cur = 0;
    for (auto s : letters) {
      if (s >= rank_) fail(errc::invalid_spec, "generator index out of range");
      cur = rmul(cur, s);
      if (cur == npos) fail(errc::truncated_table, "word leaves the enumerated ball");
    }
    return cur;
  }

  std::int32_t mul(std::int32_t x, std::int32_t y) const {
    std::int32_t cur = x;
    for (auto s : word_[y]) {
      cur = rmul(cur, s);
      if (cur == npos) fail(errc::truncated_table, "product leaves the enumerated ball");
    }
    return cur;
  }

  // Bruhat order by the descent recursion: for a left descent s of w,
  // x <= w iff min(x, sx) <= sw.
  bool bruhat_leq(std::int32_t x, std::int32_t w) const {
    while (true) {
      if (x == 0) return true;
      if (length_[x] > length_[w]) return false;
      int s = first_left_descent(w);
      std::int32_t sw = lmul(s, w);
      std::int32_t sx = lmul(s, x);
      if (sx != npos && length_[sx] < length_[x]) x = sx;
      w = sw;
    }
  }

  std::vector<std::int32_t> star_fixed() const {
    std::vector<std::int32_t> out;
    for (std::int32_t i = 0; i < size(); ++i)
      if (star_[i] == i) out.push_back(i);
    return out;
  }

  std::uint32_t left_descent_bits(std::int32_t w) const {
    std::uint32_t bits = 0;
    for (int s = 0; s < rank_; ++s)
      if (left_descent(s, w)) bits |= 1u << s;
    return bits;
  }
  std::uint32_t right_descent_bits(std::int32_t w) const {
    std::uint32_t bits = 0;
    for (int s = 0; s < rank_; ++s)
      if (right_descent(w, s)) bits |= 1u << s;
    return bits;
  }

  std::string word_name(std::int32_t w) const { return word_to_name(word_[w]); }

  static std::string word_to_name(std::span<const std::uint8_t> letters) {
    if (letters.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ".";
      s += std::to_string(letters[i] + 1);
    }
    return s;
  }

  // Parses "e" or "1.2.1" (also accepts "," as separator) into 0-based letters.
  std::vector<std::uint8_t> parse_word(const std::string& name) const {
    std::vector<std::uint8_t> out;
    if (name.empty() || name == "e") return out;
    std::size_t pos = 0;
    while (pos < name.size()) {
      std::size_t next = name.find_first_of(".,", pos);
      std::string tok = name.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      int v = 0;
      try {
        v = std::stoi(tok);
      } catch (...) {
        fail(errc::invalid_spec, "bad word '" + name + "'");
      }
      if (v < 1 || v > rank_) fail(errc::invalid_spec, "generator " + tok + " out of range in '" + name + "'");
      out.push_back(static_cast<std::uint8_t>(v - 1));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  }

  friend GroupTable enumerate_group(const CoxeterSpec& spec, const EnumerateOptions& opts);

 private:
  int first_left_descent(std::int32_t w) const {
    for (int s = 0; s < rank_; ++s)
      if (left_descent(s, w)) return s;
    fail(errc::internal, "identity has no descent");
  }

  template <class Backend>
  static GroupTable build(const CoxeterSpec& spec, const Backend& bk, const EnumerateOptions& opts);

  CoxeterSpec spec_;
  int rank_ = 0;
  bool truncated_ = false;
  std::string backend_name_;
  std::vector<int> length_;
  std::vector<std::int32_t> lprod_, rprod_;
  std::vector<std::int32_t> inverse_, star_;
  std::vector<std::vector<std::uint8_t>> word_;
};

template <class Backend>
GroupTable GroupTable::build(const CoxeterSpec& spec, const Backend& bk, const EnumerateOptions& opts) {
  GroupTable t;
  t.spec_ = spec;
  t.rank_ = spec.rank();
  t.backend_name_ = Backend::name;
  const int n = t.rank_;

  std::vector<typename Backend::Elem> elems{bk.identity()};
  std::map<typename Backend::Elem, std::int32_t> index{{elems[0], 0}};
  t.length_.push_back(0);
  t.rprod_.assign(n, npos);

  for (std::int32_t i = 0; i < static_cast<std::int32_t>(elems.size()); ++i) {
    for (int s = 0; s < n; ++s) {
      auto prod = bk.right_mul(elems[i], s);
      auto it = index.find(prod);
      if (it != index.end()) {
        t.rprod_[static_cast<std::size_t>(i) * n + s] = it->second;
        continue;
      }
      const int len = t.length_[i] + 1;
      if (opts.length_cutoff && len > *opts.length_cutoff) {
        t.truncated_ = true;
        continue;  // rprod_ stays npos
      }
      if (static_cast<long>(elems.size()) >= opts.max_elements) {
        if (opts.length_cutoff)
          fail(errc::group_too_large, "length-" + std::to_string(*opts.length_cutoff) + " ball exceeds " +
                                          std::to_string(opts.max_elements) + " elements");
        fail(errc::group_too_large,
             "no closure within " + std::to_string(opts.max_elements) + " elements; pass a length cutoff for infinite groups");
      }
      const auto id = static_cast<std::int32_t>(elems.size());
      index.emplace(prod, id);
      elems.push_back(std::move(prod));
      t.length_.push_back(len);
      t.rprod_.resize(static_cast<std::size_t>(elems.size()) * n, npos);
      t.rprod_[static_cast<std::size_t>(i) * n + s] = id;
    }
  }

  const auto N = static_cast<std::int32_t>(elems.size());
  t.lprod_.assign(static_cast<std::size_t>(N) * n, npos);
  for (std::int32_t i = 0; i < N; ++i)
    for (int s = 0; s < n; ++s) {
      auto it = index.find(bk.left_mul(elems[i], s));
      if (it != index.end()) t.lprod_[static_cast<std::size_t>(i) * n + s] = it->second;
    }

  // Canonical words by greedy least-left-descent extraction.
  t.word_.resize(N);
  for (std::int32_t i = 0; i < N; ++i) {
    std::vector<std::uint8_t> word;
    std::int32_t cur = i;
    while (cur != 0) {
      int s = 0;
      while (!t.left_descent(s, cur)) ++s;
      word.push_back(static_cast<std::uint8_t>(s));
      cur = t.lmul(s, cur);
    }
    t.word_[i] = std::move(word);
  }

  t.inverse_.resize(N);
  t.star_.resize(N);
  for (std::int32_t i = 0; i < N; ++i) {
    std::int32_t inv = 0, st = 0;
    const auto& w = t.word_[i];
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv = t.rmul(inv, *it);
    for (auto s : w) st = t.rmul(st, spec.star[s]);
    t.inverse_[i] = inv;
    t.star_[i] = st;
    if (t.length_[inv] != t.length_[i] || t.length_[st] != t.length_[i])
      fail(errc::internal, "inverse/star failed to preserve length");
  }
  return t;
}

inline GroupTable enumerate_group(const CoxeterSpec& spec, const EnumerateOptions& opts = {}) {
  using B = EnumerateOptions::Backend;
  B choice = opts.backend;
  if (choice == B::automatic) {
    if (spec.rank() == 2 && spec.matrix[0][1] != 0)
      choice = B::dihedral;
    else
      choice = B::geometric;
  }
  switch (choice) {
    case B::geometric: return GroupTable::build(spec, backends::Geometric(spec), opts);
    case B::dihedral: return GroupTable::build(spec, backends::Dihedral(spec), opts);
    case B::perm_a: return GroupTable::build(spec, backends::SymmetricPerm(spec), opts);
    case B::signed_perm_b: return GroupTable::build(spec, backends::SignedPerm(spec), opts);
    case B::automatic: break;
  }
  fail(errc::internal, "unreachable backend choice");
}

}  // namespace tihecke
