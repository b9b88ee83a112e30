#include "hecke_lab/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hecke_lab {

namespace {

void check_rank(int n) {
  if (n < 0 || n > Permutation::kMaxRank)
    throw OutOfRange("permutation rank must lie in [0, " + std::to_string(Permutation::kMaxRank) +
                     "], got " + std::to_string(n));
}

void check_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw SizeMismatch("permutations of different sizes: " + a.to_string() + " vs " + b.to_string());
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        piece.size() > 4)
      throw ParseError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    out.push_back(std::stoi(std::string(piece)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::span<const int> word) {
  check_rank(static_cast<int>(word.size()));
  n_ = static_cast<std::uint8_t>(word.size());
  std::array<bool, kMaxRank + 1> seen{};
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = word[i];
    if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
      throw ParseError("not a permutation of [" + std::to_string(n_) + "]");
    seen[static_cast<std::size_t>(v)] = true;
    w_[i] = static_cast<std::uint8_t>(v);
  }
}

Permutation Permutation::identity(int n) {
  check_rank(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.w_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw OutOfRange("simple transposition index out of range");
  return identity(n).times_simple(i);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw OutOfRange("transposition indices out of range");
  return identity(n).times_transposition(i, j);
}

Permutation Permutation::longest(int n) {
  Permutation p = identity(n);
  std::reverse(p.w_.begin(), p.w_.begin() + n);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty permutation string");
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    word = parse_int_list(text, "permutation");
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("malformed permutation: '" + std::string(text) + "'");
      word.push_back(c - '0');
    }
  }
  if (static_cast<int>(word.size()) > kMaxRank) throw ParseError("permutation too large");
  return Permutation(word);
}

std::vector<int> Permutation::word() const { return {w_.begin(), w_.begin() + n_}; }

Permutation Permutation::inverse() const {
  Permutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.w_[w_[static_cast<std::size_t>(i)] - 1u] = static_cast<std::uint8_t>(i + 1);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) inv += w_[static_cast<std::size_t>(i)] > w_[static_cast<std::size_t>(j)];
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (w_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& v) const {
  check_same_size(*this, v);
  Permutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.w_[static_cast<std::size_t>(i)] = w_[v.w_[static_cast<std::size_t>(i)] - 1u];
  return p;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= n_) throw OutOfRange("simple transposition index out of range");
  Permutation p = *this;
  std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::simple_times(int i) const {
  if (i < 1 || i >= n_) throw OutOfRange("simple transposition index out of range");
  Permutation p = *this;
  for (int k = 0; k < n_; ++k) {
    auto& v = p.w_[static_cast<std::size_t>(k)];
    if (v == i) {
      v = static_cast<std::uint8_t>(i + 1);
    } else if (v == i + 1) {
      v = static_cast<std::uint8_t>(i);
    }
  }
  return p;
}

Permutation Permutation::times_transposition(int i, int j) const {
  Permutation p = *this;
  std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(j - 1)]);
  return p;
}

bool Permutation::has_left_descent(int i) const {
  for (int k = 0; k < n_; ++k) {
    if (w_[static_cast<std::size_t>(k)] == i) return false;
    if (w_[static_cast<std::size_t>(k)] == i + 1) return true;
  }
  return false;
}

std::vector<int> Permutation::reduced_word(WordChoice choice) const {
  std::vector<int> rev;
  Permutation w = *this;
  while (true) {
    int pick = 0;
    for (int i = 1; i < n_; ++i) {
      if (w.has_right_descent(i)) {
        pick = i;
        if (choice == WordChoice::FirstDescent) break;
      }
    }
    if (pick == 0) break;
    rev.push_back(pick);
    w = w.times_simple(pick);
  }
  return {rev.rbegin(), rev.rend()};
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (n_ > 9 && i > 0) out += ',';
    out += std::to_string(w_[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ULL ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= w_[static_cast<std::size_t>(i)];
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t lehmer_rank(const Permutation& w) {
  const int n = w.size();
  std::size_t r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j) smaller_after += w(j) < w(i);
    r = r * static_cast<std::size_t>(n - i + 1) + static_cast<std::size_t>(smaller_after);
  }
  return r;
}

std::vector<Permutation> all_permutations(int n) {
  check_rank(n);
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

int length(const Permutation& w) { return w.length(); }

Permutation compose(const Permutation& u, const Permutation& v) { return u * v; }

int rank(const Permutation& w, int i, int j) {
  const int n = w.size();
  if (i < 1 || i > n || j < 1 || j > n) throw OutOfRange("rank indices out of range");
  int r = 0;
  for (int k = 1; k <= i; ++k) r += w(k) <= j;
  return r;
}

bool bruhat_leq(const Permutation& z, const Permutation& w) {
  check_same_size(z, w);
  const int n = w.size();
  // Running column counts: cz[j] = r_{i,j}(z) for the current row i.
  std::array<int, Permutation::kMaxRank + 2> cz{};
  std::array<int, Permutation::kMaxRank + 2> cw{};
  for (int i = 1; i <= n; ++i) {
    for (int j = z(i); j <= n; ++j) ++cz[static_cast<std::size_t>(j)];
    for (int j = w(i); j <= n; ++j) ++cw[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j)
      if (cz[static_cast<std::size_t>(j)] < cw[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

std::vector<Permutation> lower_covers(const Permutation& w) {
  const int n = w.size();
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) < w(j)) continue;
      bool gap_free = true;
      for (int k = i + 1; k < j && gap_free; ++k)
        if (w(j) < w(k) && w(k) < w(i)) gap_free = false;
      if (gap_free) out.push_back(w.times_transposition(i, j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool embed_pattern(const Permutation& w, const Permutation& p, int depth, int start,
                   std::array<int, Permutation::kMaxRank>& chosen) {
  const int k = p.size();
  if (depth == k) return true;
  const int n = w.size();
  for (int pos = start; pos <= n - (k - depth) + 1; ++pos) {
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d)
      ok = (w(chosen[static_cast<std::size_t>(d)]) < w(pos)) == (p(d + 1) < p(depth + 1));
    if (!ok) continue;
    chosen[static_cast<std::size_t>(depth)] = pos;
    if (embed_pattern(w, p, depth + 1, pos + 1, chosen)) return true;
  }
  return false;
}

const Permutation& pattern_3412() {
  static const Permutation p{3, 4, 1, 2};
  return p;
}
const Permutation& pattern_4231() {
  static const Permutation p{4, 2, 3, 1};
  return p;
}
const Permutation& pattern_312() {
  static const Permutation p{3, 1, 2};
  return p;
}

}  // namespace

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  if (pattern.size() > w.size()) return false;
  std::array<int, Permutation::kMaxRank> chosen{};
  return embed_pattern(w, pattern, 0, 1, chosen);
}

bool is_smooth(const Permutation& w) {
  return !contains_pattern(w, pattern_3412()) && !contains_pattern(w, pattern_4231());
}

bool is_codominant(const Permutation& w) { return !contains_pattern(w, pattern_312()); }

Classification classify(const Permutation& w) { return {is_smooth(w), is_codominant(w)}; }

CoessentialSet coessential_set(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = w.inverse();
  auto val = [&](const Permutation& p, int i) { return i == n + 1 ? n + 1 : p(i); };
  CoessentialSet out;
  for (int i = 1; i <= n; ++i)
    for (int j = w(i); j < val(w, i + 1); ++j)
      if (winv(j) <= i && i < val(winv, j + 1)) out.pairs.emplace_back(i, j);
  return out;
}

HessenbergFunction::HessenbergFunction(std::vector<int> values) : m_(std::move(values)) {
  if (!is_valid(m_)) {
    std::string s;
    for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? "," : "") + std::to_string(m_[i]);
    throw ParseError("not a Hessenberg function: (" + s + ")");
  }
}

bool HessenbergFunction::is_valid(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  if (n < 1 || n > Permutation::kMaxRank) return false;
  for (int i = 1; i <= n; ++i) {
    const int v = values[static_cast<std::size_t>(i - 1)];
    if (v < i || v > n) return false;
    if (i > 1 && v < values[static_cast<std::size_t>(i - 2)]) return false;
  }
  return true;
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
  return HessenbergFunction(parse_int_list(text, "Hessenberg function"));
}

int HessenbergFunction::edge_count() const {
  int e = 0;
  for (int i = 1; i <= size(); ++i) e += (*this)(i)-i;
  return e;
}

std::string HessenbergFunction::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? "," : "") + std::to_string(m_[i]);
  return s;
}

HessenbergFunction hessenberg_of_smooth(const Permutation& w) {
  if (!is_smooth(w)) throw NotSmooth(w.to_string() + " is singular (contains 3412 or 4231)");
  const int n = w.size();
  // anchor[i] = j whenever (i, j) or (j, i) lies in Coess(w) with j >= i.
  std::vector<int> anchor(static_cast<std::size_t>(n + 1), 0);
  for (const auto& [a, b] : coessential_set(w).pairs) {
    const int i = std::min(a, b);
    const int j = std::max(a, b);
    auto& slot = anchor[static_cast<std::size_t>(i)];
    if (slot != 0 && slot != j)
      throw InternalContradiction("crossing coessential conditions in smooth permutation " + w.to_string());
    slot = j;
  }
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const int a = anchor[static_cast<std::size_t>(i)];
    if (a != 0) {
      m[static_cast<std::size_t>(i - 1)] = a;
    } else {
      m[static_cast<std::size_t>(i - 1)] = (i == n) ? n : m[static_cast<std::size_t>(i)];
    }
  }
  return HessenbergFunction(std::move(m));
}

Permutation codominant_of_hessenberg(const HessenbergFunction& m) {
  const int n = m.size();
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  std::vector<int> word;
  for (int i = 1; i <= n; ++i) {
    int v = m(i);
    while (v >= 1 && used[static_cast<std::size_t>(v)]) --v;
    if (v < 1) throw InternalContradiction("greedy codominant construction failed");
    used[static_cast<std::size_t>(v)] = true;
    word.push_back(v);
  }
  return Permutation(word);
}

std::vector<std::pair<int, int>> transpositions_below(const Permutation& w) {
  const int n = w.size();
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (bruhat_leq(Permutation::transposition(n, i, j), w)) out.emplace_back(i, j);
  return out;
}

namespace {
void extend_hessenberg(int n, std::vector<int>& prefix, std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.emplace_back(prefix);
    return;
  }
  const int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    extend_hessenberg(n, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
  if (n < 1) throw OutOfRange("enumerate_hessenberg requires n >= 1");
  std::vector<HessenbergFunction> out;
  std::vector<int> prefix;
  extend_hessenberg(n, prefix, out);
  return out;
}

}  // namespace hecke_lab
