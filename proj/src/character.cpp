#include "hecke_lab/character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "hecke_lab/kl.hpp"

namespace hecke_lab {

namespace {

void standard_tableaux(const Partition& lambda, std::vector<int>& filled, std::vector<int>& rows, int next,
                       std::vector<std::vector<int>>& out_rows, std::vector<std::vector<int>>& out_cols) {
  const int n = lambda.size();
  if (next > n) {
    out_rows.push_back(rows);
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::vector<int> seen(static_cast<std::size_t>(lambda.length()), 0);
    for (int k = 0; k < n; ++k) cols[static_cast<std::size_t>(k)] = seen[static_cast<std::size_t>(rows[static_cast<std::size_t>(k)])]++;
    out_cols.push_back(std::move(cols));
    return;
  }
  for (int r = 0; r < lambda.length(); ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (filled[ur] == lambda[r + 1]) continue;
    if (r > 0 && filled[ur - 1] <= filled[ur]) continue;
    ++filled[ur];
    rows[static_cast<std::size_t>(next - 1)] = r;
    standard_tableaux(lambda, filled, rows, next + 1, out_rows, out_cols);
    --filled[ur];
  }
}

Rational rpow(const Rational& q, int e) {
  Rational out = 1;
  const Rational base = e >= 0 ? q : Rational(1 / q);
  for (int k = 0; k < std::abs(e); ++k) out *= base;
  return out;
}

// Diagonal entry on e_T for axial distance r.
Rational diagonal(const Rational& q, int r) {
  const Rational qr = rpow(q, r);
  return (q - 1) * qr / (qr - 1);
}

}  // namespace

SeminormalRep::SeminormalRep(const Partition& lambda) : lambda_(lambda), n_(lambda.size()) {
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<int> rows(static_cast<std::size_t>(n_), 0);
  standard_tableaux(lambda, filled, rows, 1, rows_, cols_);

  std::map<std::vector<int>, int> index;
  for (std::size_t t = 0; t < rows_.size(); ++t) index.emplace(rows_[t], static_cast<int>(t));

  for (int i = 1; i < n_; ++i) {
    std::vector<Image> imgs;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const auto a = static_cast<std::size_t>(i - 1);
      const auto b = static_cast<std::size_t>(i);
      const int ra = rows_[t][a], rb = rows_[t][b];
      const int ca = cols_[t][a], cb = cols_[t][b];
      Image img{static_cast<int>(t), -1, (cb - rb) - (ca - ra), rb > ra};
      if (ra != rb && ca != cb) {
        std::vector<int> swapped = rows_[t];
        std::swap(swapped[a], swapped[b]);
        img.partner = index.at(swapped);
      }
      imgs.push_back(img);
    }
    images_.push_back(std::move(imgs));
  }
}

SeminormalRep::Coefficients SeminormalRep::coefficients(const Rational& q) const {
  Coefficients c(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (const Image& img : images_[i]) {
      if (img.partner < 0) {
        // i and i+1 in one row: eigenvalue q; in one column: -1.
        c[i].emplace_back(img.axial == 1 ? q : Rational(-1), Rational(0));
        continue;
      }
      const Rational d = diagonal(q, img.axial);
      c[i].emplace_back(d, img.lower ? Rational(1) : Rational(d * diagonal(q, -img.axial) + q));
    }
  }
  return c;
}

void SeminormalRep::apply(int i, const Coefficients& coeffs, std::vector<Rational>& v) const {
  std::vector<Rational> out(v.size(), Rational(0));
  const auto& imgs = images_[static_cast<std::size_t>(i - 1)];
  const auto& cs = coeffs[static_cast<std::size_t>(i - 1)];
  for (std::size_t k = 0; k < imgs.size(); ++k) {
    const Image& img = imgs[k];
    const Rational& x = v[static_cast<std::size_t>(img.self)];
    if (sgn(x) == 0) continue;
    out[static_cast<std::size_t>(img.self)] += cs[k].first * x;
    if (img.partner >= 0) out[static_cast<std::size_t>(img.partner)] += cs[k].second * x;
  }
  v = std::move(out);
}

std::vector<std::vector<Rational>> SeminormalRep::generator_matrix(int i, const Rational& q) const {
  if (i < 1 || i >= n_) throw OutOfRange("generator index out of range");
  const int d = dimension();
  const Coefficients coeffs = coefficients(q);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int t = 0; t < d; ++t) {
    std::vector<Rational> v(static_cast<std::size_t>(d), Rational(0));
    v[static_cast<std::size_t>(t)] = 1;
    apply(i, coeffs, v);
    for (int r = 0; r < d; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] = v[static_cast<std::size_t>(r)];
  }
  return m;
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
  const std::size_t d = a.size();
  RMatrix out(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

bool SeminormalRep::satisfies_relations(const Rational& q) const {
  const int d = dimension();
  std::vector<RMatrix> gens;
  for (int i = 1; i < n_; ++i) gens.push_back(generator_matrix(i, q));
  for (const auto& t : gens) {
    // T^2 = (q - 1) T + q
    RMatrix sq = mat_mul(t, t);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        Rational rhs = (q - 1) * t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (r == c) rhs += q;
        if (sq[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != rhs) return false;
      }
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (j == i + 1) {
        if (mat_mul(mat_mul(gens[i], gens[j]), gens[i]) != mat_mul(mat_mul(gens[j], gens[i]), gens[j])) return false;
      } else if (mat_mul(gens[i], gens[j]) != mat_mul(gens[j], gens[i])) {
        return false;
      }
    }
  return true;
}

Rational SeminormalRep::trace_along_word(const std::vector<int>& word, const Rational& q) const {
  const int d = dimension();
  for (int s : word)
    if (s < 1 || s >= n_) throw OutOfRange("generator index out of range");
  const Coefficients coeffs = coefficients(q);
  Rational tr = 0;
  for (int t = 0; t < d; ++t) {
    std::vector<Rational> v(static_cast<std::size_t>(d), Rational(0));
    v[static_cast<std::size_t>(t)] = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) apply(*it, coeffs, v);
    tr += v[static_cast<std::size_t>(t)];
  }
  return tr;
}

namespace {

std::shared_ptr<const SeminormalRep> seminormal(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, std::shared_ptr<const SeminormalRep>> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(lambda);
  if (it == memo.end()) it = memo.emplace(lambda, std::make_shared<const SeminormalRep>(lambda)).first;
  return it->second;
}

// The integer polynomial of degree <= deg through (x_k, y_k), x_k = 2 + k,
// with one extra point as a consistency check.
LaurentQ interpolate(const std::vector<Rational>& ys, int deg) {
  const std::size_t m = static_cast<std::size_t>(deg) + 1;
  std::vector<Rational> dd(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(m));
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t k = m - 1; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / Rational(static_cast<long>(level));
  // Newton form to monomial coefficients.
  std::vector<Rational> coeffs(m, Rational(0));
  for (std::size_t k = m; k-- > 0;) {
    // coeffs = coeffs * (x - x_k) + dd[k]
    const Rational xk = static_cast<long>(2 + k);
    std::vector<Rational> next(m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(coeffs[j]) == 0) continue;
      if (j + 1 < m) next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xk;
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  std::vector<BigInt> ints;
  for (const auto& c : coeffs) {
    if (c.get_den() != 1) throw InternalContradiction("character interpolation produced a non-integer coefficient");
    ints.emplace_back(c.get_num());
  }
  LaurentQ out = LaurentQ::from_q_coefficients(ints);
  const BigInt check_x = 2 + static_cast<long>(m);
  BigInt value = 0;
  for (std::size_t j = ints.size(); j-- > 0;) value = value * check_x + ints[j];
  if (ys.size() > m && Rational(value) != ys[m])
    throw InternalContradiction("character interpolation failed its consistency check");
  return out;
}

}  // namespace

LaurentQ chi_along_word(const Partition& lambda, const std::vector<int>& word, int n) {
  if (lambda.size() != n) throw SizeMismatch("partition size does not match the rank");
  auto rep = seminormal(lambda);
  const int deg = static_cast<int>(word.size());
  std::vector<Rational> ys;
  for (int k = 0; k <= deg + 1; ++k) ys.push_back(rep->trace_along_word(word, Rational(2 + k)));
  return interpolate(ys, deg);
}

LaurentQ chi(const Partition& lambda, const Permutation& w) {
  if (lambda.size() != w.size()) throw SizeMismatch("partition size does not match the permutation");
  return chi_along_word(lambda, w.reduced_word(), w.size());
}

namespace {

Partition cycle_type(const Permutation& w) {
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = w(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) throw OutOfRange("character tables are built for 1 <= n <= 8");
  const auto perms = all_permutations(n);
  const auto& parts = partitions(n);
  const std::size_t N = perms.size();
  const std::size_t L = parts.size();
  std::vector<int> len(N);
  for (std::size_t k = 0; k < N; ++k) len[k] = perms[k].length();
  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return len[a] < len[b]; });

  values_.assign(L, std::vector<DensePoly>(N));
  std::vector<bool> done(N, false);
  std::map<Partition, std::vector<DensePoly>> minimal_values;

  std::size_t start = 0;
  while (start < N) {
    std::size_t stop = start;
    while (stop < N && len[order[stop]] == len[order[start]]) ++stop;

    // Length-reducing conjugations, plus the graph of cyclic shifts.
    std::map<std::size_t, std::vector<std::size_t>> shifts;
    for (std::size_t k = start; k < stop; ++k) {
      const std::size_t w = order[k];
      for (int s = 1; s < n; ++s) {
        const Permutation sw = perms[w].simple_times(s);
        const Permutation sws = sw.times_simple(s);
        const std::size_t isws = lehmer_rank(sws);
        if (!done[w] && len[isws] == len[w] - 2) {
          const std::size_t isw = lehmer_rank(sw);
          for (std::size_t l = 0; l < L; ++l) {
            DensePoly v = values_[l][isws].shifted(1);
            v.add_scaled(values_[l][isw], 1, 1);
            v.add_scaled(values_[l][isw], -1, 0);
            values_[l][w] = std::move(v);
          }
          done[w] = true;
        } else if (len[isws] == len[w] && isws != w) {
          shifts[w].push_back(isws);
        }
      }
    }
    // Spread along cyclic shifts; what remains has minimal length in its class.
    std::vector<std::size_t> queue;
    for (std::size_t k = start; k < stop; ++k)
      if (done[order[k]]) queue.push_back(order[k]);
    while (!queue.empty()) {
      const std::size_t w = queue.back();
      queue.pop_back();
      for (std::size_t x : shifts[w]) {
        if (done[x]) continue;
        for (std::size_t l = 0; l < L; ++l) values_[l][x] = values_[l][w];
        done[x] = true;
        queue.push_back(x);
      }
    }
    for (std::size_t k = start; k < stop; ++k) {
      const std::size_t w = order[k];
      if (done[w]) continue;
      const Partition mu = cycle_type(perms[w]);
      auto it = minimal_values.find(mu);
      if (it == minimal_values.end()) {
        std::vector<DensePoly> vals;
        for (const auto& lambda : parts) vals.push_back(DensePoly::from_laurent(chi(lambda, perms[w])));
        it = minimal_values.emplace(mu, std::move(vals)).first;
      }
      for (std::size_t l = 0; l < L; ++l) values_[l][w] = it->second[l];
      done[w] = true;
    }
    start = stop;
  }
}

const DensePoly& CharacterTable::value(const Partition& lambda, const Permutation& w) const {
  if (lambda.size() != n_ || w.size() != n_) throw SizeMismatch("character table of a different rank");
  return values_[partition_index(lambda)][lehmer_rank(w)];
}

Json CharacterTable::to_json() const {
  Json rows = Json::array();
  for (const auto& p : partitions(n_)) rows.push_back(p.to_string());
  Json cols = Json::array();
  for (const auto& w : all_permutations(n_)) cols.push_back(w.to_string());
  Json values = Json::array();
  for (const auto& row : values_) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(hecke_lab::to_json(v.to_laurent()));
    values.push_back(std::move(r));
  }
  return Json{{"format", kFormat}, {"version", kFormatVersion}, {"n", n_},
              {"rows", std::move(rows)}, {"cols", std::move(cols)}, {"values", std::move(values)}};
}

CharacterTable CharacterTable::from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != kFormat || j.value("version", -1) != kFormatVersion)
    throw ParseError("not a current character table document");
  CharacterTable t;
  t.n_ = j.at("n").get<int>();
  const auto& parts = partitions(t.n_);
  const auto perms = all_permutations(t.n_);
  const auto& rows = j.at("rows");
  const auto& cols = j.at("cols");
  const auto& values = j.at("values");
  if (rows.size() != parts.size() || cols.size() != perms.size() || values.size() != parts.size())
    throw ParseError("character table has the wrong shape");
  t.values_.assign(parts.size(), std::vector<DensePoly>(perms.size()));
  for (std::size_t l = 0; l < parts.size(); ++l) {
    const std::size_t li = partition_index(Partition::parse(rows[l].get<std::string>()));
    if (values[l].size() != perms.size()) throw ParseError("character table has the wrong shape");
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const std::size_t wk = lehmer_rank(Permutation::parse(cols[k].get<std::string>()));
      t.values_[li][wk] = DensePoly::from_laurent(laurent_from_json(values[l][k]));
    }
  }
  return t;
}

namespace {

struct TableMemo {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const CharacterTable>> tables;
};

TableMemo& table_memo() {
  static TableMemo m;
  return m;
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(int n) {
  auto& m = table_memo();
  std::lock_guard lock(m.mutex);
  auto it = m.tables.find(n);
  if (it == m.tables.end()) it = m.tables.emplace(n, std::make_shared<const CharacterTable>(n)).first;
  return it->second;
}

void character_table_register(std::shared_ptr<const CharacterTable> table) {
  auto& m = table_memo();
  std::lock_guard lock(m.mutex);
  m.tables[table->rank()] = std::move(table);
}

LaurentQ chi_element(const Partition& lambda, const HeckeElement& a) {
  if (lambda.size() != a.rank()) throw SizeMismatch("partition size does not match the rank");
  LaurentQ out;
  if (a.rank() <= CharacterTable::kMaxRank) {
    auto table = character_table(a.rank());
    const std::size_t li = partition_index(lambda);
    for (const auto& [w, c] : a.terms()) out += c * table->value(li, lehmer_rank(w)).to_laurent();
  } else {
    for (const auto& [w, c] : a.terms()) out += c * chi(lambda, w);
  }
  return out;
}

SymmetricFunction frobenius_ch(const HeckeElement& a) {
  SymmetricFunction f(a.rank(), Basis::s);
  for (const auto& lambda : partitions(a.rank())) f.set_coeff(lambda, to_rational(chi_element(lambda, a)));
  return f;
}

SymmetricFunction ch_cprime(const Permutation& w) {
  const int n = w.size();
  if (n > CharacterTable::kMaxRank) return frobenius_ch(cprime(w));
  auto table = character_table(n);
  auto kl = kl_table_cached(w);
  const auto row = kl->row(w);
  std::vector<std::size_t> ranks;
  ranks.reserve(row.size());
  for (const auto& [z, p] : row) ranks.push_back(lehmer_rank(z));
  SymmetricFunction f(n, Basis::s);
  const auto& parts = partitions(n);
  for (std::size_t l = 0; l < parts.size(); ++l) {
    DensePoly acc;
    for (std::size_t k = 0; k < row.size(); ++k) acc += *row[k].second * table->value(l, ranks[k]);
    f.set_coeff(parts[l], to_rational(acc.to_laurent()));
  }
  return f;
}

}  // namespace hecke_lab
