#include "hecke_lab/kl.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace hecke_lab {

namespace {

constexpr std::uint32_t kAbsent = 0xffffffffu;

}  // namespace

std::uint32_t KLTable::intern(const DensePoly& p) {
  auto [it, inserted] = pool_index_.try_emplace(p, static_cast<std::uint32_t>(pool_.size()));
  if (inserted) pool_.push_back(p);
  return it->second;
}

std::uint32_t KLTable::local_id(const Permutation& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? kAbsent : it->second;
}

const DensePoly* KLTable::lookup(std::uint32_t x, std::uint32_t y) const {
  const Row& r = rows_[y];
  auto it = std::lower_bound(r.begin(), r.end(), x, [](const Entry& e, std::uint32_t v) { return e.x < v; });
  if (it == r.end() || it->x != x) return nullptr;
  return &pool_[it->poly];
}

KLTable KLTable::build(const Permutation& top) {
  KLTable t;
  const int n = top.size();
  t.n_ = n;

  // [e, top] by closing {e} under right multiplication along a reduced word.
  {
    std::unordered_set<Permutation, PermutationHash> members{Permutation::identity(n)};
    for (int s : top.reduced_word()) {
      std::vector<Permutation> add;
      add.reserve(members.size());
      for (const auto& x : members) add.push_back(x.times_simple(s));
      members.insert(add.begin(), add.end());
    }
    t.interval_.assign(members.begin(), members.end());
  }
  std::vector<int> len(t.interval_.size());
  {
    std::vector<std::pair<int, Permutation>> keyed;
    keyed.reserve(t.interval_.size());
    for (const auto& x : t.interval_) keyed.emplace_back(x.length(), x);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t k = 0; k < keyed.size(); ++k) {
      t.interval_[k] = keyed[k].second;
      len[k] = keyed[k].first;
    }
  }
  t.lengths_ = len;
  const auto N = static_cast<std::uint32_t>(t.interval_.size());
  t.index_.reserve(N);
  for (std::uint32_t k = 0; k < N; ++k) t.index_.emplace(t.interval_[k], k);
  t.top_ = t.index_.at(top);

  const int gens = std::max(n - 1, 0);
  std::vector<std::uint32_t> rmul(static_cast<std::size_t>(N) * gens, kAbsent);
  std::vector<std::uint32_t> lmul(static_cast<std::size_t>(N) * gens, kAbsent);
  for (std::uint32_t k = 0; k < N; ++k) {
    for (int i = 1; i <= gens; ++i) {
      rmul[k * gens + (i - 1)] = t.local_id(t.interval_[k].times_simple(i));
      lmul[k * gens + (i - 1)] = t.local_id(t.interval_[k].simple_times(i));
    }
  }
  auto right_descent = [&](std::uint32_t x, int i) { return t.interval_[x].has_right_descent(i); };
  auto left_descent = [&](std::uint32_t x, int i) { return t.interval_[x].has_left_descent(i); };

  t.rows_.assign(N, {});
  t.row_present_.assign(N, true);
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> mu_lists(N);
  const std::uint32_t one = t.intern(DensePoly(1));
  std::vector<std::uint32_t> scratch(N, kAbsent);

  for (std::uint32_t y = 0; y < N; ++y) {
    const Permutation& yw = t.interval_[y];
    if (len[y] == 0) {
      t.rows_[y] = {{y, one}};
      continue;
    }
    int s = 1;
    while (!yw.has_right_descent(s)) ++s;
    const std::uint32_t v = rmul[y * gens + (s - 1)];

    std::vector<std::uint32_t> members;
    members.reserve(t.rows_[v].size() * 2);
    for (const auto& e : t.rows_[v]) {
      members.push_back(e.x);
      members.push_back(rmul[e.x * gens + (s - 1)]);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::vector<int> ydesc_right;
    std::vector<int> ydesc_left;
    for (int i = 1; i <= gens; ++i) {
      if (yw.has_right_descent(i)) ydesc_right.push_back(i);
      if (yw.has_left_descent(i)) ydesc_left.push_back(i);
    }

    // Longest first, so that x s' and s' x are ready when x needs them.
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      const std::uint32_t x = *it;
      if (x == y) {
        scratch[x] = one;
        continue;
      }
      std::uint32_t copy_from = kAbsent;
      for (int i : ydesc_right)
        if (!right_descent(x, i)) {
          copy_from = rmul[x * gens + (i - 1)];
          break;
        }
      if (copy_from == kAbsent)
        for (int i : ydesc_left)
          if (!left_descent(x, i)) {
            copy_from = lmul[x * gens + (i - 1)];
            break;
          }
      if (copy_from != kAbsent) {
        if (scratch[copy_from] == kAbsent)
          throw InternalContradiction("KL recursion reached an uncomputed entry");
        scratch[x] = scratch[copy_from];
        continue;
      }
      // x shares every descent of y; in particular x s < x.
      const std::uint32_t xs = rmul[x * gens + (s - 1)];
      DensePoly p;
      if (const DensePoly* a = t.lookup(xs, v)) p += *a;
      if (const DensePoly* b = t.lookup(x, v)) p.add_scaled(*b, 1, 1);
      for (const auto& [z, m] : mu_lists[v]) {
        if (!right_descent(z, s)) continue;
        if (const DensePoly* c = t.lookup(x, z)) p.add_scaled(*c, -m, (len[y] - len[z]) / 2);
      }
      if (p.is_zero() || p[0] != 1)
        throw InternalContradiction("KL polynomial with constant term != 1 for " + t.interval_[x].to_string() +
                                    " <= " + yw.to_string());
      if (2 * p.degree() >= len[y] - len[x])
        throw InternalContradiction("KL degree bound violated for " + t.interval_[x].to_string() + ", " +
                                    yw.to_string());
      scratch[x] = t.intern(p);
    }

    Row row;
    row.reserve(members.size());
    for (std::uint32_t x : members) {
      row.push_back({x, scratch[x]});
      scratch[x] = kAbsent;
    }
    for (const auto& e : row) {
      const int gap = len[y] - len[e.x];
      if (gap % 2 == 1) {
        const std::int64_t m = t.pool_[e.poly][(gap - 1) / 2];
        if (m != 0) mu_lists[y].emplace_back(e.x, m);
      }
    }
    t.rows_[y] = std::move(row);
  }
  return t;
}

bool KLTable::has_row(const Permutation& y) const {
  const std::uint32_t id = local_id(y);
  return id != kAbsent && row_present_[id];
}

const DensePoly& KLTable::dense_poly(const Permutation& z, const Permutation& y) const {
  static const DensePoly zero;
  const std::uint32_t yid = local_id(y);
  if (yid == kAbsent || !row_present_[yid])
    throw OutOfRange("KL table for " + top().to_string() + " has no row for " + y.to_string());
  const std::uint32_t zid = local_id(z);
  if (zid == kAbsent) return zero;
  const DensePoly* p = lookup(zid, yid);
  return p ? *p : zero;
}

LaurentQ KLTable::poly(const Permutation& z, const Permutation& y) const {
  return dense_poly(z, y).to_laurent();
}

std::int64_t KLTable::mu(const Permutation& z, const Permutation& y) const {
  const int gap = y.length() - z.length();
  if (gap <= 0 || gap % 2 == 0) return 0;
  return dense_poly(z, y)[(gap - 1) / 2];
}

std::vector<std::pair<Permutation, const DensePoly*>> KLTable::row(const Permutation& y) const {
  const std::uint32_t yid = local_id(y);
  if (yid == kAbsent || !row_present_[yid])
    throw OutOfRange("KL table for " + top().to_string() + " has no row for " + y.to_string());
  std::vector<std::pair<Permutation, const DensePoly*>> out;
  out.reserve(rows_[yid].size());
  for (const auto& e : rows_[yid]) out.emplace_back(interval_[e.x], &pool_[e.poly]);
  return out;
}

std::size_t KLTable::entry_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.size();
  return c;
}

Json KLTable::to_json(bool top_row_only) const {
  Json entries = Json::array();
  const auto N = static_cast<std::uint32_t>(interval_.size());
  for (std::uint32_t y = 0; y < N; ++y) {
    if (!row_present_[y] || (top_row_only && y != top_)) continue;
    for (const auto& e : rows_[y])
      entries.push_back(Json::array(
          {interval_[e.x].to_string(), interval_[y].to_string(), hecke_lab::to_json(pool_[e.poly].to_laurent())}));
  }
  return Json{{"format", kFormat},
              {"version", kFormatVersion},
              {"n", n_},
              {"top", top().to_string()},
              {"entries", std::move(entries)}};
}

Json KLTable::row_to_json(const Permutation& y) const {
  const std::uint32_t yid = local_id(y);
  if (yid == kAbsent || !row_present_[yid])
    throw OutOfRange("KL table for " + top().to_string() + " has no row for " + y.to_string());
  Json entries = Json::array();
  for (const auto& e : rows_[yid])
    entries.push_back(Json::array({interval_[e.x].to_string(), y.to_string(), hecke_lab::to_json(pool_[e.poly].to_laurent())}));
  return Json{{"format", kFormat}, {"version", kFormatVersion}, {"n", n_}, {"top", y.to_string()}, {"entries", std::move(entries)}};
}

KLTable KLTable::from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != kFormat || j.value("version", -1) != kFormatVersion)
    throw ParseError("not a current KL table document");
  KLTable t;
  t.n_ = j.at("n").get<int>();
  const Permutation top = Permutation::parse(j.at("top").get<std::string>());
  if (top.size() != t.n_) throw ParseError("KL table rank does not match its top element");

  std::map<std::pair<int, Permutation>, std::vector<std::pair<Permutation, DensePoly>>> rows;
  std::unordered_set<Permutation, PermutationHash> members{top};
  for (const auto& e : j.at("entries")) {
    const Permutation z = Permutation::parse(e.at(0).get<std::string>());
    const Permutation w = Permutation::parse(e.at(1).get<std::string>());
    if (z.size() != t.n_ || w.size() != t.n_) throw ParseError("KL table entry of the wrong rank");
    rows[{w.length(), w}].emplace_back(z, DensePoly::from_laurent(laurent_from_json(e.at(2))));
    members.insert(z);
    members.insert(w);
  }
  std::vector<std::pair<int, Permutation>> keyed;
  for (const auto& x : members) keyed.emplace_back(x.length(), x);
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [l, x] : keyed) {
    t.index_.emplace(x, static_cast<std::uint32_t>(t.interval_.size()));
    t.interval_.push_back(x);
    t.lengths_.push_back(l);
  }
  t.top_ = t.index_.at(top);
  t.rows_.assign(t.interval_.size(), {});
  t.row_present_.assign(t.interval_.size(), false);
  for (auto& [key, entries] : rows) {
    const std::uint32_t y = t.index_.at(key.second);
    Row r;
    for (const auto& [z, p] : entries) r.push_back({t.index_.at(z), t.intern(p)});
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.x < b.x; });
    t.rows_[y] = std::move(r);
    t.row_present_[y] = true;
  }
  return t;
}

KLTable kl_table(const Permutation& w) { return KLTable::build(w); }

namespace {

struct TableCache {
  std::mutex mutex;
  std::vector<std::shared_ptr<const KLTable>> tables;
};

TableCache& table_cache() {
  static TableCache cache;
  return cache;
}

}  // namespace

void kl_table_register(std::shared_ptr<const KLTable> table) {
  auto& cache = table_cache();
  std::lock_guard lock(cache.mutex);
  cache.tables.push_back(std::move(table));
}

std::shared_ptr<const KLTable> kl_table_cached(const Permutation& w) {
  auto& cache = table_cache();
  std::lock_guard lock(cache.mutex);
  for (const auto& t : cache.tables)
    if (t->rank() == w.size() && t->has_row(w)) return t;
  const Permutation top = w.size() <= 7 ? Permutation::longest(w.size()) : w;
  auto table = std::make_shared<const KLTable>(KLTable::build(top));
  cache.tables.push_back(table);
  return table;
}

LaurentQ kl_polynomial(const Permutation& z, const Permutation& w) {
  if (z.size() != w.size()) throw SizeMismatch("permutations of different sizes");
  return kl_table_cached(w)->poly(z, w);
}

std::int64_t mu(const Permutation& z, const Permutation& w) {
  if (z.size() != w.size()) throw SizeMismatch("permutations of different sizes");
  return kl_table_cached(w)->mu(z, w);
}

HeckeElement cprime(const Permutation& w) {
  auto table = kl_table_cached(w);
  HeckeElement out(w.size());
  for (const auto& [z, p] : table->row(w)) out.add_term(z, p->to_laurent());
  return out;
}

HeckeElement cprime_normalized(const Permutation& w) {
  return cprime(w).scaled(LaurentQ::q_power(-w.length()));
}

CPrimeExpansion cprime_times_cs(const Permutation& w, int i) {
  const int n = w.size();
  if (i < 1 || i >= n) throw PreconditionViolated("simple transposition index out of range");
  CPrimeExpansion out;
  if (w.has_right_descent(i)) {
    out.emplace(w, LaurentQ::q_power(-1) + LaurentQ::q_power(1));
    return out;
  }
  out.emplace(w.times_simple(i), LaurentQ(1));
  auto table = kl_table_cached(w);
  for (const auto& [z, p] : table->row(w)) {
    if (z == w || !z.has_right_descent(i)) continue;
    const std::int64_t m = table->mu(z, w);
    if (m != 0) out.emplace(z, LaurentQ(m));
  }
  return out;
}

HeckeElement to_hecke_element(const CPrimeExpansion& c, int n) {
  HeckeElement out(n);
  for (const auto& [x, coeff] : c) out += cprime_normalized(x).scaled(coeff);
  return out;
}

}  // namespace hecke_lab
