#include "hecke_lab/csf.hpp"

#include <bit>
#include <thread>

namespace hecke_lab {

IndifferenceGraph indifference_graph(const HessenbergFunction& m) {
  IndifferenceGraph g;
  g.n = m.size();
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= m(i); ++j) g.edges.emplace_back(i, j);
  return g;
}

std::vector<DensePoly> csf_monomial_coefficients(const HessenbergFunction& m) {
  const int n = m.size();
  if (n > 16) throw OutOfRange("csf is limited to n <= 16");
  const int E = m.edge_count();
  const int D = E + 1;
  const std::uint32_t full = (1u << n) - 1;

  // Vertex v is bit v-1. lower[j]: neighbours i < j of j.
  std::vector<std::uint32_t> nbrs(static_cast<std::size_t>(n), 0), lower(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= m(i); ++j) {
      nbrs[static_cast<std::size_t>(i - 1)] |= 1u << (j - 1);
      nbrs[static_cast<std::size_t>(j - 1)] |= 1u << (i - 1);
      lower[static_cast<std::size_t>(j - 1)] |= 1u << (i - 1);
    }
  std::vector<bool> independent(static_cast<std::size_t>(full) + 1, true);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && !(nbrs[static_cast<std::size_t>(v)] & rest);
  }
  // Ascents created by colouring S above the vertices in `mask`.
  auto ascents = [&](std::uint32_t S, std::uint32_t mask) {
    int a = 0;
    for (std::uint32_t t = S; t; t &= t - 1) a += std::popcount(lower[static_cast<std::size_t>(std::countr_zero(t))] & mask);
    return a;
  };

  const auto& parts = partitions(n);
  std::vector<DensePoly> out;
  out.reserve(parts.size());
  std::vector<std::int64_t> cur(static_cast<std::size_t>(full + 1) * D), next(cur.size());
  for (const auto& mu : parts) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[0] = 1;
    std::vector<std::uint32_t> masks{0};
    for (int size : mu.parts()) {
      std::fill(next.begin(), next.end(), 0);
      std::vector<std::uint32_t> reached;
      for (std::uint32_t mask : masks) {
        const std::int64_t* src = &cur[static_cast<std::size_t>(mask) * D];
        const std::uint32_t comp = full & ~mask;
        for (std::uint32_t S = comp; S; S = (S - 1) & comp) {
          if (std::popcount(S) != size || !independent[S]) continue;
          const int a = ascents(S, mask);
          const std::uint32_t to = mask | S;
          std::int64_t* dst = &next[static_cast<std::size_t>(to) * D];
          bool fresh = true;
          for (int d = 0; d < D; ++d) fresh = fresh && dst[d] == 0;
          if (fresh) reached.push_back(to);
          for (int d = 0; d + a < D; ++d) dst[d + a] += src[d];
        }
      }
      std::sort(reached.begin(), reached.end());
      reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
      masks = std::move(reached);
      std::swap(cur, next);
    }
    const std::int64_t* fin = &cur[static_cast<std::size_t>(full) * D];
    out.emplace_back(std::vector<std::int64_t>(fin, fin + D));
  }
  return out;
}

SymmetricFunction csf(const HessenbergFunction& m) {
  const auto coeffs = csf_monomial_coefficients(m);
  SymmetricFunction f(m.size(), Basis::m);
  const auto& parts = partitions(m.size());
  for (std::size_t k = 0; k < parts.size(); ++k) f.set_coeff(parts[k], to_rational(coeffs[k].to_laurent()));
  return f;
}

SymmetricFunction csf_oracle(const HessenbergFunction& m) {
  const int n = m.size();
  if (n > 6) throw OutOfRange("csf_oracle enumerates n^n colourings and is limited to n <= 6");
  const IndifferenceGraph g = indifference_graph(m);
  const auto& parts = partitions(n);
  std::vector<std::vector<std::int64_t>> acc(parts.size(), std::vector<std::int64_t>(g.edges.size() + 1, 0));
  std::vector<int> colour(static_cast<std::size_t>(n), 1);
  while (true) {
    bool proper = true;
    int asc = 0;
    for (const auto& [i, j] : g.edges) {
      const int ci = colour[static_cast<std::size_t>(i - 1)], cj = colour[static_cast<std::size_t>(j - 1)];
      if (ci == cj) proper = false;
      if (ci < cj) ++asc;
    }
    if (proper) {
      std::vector<int> counts(static_cast<std::size_t>(n), 0);
      for (int c : colour) ++counts[static_cast<std::size_t>(c - 1)];
      // Only the dominant monomials x^mu with mu a partition are recorded.
      bool decreasing = true;
      for (int k = 1; k < n; ++k) decreasing = decreasing && counts[static_cast<std::size_t>(k)] <= counts[static_cast<std::size_t>(k - 1)];
      if (decreasing) ++acc[partition_index(Partition(counts))][static_cast<std::size_t>(asc)];
    }
    int pos = 0;
    while (pos < n && colour[static_cast<std::size_t>(pos)] == n) colour[static_cast<std::size_t>(pos++)] = 1;
    if (pos == n) break;
    ++colour[static_cast<std::size_t>(pos)];
  }
  SymmetricFunction f(n, Basis::m);
  for (std::size_t k = 0; k < parts.size(); ++k) f.set_coeff(parts[k], to_rational(DensePoly(acc[k]).to_laurent()));
  return f;
}

std::vector<ModularTriple> modular_triples(int n) {
  std::vector<ModularTriple> out;
  for (const auto& m1 : enumerate_hessenberg(n)) {
    for (int i = 1; i <= n; ++i) {
      if (m1(i) + 1 > n) continue;
      if (m1(m1(i) + 1) != m1(m1(i))) continue;
      std::vector<int> v0 = m1.values(), v2 = m1.values();
      --v0[static_cast<std::size_t>(i - 1)];
      ++v2[static_cast<std::size_t>(i - 1)];
      if (!HessenbergFunction::is_valid(v0) || !HessenbergFunction::is_valid(v2)) continue;
      out.push_back({HessenbergFunction(v0), m1, HessenbergFunction(v2), i});
    }
  }
  return out;
}

std::size_t csf_hash(const std::vector<DensePoly>& coeffs) {
  std::size_t h = coeffs.size();
  for (const auto& p : coeffs) h ^= p.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

CsfBatch CsfBatch::compute(int n, int threads) {
  CsfBatch b;
  b.n_ = n;
  b.functions_ = enumerate_hessenberg(n);
  b.coeffs_.resize(b.functions_.size());
  partitions(n);
  const std::size_t workers = static_cast<std::size_t>(std::max(threads, 1));
  if (workers == 1) {
    for (std::size_t k = 0; k < b.functions_.size(); ++k) b.coeffs_[k] = csf_monomial_coefficients(b.functions_[k]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&b, t, workers] {
        for (std::size_t k = t; k < b.functions_.size(); k += workers)
          b.coeffs_[k] = csf_monomial_coefficients(b.functions_[k]);
      });
    for (auto& th : pool) th.join();
  }
  b.build_index();
  return b;
}

void CsfBatch::build_index() {
  index_.clear();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) index_.emplace(csf_hash(coeffs_[k]), k);
}

std::optional<std::size_t> CsfBatch::index_of(const HessenbergFunction& m) const {
  auto it = std::lower_bound(functions_.begin(), functions_.end(), m);
  if (it == functions_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - functions_.begin());
}

std::vector<std::size_t> CsfBatch::lookup(const std::vector<DensePoly>& coeffs) const {
  std::vector<std::size_t> out;
  auto [lo, hi] = index_.equal_range(csf_hash(coeffs));
  for (auto it = lo; it != hi; ++it)
    if (coeffs_[it->second] == coeffs) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

Json CsfBatch::to_json() const {
  Json entries = Json::array();
  const auto& parts = partitions(n_);
  for (std::size_t k = 0; k < functions_.size(); ++k) {
    SymmetricFunction f(n_, Basis::m);
    for (std::size_t l = 0; l < parts.size(); ++l) f.set_coeff(parts[l], to_rational(coeffs_[k][l].to_laurent()));
    entries.push_back({{"m", functions_[k].to_string()}, {"csf", hecke_lab::to_json(f)}});
  }
  return Json{{"format", kFormat}, {"version", kFormatVersion}, {"n", n_}, {"entries", std::move(entries)}};
}

CsfBatch CsfBatch::from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != kFormat || j.value("version", -1) != kFormatVersion)
    throw ParseError("not a current csf batch document");
  CsfBatch b;
  b.n_ = j.at("n").get<int>();
  for (const auto& e : j.at("entries")) {
    b.functions_.push_back(HessenbergFunction::parse(e.at("m").get<std::string>()));
    const SymmetricFunction f = symmetric_function_from_json(e.at("csf")).to(Basis::m);
    if (f.degree() != b.n_) throw ParseError("csf batch entry of the wrong degree");
    std::vector<DensePoly> coeffs;
    for (const auto& c : f.coefficients()) {
      auto integral = to_integral(c);
      if (!integral) throw ParseError("csf batch entry with non-integral coefficients");
      coeffs.push_back(DensePoly::from_laurent(*integral));
    }
    b.coeffs_.push_back(std::move(coeffs));
  }
  if (!std::is_sorted(b.functions_.begin(), b.functions_.end()))
    throw ParseError("csf batch entries out of order");
  b.build_index();
  return b;
}

}  // namespace hecke_lab
