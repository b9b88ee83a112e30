#include "hecke_lab/symfunc.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace hecke_lab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') s += ch;
  if (s.empty() || s == "0") return {};
  std::vector<int> parts;
  if (s.find(',') == std::string::npos) {
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw ParseError("malformed partition '" + std::string(text) + "'");
      parts.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t next = s.find(',', pos);
      const std::string piece = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed partition '" + std::string(text) + "'");
      parts.push_back(std::stoi(piece));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

struct PartitionTables {
  std::mutex mutex;
  std::map<int, std::vector<Partition>> lists;
  std::map<int, std::map<Partition, std::size_t>> index;
};

PartitionTables& partition_tables() {
  static PartitionTables t;
  return t;
}

void ensure_partitions(PartitionTables& t, int n) {
  if (t.lists.count(n)) return;
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  auto& idx = t.index[n];
  for (std::size_t k = 0; k < out.size(); ++k) idx.emplace(out[k], k);
  t.lists.emplace(n, std::move(out));
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  if (n < 0) throw OutOfRange("partitions of a negative integer");
  auto& t = partition_tables();
  std::lock_guard lock(t.mutex);
  ensure_partitions(t, n);
  return t.lists.at(n);
}

std::size_t partition_index(const Partition& lambda) {
  auto& t = partition_tables();
  std::lock_guard lock(t.mutex);
  ensure_partitions(t, lambda.size());
  return t.index.at(lambda.size()).at(lambda);
}

BigInt standard_tableaux_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  BigInt den = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) den *= (lambda[i] - j) + (conj[j] - i) + 1;
  return num / den;
}

LaurentQ q_factorial(const Partition& lambda) {
  LaurentQ out(1);
  for (int part : lambda.parts())
    for (int j = 1; j <= part; ++j) {
      std::vector<BigInt> ones(static_cast<std::size_t>(j), BigInt(1));
      out *= LaurentQ::from_q_coefficients(ones);
    }
  return out;
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  if (text == "m") return Basis::m;
  if (text == "e") return Basis::e;
  if (text == "h") return Basis::h;
  if (text == "p") return Basis::p;
  if (text == "s") return Basis::s;
  throw ParseError("unknown basis '" + std::string(text) + "' (expected m, e, h, p or s)");
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Kostka numbers by peeling off the largest entry as a horizontal strip.
class Kostka {
 public:
  BigInt operator()(const std::vector<int>& shape, const std::vector<int>& content) {
    if (content.empty()) {
      for (int x : shape)
        if (x) return 0;
      return 1;
    }
    auto key = std::make_pair(shape, content);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<int> inner(shape);
    std::vector<int> rest(content.begin(), content.end() - 1);
    BigInt total = 0;
    strips(shape, inner, 0, content.back(), rest, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  void strips(const std::vector<int>& shape, std::vector<int>& inner, std::size_t row, int left,
              const std::vector<int>& rest, BigInt& total) {
    if (row == shape.size()) {
      if (left == 0) total += (*this)(inner, rest);
      return;
    }
    const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
    for (int take = 0; take <= std::min(left, shape[row] - below); ++take) {
      inner[row] = shape[row] - take;
      strips(shape, inner, row + 1, left - take, rest, total);
    }
    inner[row] = shape[row];
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo_;
};

enum class Fill { ZeroOne, Natural, Whole };

// Counts ways of distributing the rows of `rows` into columns with the given
// capacities, exhausting every column. ZeroOne: each row puts at most one
// unit per column; Natural: any amounts; Whole: the row goes into a single
// column.
class MatrixCounter {
 public:
  MatrixCounter(std::vector<int> rows, Fill fill) : rows_(std::move(rows)), fill_(fill) {}

  BigInt count(std::vector<int> caps) { return rec(0, caps); }

 private:
  BigInt rec(std::size_t row, std::vector<int>& caps) {
    if (row == rows_.size()) {
      for (int c : caps)
        if (c) return 0;
      return 1;
    }
    auto key = std::make_pair(row, caps);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    if (fill_ == Fill::Whole) {
      for (auto& c : caps)
        if (c >= rows_[row]) {
          c -= rows_[row];
          total += rec(row + 1, caps);
          c += rows_[row];
        }
    } else {
      place(row, 0, rows_[row], caps, total);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  void place(std::size_t row, std::size_t col, int left, std::vector<int>& caps, BigInt& total) {
    if (col == caps.size()) {
      if (left == 0) total += rec(row + 1, caps);
      return;
    }
    const int most = std::min(left, fill_ == Fill::ZeroOne ? std::min(caps[col], 1) : caps[col]);
    for (int a = 0; a <= most; ++a) {
      caps[col] -= a;
      place(row, col + 1, left - a, caps, total);
      caps[col] += a;
    }
  }

  std::vector<int> rows_;
  Fill fill_;
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

Matrix build_to_monomial(Basis b, int n) {
  const auto& parts = partitions(n);
  const std::size_t P = parts.size();
  Matrix M(P, std::vector<BigInt>(P, BigInt(0)));
  if (b == Basis::m) {
    for (std::size_t k = 0; k < P; ++k) M[k][k] = 1;
    return M;
  }
  Kostka kostka;
  for (std::size_t l = 0; l < P; ++l) {
    std::unique_ptr<MatrixCounter> counter;
    if (b == Basis::e) counter = std::make_unique<MatrixCounter>(parts[l].parts(), Fill::ZeroOne);
    if (b == Basis::h) counter = std::make_unique<MatrixCounter>(parts[l].parts(), Fill::Natural);
    if (b == Basis::p) counter = std::make_unique<MatrixCounter>(parts[l].parts(), Fill::Whole);
    for (std::size_t mu = 0; mu < P; ++mu)
      M[mu][l] = b == Basis::s ? kostka(parts[l].parts(), parts[mu].parts()) : counter->count(parts[mu].parts());
  }
  return M;
}

RationalMatrix invert(const Matrix& M) {
  const std::size_t P = M.size();
  RationalMatrix a(P, std::vector<Rational>(2 * P, Rational(0)));
  for (std::size_t i = 0; i < P; ++i) {
    for (std::size_t j = 0; j < P; ++j) a[i][j] = M[i][j];
    a[i][P + i] = 1;
  }
  for (std::size_t col = 0; col < P; ++col) {
    std::size_t pivot = col;
    while (pivot < P && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == P) throw InternalContradiction("singular transition matrix");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < P; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < 2 * P; ++j) a[r][j] -= f * a[col][j];
    }
  }
  RationalMatrix out(P, std::vector<Rational>(P));
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) out[i][j] = a[i][P + j];
  return out;
}

struct TransitionCache {
  std::mutex mutex;
  std::map<std::pair<Basis, int>, Matrix> forward;
  std::map<std::pair<Basis, int>, RationalMatrix> backward;
};

TransitionCache& transition_cache() {
  static TransitionCache c;
  return c;
}

const RationalMatrix& from_monomial_matrix(Basis b, int n) {
  const Matrix& M = to_monomial_matrix(b, n);
  auto& c = transition_cache();
  std::lock_guard lock(c.mutex);
  auto key = std::make_pair(b, n);
  auto it = c.backward.find(key);
  if (it == c.backward.end()) it = c.backward.emplace(key, invert(M)).first;
  return it->second;
}

void check_same_degree(const SymmetricFunction& a, const SymmetricFunction& b) {
  if (a.degree() != b.degree()) throw SizeMismatch("symmetric functions of different degrees");
}

}  // namespace

const std::vector<std::vector<BigInt>>& to_monomial_matrix(Basis b, int n) {
  auto& c = transition_cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.forward.find({b, n}); it != c.forward.end()) return it->second;
  }
  Matrix M = build_to_monomial(b, n);
  std::lock_guard lock(c.mutex);
  return c.forward.try_emplace({b, n}, std::move(M)).first->second;
}

SymmetricFunction::SymmetricFunction(int degree, Basis b)
    : n_(degree), basis_(b), c_(partitions(degree).size()) {}

SymmetricFunction SymmetricFunction::basis_element(Basis b, const Partition& lambda, const RationalLaurent& coeff) {
  SymmetricFunction f(lambda.size(), b);
  f.set_coeff(lambda, coeff);
  return f;
}

const RationalLaurent& SymmetricFunction::coeff(const Partition& lambda) const {
  if (lambda.size() != n_) throw SizeMismatch("partition of the wrong size");
  return c_[partition_index(lambda)];
}

void SymmetricFunction::set_coeff(const Partition& lambda, RationalLaurent c) {
  if (lambda.size() != n_) throw SizeMismatch("partition of the wrong size");
  c_[partition_index(lambda)] = std::move(c);
}

void SymmetricFunction::add_to_coeff(const Partition& lambda, const RationalLaurent& c) {
  if (lambda.size() != n_) throw SizeMismatch("partition of the wrong size");
  c_[partition_index(lambda)] += c;
}

bool SymmetricFunction::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const RationalLaurent& x) { return x.is_zero(); });
}

SymmetricFunction SymmetricFunction::to(Basis target) const {
  if (target == basis_) return *this;
  const std::size_t P = c_.size();
  std::vector<RationalLaurent> mono(P);
  if (basis_ == Basis::m) {
    mono = c_;
  } else {
    const auto& M = to_monomial_matrix(basis_, n_);
    for (std::size_t l = 0; l < P; ++l) {
      if (c_[l].is_zero()) continue;
      for (std::size_t mu = 0; mu < P; ++mu)
        if (sgn(M[mu][l]) != 0) mono[mu] += c_[l] * Rational(M[mu][l]);
    }
  }
  SymmetricFunction out(n_, target);
  if (target == Basis::m) {
    out.c_ = std::move(mono);
    return out;
  }
  const auto& inv = from_monomial_matrix(target, n_);
  for (std::size_t mu = 0; mu < P; ++mu) {
    if (mono[mu].is_zero()) continue;
    for (std::size_t l = 0; l < P; ++l)
      if (sgn(inv[l][mu]) != 0) out.c_[l] += mono[mu] * inv[l][mu];
  }
  return out;
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& o) {
  check_same_degree(*this, o);
  const SymmetricFunction other = o.to(basis_);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += other.c_[k];
  return *this;
}

SymmetricFunction& SymmetricFunction::operator-=(const SymmetricFunction& o) {
  check_same_degree(*this, o);
  const SymmetricFunction other = o.to(basis_);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= other.c_[k];
  return *this;
}

SymmetricFunction SymmetricFunction::scaled(const RationalLaurent& c) const {
  SymmetricFunction out = *this;
  for (auto& x : out.c_) x *= c;
  return out;
}

bool operator==(const SymmetricFunction& a, const SymmetricFunction& b) {
  if (a.n_ != b.n_) return false;
  if (a.basis_ == b.basis_) return a.c_ == b.c_;
  return a.c_ == b.to(a.basis_).c_;
}

SymmetricFunction SymmetricFunction::at_q_one() const {
  SymmetricFunction out = *this;
  for (auto& x : out.c_) x = RationalLaurent(x.at_one());
  return out;
}

namespace {

std::string render(const SymmetricFunction& f, bool latex) {
  const auto& parts = partitions(f.degree());
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const RationalLaurent& c = f.coefficients()[k];
    if (c.is_zero()) continue;
    std::string label;
    if (latex) {
      label = basis_name(f.basis()) + "_{";
      for (int p : parts[k].parts()) label += std::to_string(p) + (p >= 10 ? "," : "");
      label += "}";
    } else {
      label = basis_name(f.basis()) + "[" + parts[k].to_string() + "]";
    }
    std::string cs;
    if (c == RationalLaurent(1)) {
      cs = "";
    } else if (c == RationalLaurent(-1)) {
      cs = "-";
    } else if (c.terms().size() == 1 && c.min_half_exponent() == 0) {
      cs = c.terms().front().second.get_str() + (latex ? "" : "*");
    } else {
      cs = "(" + (latex ? c.to_latex() : c.to_pretty_string()) + ")" + (latex ? "" : "*");
    }
    if (!out.empty()) out += " + ";
    out += cs + label;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string SymmetricFunction::to_string() const { return render(*this, false); }
std::string SymmetricFunction::to_latex() const { return render(*this, true); }

SymmetricFunction convert_basis(const SymmetricFunction& f, Basis target) { return f.to(target); }

SymmetricFunction omega(const SymmetricFunction& f) {
  const int n = f.degree();
  const auto& parts = partitions(n);
  switch (f.basis()) {
    case Basis::h:
    case Basis::e: {
      SymmetricFunction g(n, f.basis() == Basis::h ? Basis::e : Basis::h);
      for (std::size_t k = 0; k < parts.size(); ++k) g.set_coeff(parts[k], f.coefficients()[k]);
      return g.to(f.basis());
    }
    case Basis::s: {
      SymmetricFunction g(n, Basis::s);
      for (std::size_t k = 0; k < parts.size(); ++k) g.set_coeff(parts[k].conjugate(), f.coefficients()[k]);
      return g;
    }
    case Basis::p: {
      SymmetricFunction g = f;
      for (std::size_t k = 0; k < parts.size(); ++k)
        if ((n - parts[k].length()) % 2 == 1) g.set_coeff(parts[k], -f.coefficients()[k]);
      return g;
    }
    case Basis::m:
      return omega(f.to(Basis::h)).to(Basis::m);
  }
  return f;
}

PositivityResult positivity(const SymmetricFunction& f, Basis basis) {
  const SymmetricFunction g = f.to(basis);
  const auto& parts = partitions(f.degree());
  PositivityResult r;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const RationalLaurent& c = g.coefficients()[k];
    bool ok = c.is_polynomial();
    for (const auto& [e, a] : c.terms()) ok = ok && sgn(a) > 0 && a.get_den() == 1;
    if (!ok) {
      r.positive = false;
      r.witness = parts[k];
      r.witness_coeff = c;
      return r;
    }
  }
  return r;
}

Json to_json(const SymmetricFunction& f) {
  Json terms = Json::array();
  const auto& parts = partitions(f.degree());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (f.coefficients()[k].is_zero()) continue;
    terms.push_back({{"partition", parts[k].parts()}, {"coeff", to_json(f.coefficients()[k])}});
  }
  return Json{{"basis", basis_name(f.basis())}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

SymmetricFunction symmetric_function_from_json(const Json& j) {
  try {
    SymmetricFunction f(j.at("degree").get<int>(), parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
      f.add_to_coeff(Partition(t.at("partition").get<std::vector<int>>()), rational_laurent_from_json(t.at("coeff")));
    return f;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed symmetric function JSON: ") + e.what());
  }
}

}  // namespace hecke_lab
