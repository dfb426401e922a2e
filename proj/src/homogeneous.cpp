#include "adf/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace adf {

namespace {

int mod_pos(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

HomogIndex::HomogIndex(std::vector<int> entries) : e_(std::move(entries)) {
  if (e_.size() < 2)
    throw std::invalid_argument("HomogIndex: need at least 2 entries (d >= 1)");
  const int m = static_cast<int>(e_.size());
  long sum = 0;
  for (int v : e_) sum += v;
  if (sum != 0) throw std::invalid_argument("HomogIndex: entries must sum to 0");
  const int r0 = mod_pos(e_[0], m);
  for (int v : e_)
    if (mod_pos(v, m) != r0)
      throw std::invalid_argument(
          "HomogIndex: entries must be pairwise congruent mod d+1");
}

bool HomogIndex::sorted_descending() const {
  return std::is_sorted(e_.rbegin(), e_.rend());
}

int HomogIndex::max_entry() const { return *std::max_element(e_.begin(), e_.end()); }
int HomogIndex::min_entry() const { return *std::min_element(e_.begin(), e_.end()); }

std::string HomogIndex::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ',';
    os << e_[i];
  }
  return os.str();
}

HomogIndex HomogIndex::parse(std::string_view s, int d) {
  std::vector<int> e;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      e.push_back(std::stoi(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) e.push_back(std::stoi(cur));
  if (static_cast<int>(e.size()) != d + 1)
    throw std::invalid_argument("index literal has wrong length: " + std::string(s));
  return HomogIndex(std::move(e));
}

HomogIndex zero_index(int d) {
  return HomogIndex(std::vector<int>(static_cast<size_t>(d) + 1, 0));
}

HomogIndex add(const HomogIndex& a, const HomogIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("index size mismatch");
  std::vector<int> e(a.entries());
  for (int i = 0; i < b.size(); ++i) e[static_cast<size_t>(i)] += b[i];
  return HomogIndex(std::move(e));
}

HomogIndex sub(const HomogIndex& a, const HomogIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("index size mismatch");
  std::vector<int> e(a.entries());
  for (int i = 0; i < b.size(); ++i) e[static_cast<size_t>(i)] -= b[i];
  return HomogIndex(std::move(e));
}

HomogIndex sorted_descending(const HomogIndex& k) {
  std::vector<int> e(k.entries());
  std::sort(e.begin(), e.end(), std::greater<>());
  return HomogIndex(std::move(e));
}

HomogIndex index_from_differences(std::span<const int> a) {
  const int d = static_cast<int>(a.size());
  long s = 0;
  for (int v = 0; v < d; ++v)
    s += static_cast<long>(d - v) * a[static_cast<size_t>(v)];
  std::vector<int> k(static_cast<size_t>(d) + 1);
  long prefix = 0;
  for (int i = 0; i <= d; ++i) {
    k[static_cast<size_t>(i)] =
        static_cast<int>(s - static_cast<long>(d + 1) * prefix);
    if (i < d) prefix += a[static_cast<size_t>(i)];
  }
  return HomogIndex(std::move(k));
}

RatPoint::RatPoint(std::vector<Rat> coords) : c_(std::move(coords)) {
  if (c_.size() < 2)
    throw std::invalid_argument("RatPoint: need at least 2 coordinates (d >= 1)");
  Rat sum = 0;
  for (const Rat& v : c_) sum += v;
  if (sum != 0) throw std::invalid_argument("RatPoint: coordinates must sum to 0");
}

Point::Point(std::vector<double> coords) : c_(std::move(coords)) {
  if (c_.size() < 2)
    throw std::invalid_argument("Point: need at least 2 coordinates (d >= 1)");
  double sum = 0;
  for (double v : c_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Point: non-finite coordinate");
    sum += v;
  }
  if (std::abs(sum) > 1e-12 * static_cast<double>(c_.size()))
    throw std::invalid_argument("Point: coordinates must sum to 0");
}

Point to_point(const RatPoint& t) {
  std::vector<double> c;
  c.reserve(static_cast<size_t>(t.size()));
  for (const Rat& v : t.coords()) c.push_back(to_double(v));
  // Rounding can push the float sum off zero; recenter the last coordinate.
  double sum = std::accumulate(c.begin(), c.end(), 0.0);
  c.back() -= sum;
  return Point(std::move(c));
}

RatPoint node_point(const HomogIndex& j, int n) {
  check_order(n);
  const int q = (j.dim() + 1) * n;
  std::vector<Rat> c;
  c.reserve(static_cast<size_t>(j.size()));
  for (int v : j.entries()) c.emplace_back(v, q);
  for (Rat& x : c) x.canonicalize();
  return RatPoint(std::move(c));
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int m = static_cast<int>(map_.size());
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (int v : map_) {
    if (v < 0 || v >= m || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: mapping is not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
  int inv = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (map_[static_cast<size_t>(i)] > map_[static_cast<size_t>(j)]) ++inv;
  parity_ = (inv % 2 == 0) ? 1 : -1;
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int m, int i, int j) {
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> v(map_.size());
  for (int i = 0; i < size(); ++i)
    v[static_cast<size_t>(i)] = map_[static_cast<size_t>(other(i))];
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

template <typename Seq>
Seq permuted(const Seq& in, const Permutation& s) {
  Seq out(in.size());
  for (size_t i = 0; i < in.size(); ++i)
    out[i] = in[s(static_cast<int>(i))];
  return out;
}

}  // namespace

Point apply_perm(const Point& t, const Permutation& s) {
  if (t.size() != s.size()) throw std::invalid_argument("size mismatch");
  return Point(permuted(t.coords(), s));
}

RatPoint apply_perm(const RatPoint& t, const Permutation& s) {
  if (t.size() != s.size()) throw std::invalid_argument("size mismatch");
  return RatPoint(permuted(t.coords(), s));
}

HomogIndex apply_perm(const HomogIndex& k, const Permutation& s) {
  if (k.size() != s.size()) throw std::invalid_argument("size mismatch");
  return HomogIndex(permuted(k.entries(), s));
}

Point project_to_homogeneous(std::span<const double> t) {
  std::vector<double> c(t.begin(), t.end());
  double sum = std::accumulate(c.begin(), c.end(), 0.0);
  if (!std::isfinite(sum)) throw std::invalid_argument("non-finite input");
  c.push_back(-sum);
  return Point(std::move(c));
}

RatPoint project_to_homogeneous(std::span<const Rat> t) {
  std::vector<Rat> c(t.begin(), t.end());
  Rat sum = 0;
  for (const Rat& v : c) sum += v;
  c.push_back(-sum);
  return RatPoint(std::move(c));
}

bool in_fundamental_domain(const RatPoint& t) {
  const int m = t.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Rat diff = t[i] - t[j];
      if (diff <= -1 || diff > 1) return false;
    }
  return true;
}

bool in_simplex(const RatPoint& t) {
  const int m = t.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Rat diff = t[i] - t[j];
      if (diff < 0 || diff > 1) return false;
    }
  return true;
}

bool in_simplex(const Point& t) {
  const int m = t.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double diff = t[i] - t[j];
      if (diff < 0.0 || diff > 1.0) return false;
    }
  return true;
}

int partition_index(const RatPoint& t) {
  if (!in_fundamental_domain(t))
    throw std::domain_error("partition_index: point outside the fundamental domain");
  int j = 0;
  for (int i = 1; i < t.size(); ++i)
    if (t[i] < t[j]) j = i;
  return j + 1;
}

bool congruent_mod_lattice(const RatPoint& s, const RatPoint& t) {
  if (s.size() != t.size()) throw std::invalid_argument("size mismatch");
  for (int i = 0; i < s.size(); ++i) {
    Rat diff = s[i] - t[i];
    if (diff.get_den() != 1) return false;
  }
  return true;
}

RatPoint fold_into_domain(const RatPoint& t) {
  // Pairwise reduction by integer multiples of e_i - e_j. A step with
  // |t_i - t_j| > 1 strictly decreases the squared norm; a step with
  // t_i - t_j = -1 (i < j) swaps the two values and strictly decreases the
  // number of anti-sorted pairs, so the loop terminates.
  std::vector<Rat> c(t.coords());
  const int m = static_cast<int>(c.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Rat diff = c[static_cast<size_t>(i)] - c[static_cast<size_t>(j)];
        if (diff > 1) {
          Rat k = Rat(ceil_int((diff - 1) / 2));
          c[static_cast<size_t>(i)] -= k;
          c[static_cast<size_t>(j)] += k;
          changed = true;
        } else if (diff <= -1) {
          Rat k = Rat(floor_int((1 - diff) / 2));
          c[static_cast<size_t>(i)] += k;
          c[static_cast<size_t>(j)] -= k;
          changed = true;
        }
      }
  }
  return RatPoint(std::move(c));
}

std::vector<HomogIndex> orbit(const HomogIndex& k) {
  std::vector<int> e(k.entries());
  std::sort(e.begin(), e.end());
  std::vector<HomogIndex> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Int stabilizer_size(const HomogIndex& k) {
  std::map<int, int> mult;
  for (int v : k.entries()) ++mult[v];
  Int r = 1;
  for (auto& [_, c] : mult) r *= factorial(c);
  return r;
}

Int orbit_size(const HomogIndex& k) {
  return factorial(k.size()) / stabilizer_size(k);
}

}  // namespace adf
