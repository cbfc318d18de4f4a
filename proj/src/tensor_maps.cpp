#include "spqg/tensor_maps.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>

namespace spqg {

namespace {

std::atomic<std::uint64_t> g_max_cells{0};

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

Dims::Dims(std::vector<std::uint32_t> dims) : n(std::move(dims)) {
  if (n.empty()) throw Error(ErrorCode::Range, "dims must be nonempty");
  for (auto v : n)
    if (v < 1) throw Error(ErrorCode::Range, "dimensions must be at least 1");
}

Dims Dims::parse(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument("bad");
      out.push_back(std::uint32_t(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "bad dimension list '" + text + "'");
    }
  }
  return Dims(out);
}

std::uint64_t Dims::N() const noexcept {
  std::uint64_t r = 1;
  for (auto v : n) r *= v;
  return r;
}

std::string Dims::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n.size(); ++i) out << (i ? "," : "") << n[i];
  return out.str();
}

std::uint64_t basis_index(const MultiIndex& I, const Dims& d) {
  std::uint64_t idx = 0;
  for (const auto& tuple : I) {
    if (tuple.size() != d.m()) throw Error(ErrorCode::Range, "index tuple has the wrong length");
    for (std::size_t y = 0; y < tuple.size(); ++y) {
      if (tuple[y] < 1 || tuple[y] > d.n[y]) throw Error(ErrorCode::Range, "index component out of range");
      idx = idx * d.n[y] + (tuple[y] - 1);
    }
  }
  return idx;
}

MultiIndex multi_index_at(std::uint64_t index, std::size_t k, const Dims& d) {
  MultiIndex I(k, std::vector<std::uint32_t>(d.m()));
  for (std::size_t x = k; x-- > 0;)
    for (std::size_t y = d.m(); y-- > 0;) {
      I[x][y] = std::uint32_t(index % d.n[y]) + 1;
      index /= d.n[y];
    }
  return I;
}

std::uint64_t max_cells() {
  if (auto v = g_max_cells.load()) return v;
  std::uint64_t cells = 10'000'000;
  if (const char* env = std::getenv("SPQG_MAX_CELLS")) {
    char* end = nullptr;
    const auto parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) cells = parsed;
  }
  g_max_cells.store(cells);
  return cells;
}

void set_max_cells(std::uint64_t cells) { g_max_cells.store(cells); }

SpMatrix::SpMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  for (auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw Error(ErrorCode::Range, "matrix entry out of range");
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col)
      entries_.back().value += e.value;
    else
      entries_.push_back(std::move(e));
  }
  std::erase_if(entries_, [](const Entry& e) { return e.value == 0; });
}

SpMatrix SpMatrix::identity(std::uint64_t n) {
  std::vector<Entry> e;
  e.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) e.push_back({i, i, 1});
  return SpMatrix(n, n, std::move(e));
}

Rational SpMatrix::at(std::uint64_t row, std::uint64_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col}, [](const Entry& e, auto key) {
    return e.row != key.first ? e.row < key.first : e.col < key.second;
  });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

SpMatrix SpMatrix::operator*(const SpMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::Shape, "matrix product of incompatible shapes");
  // rhs rows are contiguous because entries are sorted.
  std::vector<std::size_t> row_start;
  std::vector<std::uint64_t> row_id;
  for (std::size_t i = 0; i < rhs.entries_.size(); ++i)
    if (i == 0 || rhs.entries_[i].row != rhs.entries_[i - 1].row) {
      row_start.push_back(i);
      row_id.push_back(rhs.entries_[i].row);
    }
  row_start.push_back(rhs.entries_.size());
  std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> acc;
  for (const auto& a : entries_) {
    auto it = std::lower_bound(row_id.begin(), row_id.end(), a.col);
    if (it == row_id.end() || *it != a.col) continue;
    const auto r = std::size_t(it - row_id.begin());
    for (std::size_t j = row_start[r]; j < row_start[r + 1]; ++j) {
      const auto& b = rhs.entries_[j];
      acc[{a.row, b.col}] += a.value * b.value;
    }
  }
  std::vector<Entry> out;
  out.reserve(acc.size());
  for (auto& [key, v] : acc) out.push_back({key.first, key.second, std::move(v)});
  return SpMatrix(rows_, rhs.cols_, std::move(out));
}

SpMatrix SpMatrix::transpose() const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.col, e.row, e.value});
  return SpMatrix(cols_, rows_, std::move(out));
}

SpMatrix SpMatrix::scaled(const Rational& s) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.row, e.col, e.value * s});
  return SpMatrix(rows_, cols_, std::move(out));
}

SpMatrix SpMatrix::kron(const SpMatrix& rhs) const {
  std::vector<Entry> out;
  out.reserve(entries_.size() * rhs.entries_.size());
  for (const auto& a : entries_)
    for (const auto& b : rhs.entries_)
      out.push_back({a.row * rhs.rows_ + b.row, a.col * rhs.cols_ + b.col, a.value * b.value});
  return SpMatrix(rows_ * rhs.rows_, cols_ * rhs.cols_, std::move(out));
}

bool operator==(const SpMatrix& a, const SpMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto &x = a.entries_[i], &y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

std::string SpMatrix::to_matrix_market() const {
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate integer general\n";
  out << rows_ << " " << cols_ << " " << entries_.size() << "\n";
  for (const auto& e : entries_) {
    if (e.value.get_den() != 1) throw Error(ErrorCode::Internal, "matrix has non-integer entries");
    out << (e.row + 1) << " " << (e.col + 1) << " " << e.value.get_num().get_str() << "\n";
  }
  return out.str();
}

void require_graded(const SpatialPartition& p, const Dims& d) {
  if (p.m() != d.m())
    throw Error(ErrorCode::Shape, "partition has " + std::to_string(p.m()) + " levels but dims has " +
                                      std::to_string(d.m()));
  if (!is_pi_graded(p, ker_partition(d.n)))
    throw Error(ErrorCode::Grading, "partition connects levels of different dimension");
}

int delta(const SpatialPartition& p, const MultiIndex& I, const MultiIndex& J, const Dims& d) {
  require_graded(p, d);
  if (I.size() != p.k() || J.size() != p.l()) throw Error(ErrorCode::Range, "multi index length does not match shape");
  std::vector<std::int64_t> value(p.block_count(), -1);
  for (std::size_t i = 0; i < p.point_count(); ++i) {
    const auto pt = p.point_at(i);
    const auto& tuple = pt.side == Side::Upper ? I[pt.col - 1] : J[pt.col - 1];
    if (tuple.size() != d.m()) throw Error(ErrorCode::Range, "index tuple has the wrong length");
    const auto v = tuple[pt.level - 1];
    if (v < 1 || v > d.n[pt.level - 1]) throw Error(ErrorCode::Range, "index component out of range");
    auto& cur = value[p.label_at(i)];
    if (cur < 0)
      cur = v;
    else if (cur != std::int64_t(v))
      return 0;
  }
  return 1;
}

SpMatrix s_map(const SpatialPartition& p, const Dims& d) {
  require_graded(p, d);
  const std::uint64_t N = d.N();
  const std::uint64_t cap = max_cells();
  if (checked_pow(N, std::uint64_t(p.k()) + p.l(), cap) > cap)
    throw Error(ErrorCode::Size, "N^(k+l) exceeds the cell cap of " + std::to_string(cap));
  const std::uint64_t rows = checked_pow(N, p.l(), cap), cols = checked_pow(N, p.k(), cap);

  // Digit weight of every point in its row or column index.
  const std::uint32_t m = p.m();
  const std::size_t up = p.upper_point_count();
  std::vector<std::uint64_t> weight(p.point_count());
  auto fill = [&](std::size_t begin, std::size_t count) {
    std::uint64_t w = 1;
    for (std::size_t i = count; i-- > 0;) {
      weight[begin + i] = w;
      w *= d.n[i % m];
    }
  };
  fill(0, up);
  fill(up, p.point_count() - up);

  const auto nb = p.block_count();
  std::vector<std::uint32_t> range(nb, 0);
  std::vector<std::vector<std::size_t>> members(nb);
  for (std::size_t i = 0; i < p.point_count(); ++i) {
    range[p.label_at(i)] = d.n[i % m];
    members[p.label_at(i)].push_back(i);
  }
  // Odometer over one value per block.
  std::vector<std::uint32_t> value(nb, 0);
  std::vector<SpMatrix::Entry> entries;
  while (true) {
    std::uint64_t row = 0, col = 0;
    for (std::size_t b = 0; b < nb; ++b)
      for (auto i : members[b]) (i < up ? col : row) += weight[i] * value[b];
    entries.push_back({row, col, 1});
    std::size_t b = 0;
    while (b < nb && ++value[b] == range[b]) value[b++] = 0;
    if (b == nb) break;
  }
  return SpMatrix(rows, cols, std::move(entries));
}

FunctorialityReport verify_functoriality(const SpatialPartition& p, const SpatialPartition& q, const Dims& d) {
  FunctorialityReport r;
  const auto sp = s_map(p, d), sq = s_map(q, d);
  r.tensor_ok = s_map(tensor(p, q), d) == sp.kron(sq);
  r.involution_ok = s_map(involution(p), d) == sp.transpose() && s_map(involution(q), d) == sq.transpose();
  if (q.l() == p.k()) {
    r.compose_checked = true;
    const auto c = compose(q, p);
    r.loops = c.loops;
    for (auto level : c.loop_levels) r.loop_factor *= d.n[level - 1];
    const auto lhs = sp * sq;
    const auto sc = s_map(c.partition, d);
    r.compose_ok = lhs == sc.scaled(r.loop_factor);
    Rational power = 1;
    for (std::uint32_t i = 0; i < c.loops; ++i) power *= Rational(std::to_string(d.N()));
    r.power_of_N_ok = lhs == sc.scaled(power);
  }
  return r;
}

std::size_t sparse_integer_rank(std::vector<std::vector<std::pair<std::uint64_t, mpz_class>>> vectors) {
  using Vec = std::vector<std::pair<std::uint64_t, mpz_class>>;
  std::map<std::uint64_t, Vec> pivots;  // leading index -> reduced row
  auto normalize = [](Vec& v) {
    mpz_class g = 0;
    for (auto& [_, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto& [_, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  };
  for (auto& v : vectors) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(v, [](const auto& e) { return e.second == 0; });
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) {
        normalize(v);
        pivots.emplace(v.front().first, std::move(v));
        break;
      }
      // v <- a*v - b*pivot with a = pivot lead, b = v lead; the lead cancels.
      const Vec& piv = it->second;
      const mpz_class a = piv.front().second, b = v.front().second;
      Vec out;
      out.reserve(v.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < piv.size()) {
        if (j == piv.size() || (i < v.size() && v[i].first < piv[j].first)) {
          out.emplace_back(v[i].first, a * v[i].second);
          ++i;
        } else if (i == v.size() || piv[j].first < v[i].first) {
          out.emplace_back(piv[j].first, -b * piv[j].second);
          ++j;
        } else {
          mpz_class x = a * v[i].second - b * piv[j].second;
          if (x != 0) out.emplace_back(v[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      normalize(out);
      v = std::move(out);
    }
  }
  return pivots.size();
}

std::size_t hom_dim(const std::vector<SpatialPartition>& parts, const Dims& d) {
  if (parts.empty()) return 0;
  const auto k = parts.front().k(), l = parts.front().l();
  std::vector<std::vector<std::pair<std::uint64_t, mpz_class>>> vectors;
  for (const auto& p : parts) {
    if (p.k() != k || p.l() != l) throw Error(ErrorCode::Shape, "hom_dim needs partitions of one shape");
    const auto s = s_map(p, d);
    auto& v = vectors.emplace_back();
    for (const auto& e : s.entries()) v.emplace_back(e.row * s.cols() + e.col, e.value.get_num());
  }
  return sparse_integer_rank(std::move(vectors));
}

}  // namespace spqg
