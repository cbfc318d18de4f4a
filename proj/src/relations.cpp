#include "spqg/relations.hpp"

#include <sstream>

#include "spqg/catalog.hpp"

namespace spqg {

namespace {

std::vector<std::uint32_t> tuple_of(std::uint64_t index, const Dims& d) {
  std::vector<std::uint32_t> t(d.m());
  for (std::size_t y = d.m(); y-- > 0;) {
    t[y] = std::uint32_t(index % d.n[y]);
    index /= d.n[y];
  }
  return t;
}

std::uint64_t index_of_tuple(const std::vector<std::uint32_t>& t, const Dims& d) {
  std::uint64_t idx = 0;
  for (std::size_t y = 0; y < t.size(); ++y) idx = idx * d.n[y] + t[y];
  return idx;
}

// Calls f(other) for every choice of basis indices on the side opposite to
// `fixed_side` that makes delta_p equal to 1, given the fixed side's indices.
template <class F>
void for_each_completion(const SpatialPartition& p, const Dims& d, Side fixed_side,
                         const std::vector<std::uint64_t>& fixed, F&& f) {
  const std::uint32_t m = p.m();
  const std::size_t up = p.upper_point_count();
  const auto nb = p.block_count();
  std::vector<std::int64_t> value(nb, -1);
  const std::size_t fixed_begin = fixed_side == Side::Upper ? 0 : up;
  for (std::size_t c = 0; c < fixed.size(); ++c) {
    const auto t = tuple_of(fixed[c], d);
    for (std::uint32_t y = 0; y < m; ++y) {
      const std::size_t i = fixed_begin + std::size_t(c) * m + y;
      auto& v = value[p.label_at(i)];
      if (v < 0)
        v = t[y];
      else if (v != std::int64_t(t[y]))
        return;
    }
  }
  std::vector<std::size_t> free_blocks;
  std::vector<std::uint32_t> range(nb, 0);
  for (std::size_t i = 0; i < p.point_count(); ++i) range[p.label_at(i)] = d.n[i % m];
  for (std::size_t b = 0; b < nb; ++b)
    if (value[b] < 0) {
      free_blocks.push_back(b);
      value[b] = 0;
    }
  const std::size_t other_begin = fixed_side == Side::Upper ? up : 0;
  const std::uint32_t other_cols = fixed_side == Side::Upper ? p.l() : p.k();
  std::vector<std::uint64_t> other(other_cols);
  std::vector<std::uint32_t> t(m);
  while (true) {
    for (std::uint32_t c = 0; c < other_cols; ++c) {
      for (std::uint32_t y = 0; y < m; ++y)
        t[y] = std::uint32_t(value[p.label_at(other_begin + std::size_t(c) * m + y)]);
      other[c] = index_of_tuple(t, d);
    }
    f(other);
    std::size_t i = 0;
    while (i < free_blocks.size() && ++value[free_blocks[i]] == range[free_blocks[i]]) value[free_blocks[i++]] = 0;
    if (i == free_blocks.size()) break;
  }
}

// Odometer over [0, N)^len.
bool advance(std::vector<std::uint64_t>& idx, std::uint64_t N) {
  std::size_t i = idx.size();
  while (i-- > 0) {
    if (++idx[i] < N) return true;
    idx[i] = 0;
  }
  return false;
}

// Base-N digits of index, most significant first.
std::vector<std::uint64_t> digits(std::uint64_t index, std::size_t len, std::uint64_t N) {
  std::vector<std::uint64_t> out(len);
  for (std::size_t i = len; i-- > 0;) {
    out[i] = index % N;
    index /= N;
  }
  return out;
}

Rational parse_rational(const nlohmann::json& v) {
  try {
    if (v.is_number_integer()) return Rational(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
      Rational r(v.get<std::string>());
      if (r.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in " + v.dump());
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorCode::Parse, "model entries must be integers or \"p/q\" strings, got " + v.dump());
}

std::vector<std::uint32_t> parse_tuple(const std::string& s, const Dims& d) {
  std::vector<std::uint32_t> t;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      t.push_back(std::uint32_t(std::stoul(item)));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "bad index tuple '" + s + "'");
    }
  }
  if (t.size() != d.m()) throw Error(ErrorCode::Parse, "index tuple '" + s + "' has the wrong length");
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (t[y] < 1 || t[y] > d.n[y]) throw Error(ErrorCode::Range, "index tuple '" + s + "' out of range");
    t[y] -= 1;
  }
  return t;
}

std::string tuple_text(std::uint64_t index, const Dims& d) {
  const auto t = tuple_of(index, d);
  std::string s;
  for (std::size_t y = 0; y < t.size(); ++y) s += (y ? "," : "") + std::to_string(t[y] + 1);
  return s;
}

RepMatrix evaluate(const FormalSum& s, const MatrixModel& model) {
  RepMatrix total(model.rep_dim());
  for (const auto& [word, coeff] : s.terms()) {
    RepMatrix prod = RepMatrix::identity(model.rep_dim());
    for (const auto& g : word) prod = prod * model.u(g.row, g.col);
    total += prod.scaled(coeff);
  }
  return total;
}

bool all_hold(const SpatialPartition& p, const MatrixModel& model) { return check_relation(p, model).holds; }

}  // namespace

void FormalSum::add(const Word& w, std::int64_t coeff) {
  auto& c = terms_[w];
  c += coeff;
  if (c == 0) terms_.erase(w);
}

RelationSet emit_relations(const SpatialPartition& p, const Dims& d) {
  require_graded(p, d);
  const std::uint64_t N = d.N();
  const std::uint64_t cap = max_cells();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < p.k() + p.l(); ++i) {
    if (count > cap / N) throw Error(ErrorCode::Size, "too many relation instances");
    count *= N;
  }
  RelationSet out{p, d, {}};
  out.equations.reserve(count);
  std::vector<std::uint64_t> I(p.k(), 0), J(p.l(), 0);
  do {
    std::fill(J.begin(), J.end(), 0);
    do {
      Equation eq{I, J, {}, {}};
      for_each_completion(p, d, Side::Lower, J, [&](const std::vector<std::uint64_t>& A) {
        Word w;
        for (std::size_t x = 0; x < A.size(); ++x) w.push_back({A[x], I[x]});
        eq.lhs.add(w);
      });
      for_each_completion(p, d, Side::Upper, I, [&](const std::vector<std::uint64_t>& B) {
        Word w;
        for (std::size_t x = 0; x < B.size(); ++x) w.push_back({J[x], B[x]});
        eq.rhs.add(w);
      });
      out.equations.push_back(std::move(eq));
    } while (advance(J, N));
  } while (advance(I, N));
  return out;
}

std::string format_word(const Word& w, const Dims& d) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? " " : "") + ("u(" + tuple_text(w[i].row, d) + "|" + tuple_text(w[i].col, d) + ")");
  return s;
}

std::string format_sum(const FormalSum& s, const Dims& d) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, coeff] : s.terms()) {
    if (!first) out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0) out += "-";
    first = false;
    const auto mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += format_word(word, d);
  }
  return out;
}

std::string format_relations(const RelationSet& r, bool skip_tautologies) {
  std::ostringstream out;
  for (const auto& eq : r.equations) {
    if (skip_tautologies && eq.lhs == eq.rhs) continue;
    out << format_sum(eq.lhs, r.dims) << " = " << format_sum(eq.rhs, r.dims) << "\n";
  }
  return out.str();
}

nlohmann::json relations_to_json(const RelationSet& r) {
  auto sum_json = [&](const FormalSum& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [word, coeff] : s.terms()) {
      nlohmann::json jw = nlohmann::json::array();
      for (const auto& g : word) jw.push_back({tuple_text(g.row, r.dims), tuple_text(g.col, r.dims)});
      terms.push_back({{"coeff", coeff}, {"word", jw}});
    }
    return terms;
  };
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& eq : r.equations) {
    nlohmann::json I = nlohmann::json::array(), J = nlohmann::json::array();
    for (auto i : eq.I) I.push_back(tuple_text(i, r.dims));
    for (auto j : eq.J) J.push_back(tuple_text(j, r.dims));
    eqs.push_back({{"I", I}, {"J", J}, {"lhs", sum_json(eq.lhs)}, {"rhs", sum_json(eq.rhs)}});
  }
  return {{"dims", r.dims.n}, {"equations", eqs}};
}

RepMatrix RepMatrix::identity(std::uint32_t dim) { return scalar(dim, 1); }

RepMatrix RepMatrix::scalar(std::uint32_t dim, const Rational& s) {
  RepMatrix r(dim);
  for (std::uint32_t i = 0; i < dim; ++i) r.at(i, i) = s;
  return r;
}

bool RepMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RepMatrix RepMatrix::operator*(const RepMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw Error(ErrorCode::Shape, "representation dimensions differ");
  RepMatrix out(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t k = 0; k < dim_; ++k) {
      const auto& x = at(i, k);
      if (x == 0) continue;
      for (std::uint32_t j = 0; j < dim_; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& rhs) {
  if (dim_ != rhs.dim_) throw Error(ErrorCode::Shape, "representation dimensions differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

RepMatrix RepMatrix::scaled(const Rational& s) const {
  RepMatrix out = *this;
  for (auto& x : out.a_) x *= s;
  return out;
}

MatrixModel::MatrixModel(Dims dims, std::uint32_t rep_dim) : dims_(std::move(dims)), rep_dim_(rep_dim) {
  if (rep_dim_ == 0) throw Error(ErrorCode::Range, "rep_dim must be positive");
  N_ = dims_.N();
  if (N_ * N_ > max_cells()) throw Error(ErrorCode::Size, "model has too many entries");
  entries_.resize(N_ * N_);
}

void MatrixModel::set(std::uint64_t I, std::uint64_t J, RepMatrix value) {
  if (I >= N_ || J >= N_) throw Error(ErrorCode::Range, "model index out of range");
  if (value.dim() != rep_dim_) throw Error(ErrorCode::Shape, "entry has the wrong representation dimension");
  entries_[I * N_ + J] = std::move(value);
}

const RepMatrix& MatrixModel::u(std::uint64_t I, std::uint64_t J) const {
  const auto& e = entries_.at(I * N_ + J);
  if (!e)
    throw Error(ErrorCode::IncompleteModel,
                "no entry for u(" + tuple_text(I, dims_) + "|" + tuple_text(J, dims_) + ")");
  return *e;
}

bool MatrixModel::complete() const {
  for (const auto& e : entries_)
    if (!e) return false;
  return true;
}

void MatrixModel::require_complete() const {
  for (std::uint64_t I = 0; I < N_; ++I)
    for (std::uint64_t J = 0; J < N_; ++J) (void)u(I, J);
}

bool MatrixModel::orthogonal() const {
  require_complete();
  const auto one = RepMatrix::identity(rep_dim_), zero = RepMatrix(rep_dim_);
  for (std::uint64_t I = 0; I < N_; ++I)
    for (std::uint64_t J = 0; J < N_; ++J) {
      RepMatrix rows(rep_dim_), cols(rep_dim_);
      for (std::uint64_t K = 0; K < N_; ++K) {
        rows += u(I, K) * u(J, K);
        cols += u(K, I) * u(K, J);
      }
      const auto& want = I == J ? one : zero;
      if (!(rows == want) || !(cols == want)) return false;
    }
  return true;
}

nlohmann::json MatrixModel::to_json() const {
  nlohmann::json entries = nlohmann::json::object();
  for (std::uint64_t I = 0; I < N_; ++I)
    for (std::uint64_t J = 0; J < N_; ++J) {
      const auto& e = entries_[I * N_ + J];
      if (!e) continue;
      nlohmann::json rows = nlohmann::json::array();
      for (std::uint32_t r = 0; r < rep_dim_; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint32_t c = 0; c < rep_dim_; ++c) row.push_back(e->at(r, c).get_str());
        rows.push_back(std::move(row));
      }
      entries[tuple_text(I, dims_) + "|" + tuple_text(J, dims_)] = std::move(rows);
    }
  return {{"dims", dims_.n}, {"rep_dim", rep_dim_}, {"entries", entries}};
}

MatrixModel MatrixModel::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j["dims"].is_array())
    throw Error(ErrorCode::Parse, "model JSON needs a 'dims' array");
  std::vector<std::uint32_t> dims;
  for (const auto& v : j["dims"]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) throw Error(ErrorCode::Parse, "bad model dims");
    dims.push_back(std::uint32_t(v.get<std::int64_t>()));
  }
  const std::uint32_t rep_dim =
      j.contains("rep_dim") && j["rep_dim"].is_number_integer() ? std::uint32_t(j["rep_dim"].get<std::int64_t>()) : 1;
  MatrixModel model(Dims(dims), rep_dim);
  if (!j.contains("entries") || !j["entries"].is_object())
    throw Error(ErrorCode::Parse, "model JSON needs an 'entries' object");
  for (const auto& [key, value] : j["entries"].items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw Error(ErrorCode::Parse, "entry key '" + key + "' must look like \"I|J\"");
    const auto I = index_of_tuple(parse_tuple(key.substr(0, bar), model.dims_), model.dims_);
    const auto J = index_of_tuple(parse_tuple(key.substr(bar + 1), model.dims_), model.dims_);
    RepMatrix m(rep_dim);
    if (!value.is_array()) {
      if (rep_dim != 1) throw Error(ErrorCode::Parse, "scalar entry in a model with rep_dim > 1");
      m.at(0, 0) = parse_rational(value);
    } else {
      if (value.size() != rep_dim) throw Error(ErrorCode::Parse, "entry '" + key + "' has the wrong row count");
      for (std::uint32_t r = 0; r < rep_dim; ++r) {
        if (!value[r].is_array() || value[r].size() != rep_dim)
          throw Error(ErrorCode::Parse, "entry '" + key + "' has the wrong column count");
        for (std::uint32_t c = 0; c < rep_dim; ++c) m.at(r, c) = parse_rational(value[r][c]);
      }
    }
    model.set(I, J, std::move(m));
  }
  return model;
}

MatrixModel permutation_model(const std::vector<std::uint32_t>& sigma, std::uint32_t levels) {
  const auto n = std::uint32_t(sigma.size());
  if (n == 0) throw Error(ErrorCode::Range, "empty permutation");
  std::vector<char> seen(n, 0);
  for (auto s : sigma) {
    if (s < 1 || s > n || seen[s - 1]) throw Error(ErrorCode::Range, "not a permutation");
    seen[s - 1] = 1;
  }
  Dims d(std::vector<std::uint32_t>(levels, n));
  MatrixModel model(d, 1);
  for (std::uint64_t I = 0; I < model.N(); ++I)
    for (std::uint64_t J = 0; J < model.N(); ++J) {
      const auto ti = tuple_of(I, d), tj = tuple_of(J, d);
      bool one = true;
      for (std::uint32_t y = 0; y < levels; ++y) one = one && sigma[tj[y]] - 1 == ti[y];
      model.set(I, J, RepMatrix::scalar(1, one ? 1 : 0));
    }
  return model;
}

MatrixModel identity_model(const Dims& d) {
  MatrixModel model(d, 1);
  for (std::uint64_t I = 0; I < model.N(); ++I)
    for (std::uint64_t J = 0; J < model.N(); ++J) model.set(I, J, RepMatrix::scalar(1, I == J ? 1 : 0));
  return model;
}

MatrixModel scaled_model(const MatrixModel& model, const Rational& s) {
  MatrixModel out(model.dims(), model.rep_dim());
  for (std::uint64_t I = 0; I < model.N(); ++I)
    for (std::uint64_t J = 0; J < model.N(); ++J) out.set(I, J, model.u(I, J).scaled(s));
  return out;
}

bool relation_holds_by_equations(const SpatialPartition& p, const MatrixModel& model) {
  model.require_complete();
  for (const auto& eq : emit_relations(p, model.dims()).equations)
    if (!(evaluate(eq.lhs, model) == evaluate(eq.rhs, model))) return false;
  return true;
}

bool relation_holds_by_intertwiner(const SpatialPartition& p, const MatrixModel& model) {
  model.require_complete();
  const auto& d = model.dims();
  const auto S = s_map(p, d);
  const auto St = S.transpose();  // rows of St are the columns I of S
  const std::uint64_t N = model.N();
  const std::uint32_t dim = model.rep_dim();
  std::vector<std::uint64_t> I(p.k(), 0);
  std::size_t st = 0;
  for (std::uint64_t col = 0; col < S.cols(); ++col) {
    // Column I of u^(x k): entry A is u_{A_1 I_1} ... u_{A_k I_k}.
    std::vector<RepMatrix> ucol{RepMatrix::identity(dim)};
    for (std::uint32_t x = 0; x < p.k(); ++x) {
      std::vector<RepMatrix> next;
      next.reserve(ucol.size() * N);
      for (const auto& prefix : ucol)
        for (std::uint64_t a = 0; a < N; ++a) next.push_back(prefix * model.u(a, I[x]));
      ucol = std::move(next);
    }
    std::vector<RepMatrix> lhs(S.rows(), RepMatrix(dim));
    for (const auto& e : S.entries()) lhs[e.row] += ucol[e.col].scaled(e.value);

    std::vector<std::uint64_t> J(p.l(), 0);
    for (std::uint64_t row = 0; row < S.rows(); ++row) {
      RepMatrix rhs(dim);
      for (std::size_t t = st; t < St.entries().size() && St.entries()[t].row == col; ++t) {
        const auto B = digits(St.entries()[t].col, p.l(), N);
        RepMatrix prod = RepMatrix::identity(dim);
        for (std::uint32_t x = 0; x < p.l(); ++x) prod = prod * model.u(J[x], B[x]);
        rhs += prod.scaled(St.entries()[t].value);
      }
      if (!(lhs[row] == rhs)) return false;
      advance(J, N);
    }
    while (st < St.entries().size() && St.entries()[st].row == col) ++st;
    advance(I, N);
  }
  return true;
}

RelationCheck check_relation(const SpatialPartition& p, const MatrixModel& model) {
  model.require_complete();
  RelationCheck out;
  const auto rel = emit_relations(p, model.dims());
  out.equations = rel.equations.size();
  for (const auto& eq : rel.equations) {
    if (evaluate(eq.lhs, model) == evaluate(eq.rhs, model)) continue;
    if (out.failures++ == 0)
      out.first_failure = format_sum(eq.lhs, model.dims()) + " = " + format_sum(eq.rhs, model.dims());
  }
  out.holds = out.failures == 0;
  if (relation_holds_by_intertwiner(p, model) != out.holds)
    throw Error(ErrorCode::OracleMismatch, "equation-level and intertwiner checks disagree for " +
                                               std::to_string(p.k()) + "x" + std::to_string(p.l()) + " partition");
  return out;
}

ClosureCheck check_relation_closure(const SpatialPartition& p, const SpatialPartition& q, const MatrixModel& model) {
  if (!all_hold(p, model)) throw Error(ErrorCode::Precondition, "relations of p do not hold in the model");
  if (!all_hold(q, model)) throw Error(ErrorCode::Precondition, "relations of q do not hold in the model");
  ClosureCheck out;
  out.tensor_ok = all_hold(tensor(p, q), model);
  out.involution_ok = all_hold(involution(p), model) && all_hold(involution(q), model);
  if (p.l() == q.k()) {
    out.compose_pq_checked = true;
    out.compose_pq_ok = all_hold(compose(p, q).partition, model);
  }
  if (q.l() == p.k()) {
    out.compose_qp_checked = true;
    out.compose_qp_ok = all_hold(compose(q, p).partition, model);
  }
  return out;
}

RingReport ring_matrix(const MatrixModel& model) {
  const auto& d = model.dims();
  if (d.m() != 2 || d.n[0] != d.n[1]) throw Error(ErrorCode::Shape, "ring construction needs dims (n,n)");
  model.require_complete();
  if (!all_hold(catalog::singletons_on_level(2), model))
    throw Error(ErrorCode::Precondition, "relations of singletons_on_level2 do not hold in the model");
  const std::uint32_t n = d.n[0], dim = model.rep_dim();
  auto idx = [&](std::uint32_t a, std::uint32_t b) { return std::uint64_t(a) * n + b; };
  RingReport r;
  r.n = n;
  r.ring.assign(std::size_t(n) * n, RepMatrix(dim));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k) r.ring[i * n + j] += model.u(idx(i, k), idx(j, 0));

  r.independent = true;
  for (std::uint32_t i = 0; i < n && r.independent; ++i)
    for (std::uint32_t j = 0; j < n && r.independent; ++j)
      for (std::uint32_t x = 0; x < n; ++x) {
        RepMatrix by_x(dim), by_y(dim);
        for (std::uint32_t k = 0; k < n; ++k) {
          by_x += model.u(idx(i, k), idx(j, x));
          by_y += model.u(idx(i, x), idx(j, k));
        }
        if (!(by_x == r.ring[i * n + j]) || !(by_y == r.ring[i * n + j])) {
          r.independent = false;
          break;
        }
      }

  const auto one = RepMatrix::identity(dim), zero = RepMatrix(dim);
  r.orthogonal = true;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      RepMatrix rows(dim), cols(dim);
      for (std::uint32_t k = 0; k < n; ++k) {
        rows += r.ring[i * n + k] * r.ring[j * n + k];
        cols += r.ring[k * n + i] * r.ring[k * n + j];
      }
      const auto& want = i == j ? one : zero;
      if (!(rows == want) || !(cols == want)) r.orthogonal = false;
    }

  const auto up = amplify(catalog::singleton(), 2);
  r.magic_checked = all_hold(up, model) && all_hold(involution(up), model) && all_hold(catalog::half_three(), model);
  if (r.magic_checked) {
    r.idempotent = true;
    r.row_col_sums_one = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      RepMatrix row(dim), col(dim);
      for (std::uint32_t j = 0; j < n; ++j) {
        const auto& x = r.ring[i * n + j];
        if (!(x * x == x)) r.idempotent = false;
        row += r.ring[i * n + j];
        col += r.ring[j * n + i];
      }
      if (!(row == one) || !(col == one)) r.row_col_sums_one = false;
    }
  }
  return r;
}

nlohmann::json ring_report_to_json(const RingReport& r) {
  nlohmann::json ring = nlohmann::json::array();
  for (std::uint32_t i = 0; i < r.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t j = 0; j < r.n; ++j) {
      const auto& m = r.ring[i * r.n + j];
      nlohmann::json cell = nlohmann::json::array();
      for (std::uint32_t a = 0; a < m.dim(); ++a) {
        nlohmann::json mr = nlohmann::json::array();
        for (std::uint32_t b = 0; b < m.dim(); ++b) mr.push_back(m.at(a, b).get_str());
        cell.push_back(std::move(mr));
      }
      row.push_back(std::move(cell));
    }
    ring.push_back(std::move(row));
  }
  nlohmann::json j = {{"n", r.n},
                      {"ring", ring},
                      {"independent", r.independent},
                      {"orthogonal", r.orthogonal},
                      {"magic_checked", r.magic_checked}};
  if (r.magic_checked) {
    j["idempotent"] = r.idempotent;
    j["row_col_sums_one"] = r.row_col_sums_one;
  }
  return j;
}

}  // namespace spqg
