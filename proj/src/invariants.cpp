#include "virmod/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "virmod/errors.hpp"
#include "virmod/kernels.hpp"
#include "virmod/modular_data.hpp"

namespace virmod {

namespace {

struct RowInfo {
  CatalogRow row;
  const char* tag;
};

constexpr RowInfo kRows[] = {
    {CatalogRow::A, "a"},           {CatalogRow::D_q_odd, "d_q_odd"}, {CatalogRow::D_q_even, "d_q_even"},
    {CatalogRow::D_p_odd, "d_p_odd"}, {CatalogRow::D_p_even, "d_p_even"}, {CatalogRow::E6_p12, "e6_p12"},
    {CatalogRow::E6_q12, "e6_q12"},   {CatalogRow::E7_p18, "e7_p18"},   {CatalogRow::E7_q18, "e7_q18"},
    {CatalogRow::E8_p30, "e8_p30"},   {CatalogRow::E8_q30, "e8_q30"},
};

// Accumulates 2X; finish() halves with an integrality check.
class DoubledBuilder {
 public:
  explicit DoubledBuilder(const MinimalModel& model) : model_(model), doubled_(model.size() * model.size(), 0) {}

  void add(KacLabel a, KacLabel b, long weight = 1) {
    const std::size_t i = model_.index_of(a);
    const std::size_t j = model_.index_of(b);
    doubled_[i * model_.size() + j] += weight;
  }

  // |sum_{a in labels} Z_a|^2
  void add_block(const std::vector<KacLabel>& labels) {
    for (const auto& a : labels)
      for (const auto& b : labels) add(a, b);
  }

  InvariantMatrix finish(const std::string& what) const {
    const std::size_t d = model_.size();
    std::vector<long> x(d * d);
    for (std::size_t k = 0; k < d * d; ++k) {
      if (doubled_[k] < 0 || doubled_[k] % 2 != 0)
        throw ConventionError(what + ": entry " + to_string(model_.label(k / d)) + "," +
                              to_string(model_.label(k % d)) + " is not a nonnegative integer after halving");
      x[k] = doubled_[k] / 2;
    }
    if (x[0] != 1) throw ConventionError(what + ": vacuum entry is " + std::to_string(x[0]) + ", expected 1");
    return InvariantMatrix(model_, std::move(x));
  }

 private:
  const MinimalModel& model_;
  std::vector<long> doubled_;
};

// Exceptional exponent blocks, placed in the s slot (p = N rows) or the r slot
// (q = N rows).
std::vector<std::vector<int>> exceptional_blocks(CatalogRow row) {
  switch (row) {
    case CatalogRow::E6_p12:
    case CatalogRow::E6_q12:
      return {{1, 7}, {4, 8}, {5, 11}};
    case CatalogRow::E7_p18:
    case CatalogRow::E7_q18:
      return {{1, 17}, {5, 13}, {7, 11}, {9}};
    case CatalogRow::E8_p30:
    case CatalogRow::E8_q30:
      return {{1, 11, 19, 29}, {7, 13, 17, 23}};
    default:
      return {};
  }
}

bool exceptional_in_s_slot(CatalogRow row) {
  return row == CatalogRow::E6_q12 || row == CatalogRow::E7_q18 || row == CatalogRow::E8_q30;
}

}  // namespace

const std::vector<CatalogRow>& all_catalog_rows() {
  static const std::vector<CatalogRow> rows = [] {
    std::vector<CatalogRow> r;
    for (const auto& info : kRows) r.push_back(info.row);
    return r;
  }();
  return rows;
}

std::string tag(CatalogRow row) {
  for (const auto& info : kRows)
    if (info.row == row) return info.tag;
  return "?";
}

std::optional<CatalogRow> parse_catalog_row(const std::string& text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (const auto& info : kRows)
    if (lower == info.tag) return info.row;
  return std::nullopt;
}

bool applicable(CatalogRow row, int p, int q) {
  switch (row) {
    case CatalogRow::A:
      return true;
    case CatalogRow::D_q_odd:
      return q >= 6 && q % 4 == 2;
    case CatalogRow::D_q_even:
      return q >= 4 && q % 4 == 0;
    case CatalogRow::D_p_odd:
      return p >= 6 && p % 4 == 2;
    case CatalogRow::D_p_even:
      return p >= 4 && p % 4 == 0;
    case CatalogRow::E6_q12:
      return p == 12;
    case CatalogRow::E6_p12:
      return q == 12;
    case CatalogRow::E7_q18:
      return p == 18;
    case CatalogRow::E7_p18:
      return q == 18;
    case CatalogRow::E8_q30:
      return p == 30;
    case CatalogRow::E8_p30:
      return q == 30;
  }
  return false;
}

std::vector<CatalogRow> applicable_rows(int p, int q) {
  std::vector<CatalogRow> out;
  for (auto row : all_catalog_rows())
    if (applicable(row, p, q)) out.push_back(row);
  return out;
}

std::string ade_type(CatalogRow row, int p, int q) {
  const std::string aq = "A_" + std::to_string(q - 1);
  const std::string ap = "A_" + std::to_string(p - 1);
  switch (row) {
    case CatalogRow::A:
      return "(" + aq + "," + ap + ")";
    case CatalogRow::D_q_odd:
    case CatalogRow::D_q_even:
      return "(D_" + std::to_string(q / 2 + 1) + "," + ap + ")";
    case CatalogRow::D_p_odd:
    case CatalogRow::D_p_even:
      return "(" + aq + ",D_" + std::to_string(p / 2 + 1) + ")";
    case CatalogRow::E6_q12:
      return "(" + aq + ",E_6)";
    case CatalogRow::E6_p12:
      return "(E_6," + ap + ")";
    case CatalogRow::E7_q18:
      return "(" + aq + ",E_7)";
    case CatalogRow::E7_p18:
      return "(E_7," + ap + ")";
    case CatalogRow::E8_q30:
      return "(" + aq + ",E_8)";
    case CatalogRow::E8_p30:
      return "(E_8," + ap + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

InvariantMatrix::InvariantMatrix(const MinimalModel& model) : model_(model), x_(model.size() * model.size(), 0) {}

InvariantMatrix::InvariantMatrix(const MinimalModel& model, std::vector<long> entries)
    : model_(model), x_(std::move(entries)) {
  if (x_.size() != model_.size() * model_.size()) throw DomainError("invariant matrix has the wrong size");
}

InvariantMatrix InvariantMatrix::identity(const MinimalModel& model) {
  InvariantMatrix x(model);
  for (std::size_t i = 0; i < model.size(); ++i) x(i, i) = 1;
  return x;
}

InvariantMatrix InvariantMatrix::transposed() const {
  InvariantMatrix t(model_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) t(j, i) = (*this)(i, j);
  return t;
}

InvariantMatrix build_catalog(const MinimalModel& model, CatalogRow row, E7Reading reading) {
  const int p = model.p();
  const int q = model.q();
  if (!applicable(row, p, q))
    throw DomainError("catalog row " + tag(row) + " does not apply to (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
  DoubledBuilder b(model);
  switch (row) {
    case CatalogRow::A:
      for (int r = 1; r < q; ++r)
        for (int s = 1; s < p; ++s) b.add({r, s}, {r, s});
      break;
    case CatalogRow::D_q_odd:
      for (int r = 1; r < q; r += 2)
        for (int s = 1; s < p; ++s)
          if ((r + s) % 2 == 0) b.add_block({{r, s}, {q - r, s}});
      break;
    case CatalogRow::D_p_odd:
      for (int r = 1; r < q; ++r)
        for (int s = 1; s < p; s += 2)
          if ((r + s) % 2 == 0) b.add_block({{r, s}, {r, p - s}});
      break;
    case CatalogRow::D_q_even:
      for (int s = 1; s < p; ++s) {
        for (int r = 1; r < q; r += 2) b.add({r, s}, {r, s});
        b.add({q / 2, s}, {q / 2, s});
        for (int r = 2; r < q; r += 2)
          if (r != q / 2) b.add({r, s}, {q - r, s});
      }
      break;
    case CatalogRow::D_p_even:
      for (int r = 1; r < q; ++r) {
        for (int s = 1; s < p; s += 2) b.add({r, s}, {r, s});
        b.add({r, p / 2}, {r, p / 2});
        for (int s = 2; s < p; s += 2)
          if (s != p / 2) b.add({r, s}, {r, p - s});
      }
      break;
    default: {
      const bool s_slot = exceptional_in_s_slot(row);
      const int outer = s_slot ? q : p;
      auto label = [&](int fixed, int e) { return s_slot ? KacLabel{fixed, e} : KacLabel{e, fixed}; };
      for (int k = 1; k < outer; ++k) {
        for (const auto& block : exceptional_blocks(row)) {
          std::vector<KacLabel> labels;
          for (int e : block) labels.push_back(label(k, e));
          b.add_block(labels);
        }
        if (row == CatalogRow::E7_p18 || row == CatalogRow::E7_q18) {
          for (int e : {3, 15}) {
            b.add(label(k, e), label(k, 9));
            if (reading == E7Reading::Symmetrized)
              b.add(label(k, 9), label(k, e));
            else
              b.add(label(k, e), label(k, 9));
          }
        }
      }
      break;
    }
  }
  return b.finish("catalog row " + tag(row));
}

InvariantReport verify_invariant(const InvariantMatrix& inv, const VerifyOptions& options) {
  const MinimalModel& model = inv.model();
  const std::size_t d = inv.size();
  InvariantReport report;

  report.m1 = std::all_of(inv.entries().begin(), inv.entries().end(), [](long v) { return v >= 0; });
  report.checks.push_back({"M1", report.m1, report.m1 ? "entries are nonnegative integers" : "negative entry"});

  const std::size_t vac = model.vacuum_index();
  report.m2 = inv(vac, vac) == 1;
  report.checks.push_back({"M2", report.m2, "X_vac,vac = " + std::to_string(inv(vac, vac))});

  report.m3_t = true;
  std::string t_detail = "h_i - h_j integral on the support";
  for (std::size_t i = 0; i < d && report.m3_t; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (inv(i, j) != 0 && !is_integer(model.weight(i) - model.weight(j))) {
        report.m3_t = false;
        t_detail = "X" + to_string(model.label(i)) + to_string(model.label(j)) + " != 0 but h difference " +
                   to_string(model.weight(i) - model.weight(j)) + " is not an integer";
        break;
      }
  report.checks.push_back({"M3_T", report.m3_t, t_detail});

  const SMatrixHat s(model);
  kernels::CommutatorResult comm;
  if (s.pq() <= options.exact_pq_limit) {
    report.method = "exact";
    comm = kernels::commutator_exact(s, inv.entries());
  } else {
    report.method = "ball";
    comm = kernels::commutator_ball(s, inv.entries(), std::max(options.precision, 256), options.radius_limit);
    report.max_radius = comm.max_radius;
  }
  report.m3_s = comm.zero;
  std::string s_detail;
  if (comm.zero) {
    s_detail = report.method == "exact" ? "X S_hat = S_hat X over Q(zeta_" + std::to_string(s.conductor()) + ")"
                                        : "all entries of X S_hat - S_hat X certified zero, max radius " +
                                              std::to_string(comm.max_radius);
  } else {
    s_detail = "commutator nonzero at " + to_string(model.label(comm.bad_row)) + "," + to_string(model.label(comm.bad_col));
  }
  report.checks.push_back({"M3_S", report.m3_s, s_detail});
  return report;
}

}  // namespace virmod

namespace virmod {

namespace {

struct Unknown {
  std::size_t row;
  std::size_t col;
};

// Reduced echelon form with primitive integer rows; every pivot column is zero
// in all other rows.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t ncols) : ncols_(ncols) {}

  void insert(std::vector<Integer> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t c = pivots_[k];
      if (sgn(v[c]) == 0) continue;
      const Integer f = v[c];
      const Integer g = rows_[k][c];
      for (std::size_t t = 0; t < ncols_; ++t) v[t] = g * v[t] - f * rows_[k][t];
      make_primitive(v);
    }
    std::size_t pc = ncols_;
    for (std::size_t t = 0; t < ncols_; ++t)
      if (sgn(v[t]) != 0) {
        pc = t;
        break;
      }
    if (pc == ncols_) return;
    if (sgn(v[pc]) < 0)
      for (auto& e : v) e = -e;
    for (auto& row : rows_) {
      if (sgn(row[pc]) == 0) continue;
      const Integer f = row[pc];
      const Integer g = v[pc];
      for (std::size_t t = 0; t < ncols_; ++t) row[t] = g * row[t] - f * v[t];
      make_primitive(row);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<std::size_t> free_columns() const {
    std::vector<bool> is_pivot(ncols_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < ncols_; ++t)
      if (!is_pivot[t]) out.push_back(t);
    return out;
  }

 private:
  static void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& e : v)
      if (sgn(e) != 0) g = gcd(g, e);
    if (g > 1)
      for (auto& e : v) e /= g;
  }

  std::size_t ncols_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Unknown> t_allowed_unknowns(const MinimalModel& model) {
  std::vector<Unknown> out;
  for (std::size_t i = 0; i < model.size(); ++i)
    for (std::size_t j = 0; j < model.size(); ++j)
      if (is_integer(model.weight(i) - model.weight(j))) out.push_back({i, j});
  return out;
}

// Imposes X S_hat = S_hat X on the unknowns, one equation per power-basis
// coordinate of each matrix entry.
IntegerEchelon solve_commutation(const MinimalModel& model, const std::vector<Unknown>& unknowns) {
  const SMatrixHat s(model);
  const std::size_t d = model.size();
  const long phi = euler_phi(s.conductor());

  std::vector<std::vector<long>> s4(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      RootSum acc(s.conductor());
      s.accumulate(acc, i, j, 1);
      const CycNumber v = acc.reduce();
      if (v.denominator() != 1) throw ConventionError("4 S_hat entry is not integral");
      auto& out = s4[i * d + j];
      out.assign(phi, 0);
      for (long t = 0; t < v.degree(); ++t) out[t] = v.numerators()[t].get_si();
    }

  std::vector<std::vector<std::size_t>> by_row(d), by_col(d);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    by_row[unknowns[u].row].push_back(u);
    by_col[unknowns[u].col].push_back(u);
  }

  IntegerEchelon ech(unknowns.size());
  std::vector<Integer> v(unknowns.size());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (long t = 0; t < phi; ++t) {
        for (auto& e : v) e = 0;
        bool any = false;
        for (auto u : by_row[i]) {
          const long c = s4[unknowns[u].col * d + j][t];
          if (c != 0) {
            v[u] += c;
            any = true;
          }
        }
        for (auto u : by_col[j]) {
          const long c = s4[i * d + unknowns[u].row][t];
          if (c != 0) {
            v[u] -= c;
            any = true;
          }
        }
        if (any) ech.insert(v);
      }
  return ech;
}

}  // namespace

std::vector<RationalMatrix> commutant_basis(const MinimalModel& model) {
  const std::size_t d = model.size();
  const auto unknowns = t_allowed_unknowns(model);
  const IntegerEchelon ech = solve_commutation(model, unknowns);
  std::vector<RationalMatrix> basis;
  for (auto f : ech.free_columns()) {
    RationalMatrix m(d * d, Rational(0));
    m[unknowns[f].row * d + unknowns[f].col] = 1;
    for (std::size_t k = 0; k < ech.rank(); ++k) {
      const auto& row = ech.rows()[k];
      if (sgn(row[f]) == 0) continue;
      const std::size_t pc = ech.pivots()[k];
      Rational val(-row[f], row[pc]);
      val.canonicalize();
      m[unknowns[pc].row * d + unknowns[pc].col] = val;
    }
    basis.push_back(std::move(m));
  }
  return basis;
}

ClassifyResult classify(const MinimalModel& model, long cap, int precision) {
  if (cap < 1) throw DomainError("classify cap must be at least 1");
  const std::size_t d = model.size();
  const int prec = std::max(precision, 256);
  const SMatrixHat s(model);
  const std::size_t o = effective_vacuum(s, prec);
  const std::size_t vac = model.vacuum_index();

  // Entry bounds X_ij <= X_oo / (S_oi S_oj), from S^T X S = X at (o,o) and
  // positivity of the o-th row.
  const CosTable table(s.pq(), prec);
  const Ball s0 = Ball::sqrt(s.scale_squared(), prec);
  std::vector<Ball> row_o;
  row_o.reserve(d);
  for (std::size_t i = 0; i < d; ++i) row_o.push_back(s0 * s_hat_ball(s, i, o, table));
  const long x_oo_max = (o == vac) ? 1 : cap;
  auto bound = [&](std::size_t i, std::size_t j) -> long {
    const Ball prod = row_o[i] * row_o[j];
    const Ball inv = prod.reciprocal();
    const double upper = (inv.to_double() + inv.radius()) * static_cast<double>(x_oo_max);
    return static_cast<long>(std::floor(upper * (1 + 1e-12)));
  };

  auto unknowns = t_allowed_unknowns(model);
  std::vector<long> bounds(d * d, 0);
  for (const auto& u : unknowns) bounds[u.row * d + u.col] = bound(u.row, u.col);
  bounds[vac * d + vac] = 1;
  if (o != vac) bounds[o * d + o] = std::min(bounds[o * d + o], cap);
  // Widest bounds first, tightest last.
  std::stable_sort(unknowns.begin(), unknowns.end(), [&](const Unknown& a, const Unknown& b) {
    return bounds[a.row * d + a.col] > bounds[b.row * d + b.col];
  });

  const IntegerEchelon ech = solve_commutation(model, unknowns);
  const auto free_cols = ech.free_columns();

  ClassifyResult result;
  result.commutant_dimension = free_cols.size();
  if (o == vac) {
    result.complete = true;
    result.completeness_reason = "effective vacuum is the vacuum, so X_vac,vac = 1 bounds every entry";
  } else if (free_cols.size() == 1) {
    result.complete = true;
    result.completeness_reason = "commutant is one-dimensional, so X is fixed by X_vac,vac = 1";
  } else {
    result.complete = false;
    result.completeness_reason = "effective vacuum " + to_string(model.label(o)) +
                                 " differs from the vacuum and X_oo was capped at " + std::to_string(cap);
  }

  const std::size_t nfree = free_cols.size();
  std::vector<long> hi(nfree), val(nfree, 0);
  for (std::size_t k = 0; k < nfree; ++k) {
    const auto& u = unknowns[free_cols[k]];
    hi[k] = bounds[u.row * d + u.col];
    if (u.row == vac && u.col == vac) val[k] = 1;
  }
  std::vector<long> lo = val;

  std::map<std::vector<long>, bool> seen;
  std::vector<long> x(d * d);
  while (true) {
    ++result.candidates_examined;
    std::fill(x.begin(), x.end(), 0);
    bool ok = true;
    for (std::size_t k = 0; k < nfree; ++k) {
      const auto& u = unknowns[free_cols[k]];
      x[u.row * d + u.col] = val[k];
    }
    for (std::size_t r = 0; r < ech.rank() && ok; ++r) {
      const auto& row = ech.rows()[r];
      Integer acc = 0;
      for (std::size_t k = 0; k < nfree; ++k)
        if (val[k] != 0) acc -= row[free_cols[k]] * val[k];
      const Integer& piv = row[ech.pivots()[r]];
      if (sgn(acc % piv) != 0) {
        ok = false;
        break;
      }
      const Integer q = acc / piv;
      const auto& u = unknowns[ech.pivots()[r]];
      if (q < 0 || q > bounds[u.row * d + u.col]) {
        ok = false;
        break;
      }
      x[u.row * d + u.col] = q.get_si();
    }
    if (ok && x[vac * d + vac] == 1 && !seen.count(x)) {
      seen[x] = true;
      InvariantMatrix candidate(model, x);
      if (verify_invariant(candidate, {.precision = prec}).all_pass()) result.invariants.push_back(candidate);
    }
    std::size_t k = 0;
    while (k < nfree && val[k] == hi[k]) {
      val[k] = lo[k];
      ++k;
    }
    if (k == nfree) break;
    ++val[k];
  }
  std::sort(result.invariants.begin(), result.invariants.end());
  return result;
}

}  // namespace virmod
