#include "virmod/fusion.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

#include "virmod/cyclotomic.hpp"
#include "virmod/errors.hpp"
#include "virmod/modular_data.hpp"

namespace virmod {

namespace {

bool in_window(int x, int a, int b, int n) {
  const int lo = std::abs(a - b) + 1;
  const int hi = std::min(a + b - 1, 2 * n - 1 - a - b);
  return x >= lo && x <= hi && (x - lo) % 2 == 0;
}

struct VerlindeData {
  SMatrixHat s;
  std::vector<CycNumber> entries;  // S_hat, row-major
  std::vector<CycNumber> inv_vacuum_row;
  Rational scale;

  explicit VerlindeData(const MinimalModel& model) : s(model), scale(s.scale_squared()) {
    const std::size_t d = model.size();
    entries.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) entries.push_back(s.entry(i, j));
    const std::size_t vac = model.vacuum_index();
    for (std::size_t m = 0; m < d; ++m) inv_vacuum_row.push_back(entries[vac * d + m].inverse());
  }

  const CycNumber& at(std::size_t i, std::size_t j) const { return entries[i * s.size() + j]; }

  long coeff(std::size_t a, std::size_t b, std::size_t c) const {
    const std::size_t d = s.size();
    CycNumber sum(s.conductor());
    for (std::size_t m = 0; m < d; ++m) sum += at(a, m) * at(b, m) * at(c, m).conj() * inv_vacuum_row[m];
    sum *= scale;
    const auto value = sum.as_rational();
    const MinimalModel& model = s.model();
    const std::string where = to_string(model.label(a)) + " x " + to_string(model.label(b)) + " -> " +
                              to_string(model.label(c));
    if (!value || !is_integer(*value)) throw ConventionError("Verlinde sum for " + where + " is not a rational integer");
    if (sgn(*value) < 0) throw ConventionError("Verlinde sum for " + where + " is negative");
    return value->get_num().get_si();
  }
};

}  // namespace

int fusion_coeff(const MinimalModel& model, KacLabel a, KacLabel b, KacLabel c) {
  if (!model.in_range(a.r, a.s) || !model.in_range(b.r, b.s) || !model.in_range(c.r, c.s)) throw DomainError("label outside the Kac table");
  const int p = model.p();
  const int q = model.q();
  for (const KacLabel rep : {c, KacLabel{q - c.r, p - c.s}})
    if (in_window(rep.r, a.r, b.r, q) && in_window(rep.s, a.s, b.s, p)) return 1;
  return 0;
}

long verlinde_coeff(const MinimalModel& model, KacLabel a, KacLabel b, KacLabel c) {
  const VerlindeData data(model);
  return data.coeff(model.index_of(a), model.index_of(b), model.index_of(c));
}

std::vector<KacLabel> fusion_targets(const MinimalModel& model, KacLabel a, KacLabel b) {
  std::vector<KacLabel> out;
  for (std::size_t c = 0; c < model.size(); ++c)
    if (fusion_coeff(model, a, b, model.label(c)) != 0) out.push_back(model.label(c));
  return out;
}

std::size_t FusionTable::nonzero_count() const {
  std::size_t n = 0;
  for (long v : window) n += v != 0;
  return n;
}

FusionTable fusion_table(const MinimalModel& model) {
  const std::size_t d = model.size();
  const VerlindeData data(model);
  FusionTable table{model, std::vector<long>(d * d * d), std::vector<long>(d * d * d), {}, {}};

  std::string verlinde_error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t ab = 0; ab < d * d; ++ab) {
    const std::size_t a = ab / d;
    const std::size_t b = ab % d;
    for (std::size_t c = 0; c < d; ++c) {
      const std::size_t k = ab * d + c;
      table.window[k] = fusion_coeff(model, model.label(a), model.label(b), model.label(c));
      try {
        table.verlinde[k] = data.coeff(a, b, c);
      } catch (const ConventionError& e) {
        table.verlinde[k] = -1;
#pragma omp critical(verlinde_error)
        if (verlinde_error.empty()) verlinde_error = e.what();
      }
    }
  }

  for (std::size_t k = 0; k < d * d * d; ++k)
    if (table.window[k] != table.verlinde[k])
      table.mismatches.push_back({{model.label(k / (d * d)), model.label(k / d % d), model.label(k % d)},
                                  table.window[k],
                                  table.verlinde[k]});

  auto triple_text = [](const FusionTriple& t) { return to_string(t.a) + " x " + to_string(t.b) + " -> " + to_string(t.c); };
  {
    std::string detail = verlinde_error.empty() ? "" : verlinde_error + "; ";
    if (table.mismatches.empty())
      detail += "window and Verlinde agree on all " + std::to_string(d * d * d) + " triples";
    else
      detail += std::to_string(table.mismatches.size()) + " mismatches, first " + triple_text(table.mismatches[0].triple) +
                " (window " + std::to_string(table.mismatches[0].window) + ", Verlinde " +
                std::to_string(table.mismatches[0].verlinde) + ")";
    table.checks.push_back({"window_equals_verlinde", table.mismatches.empty() && verlinde_error.empty(), detail});
  }

  bool bounded = true;
  for (long v : table.verlinde) bounded = bounded && v >= 0 && v <= 1;
  table.checks.push_back({"multiplicity_at_most_one", bounded, bounded ? "all N in {0,1}" : "coefficient outside {0,1}"});

  const std::size_t vac = model.vacuum_index();
  bool unit = true;
  bool commutative = true;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = 0; c < d; ++c) {
      unit = unit && table(vac, a, c) == (a == c ? 1 : 0);
      for (std::size_t b = 0; b < d; ++b) commutative = commutative && table(a, b, c) == table(b, a, c);
    }
  table.checks.push_back({"unit", unit, "vacuum x a = a"});
  table.checks.push_back({"commutativity", commutative, "N_ab^c = N_ba^c"});

  bool associative = true;
  for (std::size_t a = 0; a < d && associative; ++a)
    for (std::size_t b = 0; b < d && associative; ++b)
      for (std::size_t c = 0; c < d && associative; ++c)
        for (std::size_t x = 0; x < d; ++x) {
          long lhs = 0;
          long rhs = 0;
          for (std::size_t e = 0; e < d; ++e) {
            lhs += table(a, b, e) * table(e, c, x);
            rhs += table(b, c, e) * table(a, e, x);
          }
          if (lhs != rhs) {
            associative = false;
            break;
          }
        }
  table.checks.push_back({"associativity", associative, "(a x b) x c = a x (b x c)"});
  return table;
}

}  // namespace virmod
