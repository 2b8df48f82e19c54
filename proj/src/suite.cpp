#include "virmod/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

#include "virmod/branching.hpp"
#include "virmod/characters.hpp"
#include "virmod/errors.hpp"
#include "virmod/fusion.hpp"
#include "virmod/invariants.hpp"
#include "virmod/modular_data.hpp"
#include "virmod/reference/oracles.hpp"

namespace virmod::suite {

namespace {

std::string model_text(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// Collects failures and keeps the first few for the detail line.
class Tally {
 public:
  void ok() { ++total_; }
  void fail(const std::string& what) {
    ++total_;
    ++failed_;
    if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void record(bool pass, const std::string& what) { pass ? ok() : fail(what); }
  bool pass() const { return failed_ == 0 && total_ > 0; }
  std::string summary(const std::string& unit) const {
    std::string s = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " " + unit;
    if (failed_ > 0) s += "; failures: " + first_;
    return s;
  }

 private:
  long total_ = 0;
  long failed_ = 0;
  std::string first_;
};

CriterionResult timed(int id, std::string title, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r{id, std::move(title), false, "", 0.0};
  try {
    auto [pass, detail] = body();
    r.pass = pass;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<std::pair<int, int>> models_up_to(long pq_limit) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= pq_limit / 2; ++p)
    for (int q = 2; static_cast<long>(p) * q <= pq_limit; ++q)
      if (p != q && std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

CriterionResult modular_relations() {
  return timed(1, "modular relations exact for pq <= 60", [] {
    Tally t;
    for (auto [p, q] : models_up_to(60)) {
      const ModularReport rep = check_modular_relations(MinimalModel(p, q));
      std::string failed;
      for (const auto& c : rep.checks)
        if (!c.pass) failed += " " + c.name;
      t.record(rep.all_pass(), model_text(p, q) + failed);
    }
    return std::make_pair(t.pass(), t.summary("models"));
  });
}

CriterionResult convention_certification() {
  return timed(2, "tau = i character transform, order 50", [] {
    Tally t;
    double worst = 0.0;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {6, 5}, {5, 4}}) {
      const double defect = s_transform_defect(MinimalModel(p, q), 50);
      worst = std::max(worst, defect);
      t.record(defect < 1e-8, model_text(p, q) + " defect " + std::to_string(defect));
    }
    std::ostringstream d;
    d << t.summary("models") << ", max defect " << worst;
    return std::make_pair(t.pass(), d.str());
  });
}

CriterionResult catalog_verification() {
  return timed(3, "catalog rows are modular invariants", [] {
    Tally t;
    std::vector<std::pair<int, int>> models = models_up_to(60);
    for (auto m : std::vector<std::pair<int, int>>{{5, 6}, {5, 8}, {6, 5}, {8, 5}, {12, 11}, {12, 23}, {13, 12}, {25, 12},
                                                   {18, 5}, {5, 18}, {30, 29}, {31, 30}})
      if (std::find(models.begin(), models.end(), m) == models.end()) models.push_back(m);
    long ball = 0;
    double worst_radius = 0.0;
    for (auto [p, q] : models) {
      const MinimalModel model(p, q);
      for (auto row : applicable_rows(p, q)) {
        const InvariantReport rep = verify_invariant(build_catalog(model, row));
        if (rep.method == "ball") {
          ++ball;
          worst_radius = std::max(worst_radius, rep.max_radius);
        }
        t.record(rep.all_pass(), model_text(p, q) + " " + tag(row));
      }
    }
    std::ostringstream d;
    d << t.summary("row instances") << " over " << models.size() << " models, " << ball
      << " via certified balls (max radius " << worst_radius << ")";
    return std::make_pair(t.pass(), d.str());
  });
}

CriterionResult classification_search() {
  return timed(4, "classification with cap 4 matches the brute-force oracle", [] {
    Tally t;
    std::string counts;
    for (auto [p, q, expected] : std::vector<std::tuple<int, int, std::size_t>>{{4, 3, 1}, {5, 2, 1}, {6, 5, 2}}) {
      const MinimalModel model(p, q);
      const ClassifyResult res = classify(model, 4);
      const auto oracle = reference::brute_force_invariants(model, 4);
      counts += (counts.empty() ? "" : ", ") + model_text(p, q) + ":" + std::to_string(res.invariants.size());
      t.record(res.invariants.size() == expected, model_text(p, q) + " found " + std::to_string(res.invariants.size()));
      t.record(res.invariants == oracle, model_text(p, q) + " differs from oracle");
      t.record(res.complete, model_text(p, q) + " incomplete");
    }
    return std::make_pair(t.pass(), t.summary("checks") + " (" + counts + ")");
  });
}

CriterionResult branching_identity() {
  return timed(5, "branching decomposition identity and chi_U", [] {
    Tally t;
    const std::vector<std::pair<int, int>> pairs{{3, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}};
    for (auto [p, pp] : pairs) {
      const BranchingInstance inst(p, pp);
      t.record(inst.central_charge_balance() == -5, model_text(p, pp) + " central charge balance");
      const MinimalModel base = inst.base();
      for (const auto& a : base.transversal()) {
        const CheckResult w = weight_offset_check(inst, a);
        t.record(w.pass, model_text(p, pp) + " " + w.name);
        for (const auto& b : base.transversal()) {
          const CheckResult c = branching_identity_check(inst, a, b, 20);
          t.record(c.pass, model_text(p, pp) + " " + c.name);
        }
      }
    }
    const PuiseuxSeries u1 = extract_chi_U(BranchingInstance(3, 2), 10);
    const PuiseuxSeries u2 = extract_chi_U(BranchingInstance(4, 3), 10);
    t.record(agree_to_common_order(u1, u2), "chi_U from (3,2) and (4,3) disagree");
    t.record(u1.offset() == make_rational(5, 24), "chi_U leading exponent " + to_string(u1.offset()));
    t.record(u1.nonnegative_integer_coefficients() && u2.nonnegative_integer_coefficients(), "chi_U coefficients");
    return std::make_pair(t.pass(), t.summary("checks"));
  });
}

CriterionResult extension_integrality() {
  return timed(6, "extension weights are the expected integers", [] {
    Tally t;
    struct Case {
      ExtensionFamily family;
      int parameter;
      std::vector<long> weights;
    };
    const std::vector<Case> cases{
        {ExtensionFamily::E6Q, 11, {8}},          {ExtensionFamily::E6Q, 23, {20}},
        {ExtensionFamily::E6R, 13, {10}},         {ExtensionFamily::E6R, 25, {22}},
        {ExtensionFamily::E8Q, 29, {24, 78, 189}}, {ExtensionFamily::E8R, 31, {26, 84, 203}},
    };
    for (const auto& c : cases) {
      const ExtensionDescriptor desc = family_descriptor(c.family, c.parameter);
      bool match = check_integrality(desc).pass && desc.weights.size() == c.weights.size() + 1;
      for (std::size_t i = 0; match && i < c.weights.size(); ++i) match = desc.weights[i + 1] == c.weights[i];
      t.record(match, tag(c.family) + " " + std::to_string(c.parameter));
    }
    const MinimalModel m(30, 59);
    t.record(m.conformal_weight({1, 11}) == 54, "h^{30,59}_{1,11}");
    return std::make_pair(t.pass(), t.summary("weight sets"));
  });
}

CriterionResult extension_invariant_matching() {
  return timed(7, "extension vacuum blocks match catalog invariants", [] {
    Tally t;
    for (auto family : {ExtensionFamily::E6Q, ExtensionFamily::E6R, ExtensionFamily::E8Q, ExtensionFamily::E8R})
      for (int k = 0; k < 3; ++k) {
        const int param = family_parameter(family, k);
        const ExtensionDescriptor desc = family_descriptor(family, param);
        try {
          invariant_of_family(desc);
          t.ok();
        } catch (const ConventionError& e) {
          t.fail(tag(family) + " " + std::to_string(param) + ": " + e.what());
        }
      }
    return std::make_pair(t.pass(), t.summary("family instances"));
  });
}

CriterionResult fusion_rules() {
  return timed(8, "window fusion equals Verlinde for pq <= 40", [] {
    Tally t;
    long triples = 0;
    for (auto [p, q] : models_up_to(40)) {
      const FusionTable table = fusion_table(MinimalModel(p, q));
      triples += static_cast<long>(table.window.size());
      std::string failed;
      for (const auto& c : table.checks)
        if (!c.pass) failed += " " + c.name + " (" + c.detail + ")";
      t.record(table.all_pass(), model_text(p, q) + failed);
    }
    return std::make_pair(t.pass(), t.summary("models") + ", " + std::to_string(triples) + " triples");
  });
}

CriterionResult character_oracle() {
  return timed(9, "characters equal Gram-matrix graded dimensions", [] {
    Tally t;
    for (auto [p, q] : models_up_to(20)) {
      const MinimalModel model(p, q);
      for (std::size_t i = 0; i < model.size(); ++i) {
        const auto dims = reference::graded_dimensions(model.central_charge(), model.weight(i), 6);
        const PuiseuxSeries chi = character(model, model.label(i), 6);
        bool same = true;
        for (int n = 0; n <= 6; ++n) same = same && chi.coeff(n) == dims[static_cast<std::size_t>(n)];
        t.record(same, model_text(p, q) + " " + to_string(model.label(i)));
      }
    }
    return std::make_pair(t.pass(), t.summary("modules through level 6"));
  });
}

std::vector<CriterionResult> run_all() {
  return {modular_relations(),   convention_certification(), catalog_verification(),
          classification_search(), branching_identity(),     extension_integrality(),
          extension_invariant_matching(), fusion_rules(),    character_oracle()};
}

}  // namespace virmod::suite
