#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "virmod/branching.hpp"
#include "virmod/characters.hpp"
#include "virmod/errors.hpp"
#include "virmod/fusion.hpp"
#include "virmod/invariants.hpp"
#include "virmod/modular_data.hpp"
#include "virmod/report.hpp"
#include "virmod/suite.hpp"

using namespace virmod;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitTruncated = 3;

struct Settings {
  int order = 20;
  long cap = 3;
  int precision = 128;
  std::string format = "text";
  std::string config;
};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

Json label_json(const KacLabel& l) { return to_string(l); }

Json matrix_support(const InvariantMatrix& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x(i, j) != 0)
        out.push_back({{"row", label_json(x.model().label(i))}, {"col", label_json(x.model().label(j))}, {"x", x(i, j)}});
  return out;
}

Report start(const std::string& command, const Settings& s, std::optional<std::pair<int, int>> model) {
  Report r;
  r.command = command;
  r.model = model;
  r.versions = {{"toolkit", kToolkitVersion},
                {"config_hash", config_hash({{"cap", std::to_string(s.cap)},
                                             {"order", std::to_string(s.order)},
                                             {"precision", std::to_string(s.precision)}})}};
  return r;
}

Report model_info(const Settings& s, int p, int q) {
  const MinimalModel m(p, q);
  Report r = start("model info", s, std::make_pair(p, q));
  r.data["c"] = rational_json(m.central_charge());
  r.data["c_eff"] = rational_json(m.effective_central_charge());
  r.data["modules"] = m.size();
  r.data["unitary"] = m.is_unitary();
  Json labels = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) labels.push_back({{"label", label_json(m.label(i))}, {"h", rational_json(m.weight(i))}});
  r.data["transversal"] = labels;
  std::size_t o = 0;
  bool positive = true;
  std::string detail;
  try {
    o = effective_vacuum(m, std::max(s.precision, 256));
    detail = "S row of " + to_string(m.label(o)) + " certified positive";
  } catch (const ConventionError& e) {
    positive = false;
    detail = e.what();
  }
  r.data["effective_vacuum"] = label_json(m.label(o));
  r.add_check({"effective_vacuum_row_positive", positive, detail});
  return r;
}

Report smatrix(const Settings& s, int p, int q) {
  const MinimalModel m(p, q);
  const SMatrixHat sh(m);
  const TMatrix t = build_t(m);
  Report r = start("smatrix", s, std::make_pair(p, q));
  r.parameters = {{"precision", s.precision}, {"order", s.order}};
  r.add_checks(check_modular_relations(sh, t, s.precision).checks);
  const double defect = s_transform_defect(m, s.order);
  std::ostringstream d;
  d << "max |chi_i(i) - sum_j S_ij chi_j(i)| = " << defect;
  r.add_check({"tau_i_transform", defect < 1e-8, d.str()});
  r.data["s0_squared"] = rational_json(sh.scale_squared());
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(cyclotomic_json(sh.entry(i, j)));
    rows.push_back(row);
  }
  r.data["labels"] = Json::array();
  for (const auto& l : m.transversal()) r.data["labels"].push_back(label_json(l));
  r.data["s_hat"] = rows;
  Json approx = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(sh.approx(i, j));
    approx.push_back(row);
  }
  r.data["s_hat_float"] = approx;
  r.data["t_modulus"] = t.modulus();
  r.data["t_exponents"] = t.exponents;
  Json phases = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) phases.push_back(rational_json(t.phase(i)));
  r.data["t_phases"] = phases;
  return r;
}

Report char_cmd(const Settings& s, int p, int q, int rr, int ss) {
  const MinimalModel m(p, q);
  const KacLabel label{rr, ss};
  const PuiseuxSeries chi = character(m, label, s.order);
  Report r = start("char", s, std::make_pair(p, q));
  r.parameters = {{"label", label_json(label)}, {"order", s.order}};
  r.add_check({"leading_coefficient_one", chi.coeff(0) == 1, "coefficient at q^{h - c/24} is " + to_string(chi.coeff(0))});
  r.add_check({"nonnegative_integer_coefficients", chi.nonnegative_integer_coefficients(), "through level " + std::to_string(s.order)});
  r.data["h"] = rational_json(m.conformal_weight(label));
  r.data["offset"] = rational_json(chi.offset());
  Json coeffs = Json::array();
  for (const auto& c : chi.coefficients()) coeffs.push_back(to_string(c));
  r.data["coefficients"] = coeffs;
  return r;
}

Report invariant_verify(const Settings& s, const std::string& row_tag, int p, int q) {
  const auto row = parse_catalog_row(row_tag);
  if (!row) throw DomainError("unknown catalog row '" + row_tag + "'");
  const MinimalModel m(p, q);
  const InvariantMatrix x = build_catalog(m, *row);
  const InvariantReport rep = verify_invariant(x, {.precision = s.precision});
  Report r = start("invariant verify", s, std::make_pair(p, q));
  r.parameters = {{"row", tag(*row)}, {"precision", s.precision}};
  r.add_checks(rep.checks);
  r.data["ade_type"] = ade_type(*row, p, q);
  r.data["method"] = rep.method;
  if (rep.method == "ball") r.data["max_radius"] = rep.max_radius;
  r.data["support"] = matrix_support(x);
  if (*row == CatalogRow::E7_p18 || *row == CatalogRow::E7_q18) {
    try {
      const InvariantMatrix lit = build_catalog(m, *row, E7Reading::Literal);
      r.data["e7_literal_reading_passes"] = verify_invariant(lit, {.precision = s.precision}).all_pass();
    } catch (const ConventionError& e) {
      r.data["e7_literal_reading_passes"] = false;
    }
  }
  return r;
}

Report invariant_classify(const Settings& s, int p, int q, bool& truncated) {
  const MinimalModel m(p, q);
  const ClassifyResult res = classify(m, s.cap, s.precision);
  Report r = start("invariant classify", s, std::make_pair(p, q));
  r.parameters = {{"cap", s.cap}, {"precision", s.precision}};
  Json list = Json::array();
  for (std::size_t k = 0; k < res.invariants.size(); ++k) {
    const auto& x = res.invariants[k];
    Json rows = Json::array();
    for (auto row : applicable_rows(p, q))
      if (build_catalog(m, row) == x) rows.push_back(tag(row));
    list.push_back({{"support", matrix_support(x)}, {"catalog_rows", rows}});
    r.add_check({"invariant_" + std::to_string(k) + "_verified", verify_invariant(x, {.precision = s.precision}).all_pass(),
                 "M1, M2, M3_T and M3_S"});
  }
  r.data["invariants"] = list;
  r.data["commutant_dimension"] = res.commutant_dimension;
  r.data["candidates_examined"] = res.candidates_examined;
  r.data["complete"] = res.complete;
  r.data["completeness_reason"] = res.completeness_reason;
  truncated = !res.complete;
  return r;
}

Report fusion_cmd(const Settings& s, int p, int q, KacLabel a, KacLabel b) {
  const MinimalModel m(p, q);
  Report r = start("fusion", s, std::make_pair(p, q));
  r.parameters = {{"a", label_json(a)}, {"b", label_json(b)}};
  Json targets = Json::array();
  bool agree = true;
  bool bounded = true;
  std::string detail = "window and Verlinde agree on every target";
  for (const auto& c : m.transversal()) {
    const int w = fusion_coeff(m, a, b, c);
    const long v = verlinde_coeff(m, a, b, c);
    bounded = bounded && v <= 1;
    if (w != v && agree) {
      agree = false;
      detail = "mismatch at " + to_string(c) + ": window " + std::to_string(w) + ", Verlinde " + std::to_string(v);
    }
    if (w != 0) targets.push_back(label_json(c));
  }
  r.add_check({"window_equals_verlinde", agree, detail});
  r.add_check({"multiplicity_at_most_one", bounded, "all N in {0,1}"});
  r.data["targets"] = targets;
  return r;
}

Report branching_verify(const Settings& s, int p, int pp) {
  const BranchingInstance inst(p, pp);
  Report r = start("branching verify", s, std::nullopt);
  r.parameters = {{"p", p}, {"pprime", pp}, {"order", s.order}};
  const Rational balance = inst.central_charge_balance();
  r.add_check({"central_charge_balance", balance == -5, "c_{p+p',p} + c_{p',p+p'} - c_{p',p} = " + to_string(balance)});
  const MinimalModel base = inst.base();
  for (const auto& a : base.transversal()) {
    r.add_check(weight_offset_check(inst, a));
    if (a != KacLabel{1, 1}) r.add_check(branching_identity_check(inst, a, {1, 1}, s.order));
  }
  try {
    const PuiseuxSeries u = extract_chi_U(inst, s.order);
    r.add_check({"chi_U", true, "leading exponent 5/24, nonnegative integer coefficients"});
    Json coeffs = Json::array();
    for (const auto& c : u.coefficients()) coeffs.push_back(to_string(c));
    r.data["chi_U"] = {{"offset", rational_json(u.offset())}, {"order", u.order()}, {"coefficients", coeffs}};
  } catch (const ConventionError& e) {
    r.add_check({"chi_U", false, e.what()});
  }
  Json terms = Json::array();
  for (const auto& t : decomposition_list(inst, {1, 1}))
    terms.push_back({{"n", t.n}, {"upper", label_json(t.upper)}, {"lower", label_json(t.lower)}});
  r.data["models"] = {{"upper", {p + pp, p}}, {"lower", {pp, p + pp}}, {"base", {pp, p}}};
  r.data["decomposition_1_1"] = terms;
  return r;
}

Report extension_check(const Settings& s, const std::string& family_tag, int param) {
  const auto family = parse_family(family_tag);
  if (!family) throw DomainError("unknown family '" + family_tag + "'");
  const ExtensionDescriptor desc = family_descriptor(*family, param);
  const MinimalModel& m = desc.model;
  Report r = start("extension check", s, std::make_pair(m.p(), m.q()));
  r.parameters = {{"family", tag(*family)}, {"param", param}, {"order", s.order}};
  r.add_check(check_integrality(desc));
  const PuiseuxSeries chi = extension_character(desc, s.order);
  r.add_check({"character_nonnegative_integers", chi.nonnegative_integer_coefficients(), "through level " + std::to_string(s.order)});
  r.add_check({"unique_vacuum", chi.coeff(0) == 1, "coefficient at q^{-c/24} is " + to_string(chi.coeff(0))});
  try {
    invariant_of_family(desc, {.precision = s.precision});
    r.add_check({"invariant_vacuum_block", true, "catalog " + tag(catalog_row(*family)) + " passes M1-M3 and its vacuum row is the summand set"});
  } catch (const ConventionError& e) {
    r.add_check({"invariant_vacuum_block", false, e.what()});
  }
  Json summands = Json::array();
  for (std::size_t i = 0; i < desc.summands.size(); ++i)
    summands.push_back({{"label", label_json(desc.summands[i])}, {"h", rational_json(desc.weights[i])}});
  r.data["summands"] = summands;
  r.data["ade_type"] = ade_type(catalog_row(*family), m.p(), m.q());
  Json coeffs = Json::array();
  for (const auto& c : chi.coefficients()) coeffs.push_back(to_string(c));
  r.data["character"] = {{"offset", rational_json(chi.offset())}, {"coefficients", coeffs}};
  r.data["uniqueness"] = "uniqueness of the algebra structure is not machine-verified";
  return r;
}

Report suite_regression(const Settings& s) {
  Report r = start("suite regression", s, std::nullopt);
  for (const auto& c : suite::run_all()) {
    r.add_check({"criterion_" + std::to_string(c.id), c.pass, c.title + ": " + c.detail});
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virasoro minimal model modular data toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  auto* order_opt = app.add_option("--order", s.order, "series truncation order")->check(CLI::NonNegativeNumber);
  auto* cap_opt = app.add_option("--cap", s.cap, "classification cap for X_oo")->check(CLI::PositiveNumber);
  auto* prec_opt = app.add_option("--precision", s.precision, "ball precision in bits")->check(CLI::Range(53, 1 << 20));
  auto* format_opt = app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--config", s.config, "key=value file overriding defaults")->check(CLI::ExistingFile);

  std::function<Report()> action;
  bool truncated = false;
  int p = 0, q = 0, a1 = 0, a2 = 0, b1 = 0, b2 = 0;

  auto* model_cmd = app.add_subcommand("model", "model data");
  model_cmd->require_subcommand(1);
  auto* info = model_cmd->add_subcommand("info", "central charge, weights, transversal");
  info->add_option("p", p)->required();
  info->add_option("q", q)->required();
  info->callback([&] { action = [&] { return model_info(s, p, q); }; });

  auto* sm = app.add_subcommand("smatrix", "exact S and T with relation checks");
  sm->add_option("p", p)->required();
  sm->add_option("q", q)->required();
  sm->callback([&] { action = [&] { return smatrix(s, p, q); }; });

  auto* ch = app.add_subcommand("char", "character q-series");
  ch->add_option("p", p)->required();
  ch->add_option("q", q)->required();
  ch->add_option("r", a1)->required();
  ch->add_option("s", a2)->required();
  ch->callback([&] { action = [&] { return char_cmd(s, p, q, a1, a2); }; });

  std::string row_tag;
  auto* inv = app.add_subcommand("invariant", "modular invariants");
  inv->require_subcommand(1);
  auto* verify = inv->add_subcommand("verify", "verify a catalog row");
  verify->add_option("--row", row_tag, "catalog row tag")->required();
  verify->add_option("p", p)->required();
  verify->add_option("q", q)->required();
  verify->callback([&] { action = [&] { return invariant_verify(s, row_tag, p, q); }; });
  auto* cls = inv->add_subcommand("classify", "enumerate invariants in the commutant");
  cls->add_option("p", p)->required();
  cls->add_option("q", q)->required();
  cls->callback([&] { action = [&] { return invariant_classify(s, p, q, truncated); }; });

  auto* fu = app.add_subcommand("fusion", "fusion targets of a x b");
  fu->add_option("p", p)->required();
  fu->add_option("q", q)->required();
  fu->add_option("r1", a1)->required();
  fu->add_option("s1", a2)->required();
  fu->add_option("r2", b1)->required();
  fu->add_option("s2", b2)->required();
  fu->callback([&] { action = [&] { return fusion_cmd(s, p, q, {a1, a2}, {b1, b2}); }; });

  auto* br = app.add_subcommand("branching", "branching decomposition");
  br->require_subcommand(1);
  auto* brv = br->add_subcommand("verify", "check the decomposition identity");
  brv->add_option("p", p)->required();
  brv->add_option("pprime", q)->required();
  brv->callback([&] { action = [&] { return branching_verify(s, p, q); }; });

  std::string family;
  auto* ext = app.add_subcommand("extension", "exceptional extensions");
  ext->require_subcommand(1);
  auto* exc = ext->add_subcommand("check", "integrality, character and invariant of a family member");
  exc->add_option("--family", family)->required()->check(CLI::IsMember({"e6q", "e6r", "e8q", "e8r"}));
  exc->add_option("--param", p, "q for e6q/e8q, p for e6r/e8r")->required();
  exc->callback([&] { action = [&] { return extension_check(s, family, p); }; });

  auto* suite_cmd = app.add_subcommand("suite", "aggregate runs");
  suite_cmd->require_subcommand(1);
  auto* reg = suite_cmd->add_subcommand("regression", "the full acceptance set");
  reg->callback([&] { action = [&] { return suite_regression(s); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e), kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e), kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!s.config.empty()) {
      for (const auto& [key, value] : read_config(s.config)) {
        if (key == "order" && order_opt->count() == 0) s.order = std::stoi(value);
        else if (key == "cap" && cap_opt->count() == 0) s.cap = std::stol(value);
        else if (key == "precision" && prec_opt->count() == 0) s.precision = std::stoi(value);
        else if (key == "format" && format_opt->count() == 0) s.format = value;
        else if (key != "order" && key != "cap" && key != "precision" && key != "format")
          throw DomainError("unknown config key '" + key + "'");
      }
      if (s.format != "text" && s.format != "json") throw DomainError("format must be text or json");
      if (s.precision < 53) throw DomainError("precision must be at least 53 bits");
    }
    const Report report = action();
    if (s.format == "json")
      std::cout << to_json(report).dump(2) << "\n";
    else
      std::cout << render_text(report);
    if (!report.all_pass()) return kExitCheckFailure;
    return truncated ? kExitTruncated : kExitPass;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad config value (" << e.what() << ")\n";
    return kExitUsage;
  } catch (const ConventionError& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
