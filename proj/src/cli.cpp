#include "reduktor/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reduktor/core.hpp"
#include "reduktor/corpus.hpp"
#include "reduktor/deform.hpp"

namespace reduktor {

// ---- problem-file printing ------------------------------------------------

namespace {

bool paren_in_product(const Expr& e) {
  return e.kind == Expr::Kind::add || e.kind == Expr::Kind::sub ||
         e.kind == Expr::Kind::neg;
}

}  // namespace

std::string expression_to_text(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::variable:
      return e.text;
    case Expr::Kind::add:
      return expression_to_text(e.kids[0]) + " + " +
             expression_to_text(e.kids[1]);
    case Expr::Kind::sub: {
      auto rhs = expression_to_text(e.kids[1]);
      if (paren_in_product(e.kids[1])) rhs = "(" + rhs + ")";
      return expression_to_text(e.kids[0]) + " - " + rhs;
    }
    case Expr::Kind::mul: {
      auto lhs = expression_to_text(e.kids[0]);
      auto rhs = expression_to_text(e.kids[1]);
      if (paren_in_product(e.kids[0])) lhs = "(" + lhs + ")";
      if (paren_in_product(e.kids[1])) rhs = "(" + rhs + ")";
      return lhs + "*" + rhs;
    }
    case Expr::Kind::pow: {
      auto base = expression_to_text(e.kids[0]);
      if (e.kids[0].kind != Expr::Kind::number &&
          e.kids[0].kind != Expr::Kind::variable)
        base = "(" + base + ")";
      return base + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::neg: {
      auto kid = expression_to_text(e.kids[0]);
      if (e.kids[0].kind == Expr::Kind::add ||
          e.kids[0].kind == Expr::Kind::sub)
        kid = "(" + kid + ")";
      return "-" + kid;
    }
  }
  throw internal_error("expression printer: bad node");
}

namespace {

std::string order_to_text(const MonomialOrder& o) {
  switch (o.kind()) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::weight: {
      std::string s = "weight:";
      const auto& w = o.weights();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
      }
      return s;
    }
  }
  return "?";
}

std::string join_texts(const std::vector<Expr>& exprs) {
  std::string s;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    if (i) s += ", ";
    s += expression_to_text(exprs[i]);
  }
  return s;
}

}  // namespace

std::string problem_to_text(const ProblemFile& pf) {
  std::string s = "field " + std::to_string(pf.characteristic) + "\n";
  s += "vars ";
  for (std::size_t i = 0; i < pf.vars.size(); ++i) {
    if (i) s += ", ";
    s += pf.vars[i];
  }
  s += "\n";
  if (pf.order) s += "order " + order_to_text(*pf.order) + "\n";
  if (!pf.ideal.empty()) s += "ideal " + join_texts(pf.ideal) + "\n";
  if (!pf.subideal.empty()) s += "subideal " + join_texts(pf.subideal) + "\n";
  return s;
}

// ---- command implementation -----------------------------------------------

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string method = "matrix";   // rnum
  std::string mode = "symbolic";   // brnum, spectrum
  std::string alpha;               // rq, noether
  std::string order;               // ini
  bool vasconcelos = false;        // ini
  std::string subideal;            // core
  std::string witness;             // core
  int count = 10;                  // corpus
  std::string check = "agreement";
  std::string profile = "mixed";
  int trials = -1;  // -1: command-specific default
  std::uint64_t budget = 1024;
  std::uint64_t seed = 1;
  bool pretty = false;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("REDUKTOR_SEED");
  if (!env || !*env) return 1;
  std::string text(env);
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw error("REDUKTOR_SEED must be an unsigned integer, got '" + text +
                  "'");
    value = value * 10 + (std::uint64_t)(c - '0');
  }
  return value;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<long long> parse_int_list(const std::string& text,
                                      const std::string& what) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string item = text.substr(i, j - i);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t'))
      item.erase(item.begin());
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t'))
      item.pop_back();
    std::size_t k = 0;
    bool negative = false;
    if (k < item.size() && (item[k] == '-' || item[k] == '+')) {
      negative = item[k] == '-';
      ++k;
    }
    if (k == item.size())
      throw error(what + " entries must be integers, got '" + item + "'");
    long long v = 0;
    for (; k < item.size(); ++k) {
      if (item[k] < '0' || item[k] > '9')
        throw error(what + " entries must be integers, got '" + item + "'");
      v = v * 10 + (item[k] - '0');
      if (v > 1000000000000ll) throw error(what + " entry is out of range");
    }
    out.push_back(negative ? -v : v);
    if (j == text.size()) break;
    i = j + 1;
  }
  return out;
}

MonomialOrder order_from_text(const std::string& text) {
  if (text == "lex") return MonomialOrder::lex();
  if (text == "grevlex") return MonomialOrder::grevlex();
  if (text.rfind("weight:", 0) == 0)
    return MonomialOrder::weight(
        parse_int_list(text.substr(7), "weight vector"));
  throw error("unknown order '" + text +
              "', expected lex, grevlex or weight:<ints>");
}

// split a --subideal value on the separating commas; the grammar has no
// other comma use, so plain splitting is exact
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    out.push_back(text.substr(i, j - i));
    if (j == text.size()) break;
    i = j + 1;
  }
  return out;
}

bool scalar_array(const Json& a) {
  for (const auto& v : a)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_table(std::ostream& os, const Json& j, int depth) {
  const std::string pad(2 * (std::size_t)depth, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_table(os, value, depth + 1);
    } else if (value.is_array() && !scalar_array(value)) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        os << pad << "  -\n";
        render_table(os, item, depth + 2);
      }
    } else if (value.is_array()) {
      os << pad << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) os << ", ";
        os << scalar_text(value[i]);
      }
      os << "]\n";
    } else {
      os << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void emit(std::ostream& out, const Options& o, const Json& j) {
  if (o.pretty)
    render_table(out, j, 0);
  else
    out << j.dump() << "\n";
}

Json report_base(const std::string& command, std::uint64_t seed) {
  Json j;
  j["schema"] = "reduktor/1";
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

template <class F>
struct Problem {
  Ring<F> ring;
  Presentation<F> pres;
  std::vector<Polynomial<F>> subideal;
};

template <class F>
Problem<F> realize(const F& field, const ProblemFile& pf) {
  auto ring = make_ring(field, pf.vars);
  const auto order = MonomialOrder::grevlex();
  auto pres = validate_presentation(ring, eval_exprs(ring, pf.ideal, order));
  return Problem<F>{ring, std::move(pres),
                    eval_exprs(ring, pf.subideal, order)};
}

template <class F>
Json poly_list(const Ring<F>& ring, const std::vector<Polynomial<F>>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(poly_to_string(ring, g));
  return a;
}

// canonical form for reporting: reduced basis under grevlex, sorted strings
template <class F>
Json ideal_strings(const Ring<F>& ring, const Ideal<F>& ideal) {
  std::vector<std::string> v;
  for (const auto& g : ideal.groebner(MonomialOrder::grevlex()))
    v.push_back(poly_to_string(ring, g));
  std::sort(v.begin(), v.end());
  return Json(v);
}

template <class F>
Json inputs_json(const ProblemFile& pf, const Problem<F>& prob,
                 const std::string& path) {
  Json j;
  j["file"] = path;
  j["field"] = pf.characteristic;
  j["vars"] = pf.vars;
  j["ideal"] = poly_list(prob.ring, prob.pres.ideal().generators());
  if (!prob.subideal.empty())
    j["subideal"] = poly_list(prob.ring, prob.subideal);
  if (pf.order) j["order"] = order_to_text(*pf.order);
  return j;
}

template <class F>
ReductionParams<F> alpha_params(const Ring<F>& ring, std::size_t d,
                                const std::string& text) {
  auto ints = parse_int_list(text, "--alpha");
  if (ints.size() != d * ring.nvars())
    throw error("--alpha needs " + std::to_string(d * ring.nvars()) +
                " entries (" + std::to_string(d) + " rows of " +
                std::to_string(ring.nvars()) + "), got " +
                std::to_string(ints.size()));
  ReductionParams<F> p{d, ring.nvars(), {}, 0};
  for (long long v : ints) p.entries.push_back(ring.field.from_int(v));
  return p;
}

int int_or_default(int value, int fallback) {
  return value < 0 ? fallback : value;
}

// ---- per-command runners --------------------------------------------------

template <class F>
int run_rnum(const Problem<F>& prob, const Options& o, Json& results,
             std::vector<std::string>& warnings) {
  const int trials = int_or_default(o.trials, 2);
  std::optional<int> r_matrix, r_subst;
  if (o.method == "matrix" || o.method == "both") {
    auto rep = generic_reduction_number(prob.pres, trials, o.seed);
    r_matrix = *rep.r_value;
    results["r"] = *rep.r_value;
    results["witness_degree"] = rep.witness_degree;
    results["trials"] = trials;
    if (rep.trials_disagree)
      warnings.push_back(
          "sampled form sets disagreed; the minimum over trials is "
          "reported");
  }
  if (o.method == "subst" || o.method == "both") {
    r_subst = reduction_number_by_substitution(
        prob.pres, detail::mix_seed(o.seed, 0x50b57ULL));
    if (!results.contains("r")) results["r"] = *r_subst;
  }
  results["method"] = o.method;
  if (o.method == "both") {
    results["r_matrix"] = *r_matrix;
    results["r_subst"] = *r_subst;
    const bool agree = *r_matrix == *r_subst;
    results["agree"] = agree;
    if (!agree) {
      warnings.push_back("matrix and substitution methods disagree");
      return 1;
    }
  }
  return 0;
}

template <class F>
int run_rq(const Problem<F>& prob, const Options& o, Json& results,
           std::vector<std::string>& warnings) {
  const auto d = (std::size_t)prob.pres.dim();
  auto params = alpha_params(prob.ring, d, o.alpha);
  auto rep = reduction_number_of(prob.pres, params);
  results["is_reduction"] = rep.is_reduction;
  if (rep.is_reduction) {
    results["r"] = *rep.r_value;
    results["witness_degree"] = rep.witness_degree;
  } else {
    results["r"] = nullptr;
    if (rep.residual_dimension >= 0)
      results["residual_dimension"] = rep.residual_dimension;
    warnings.push_back("the given forms are not a reduction");
  }
  return 0;
}

template <class F>
int run_noether(const Problem<F>& prob, const Options& o, Json& results,
                std::vector<std::string>& warnings) {
  const auto d = (std::size_t)prob.pres.dim();
  auto params = alpha_params(prob.ring, d, o.alpha);
  auto rep = reduction_number_of(prob.pres, params);
  results["noether"] = rep.is_reduction;
  results["dimension"] = prob.pres.dim();
  if (rep.is_reduction) {
    results["r"] = *rep.r_value;
  } else if (rep.residual_dimension >= 0) {
    results["residual_dimension"] = rep.residual_dimension;
    warnings.push_back(
        "the forms do not generate a Noether normalization of the "
        "quotient");
  }
  return 0;
}

template <class F>
int run_brnum(const Problem<F>& prob, const Options& o, Json& results,
              std::vector<std::string>& warnings) {
  results["mode"] = o.mode;
  if (o.mode == "symbolic") {
    results["br"] = big_reduction_number_symbolic(prob.pres);
  } else {
    results["br"] = big_reduction_number_sampled(
        prob.pres, SampledSpectrumOptions{o.budget, o.seed, {}});
    warnings.push_back(
        "sampled mode reports a lower bound of the big reduction number");
  }
  return 0;
}

template <class F>
int run_spectrum(const Problem<F>& prob, const Options& o, Json& results,
                 std::vector<std::string>& warnings) {
  SpectrumReport rep;
  if (o.mode == "symbolic") {
    try {
      rep = reduction_spectrum_symbolic(prob.pres, {});
    } catch (const resource_error& e) {
      throw resource_error(e.budget(),
                           std::string(e.what()) +
                               " (the sampled mode may still apply: "
                               "--mode sampled)");
    }
  } else {
    rep = reduction_spectrum_sampled(prob.pres,
                                     SampledSpectrumOptions{o.budget, o.seed,
                                                            {}});
    warnings.push_back(
        "sampled mode: the spectrum is a subset and br a lower bound");
  }
  results["spectrum"] = Json(rep.values);
  if (!rep.values.empty()) {
    results["r"] = *rep.values.begin();
    results["br"] = *rep.values.rbegin();
  } else {
    warnings.push_back("no reductions found within the budget");
  }
  results["mode"] = rep.mode;
  results["exact"] = rep.exact;
  if (rep.stabilized_at >= 0) results["stabilized_at"] = rep.stabilized_at;
  if (rep.patterns > 0) results["patterns"] = rep.patterns;
  return 0;
}

template <class F>
int run_ini(const ProblemFile& pf, const Problem<F>& prob, const Options& o,
            Json& results, std::vector<std::string>& warnings) {
  MonomialOrder ord = MonomialOrder::grevlex();
  if (!o.order.empty())
    ord = order_from_text(o.order);
  else if (pf.order)
    ord = *pf.order;
  if (ord.kind() == OrderKind::weight &&
      ord.weights().size() != prob.ring.nvars())
    throw error("weight vector length does not match the variable count");
  const int trials = int_or_default(o.trials, 2);

  Ideal<F> initial =
      ord.kind() == OrderKind::weight
          ? weight_initial_ideal(prob.pres.ideal(), ord.weights())
          : initial_ideal(prob.pres.ideal(), ord);
  results["order"] = order_to_text(ord);
  results["initial"] = ideal_strings(prob.ring, initial);
  int code = 0;
  if (o.vasconcelos) {
    auto v = ord.kind() == OrderKind::weight
                 ? vasconcelos_check(prob.pres, ord.weights(), trials, o.seed)
                 : vasconcelos_check(prob.pres, ord, trials, o.seed);
    Json vj;
    vj["r_source"] = v.r_source;
    vj["r_initial"] = v.r_initial;
    vj["holds"] = v.holds;
    vj["trials_used"] = v.trials_used;
    vj["retried"] = v.retried;
    results["vasconcelos"] = vj;
    if (!v.holds) {
      warnings.push_back(
          "reduction number of the source exceeds the degeneration; "
          "property violation");
      code = 1;
    }
  }
  return code;
}

template <class F>
int run_gin(const Problem<F>& prob, const Options& o, Json& results,
            std::vector<std::string>&) {
  auto rep = generic_initial_ideal(prob.pres.ideal(), o.seed);
  results["gin"] = ideal_strings(prob.ring, rep.gin);
  results["attempts"] = rep.attempts;
  return 0;
}

template <class F>
int run_core(const ProblemFile& pf, const Problem<F>& prob, const Options& o,
             Json& results, std::vector<std::string>& warnings) {
  std::vector<Polynomial<F>> sub = prob.subideal;
  if (!o.subideal.empty()) {
    sub.clear();
    for (const auto& piece : split_list(o.subideal))
      sub.push_back(eval_expr(prob.ring, parse_expression(piece, pf.vars),
                              MonomialOrder::grevlex()));
  }
  if (sub.empty())
    throw error(
        "core needs generators of the subideal (file directive 'subideal' "
        "or --subideal)");
  auto q = make_quotient_ideal(prob.pres, sub);
  auto t = testing_ideal(q);
  const int trials = int_or_default(o.trials, 12);
  auto rep = core_sandwich(t, trials, o.seed);

  results["spread"] = t.spread;
  results["big_reduction"] = t.big_reduction;
  results["generator_degree"] = q.degree;
  results["fiber_kernel"] = ideal_strings(t.fiber.ring(), t.fiber.ideal());
  results["testing_ideal"] = ideal_strings(t.uring, t.minors);
  results["power"] = ideal_strings(prob.ring, rep.power);
  results["middle"] = ideal_strings(prob.ring, rep.middle);
  results["sampled_core"] = ideal_strings(prob.ring, rep.sampled);
  results["power_in_middle"] = rep.power_in_middle;
  results["middle_in_sampled"] = rep.middle_in_sampled;
  results["middle_equals_sampled"] = rep.middle_equals_sampled;
  results["stabilized"] = rep.stabilized;
  results["reductions_used"] = rep.reductions_used;
  results["patterns_tried"] = rep.patterns_tried;
  if (!rep.stabilized)
    warnings.push_back(
        "sampled core did not stabilize within the trial budget; treat it "
        "as an inconclusive upper bound");
  if (!rep.middle_equals_sampled)
    warnings.push_back(
        "bounds differ; the core lies between middle and sampled_core");

  if (!o.witness.empty()) {
    auto f = eval_expr(prob.ring, parse_expression(o.witness, pf.vars),
                       MonomialOrder::grevlex());
    auto w = generic_contraction_witness(t, f);
    Json wj;
    wj["element"] = poly_to_string(prob.ring, f);
    wj["member"] = w.member;
    wj["certificate"] =
        w.certificate ? Json(poly_to_string(t.uring, *w.certificate))
                      : Json(nullptr);
    results["witness"] = wj;
  }
  return 0;
}

// ---- corpus ---------------------------------------------------------------

struct InstanceOutcome {
  Json row;
  int violations = 0;
  std::exception_ptr failure;
};

template <class F>
InstanceOutcome check_corpus_instance(const CorpusInstance<F>& inst,
                                      std::size_t index, const Options& o,
                                      int trials) {
  InstanceOutcome out;
  const auto& pres = inst.presentation;
  const auto& ring = pres.ring();
  Json row;
  row["index"] = index;
  row["profile"] = corpus_profile_name(inst.profile);
  row["vars"] = ring.nvars();
  row["ideal"] = poly_list(ring, pres.ideal().generators());
  if (inst.expected_codim >= 0) {
    const bool codim_ok =
        pres.dim() == (int)ring.nvars() - inst.expected_codim;
    row["codim_ok"] = codim_ok;
    if (!codim_ok) ++out.violations;
  }
  if (o.check == "agreement") {
    auto rep = generic_reduction_number(pres, trials,
                                        detail::mix_seed(inst.seed, 0xa9eeULL));
    int rs = reduction_number_by_substitution(
        pres, detail::mix_seed(inst.seed, 0x5b57ULL));
    row["r_matrix"] = *rep.r_value;
    row["r_subst"] = rs;
    const bool agree = *rep.r_value == rs;
    row["agree"] = agree;
    if (!agree) ++out.violations;
  } else {
    Json checks = Json::array();
    auto record = [&](const std::string& label, const VasconcelosReport& v) {
      Json cj;
      cj["order"] = label;
      cj["r_source"] = v.r_source;
      cj["r_initial"] = v.r_initial;
      cj["holds"] = v.holds;
      if (v.retried) cj["retried"] = true;
      checks.push_back(cj);
      if (!v.holds) ++out.violations;
    };
    record("lex", vasconcelos_check(pres, MonomialOrder::lex(), trials,
                                    detail::mix_seed(inst.seed, 1)));
    record("grevlex", vasconcelos_check(pres, MonomialOrder::grevlex(),
                                        trials,
                                        detail::mix_seed(inst.seed, 2)));
    SeededRng wrng(detail::mix_seed(inst.seed, 0x17a0ULL));
    for (int k = 0; k < 2; ++k) {
      std::vector<long long> lambda;
      for (std::size_t v = 0; v < ring.nvars(); ++v)
        lambda.push_back((long long)wrng.below(5));
      record("weight:" + [&] {
               std::string s;
               for (std::size_t v = 0; v < lambda.size(); ++v) {
                 if (v) s += ",";
                 s += std::to_string(lambda[v]);
               }
               return s;
             }(),
             vasconcelos_check(pres, lambda, trials,
                               detail::mix_seed(inst.seed, 3 + (std::uint64_t)k)));
    }
    row["checks"] = checks;
  }
  out.row = std::move(row);
  return out;
}

int run_corpus(const Options& o, std::ostream& out) {
  auto profile = corpus_profile_from(o.profile);
  if (!profile)
    throw error("unknown profile '" + o.profile +
                "', expected monomial, binomial, dense, "
                "complete-intersection or mixed");
  if (o.check != "agreement" && o.check != "vasconcelos")
    throw error("unknown check '" + o.check +
                "', expected agreement or vasconcelos");
  const int trials = int_or_default(o.trials, 2);
  auto instances = generate_corpus(PrimeField(), o.count, o.seed, *profile);

  std::vector<InstanceOutcome> outcomes(instances.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        outcomes[i] = check_corpus_instance(instances[i], i, o, trials);
      } catch (...) {
        outcomes[i].failure = std::current_exception();
      }
    }
  };
  std::size_t threads = std::min<std::size_t>(4, instances.size());
  if (threads > 1) {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  } else {
    worker();
  }
  for (auto& oc : outcomes)
    if (oc.failure) std::rethrow_exception(oc.failure);

  int violations = 0;
  Json rows = Json::array();
  for (auto& oc : outcomes) {
    violations += oc.violations;
    rows.push_back(std::move(oc.row));
  }
  Json j = report_base("corpus", o.seed);
  Json results;
  results["count"] = o.count;
  results["profile"] = o.profile;
  results["check"] = o.check;
  results["violations"] = violations;
  results["instances"] = std::move(rows);
  j["results"] = std::move(results);
  j["warnings"] = Json::array();
  emit(out, o, j);
  return violations > 0 ? 1 : 0;
}

// ---- dispatch ---------------------------------------------------------

template <class F>
int run_problem_command(const F& field, const std::string& command,
                        const ProblemFile& pf, const Options& o,
                        std::ostream& out) {
  auto prob = realize(field, pf);
  Json j = report_base(command, o.seed);
  j["inputs"] = inputs_json(pf, prob, o.file);
  Json results;
  std::vector<std::string> warnings;
  if (pf.rational)
    warnings.push_back(
        "rational arithmetic is exact but much slower than a prime field");

  int code = 0;
  if (command == "rnum")
    code = run_rnum(prob, o, results, warnings);
  else if (command == "rq")
    code = run_rq(prob, o, results, warnings);
  else if (command == "noether")
    code = run_noether(prob, o, results, warnings);
  else if (command == "brnum")
    code = run_brnum(prob, o, results, warnings);
  else if (command == "spectrum")
    code = run_spectrum(prob, o, results, warnings);
  else if (command == "ini")
    code = run_ini(pf, prob, o, results, warnings);
  else if (command == "gin")
    code = run_gin(prob, o, results, warnings);
  else if (command == "core")
    code = run_core(pf, prob, o, results, warnings);
  else
    throw internal_error("unrouted command " + command);

  j["results"] = std::move(results);
  j["warnings"] = Json(warnings);
  emit(out, o, j);
  return code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  std::string command;
  try {
    Options o;
    o.seed = default_seed();

    CLI::App app{"reduction numbers of standard graded quotient rings"};
    app.name("reduktor");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_trials) {
      sub->add_option("--seed", o.seed,
                      "random seed (default: REDUKTOR_SEED or 1)");
      sub->add_flag("--pretty", o.pretty,
                    "human-readable table instead of JSON");
      if (with_trials)
        sub->add_option("--trials", o.trials,
                        "independent random draws for generic values");
    };
    auto add_file = [&](CLI::App* sub) {
      sub->add_option("file", o.file, "problem file ('-' reads stdin)")
          ->required();
    };

    auto* rnum = app.add_subcommand(
        "rnum", "generic reduction number of the quotient");
    add_file(rnum);
    add_common(rnum, true);
    rnum->add_option("--method", o.method, "matrix, subst or both")
        ->check(CLI::IsMember({"matrix", "subst", "both"}));

    auto* rq = app.add_subcommand(
        "rq", "reduction number of explicitly given forms");
    add_file(rq);
    add_common(rq, false);
    rq->add_option("--alpha", o.alpha,
                   "row-major integer matrix of form coefficients")
        ->required();

    auto* noe = app.add_subcommand(
        "noether", "test forms for Noether normalization of the quotient");
    add_file(noe);
    add_common(noe, false);
    noe->add_option("--alpha", o.alpha,
                    "row-major integer matrix of form coefficients")
        ->required();

    auto* brnum = app.add_subcommand("brnum", "big reduction number");
    add_file(brnum);
    add_common(brnum, false);
    brnum->add_option("--mode", o.mode, "symbolic (exact) or sampled")
        ->check(CLI::IsMember({"symbolic", "sampled"}));
    brnum->add_option("--budget", o.budget, "sampled mode: patterns to try");

    auto* spectrum = app.add_subcommand(
        "spectrum", "all reduction numbers over the minimal reductions");
    add_file(spectrum);
    add_common(spectrum, false);
    spectrum->add_option("--mode", o.mode, "symbolic (exact) or sampled")
        ->check(CLI::IsMember({"symbolic", "sampled"}));
    spectrum->add_option("--budget", o.budget,
                         "sampled mode: patterns to try");

    auto* ini = app.add_subcommand(
        "ini", "initial ideal under a term order or weight vector");
    add_file(ini);
    add_common(ini, true);
    ini->add_option("--order", o.order, "lex, grevlex or weight:<ints>");
    ini->add_flag("--vasconcelos", o.vasconcelos,
                  "compare reduction numbers before and after degeneration");

    auto* gin = app.add_subcommand(
        "gin", "generic initial ideal under reverse lex");
    add_file(gin);
    add_common(gin, false);

    auto* core = app.add_subcommand(
        "core", "testing ideal and core bounds of a subideal");
    add_file(core);
    add_common(core, true);
    core->add_option("--subideal", o.subideal,
                     "comma-separated generators (overrides the file)");
    core->add_option("--witness", o.witness,
                     "element to test against the generic reduction");

    auto* corpus = app.add_subcommand(
        "corpus", "random instances checked against the theory");
    add_common(corpus, true);
    corpus->add_option("--count", o.count, "number of instances")
        ->check(CLI::NonNegativeNumber);
    corpus->add_option("--check", o.check, "agreement or vasconcelos");
    corpus->add_option("--profile", o.profile,
                       "monomial, binomial, dense, complete-intersection or "
                       "mixed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int cli_code = app.exit(e, out, err);
      return cli_code == 0 ? 0 : 2;
    }
    command = app.get_subcommands().front()->get_name();

    int code = 0;
    if (command == "corpus") {
      code = run_corpus(o, out);
    } else {
      auto pf = parse_problem(read_input(o.file));
      if (pf.rational)
        code = run_problem_command(RationalField{}, command, pf, o, out);
      else
        code = run_problem_command(PrimeField(pf.characteristic), command, pf,
                                   o, out);
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    err << "# " << command << " finished in " << ms << " ms\n";
    return code;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    err << "budget exhausted (" << e.budget() << "): " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace reduktor
