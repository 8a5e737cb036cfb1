#include "symclass/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "symclass/decider.hpp"
#include "symclass/generate.hpp"
#include "symclass/json_io.hpp"
#include "symclass/parser.hpp"

namespace symclass {

namespace {

using io::Json;

struct RunConfig {
  std::string space = "minkowski";
  std::size_t dim = 1;
  std::string expr;
  std::string file;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultWitnessBudget;
};

Metric metric_of(const std::string& s) { return s == "euclidean" ? Metric::euclidean : Metric::minkowski; }

void add_space(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--space", cfg.space, "minkowski (Lorentz) or euclidean (rotations)")
      ->check(CLI::IsMember({"minkowski", "euclidean"}));
}

void add_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--dim", cfg.dim, "spatial dimension n")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  auto* expr = cmd->add_option("--expr", cfg.expr, "operator expression, e.g. \"dt^2 - dx1^2\"");
  auto* file = cmd->add_option("--file", cfg.file, "file holding an expression or operator JSON");
  expr->excludes(file);
}

void add_format(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "json or human")->check(CLI::IsMember({"json", "human"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Operator from --expr or --file; a file whose first non-blank character is
/// '{' holds operator JSON, anything else is an expression.
std::pair<OperatorSpec, std::string> load_operator(const RunConfig& cfg) {
  std::string text;
  if (!cfg.expr.empty())
    text = cfg.expr;
  else if (!cfg.file.empty())
    text = read_file(cfg.file);
  else
    throw Error("one of --expr or --file is required");
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("malformed operator JSON: ") + e.what());
    }
    OperatorSpec op = io::operator_from_json(j);
    return {op, print_operator(op)};
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return {parse_operator(text, cfg.dim), text};
}

std::string vec_str(const std::vector<Scalar>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out + ")";
}

std::string coeffs_str(const std::vector<Scalar>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out + "]";
}

std::string witness_str(const Witness& w) {
  if (const auto* gw = std::get_if<GroupWitness>(&w))
    return gw->element.label() + " at covector " + vec_str(gw->covector) + ": " + gw->lhs.str() +
           " != " + gw->rhs.str();
  const auto& aw = std::get<AlgebraicWitness>(w);
  return "generator " + aw.generator.name() + " gives nonzero derivative " + aw.derivative.str();
}

void print_human(const ClassificationReport& r, std::ostream& out) {
  const bool mink = r.space == Metric::minkowski;
  out << "space: " << to_string(r.space) << "  n=" << r.n << "  m=" << r.m << '\n';
  if (!r.input.empty()) out << "input: " << r.input << '\n';
  if (r.symbol) out << "symbol: " << r.symbol->str() << '\n';
  out << "translation: " << (r.translation.invariant ? "yes" : "no");
  if (r.translation.witness) {
    const auto& w = *r.translation.witness;
    out << " (coefficient of j=" << w.key.exps[0] << " alpha=" << vec_str({w.key.exps.begin() + 1, w.key.exps.end()})
        << " is " << w.value_at_point.str() << " at " << vec_str(w.point) << " but " << w.value_at_origin.str()
        << " at the origin)";
  }
  out << '\n' << (mink ? "lorentz: " : "rotation: ");
  if (!r.group)
    out << "not checked\n";
  else if (const auto* cf = std::get_if<CanonicalForm>(&*r.group))
    out << "invariant, b = " << coeffs_str(cf->coeffs) << '\n';
  else
    out << "not invariant, witness " << witness_str(std::get<Witness>(*r.group)) << '\n';
  out << "dilation: ";
  if (!r.dilation)
    out << "not checked\n";
  else if (r.dilation->invariant)
    out << "yes (homogeneity degree " << *r.dilation->homogeneity_degree << ")\n";
  else
    out << "no (lambda = " << r.dilation->certificate->scale.get_str() << ", residual "
        << r.dilation->certificate->residual.str() << ")\n";
  out << (mink ? "poincare: " : "euclidean motion: ") << (r.poincare ? "yes" : "no") << '\n';
}

std::size_t parse_index(const std::string& s) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("expected a non-negative integer, got '" + s + "'");
  }
}

Rational parse_parameter(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw Error("expected a rational such as 1/2, got '" + s + "'");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symmetry classification of constant-coefficient differential operators", "symclass"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* classify = app.add_subcommand("classify", "classify an operator by its symmetry group");
  auto* canonicalize = app.add_subcommand("canonicalize", "write an invariant operator as a polynomial in box/Laplacian");
  auto* witness = app.add_subcommand("witness", "find a group element that breaks invariance");
  for (auto* cmd : {classify, canonicalize, witness}) {
    add_space(cmd, cfg);
    add_input(cmd, cfg);
    add_format(cmd, cfg);
    cmd->add_option("--budget", cfg.budget, "witness search budget")->check(CLI::PositiveNumber);
  }

  auto* parse = app.add_subcommand("parse", "echo the lowered operator");
  add_input(parse, cfg);
  add_format(parse, cfg);

  auto* act = app.add_subcommand("act", "apply a group element to a symbol");
  std::string symbol_text;
  std::vector<std::string> boost, rotation, swap, matrix_file;
  std::size_t reflect = 0;
  bool negate_all = false;
  std::string act_format = "human";
  add_space(act, cfg);
  act->add_option("--dim", cfg.dim, "spatial dimension n")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  act->add_option("--symbol", symbol_text, "symbol in tau, xi1..xin")->required();
  auto* o_boost = act->add_option("--boost", boost, "boost axis i and parameter t")->expected(2);
  auto* o_rot = act->add_option("--rotation", rotation, "rotation plane i j and parameter t")->expected(3);
  auto* o_swap = act->add_option("--swap", swap, "swap axes k l")->expected(2);
  auto* o_reflect = act->add_option("--reflect", reflect, "negate axis k (0 = time)");
  auto* o_negate = act->add_flag("--negate-all", negate_all, "apply -I");
  auto* o_matrix = act->add_option("--matrix", matrix_file, "JSON file holding a group element")->expected(1);
  act->add_option("--format", act_format, "json or human")->check(CLI::IsMember({"json", "human"}));
  std::vector<CLI::Option*> element_opts{o_boost, o_rot, o_swap, o_reflect, o_negate, o_matrix};
  for (auto* a : element_opts)
    for (auto* b : element_opts)
      if (a != b) a->excludes(b);

  auto* gen = app.add_subcommand("gen", "emit random invariant or perturbed operators");
  unsigned order = 2;
  std::size_t count = 1;
  std::string kind = "invariant";
  add_space(gen, cfg);
  gen->add_option("--dim", cfg.dim, "spatial dimension n")->check(CLI::Range(std::size_t{1}, std::size_t{6}));
  gen->add_option("--order", order, "operator order m");
  gen->add_option("--count", count, "number of instances");
  gen->add_option("--kind", kind, "invariant, perturbed or variable")
      ->check(CLI::IsMember({"invariant", "perturbed", "variable"}));
  gen->add_option("--seed", cfg.seed, "generator seed");
  add_format(gen, cfg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Metric space = metric_of(cfg.space);
  const bool json = cfg.format == "json";
  try {
    if (classify->parsed()) {
      auto [op, text] = load_operator(cfg);
      ClassificationReport r = classify_operator(op, space, cfg.budget, text);
      if (json)
        out << io::to_json(r).dump(2) << '\n';
      else
        print_human(r, out);
    } else if (canonicalize->parsed()) {
      auto [op, text] = load_operator(cfg);
      ClassificationReport r = classify_operator(op, space, cfg.budget, text);
      Json j{{"input", text}, {"space", to_string(space)}};
      std::string human;
      if (!r.translation.invariant) {
        j["invariant"] = false;
        j["reason"] = "variable coefficients";
        j["translation_witness"] = io::to_json(*r.translation.witness);
        human = "not invariant: variable coefficients";
      } else if (const auto* cf = std::get_if<CanonicalForm>(&*r.group)) {
        j["invariant"] = true;
        j["b"] = io::to_json(*cf)["b"];
        Polynomial in_generator(Layout::spatial, 1);
        for (std::size_t k = 0; k < cf->coeffs.size(); ++k) in_generator.add_term(Monomial(std::vector<unsigned>{unsigned(k)}), cf->coeffs[k]);
        std::string gname = space == Metric::minkowski ? "box" : "lap";
        std::string s = in_generator.str();
        for (std::size_t pos; (pos = s.find("xi1")) != std::string::npos;) s.replace(pos, 3, gname);
        j["canonical"] = s;
        human = "b = " + coeffs_str(cf->coeffs) + "\nL = " + s;
      } else {
        j["invariant"] = false;
        j["witness"] = io::to_json(std::get<Witness>(*r.group));
        human = "not invariant: " + witness_str(std::get<Witness>(*r.group));
      }
      if (json)
        out << j.dump(2) << '\n';
      else
        out << human << '\n';
    } else if (witness->parsed()) {
      auto [op, text] = load_operator(cfg);
      ClassificationReport r = classify_operator(op, space, cfg.budget, text);
      Json j{{"input", text}, {"space", to_string(space)}};
      std::string human;
      if (!r.translation.invariant) {
        j["invariant"] = false;
        j["translation_witness"] = io::to_json(*r.translation.witness);
        human = "translation breaks invariance at " + vec_str(r.translation.witness->point);
      } else if (is_invariant(*r.group)) {
        j["invariant"] = true;
        human = "invariant: no witness exists";
      } else {
        j["invariant"] = false;
        j["witness"] = io::to_json(std::get<Witness>(*r.group));
        human = witness_str(std::get<Witness>(*r.group));
      }
      if (json)
        out << j.dump(2) << '\n';
      else
        out << human << '\n';
    } else if (parse->parsed()) {
      auto [op, text] = load_operator(cfg);
      if (json)
        out << io::to_json(op).dump(2) << '\n';
      else
        out << print_operator(op) << '\n';
    } else if (act->parsed()) {
      Polynomial p = parse_symbol(symbol_text, cfg.dim);
      if (space == Metric::euclidean) p = to_spatial(p);
      const std::size_t n = cfg.dim;
      std::optional<GroupElement> g;
      if (!boost.empty()) {
        if (space != Metric::minkowski) throw Error("--boost needs --space minkowski");
        g = rational_boost(n, parse_index(boost[0]), parse_parameter(boost[1]));
      } else if (!rotation.empty()) {
        GroupElement r = rational_rotation(n, parse_index(rotation[0]), parse_index(rotation[1]),
                                           parse_parameter(rotation[2]));
        g = space == Metric::minkowski
                ? reflection_or_permutation(n, space, reflection::EmbedSpatial{r.matrix()}).relabeled(r.label())
                : r;
      } else if (!swap.empty()) {
        g = reflection_or_permutation(n, space, reflection::SwapAxes{parse_index(swap[0]), parse_index(swap[1])});
      } else if (o_reflect->count()) {
        g = reflection_or_permutation(n, space, reflection::NegateAxis{reflect});
      } else if (negate_all) {
        g = reflection_or_permutation(n, space, reflection::NegateAll{});
      } else if (!matrix_file.empty()) {
        Json j;
        try {
          j = Json::parse(read_file(matrix_file[0]));
        } catch (const nlohmann::json::exception& e) {
          throw Error(std::string("malformed matrix JSON: ") + e.what());
        }
        g = io::element_from_json(j);
      } else {
        throw Error("act needs one of --boost, --rotation, --swap, --reflect, --negate-all, --matrix");
      }
      Polynomial moved = pullback_symbol(p, *g);
      if (act_format == "json")
        out << Json{{"element", io::to_json(*g)}, {"symbol", io::to_json(moved)}}.dump(2) << '\n';
      else
        out << moved.str() << '\n';
    } else if (gen->parsed()) {
      InstanceKind k = kind == "invariant"   ? InstanceKind::invariant
                       : kind == "perturbed" ? InstanceKind::perturbed
                                             : InstanceKind::variable;
      auto ops = gen_instances(cfg.seed, space, cfg.dim, order, count, k);
      if (json) {
        Json arr = Json::array();
        for (const auto& op : ops) arr.push_back(Json{{"expr", print_operator(op)}, {"operator", io::to_json(op)}});
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& op : ops) out << print_operator(op) << '\n';
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace symclass
