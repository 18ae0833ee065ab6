#include "oplus/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oplus/classify.hpp"
#include "oplus/exact.hpp"
#include "oplus/format.hpp"
#include "oplus/grouplaw.hpp"
#include "oplus/pell.hpp"
#include "oplus/quadext.hpp"

namespace oplus::cli {

namespace {

using nlohmann::json;

constexpr long long kDefaultMordellBound = 100000;

struct Output {
  json doc;
  std::string text;
  void line(const std::string& s) { text += s + "\n"; }
};

void emit(const Output& output, bool machine, std::ostream& out) {
  if (machine)
    out << output.doc.dump(2) << "\n";
  else
    out << output.text;
}

std::string field_name(const std::optional<Int>& radicand) {
  if (!radicand) return "Q";
  return "Q(sqrt(" + radicand->get_str() + "))";
}

template <typename C>
json law_json(const GroupLaw<C>& law, const std::string& field) {
  json entry;
  entry["field"] = field;
  if (law.is_affine()) {
    entry["kind"] = "affine";
    entry["c"] = to_string(law.shift());
  } else {
    entry["kind"] = "bilinear";
    entry["a"] = to_string(law.scale());
    entry["b"] = to_string(law.offset());
    entry["c"] = to_string(law.constant_term());
  }
  entry["polynomial"] = polynomial_string(law);
  entry["identity"] = to_string(law.identity());
  if (auto annihilator = law.annihilator())
    entry["annihilator"] = to_string(*annihilator);
  else
    entry["annihilator"] = nullptr;
  return entry;
}

template <typename C>
void law_text(Output& output, const GroupLaw<C>& law, const std::string& field,
              size_t index) {
  std::string kind = law.is_affine() ? "affine" : "bilinear";
  output.line("law " + std::to_string(index) + ": " + kind + " over " + field +
              ": " + polynomial_string(law));
  output.line("  identity = " + to_string(law.identity()));
  if (auto annihilator = law.annihilator())
    output.line("  annihilator = " + to_string(*annihilator));
}

Output render_solve(const Rational& u, const Rational& v, bool bilinear_only) {
  ConstraintPair pair{u, v};
  SolveResult solved = solve(pair);
  bool truth = is_true_over_q(pair, bilinear_only);
  std::string field = field_name(solved.field_radicand);

  Output output;
  output.line("(u, v) = (" + to_string(u) + ", " + to_string(v) + ")");
  output.line("discriminant = " + to_string(solved.discriminant));
  output.line(std::string("true over Q") + (bilinear_only ? " (bilinear)" : "") +
              ": " + (truth ? "yes" : "no"));
  if (solved.field_radicand)
    output.line("true over " + field + ": yes");

  json laws = json::array();
  size_t index = 1;
  for (const RationalLaw& law : solved.rational_laws) {
    laws.push_back(law_json(law, "Q"));
    law_text(output, law, "Q", index++);
  }
  for (const QuadLaw& law : solved.quadratic_laws) {
    laws.push_back(law_json(law, field));
    law_text(output, law, field, index++);
  }
  if (index == 1) output.line("no group law satisfies the constraints");

  output.doc = {
      {"command", "solve"},
      {"inputs", {{"u", to_string(u)}, {"v", to_string(v)}, {"bilinear_only", bilinear_only}}},
      {"result",
       {{"discriminant", to_string(solved.discriminant)},
        {"field_radicand",
         solved.field_radicand ? json(solved.field_radicand->get_str()) : json(nullptr)},
        {"true_over_Q", truth},
        {"laws", laws}}}};
  return output;
}

Output render_classify(const Int& u, const Int& v) {
  classify::Classification verdict = classify::classify(u, v);

  Output output;
  output.line("(u, v) = (" + u.get_str() + ", " + v.get_str() + ")");
  output.line("case = " + classify::case_name(verdict.case_));
  output.line(std::string("true over Q (bilinear): ") + (verdict.truth ? "yes" : "no"));

  json witness(nullptr);
  if (verdict.witness) {
    witness = json::object();
    std::string parts;
    auto add = [&](const char* name, const Int& value) {
      witness[name] = value.get_str();
      parts += std::string(parts.empty() ? "" : ", ") + name + " = " + value.get_str();
    };
    if (verdict.witness->n) add("n", *verdict.witness->n);
    if (verdict.witness->m) add("m", Int(*verdict.witness->m));
    if (verdict.witness->t) add("t", *verdict.witness->t);
    if (verdict.witness->d) add("d", *verdict.witness->d);
    if (!verdict.witness->law_coeffs.empty()) {
      json coeffs = json::array();
      std::string rendered;
      for (const auto& [a, b] : verdict.witness->law_coeffs) {
        coeffs.push_back({to_string(a), to_string(b)});
        rendered += (rendered.empty() ? "" : ", ") + ("(" + to_string(a) + ", " + to_string(b) + ")");
      }
      witness["law_coefficients"] = coeffs;
      parts += std::string(parts.empty() ? "" : ", ") + "(a, b) in {" + rendered + "}";
    }
    if (!parts.empty()) output.line("witness: " + parts);
  }

  output.doc = {{"command", "classify"},
                {"inputs", {{"u", u.get_str()}, {"v", v.get_str()}}},
                {"result",
                 {{"case", classify::case_name(verdict.case_)},
                  {"true_over_Q", verdict.truth},
                  {"witness", witness}}}};
  return output;
}

Output render_enumerate(const Int& n, bool include_negative) {
  auto pairs = classify::enumerate_uv_for_n(n, include_negative);
  Int target = (n * n - 1) / 4;
  Int count = classify::sigma0(target);

  Output output;
  output.line("(u, v) with (u-1)(v-2) = " + target.get_str() + ":");
  json list = json::array();
  for (const auto& [u, v] : pairs) {
    output.line("  (" + u.get_str() + ", " + v.get_str() + ")");
    list.push_back({u.get_str(), v.get_str()});
  }
  output.line("count = sigma0(" + target.get_str() + ") = " + count.get_str());

  output.doc = {{"command", "enumerate"},
                {"inputs",
                 {{"n", n.get_str()}, {"include_negative_divisors", include_negative}}},
                {"result",
                 {{"target", target.get_str()},
                  {"pairs", list},
                  {"sigma0", count.get_str()},
                  {"count", pairs.size()}}}};
  return output;
}

std::string pell_identity_line(const pell::PellTriple& triple) {
  return triple.x.get_str() + "^2 - " + triple.N.get_str() + "*" +
         triple.y.get_str() + "^2 = " + triple.m.get_str();
}

Output render_pell(const Int& modulus) {
  pell::PellTriple fundamental = pell::chakravala(modulus);
  Output output;
  output.line(pell_identity_line(fundamental));
  output.doc = {{"command", "pell"},
                {"inputs", {{"N", modulus.get_str()}}},
                {"result", {{"x", fundamental.x.get_str()}, {"y", fundamental.y.get_str()}}}};
  return output;
}

Output render_chakravala_trace(const Int& modulus) {
  pell::ChakravalaTrace trace = pell::chakravala_trace(modulus);
  Output output;
  output.line("chakravala steps for N = " + modulus.get_str() +
              " (state a^2 - N*b^2 = k, scaling x):");
  json steps = json::array();
  size_t index = 1;
  for (const auto& step : trace.steps) {
    output.line("  step " + std::to_string(index++) + ": a = " + step.a.get_str() +
                ", b = " + step.b.get_str() + ", k = " + step.k.get_str() +
                (step.x == 0 ? std::string(", compose with itself")
                             : ", x = " + step.x.get_str()));
    steps.push_back({{"a", step.a.get_str()},
                     {"b", step.b.get_str()},
                     {"k", step.k.get_str()},
                     {"x", step.x.get_str()}});
  }
  output.line("result: " + pell_identity_line(trace.result));
  output.doc = {{"command", "chakravala-trace"},
                {"inputs", {{"N", modulus.get_str()}}},
                {"result",
                 {{"steps", steps},
                  {"x", trace.result.x.get_str()},
                  {"y", trace.result.y.get_str()}}}};
  return output;
}

Output render_mordell(const Int& k, long long bound) {
  classify::MordellSolutionSet found = classify::mordell_search(k, bound);
  Output output;
  std::string rhs;
  if (k > 0) rhs = " + " + k.get_str();
  if (k < 0) rhs = " - " + Int(-k).get_str();
  output.line("integral points of y^2 = x^3" + rhs +
              " with |x| <= " + std::to_string(bound) + ":");
  json list = json::array();
  for (const auto& [x, y] : found.solutions) {
    output.line("  (" + x.get_str() + ", " + y.get_str() + ")");
    list.push_back({x.get_str(), y.get_str()});
  }
  output.line("count = " + std::to_string(found.solutions.size()));
  output.doc = {{"command", "mordell"},
                {"inputs", {{"k", k.get_str()}, {"bound", bound}}},
                {"result", {{"solutions", list}, {"count", found.solutions.size()}}}};
  return output;
}

Output render_rn(long long t_max) {
  auto solutions = classify::ramanujan_nagell_search(t_max);
  Output output;
  output.line("solutions of n^2 + 7 = 2^t with 3 <= t <= " + std::to_string(t_max) + ":");
  json list = json::array();
  for (const auto& [n, t] : solutions) {
    output.line("  (n, t) = (" + n.get_str() + ", " + t.get_str() + ")");
    list.push_back({n.get_str(), t.get_str()});
  }
  output.line("count = " + std::to_string(solutions.size()));
  output.doc = {{"command", "rn"},
                {"inputs", {{"t_max", t_max}}},
                {"result", {{"solutions", list}, {"count", solutions.size()}}}};
  return output;
}

Output render_tseq(const Int& d, long long m_max) {
  Output output;
  output.line("solutions of n^2 - " + Int(8 * d).get_str() + "*t^2 = 1 (d = " +
              d.get_str() + "):");
  json list = json::array();
  for (long long m = 1; m <= m_max; ++m) {
    pell::SequenceTerm term = pell::t_sequence(d, static_cast<unsigned long>(m));
    output.line("  m = " + std::to_string(m) + ": t = " + term.t.get_str() +
                ", n = " + term.n.get_str());
    list.push_back({{"m", m}, {"t", term.t.get_str()}, {"n", term.n.get_str()}});
  }
  output.doc = {{"command", "tseq"},
                {"inputs", {{"d", d.get_str()}, {"m_max", m_max}}},
                {"result", {{"terms", list}}}};
  return output;
}

long long parse_small_int(const std::string& text) {
  Int value = parse_int(text);
  if (!value.fits_slong_p())
    throw std::invalid_argument("argument out of range: '" + text + "'");
  return value.get_si();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"polynomial commutative group laws with prescribed 1(+)1 and 2(+)2"};
  app.name("oplus");

  bool machine = false;
  bool bilinear_only = false;
  bool include_negative = false;
  long long bound = kDefaultMordellBound;
  app.add_flag("--json", machine, "machine-readable output (exact values as strings)");
  app.add_flag("--bilinear-only", bilinear_only,
               "count only bilinear laws towards truth over Q");
  app.add_flag("--include-negative-divisors", include_negative,
               "enumerate: include negative-divisor pairs");
  app.add_option("--bound", bound, "mordell: half-width of the x search range");
  app.require_subcommand(1);

  std::string arg_u, arg_v, arg_n, arg_modulus, arg_k, arg_tmax, arg_d, arg_mmax;

  CLI::App* cmd_solve = app.add_subcommand("solve", "all group laws with 1(+)1=u, 2(+)2=v");
  cmd_solve->add_option("u", arg_u, "rational target of 1(+)1")->required();
  cmd_solve->add_option("v", arg_v, "rational target of 2(+)2")->required();

  CLI::App* cmd_classify = app.add_subcommand("classify", "theorem-based truth classification");
  cmd_classify->add_option("u", arg_u, "integer target of 1(+)1")->required();
  cmd_classify->add_option("v", arg_v, "integer target of 2(+)2")->required();

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "all (u,v) with discriminant n^2 for odd n");
  cmd_enumerate->add_option("n", arg_n, "odd integer >= 3")->required();

  CLI::App* cmd_pell = app.add_subcommand("pell", "fundamental solution of x^2 - N*y^2 = 1");
  cmd_pell->add_option("N", arg_modulus, "positive nonsquare integer")->required();

  CLI::App* cmd_trace =
      app.add_subcommand("chakravala-trace", "pell with every (a,b,k,x) step printed");
  cmd_trace->add_option("N", arg_modulus, "positive nonsquare integer")->required();

  CLI::App* cmd_mordell = app.add_subcommand("mordell", "integral points of y^2 = x^3 + k");
  cmd_mordell->add_option("k", arg_k, "integer constant")->required();

  CLI::App* cmd_rn = app.add_subcommand("rn", "solutions of n^2 + 7 = 2^t up to t_max");
  cmd_rn->add_option("t_max", arg_tmax, "upper bound on t (>= 3)")->required();

  CLI::App* cmd_tseq = app.add_subcommand("tseq", "the (t_m, n_m) solution sequence of n^2 - 8d*t^2 = 1");
  cmd_tseq->add_option("d", arg_d, "positive odd squarefree integer")->required();
  cmd_tseq->add_option("m_max", arg_mmax, "last index to print")->required();

  for (CLI::App* sub : {cmd_solve, cmd_classify, cmd_enumerate, cmd_pell, cmd_trace,
                        cmd_mordell, cmd_rn, cmd_tseq})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Output output;
    if (*cmd_solve)
      output = render_solve(parse_rational(arg_u), parse_rational(arg_v), bilinear_only);
    else if (*cmd_classify)
      output = render_classify(parse_int(arg_u), parse_int(arg_v));
    else if (*cmd_enumerate)
      output = render_enumerate(parse_int(arg_n), include_negative);
    else if (*cmd_pell)
      output = render_pell(parse_int(arg_modulus));
    else if (*cmd_trace)
      output = render_chakravala_trace(parse_int(arg_modulus));
    else if (*cmd_mordell)
      output = render_mordell(parse_int(arg_k), bound);
    else if (*cmd_rn)
      output = render_rn(parse_small_int(arg_tmax));
    else if (*cmd_tseq)
      output = render_tseq(parse_int(arg_d), parse_small_int(arg_mmax));
    emit(output, machine, out);
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace oplus::cli
