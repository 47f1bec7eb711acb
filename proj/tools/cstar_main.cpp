// cstar: command-line front end for the transform, its oracles and the
// iteration driver.
#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cstar/corpus.hpp"
#include "cstar/errors.hpp"
#include "cstar/problem_io.hpp"
#include "cstar/verifier.hpp"

namespace {

using namespace cstar;

constexpr int kOk = 0;
constexpr int kChecksFailed = 1;
constexpr int kPrecondition = 2;
constexpr int kInputError = 3;

struct Options {
  std::string input, output, field, module, ideal, vars, sop;
  bool verify = false;
  std::size_t max_iter = 32, rounds = 2, nvars = 2;
  std::optional<std::uint64_t> seed;
};

std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_field_spec(o.field);
}

/// "x,y" or "x:1,y:2"; names default to those scanned from `texts`.
RingPtr ring_for(const Options& o, const std::vector<std::string>& texts) {
  std::vector<std::string> names;
  std::vector<int> weights;
  if (!o.vars.empty()) {
    std::stringstream ss(o.vars);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      std::string name = item.substr(0, colon);
      name.erase(0, name.find_first_not_of(' '));
      name.erase(name.find_last_not_of(' ') + 1);
      names.push_back(name);
      weights.push_back(colon == std::string::npos ? 1 : std::stoi(item.substr(colon + 1)));
    }
  } else {
    for (const auto& t : texts)
      for (auto& n : scan_variable_names(t))
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    weights.assign(names.size(), 1);
  }
  if (names.empty()) throw ValidationError("no variables given");
  const Field f = o.field.empty() ? Field::rational() : parse_field_spec(o.field);
  try {
    return make_ring(f, names, weights);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("variables: ") + e.what());
  }
}

void emit(const Options& o, const Json& j) {
  if (o.output.empty())
    std::cout << dump_json(j);
  else
    write_text(o.output, dump_json(j));
}

/// Summary goes to stdout unless stdout carries the JSON result.
std::ostream& summary(const Options& o) { return o.output.empty() ? std::cerr : std::cout; }

void print_report(std::ostream& out, const VerificationReport& r) {
  for (const auto& c : r.checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  for (const auto& a : r.assumptions) out << "ASSUMED " << a << "\n";
}

std::string ranks(const FreeComplex& c) {
  std::string s;
  for (std::size_t p = 0; p <= c.length(); ++p)
    s += (p ? " " : "") + std::to_string(c.module(p).rank());
  return s;
}

std::string generators(const SubmoduleGB& m) {
  if (m.basis().empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < m.basis().size(); ++k) {
    if (k) s += ", ";
    const ModuleVector& v = m.basis()[k];
    s += v.rank() == 1 ? v[0].to_string() : v.to_string();
  }
  return s;
}

int run_koszul(const Options& o) {
  Problem p = [&] {
    if (o.seed) return random_instance(*o.seed, o.nvars, field_override(o).value_or(Field::rational())).problem;
    if (o.sop.empty()) throw ValidationError("koszul needs --sop or --seed");
    const RingPtr ring = ring_for(o, {o.sop});
    return koszul_problem(validate_sop(ring, parse_polynomial_list(ring, o.sop)));
  }();
  emit(o, problem_to_json(p));
  return kOk;
}

int run_star(const Options& o) {
  const Problem p = read_problem(o.input, field_override(o));
  StarFile out{p, star_transform(p.complex, p.sop), {}};
  if (o.verify) out.report = verify_star(p.complex, p.sop, out.star);
  emit(o, star_to_json(out));
  std::ostream& s = summary(o);
  s << "ranks: " << ranks(out.star.complex) << "\n";
  if (out.star.top_vanished) s << "top module vanished\n";
  print_report(s, out.report);
  return out.report.verdict() ? kOk : kChecksFailed;
}

int run_verify(const Options& o) {
  const StarFile in = read_star(o.input);
  const VerificationReport r = verify_star(in.problem.complex, in.problem.sop, in.star);
  print_report(std::cout, r);
  bool ok = r.verdict();
  if (!in.report.checks.empty() &&
      report_to_json(in.report) != report_to_json(r)) {
    std::cout << "FAIL stored report differs from the recomputed one\n";
    ok = false;
  }
  return ok ? kOk : kChecksFailed;
}

SubmoduleGB module_arg(const RingPtr& ring, const std::string& text) {
  return ideal(ring, parse_polynomial_list(ring, text));
}

int run_colon(const Options& o) {
  const RingPtr ring = ring_for(o, {o.module, o.ideal});
  const SubmoduleGB m = module_arg(ring, o.module);
  std::cout << generators(colon(m, parse_polynomial_list(ring, o.ideal))) << "\n";
  return kOk;
}

int run_saturate(const Options& o) {
  const RingPtr ring = ring_for(o, {o.module, o.ideal});
  const SubmoduleGB m = module_arg(ring, o.module);
  const std::vector<Polynomial> j =
      o.ideal.empty() ? irrelevant_ideal(ring) : parse_polynomial_list(ring, o.ideal);
  const Saturation s = saturate(m, j, o.max_iter);
  std::cout << generators(s.module) << "\n" << "iterations: " << s.iterations << "\n";
  return kOk;
}

int run_iterate(const Options& o) {
  const Problem p = read_problem(o.input, field_override(o));
  const DriverResult d = star_iteration_driver(p.complex, p.sop, o.rounds);
  Json rounds = Json::array();
  bool ok = true;
  std::ostream& s = summary(o);
  for (std::size_t k = 0; k < d.rounds.size(); ++k) {
    const DriverRound& r = d.rounds[k];
    const SubmoduleGB img = image(r.star.complex.map(1), r.star.complex.module(0));
    s << "round " << (k + 1) << ": ranks " << ranks(r.star.complex) << "; image "
      << generators(img) << "; oracle " << (r.oracle_match ? "match" : "MISMATCH")
      << "; checks " << (r.report.verdict() ? "pass" : "FAIL") << "\n";
    if (!r.report.verdict()) print_report(s, r.report);
    ok = ok && r.oracle_match && r.report.verdict();
    const Problem source{p.ring, p.sop, k == 0 ? p.complex : d.rounds[k - 1].star.complex};
    Json entry = star_to_json(StarFile{source, r.star, r.report});
    entry["oracle_match"] = r.oracle_match;
    rounds.push_back(std::move(entry));
  }
  s << "stop: " << (d.stop_reason.empty() ? "no rounds requested" : d.stop_reason) << "\n";
  Json j;
  j["rounds"] = std::move(rounds);
  j["stop_reason"] = d.stop_reason;
  emit(o, j);
  return ok ? kOk : kChecksFailed;
}

int run_info(const Options& o) {
  const Json j = read_json(o.input);
  const bool is_star = j.is_object() && j.contains("source");
  const Problem p = is_star ? read_star(o.input).problem : problem_from_json(j, field_override(o));
  const FreeComplex c = is_star ? read_star(o.input).star.complex : p.complex;
  std::cout << "field: " << p.ring->field().describe() << "\n";
  std::cout << "variables: " << p.ring->nvars() << "\n";
  std::cout << "n: " << p.sop.n() << "\n";
  std::cout << "colength: " << p.sop.colength.get_str() << "\n";
  for (std::size_t k = 0; k <= c.length(); ++k) {
    std::cout << "F" << k << ": rank " << c.module(k).rank() << ", twists [";
    for (std::size_t i = 0; i < c.module(k).rank(); ++i)
      std::cout << (i ? ", " : "") << -c.module(k).degree(i);
    std::cout << "]\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star transform of acyclic graded complexes with Groebner oracles"};
  app.require_subcommand(1);
  Options o;

  auto* koszul = app.add_subcommand("koszul", "emit the Koszul complex of a sop as a problem file");
  koszul->add_option("--sop", o.sop, "comma-separated sop, e.g. \"x^2,y^2\"");
  koszul->add_option("--vars", o.vars, "variables with optional weights, e.g. \"x,y:2\"");
  koszul->add_option("--seed", o.seed, "emit a random corpus instance instead");
  koszul->add_option("--nvars", o.nvars, "number of variables for --seed")->check(CLI::Range(2, 4));

  auto* star = app.add_subcommand("star", "compute the transform of a problem file");
  star->add_option("--input", o.input, "problem file")->required();
  star->add_flag("--verify", o.verify, "run the oracle checks and embed the report");

  auto* verify = app.add_subcommand("verify", "re-check a written transform");
  verify->add_option("--input", o.input, "transform output file")->required();

  auto* colon_cmd = app.add_subcommand("colon", "ideal quotient M : J");
  colon_cmd->add_option("--module", o.module, "generators of M")->required();
  colon_cmd->add_option("--ideal", o.ideal, "generators of J")->required();
  colon_cmd->add_option("--vars", o.vars, "variables (default: scanned from the input)");

  auto* sat = app.add_subcommand("saturate", "saturation of M by J (default: all variables)");
  sat->add_option("--module", o.module, "generators of M")->required();
  sat->add_option("--ideal", o.ideal, "generators of J");
  sat->add_option("--vars", o.vars, "variables (default: scanned from the input)");
  sat->add_option("--max-iter", o.max_iter, "colon steps before giving up");

  auto* iterate = app.add_subcommand("iterate", "apply the transform repeatedly");
  iterate->add_option("--input", o.input, "problem file")->required();
  iterate->add_option("--rounds", o.rounds, "number of rounds");

  auto* info = app.add_subcommand("info", "print ranks and twists of a problem or transform file");
  info->add_option("--input", o.input, "problem or transform file")->required();

  for (auto* sub : {koszul, star, verify, colon_cmd, sat, iterate, info})
    sub->add_option("--field", o.field, "rational or p:<prime>");
  for (auto* sub : {koszul, star, iterate})
    sub->add_option("--output", o.output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*koszul) return run_koszul(o);
    if (*star) return run_star(o);
    if (*verify) return run_verify(o);
    if (*colon_cmd) return run_colon(o);
    if (*sat) return run_saturate(o);
    if (*iterate) return run_iterate(o);
    if (*info) return run_info(o);
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const IterationLimit& e) {
    std::cerr << "iteration limit: " << e.what() << "\n";
    return kChecksFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kChecksFailed;
  } catch (const std::exception& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
