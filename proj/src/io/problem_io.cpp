#include "cstar/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

const Json& field_at(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ctx + ": missing \"" + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const char* key, const std::string& ctx) {
  const Json& a = field_at(j, key, ctx);
  if (!a.is_array()) throw ParseError(ctx + "." + key + ": expected an array");
  return a;
}

std::int64_t as_int(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ParseError(ctx + ": expected an integer");
  return j.get<std::int64_t>();
}

const std::string& as_string(const Json& j, const std::string& ctx) {
  if (!j.is_string()) throw ParseError(ctx + ": expected a string");
  return j.get_ref<const std::string&>();
}

Polynomial poly_at(const RingPtr& ring, const Json& j, const std::string& ctx) {
  try {
    return parse_polynomial(ring, as_string(j, ctx));
  } catch (const ParseError& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

Field field_from_json(const Json& j) {
  const std::string& type = as_string(field_at(j, "type", "field"), "field.type");
  if (type == "rational") return Field::rational();
  if (type == "prime") {
    const std::int64_t p = as_int(field_at(j, "p", "field"), "field.p");
    try {
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(std::string("field.p: ") + e.what());
    }
  }
  throw ValidationError("field.type: unknown field \"" + type + "\"");
}

Json field_to_json(Field f) {
  Json j;
  if (f.is_rational()) {
    j["type"] = "rational";
  } else {
    j["type"] = "prime";
    j["p"] = f.modulus();
  }
  return j;
}

/// Non-strict parsing keeps inhomogeneous or non-composing maps so that the
/// verifier can report them.
FreeComplex complex_from_json(const RingPtr& ring, const Json& j,
                              const std::string& ctx, bool strict = true) {
  const Json& twists = array_at(j, "twists", ctx);
  const Json& maps = array_at(j, "maps", ctx);
  std::vector<GradedFreeModule> mods;
  for (std::size_t p = 0; p < twists.size(); ++p) {
    const std::string c = ctx + ".twists[" + std::to_string(p) + "]";
    if (!twists[p].is_array()) throw ParseError(c + ": expected an array");
    std::vector<std::int64_t> deg;
    for (std::size_t k = 0; k < twists[p].size(); ++k)
      deg.push_back(-as_int(twists[p][k], c + "[" + std::to_string(k) + "]"));
    mods.push_back(GradedFreeModule(std::move(deg)));
  }
  if (mods.empty()) throw ValidationError(ctx + ".twists: no modules");
  if (maps.size() + 1 != mods.size())
    throw ValidationError(ctx + ": " + std::to_string(mods.size()) +
                          " modules need " + std::to_string(mods.size() - 1) +
                          " maps, found " + std::to_string(maps.size()));
  std::vector<PolyMatrix> mats;
  for (std::size_t k = 1; k < mods.size(); ++k) {
    const std::string c = ctx + ".maps[" + std::to_string(k - 1) + "]";
    const Json& rows = maps[k - 1];
    if (!rows.is_array()) throw ParseError(c + ": expected an array of rows");
    const std::size_t nr = mods[k - 1].rank(), nc = mods[k].rank();
    if (rows.size() != nr)
      throw ValidationError(c + ": " + std::to_string(rows.size()) +
                            " rows, expected " + std::to_string(nr));
    PolyMatrix m(ring, nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
      const std::string cr = c + "[" + std::to_string(r) + "]";
      if (!rows[r].is_array()) throw ParseError(cr + ": expected an array");
      if (rows[r].size() != nc)
        throw ValidationError(cr + ": " + std::to_string(rows[r].size()) +
                              " entries, expected " + std::to_string(nc));
      for (std::size_t col = 0; col < nc; ++col)
        m.set(r, col, poly_at(ring, rows[r][col], cr + "[" + std::to_string(col) + "]"));
    }
    try {
      m.certify(mods[k], mods[k - 1]);
    } catch (const ValidationError& e) {
      if (strict) throw ValidationError(c + ": " + e.what());
    }
    mats.push_back(std::move(m));
  }
  FreeComplex fc(ring, std::move(mods), std::move(mats));
  if (!strict) return fc;
  if (auto defect = check_complex(fc))
    throw ValidationError(ctx + ": " + defect->describe());
  return fc;
}

Json complex_to_json(const FreeComplex& c) {
  Json twists = Json::array();
  for (const auto& m : c.modules()) {
    Json t = Json::array();
    for (auto d : m.degrees()) t.push_back(-d);
    twists.push_back(std::move(t));
  }
  Json maps = Json::array();
  for (const auto& m : c.maps()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t col = 0; col < m.cols(); ++col) row.push_back(m.at(r, col).to_string());
      rows.push_back(std::move(row));
    }
    maps.push_back(std::move(rows));
  }
  Json j;
  j["twists"] = std::move(twists);
  j["maps"] = std::move(maps);
  return j;
}

Json polys_to_json(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

}  // namespace

Field parse_field_spec(const std::string& spec) {
  if (spec == "rational") return Field::rational();
  if (spec.rfind("p:", 0) == 0) {
    try {
      std::size_t used = 0;
      const unsigned long p = std::stoul(spec.substr(2), &used);
      if (used == spec.size() - 2) return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::exception& e) {
      throw ValidationError("field \"" + spec + "\": " + e.what());
    }
  }
  throw ValidationError("field \"" + spec + "\": expected rational or p:<prime>");
}

Problem problem_from_json(const Json& j, std::optional<Field> field) {
  const Field f = field ? *field : field_from_json(field_at(j, "field", "problem"));
  const Json& vars = array_at(j, "variables", "problem");
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const std::string c = "variables[" + std::to_string(k) + "]";
    names.push_back(as_string(field_at(vars[k], "name", c), c + ".name"));
    const std::int64_t w = as_int(field_at(vars[k], "degree", c), c + ".degree");
    if (w < 1) throw ValidationError(c + ".degree: must be positive");
    weights.push_back(static_cast<int>(w));
  }
  if (names.empty()) throw ValidationError("variables: at least one variable is required");
  RingPtr ring;
  try {
    ring = make_ring(f, names, weights);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("variables: ") + e.what());
  }
  if (auto it = j.find("quotient"); it != j.end()) {
    if (!it->is_array()) throw ParseError("quotient: expected an array");
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < it->size(); ++k)
      gens.push_back(poly_at(ring, (*it)[k], "quotient[" + std::to_string(k) + "]"));
    if (!gens.empty()) ring = with_quotient(ring, gens);
  }
  const Json& sop_j = array_at(j, "sop", "problem");
  std::vector<Polynomial> x;
  for (std::size_t k = 0; k < sop_j.size(); ++k)
    x.push_back(poly_at(ring, sop_j[k], "sop[" + std::to_string(k) + "]"));
  FreeComplex c = complex_from_json(ring, field_at(j, "complex", "problem"), "complex");
  if (c.length() != x.size())
    throw ValidationError("complex: length " + std::to_string(c.length()) +
                          " differs from the " + std::to_string(x.size()) +
                          " sop elements");
  SopData sop = validate_sop(ring, std::move(x));
  return Problem{ring, std::move(sop), std::move(c)};
}

Problem read_problem(const std::filesystem::path& path, std::optional<Field> field) {
  return problem_from_json(read_json(path), field);
}

Json problem_to_json(const Problem& p) {
  Json j;
  j["field"] = field_to_json(p.ring->field());
  Json vars = Json::array();
  for (std::size_t k = 0; k < p.ring->nvars(); ++k) {
    Json v;
    v["name"] = p.ring->names()[k];
    v["degree"] = p.ring->weights()[k];
    vars.push_back(std::move(v));
  }
  j["variables"] = std::move(vars);
  if (p.ring->has_quotient()) j["quotient"] = polys_to_json(p.ring->quotient_basis());
  j["sop"] = polys_to_json(p.sop.elements);
  j["complex"] = complex_to_json(p.complex);
  return j;
}

Json label_to_json(const StarLabel& l) {
  switch (l.kind) {
    case StarLabel::Kind::Bracket:
      return Json::array({"bracket", l.index, l.subset});
    case StarLabel::Kind::Angle:
      return Json::array({"angle", l.index});
    case StarLabel::Kind::Star:
      return Json::array({"star", l.index, l.j});
  }
  return Json();
}

StarLabel label_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw ParseError("label: expected [kind, ...]");
  const std::string& kind = j[0].get_ref<const std::string&>();
  auto index = [&j](std::size_t k) {
    if (k >= j.size() || !j[k].is_number_integer() || j[k].get<std::int64_t>() < 0)
      throw ParseError("label: expected a nonnegative integer at position " +
                       std::to_string(k));
    return j[k].get<std::size_t>();
  };
  if (kind == "bracket" && j.size() == 3 && j[2].is_array()) {
    KoszulIndex I;
    for (const auto& e : j[2]) I.push_back(static_cast<int>(as_int(e, "label subset")));
    return {StarLabel::Kind::Bracket, index(1), I, 0};
  }
  if (kind == "angle" && j.size() == 2) return {StarLabel::Kind::Angle, index(1), {}, 0};
  if (kind == "star" && j.size() == 3)
    return {StarLabel::Kind::Star, index(1), {}, static_cast<int>(index(2))};
  throw ParseError("label: malformed " + kind + " label");
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["verdict"] = r.verdict() ? "pass" : "fail";
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["assumptions"] = r.assumptions;
  return j;
}

Json star_to_json(const StarFile& s) {
  Problem out{s.problem.ring, s.problem.sop, s.star.complex};
  Json j = problem_to_json(out);
  Json labels = Json::array();
  for (const auto& mod : s.star.labels) {
    Json l = Json::array();
    for (const auto& e : mod) l.push_back(label_to_json(e));
    labels.push_back(std::move(l));
  }
  j["labels"] = std::move(labels);
  j["top_vanished"] = s.star.top_vanished;
  j["source"] = complex_to_json(s.problem.complex);
  j["report"] = report_to_json(s.report);
  return j;
}

StarFile star_from_json(const Json& j) {
  Json source = j;
  source["complex"] = field_at(j, "source", "star");
  Problem problem = problem_from_json(source);
  const FreeComplex star_complex =
      complex_from_json(problem.ring, field_at(j, "complex", "star"), "complex", false);

  StarComplex star{star_complex, {}, false};
  const Json& labels = array_at(j, "labels", "star");
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (!labels[p].is_array())
      throw ParseError("labels[" + std::to_string(p) + "]: expected an array");
    std::vector<StarLabel> mod;
    for (const auto& l : labels[p]) mod.push_back(label_from_json(l));
    star.labels.push_back(std::move(mod));
  }
  const Json& tv = field_at(j, "top_vanished", "star");
  if (!tv.is_boolean()) throw ParseError("top_vanished: expected a boolean");
  star.top_vanished = tv.get<bool>();

  VerificationReport report;
  if (auto it = j.find("report"); it != j.end()) {
    for (const auto& c : array_at(*it, "checks", "report")) {
      const Json& pass = field_at(c, "pass", "report.checks");
      if (!pass.is_boolean()) throw ParseError("report.checks.pass: expected a boolean");
      report.checks.push_back({as_string(field_at(c, "name", "report.checks"), "name"),
                               pass.get<bool>(),
                               as_string(field_at(c, "detail", "report.checks"), "detail"),
                               0.0});
    }
    for (const auto& a : array_at(*it, "assumptions", "report"))
      report.assumptions.push_back(as_string(a, "report.assumptions"));
  }
  return StarFile{std::move(problem), std::move(star), std::move(report)};
}

StarFile read_star(const std::filesystem::path& path) {
  return star_from_json(read_json(path));
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace cstar
