#include "deko/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "deko/errors.hpp"

namespace deko {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ValidationError(std::string("missing field \"") + name + "\"");
  return j[name];
}

double number_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number()) throw ValidationError(std::string(name) + " must be a number");
  return v.get<double>();
}

// Decorations: integers on finite-type spaces, doubles on intervals.
Json element_to_json(const DecorationSpace& space, double c) {
  if (space.is_finite_type()) return static_cast<std::int64_t>(c);
  return c;
}

double element_from_json(const DecorationSpace& space, const Json& j) {
  if (!j.is_number()) throw ValidationError("decoration must be a number");
  const double c = j.get<double>();
  space.require(c);
  return c;
}

void render(std::ostream& out, const Json& j, int indent, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',';
        first = false;
        if (indent > 0) out << '\n' << std::string((depth + 1) * indent, ' ');
        out << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
        render(out, it.value(), indent, depth + 1);
      }
      if (indent > 0) out << '\n' << std::string(depth * indent, ' ');
      out << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out << ',';
        first = false;
        if (indent > 0) out << '\n' << std::string((depth + 1) * indent, ' ');
        render(out, item, indent, depth + 1);
      }
      if (indent > 0) out << '\n' << std::string(depth * indent, ' ');
      out << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v))
        throw ValidationError("cannot serialize a non-finite number");
      if (v == 0.0) {
        out << "0";  // normalize -0
        return;
      }
      char buffer[40];
      std::snprintf(buffer, sizeof(buffer), "%.17g", v);
      out << buffer;
      return;
    }
    default:
      out << j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::ostringstream out;
  render(out, j, indent, 0);
  out << '\n';
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j, int indent) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << dump_json(j, indent);
}

Json space_to_json(const DecorationSpace& space) {
  Json j;
  switch (space.kind()) {
    case SpaceKind::Finite:
      j["kind"] = "finite";
      j["elements"] = space.labels();
      if (space.zero_element())
        j["zero"] = static_cast<std::int64_t>(*space.zero_element());
      break;
    case SpaceKind::Interval:
      j["kind"] = "interval";
      j["lo"] = space.lo();
      j["hi"] = space.hi();
      if (space.zero_element()) j["zero"] = *space.zero_element();
      break;
    case SpaceKind::FiniteProduct:
      j["kind"] = "product";
      j["bits"] = space.bits();
      break;
  }
  return j;
}

DecorationSpace space_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "finite") {
    std::vector<std::string> labels;
    for (const auto& item : field(j, "elements"))
      labels.push_back(item.get<std::string>());
    std::optional<std::size_t> zero;
    if (j.contains("zero")) zero = j["zero"].get<std::size_t>();
    return DecorationSpace::finite(std::move(labels), zero);
  }
  if (kind == "interval") {
    std::optional<double> zero;
    if (j.contains("zero")) zero = j["zero"].get<double>();
    return DecorationSpace::interval(number_field(j, "lo"), number_field(j, "hi"),
                                     zero);
  }
  if (kind == "product")
    return DecorationSpace::product(field(j, "bits").get<int>());
  throw ValidationError("unknown space kind \"" + kind + "\"");
}

Json function_to_json(const TestFunction& f) {
  Json j;
  switch (f.form()) {
    case TestFunction::Form::Table:
      j["form"] = "table";
      j["values"] = f.table_values();
      break;
    case TestFunction::Form::Monomial:
      j["form"] = "monomial";
      j["degree"] = f.degree();
      break;
    case TestFunction::Form::ProductIndicator: {
      j["form"] = "indicator";
      std::vector<int> bits;
      for (int i = 0; i < f.space().bits(); ++i)
        bits.push_back((f.support() >> i) & 1u);
      j["support"] = bits;
      break;
    }
    case TestFunction::Form::Constant:
      j["form"] = "constant";
      j["c"] = f.constant_value();
      break;
    case TestFunction::Form::LinearCombination: {
      j["form"] = "lincomb";
      Json terms = Json::array();
      for (const auto& [coef, term] : f.terms())
        terms.push_back(Json::array({coef, function_to_json(term)}));
      j["terms"] = terms;
      break;
    }
  }
  return j;
}

TestFunction function_from_json(const Json& j, const DecorationSpace& space) {
  const std::string form = field(j, "form").get<std::string>();
  if (form == "table") {
    std::vector<double> values;
    for (const auto& item : field(j, "values")) values.push_back(item.get<double>());
    return TestFunction::table(space, std::move(values));
  }
  if (form == "monomial")
    return TestFunction::monomial(space, field(j, "degree").get<int>());
  if (form == "indicator") {
    const auto& bits = field(j, "support");
    if (!bits.is_array() || bits.size() != static_cast<std::size_t>(space.bits()))
      throw ValidationError("support must list one bit per coordinate");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i].get<int>() != 0) mask |= (std::uint32_t{1} << i);
    return TestFunction::product_indicator(space, mask);
  }
  if (form == "constant")
    return TestFunction::constant(space, number_field(j, "c"));
  if (form == "lincomb") {
    std::vector<std::pair<double, TestFunction>> terms;
    for (const auto& item : field(j, "terms")) {
      if (!item.is_array() || item.size() != 2)
        throw ValidationError("lincomb terms must be [coefficient, function] pairs");
      terms.emplace_back(item[0].get<double>(), function_from_json(item[1], space));
    }
    return TestFunction::linear_combination(std::move(terms));
  }
  throw ValidationError("unknown function form \"" + form + "\"");
}

Json family_to_json(const TestFamily& family) {
  Json j;
  j["space"] = space_to_json(family.space());
  Json fns = Json::array();
  for (const auto& f : family.functions()) fns.push_back(function_to_json(f));
  j["functions"] = fns;
  return j;
}

TestFamily family_from_json(const Json& j) {
  const DecorationSpace space = space_from_json(field(j, "space"));
  std::vector<TestFunction> fns;
  for (const auto& item : field(j, "functions"))
    fns.push_back(function_from_json(item, space));
  return TestFamily(space, std::move(fns));
}

Json distribution_to_json(const KDistribution& mu) {
  Json support = Json::array();
  for (const auto& [element, weight] : mu.support())
    support.push_back(Json::array({element_to_json(mu.space(), element), weight}));
  Json j;
  j["support"] = support;
  return j;
}

KDistribution distribution_from_json(const Json& j, const DecorationSpace& space) {
  KDistribution::Support support;
  for (const auto& item : field(j, "support")) {
    if (!item.is_array() || item.size() != 2)
      throw ValidationError("distribution support must be [element, weight] pairs");
    support.emplace_back(element_from_json(space, item[0]), item[1].get<double>());
  }
  return KDistribution::from_support(space, std::move(support));
}

Json graph_to_json(const DecoratedGraph& g) {
  Json j;
  j["space"] = space_to_json(g.space());
  j["n"] = g.size();
  Json entries = Json::array();
  for (double c : g.upper_triangle()) entries.push_back(element_to_json(g.space(), c));
  j["entries"] = entries;
  return j;
}

DecoratedGraph graph_from_json(const Json& j) {
  const DecorationSpace space = space_from_json(field(j, "space"));
  const auto n = field(j, "n").get<std::size_t>();
  std::vector<double> upper;
  for (const auto& item : field(j, "entries"))
    upper.push_back(element_from_json(space, item));
  return DecoratedGraph::from_upper(space, n, upper);
}

Json pattern_to_json(const PatternGraph& pattern) {
  Json j;
  j["space"] = space_to_json(pattern.space());
  j["k"] = pattern.k();
  Json edges = Json::array();
  for (const auto& e : pattern.edges())
    edges.push_back(Json::array({e.i, e.j, function_to_json(e.fn)}));
  j["edges"] = edges;
  return j;
}

PatternGraph pattern_from_json(const Json& j) {
  const DecorationSpace space = space_from_json(field(j, "space"));
  const auto k = field(j, "k").get<std::size_t>();
  std::vector<PatternEdge> edges;
  for (const auto& item : field(j, "edges")) {
    if (!item.is_array() || item.size() != 3)
      throw ValidationError("pattern edges must be [i, j, function] triples");
    edges.push_back({item[0].get<std::size_t>(), item[1].get<std::size_t>(),
                     function_from_json(item[2], space)});
  }
  return PatternGraph(space, k, std::move(edges));
}

Json kernel_to_json(const KernelMatrix& x) {
  Json j;
  j["m"] = x.m();
  j["values"] = x.upper_triangle();
  j["sup_bound"] = x.sup_bound();
  return j;
}

KernelMatrix kernel_from_json(const Json& j) {
  const auto m = field(j, "m").get<std::size_t>();
  std::vector<double> upper;
  for (const auto& item : field(j, "values")) upper.push_back(item.get<double>());
  std::optional<double> sup;
  if (j.contains("sup_bound")) sup = j["sup_bound"].get<double>();
  return KernelMatrix::from_upper(m, upper, sup);
}

Json graphon_to_json(const StepGraphon& w) {
  Json j;
  j["space"] = space_to_json(w.space());
  j["m"] = w.m();
  Json cells = Json::array();
  for (const auto& cell : w.upper_triangle())
    cells.push_back(distribution_to_json(cell));
  j["cells"] = cells;
  return j;
}

StepGraphon graphon_from_json(const Json& j) {
  const DecorationSpace space = space_from_json(field(j, "space"));
  const auto m = field(j, "m").get<std::size_t>();
  std::vector<KDistribution> upper;
  for (const auto& item : field(j, "cells"))
    upper.push_back(distribution_from_json(item, space));
  return StepGraphon::from_upper(space, m, std::move(upper));
}

Json moments_to_json(const MomentFunctionSequence& s) {
  Json j;
  j["family"] = family_to_json(s.family());
  Json components = Json::array();
  for (const auto& comp : s.components()) components.push_back(kernel_to_json(comp));
  j["components"] = components;
  return j;
}

MomentFunctionSequence moments_from_json(const Json& j) {
  TestFamily family = family_from_json(field(j, "family"));
  std::vector<KernelMatrix> components;
  for (const auto& item : field(j, "components"))
    components.push_back(kernel_from_json(item));
  return MomentFunctionSequence(std::move(family), std::move(components));
}

Json sample_distribution_to_json(const SampleDistribution& dist) {
  Json j;
  j["space"] = space_to_json(dist.space);
  j["k"] = dist.k;
  j["total"] = dist.total;
  Json counts = Json::array();
  for (const auto& [key, count] : dist.counts)
    counts.push_back(Json::array({Json(key), count}));
  j["counts"] = counts;
  return j;
}

SampleDistribution sample_distribution_from_json(const Json& j) {
  SampleDistribution dist;
  dist.space = space_from_json(field(j, "space"));
  dist.k = field(j, "k").get<std::size_t>();
  dist.total = field(j, "total").get<std::uint64_t>();
  std::uint64_t sum = 0;
  for (const auto& item : field(j, "counts")) {
    if (!item.is_array() || item.size() != 2)
      throw ValidationError("counts must be [tuple, count] pairs");
    std::vector<std::int64_t> key;
    for (const auto& c : item[0]) key.push_back(c.get<std::int64_t>());
    if (key.size() != pair_count(dist.k))
      throw ValidationError("count tuple length must be k(k-1)/2");
    const auto count = item[1].get<std::uint64_t>();
    dist.counts[key] += count;
    sum += count;
  }
  if (sum != dist.total)
    throw ValidationError("counts do not sum to the declared total");
  return dist;
}

Json partition_to_json(const StepPartition& p) {
  Json j;
  j["m"] = p.m();
  j["groups"] = p.groups();
  return j;
}

StepPartition partition_from_json(const Json& j) {
  const auto m = field(j, "m").get<std::size_t>();
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& item : field(j, "groups"))
    groups.push_back(item.get<std::vector<std::size_t>>());
  return StepPartition(m, std::move(groups));
}

}  // namespace deko
