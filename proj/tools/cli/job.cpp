#include "job.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace locoh::cli {

using nlohmann::json;

SchemaError::SchemaError(const std::string& where, const std::string& what)
    : Error((where.empty() ? std::string("job") : where) + ": " + what), where_(where) {}

bool operator==(const JobSpec& a, const JobSpec& b) {
  auto key = [](const JobSpec& j) {
    return std::tie(j.ring, j.module, j.complex, j.ideal, j.ideal_b, j.command, j.check, j.i_range.lo,
                    j.i_range.hi, j.window.lo, j.window.hi, j.k_max, j.stab, j.K_max, j.power, j.convention,
                    j.twist, j.report, j.threads);
  };
  return key(a) == key(b);
}

namespace {

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }
std::string at_index(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where, "missing field '" + key + "'");
  return *it;
}

void require_object(const json& v, const std::string& where) {
  if (!v.is_object()) throw SchemaError(where, "expected an object");
}

void require_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where, "expected an array");
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      throw SchemaError(where, "unknown field '" + k + "'");
}

long long get_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where, "expected an integer");
  return v.get<long long>();
}

unsigned get_positive(const json& v, const std::string& where) {
  const long long x = get_int(v, where);
  if (x < 1 || x > 1000000) throw SchemaError(where, "expected a positive integer");
  return static_cast<unsigned>(x);
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where, "expected a string");
  return v.get<std::string>();
}

std::vector<int> get_int_list(const json& v, const std::string& where) {
  require_array(v, where);
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(static_cast<int>(get_int(v[i], at_index(where, i))));
  return out;
}

std::vector<std::string> get_string_list(const json& v, const std::string& where) {
  if (v.is_string()) return split_list(v.get<std::string>());
  require_array(v, where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_string(v[i], at_index(where, i)));
  return out;
}

std::vector<std::vector<std::string>> get_matrix(const json& v, const std::string& where) {
  require_array(v, where);
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    require_array(v[i], at_index(where, i));
    std::vector<std::string> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) row.push_back(get_string(v[i][j], at_index(at_index(where, i), j)));
    out.push_back(std::move(row));
  }
  return out;
}

int parse_index_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const int i = std::stoi(key, &used);
    if (used == key.size()) return i;
  } catch (const std::exception&) {
  }
  throw SchemaError(where, "'" + key + "' is not a homological index");
}

std::pair<int, int> get_range(const json& v, const std::string& where) {
  if (v.is_string()) return parse_range(v.get<std::string>(), where);
  require_array(v, where);
  if (v.size() != 2) throw SchemaError(where, "expected [lo, hi]");
  return {static_cast<int>(get_int(v[0], where + "[0]")), static_cast<int>(get_int(v[1], where + "[1]"))};
}

std::string strip_position(const std::string& what) {
  const auto pos = what.rfind(" at position ");
  return pos == std::string::npos ? what : what.substr(0, pos);
}

Poly parse_at(const GradedRing& ring, const std::string& text, const std::string& where) {
  try {
    return parse_poly(ring, text);
  } catch (const UnknownVariableError& e) {
    throw ParseError(where + ": " + strip_position(e.what()) + " in '" + text + "'", e.position());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + strip_position(e.what()) + " in '" + text + "'", e.position());
  }
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text, const std::string& where) {
  const auto colon = text.find(':', text[0] == '-' ? 1 : 0);
  try {
    if (colon == std::string::npos) {
      std::size_t used = 0;
      const int v = std::stoi(text, &used);
      if (used == text.size()) return {v, v};
    } else {
      const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
      std::size_t ua = 0, ub = 0;
      const int lo = std::stoi(a, &ua), hi = std::stoi(b, &ub);
      if (ua == a.size() && ub == b.size()) return {lo, hi};
    }
  } catch (const std::exception&) {
  }
  throw SchemaError(where, "'" + text + "' is not a range lo:hi");
}

JobSpec parse_job(const json& doc) {
  require_object(doc, "");
  only_keys(doc,
            {"ring", "module", "complex", "ideal", "ideal_b", "command", "check", "i_range", "window", "k_max",
             "stab", "K_max", "power", "convention", "twist", "report", "threads"},
            "");
  JobSpec job;
  const json& ring = require(doc, "ring", "");
  require_object(ring, "ring");
  only_keys(ring, {"char", "vars", "weights"}, "ring");
  if (ring.contains("char")) {
    const long long p = get_int(ring["char"], "ring.char");
    if (p < 0 || p > 0xFFFFFFFFLL) throw SchemaError("ring.char", "characteristic out of range");
    job.ring.characteristic = static_cast<std::uint32_t>(p);
  }
  job.ring.vars = get_string_list(require(ring, "vars", "ring"), "ring.vars");
  if (ring.contains("weights")) job.ring.weights = get_int_list(ring["weights"], "ring.weights");

  if (doc.contains("module")) {
    const json& m = doc["module"];
    require_object(m, "module");
    only_keys(m, {"target_twists", "relations"}, "module");
    ModuleSpec spec;
    if (m.contains("target_twists")) spec.target_twists = get_int_list(m["target_twists"], "module.target_twists");
    if (m.contains("relations")) spec.relations = get_matrix(m["relations"], "module.relations");
    job.module = std::move(spec);
  }
  if (doc.contains("complex")) {
    const json& c = doc["complex"];
    require_object(c, "complex");
    only_keys(c, {"terms", "differentials"}, "complex");
    ComplexSpec spec;
    const json& terms = require(c, "terms", "complex");
    require_object(terms, "complex.terms");
    for (const auto& [k, v] : terms.items()) {
      const std::string where = "complex.terms." + k;
      require_object(v, where);
      only_keys(v, {"twists"}, where);
      spec.terms[parse_index_key(k, where)] = get_int_list(require(v, "twists", where), where + ".twists");
    }
    if (c.contains("differentials")) {
      const json& diffs = c["differentials"];
      require_object(diffs, "complex.differentials");
      for (const auto& [k, v] : diffs.items()) {
        const std::string where = "complex.differentials." + k;
        spec.differentials[parse_index_key(k, where)] = get_matrix(v, where);
      }
    }
    job.complex = std::move(spec);
  }
  if (doc.contains("ideal")) job.ideal = get_string_list(doc["ideal"], "ideal");
  if (doc.contains("ideal_b")) job.ideal_b = get_string_list(doc["ideal_b"], "ideal_b");
  if (doc.contains("command")) job.command = get_string(doc["command"], "command");
  if (doc.contains("check")) job.check = get_string(doc["check"], "check");
  if (doc.contains("i_range")) {
    const auto [lo, hi] = get_range(doc["i_range"], "i_range");
    job.i_range = {lo, hi};
  }
  if (doc.contains("window")) {
    const auto [lo, hi] = get_range(doc["window"], "window");
    job.window = {lo, hi};
  }
  if (doc.contains("k_max")) job.k_max = get_positive(doc["k_max"], "k_max");
  if (doc.contains("stab")) job.stab = get_positive(doc["stab"], "stab");
  if (doc.contains("K_max")) job.K_max = get_positive(doc["K_max"], "K_max");
  if (doc.contains("power")) job.power = get_positive(doc["power"], "power");
  if (doc.contains("convention")) job.convention = get_string(doc["convention"], "convention");
  if (doc.contains("twist")) job.twist = static_cast<int>(get_int(doc["twist"], "twist"));
  if (doc.contains("report")) job.report = get_string(doc["report"], "report");
  if (doc.contains("threads")) {
    const long long t = get_int(doc["threads"], "threads");
    if (t < 0 || t > 1024) throw SchemaError("threads", "expected 0..1024");
    job.threads = static_cast<unsigned>(t);
  }
  validate_job(job);
  // Materialize once so malformed polynomials are reported at parse time.
  const GradedRing r = build_ring(job);
  (void)build_module(r, job);
  (void)build_complex(r, job);
  (void)build_ideal(r, job.ideal, "ideal");
  (void)build_ideal(r, job.ideal_b, "ideal_b");
  return job;
}

void validate_job(const JobSpec& job) {
  if (std::find(kCommands.begin(), kCommands.end(), job.command) == kCommands.end())
    throw SchemaError("command", "unknown command '" + job.command + "'");
  if (job.command == "verify" && std::find(kChecks.begin(), kChecks.end(), job.check) == kChecks.end())
    throw SchemaError("check", "unknown check '" + job.check + "'");
  if (job.i_range.hi < job.i_range.lo) throw SchemaError("i_range", "empty range");
  if (job.window.hi < job.window.lo) throw SchemaError("window", "empty window");
  if (job.i_range.hi - job.i_range.lo > 1000 || job.window.hi - job.window.lo > 1000)
    throw SchemaError("window", "range too large");
  if (job.k_max < 1 || job.K_max < 1 || job.stab < 1 || job.power < 1)
    throw SchemaError("k_max", "k_max, K_max, stab and power must be positive");
  if (job.convention != "direct" && job.convention != "inverse")
    throw SchemaError("convention", "expected 'direct' or 'inverse'");
  if (job.report != "json" && job.report != "csv" && job.report != "pretty")
    throw SchemaError("report", "expected json, csv or pretty");
  if (job.ring.characteristic != 0 && !is_prime(job.ring.characteristic))
    throw SchemaError("ring.char", std::to_string(job.ring.characteristic) + " is neither 0 nor a prime");
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON (" + std::string(e.what()) + ")", e.byte);
  }
  return parse_job(doc);
}

json job_to_json(const JobSpec& job) {
  json ring = {{"char", job.ring.characteristic}, {"vars", job.ring.vars}};
  if (!job.ring.weights.empty()) ring["weights"] = job.ring.weights;
  json doc = {{"ring", ring},
              {"ideal", job.ideal},
              {"ideal_b", job.ideal_b},
              {"command", job.command},
              {"check", job.check},
              {"i_range", {job.i_range.lo, job.i_range.hi}},
              {"window", {job.window.lo, job.window.hi}},
              {"k_max", job.k_max},
              {"stab", job.stab},
              {"K_max", job.K_max},
              {"power", job.power},
              {"convention", job.convention},
              {"twist", job.twist},
              {"report", job.report},
              {"threads", job.threads}};
  if (job.module) doc["module"] = {{"target_twists", job.module->target_twists}, {"relations", job.module->relations}};
  if (job.complex) {
    json terms = json::object(), diffs = json::object();
    for (const auto& [i, t] : job.complex->terms) terms[std::to_string(i)] = {{"twists", t}};
    for (const auto& [i, m] : job.complex->differentials) diffs[std::to_string(i)] = m;
    doc["complex"] = {{"terms", terms}, {"differentials", diffs}};
  }
  return doc;
}

GradedRing build_ring(const JobSpec& job) {
  try {
    const FieldSpec field(job.ring.characteristic);
    if (job.ring.weights.empty()) return GradedRing(field, job.ring.vars);
    return GradedRing(field, job.ring.vars, job.ring.weights);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError("ring", e.what());
  }
}

std::vector<Poly> build_ideal(const GradedRing& ring, const std::vector<std::string>& texts, const std::string& where) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const std::string w = at_index(where, i);
    Poly p = parse_at(ring, texts[i], w);
    if (p.is_zero()) throw ZeroGeneratorError(w + ": generator is zero");
    if (!p.is_homogeneous()) throw NonHomogeneousError(w + ": '" + texts[i] + "' is not homogeneous");
    out.push_back(std::move(p));
  }
  return out;
}

PresentedModule build_module(const GradedRing& ring, const JobSpec& job) {
  if (!job.module) return PresentedModule::free(ring);
  const ModuleSpec& spec = *job.module;
  if (spec.relations.empty()) return PresentedModule::free(ring, spec.target_twists);
  if (spec.relations.size() != spec.target_twists.size())
    throw SchemaError("module.relations", "expected one row per generator (" +
                                              std::to_string(spec.target_twists.size()) + "), got " +
                                              std::to_string(spec.relations.size()));
  std::vector<std::vector<Poly>> rows;
  for (std::size_t i = 0; i < spec.relations.size(); ++i) {
    if (spec.relations[i].size() != spec.relations[0].size())
      throw SchemaError(at_index("module.relations", i), "ragged relation matrix");
    std::vector<Poly> row;
    for (std::size_t j = 0; j < spec.relations[i].size(); ++j) {
      const std::string w = at_index(at_index("module.relations", i), j);
      Poly p = parse_at(ring, spec.relations[i][j], w);
      if (!p.is_homogeneous()) throw NonHomogeneousError(w + ": '" + spec.relations[i][j] + "' is not homogeneous");
      row.push_back(std::move(p));
    }
    rows.push_back(std::move(row));
  }
  try {
    return PresentedModule::from_relations(ring, spec.target_twists, rows);
  } catch (const NonHomogeneousError& e) {
    throw NonHomogeneousError(std::string("module.relations: ") + e.what());
  }
}

std::optional<FreeComplex> build_complex(const GradedRing& ring, const JobSpec& job) {
  if (!job.complex) return std::nullopt;
  const ComplexSpec& spec = *job.complex;
  std::map<int, FreeModule> terms;
  for (const auto& [i, t] : spec.terms) terms.emplace(i, FreeModule(ring, t));
  auto term = [&](int i) {
    auto it = terms.find(i);
    return it == terms.end() ? FreeModule(ring) : it->second;
  };
  std::map<int, GradedMap> diffs;
  for (const auto& [i, m] : spec.differentials) {
    const std::string where = "complex.differentials." + std::to_string(i);
    const FreeModule src = term(i), dst = term(i - 1);
    if (m.size() != dst.rank()) throw SchemaError(where, "expected " + std::to_string(dst.rank()) + " rows");
    std::vector<Poly> entries;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (m[r].size() != src.rank())
        throw SchemaError(at_index(where, r), "expected " + std::to_string(src.rank()) + " columns");
      for (std::size_t c = 0; c < m[r].size(); ++c) entries.push_back(parse_at(ring, m[r][c], at_index(at_index(where, r), c)));
    }
    try {
      diffs.emplace(i, GradedMap(src, dst, std::move(entries)));
    } catch (const NonHomogeneousError& e) {
      throw NonHomogeneousError(where + ": " + e.what());
    }
  }
  try {
    return FreeComplex(ring, std::move(terms), std::move(diffs));
  } catch (const ValidationError& e) {
    throw SchemaError("complex", e.what());
  }
}

}  // namespace locoh::cli
