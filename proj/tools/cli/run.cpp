#include "run.hpp"

#include <functional>
#include <ostream>

namespace locoh::cli {

namespace {

struct Inputs {
  GradedRing ring;
  PresentedModule module;
  std::optional<FreeComplex> complex;
  std::vector<Poly> ideal;
};

Inputs materialize(const JobSpec& job) {
  GradedRing ring = build_ring(job);
  PresentedModule m = build_module(ring, job);
  auto c = build_complex(ring, job);
  auto ideal = build_ideal(ring, job.ideal, "ideal");
  return {ring, m, c, ideal};
}

const std::vector<Poly>& require_ideal(const Inputs& in) {
  if (in.ideal.empty()) throw SchemaError("ideal", "this command needs ideal generators");
  return in.ideal;
}

TowerParams params_of(const JobSpec& job) { return {job.k_max, job.stab, job.threads}; }

ModuleComplex coefficients_of(const Inputs& in) {
  if (in.complex) return {*in.complex, in.module};
  return ModuleComplex::of(in.module);
}

ValidatedResolution resolution_of(const Inputs& in, const JobSpec& job) {
  if (in.complex) {
    const FreeModule p0 = in.complex->term(0);
    if (!(p0 == in.module.generators()))
      throw SchemaError("complex", "term 0 must equal the generators of the module");
    return validate_resolution(*in.complex, in.module, GradedMap::identity(p0), job.window);
  }
  const GradedMap& pres = in.module.presentation();
  const FreeModule& gens = in.module.generators();
  if (gens.rank() != 1 || gens.twist(0) != 0)
    throw SchemaError("complex", "a resolution is needed for modules that are not cyclic R/(f)");
  std::vector<Poly> f;
  for (std::size_t j = 0; j < pres.source().rank(); ++j)
    if (!pres.entry(0, j).is_zero()) f.push_back(pres.entry(0, j));
  return koszul_resolution(in.ring, f);
}

std::string cells_text(const std::vector<std::pair<int, int>>& cells) {
  std::string out;
  for (std::size_t k = 0; k < cells.size() && k < 8; ++k) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(cells[k].first) + "," + std::to_string(cells[k].second) + ")";
  }
  if (cells.size() > 8) out += " ...";
  return out;
}

void add_comparison(Report& r, const std::string& name, std::size_t compared,
                    const std::vector<std::pair<int, int>>& excluded,
                    const std::vector<std::pair<int, int>>& mismatches) {
  r.check(name, mismatches.empty(),
          std::to_string(compared) + " compared, " + std::to_string(excluded.size()) + " unstabilized" +
              (mismatches.empty() ? "" : ", mismatches " + cells_text(mismatches)));
  r.check("stabilized", excluded.empty(), cells_text(excluded));
}

void add_comparison(Report& r, const std::string& name, const DualityComparison& c) {
  add_comparison(r, name, c.compared, c.excluded, c.mismatches);
}

Report run_verify(const JobSpec& job, const Inputs& in) {
  Report r;
  r.name = "verify " + job.check;
  if (job.check == "selfdual") {
    const KoszulSpec spec{in.ring, require_ideal(in), job.power,
                          job.convention == "direct" ? KoszulConvention::direct : KoszulConvention::inverse};
    const SelfDualityReport s = self_duality_check(spec, in.module, job.i_range, job.window);
    r.check("self_duality", s.passed,
            s.correspondence() + (s.mismatches.empty() ? "" : ", mismatches " + cells_text(s.mismatches)));
    r.tables.emplace_back("koszul", s.koszul_side);
    r.tables.emplace_back("hom", s.hom_side);
  } else if (job.check == "gm") {
    const FreeComplex x = in.complex ? *in.complex : FreeComplex::unit(in.ring);
    const FreeComplex y = FreeComplex::concentrated(FreeModule(in.ring, {job.twist}), 0);
    const GmAdjunctionReport g =
        gm_adjunction_check(require_ideal(in), x, y, job.K_max, job.i_range, job.window, job.threads);
    r.check("chain_map", g.chain_map_valid, g.chain_map_error);
    r.check("strandwise_isomorphism", g.strandwise_isomorphism, cells_text(g.non_isomorphic_cells));
    r.check("homology_equal", g.homology_equal, cells_text(g.homology_mismatches));
    r.tables.emplace_back("hom_tensor", g.left);
    r.tables.emplace_back("hom_hom", g.right);
  } else if (job.check == "duality") {
    const LocalDualityReport d = local_duality_check(resolution_of(in, job), job.i_range, job.window, params_of(job));
    add_comparison(r, "local_duality", d.result);
    r.tables.emplace_back("local_cohomology", d.local_cohomology);
    r.tables.emplace_back("ext_dual", d.ext);
  } else if (job.check == "dualizing") {
    const DualizingModuleReport d = dualizing_module_check(in.ring, job.window, params_of(job));
    add_comparison(r, "dualizing_module", d.result);
    r.tables.emplace_back("top_local_cohomology", d.top_local_cohomology);
    r.tables.emplace_back("dual", d.dual);
    r.tables.emplace_back("omega", d.omega);
  } else if (job.check == "generators") {
    const auto other = build_ideal(in.ring, job.ideal_b, "ideal_b");
    if (other.empty()) throw SchemaError("ideal_b", "generators check needs a second generator list");
    const GeneratorIndependenceReport g =
        generator_independence_check(require_ideal(in), other, in.module, job.i_range, job.window, params_of(job));
    add_comparison(r, "generator_independence", g.compared, g.excluded, g.mismatches);
    r.tables.emplace_back("first", g.table_a);
    r.tables.emplace_back("second", g.table_b);
  }
  return r;
}

}  // namespace

Report run(const JobSpec& job) {
  validate_job(job);
  if (job.command == "verify" && job.check == "corpus") return run_corpus(job.threads);
  const Inputs in = materialize(job);
  if (job.command == "verify") return run_verify(job, in);
  Report r;
  r.name = job.command;
  if (job.command == "hilbert") {
    r.tables.emplace_back("hilbert", hilbert_row(in.module, job.window));
  } else if (job.command == "koszul") {
    const KoszulSpec spec{in.ring, require_ideal(in), job.power,
                          job.convention == "direct" ? KoszulConvention::direct : KoszulConvention::inverse};
    r.tables.emplace_back("koszul", koszul_homology_table(spec, in.module, job.i_range, job.window, job.threads));
  } else if (job.command == "lc") {
    r.tables.emplace_back("local_cohomology", local_cohomology_table(require_ideal(in), coefficients_of(in),
                                                                     job.i_range, job.window, params_of(job)));
  } else if (job.command == "lh") {
    r.tables.emplace_back("local_homology", local_homology_table(require_ideal(in), coefficients_of(in), job.i_range,
                                                                 job.window, params_of(job)));
  } else if (job.command == "hom-cech") {
    r.tables.emplace_back("hom_stable_cech", hom_stable_cech_table(require_ideal(in), coefficients_of(in), job.K_max,
                                                                   job.i_range, job.window, job.threads));
  } else if (job.command == "ext") {
    r.tables.emplace_back("ext", ext_table(resolution_of(in, job), job.twist, job.i_range, job.window, job.threads));
  }
  return r;
}

// ---------------------------------------------------------------------------
// corpus

namespace {

struct CorpusCase {
  std::string name;
  JobSpec job;
  std::function<void(Report&)> expect;
};

JobSpec base_job(std::vector<std::string> vars, std::string command, std::string check = {}) {
  JobSpec j;
  j.ring.vars = std::move(vars);
  j.command = std::move(command);
  j.check = std::move(check);
  return j;
}

ModuleSpec cyclic(std::vector<std::string> relations) { return {{0}, {std::move(relations)}}; }

/// Compares a table against dim(i, d), also requiring every entry to be stabilized.
std::function<void(Report&)> expect_table(std::function<long long(int, int)> dim) {
  return [dim](Report& r) {
    const HilbertTable& t = r.tables.front().second;
    std::vector<std::pair<int, int>> wrong, unstable;
    for (const auto& [key, e] : t.entries()) {
      if (e.dim != dim(key.first, key.second)) wrong.push_back(key);
      if (!e.stabilized) unstable.push_back(key);
    }
    r.check("closed_form", wrong.empty(), cells_text(wrong));
    r.check("stabilized", unstable.empty(), cells_text(unstable));
  };
}

std::vector<CorpusCase> corpus_cases() {
  std::vector<CorpusCase> cases;
  const std::vector<std::vector<std::string>> var_sets = {{"x"}, {"x", "y"}, {"x", "y", "z"}};

  for (const auto& vars : var_sets) {
    JobSpec j = base_job(vars, "koszul");
    j.ideal = vars;
    j.i_range = {0, static_cast<int>(vars.size())};
    j.window = {-4, 6};
    cases.push_back({"koszul_regular_n" + std::to_string(vars.size()), j,
                     expect_table([](int i, int d) { return i == 0 && d == 0 ? 1 : 0; })});
  }

  {
    JobSpec j = base_job({"x", "y"}, "verify", "selfdual");
    j.ideal = {"x", "y"};
    j.power = 2;
    j.module = cyclic({"x^2"});
    j.window = {-4, 6};
    cases.push_back({"selfdual_x_y_k2", j, {}});
    JobSpec j2 = j;
    j2.ideal = {"x^2", "x*y"};
    j2.power = 1;
    j2.convention = "direct";
    j2.module = cyclic({"y^3", "x*y"});
    cases.push_back({"selfdual_nonregular_direct", j2, {}});
  }

  {
    JobSpec j = base_job({"x"}, "lc");
    j.ideal = {"x"};
    j.i_range = {0, 1};
    j.window = {-6, 2};
    cases.push_back({"lc_kx", j, expect_table([](int i, int d) { return i == 1 && d <= -1 ? 1 : 0; })});
    JobSpec j2 = base_job({"x", "y"}, "lc");
    j2.ideal = {"x", "y"};
    j2.window = {-6, 2};
    cases.push_back({"lc_kxy", j2, expect_table([](int i, int d) { return i == 2 && d <= -2 ? -d - 1 : 0; })});
    JobSpec j3 = j2;
    j3.module = cyclic({"x^2", "x*y"});
    j3.window = {-4, 4};
    cases.push_back({"lc_torsion_h0", j3, [](Report& r) {
                       const HilbertTable& t = r.tables.front().second;
                       std::vector<std::pair<int, int>> wrong;
                       for (int d = -4; d <= 4; ++d)
                         if (t.dim(0, d) != (d == 1 ? 1 : 0)) wrong.emplace_back(0, d);
                       r.check("gamma_m", wrong.empty(), cells_text(wrong));
                     }});
  }

  {
    const std::vector<std::pair<std::string, ModuleSpec>> modules = {
        {"R", ModuleSpec{}}, {"R_x2", cyclic({"x^2"})}, {"R_x2_xy", cyclic({"x^2", "x*y"})}};
    const std::vector<std::function<long long(int)>> hilbert = {
        [](int d) { return d < 0 ? 0LL : d + 1LL; },
        [](int d) { return d < 0 ? 0LL : (d == 0 ? 1LL : 2LL); },
        [](int d) { return d < 0 ? 0LL : (d == 1 ? 2LL : 1LL); }};
    for (std::size_t k = 0; k < modules.size(); ++k) {
      JobSpec j = base_job({"x", "y"}, "lh");
      j.ideal = {"x", "y"};
      j.module = modules[k].second;
      j.window = {-2, 6};
      j.k_max = 12;
      auto h = hilbert[k];
      cases.push_back({"lh_" + modules[k].first, j, expect_table([h](int i, int d) { return i == 0 ? h(d) : 0; })});
    }
  }

  {
    JobSpec j = base_job({"x", "y"}, "verify", "generators");
    j.ideal = {"x", "y"};
    j.ideal_b = {"x", "y", "x+y"};
    j.i_range = {0, 3};
    j.window = {-5, 2};
    cases.push_back({"generators_xy_xyz", j, {}});
    JobSpec j2 = base_job({"x"}, "verify", "generators");
    j2.ideal = {"x"};
    j2.ideal_b = {"x^2"};
    j2.i_range = {0, 1};
    j2.window = {-5, 2};
    cases.push_back({"generators_x_x2", j2, {}});
  }

  {
    JobSpec j = base_job({"x", "y"}, "verify", "gm");
    j.ideal = {"x", "y"};
    j.K_max = 2;
    j.i_range = {-6, 6};
    j.window = {-6, 6};
    cases.push_back({"gm_R_R", j, {}});
    JobSpec j2 = j;
    j2.K_max = 4;
    j2.complex = ComplexSpec{{{2, {-2}}, {1, {-1, -1}}, {0, {0}}}, {{2, {{"-y"}, {"x"}}}, {1, {{"x", "y"}}}}};
    cases.push_back({"gm_koszul_R", j2, {}});
    JobSpec j3 = j;
    j3.K_max = 6;
    j3.twist = -2;
    j3.complex = ComplexSpec{{{1, {-2}}, {0, {0}}}, {{1, {{"x^2"}}}}};
    cases.push_back({"gm_resolution_R_minus2", j3, {}});
  }

  {
    const std::vector<std::pair<std::string, std::optional<ModuleSpec>>> modules = {
        {"R", std::nullopt}, {"R_x2", cyclic({"x^2"})}, {"R_x2_y3", cyclic({"x^2", "y^3"})}};
    for (const auto& [name, m] : modules) {
      JobSpec j = base_job({"x", "y"}, "verify", "duality");
      j.module = m;
      j.window = {-6, 2};
      j.k_max = 12;
      cases.push_back({"duality_" + name, j, {}});
    }
  }

  for (const auto& vars : var_sets) {
    JobSpec j = base_job(vars, "verify", "dualizing");
    j.window = {-8, 8};
    j.k_max = vars.size() == 3 ? 10 : 12;
    cases.push_back({"dualizing_n" + std::to_string(vars.size()), j, [](Report& r) {
                       const HilbertTable& t = r.tables.front().second;
                       r.check("all_stabilized", t.all_stabilized());
                     }});
  }
  return cases;
}

}  // namespace

Report run_corpus(unsigned threads) {
  Report all;
  all.name = "corpus";
  for (auto& c : corpus_cases()) {
    c.job.threads = threads;
    Report r = run(c.job);
    r.name = c.name;
    if (c.expect) c.expect(r);
    all.cases.push_back(std::move(r));
  }
  return all;
}

int classify_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const SchemaError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotRegularError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInternalError;
  } catch (const WellDefinednessError& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

int run_and_emit(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    const Report r = run(job);
    out << emit_report(r, job.report);
    return r.passed() ? kPass : kCheckFailure;
  } catch (...) {
    return classify_current_exception(err);
  }
}

}  // namespace locoh::cli
