#include <sstream>

#include "locoh/errors.hpp"
#include "locoh/koszul.hpp"

namespace locoh {

std::string to_string(KoszulConvention c) { return c == KoszulConvention::direct ? "direct" : "inverse"; }

void KoszulSpec::validate() const {
  if (gens.empty()) throw EmptyGeneratorsError("Koszul complex needs at least one generator");
  if (power == 0) throw ValidationError("Koszul power must be positive");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Poly& g = gens[i];
    if (!(g.ring() == ring)) throw ValidationError("generator " + std::to_string(i + 1) + " lives over another ring");
    if (g.is_zero()) throw ZeroGeneratorError("generator " + std::to_string(i + 1) + " is zero");
    if (g.homogeneous_degree() <= 0)
      throw ValidationError("generator " + std::to_string(i + 1) + " '" + g.to_string() +
                            "' must have positive degree");
  }
}

int KoszulSpec::total_twist() const {
  int sum = 0;
  for (const auto& g : gens) sum += g.homogeneous_degree();
  return static_cast<int>(power) * sum;
}

KoszulSpec KoszulSpec::with_power(unsigned k) const {
  KoszulSpec s = *this;
  s.power = k;
  return s;
}

std::vector<Poly> parse_generators(const GradedRing& ring, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

namespace {

FreeComplex one_generator(const GradedRing& ring, const Poly& a, unsigned k, KoszulConvention c) {
  const int e = static_cast<int>(k) * a.homogeneous_degree();
  const FreeModule top(ring, {c == KoszulConvention::direct ? 0 : -e});
  const FreeModule bottom(ring, {c == KoszulConvention::direct ? e : 0});
  return FreeComplex(ring, {{1, top}, {0, bottom}}, {{1, GradedMap(top, bottom, {a.pow(k)})}});
}

ChainMap one_transition(const GradedRing& ring, const Poly& a, unsigned k, unsigned l, KoszulConvention c) {
  const FreeComplex src = one_generator(ring, a, k, c);
  const FreeComplex dst = one_generator(ring, a, l, c);
  const Poly one = Poly::constant(ring, 1);
  std::map<int, GradedMap> comps;
  if (c == KoszulConvention::direct) {
    comps.emplace(1, GradedMap(src.term(1), dst.term(1), {one}));
    comps.emplace(0, GradedMap(src.term(0), dst.term(0), {a.pow(l - k)}));
  } else {
    comps.emplace(1, GradedMap(src.term(1), dst.term(1), {a.pow(k - l)}));
    comps.emplace(0, GradedMap(src.term(0), dst.term(0), {one}));
  }
  return ChainMap(src, dst, std::move(comps));
}

}  // namespace

FreeComplex koszul_complex(const KoszulSpec& spec) {
  spec.validate();
  FreeComplex k = one_generator(spec.ring, spec.gens[0], spec.power, spec.convention);
  for (std::size_t i = 1; i < spec.gens.size(); ++i)
    k = tensor(k, one_generator(spec.ring, spec.gens[i], spec.power, spec.convention));
  return k;
}

ChainMap transition(const KoszulSpec& from, const KoszulSpec& to) {
  from.validate();
  to.validate();
  if (from.convention != to.convention)
    throw ConventionMismatchError("transition between " + to_string(from.convention) + " and " +
                                  to_string(to.convention) + " Koszul complexes");
  if (!(from.ring == to.ring) || from.gens != to.gens)
    throw ConventionMismatchError("transition between Koszul complexes on different sequences");
  const unsigned k = from.power, l = to.power;
  if (from.convention == KoszulConvention::direct && k > l)
    throw OrderError("direct transition needs k <= l, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
  if (from.convention == KoszulConvention::inverse && k < l)
    throw OrderError("inverse transition needs k >= l, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
  ChainMap t = one_transition(from.ring, from.gens[0], k, l, from.convention);
  for (std::size_t i = 1; i < from.gens.size(); ++i)
    t = tensor(t, one_transition(from.ring, from.gens[i], k, l, from.convention));
  return t;
}

HilbertTable koszul_homology_table(const KoszulSpec& spec, const PresentedModule& m, IndexRange range,
                                   DegreeWindow window, unsigned threads) {
  return homology_table(tensor(koszul_complex(spec), m), range, window, threads);
}

std::string SelfDualityReport::correspondence() const {
  std::ostringstream out;
  out << "H_i(K⊗M)_d ~ H_{i-n}(Hom(K,M))_{d" << (direction < 0 ? " - " : " + ") << twist << "}";
  return out.str();
}

SelfDualityReport self_duality_check(const KoszulSpec& spec, const PresentedModule& m, IndexRange range,
                                     DegreeWindow window) {
  const FreeComplex k = koszul_complex(spec);
  const int n = static_cast<int>(spec.gens.size());
  const ModuleComplex lhs = tensor(k, m);
  const ModuleComplex rhs = hom_complex(k, m);
  SelfDualityReport report;
  report.twist = spec.total_twist();
  report.direction = spec.convention == KoszulConvention::inverse ? -1 : 1;
  for (int i = range.lo; i <= range.hi; ++i)
    for (int d = window.lo; d <= window.hi; ++d) {
      const auto a = static_cast<std::int64_t>(homology_strand(lhs, i, d).dim());
      const int dp = d + report.direction * report.twist;
      const auto b = static_cast<std::int64_t>(homology_strand(rhs, i - n, dp).dim());
      report.koszul_side.set(i, d, {a, true, 0});
      report.hom_side.set(i, d, {b, true, 0});
      if (a != b) {
        report.passed = false;
        report.mismatches.emplace_back(i, d);
      }
    }
  return report;
}

namespace {

std::size_t binomial(std::size_t n, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) r = r * (n - j + 1) / j;
  return r;
}

}  // namespace

std::size_t stable_cech_rank(std::size_t n, unsigned k_max, int i) {
  const int shift = static_cast<int>(n);
  return (k_max - 1) * binomial(n, i - 1 + shift) + k_max * binomial(n, i + shift);
}

FreeComplex stable_cech_truncated(const GradedRing& ring, const std::vector<Poly>& gens, unsigned k_max) {
  if (k_max == 0) throw ValidationError("stable Čech truncation needs K_max >= 1");
  KoszulSpec spec{ring, gens, 1, KoszulConvention::direct};
  spec.validate();
  const int n = static_cast<int>(gens.size());

  std::vector<FreeComplex> stages;
  std::vector<ChainMap> phi;
  for (unsigned k = 1; k <= k_max; ++k) {
    stages.push_back(shift(koszul_complex(spec.with_power(k)), -n));
    if (k < k_max) phi.push_back(shift(transition(spec.with_power(k), spec.with_power(k + 1)), -n));
  }
  FreeComplex target = stages[0];
  for (unsigned k = 1; k < k_max; ++k) target = direct_sum(target, stages[k]);
  if (k_max == 1) return cone(ChainMap::zero(FreeComplex(ring, {}), target));
  FreeComplex source = stages[0];
  for (unsigned k = 1; k + 1 < k_max; ++k) source = direct_sum(source, stages[k]);

  std::map<int, GradedMap> theta;
  for (const auto& [i, m] : source.terms()) {
    const std::size_t r = stages[0].term(i).rank();
    const FreeModule tgt = target.term(i);
    std::vector<Poly> entries(tgt.rank() * m.rank(), Poly(ring));
    auto at = [&](std::size_t row, std::size_t col) -> Poly& { return entries[row * m.rank() + col]; };
    for (unsigned k = 0; k + 1 < k_max; ++k) {
      const GradedMap p = phi[k].component(i);
      for (std::size_t a = 0; a < r; ++a) {
        at(k * r + a, k * r + a) = Poly::constant(ring, 1);
        for (std::size_t b = 0; b < r; ++b) at((k + 1) * r + b, k * r + a) = -p.entry(b, a);
      }
    }
    theta.emplace(i, GradedMap(m, tgt, std::move(entries)));
  }
  return cone(ChainMap(std::move(source), std::move(target), std::move(theta)));
}

}  // namespace locoh
