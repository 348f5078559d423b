#include "circrob/gen.hpp"

namespace circrob {

namespace {

double param_or(const GeneratorSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

DissimilarityMatrix<double> circle_from_spec(const GeneratorSpec& spec, CircleMetric metric) {
  const double jitter = param_or(spec, "jitter", 0.0);
  if (jitter > 0.0) {
    return circle_instance<double>(spec.n, metric, jittered_angles(spec.n, jitter, spec.seed));
  }
  return circle_instance<double>(spec.n, metric);
}

}  // namespace

DissimilarityMatrix<double> generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw InputError("generator needs n >= 1");
  if (!(spec.epsilon >= 0.0)) throw InputError("epsilon must be nonnegative");

  if (spec.kind == "perturbed") {
    return perturb(circle_instance<double>(spec.n, CircleMetric::Chord), spec.epsilon, spec.seed);
  }

  DissimilarityMatrix<double> d;
  if (spec.kind == "circle-arc") {
    d = circle_from_spec(spec, CircleMetric::Arc);
  } else if (spec.kind == "circle-chord") {
    d = circle_from_spec(spec, CircleMetric::Chord);
  } else if (spec.kind == "two-cluster") {
    const double k = param_or(spec, "k", static_cast<double>(spec.n / 2));
    if (!(k >= 2.0) || k + 2.0 > static_cast<double>(spec.n)) {
      throw InputError("two-cluster needs 2 <= k <= n - 2");
    }
    const auto kk = static_cast<Index>(k);
    d = two_cluster_instance<double>(kk, spec.n - kk, spec.seed);
  } else if (spec.kind == "fixture") {
    if (spec.n != 4) throw InputError("the fixture has exactly 4 points");
    d = counterexample_fixture<double>();
  } else {
    throw InputError("unknown generator kind '" + spec.kind + "'");
  }
  return spec.epsilon > 0.0 ? perturb(d, spec.epsilon, spec.seed) : d;
}

}  // namespace circrob
