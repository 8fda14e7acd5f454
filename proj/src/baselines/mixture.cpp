#include "lrtag/baselines/mixture.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "lrtag/error.hpp"

namespace lrtag {

int MixtureModel::cluster_of(std::string_view type) const {
  auto it = std::lower_bound(types.begin(), types.end(), type);
  if (it == types.end() || *it != type) return -1;
  return assignment[static_cast<std::size_t>(it - types.begin())];
}

namespace {

double log_sum_exp(const std::vector<double>& v) {
  const double m = *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

MixtureModel fit_mixture(const TypeFeatures& features, const MixtureOptions& options) {
  const std::size_t K = options.clusters;
  const std::size_t T = features.types.size();
  const std::size_t D = features.dimension;
  if (K < 2) throw UsageError("mixture needs at least 2 clusters");
  if (T < K) {
    throw UsageError("mixture needs at least " + std::to_string(K) + " word types, got " +
                     std::to_string(T));
  }
  if (options.iterations < 1) throw UsageError("mixture needs at least one EM iteration");
  if (!(options.alpha > 0.0)) throw UsageError("mixture smoothing alpha must be positive");
  const double alpha = options.alpha;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> resp(T, std::vector<double>(K));
  for (auto& r : resp) {
    double z = 0.0;
    for (auto& x : r) z += (x = unit(rng) + 1e-3);
    for (auto& x : r) x /= z;
  }

  MixtureModel m;
  m.clusters = K;
  m.types = features.types;
  m.priors.assign(K, 0.0);
  m.multinomials.assign(K, std::vector<double>(D, 0.0));
  std::vector<std::vector<double>> log_theta(K, std::vector<double>(D));
  std::vector<double> log_prior(K);
  std::vector<double> scores(K);

  for (int iter = 0; iter < options.iterations; ++iter) {
    // M-step: posterior mode under a symmetric Dirichlet(alpha + 1).
    std::vector<double> mass(K, 0.0);
    for (auto& row : m.multinomials) std::fill(row.begin(), row.end(), alpha);
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t k = 0; k < K; ++k) {
        mass[k] += resp[t][k];
        for (const auto& [f, x] : features.counts[t]) m.multinomials[k][f] += resp[t][k] * x;
      }
    }
    for (std::size_t k = 0; k < K; ++k) {
      m.priors[k] = (mass[k] + alpha) / (static_cast<double>(T) + alpha * static_cast<double>(K));
      log_prior[k] = std::log(m.priors[k]);
      double z = 0.0;
      for (double x : m.multinomials[k]) z += x;
      for (std::size_t f = 0; f < D; ++f) {
        m.multinomials[k][f] /= z;
        log_theta[k][f] = std::log(m.multinomials[k][f]);
      }
    }

    // E-step.
    double data_ll = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t k = 0; k < K; ++k) {
        double s = log_prior[k];
        for (const auto& [f, x] : features.counts[t]) s += x * log_theta[k][f];
        scores[k] = s;
      }
      const double lse = log_sum_exp(scores);
      data_ll += lse;
      for (std::size_t k = 0; k < K; ++k) resp[t][k] = std::exp(scores[k] - lse);
    }
    double log_prior_mass = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      log_prior_mass += alpha * log_prior[k];
      for (std::size_t f = 0; f < D; ++f) log_prior_mass += alpha * log_theta[k][f];
    }
    m.log_likelihood_trace.push_back(data_ll);
    m.objective_trace.push_back(data_ll + log_prior_mass);
  }

  m.assignment.resize(T);
  for (std::size_t t = 0; t < T; ++t) {
    m.assignment[t] =
        static_cast<int>(std::max_element(resp[t].begin(), resp[t].end()) - resp[t].begin());
  }
  return m;
}

ClusterTagMap map_clusters_to_tags(const MixtureModel& model, const Corpus& corpus,
                                   const MonolingualTagDictionary& monolingual) {
  std::vector<std::array<std::uint64_t, kTagCount>> votes(model.clusters);
  for (auto& v : votes) v.fill(0);
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s.tokens) {
      const int c = model.cluster_of(t.surface);
      if (c < 0) continue;
      for (PosTag tag : monolingual.tags(t.surface).tags()) ++votes[c][index_of(tag)];
    }
  }
  ClusterTagMap map;
  map.tags.reserve(model.clusters);
  for (const auto& v : votes) {
    auto best = std::max_element(v.begin(), v.end());
    map.tags.push_back(*best == 0 ? PosTag::NOUN
                                  : tag_at(static_cast<std::size_t>(best - v.begin())));
  }
  return map;
}

void write_cluster_assignments(std::ostream& out, const MixtureModel& model,
                               const ClusterTagMap& map) {
  for (std::size_t t = 0; t < model.types.size(); ++t) {
    const int c = model.assignment[t];
    out << model.types[t] << '\t' << c << '\t' << tag_name(map.tags.at(c)) << '\n';
  }
}

}  // namespace lrtag
