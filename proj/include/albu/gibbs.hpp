#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "albu/corpus.hpp"
#include "albu/posterior.hpp"

namespace albu {

struct GibbsConfig {
    int topics = 0;
    double alpha = 0.1;
    double beta = 0.1;
    int burn_in = 2000;
    int samples = 5000;
    std::uint64_t seed = 0;
    // false: average the count matrices over the sampling sweeps (low
    // variance). true: keep only the final sweep's counts, the estimate the
    // reference implementation reports.
    bool final_sample = false;
};

// Collapsed Gibbs sampler. Tokens are visited in document order and
// resampled one at a time from the standard collapsed conditional.
class GibbsSampler {
  public:
    GibbsSampler(const Corpus& corpus, const GibbsConfig& config);

    // p(k) for a token of word v in document m, computed from the current
    // counts; the caller is responsible for having decremented the token's
    // own assignment first.
    std::vector<double> conditional(int m, int v) const;

    // Count bookkeeping for one token: remove_token drops its current
    // assignment from the counts, assign_token sets a new one.
    void remove_token(int m, int n);
    void assign_token(int m, int n, int k);

    void sweep();

    const std::vector<int>& assignments() const { return z_; }
    const std::vector<int>& doc_topic_counts() const { return n_mk_; }   // M x K
    const std::vector<int>& topic_word_counts() const { return n_kv_; }  // K x V
    const std::vector<int>& topic_totals() const { return n_k_; }

    int topics() const { return topics_; }

  private:
    const Corpus* corpus_;
    int topics_;
    double alpha_, beta_;
    std::vector<int> doc_offset_;
    std::vector<int> token_word_;
    std::vector<int> z_;
    std::vector<int> n_mk_, n_kv_, n_k_;
    std::mt19937_64 rng_;
    mutable std::vector<double> weights_;
};

// burn_in sweeps, then `samples` sweeps whose count matrices are averaged:
// alpha_post = alpha + mean(n_mk), beta_post = beta + mean(n_kv).
PosteriorState gibbs_fit(const Corpus& corpus, const GibbsConfig& config);

}  // namespace albu
