#pragma once

#include <cstdint>
#include <vector>

#include "albu/corpus.hpp"
#include "albu/matrix.hpp"
#include "albu/posterior.hpp"

namespace albu {

struct AlbuConfig {
    int topics = 0;           // K
    double alpha = 0.5;       // symmetric topic-document prior
    double beta = 0.5;        // symmetric word-topic prior
    int max_epochs = 150;
    double tol = 1e-4;        // max absolute parameter change per epoch
    std::uint64_t seed = 0;   // symmetry-breaking initialization
};

// Loopy belief update engine over the token branches of the LDA graph.
//
// State per token (m,n): its topic-proportion vector, which is also the
// fractional count the branch last contributed to both posterior Dirichlet
// parameter sets. Each epoch runs two synchronous phases: phase 1 recomputes
// every branch's proportions against the epoch-start posteriors, cancelling
// the branch's own previous contribution first; phase 2 rebuilds the
// posteriors from the fresh increments. Aggregation order is fixed
// (document, then token) so runs are reproducible bit for bit.
class AlbuEngine {
  public:
    AlbuEngine(const Corpus& corpus, const AlbuConfig& config);

    // props is total_tokens x K row-major; rows must be on the simplex.
    void set_initial_proportions(std::vector<double> props);

    void run_epoch();

    // Adjusted topic-document parameters for branch (m,n): the branch's last
    // increment is subtracted from the current posterior row, floored at the
    // prior.
    std::vector<double> cancel_alpha(int m, int n) const;

    // Adjusted word-topic parameters for branch (m,n) at its observed word:
    // entry k is beta'' for (k, word), row_sums[k] the matching adjusted row
    // total.
    struct BetaCancel {
        std::vector<double> entries;
        std::vector<double> row_sums;
    };
    BetaCancel cancel_beta(int m, int n) const;

    int epoch() const { return epoch_; }
    double last_max_change() const { return max_change_; }
    const Matrix& alpha_post() const { return alpha_post_; }
    const Matrix& beta_post() const { return beta_post_; }
    double prior_alpha() const { return prior_alpha_; }
    double prior_beta() const { return prior_beta_; }

    // Branch bookkeeping, exposed for invariant checks.
    std::vector<double> branch_proportions(int m, int n) const;
    std::vector<double> branch_alpha_increment(int m, int n) const;
    std::vector<double> branch_beta_increment(int m, int n) const;

    PosteriorState posterior() const;

  private:
    int branch_index(int m, int n) const;

    const Corpus* corpus_;
    int topics_;
    double prior_alpha_;
    double prior_beta_;
    long long total_tokens_;

    std::vector<int> doc_offset_;   // branch index of each document's first token
    std::vector<int> token_word_;   // observed word per branch

    Matrix alpha_post_;             // M x K
    Matrix beta_post_;              // K x V
    std::vector<double> beta_row_sums_;

    // Proportions double as the last-sent increments once an epoch has run.
    std::vector<double> props_;     // total_tokens x K

    int epoch_ = 0;
    double max_change_ = 0.0;
};

// Normalized message from the topic-document side: p(Z=k) given adjusted
// parameters.
std::vector<double> z_prior_message(const std::vector<double>& alpha_adjusted);

// Branch topic proportions: elementwise product of the Z prior and the
// word-topic ratios, normalized over topics. Throws DegenerateStateError when
// the product vanishes everywhere.
std::vector<double> topic_proportions(const std::vector<double>& z_prior,
                                      const std::vector<double>& beta_ratios);

// Fractional count from scaling the adjusted parameters by a message's topic
// coefficients, normalized over topics. Fed the word-side ratio message this
// equals the branch's posterior proportions, which is what each branch adds
// to its document's alpha row.
std::vector<double> alpha_increment(const std::vector<double>& proportions,
                                    const std::vector<double>& alpha_adjusted);

// Per-branch symmetric Dirichlet(1) draws used to break the initial topic
// symmetry; total_tokens x K row-major.
std::vector<double> draw_initial_proportions(long long total_tokens, int topics,
                                             std::uint64_t seed);

// Runs epochs until max_epochs or until the largest parameter change drops
// below tol.
PosteriorState fit(const Corpus& corpus, const AlbuConfig& config);

// Exact (non-conjugate) message from a token's topic factor to its document's
// mixture, tabulated on a simplex grid for K = 2 or 3. The tabulation
// carries midpoint-rule weights so sum(values * weights) approximates the
// total mass (1 for a proper density).
struct ThetaMessageGrid {
    int dimension = 0;
    std::vector<std::vector<double>> points;  // simplex coordinates
    std::vector<double> values;
    std::vector<double> weights;
};

double exact_theta_message_density(const std::vector<double>& alpha_adjusted,
                                   const std::vector<double>& proportions,
                                   const std::vector<double>& theta);

ThetaMessageGrid exact_theta_message_diagnostic(const std::vector<double>& alpha_adjusted,
                                                const std::vector<double>& proportions,
                                                int grid_cells);

}  // namespace albu
