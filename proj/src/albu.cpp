#include "albu/albu.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "albu/dirichlet.hpp"
#include "albu/errors.hpp"

namespace albu {

namespace {

void validate(const Corpus& corpus, const AlbuConfig& config) {
    if (config.topics < 2) throw std::invalid_argument("albu: need at least 2 topics");
    if (config.alpha <= 0.0 || config.beta <= 0.0)
        throw std::invalid_argument("albu: priors must be positive");
    if (config.max_epochs < 1) throw std::invalid_argument("albu: max_epochs must be >= 1");
    if (config.tol < 0.0) throw std::invalid_argument("albu: tol must be >= 0");
    if (corpus.num_documents() < 1) throw std::invalid_argument("albu: empty corpus");
    for (const auto& doc : corpus.documents)
        if (doc.tokens.empty()) throw std::invalid_argument("albu: empty document");
}

}  // namespace

AlbuEngine::AlbuEngine(const Corpus& corpus, const AlbuConfig& config)
    : corpus_(&corpus),
      topics_(config.topics),
      prior_alpha_(config.alpha),
      prior_beta_(config.beta),
      total_tokens_(corpus.total_tokens()),
      alpha_post_(corpus.num_documents(), config.topics, config.alpha),
      beta_post_(config.topics, corpus.vocab_size(), config.beta) {
    validate(corpus, config);

    doc_offset_.reserve(corpus.num_documents() + 1);
    int offset = 0;
    for (const auto& doc : corpus.documents) {
        doc_offset_.push_back(offset);
        offset += doc.length();
    }
    doc_offset_.push_back(offset);

    token_word_.reserve(total_tokens_);
    for (const auto& doc : corpus.documents)
        token_word_.insert(token_word_.end(), doc.tokens.begin(), doc.tokens.end());

    beta_row_sums_.assign(topics_, prior_beta_ * corpus.vocab_size());

    const std::size_t n = static_cast<std::size_t>(total_tokens_) * topics_;
    props_.assign(n, 1.0 / topics_);
}

int AlbuEngine::branch_index(int m, int n) const {
    return doc_offset_[m] + n;
}

void AlbuEngine::set_initial_proportions(std::vector<double> props) {
    if (props.size() != props_.size())
        throw std::invalid_argument("albu: initial proportions must be total_tokens x K");
    props_ = std::move(props);
}

std::vector<double> AlbuEngine::cancel_alpha(int m, int n) const {
    const int t = branch_index(m, n);
    std::vector<double> out(topics_);
    const double* inc = props_.data() + static_cast<std::size_t>(t) * topics_;
    for (int k = 0; k < topics_; ++k) {
        double v = alpha_post_(m, k) - (epoch_ > 0 ? inc[k] : 0.0);
        if (v < prior_alpha_) v = prior_alpha_;
        if (v < kPositivityFloor) v = kPositivityFloor;
        out[k] = v;
    }
    return out;
}

AlbuEngine::BetaCancel AlbuEngine::cancel_beta(int m, int n) const {
    const int t = branch_index(m, n);
    const int v = token_word_[t];
    BetaCancel out;
    out.entries.resize(topics_);
    out.row_sums.resize(topics_);
    const double* inc = props_.data() + static_cast<std::size_t>(t) * topics_;
    for (int k = 0; k < topics_; ++k) {
        const double last = epoch_ > 0 ? inc[k] : 0.0;
        double e = beta_post_(k, v) - last;
        if (e < prior_beta_) e = prior_beta_;
        if (e < kPositivityFloor) e = kPositivityFloor;
        out.entries[k] = e;
        double s = beta_row_sums_[k] - last;
        if (s < kPositivityFloor) s = kPositivityFloor;
        out.row_sums[k] = s;
    }
    return out;
}

void AlbuEngine::run_epoch() {
    const int num_docs = corpus_->num_documents();
    const int vocab = corpus_->vocab_size();
    const int K = topics_;

    Matrix new_alpha(num_docs, K, prior_alpha_);
    Matrix new_beta(K, vocab, prior_beta_);

    std::vector<double> proportions(K);

    for (int m = 0; m < num_docs; ++m) {
        const int doc_len = doc_offset_[m + 1] - doc_offset_[m];
        for (int n = 0; n < doc_len; ++n) {
            const int t = branch_index(m, n);
            const std::size_t base = static_cast<std::size_t>(t) * K;
            const int v = token_word_[t];

            if (epoch_ == 0) {
                // First epoch: the messages are uninformative, so the branch
                // proportions are whatever initialization was injected.
                for (int k = 0; k < K; ++k) proportions[k] = props_[base + k];
            } else {
                // Both increments a branch sent last epoch equal its stored
                // proportions, so cancellation subtracts props_ everywhere.
                const double* inc = props_.data() + base;
                double alpha_total = 0.0;
                for (int k = 0; k < K; ++k) {
                    double a = alpha_post_(m, k) - inc[k];
                    if (a < prior_alpha_) a = prior_alpha_;
                    proportions[k] = a;  // stash adjusted alpha
                    alpha_total += a;
                }
                double prop_total = 0.0;
                for (int k = 0; k < K; ++k) {
                    double entry = beta_post_(k, v) - inc[k];
                    if (entry < prior_beta_) entry = prior_beta_;
                    double row = beta_row_sums_[k] - inc[k];
                    if (row < kPositivityFloor) row = kPositivityFloor;
                    const double z_prior = proportions[k] / alpha_total;
                    proportions[k] = z_prior * (entry / row);
                    prop_total += proportions[k];
                }
                if (prop_total <= 0.0)
                    throw DegenerateStateError("albu: all-zero branch message product");
                for (int k = 0; k < K; ++k) proportions[k] /= prop_total;
            }

            // The fractional count a branch adds is its proportion vector, on
            // both the alpha and the beta side; sampling assignments from the
            // branch posterior and averaging the counts gives the same thing.
            double* p_out = props_.data() + base;
            for (int k = 0; k < K; ++k) {
                p_out[k] = proportions[k];
                new_alpha(m, k) += proportions[k];
                new_beta(k, v) += proportions[k];
            }
        }
    }

    double max_change = 0.0;
    for (std::size_t i = 0; i < new_alpha.data.size(); ++i) {
        const double d = std::abs(new_alpha.data[i] - alpha_post_.data[i]);
        if (d > max_change) max_change = d;
    }
    for (std::size_t i = 0; i < new_beta.data.size(); ++i) {
        const double d = std::abs(new_beta.data[i] - beta_post_.data[i]);
        if (d > max_change) max_change = d;
    }

    alpha_post_ = std::move(new_alpha);
    beta_post_ = std::move(new_beta);
    for (int k = 0; k < K; ++k) {
        double s = 0.0;
        for (int w = 0; w < vocab; ++w) s += beta_post_(k, w);
        beta_row_sums_[k] = s;
    }

    max_change_ = max_change;
    ++epoch_;
}

std::vector<double> AlbuEngine::branch_proportions(int m, int n) const {
    const std::size_t base = static_cast<std::size_t>(branch_index(m, n)) * topics_;
    return {props_.begin() + base, props_.begin() + base + topics_};
}

std::vector<double> AlbuEngine::branch_alpha_increment(int m, int n) const {
    if (epoch_ == 0) return std::vector<double>(topics_, 0.0);
    return branch_proportions(m, n);
}

std::vector<double> AlbuEngine::branch_beta_increment(int m, int n) const {
    return branch_alpha_increment(m, n);
}

PosteriorState AlbuEngine::posterior() const {
    PosteriorState state;
    state.alpha_post = alpha_post_;
    state.beta_post = beta_post_;
    state.prior_alpha = prior_alpha_;
    state.prior_beta = prior_beta_;
    state.epochs_run = epoch_;
    state.algorithm = "albu";
    return state;
}

std::vector<double> z_prior_message(const std::vector<double>& alpha_adjusted) {
    for (double a : alpha_adjusted)
        if (a <= 0.0) throw std::invalid_argument("z_prior_message: parameters must be positive");
    return mean(alpha_adjusted);
}

std::vector<double> topic_proportions(const std::vector<double>& z_prior,
                                      const std::vector<double>& beta_ratios) {
    if (z_prior.size() != beta_ratios.size())
        throw std::invalid_argument("topic_proportions: dimension mismatch");
    std::vector<double> out(z_prior.size());
    double total = 0.0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = z_prior[k] * beta_ratios[k];
        total += out[k];
    }
    if (total <= 0.0) throw DegenerateStateError("topic_proportions: all products zero");
    for (double& x : out) x /= total;
    return out;
}

std::vector<double> alpha_increment(const std::vector<double>& proportions,
                                    const std::vector<double>& alpha_adjusted) {
    if (proportions.size() != alpha_adjusted.size())
        throw std::invalid_argument("alpha_increment: dimension mismatch");
    std::vector<double> out(proportions.size());
    double total = 0.0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = proportions[k] * alpha_adjusted[k];
        total += out[k];
    }
    if (total <= 0.0) throw DegenerateStateError("alpha_increment: zero denominator");
    for (double& x : out) x /= total;
    return out;
}

std::vector<double> draw_initial_proportions(long long total_tokens, int topics,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> init(static_cast<std::size_t>(total_tokens) * topics);
    for (std::size_t t = 0; t < init.size(); t += topics) {
        double total = 0.0;
        for (int k = 0; k < topics; ++k) {
            init[t + k] = exp1(rng);
            total += init[t + k];
        }
        for (int k = 0; k < topics; ++k) init[t + k] /= total;
    }
    return init;
}

PosteriorState fit(const Corpus& corpus, const AlbuConfig& config) {
    validate(corpus, config);
    const auto start = std::chrono::steady_clock::now();
    AlbuEngine engine(corpus, config);

    // Without a randomized start every topic stays identical under symmetric
    // priors.
    engine.set_initial_proportions(
        draw_initial_proportions(corpus.total_tokens(), config.topics, config.seed));

    bool converged = false;
    while (engine.epoch() < config.max_epochs) {
        engine.run_epoch();
        if (engine.last_max_change() < config.tol) {
            converged = true;
            break;
        }
    }

    PosteriorState state = engine.posterior();
    state.converged = converged;
    state.seed = config.seed;
    state.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return state;
}

double exact_theta_message_density(const std::vector<double>& alpha_adjusted,
                                   const std::vector<double>& proportions,
                                   const std::vector<double>& theta) {
    const std::size_t K = alpha_adjusted.size();
    if (proportions.size() != K || theta.size() != K)
        throw std::invalid_argument("exact_theta_message: dimension mismatch");

    double alpha_total = 0.0, log_norm = 0.0;
    for (double a : alpha_adjusted) {
        if (a <= 0.0) throw std::invalid_argument("exact_theta_message: parameters must be positive");
        alpha_total += a;
        log_norm -= std::lgamma(a);
    }
    log_norm += std::lgamma(alpha_total);

    double log_dir = log_norm;
    for (std::size_t k = 0; k < K; ++k) {
        if (theta[k] <= 0.0) return 0.0;
        log_dir += (alpha_adjusted[k] - 1.0) * std::log(theta[k]);
    }

    double p_dot_theta = 0.0, p_dot_alpha = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        p_dot_theta += proportions[k] * theta[k];
        p_dot_alpha += proportions[k] * alpha_adjusted[k];
    }
    return std::exp(log_dir) * alpha_total * p_dot_theta / p_dot_alpha;
}

ThetaMessageGrid exact_theta_message_diagnostic(const std::vector<double>& alpha_adjusted,
                                                const std::vector<double>& proportions,
                                                int grid_cells) {
    const int K = static_cast<int>(alpha_adjusted.size());
    if (K < 2 || K > 3)
        throw std::invalid_argument("exact_theta_message_diagnostic: only K = 2 or 3 supported");
    if (grid_cells < 1)
        throw std::invalid_argument("exact_theta_message_diagnostic: grid_cells must be >= 1");

    ThetaMessageGrid grid;
    grid.dimension = K;
    const int n = grid_cells;

    if (K == 2) {
        const double w = 1.0 / n;
        for (int i = 0; i < n; ++i) {
            const double t = (i + 0.5) / n;
            std::vector<double> theta{t, 1.0 - t};
            grid.values.push_back(exact_theta_message_density(alpha_adjusted, proportions, theta));
            grid.points.push_back(std::move(theta));
            grid.weights.push_back(w);
        }
        return grid;
    }

    // K = 3: the projected simplex {x, y >= 0, x + y <= 1} split into n^2
    // congruent triangles, density evaluated at centroids.
    const double w = 0.5 / (static_cast<double>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j + i < n; ++j) {
            const double x = (3.0 * i + 1.0) / (3.0 * n);
            const double y = (3.0 * j + 1.0) / (3.0 * n);
            std::vector<double> theta{x, y, 1.0 - x - y};
            grid.values.push_back(exact_theta_message_density(alpha_adjusted, proportions, theta));
            grid.points.push_back(std::move(theta));
            grid.weights.push_back(w);
            if (j + i < n - 1) {
                const double xu = (3.0 * i + 2.0) / (3.0 * n);
                const double yu = (3.0 * j + 2.0) / (3.0 * n);
                std::vector<double> theta_u{xu, yu, 1.0 - xu - yu};
                grid.values.push_back(
                    exact_theta_message_density(alpha_adjusted, proportions, theta_u));
                grid.points.push_back(std::move(theta_u));
                grid.weights.push_back(w);
            }
        }
    }
    return grid;
}

}  // namespace albu
