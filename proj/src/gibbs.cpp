#include "albu/gibbs.hpp"

#include <chrono>
#include <stdexcept>

namespace albu {

namespace {

void validate(const Corpus& corpus, const GibbsConfig& config) {
    if (config.topics < 2) throw std::invalid_argument("gibbs: need at least 2 topics");
    if (config.alpha <= 0.0 || config.beta <= 0.0)
        throw std::invalid_argument("gibbs: priors must be positive");
    if (config.burn_in < 1 || config.samples < 1)
        throw std::invalid_argument("gibbs: burn_in and samples must be >= 1");
    if (corpus.num_documents() < 1) throw std::invalid_argument("gibbs: empty corpus");
}

}  // namespace

GibbsSampler::GibbsSampler(const Corpus& corpus, const GibbsConfig& config)
    : corpus_(&corpus),
      topics_(config.topics),
      alpha_(config.alpha),
      beta_(config.beta),
      rng_(config.seed),
      weights_(config.topics) {
    validate(corpus, config);
    const int num_docs = corpus.num_documents();
    const int vocab = corpus.vocab_size();

    doc_offset_.reserve(num_docs + 1);
    int offset = 0;
    for (const auto& doc : corpus.documents) {
        doc_offset_.push_back(offset);
        offset += doc.length();
    }
    doc_offset_.push_back(offset);
    for (const auto& doc : corpus.documents)
        token_word_.insert(token_word_.end(), doc.tokens.begin(), doc.tokens.end());

    n_mk_.assign(static_cast<std::size_t>(num_docs) * topics_, 0);
    n_kv_.assign(static_cast<std::size_t>(topics_) * vocab, 0);
    n_k_.assign(topics_, 0);

    z_.resize(token_word_.size());
    std::uniform_int_distribution<int> pick(0, topics_ - 1);
    for (int m = 0; m < num_docs; ++m) {
        for (int t = doc_offset_[m]; t < doc_offset_[m + 1]; ++t) {
            const int k = pick(rng_);
            z_[t] = k;
            ++n_mk_[static_cast<std::size_t>(m) * topics_ + k];
            ++n_kv_[static_cast<std::size_t>(k) * corpus_->vocab_size() + token_word_[t]];
            ++n_k_[k];
        }
    }
}

std::vector<double> GibbsSampler::conditional(int m, int v) const {
    const int vocab = corpus_->vocab_size();
    const double beta_total = beta_ * vocab;
    std::vector<double> p(topics_);
    double total = 0.0;
    for (int k = 0; k < topics_; ++k) {
        p[k] = (n_mk_[static_cast<std::size_t>(m) * topics_ + k] + alpha_) *
               (n_kv_[static_cast<std::size_t>(k) * vocab + v] + beta_) /
               (n_k_[k] + beta_total);
        total += p[k];
    }
    for (double& x : p) x /= total;
    return p;
}

void GibbsSampler::remove_token(int m, int n) {
    const int t = doc_offset_[m] + n;
    const int k = z_[t];
    --n_mk_[static_cast<std::size_t>(m) * topics_ + k];
    --n_kv_[static_cast<std::size_t>(k) * corpus_->vocab_size() + token_word_[t]];
    --n_k_[k];
}

void GibbsSampler::assign_token(int m, int n, int k) {
    const int t = doc_offset_[m] + n;
    z_[t] = k;
    ++n_mk_[static_cast<std::size_t>(m) * topics_ + k];
    ++n_kv_[static_cast<std::size_t>(k) * corpus_->vocab_size() + token_word_[t]];
    ++n_k_[k];
}

void GibbsSampler::sweep() {
    const int num_docs = corpus_->num_documents();
    const int vocab = corpus_->vocab_size();
    const double beta_total = beta_ * vocab;
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (int m = 0; m < num_docs; ++m) {
        int* doc_counts = n_mk_.data() + static_cast<std::size_t>(m) * topics_;
        for (int t = doc_offset_[m]; t < doc_offset_[m + 1]; ++t) {
            const int v = token_word_[t];
            const int old_k = z_[t];
            --doc_counts[old_k];
            --n_kv_[static_cast<std::size_t>(old_k) * vocab + v];
            --n_k_[old_k];

            double total = 0.0;
            for (int k = 0; k < topics_; ++k) {
                total += (doc_counts[k] + alpha_) *
                         (n_kv_[static_cast<std::size_t>(k) * vocab + v] + beta_) /
                         (n_k_[k] + beta_total);
                weights_[k] = total;
            }
            const double u = unif(rng_) * total;
            int k_new = 0;
            while (k_new < topics_ - 1 && weights_[k_new] < u) ++k_new;

            z_[t] = k_new;
            ++doc_counts[k_new];
            ++n_kv_[static_cast<std::size_t>(k_new) * vocab + v];
            ++n_k_[k_new];
        }
    }
}

PosteriorState gibbs_fit(const Corpus& corpus, const GibbsConfig& config) {
    validate(corpus, config);
    const auto start = std::chrono::steady_clock::now();

    GibbsSampler sampler(corpus, config);
    for (int i = 0; i < config.burn_in; ++i) sampler.sweep();

    const int num_docs = corpus.num_documents();
    const int vocab = corpus.vocab_size();
    std::vector<double> sum_mk(static_cast<std::size_t>(num_docs) * config.topics, 0.0);
    std::vector<double> sum_kv(static_cast<std::size_t>(config.topics) * vocab, 0.0);
    for (int s = 0; s < config.samples; ++s) {
        sampler.sweep();
        if (config.final_sample && s + 1 < config.samples) continue;
        const auto& mk = sampler.doc_topic_counts();
        const auto& kv = sampler.topic_word_counts();
        for (std::size_t i = 0; i < sum_mk.size(); ++i) sum_mk[i] += mk[i];
        for (std::size_t i = 0; i < sum_kv.size(); ++i) sum_kv[i] += kv[i];
    }
    const double denom = config.final_sample ? 1.0 : config.samples;

    PosteriorState state;
    state.alpha_post = Matrix(num_docs, config.topics);
    state.beta_post = Matrix(config.topics, vocab);
    for (std::size_t i = 0; i < sum_mk.size(); ++i)
        state.alpha_post.data[i] = config.alpha + sum_mk[i] / denom;
    for (std::size_t i = 0; i < sum_kv.size(); ++i)
        state.beta_post.data[i] = config.beta + sum_kv[i] / denom;
    state.prior_alpha = config.alpha;
    state.prior_beta = config.beta;
    state.epochs_run = config.burn_in + config.samples;
    state.converged = true;
    state.algorithm = "gibbs";
    state.seed = config.seed;
    state.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return state;
}

}  // namespace albu
