#include <cmath>
#include <random>

#include <doctest.h>

#include "albu/gibbs.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using albu::Corpus;
using albu::GibbsConfig;
using albu::GibbsSampler;
using test_helpers::make_corpus;

namespace {

GibbsConfig config_of(int topics, double prior, int burn_in, int samples,
                      std::uint64_t seed) {
    GibbsConfig config;
    config.topics = topics;
    config.alpha = prior;
    config.beta = prior;
    config.burn_in = burn_in;
    config.samples = samples;
    config.seed = seed;
    return config;
}

void check_count_invariants(const GibbsSampler& sampler, const Corpus& corpus) {
    const int topics = sampler.topics();
    const auto& n_mk = sampler.doc_topic_counts();
    const auto& n_kv = sampler.topic_word_counts();
    const auto& n_k = sampler.topic_totals();
    for (int m = 0; m < corpus.num_documents(); ++m) {
        int total = 0;
        for (int k = 0; k < topics; ++k) {
            CHECK(n_mk[m * topics + k] >= 0);
            total += n_mk[m * topics + k];
        }
        CHECK(total == corpus.documents[m].length());
    }
    for (int k = 0; k < topics; ++k) {
        int row = 0;
        for (int v = 0; v < corpus.vocab_size(); ++v) {
            CHECK(n_kv[k * corpus.vocab_size() + v] >= 0);
            row += n_kv[k * corpus.vocab_size() + v];
        }
        CHECK(row == n_k[k]);
    }
}

}  // namespace

TEST_SUITE("gibbs") {

TEST_CASE("conditional is uniform when all counts are zero") {
    const Corpus corpus = make_corpus(2, {{0}});
    GibbsSampler sampler(corpus, config_of(2, 1.0, 1, 1, 4));
    sampler.remove_token(0, 0);  // leaves every count at zero
    for (int v = 0; v < 2; ++v) {
        const auto p = sampler.conditional(0, v);
        CHECK(p[0] == doctest::Approx(0.5));
        CHECK(p[1] == doctest::Approx(0.5));
    }
    sampler.assign_token(0, 0, 0);
}

TEST_CASE("conditional matches the hand-computed collapsed formula") {
    // K=2, V=2, n_mk[m]=(1,0), n_kv[.,v]=(1,0), n_k=(1,0), alpha=beta=1:
    // weights (2*2/3, 1*1/2) = (4/3, 1/2) -> (8/11, 3/11).
    const Corpus corpus = make_corpus(2, {{0, 0}});
    GibbsSampler sampler(corpus, config_of(2, 1.0, 1, 1, 0));
    sampler.remove_token(0, 0);
    sampler.remove_token(0, 1);
    sampler.assign_token(0, 0, 0);  // state: one word-0 token in topic 0
    const auto p = sampler.conditional(0, 0);
    CHECK(p[0] == doctest::Approx(8.0 / 11.0).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(3.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("conditional increases with the topic-word count") {
    const Corpus corpus = make_corpus(2, {{0, 0, 1}});
    GibbsSampler sampler(corpus, config_of(2, 1.0, 1, 1, 0));
    for (int n = 0; n < 3; ++n) sampler.remove_token(0, n);

    sampler.assign_token(0, 2, 0);  // word 1 in topic 0
    const double before = sampler.conditional(0, 0)[0];
    sampler.assign_token(0, 1, 0);  // add a word-0 count to topic 0
    sampler.remove_token(0, 2);     // keep n_mk and n_k unchanged
    const double after = sampler.conditional(0, 0)[0];
    CHECK(after > before);
}

TEST_CASE("count invariants hold after every sweep") {
    std::mt19937_64 rng(99);
    const Corpus corpus = make_corpus(
        5, {{0, 1, 2, 3, 4}, {1, 1, 3}, {4, 2, 0, 0}, {3}});
    GibbsSampler sampler(corpus, config_of(3, 0.5, 1, 1, 17));
    check_count_invariants(sampler, corpus);
    for (int s = 0; s < 20; ++s) {
        sampler.sweep();
        check_count_invariants(sampler, corpus);
    }
}

TEST_CASE("same seed gives an identical trajectory") {
    const Corpus corpus = make_corpus(4, {{0, 1, 2}, {3, 0}});
    GibbsSampler a(corpus, config_of(2, 0.5, 1, 1, 11));
    GibbsSampler b(corpus, config_of(2, 0.5, 1, 1, 11));
    for (int s = 0; s < 50; ++s) {
        a.sweep();
        b.sweep();
        CHECK(a.assignments() == b.assignments());
    }
}

TEST_CASE("single-token assignment frequencies match the conditional") {
    // With one token the conditional after decrement is uniform (all counts
    // zero). Chi-square against uniform over many sweeps.
    const Corpus corpus = make_corpus(2, {{0}});
    GibbsSampler sampler(corpus, config_of(2, 0.7, 1, 1, 23));
    const int sweeps = 20000;
    int count0 = 0;
    for (int s = 0; s < sweeps; ++s) {
        sampler.sweep();
        if (sampler.assignments()[0] == 0) ++count0;
    }
    const double expected = sweeps / 2.0;
    const double chi2 = (count0 - expected) * (count0 - expected) / expected +
                        ((sweeps - count0) - expected) * ((sweeps - count0) - expected) /
                            expected;
    CHECK(chi2 < 10.83);  // 99.9th percentile, 1 dof
}

TEST_CASE("fit with samples=1 equals one sweep's counts plus priors") {
    const Corpus corpus = make_corpus(3, {{0, 1}, {2, 2}});
    GibbsConfig config = config_of(2, 0.5, 3, 1, 31);
    const albu::PosteriorState state = albu::gibbs_fit(corpus, config);

    GibbsSampler replay(corpus, config);
    for (int i = 0; i < config.burn_in + 1; ++i) replay.sweep();
    for (int m = 0; m < corpus.num_documents(); ++m)
        for (int k = 0; k < 2; ++k)
            CHECK(state.alpha_post(m, k) ==
                  doctest::Approx(0.5 + replay.doc_topic_counts()[m * 2 + k]));
    for (int k = 0; k < 2; ++k)
        for (int v = 0; v < 3; ++v)
            CHECK(state.beta_post(k, v) ==
                  doctest::Approx(0.5 + replay.topic_word_counts()[k * 3 + v]));
    CHECK(state.algorithm == "gibbs");
    CHECK(state.epochs_run == 4);
}

TEST_CASE("defaults follow the published run protocol") {
    const GibbsConfig config;
    CHECK(config.burn_in == 2000);
    CHECK(config.samples == 5000);
    CHECK_FALSE(config.final_sample);
}

TEST_CASE("final_sample reports the last sweep's counts plus priors") {
    const Corpus corpus = make_corpus(3, {{0, 1, 2}, {1, 1}});
    GibbsConfig config = config_of(2, 0.5, 4, 3, 13);
    config.final_sample = true;
    const albu::PosteriorState state = albu::gibbs_fit(corpus, config);

    GibbsSampler replay(corpus, config);
    for (int i = 0; i < config.burn_in + config.samples; ++i) replay.sweep();
    for (int m = 0; m < corpus.num_documents(); ++m)
        for (int k = 0; k < 2; ++k)
            CHECK(state.alpha_post(m, k) ==
                  doctest::Approx(0.5 + replay.doc_topic_counts()[m * 2 + k]));
    for (int k = 0; k < 2; ++k)
        for (int v = 0; v < 3; ++v)
            CHECK(state.beta_post(k, v) ==
                  doctest::Approx(0.5 + replay.topic_word_counts()[k * 3 + v]));
}

TEST_CASE("tiny corpus posterior mean matches exact enumeration") {
    // Large priors keep the count-averaged estimate (a ratio of expected
    // counts) close to the exact expectation of the ratio.
    const Corpus corpus = make_corpus(3, {{0, 0}, {0, 1}});
    const double prior = 3.0;
    const auto exact = oracles::enumerate_lda_posterior(corpus, 2, prior, prior);

    GibbsConfig config = config_of(2, prior, 2000, 20000, 5);
    const albu::PosteriorState state = albu::gibbs_fit(corpus, config);
    const albu::Matrix learnt = albu::topic_means(state);

    for (int k = 0; k < 2; ++k) {
        double l1 = 0.0;
        for (int v = 0; v < 3; ++v) l1 += std::abs(learnt(k, v) - exact.phi_mean(k, v));
        CHECK(l1 <= 0.02);
    }
}

TEST_CASE("config validation") {
    const Corpus corpus = make_corpus(2, {{0, 1}});
    CHECK_THROWS_AS(albu::gibbs_fit(corpus, config_of(1, 0.5, 10, 10, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(albu::gibbs_fit(corpus, config_of(2, -0.5, 10, 10, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(albu::gibbs_fit(corpus, config_of(2, 0.5, 0, 10, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(albu::gibbs_fit(corpus, config_of(2, 0.5, 10, 0, 0)),
                    std::invalid_argument);
}

}  // TEST_SUITE
