#include "albu.h"

#include <cstring>
#include <exception>
#include <string>

#include "albu/albu.hpp"
#include "albu/corpus.hpp"
#include "albu/errors.hpp"
#include "albu/evaluation.hpp"
#include "albu/gibbs.hpp"
#include "albu/model_io.hpp"
#include "albu/simulator.hpp"

struct albu_corpus {
    albu::Corpus impl;
};

struct albu_ground_truth {
    albu::GroundTruth impl;
};

struct albu_model {
    albu::PosteriorState state;
    nlohmann::json config;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& message) { t_last_error = message; }

albu_status to_status(std::exception_ptr eptr) {
    try {
        std::rethrow_exception(eptr);
    } catch (const albu::ParseError& e) {
        set_error(e.what());
        return ALBU_ERR_PARSE;
    } catch (const albu::FileError& e) {
        set_error(e.what());
        return ALBU_ERR_IO;
    } catch (const albu::DegenerateStateError& e) {
        set_error(e.what());
        return ALBU_ERR_DEGENERATE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return ALBU_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ALBU_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return ALBU_ERR_INTERNAL;
    }
}

template <typename Fn>
albu_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        t_last_error.clear();
        return ALBU_OK;
    } catch (...) {
        return to_status(std::current_exception());
    }
}

albu_status require(bool ok, const char* message) {
    if (ok) return ALBU_OK;
    set_error(message);
    return ALBU_ERR_INVALID_ARGUMENT;
}

albu::SimSettings from_c(const albu_sim_settings& s) {
    albu::SimSettings out;
    out.vocab_size = s.vocab_size;
    out.regular_topics = s.regular_topics;
    out.topics_per_doc = s.topics_per_doc;
    out.doc_len = s.doc_len;
    out.num_documents = s.num_documents;
    out.alpha_gen = s.alpha_gen;
    out.beta_gen = s.beta_gen;
    out.seed = s.seed;
    return out;
}

}  // namespace

extern "C" {

const char* albu_version(void) { return "1.0.0"; }

const char* albu_last_error(void) { return t_last_error.c_str(); }

albu_status albu_corpus_load(const char* path, albu_corpus** out) {
    if (auto s = require(path && out, "corpus_load: null argument")) return s;
    return guarded([&] { *out = new albu_corpus{albu::load_corpus(path)}; });
}

albu_status albu_corpus_save(const albu_corpus* corpus, const char* path) {
    if (auto s = require(corpus && path, "corpus_save: null argument")) return s;
    return guarded([&] { albu::save_corpus(corpus->impl, path); });
}

albu_status albu_corpus_from_text(const char* text_path, const char* stopword_path,
                                  int min_doc_len, albu_corpus** out) {
    if (auto s = require(text_path && out, "corpus_from_text: null argument")) return s;
    return guarded([&] {
        std::set<std::string> stopwords;
        if (stopword_path) stopwords = albu::load_stopwords(stopword_path);
        auto lists = albu::tokenize_file(text_path, stopwords);
        *out = new albu_corpus{albu::build_corpus(lists, min_doc_len)};
    });
}

void albu_corpus_free(albu_corpus* corpus) { delete corpus; }

int albu_corpus_num_documents(const albu_corpus* corpus) {
    return corpus ? corpus->impl.num_documents() : 0;
}

int albu_corpus_vocab_size(const albu_corpus* corpus) {
    return corpus ? corpus->impl.vocab_size() : 0;
}

long long albu_corpus_total_tokens(const albu_corpus* corpus) {
    return corpus ? corpus->impl.total_tokens() : 0;
}

const char* albu_corpus_token(const albu_corpus* corpus, int id) {
    if (!corpus || id < 0 || id >= corpus->impl.vocab_size()) return nullptr;
    return corpus->impl.vocabulary.id_to_token[id].c_str();
}

albu_status albu_sim_settings_preset(const char* name, albu_sim_settings* out) {
    if (auto s = require(name && out, "sim_settings_preset: null argument")) return s;
    return guarded([&] {
        const albu::SimSettings p = albu::preset_settings(name);
        out->vocab_size = p.vocab_size;
        out->regular_topics = p.regular_topics;
        out->topics_per_doc = p.topics_per_doc;
        out->doc_len = p.doc_len;
        out->num_documents = 0;
        out->alpha_gen = p.alpha_gen;
        out->beta_gen = p.beta_gen;
        out->seed = 0;
    });
}

albu_status albu_simulate(const albu_sim_settings* settings, albu_corpus** corpus_out,
                          albu_ground_truth** truth_out) {
    if (auto s = require(settings && corpus_out && truth_out, "simulate: null argument"))
        return s;
    return guarded([&] {
        auto [corpus, truth] = albu::generate_corpus(from_c(*settings));
        *corpus_out = new albu_corpus{std::move(corpus)};
        *truth_out = new albu_ground_truth{std::move(truth)};
    });
}

albu_status albu_ground_truth_save(const albu_ground_truth* truth, const char* path) {
    if (auto s = require(truth && path, "ground_truth_save: null argument")) return s;
    return guarded([&] { albu::save_ground_truth(truth->impl, path); });
}

albu_status albu_ground_truth_load(const char* path, albu_ground_truth** out) {
    if (auto s = require(path && out, "ground_truth_load: null argument")) return s;
    return guarded([&] { *out = new albu_ground_truth{albu::load_ground_truth(path)}; });
}

void albu_ground_truth_free(albu_ground_truth* truth) { delete truth; }

int albu_ground_truth_topics(const albu_ground_truth* truth) {
    return truth ? truth->impl.settings.total_topics() : 0;
}

int albu_ground_truth_vocab_size(const albu_ground_truth* truth) {
    return truth ? truth->impl.settings.vocab_size : 0;
}

albu_status albu_fit(const albu_corpus* corpus, const albu_fit_config* config,
                     albu_model** out) {
    if (auto s = require(corpus && config && out, "fit: null argument")) return s;
    return guarded([&] {
        albu::AlbuConfig c;
        c.topics = config->topics;
        c.alpha = config->alpha;
        c.beta = config->beta;
        c.max_epochs = config->max_epochs;
        c.tol = config->tol;
        c.seed = config->seed;
        *out = new albu_model{albu::fit(corpus->impl, c), albu::config_json(c)};
    });
}

albu_status albu_fit_gibbs(const albu_corpus* corpus, const albu_gibbs_config* config,
                           albu_model** out) {
    if (auto s = require(corpus && config && out, "fit_gibbs: null argument")) return s;
    return guarded([&] {
        albu::GibbsConfig c;
        c.topics = config->topics;
        c.alpha = config->alpha;
        c.beta = config->beta;
        c.burn_in = config->burn_in;
        c.samples = config->samples;
        c.seed = config->seed;
        c.final_sample = config->final_sample != 0;
        *out = new albu_model{albu::gibbs_fit(corpus->impl, c), albu::config_json(c)};
    });
}

albu_status albu_model_save(const albu_model* model, const char* path,
                            const char* corpus_path) {
    if (auto s = require(model && path, "model_save: null argument")) return s;
    return guarded([&] {
        albu::save_model(model->state, model->config, path, corpus_path ? corpus_path : "");
    });
}

albu_status albu_model_load(const char* path, albu_model** out) {
    if (auto s = require(path && out, "model_load: null argument")) return s;
    return guarded([&] {
        albu::LoadedModel loaded = albu::load_model(path);
        *out = new albu_model{std::move(loaded.state), std::move(loaded.config)};
    });
}

void albu_model_free(albu_model* model) { delete model; }

int albu_model_topics(const albu_model* model) { return model ? model->state.topics() : 0; }

int albu_model_vocab_size(const albu_model* model) {
    return model ? model->state.vocab_size() : 0;
}

int albu_model_num_documents(const albu_model* model) {
    return model ? model->state.num_documents() : 0;
}

int albu_model_epochs_run(const albu_model* model) {
    return model ? model->state.epochs_run : 0;
}

int albu_model_converged(const albu_model* model) {
    return model && model->state.converged ? 1 : 0;
}

uint64_t albu_model_seed(const albu_model* model) { return model ? model->state.seed : 0; }

double albu_model_runtime_ms(const albu_model* model) {
    return model ? model->state.runtime_ms : 0.0;
}

const char* albu_model_algorithm(const albu_model* model) {
    return model ? model->state.algorithm.c_str() : nullptr;
}

albu_status albu_model_topic_means(const albu_model* model, double* out) {
    if (auto s = require(model && out, "model_topic_means: null argument")) return s;
    return guarded([&] {
        const albu::Matrix means = albu::topic_means(model->state);
        std::memcpy(out, means.data.data(), means.data.size() * sizeof(double));
    });
}

albu_status albu_model_doc_means(const albu_model* model, double* out) {
    if (auto s = require(model && out, "model_doc_means: null argument")) return s;
    return guarded([&] {
        const albu::Matrix means = albu::doc_means(model->state);
        std::memcpy(out, means.data.data(), means.data.size() * sizeof(double));
    });
}

albu_status albu_model_top_words(const albu_model* model, int topic, int n, int* ids_out) {
    if (auto s = require(model && ids_out, "model_top_words: null argument")) return s;
    if (auto s = require(topic >= 0 && topic < model->state.topics(),
                         "model_top_words: topic out of range"))
        return s;
    return guarded([&] {
        const auto ids = albu::top_word_ids(model->state.beta_post.row(topic), n);
        std::memcpy(ids_out, ids.data(), ids.size() * sizeof(int));
    });
}

albu_status albu_evaluate_kld(const albu_model* model, const albu_ground_truth* truth,
                              double* avg_kld_out, double* per_topic_out,
                              int* permutation_out) {
    if (auto s = require(model && truth && avg_kld_out, "evaluate_kld: null argument"))
        return s;
    return guarded([&] {
        const albu::EvalResult result =
            albu::evaluate_kld(model->state, truth->impl.phi_true);
        *avg_kld_out = result.avg_kld;
        if (per_topic_out)
            std::memcpy(per_topic_out, result.per_topic_kld.data(),
                        result.per_topic_kld.size() * sizeof(double));
        if (permutation_out)
            std::memcpy(permutation_out, result.permutation.data(),
                        result.permutation.size() * sizeof(int));
    });
}

albu_status albu_evaluate_npmi(const albu_model* model, const albu_corpus* corpus,
                               int top_n, int window, double* out) {
    if (auto s = require(model && corpus && out, "evaluate_npmi: null argument")) return s;
    return guarded([&] {
        if (model->state.vocab_size() != corpus->impl.vocab_size())
            throw std::invalid_argument("evaluate_npmi: model and corpus vocabulary differ");
        std::vector<std::vector<int>> topics;
        topics.reserve(model->state.topics());
        for (int k = 0; k < model->state.topics(); ++k)
            topics.push_back(albu::top_word_ids(model->state.beta_post.row(k), top_n));
        *out = albu::npmi_coherence(corpus->impl, topics, window);
    });
}

}  // extern "C"
