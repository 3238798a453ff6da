/* C interface to the topic-modeling core. All functions return ALBU_OK on
 * success; on failure albu_last_error() gives a thread-local message.
 * Handles are created by the library and released with the matching _free
 * call. Distinct handles may be used concurrently from different threads. */

#ifndef ALBU_H
#define ALBU_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum albu_status {
    ALBU_OK = 0,
    ALBU_ERR_INVALID_ARGUMENT = 1,
    ALBU_ERR_IO = 2,
    ALBU_ERR_PARSE = 3,
    ALBU_ERR_DEGENERATE = 4,
    ALBU_ERR_INTERNAL = 5
} albu_status;

typedef struct albu_corpus albu_corpus;
typedef struct albu_ground_truth albu_ground_truth;
typedef struct albu_model albu_model;

const char* albu_version(void);
const char* albu_last_error(void);

/* ---- corpus ---- */

/* Serialized corpus format: "V M" header, V vocabulary tokens, M lines of
 * token ids. */
albu_status albu_corpus_load(const char* path, albu_corpus** out);
albu_status albu_corpus_save(const albu_corpus* corpus, const char* path);

/* Builds a corpus from raw text, one document per line. stopword_path may be
 * NULL. Documents shorter than min_doc_len after tokenization are dropped. */
albu_status albu_corpus_from_text(const char* text_path, const char* stopword_path,
                                  int min_doc_len, albu_corpus** out);
void albu_corpus_free(albu_corpus* corpus);

int albu_corpus_num_documents(const albu_corpus* corpus);
int albu_corpus_vocab_size(const albu_corpus* corpus);
long long albu_corpus_total_tokens(const albu_corpus* corpus);
/* Borrowed pointer, valid while the corpus lives; NULL for a bad id. */
const char* albu_corpus_token(const albu_corpus* corpus, int id);

/* ---- simulation ---- */

typedef struct albu_sim_settings {
    int vocab_size;
    int regular_topics; /* total topics = regular_topics + 1 (stop-word topic) */
    int topics_per_doc;
    int doc_len;
    int num_documents;
    double alpha_gen;
    double beta_gen;
    uint64_t seed;
} albu_sim_settings;

/* Fills everything except num_documents and seed. name: "smaller" | "bigger". */
albu_status albu_sim_settings_preset(const char* name, albu_sim_settings* out);

albu_status albu_simulate(const albu_sim_settings* settings, albu_corpus** corpus_out,
                          albu_ground_truth** truth_out);
albu_status albu_ground_truth_save(const albu_ground_truth* truth, const char* path);
albu_status albu_ground_truth_load(const char* path, albu_ground_truth** out);
void albu_ground_truth_free(albu_ground_truth* truth);
int albu_ground_truth_topics(const albu_ground_truth* truth);
int albu_ground_truth_vocab_size(const albu_ground_truth* truth);

/* ---- fitting ---- */

typedef struct albu_fit_config {
    int topics;
    double alpha;
    double beta;
    int max_epochs;
    double tol; /* stop when the largest parameter change drops below tol */
    uint64_t seed;
} albu_fit_config;

typedef struct albu_gibbs_config {
    int topics;
    double alpha;
    double beta;
    int burn_in;
    int samples;
    uint64_t seed;
    /* 0: average counts over the sampling sweeps. nonzero: keep only the
     * final sweep's counts. */
    int final_sample;
} albu_gibbs_config;

albu_status albu_fit(const albu_corpus* corpus, const albu_fit_config* config,
                     albu_model** out);
albu_status albu_fit_gibbs(const albu_corpus* corpus, const albu_gibbs_config* config,
                           albu_model** out);

/* corpus_path may be NULL; when given, the model records the path and a
 * content hash of that file. */
albu_status albu_model_save(const albu_model* model, const char* path,
                            const char* corpus_path);
albu_status albu_model_load(const char* path, albu_model** out);
void albu_model_free(albu_model* model);

int albu_model_topics(const albu_model* model);
int albu_model_vocab_size(const albu_model* model);
int albu_model_num_documents(const albu_model* model);
int albu_model_epochs_run(const albu_model* model);
int albu_model_converged(const albu_model* model);
uint64_t albu_model_seed(const albu_model* model);
double albu_model_runtime_ms(const albu_model* model);
/* Borrowed pointer: "albu" or "gibbs". */
const char* albu_model_algorithm(const albu_model* model);

/* out must hold topics*vocab_size doubles (row-major). Rows are the
 * normalized word-topic means. */
albu_status albu_model_topic_means(const albu_model* model, double* out);
/* out must hold num_documents*topics doubles (row-major). */
albu_status albu_model_doc_means(const albu_model* model, double* out);
/* ids_out must hold n ints; ties broken by ascending id. */
albu_status albu_model_top_words(const albu_model* model, int topic, int n, int* ids_out);

/* ---- evaluation ---- */

/* Matches learnt to true topics (minimum total forward KLD) and averages the
 * per-topic divergences. per_topic_out (length K) and permutation_out
 * (length K, true topic -> learnt topic) may be NULL. */
albu_status albu_evaluate_kld(const albu_model* model, const albu_ground_truth* truth,
                              double* avg_kld_out, double* per_topic_out,
                              int* permutation_out);

/* NPMI coherence of the model's top_n words per topic over Boolean sliding
 * windows of the given size. */
albu_status albu_evaluate_npmi(const albu_model* model, const albu_corpus* corpus,
                               int top_n, int window, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ALBU_H */
