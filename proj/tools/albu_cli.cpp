// Command-line driver for the topic-modeling library. Talks to the core
// exclusively through the C interface in albu.h.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "albu.h"

namespace {

using nlohmann::json;

constexpr const char* kCsvHeader =
    "run_id,algorithm,dataset,M,K,seed,epochs,avg_kld,coherence,runtime_ms";

[[noreturn]] void fail(const std::string& context) {
    std::cerr << "error: " << context;
    const std::string detail = albu_last_error();
    if (!detail.empty()) std::cerr << ": " << detail;
    std::cerr << '\n';
    std::exit(1);
}

void check(albu_status status, const std::string& context) {
    if (status != ALBU_OK) fail(context);
}

std::string format_csv_row(const std::string& run_id, const std::string& algorithm,
                           const std::string& dataset, int m, int k, std::uint64_t seed,
                           int epochs, std::optional<double> avg_kld,
                           std::optional<double> coherence, double runtime_ms) {
    char buf[512];
    std::string kld_field, coh_field;
    if (avg_kld) {
        std::snprintf(buf, sizeof buf, "%.6f", *avg_kld);
        kld_field = buf;
    }
    if (coherence) {
        std::snprintf(buf, sizeof buf, "%.6f", *coherence);
        coh_field = buf;
    }
    std::snprintf(buf, sizeof buf, "%s,%s,%s,%d,%d,%llu,%d,%s,%s,%.3f", run_id.c_str(),
                  algorithm.c_str(), dataset.c_str(), m, k,
                  static_cast<unsigned long long>(seed), epochs, kld_field.c_str(),
                  coh_field.c_str(), runtime_ms);
    return buf;
}

std::string path_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

// ---- simulate ----

struct SimulateArgs {
    std::string preset;
    int vocab = 0, regular_topics = 0, topics_per_doc = 0, doc_len = 0;
    double alpha_gen = 0.0, beta_gen = 0.0;
    int m = 0;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

albu_sim_settings resolve_settings(const SimulateArgs& args) {
    albu_sim_settings settings{};
    if (!args.preset.empty()) {
        check(albu_sim_settings_preset(args.preset.c_str(), &settings), "simulate");
    } else if (args.vocab <= 0 || args.regular_topics <= 0 || args.topics_per_doc <= 0 ||
               args.doc_len <= 0 || args.alpha_gen <= 0.0 || args.beta_gen <= 0.0) {
        std::cerr << "error: give --preset or all of --v --regular-topics --topics-per-doc"
                     " --doc-len --alpha-gen --beta-gen\n";
        std::exit(1);
    }
    if (args.vocab > 0) settings.vocab_size = args.vocab;
    if (args.regular_topics > 0) settings.regular_topics = args.regular_topics;
    if (args.topics_per_doc > 0) settings.topics_per_doc = args.topics_per_doc;
    if (args.doc_len > 0) settings.doc_len = args.doc_len;
    if (args.alpha_gen > 0.0) settings.alpha_gen = args.alpha_gen;
    if (args.beta_gen > 0.0) settings.beta_gen = args.beta_gen;
    settings.num_documents = args.m;
    settings.seed = args.seed;
    return settings;
}

int cmd_simulate(const SimulateArgs& args) {
    const albu_sim_settings settings = resolve_settings(args);
    albu_corpus* corpus = nullptr;
    albu_ground_truth* truth = nullptr;
    check(albu_simulate(&settings, &corpus, &truth), "simulate");

    const std::string dataset = args.preset.empty() ? "custom" : args.preset;
    std::ostringstream base;
    base << dataset << "_m" << args.m << "_s" << args.seed;
    const auto dir = std::filesystem::path(args.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string corpus_path = (dir / (base.str() + ".corpus")).string();
    const std::string truth_path = (dir / (base.str() + ".truth.json")).string();

    check(albu_corpus_save(corpus, corpus_path.c_str()), "simulate: corpus");
    check(albu_ground_truth_save(truth, truth_path.c_str()), "simulate: ground truth");

    std::cout << "corpus: " << corpus_path << " (M=" << albu_corpus_num_documents(corpus)
              << ", V=" << albu_corpus_vocab_size(corpus)
              << ", topics=" << albu_ground_truth_topics(truth) << ")\n"
              << "ground truth: " << truth_path << '\n';

    albu_ground_truth_free(truth);
    albu_corpus_free(corpus);
    return 0;
}

// ---- ingest ----

int cmd_ingest(const std::string& text_path, const std::string& stopword_path,
               int min_doc_len, const std::string& out_path) {
    albu_corpus* corpus = nullptr;
    check(albu_corpus_from_text(text_path.c_str(),
                                stopword_path.empty() ? nullptr : stopword_path.c_str(),
                                min_doc_len, &corpus),
          "ingest");
    check(albu_corpus_save(corpus, out_path.c_str()), "ingest: save");
    std::cout << "corpus: " << out_path << " (M=" << albu_corpus_num_documents(corpus)
              << ", V=" << albu_corpus_vocab_size(corpus)
              << ", tokens=" << albu_corpus_total_tokens(corpus) << ")\n";
    albu_corpus_free(corpus);
    return 0;
}

// ---- fit ----

struct FitArgs {
    std::string corpus_path;
    std::string algorithm = "albu";
    int topics = 0;
    double alpha = 0.5, beta = 0.5;
    int epochs = 150;
    double tol = 1e-4;
    int burn_in = 2000, samples = 5000;
    bool final_sample = false;
    std::uint64_t seed = 0;
    std::string out_path;
};

albu_model* fit_model(const albu_corpus* corpus, const FitArgs& args) {
    albu_model* model = nullptr;
    if (args.algorithm == "albu") {
        albu_fit_config config{};
        config.topics = args.topics;
        config.alpha = args.alpha;
        config.beta = args.beta;
        config.max_epochs = args.epochs;
        config.tol = args.tol;
        config.seed = args.seed;
        check(albu_fit(corpus, &config, &model), "fit");
    } else if (args.algorithm == "gibbs") {
        albu_gibbs_config config{};
        config.topics = args.topics;
        config.alpha = args.alpha;
        config.beta = args.beta;
        config.burn_in = args.burn_in;
        config.samples = args.samples;
        config.final_sample = args.final_sample ? 1 : 0;
        config.seed = args.seed;
        check(albu_fit_gibbs(corpus, &config, &model), "fit");
    } else {
        std::cerr << "error: unknown algorithm \"" << args.algorithm
                  << "\" (want albu|gibbs)\n";
        std::exit(1);
    }
    return model;
}

int cmd_fit(const FitArgs& args) {
    albu_corpus* corpus = nullptr;
    check(albu_corpus_load(args.corpus_path.c_str(), &corpus), "fit: corpus");
    albu_model* model = fit_model(corpus, args);
    check(albu_model_save(model, args.out_path.c_str(), args.corpus_path.c_str()),
          "fit: save");
    std::cout << "model: " << args.out_path << " (algorithm=" << albu_model_algorithm(model)
              << ", epochs=" << albu_model_epochs_run(model)
              << ", converged=" << (albu_model_converged(model) ? "yes" : "no")
              << ", runtime_ms=" << albu_model_runtime_ms(model) << ")\n";
    albu_model_free(model);
    albu_corpus_free(corpus);
    return 0;
}

// ---- evaluate ----

void append_csv_row(const std::string& csv_path, const std::string& row) {
    const bool fresh =
        !std::filesystem::exists(csv_path) || std::filesystem::file_size(csv_path) == 0;
    std::ofstream out(csv_path, std::ios::app);
    if (!out) fail("cannot open CSV " + csv_path);
    if (fresh) out << kCsvHeader << '\n';
    out << row << '\n';
}

struct EvaluateArgs {
    std::string model_path;
    std::string metric = "kld";
    std::string truth_path;
    std::string corpus_path;
    int window = 15;
    int top_n = 10;
    std::string csv_path;
    std::string dataset;
    std::string run_id;
};

int cmd_evaluate(const EvaluateArgs& args) {
    albu_model* model = nullptr;
    check(albu_model_load(args.model_path.c_str(), &model), "evaluate: model");

    std::optional<double> avg_kld, coherence;
    std::string dataset = args.dataset;

    if (args.metric == "kld") {
        if (args.truth_path.empty()) {
            std::cerr << "error: --metric kld needs --truth\n";
            std::exit(1);
        }
        albu_ground_truth* truth = nullptr;
        check(albu_ground_truth_load(args.truth_path.c_str(), &truth), "evaluate: truth");
        const int topics = albu_ground_truth_topics(truth);
        std::vector<double> per_topic(topics);
        std::vector<int> permutation(topics);
        double value = 0.0;
        check(albu_evaluate_kld(model, truth, &value, per_topic.data(), permutation.data()),
              "evaluate");
        avg_kld = value;
        if (dataset.empty()) dataset = path_stem(args.truth_path);
        std::cout << "avg_kld: " << value << '\n';
        for (int k = 0; k < topics; ++k)
            std::cout << "  topic " << k << " -> learnt " << permutation[k]
                      << "  kld=" << per_topic[k] << '\n';
        albu_ground_truth_free(truth);
    } else if (args.metric == "npmi") {
        if (args.corpus_path.empty()) {
            std::cerr << "error: --metric npmi needs --corpus\n";
            std::exit(1);
        }
        albu_corpus* corpus = nullptr;
        check(albu_corpus_load(args.corpus_path.c_str(), &corpus), "evaluate: corpus");
        double value = 0.0;
        check(albu_evaluate_npmi(model, corpus, args.top_n, args.window, &value),
              "evaluate");
        coherence = value;
        if (dataset.empty()) dataset = path_stem(args.corpus_path);
        std::cout << "npmi: " << value << " (top_n=" << args.top_n
                  << ", window=" << args.window << ")\n";
        albu_corpus_free(corpus);
    } else {
        std::cerr << "error: unknown metric \"" << args.metric << "\" (want kld|npmi)\n";
        std::exit(1);
    }

    const int m = albu_model_num_documents(model);
    const int k = albu_model_topics(model);
    const std::uint64_t seed = albu_model_seed(model);
    std::string run_id = args.run_id;
    if (run_id.empty()) {
        std::ostringstream id;
        id << dataset << "-m" << m << "-k" << k << "-s" << seed << '-'
           << albu_model_algorithm(model);
        run_id = id.str();
    }
    const std::string row =
        format_csv_row(run_id, albu_model_algorithm(model), dataset, m, k, seed,
                       albu_model_epochs_run(model), avg_kld, coherence,
                       albu_model_runtime_ms(model));
    if (!args.csv_path.empty()) append_csv_row(args.csv_path, row);
    albu_model_free(model);
    return 0;
}

// ---- sweep ----

struct SweepRun {
    std::string run_id;
    std::string algorithm;
    int m = 0;       // documents (simulated mode) or corpus size
    int topics = 0;
    std::uint64_t seed = 0;
};

struct SweepPlan {
    std::string dataset;
    std::string mode;  // "simulated" | "corpus"
    albu_sim_settings base_settings{};
    std::string corpus_path;
    std::string metric = "kld";
    double alpha = 0.5, beta = 0.5;
    int epochs = 150;
    double tol = 0.0;
    int burn_in = 2000, samples = 5000;
    bool final_sample = false;
    int window = 15, top_n = 10;
    std::string out_csv;
    int workers = 1;
    std::vector<SweepRun> runs;
};

SweepPlan load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open sweep config " + path);
    json config;
    try {
        in >> config;
    } catch (const json::parse_error& e) {
        fail(std::string("sweep config: ") + e.what());
    }

    SweepPlan plan;
    plan.mode = config.value("mode", config.contains("corpus") ? "corpus" : "simulated");
    plan.metric = config.value("metric", plan.mode == "corpus" ? "npmi" : "kld");
    plan.out_csv = config.value("out_csv", "results.csv");
    plan.workers = config.value("workers", 1);
    plan.epochs = config.value("epochs", 150);
    plan.tol = config.value("tol", 0.0);
    plan.burn_in = config.value("burn_in", 2000);
    plan.samples = config.value("samples", 5000);
    plan.final_sample = config.value("final_sample", false);
    plan.window = config.value("window", 15);
    plan.top_n = config.value("top_n", 10);

    std::vector<std::string> algorithms =
        config.value("algorithms", std::vector<std::string>{"albu", "gibbs"});
    std::vector<std::uint64_t> seeds;
    if (config.contains("seeds")) {
        seeds = config["seeds"].get<std::vector<std::uint64_t>>();
    } else {
        const int runs = config.value("runs", 20);
        for (int s = 1; s <= runs; ++s) seeds.push_back(s);
    }

    if (plan.mode == "simulated") {
        const std::string preset = config.value("preset", "smaller");
        plan.dataset = config.value("dataset", preset);
        check(albu_sim_settings_preset(preset.c_str(), &plan.base_settings), "sweep");
        if (config.contains("vocab_size"))
            plan.base_settings.vocab_size = config["vocab_size"].get<int>();
        if (config.contains("regular_topics"))
            plan.base_settings.regular_topics = config["regular_topics"].get<int>();
        if (config.contains("topics_per_doc"))
            plan.base_settings.topics_per_doc = config["topics_per_doc"].get<int>();
        if (config.contains("doc_len"))
            plan.base_settings.doc_len = config["doc_len"].get<int>();
        if (config.contains("alpha_gen"))
            plan.base_settings.alpha_gen = config["alpha_gen"].get<double>();
        if (config.contains("beta_gen"))
            plan.base_settings.beta_gen = config["beta_gen"].get<double>();
        // Inference priors default to the preset's published evaluation
        // value (beta_gen carries it; the mixture concentration does not).
        plan.alpha = config.value("alpha", plan.base_settings.beta_gen);
        plan.beta = config.value("beta", plan.base_settings.beta_gen);
        const int default_topics = plan.base_settings.regular_topics + 1;
        const int topics = config.value("k", default_topics);

        const auto m_values = config.value("m_values", std::vector<int>{100});
        for (int m : m_values)
            for (std::uint64_t seed : seeds)
                for (const auto& algorithm : algorithms) {
                    SweepRun run;
                    run.m = m;
                    run.topics = topics;
                    run.seed = seed;
                    run.algorithm = algorithm;
                    std::ostringstream id;
                    id << plan.dataset << "-m" << m << "-k" << topics << "-s" << seed << '-'
                       << algorithm;
                    run.run_id = id.str();
                    plan.runs.push_back(std::move(run));
                }
    } else if (plan.mode == "corpus") {
        if (!config.contains("corpus")) fail("sweep config: corpus mode needs \"corpus\"");
        plan.corpus_path = config["corpus"].get<std::string>();
        plan.dataset = config.value("dataset", path_stem(plan.corpus_path));
        plan.alpha = config.value("alpha", 0.1);
        plan.beta = config.value("beta", 0.1);
        if (!config.contains("k_values")) fail("sweep config: corpus mode needs \"k_values\"");
        const auto k_values = config["k_values"].get<std::vector<int>>();
        for (int topics : k_values)
            for (std::uint64_t seed : seeds)
                for (const auto& algorithm : algorithms) {
                    SweepRun run;
                    run.topics = topics;
                    run.seed = seed;
                    run.algorithm = algorithm;
                    std::ostringstream id;
                    id << plan.dataset << "-k" << topics << "-s" << seed << '-' << algorithm;
                    run.run_id = id.str();
                    plan.runs.push_back(std::move(run));
                }
    } else {
        fail("sweep config: mode must be simulated or corpus");
    }
    return plan;
}

std::string execute_run(const SweepPlan& plan, const SweepRun& run,
                        const albu_corpus* shared_corpus) {
    const albu_corpus* corpus = shared_corpus;
    albu_corpus* owned_corpus = nullptr;
    albu_ground_truth* truth = nullptr;

    if (plan.mode == "simulated") {
        albu_sim_settings settings = plan.base_settings;
        settings.num_documents = run.m;
        settings.seed = run.seed;
        check(albu_simulate(&settings, &owned_corpus, &truth), "sweep: " + run.run_id);
        corpus = owned_corpus;
    }

    albu_model* model = nullptr;
    if (run.algorithm == "albu") {
        albu_fit_config config{};
        config.topics = run.topics;
        config.alpha = plan.alpha;
        config.beta = plan.beta;
        config.max_epochs = plan.epochs;
        config.tol = plan.tol;
        config.seed = run.seed;
        check(albu_fit(corpus, &config, &model), "sweep: " + run.run_id);
    } else if (run.algorithm == "gibbs") {
        albu_gibbs_config config{};
        config.topics = run.topics;
        config.alpha = plan.alpha;
        config.beta = plan.beta;
        config.burn_in = plan.burn_in;
        config.samples = plan.samples;
        config.final_sample = plan.final_sample ? 1 : 0;
        config.seed = run.seed;
        check(albu_fit_gibbs(corpus, &config, &model), "sweep: " + run.run_id);
    } else {
        fail("sweep: unknown algorithm \"" + run.algorithm + "\"");
    }

    std::optional<double> avg_kld, coherence;
    if (plan.metric == "kld") {
        if (!truth) fail("sweep: kld metric needs simulated mode");
        double value = 0.0;
        check(albu_evaluate_kld(model, truth, &value, nullptr, nullptr),
              "sweep: " + run.run_id);
        avg_kld = value;
    } else if (plan.metric == "npmi") {
        double value = 0.0;
        check(albu_evaluate_npmi(model, corpus, plan.top_n, plan.window, &value),
              "sweep: " + run.run_id);
        coherence = value;
    } else {
        fail("sweep: unknown metric \"" + plan.metric + "\"");
    }

    const std::string row = format_csv_row(
        run.run_id, run.algorithm, plan.dataset, albu_model_num_documents(model),
        run.topics, run.seed, albu_model_epochs_run(model), avg_kld, coherence,
        albu_model_runtime_ms(model));

    albu_model_free(model);
    if (truth) albu_ground_truth_free(truth);
    if (owned_corpus) albu_corpus_free(owned_corpus);
    return row;
}

std::unordered_set<std::string> completed_run_ids(const std::string& csv_path) {
    std::unordered_set<std::string> ids;
    std::ifstream in(csv_path);
    if (!in) return ids;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            first = false;
            continue;
        }
        const auto comma = line.find(',');
        if (comma != std::string::npos) ids.insert(line.substr(0, comma));
    }
    return ids;
}

int cmd_sweep(const std::string& config_path, int workers_override,
              const std::string& csv_override) {
    SweepPlan plan = load_sweep_config(config_path);
    if (!csv_override.empty()) plan.out_csv = csv_override;
    if (workers_override > 0) plan.workers = workers_override;
    if (const char* env = std::getenv("ALBU_WORKERS")) {
        const int env_workers = std::atoi(env);
        if (env_workers > 0) plan.workers = env_workers;
    }

    albu_corpus* shared_corpus = nullptr;
    if (plan.mode == "corpus")
        check(albu_corpus_load(plan.corpus_path.c_str(), &shared_corpus), "sweep: corpus");

    const auto done = completed_run_ids(plan.out_csv);
    std::vector<const SweepRun*> pending;
    for (const auto& run : plan.runs)
        if (!done.count(run.run_id)) pending.push_back(&run);
    std::cout << plan.runs.size() << " runs planned, " << done.size() << " already in "
              << plan.out_csv << ", " << pending.size() << " to execute\n";

    const bool fresh =
        !std::filesystem::exists(plan.out_csv) || std::filesystem::file_size(plan.out_csv) == 0;
    std::ofstream out(plan.out_csv, std::ios::app);
    if (!out) fail("cannot open CSV " + plan.out_csv);
    if (fresh) {
        out << kCsvHeader << '\n';
        out.flush();
    }

    // Results are written strictly in plan order; workers fill slots and the
    // completed prefix is flushed as it forms, so an interrupted sweep leaves
    // a clean resumable file.
    std::vector<std::optional<std::string>> rows(pending.size());
    std::atomic<std::size_t> next_run{0};
    std::mutex write_mutex;
    std::size_t next_write = 0;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next_run.fetch_add(1);
            if (i >= pending.size()) break;
            std::string row = execute_run(plan, *pending[i], shared_corpus);
            std::lock_guard<std::mutex> lock(write_mutex);
            rows[i] = std::move(row);
            while (next_write < rows.size() && rows[next_write]) {
                out << *rows[next_write] << '\n';
                out.flush();
                std::cout << "done: " << *rows[next_write] << '\n';
                ++next_write;
            }
        }
    };

    const int thread_count = std::max(1, std::min<int>(plan.workers, pending.size()));
    std::vector<std::thread> threads;
    for (int i = 0; i < thread_count - 1; ++i) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    if (shared_corpus) albu_corpus_free(shared_corpus);
    std::cout << "results: " << plan.out_csv << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topic-modeling toolkit: loopy belief update and collapsed Gibbs "
                 "inference with a ground-truth corpus simulator"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Generate a corpus with known topics");
    simulate->add_option("--preset", sim.preset, "smaller | bigger");
    simulate->add_option("--v", sim.vocab, "vocabulary size");
    simulate->add_option("--regular-topics", sim.regular_topics, "content topic count");
    simulate->add_option("--topics-per-doc", sim.topics_per_doc, "topics mixed per document");
    simulate->add_option("--doc-len", sim.doc_len, "tokens per document");
    simulate->add_option("--alpha-gen", sim.alpha_gen, "mixture concentration");
    simulate->add_option("--beta-gen", sim.beta_gen, "word concentration");
    simulate->add_option("--m", sim.m, "number of documents")->required();
    simulate->add_option("--seed", sim.seed, "generator seed");
    simulate->add_option("--out-dir", sim.out_dir, "output directory");

    std::string ingest_text, ingest_stopwords, ingest_out;
    int ingest_min_len = 4;
    auto* ingest = app.add_subcommand("ingest", "Tokenize raw text into a corpus file");
    ingest->add_option("--text", ingest_text, "text file, one document per line")->required();
    ingest->add_option("--stopwords", ingest_stopwords, "stopword file, one per line");
    ingest->add_option("--min-doc-len", ingest_min_len, "drop shorter documents");
    ingest->add_option("--out", ingest_out, "output corpus file")->required();

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit a topic model to a corpus");
    fit_cmd->add_option("--corpus", fit.corpus_path, "corpus file")->required();
    fit_cmd->add_option("--algo", fit.algorithm, "albu | gibbs");
    fit_cmd->add_option("--k", fit.topics, "topic count")->required();
    fit_cmd->add_option("--alpha", fit.alpha, "topic-document prior");
    fit_cmd->add_option("--beta", fit.beta, "word-topic prior");
    fit_cmd->add_option("--epochs", fit.epochs, "albu: epoch cap");
    fit_cmd->add_option("--tol", fit.tol, "albu: convergence tolerance");
    fit_cmd->add_option("--burn-in", fit.burn_in, "gibbs: burn-in sweeps");
    fit_cmd->add_option("--samples", fit.samples, "gibbs: sampling sweeps");
    fit_cmd->add_flag("--final-sample", fit.final_sample,
                      "gibbs: report the final sweep's counts instead of the average");
    fit_cmd->add_option("--seed", fit.seed, "seed");
    fit_cmd->add_option("--out", fit.out_path, "output model JSON")->required();

    EvaluateArgs eval;
    auto* evaluate = app.add_subcommand("evaluate", "Score a fitted model");
    evaluate->add_option("--model", eval.model_path, "model JSON")->required();
    evaluate->add_option("--metric", eval.metric, "kld | npmi");
    evaluate->add_option("--truth", eval.truth_path, "ground truth JSON (kld)");
    evaluate->add_option("--corpus", eval.corpus_path, "corpus file (npmi)");
    evaluate->add_option("--window", eval.window, "coherence window");
    evaluate->add_option("--top-n", eval.top_n, "top words per topic");
    evaluate->add_option("--csv", eval.csv_path, "append a result row here");
    evaluate->add_option("--dataset", eval.dataset, "dataset label for the CSV");
    evaluate->add_option("--run-id", eval.run_id, "run id for the CSV");

    std::string sweep_config, sweep_csv;
    int sweep_workers = 0;
    auto* sweep = app.add_subcommand("sweep", "Run an experiment grid from a JSON config");
    sweep->add_option("--config", sweep_config, "sweep config JSON")->required();
    sweep->add_option("--workers", sweep_workers,
                      "parallel runs (ALBU_WORKERS overrides)");
    sweep->add_option("--out-csv", sweep_csv, "override the config's out_csv");

    CLI11_PARSE(app, argc, argv);

    if (*simulate) return cmd_simulate(sim);
    if (*ingest) return cmd_ingest(ingest_text, ingest_stopwords, ingest_min_len, ingest_out);
    if (*fit_cmd) return cmd_fit(fit);
    if (*evaluate) return cmd_evaluate(eval);
    if (*sweep) return cmd_sweep(sweep_config, sweep_workers, sweep_csv);
    return 1;
}
