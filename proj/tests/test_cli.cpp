// End-to-end checks of the command-line binary. argv[1] is the CLI path.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << '\n';
    } else {
        ++failures;
        std::cout << "FAILED: " << what << '\n';
    }
}

std::string g_cli;
fs::path g_dir;

int run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " >" + (g_dir / "cmd.out").string() +
                            " 2>" + (g_dir / "cmd.err").string();
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string cmd_output() { return slurp(g_dir / "cmd.out"); }

int count_lines(const fs::path& path) {
    std::ifstream in(path);
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    return lines;
}

// CSV content with the wall-clock runtime_ms column removed.
std::string without_runtime(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        const auto last = line.rfind(',');
        out << line.substr(0, last) << '\n';
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    g_dir = fs::temp_directory_path() / "albu_cli_tests";
    fs::remove_all(g_dir);
    fs::create_directories(g_dir);

    // simulate: determinism and file layout
    const std::string sim_a = (g_dir / "sim_a").string();
    const std::string sim_b = (g_dir / "sim_b").string();
    expect(run("simulate --preset smaller --m 20 --seed 7 --out-dir " + sim_a) == 0,
           "simulate exits 0");
    expect(run("simulate --preset smaller --m 20 --seed 7 --out-dir " + sim_b) == 0,
           "simulate twice exits 0");
    const fs::path corpus_a = fs::path(sim_a) / "smaller_m20_s7.corpus";
    const fs::path truth_a = fs::path(sim_a) / "smaller_m20_s7.truth.json";
    expect(fs::exists(corpus_a) && fs::exists(truth_a), "simulate writes both files");
    expect(slurp(corpus_a) == slurp(fs::path(sim_b) / "smaller_m20_s7.corpus"),
           "same flags give byte-identical corpora");
    expect(slurp(truth_a) == slurp(fs::path(sim_b) / "smaller_m20_s7.truth.json"),
           "same flags give byte-identical ground truth");
    {
        std::ifstream in(corpus_a);
        std::string header;
        std::getline(in, header);
        expect(header == "100 20", "corpus header is V M");
    }

    // fit + evaluate round trip
    const std::string model_path = (g_dir / "model.json").string();
    expect(run("fit --corpus " + corpus_a.string() +
               " --algo albu --k 7 --alpha 0.5 --beta 0.5 --epochs 10 --tol 0 --seed 1 --out " +
               model_path) == 0,
           "fit albu exits 0");
    expect(fs::exists(model_path), "fit writes the model");

    const std::string csv_path = (g_dir / "eval.csv").string();
    expect(run("evaluate --model " + model_path + " --metric kld --truth " +
               truth_a.string() + " --csv " + csv_path) == 0,
           "evaluate kld exits 0");
    expect(cmd_output().find("avg_kld:") != std::string::npos,
           "evaluate prints an avg_kld summary");
    {
        std::ifstream in(csv_path);
        std::string header, row;
        std::getline(in, header);
        std::getline(in, row);
        expect(header ==
                   "run_id,algorithm,dataset,M,K,seed,epochs,avg_kld,coherence,runtime_ms",
               "CSV header is the fixed schema");
        expect(row.find(",albu,") != std::string::npos, "CSV row carries the algorithm");
    }

    expect(run("evaluate --model " + model_path + " --metric npmi --corpus " +
               corpus_a.string() + " --window 15 --top-n 10") == 0,
           "evaluate npmi exits 0");
    expect(cmd_output().find("npmi:") != std::string::npos, "evaluate prints npmi");

    // gibbs fit
    const std::string gibbs_model = (g_dir / "gibbs.json").string();
    expect(run("fit --corpus " + corpus_a.string() +
               " --algo gibbs --k 7 --alpha 0.5 --beta 0.5 --burn-in 20 --samples 20 --seed 1 --out " +
               gibbs_model) == 0,
           "fit gibbs exits 0");

    // error paths
    expect(run("fit --corpus /nonexistent.corpus --algo albu --k 7 --out " +
               (g_dir / "x.json").string()) != 0,
           "missing corpus file fails with nonzero exit");
    const std::string mismatched = (g_dir / "mismatch.json").string();
    expect(run("fit --corpus " + corpus_a.string() + " --algo albu --k 4 --epochs 2 --out " +
               mismatched) == 0,
           "fit with a different K exits 0");
    expect(run("evaluate --model " + mismatched + " --metric kld --truth " +
               truth_a.string()) != 0,
           "evaluating mismatched K against the truth fails");

    // ingest
    const std::string text_path = (g_dir / "raw.txt").string();
    {
        std::ofstream out(text_path);
        out << "The quick brown fox jumps over the lazy dog\n";
        out << "too short\n";
        out << "Pack my box with five dozen liquor jugs today\n";
    }
    const std::string ingested = (g_dir / "ingested.corpus").string();
    expect(run("ingest --text " + text_path + " --min-doc-len 4 --out " + ingested) == 0,
           "ingest exits 0");
    {
        std::ifstream in(ingested);
        std::string header;
        std::getline(in, header);
        expect(header.substr(header.find(' ') + 1) == "2", "ingest dropped the short doc");
    }

    // sweep: row count and idempotent resume
    const std::string sweep_csv = (g_dir / "sweep.csv").string();
    const std::string sweep_config = (g_dir / "sweep.json").string();
    {
        std::ofstream out(sweep_config);
        out << R"({
  "mode": "simulated",
  "preset": "smaller",
  "m_values": [10, 15],
  "seeds": [1, 2],
  "algorithms": ["albu", "gibbs"],
  "epochs": 3,
  "burn_in": 3,
  "samples": 3,
  "metric": "kld",
  "out_csv": ")" << sweep_csv
            << R"("
})";
    }
    expect(run("sweep --config " + sweep_config) == 0, "sweep exits 0");
    expect(count_lines(sweep_csv) == 9, "sweep wrote header + 2x2x2 rows");
    const std::string first_pass = slurp(sweep_csv);

    expect(run("sweep --config " + sweep_config) == 0, "second sweep exits 0");
    expect(slurp(sweep_csv) == first_pass, "re-running a finished sweep adds nothing");

    // truncate to header + 3 rows, rerun, expect the same metrics again
    {
        std::istringstream in(first_pass);
        std::ofstream out(sweep_csv);
        std::string line;
        for (int i = 0; i < 4 && std::getline(in, line); ++i) out << line << '\n';
    }
    expect(run("sweep --config " + sweep_config) == 0, "resumed sweep exits 0");
    expect(count_lines(sweep_csv) == 9, "resume completes the missing rows");
    expect(without_runtime(slurp(sweep_csv)) == without_runtime(first_pass),
           "resumed rows match a fresh run apart from wall-clock time");

    std::cout << (failures == 0 ? "ALL OK\n" : "FAILURES\n");
    return failures == 0 ? 0 : 1;
}
