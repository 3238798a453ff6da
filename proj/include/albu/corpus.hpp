#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace albu {

// Token <-> dense id bijection. Ids are assigned in first-occurrence order so
// a given input always produces the same vocabulary.
struct Vocabulary {
    std::unordered_map<std::string, int> token_to_id;
    std::vector<std::string> id_to_token;

    int size() const { return static_cast<int>(id_to_token.size()); }

    // Returns the existing id or assigns the next one.
    int add(const std::string& token);

    // -1 when unknown.
    int id_of(const std::string& token) const;
};

struct Document {
    std::vector<int> tokens;  // ordered; order matters for coherence windows

    int length() const { return static_cast<int>(tokens.size()); }
};

struct Corpus {
    Vocabulary vocabulary;
    std::vector<Document> documents;

    int num_documents() const { return static_cast<int>(documents.size()); }
    int vocab_size() const { return vocabulary.size(); }
    long long total_tokens() const;
};

// Lowercases, strips every character outside [a-z] from each
// whitespace-separated piece, and drops stopwords and empty remainders.
std::vector<std::string> tokenize(const std::string& text,
                                  const std::set<std::string>& stopwords);

// One stopword per line, blank lines ignored.
std::set<std::string> load_stopwords(const std::string& path);

// Reads a text file (one document per line) and tokenizes each line.
std::vector<std::vector<std::string>> tokenize_file(const std::string& path,
                                                    const std::set<std::string>& stopwords);

// Drops documents shorter than min_doc_len, then builds the vocabulary from
// the survivors in first-occurrence order. Throws std::invalid_argument on a
// bad threshold and std::runtime_error when no document survives.
Corpus build_corpus(const std::vector<std::vector<std::string>>& token_lists,
                    int min_doc_len);

// Serialized corpus format: line 1 "V M", then V vocabulary tokens in id
// order, then M lines of space-separated token ids.
void save_corpus(const Corpus& corpus, const std::string& path);
Corpus load_corpus(const std::string& path);

}  // namespace albu
