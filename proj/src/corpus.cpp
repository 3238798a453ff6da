#include "albu/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "albu/errors.hpp"

namespace albu {

int Vocabulary::add(const std::string& token) {
    auto it = token_to_id.find(token);
    if (it != token_to_id.end()) return it->second;
    const int id = size();
    token_to_id.emplace(token, id);
    id_to_token.push_back(token);
    return id;
}

int Vocabulary::id_of(const std::string& token) const {
    auto it = token_to_id.find(token);
    return it == token_to_id.end() ? -1 : it->second;
}

long long Corpus::total_tokens() const {
    long long n = 0;
    for (const auto& d : documents) n += d.length();
    return n;
}

std::vector<std::string> tokenize(const std::string& text,
                                  const std::set<std::string>& stopwords) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string piece;
    while (in >> piece) {
        std::string cleaned;
        for (unsigned char c : piece) {
            if (std::isupper(c)) c = static_cast<unsigned char>(std::tolower(c));
            if (c >= 'a' && c <= 'z') cleaned.push_back(static_cast<char>(c));
        }
        if (cleaned.empty()) continue;
        if (stopwords.count(cleaned)) continue;
        out.push_back(std::move(cleaned));
    }
    return out;
}

std::set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open stopword file: " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) words.insert(line);
    }
    return words;
}

std::vector<std::vector<std::string>> tokenize_file(const std::string& path,
                                                    const std::set<std::string>& stopwords) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open text file: " + path);
    std::vector<std::vector<std::string>> lists;
    std::string line;
    while (std::getline(in, line)) lists.push_back(tokenize(line, stopwords));
    return lists;
}

Corpus build_corpus(const std::vector<std::vector<std::string>>& token_lists,
                    int min_doc_len) {
    if (min_doc_len < 1) throw std::invalid_argument("build_corpus: min_doc_len must be >= 1");
    Corpus corpus;
    for (const auto& tokens : token_lists) {
        if (static_cast<int>(tokens.size()) < min_doc_len) continue;
        Document doc;
        doc.tokens.reserve(tokens.size());
        for (const auto& t : tokens) doc.tokens.push_back(corpus.vocabulary.add(t));
        corpus.documents.push_back(std::move(doc));
    }
    if (corpus.documents.empty())
        throw std::runtime_error("build_corpus: zero documents survive the length filter");
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot write corpus file: " + path);
    out << corpus.vocab_size() << ' ' << corpus.num_documents() << '\n';
    for (const auto& token : corpus.vocabulary.id_to_token) out << token << '\n';
    for (const auto& doc : corpus.documents) {
        for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
            if (i) out << ' ';
            out << doc.tokens[i];
        }
        out << '\n';
    }
    if (!out) throw FileError("write failed: " + path);
}

namespace {

std::string chomp(std::string line) {
    while (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open corpus file: " + path);

    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ParseError("zero documents (empty file)", 0);
    ++line_no;

    int v = 0, m = 0;
    {
        std::istringstream header(chomp(line));
        std::string extra;
        if (!(header >> v >> m) || (header >> extra))
            throw ParseError("expected header \"V M\"", line_no);
    }
    if (v <= 0) throw ParseError("vocabulary size must be positive", line_no);
    if (m <= 0) throw ParseError("zero documents", line_no);

    Corpus corpus;
    corpus.vocabulary.id_to_token.reserve(v);
    for (int i = 0; i < v; ++i) {
        if (!std::getline(in, line)) throw ParseError("unexpected end of vocabulary", line_no);
        ++line_no;
        line = chomp(line);
        if (line.empty() || line.find_first_of(" \t") != std::string::npos)
            throw ParseError("invalid vocabulary token", line_no);
        if (corpus.vocabulary.id_of(line) != -1)
            throw ParseError("duplicate vocabulary token \"" + line + "\"", line_no);
        corpus.vocabulary.add(line);
    }

    corpus.documents.reserve(m);
    for (int d = 0; d < m; ++d) {
        if (!std::getline(in, line)) throw ParseError("unexpected end of documents", line_no);
        ++line_no;
        std::istringstream ids(chomp(line));
        Document doc;
        std::string field;
        while (ids >> field) {
            std::size_t pos = 0;
            int id = -1;
            try {
                id = std::stoi(field, &pos);
            } catch (const std::exception&) {
                throw ParseError("expected a token id, got \"" + field + "\"", line_no);
            }
            if (pos != field.size())
                throw ParseError("expected a token id, got \"" + field + "\"", line_no);
            if (id < 0 || id >= v)
                throw ParseError("token id " + std::to_string(id) + " out of range [0," +
                                     std::to_string(v - 1) + "]",
                                 line_no);
            doc.tokens.push_back(id);
        }
        if (doc.tokens.empty()) throw ParseError("empty document", line_no);
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

}  // namespace albu
