#include "cognet/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "cognet/error.hpp"

namespace cognet {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find('\t', start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_index(std::string_view s, std::size_t& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

// "# key", "# key = value" or "# key value"; returns false if key does not match.
bool match_comment(std::string_view body, std::string_view key, std::string& value) {
    body = trim(body);
    if (body.substr(0, key.size()) != key) return false;
    std::string_view rest = body.substr(key.size());
    if (!rest.empty() && rest.front() != ' ' && rest.front() != '=' && rest.front() != '\t') return false;
    rest = trim(rest);
    if (!rest.empty() && rest.front() == '=') rest = trim(rest.substr(1));
    value = std::string(rest);
    return true;
}

}  // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::size_t AnnotatedCorpus::sentence_count() const {
    std::size_t n = 0;
    for (const auto& d : documents) n += d.sentences.size();
    return n;
}

std::size_t AnnotatedCorpus::token_count() const {
    std::size_t n = 0;
    for (const auto& d : documents) {
        for (const auto& s : d.sentences) n += s.tokens.size();
    }
    return n;
}

void validate_tree(const Sentence& sentence, std::string_view where) {
    const auto& toks = sentence.tokens;
    const std::size_t n = toks.size();
    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (toks[i].head > n) {
            throw ValidationError(std::string(where) + ": token " + std::to_string(i + 1) +
                                  " has head " + std::to_string(toks[i].head) +
                                  " past sentence end (" + std::to_string(n) + " tokens)");
        }
        if (toks[i].head == i + 1) {
            throw ValidationError(std::string(where) + ": token " + std::to_string(i + 1) +
                                  " is its own head");
        }
        if (toks[i].head == 0) ++roots;
    }
    if (roots != 1) {
        throw ValidationError(std::string(where) + ": expected exactly one root, found " +
                              std::to_string(roots));
    }
    // Walk up from every token; a path longer than n means a cycle.
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cur = i + 1;
        std::size_t steps = 0;
        while (cur != 0) {
            cur = toks[cur - 1].head;
            if (++steps > n) {
                throw ValidationError(std::string(where) + ": dependency cycle through token " +
                                      std::to_string(i + 1));
            }
        }
    }
}

AnnotatedCorpus parse_conllu(std::istream& in, const std::string& source_name, const ConlluOptions& options) {
    AnnotatedCorpus corpus;
    Sentence current;
    std::size_t line_no = 0;
    std::size_t sentence_no = 0;  // 1-based across the file
    std::size_t sentence_start = 0;
    std::string pending_doc_id;
    bool doc_requested = options.one_doc_per_file;
    if (options.one_doc_per_file) {
        pending_doc_id = std::filesystem::path(source_name).stem().string();
    }

    auto flush = [&] {
        if (current.tokens.empty()) {
            current = Sentence{};
            return;
        }
        ++sentence_no;
        validate_tree(current, source_name + ": sentence " + std::to_string(sentence_no) +
                                   " (line " + std::to_string(sentence_start) + ")");
        if (doc_requested || corpus.documents.empty()) {
            Document d;
            d.id = pending_doc_id.empty() ? "doc" + std::to_string(corpus.documents.size() + 1)
                                          : pending_doc_id;
            corpus.documents.push_back(std::move(d));
            doc_requested = false;
            pending_doc_id.clear();
        }
        corpus.documents.back().sentences.push_back(std::move(current));
        current = Sentence{};
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            flush();
            continue;
        }
        if (line.front() == '#') {
            std::string value;
            const std::string_view body = std::string_view(line).substr(1);
            if (!options.one_doc_per_file && match_comment(body, options.document_key, value)) {
                if (!current.tokens.empty()) flush();
                doc_requested = true;
                std::string id;
                pending_doc_id = match_comment(value, "id", id) ? id : value;
            } else if (match_comment(body, "sent_id", value)) {
                current.id = value;
            }
            continue;
        }

        const auto cols = split_tabs(line);
        if (cols.size() != 10) {
            throw ParseError(source_name, line_no,
                             "expected 10 tab-separated columns, found " + std::to_string(cols.size()));
        }
        // Multiword-token ranges and empty nodes carry no tree structure.
        if (cols[0].find('-') != std::string_view::npos || cols[0].find('.') != std::string_view::npos) {
            continue;
        }
        std::size_t id = 0;
        if (!parse_index(cols[0], id)) throw ParseError(source_name, line_no, "bad token id '" + std::string(cols[0]) + "'");
        if (id != current.tokens.size() + 1) {
            throw ParseError(source_name, line_no, "token id " + std::to_string(id) + " out of sequence");
        }
        if (current.tokens.empty()) sentence_start = line_no;

        AnnotatedToken tok;
        tok.surface = std::string(cols[1]);
        tok.lemma = std::string(cols[2]);
        if (tok.lemma.empty() || (tok.lemma == "_" && tok.surface != "_")) tok.lemma = to_lower(tok.surface);
        tok.upos = std::string(cols[3]);
        tok.xpos = std::string(cols[4]);
        tok.feats = std::string(cols[5]);
        if (!parse_index(cols[6], tok.head)) {
            throw ParseError(source_name, line_no, "bad head '" + std::string(cols[6]) + "'");
        }
        tok.deprel = std::string(cols[7]);
        if (tok.upos.empty() || tok.deprel.empty()) throw ParseError(source_name, line_no, "empty UPOS or DEPREL");
        current.tokens.push_back(std::move(tok));
    }
    flush();

    std::erase_if(corpus.documents, [](const Document& d) { return d.sentences.empty(); });
    if (corpus.documents.empty()) throw InputError(source_name + ": empty corpus (no sentences)");
    return corpus;
}

AnnotatedCorpus read_conllu(const std::filesystem::path& path, const ConlluOptions& options) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file " + path.string());
    return parse_conllu(in, path.string(), options);
}

void write_conllu(std::ostream& out, const AnnotatedCorpus& corpus) {
    for (const auto& doc : corpus.documents) {
        out << "# newdoc id = " << doc.id << '\n';
        for (const auto& s : doc.sentences) {
            if (!s.id.empty()) out << "# sent_id = " << s.id << '\n';
            for (std::size_t i = 0; i < s.tokens.size(); ++i) {
                const auto& t = s.tokens[i];
                out << i + 1 << '\t' << t.surface << '\t' << t.lemma << '\t' << t.upos << '\t'
                    << t.xpos << '\t' << t.feats << '\t' << t.head << '\t' << t.deprel << "\t_\t_\n";
            }
            out << '\n';
        }
    }
}

std::string normalize_lemma(std::string_view lemma, const std::set<std::string>& person_placeholders) {
    std::string out = to_lower(lemma);
    if (out == "he" || out == "she") return std::string(kPersonLemma);
    if (person_placeholders.contains(out)) return std::string(kPersonLemma);
    return out;
}

AnnotatedCorpus normalize_lemmas(AnnotatedCorpus corpus, const std::set<std::string>& person_placeholders) {
    std::set<std::string> lowered;
    for (const auto& p : person_placeholders) lowered.insert(to_lower(p));
    for (auto& doc : corpus.documents) {
        for (auto& s : doc.sentences) {
            for (auto& t : s.tokens) t.lemma = normalize_lemma(t.lemma, lowered);
        }
    }
    return corpus;
}

}  // namespace cognet
