#pragma once

// Dependency-annotated corpora: in-memory model, CoNLL-U I/O and lemma
// normalization.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cognet {

struct AnnotatedToken {
    std::string surface;
    std::string lemma;
    std::string upos;
    std::string xpos = "_";
    std::string feats = "_";
    std::size_t head = 0;  // 1-based index within the sentence, 0 = root
    std::string deprel;

    friend bool operator==(const AnnotatedToken&, const AnnotatedToken&) = default;
};

struct Sentence {
    std::string id;  // from "# sent_id", may be empty
    std::vector<AnnotatedToken> tokens;
};

struct Document {
    std::string id;
    std::vector<Sentence> sentences;
};

struct AnnotatedCorpus {
    std::vector<Document> documents;

    std::size_t sentence_count() const;
    std::size_t token_count() const;
};

struct ConlluOptions {
    // Comment key that opens a new document ("# newdoc", "# newdoc id = x").
    std::string document_key = "newdoc";
    // Treat the whole file as a single document and ignore document comments.
    bool one_doc_per_file = false;
};

// Throws ParseError (malformed line, with line number), ValidationError
// (sentence whose arcs do not form a tree) or InputError (empty corpus,
// unreadable file).
AnnotatedCorpus read_conllu(const std::filesystem::path& path, const ConlluOptions& options = {});
AnnotatedCorpus parse_conllu(std::istream& in, const std::string& source_name,
                             const ConlluOptions& options = {});

void write_conllu(std::ostream& out, const AnnotatedCorpus& corpus);

// Throws ValidationError when the head indices do not form a single rooted tree.
void validate_tree(const Sentence& sentence, std::string_view where);

inline constexpr std::string_view kPersonLemma = "s/he";

// Lowercases, then folds "he", "she" and every placeholder into "s/he".
// `person_placeholders` must already be lowercase.
std::string normalize_lemma(std::string_view lemma, const std::set<std::string>& person_placeholders);

// Placeholders are matched case-insensitively. Idempotent.
AnnotatedCorpus normalize_lemmas(AnnotatedCorpus corpus, const std::set<std::string>& person_placeholders);

std::string to_lower(std::string_view s);

}  // namespace cognet
