#pragma once

// Building co-occurrence, subject-verb-object and free-association networks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cognet/corpus.hpp"
#include "cognet/lexicon.hpp"
#include "cognet/network.hpp"

namespace cognet {

// Tag inventories used by CO adjacency and SVO extraction. The defaults
// cover both Universal Dependencies and the ClearNLP labels emitted by
// common English pipelines (nsubjpass, relcl, neg, ...).
struct TagConfig {
    std::set<std::string> punctuation_upos{"PUNCT"};
    std::set<std::string> semantic_upos{"NOUN", "PROPN", "PRON", "VERB", "AUX", "ADV", "ADJ", "ADP"};
    std::set<std::string> verb_upos{"VERB", "AUX"};
    std::set<std::string> noun_upos{"NOUN", "PROPN"};
    std::set<std::string> pronoun_upos{"PRON"};
    std::set<std::string> subject_deprels{"nsubj", "nsubjpass", "nsubj:pass", "csubj", "csubjpass", "csubj:pass"};
    std::set<std::string> relative_clause_deprels{"relcl", "acl:relcl"};
    std::set<std::string> negation_deprels{"neg"};
    std::set<std::string> negation_lemmas{"not"};  // advmod with one of these lemmas negates
    // Relative/interrogative pronoun subjects are promoted to the nearest
    // noun above them; other pronouns stand as subjects themselves.
    std::set<std::string> relative_pronouns{"which", "that", "who", "whom", "whose", "what",
                                            "whatever", "whoever", "whichever"};
};

// Undirected edge between each adjacent pair of non-punctuation lemmas
// within a sentence. Punctuation breaks the chain; documents are tracked.
LexicalNetwork build_co_network(const AnnotatedCorpus& corpus, const TagConfig& tags = {});

struct SvoTriplet {
    std::string subject;
    std::string verb;
    std::string object;
    std::string document;
    std::size_t sentence = 0;  // index within the document

    friend bool operator==(const SvoTriplet&, const SvoTriplet&) = default;
};

struct SvoExtraction {
    std::vector<SvoTriplet> triplets;
    std::size_t object_tokens = 0;
    std::size_t skipped_no_verb = 0;
    std::size_t skipped_no_subject = 0;
};

enum class SvoClass { None, Subject, Verb, Object };

// Class of every token in a sentence (None for non-semantic tokens).
std::vector<SvoClass> classify_svo(const Sentence& sentence, const TagConfig& tags = {});

SvoExtraction extract_svo_triplets(const AnnotatedCorpus& corpus, const TagConfig& tags = {});

// Each triplet adds subject-verb, verb-object and subject-object; pairs of
// identical lemmas are skipped. Edges lighter than min_weight are removed
// and survivors reduced by min_weight - 1.
LexicalNetwork build_svo_network(const std::vector<SvoTriplet>& triplets, std::uint64_t min_weight = 2);

LexicalNetwork build_fa_network(const FreeAssociationData& fa,
                                const std::optional<std::set<std::string>>& restrict_to = std::nullopt);

// Induced subgraph on vocab; nodes left without edges are dropped.
LexicalNetwork restrict_network(const LexicalNetwork& net, const std::set<std::string>& vocab);

struct PairDocumentCount {
    std::string a;
    std::string b;  // a < b
    std::size_t documents = 0;
};

// Pairs ranked by how many documents contain them; ties broken by (a, b).
// top_k == 0 returns every pair. Throws if the network has no document tracking.
std::vector<PairDocumentCount> pair_document_counts(const LexicalNetwork& net, std::size_t top_k);

}  // namespace cognet
