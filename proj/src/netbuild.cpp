#include "cognet/netbuild.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "cognet/error.hpp"
#include "cognet/parallel.hpp"

namespace cognet {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Index-based view of one sentence's dependency tree (0-based positions).
struct Tree {
    const Sentence& sentence;
    std::vector<std::vector<std::size_t>> children;

    explicit Tree(const Sentence& s) : sentence(s), children(s.tokens.size()) {
        for (std::size_t i = 0; i < s.tokens.size(); ++i) {
            if (s.tokens[i].head != 0) children[s.tokens[i].head - 1].push_back(i);
        }
    }

    std::size_t parent(std::size_t i) const {
        const std::size_t h = sentence.tokens[i].head;
        return h == 0 ? kNone : h - 1;
    }
};

bool is_semantic(const AnnotatedToken& t, const TagConfig& tags) {
    if (tags.semantic_upos.contains(t.upos)) return true;
    if (tags.negation_deprels.contains(t.deprel)) return true;
    return t.deprel == "advmod" && tags.negation_lemmas.contains(to_lower(t.lemma));
}

// Nearest ancestor of `from` with class Verb.
std::size_t nearest_verb_above(const Tree& tree, const std::vector<SvoClass>& cls, std::size_t from) {
    for (std::size_t cur = tree.parent(from); cur != kNone; cur = tree.parent(cur)) {
        if (cls[cur] == SvoClass::Verb) return cur;
    }
    return kNone;
}

// Nearest descendant of `verb` with class Subject; ties go to the earliest
// position in the sentence.
std::size_t nearest_subject_below(const Tree& tree, const std::vector<SvoClass>& cls, std::size_t verb) {
    std::vector<std::size_t> level = tree.children[verb];
    while (!level.empty()) {
        std::size_t best = kNone;
        for (std::size_t i : level) {
            if (cls[i] == SvoClass::Subject && (best == kNone || i < best)) best = i;
        }
        if (best != kNone) return best;
        std::vector<std::size_t> next;
        for (std::size_t i : level) next.insert(next.end(), tree.children[i].begin(), tree.children[i].end());
        level = std::move(next);
    }
    return kNone;
}

std::size_t resolve_subject(const Tree& tree, const std::vector<SvoClass>& cls, std::size_t verb,
                            const TagConfig& tags) {
    const std::size_t subj = nearest_subject_below(tree, cls, verb);
    if (subj == kNone) return kNone;
    const AnnotatedToken& t = tree.sentence.tokens[subj];
    if (tags.noun_upos.contains(t.upos)) return subj;
    if (tags.pronoun_upos.contains(t.upos) && !tags.relative_pronouns.contains(to_lower(t.lemma))) {
        return subj;
    }
    for (std::size_t cur = tree.parent(subj); cur != kNone; cur = tree.parent(cur)) {
        if (tags.noun_upos.contains(tree.sentence.tokens[cur].upos)) return cur;
    }
    return kNone;
}

}  // namespace

LexicalNetwork build_co_network(const AnnotatedCorpus& corpus, const TagConfig& tags) {
    const auto& docs = corpus.documents;
    std::vector<NetworkBuilder> partial(docs.size(), NetworkBuilder(NetworkKind::CO, true));
    parallel_for(docs.size(), [&](std::size_t d) {
        for (const Sentence& s : docs[d].sentences) {
            const std::string* prev = nullptr;
            for (const AnnotatedToken& t : s.tokens) {
                if (tags.punctuation_upos.contains(t.upos)) {
                    prev = nullptr;
                    continue;
                }
                if (prev) partial[d].add_edge(*prev, t.lemma, 1, docs[d].id);
                prev = &t.lemma;
            }
        }
    });
    NetworkBuilder all(NetworkKind::CO, true);
    for (const auto& p : partial) all.merge(p);
    all.set_parameter("documents", std::to_string(docs.size()));
    return all.build();
}

std::vector<SvoClass> classify_svo(const Sentence& sentence, const TagConfig& tags) {
    std::vector<SvoClass> cls(sentence.tokens.size(), SvoClass::None);
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const AnnotatedToken& t = sentence.tokens[i];
        if (!is_semantic(t, tags)) continue;
        if (tags.subject_deprels.contains(t.deprel)) {
            cls[i] = SvoClass::Subject;
        } else if (tags.verb_upos.contains(t.upos) || tags.relative_clause_deprels.contains(t.deprel)) {
            cls[i] = SvoClass::Verb;
        } else {
            cls[i] = SvoClass::Object;
        }
    }
    return cls;
}

SvoExtraction extract_svo_triplets(const AnnotatedCorpus& corpus, const TagConfig& tags) {
    SvoExtraction out;
    for (const Document& doc : corpus.documents) {
        for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
            const Sentence& s = doc.sentences[si];
            const Tree tree(s);
            const auto cls = classify_svo(s, tags);
            for (std::size_t i = 0; i < cls.size(); ++i) {
                if (cls[i] != SvoClass::Object) continue;
                ++out.object_tokens;
                const std::size_t verb = nearest_verb_above(tree, cls, i);
                if (verb == kNone) {
                    ++out.skipped_no_verb;
                    continue;
                }
                const std::size_t subj = resolve_subject(tree, cls, verb, tags);
                if (subj == kNone) {
                    ++out.skipped_no_subject;
                    continue;
                }
                out.triplets.push_back({s.tokens[subj].lemma, s.tokens[verb].lemma, s.tokens[i].lemma, doc.id, si});
            }
        }
    }
    return out;
}

LexicalNetwork build_svo_network(const std::vector<SvoTriplet>& triplets, std::uint64_t min_weight) {
    if (min_weight < 1) throw InputError("min_weight must be >= 1");
    NetworkBuilder b(NetworkKind::SVO, true);
    for (const SvoTriplet& t : triplets) {
        b.add_edge(t.subject, t.verb, 1, t.document);
        b.add_edge(t.verb, t.object, 1, t.document);
        b.add_edge(t.subject, t.object, 1, t.document);
    }
    b.threshold(min_weight);
    b.set_parameter("min_weight", std::to_string(min_weight));
    b.set_parameter("triplets", std::to_string(triplets.size()));
    return b.build();
}

LexicalNetwork build_fa_network(const FreeAssociationData& fa, const std::optional<std::set<std::string>>& restrict_to) {
    NetworkBuilder b(NetworkKind::FA, false);
    for (const Association& a : fa.pairs) {
        if (restrict_to && (!restrict_to->contains(a.cue) || !restrict_to->contains(a.response))) continue;
        b.add_edge(a.cue, a.response, a.count);
    }
    b.set_parameter("restricted", restrict_to ? "true" : "false");
    return b.build();
}

LexicalNetwork restrict_network(const LexicalNetwork& net, const std::set<std::string>& vocab) {
    NetworkBuilder b(net.kind(), net.tracks_documents());
    for (const auto& [k, v] : net.parameters()) b.set_parameter(k, v);
    b.set_parameter("restricted", "true");
    const Graph& g = net.graph();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::string& a = net.lemma(g.edge(e).u);
        const std::string& c = net.lemma(g.edge(e).v);
        if (!vocab.contains(a) || !vocab.contains(c)) continue;
        b.add_edge(a, c, net.weight(e));
        if (net.tracks_documents()) b.add_documents(a, c, net.documents(e));
    }
    return b.build();
}

std::vector<PairDocumentCount> pair_document_counts(const LexicalNetwork& net, std::size_t top_k) {
    if (!net.tracks_documents()) throw AnalysisError("pair_document_counts: network has no document tracking");
    std::vector<PairDocumentCount> out;
    out.reserve(net.edge_count());
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
        const Edge& ed = net.graph().edge(e);
        out.push_back({net.lemma(ed.u), net.lemma(ed.v), net.documents(e).size()});
    }
    std::sort(out.begin(), out.end(), [](const PairDocumentCount& x, const PairDocumentCount& y) {
        if (x.documents != y.documents) return x.documents > y.documents;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    if (top_k != 0 && out.size() > top_k) out.resize(top_k);
    return out;
}

}  // namespace cognet
