#!/usr/bin/env python3
"""Writes the synthetic corpus and lexicons used by the tests.

Sentences come from a handful of templates whose dependency analyses follow
the ClearNLP label set (nsubj, dobj, relcl, neg, xcomp, prep/pobj, acomp).
Output is deterministic for a given seed; rerun after editing and commit the
result.

    python3 make_fixture.py [outdir]
"""

import random
import sys
from pathlib import Path

SEED = 20201
N_DOCS = 20

PRONOUNS = {  # lemma -> (form, third person singular)
    "i": ("I", False), "you": ("you", False), "we": ("we", False),
    "they": ("they", False), "he": ("he", True), "she": ("she", True),
}
PRON_OBJ = {"i": "me", "you": "you", "we": "us", "they": "them", "he": "him", "she": "her"}

NOUNS = ["life", "love", "friend", "family", "pain", "hope", "work", "money", "home",
         "school", "city", "fear", "dream", "war", "job", "music", "child", "doctor",
         "teacher", "future", "heart", "world", "death", "problem", "joy", "anger",
         "garden", "party", "gift", "disease", "storm", "holiday", "crime", "baby"]
VERBS = {  # lemma -> (present 3sg, past)
    "love": ("loves", "loved"), "want": ("wants", "wanted"), "help": ("helps", "helped"),
    "need": ("needs", "needed"), "hate": ("hates", "hated"), "find": ("finds", "found"),
    "lose": ("loses", "lost"), "miss": ("misses", "missed"), "build": ("builds", "built"),
    "hurt": ("hurts", "hurt"), "enjoy": ("enjoys", "enjoyed"), "share": ("shares", "shared"),
    "protect": ("protects", "protected"), "destroy": ("destroys", "destroyed"),
    "fear": ("fears", "feared"), "celebrate": ("celebrates", "celebrated"),
}
ADJS = ["happy", "sad", "hard", "good", "bad", "beautiful", "terrible", "calm", "angry",
        "bright", "dark", "safe", "dangerous", "free", "lonely", "new"]
PREPS = ["in", "with", "for", "at"]

TOPICS = [
    ["family", "home", "child", "love", "heart", "baby", "garden", "holiday"],
    ["work", "money", "job", "problem", "future", "school", "teacher"],
    ["war", "fear", "death", "pain", "crime", "disease", "storm", "anger"],
    ["music", "friend", "party", "joy", "gift", "dream", "hope", "world"],
    ["life", "city", "doctor", "love", "hope", "future", "heart"],
]

VALENCE = {
    "love": 8.0, "friend": 7.7, "family": 7.6, "pain": 2.1, "hope": 7.4, "work": 5.2,
    "money": 6.8, "home": 7.5, "school": 5.6, "city": 5.5, "fear": 2.4, "dream": 7.2,
    "war": 1.6, "job": 5.9, "music": 7.6, "child": 6.9, "doctor": 5.7, "teacher": 6.0,
    "future": 6.4, "heart": 6.6, "world": 6.0, "death": 1.7, "problem": 2.9, "joy": 8.2,
    "anger": 2.5, "garden": 6.7, "party": 7.4, "gift": 7.7, "disease": 1.9, "storm": 3.4,
    "holiday": 7.9, "crime": 2.0, "baby": 7.3, "life": 7.0,
    "want": 6.1, "help": 6.9, "need": 5.3, "hate": 2.2, "find": 6.0, "lose": 2.6,
    "miss": 3.3, "build": 6.3, "hurt": 2.0, "enjoy": 7.9, "share": 6.9, "protect": 6.5,
    "destroy": 2.1, "celebrate": 7.8,
    "happy": 8.3, "sad": 2.0, "hard": 4.0, "good": 7.5, "bad": 2.5, "beautiful": 8.0,
    "terrible": 1.9, "calm": 6.9, "angry": 2.5, "bright": 6.8, "dark": 4.0, "safe": 7.0,
    "dangerous": 2.6, "free": 7.4, "lonely": 2.4, "new": 6.2,
    "i": 6.2, "you": 6.0, "we": 6.3, "they": 5.3, "s/he": 5.6, "be": 5.2, "do": 5.1,
    "not": 3.5, "the": 5.0, "a": 5.0, "in": 5.1, "with": 5.2, "for": 5.3, "at": 5.0,
    "to": 5.0, "and": 5.2, "which": 5.0, "very": 5.5,
}

EMOTIONS = ["anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust"]
EMOTION_WORDS = {
    "love": ["joy", "trust"], "friend": ["joy", "trust"], "family": ["trust"],
    "pain": ["fear", "sadness"], "hope": ["anticipation", "joy", "trust"],
    "money": ["anger", "anticipation", "joy", "trust"], "fear": ["fear"],
    "dream": ["anticipation", "joy"], "war": ["anger", "fear", "sadness"],
    "music": ["joy", "sadness", "surprise"], "child": ["anticipation", "joy"],
    "doctor": ["trust"], "teacher": ["trust"], "future": ["anticipation"],
    "death": ["anger", "disgust", "fear", "sadness", "surprise"],
    "problem": ["fear", "sadness"], "joy": ["joy", "trust"], "anger": ["anger"],
    "garden": ["joy"], "party": ["anticipation", "joy", "surprise"],
    "gift": ["anticipation", "joy", "surprise", "trust"],
    "disease": ["anger", "disgust", "fear", "sadness"], "storm": ["anger", "fear", "surprise"],
    "holiday": ["anticipation", "joy"], "crime": ["anger", "disgust", "fear", "sadness"],
    "baby": ["joy"], "life": ["anticipation"], "want": ["anticipation"], "help": ["trust"],
    "hate": ["anger", "disgust", "fear", "sadness"], "lose": ["anger", "sadness"],
    "miss": ["sadness"], "hurt": ["anger", "fear", "sadness"], "enjoy": ["anticipation", "joy"],
    "share": ["joy", "trust"], "protect": ["trust"], "destroy": ["anger", "fear", "disgust"],
    "celebrate": ["anticipation", "joy", "surprise"], "happy": ["anticipation", "joy", "trust"],
    "sad": ["sadness"], "good": ["joy", "trust"], "bad": ["anger", "disgust", "fear", "sadness"],
    "beautiful": ["joy"], "terrible": ["anger", "disgust", "fear", "sadness"], "calm": ["trust"],
    "angry": ["anger", "disgust"], "bright": ["joy", "surprise", "trust"], "dark": ["fear", "sadness"],
    "safe": ["joy", "trust"], "dangerous": ["fear"], "free": ["joy", "trust"],
    "lonely": ["sadness"], "new": [],
    "home": [], "work": [], "school": ["trust"], "city": [], "job": [], "heart": [], "world": [],
}

STOPWORDS = ["the", "a", "an", "be", "do", "to", "not", "in", "with", "for", "at", "and",
             "which", "very", "of", "it", "that", "this"]

FA_ASSOCIATIONS = {
    "love": ["heart", "family", "joy", "friend", "baby", "kiss", "happy"],
    "want": ["need", "money", "dream", "wish"], "help": ["friend", "doctor", "need", "support"],
    "life": ["death", "love", "family", "joy", "future", "happy"],
    "i": ["you", "myself", "self", "happy", "friend"], "me": ["i", "myself"],
    "money": ["work", "job", "gift"], "war": ["death", "fear", "crime"],
    "fear": ["dark", "storm", "pain"], "family": ["home", "child", "love"],
    "death": ["pain", "sad", "war"], "school": ["teacher", "child", "work"],
    "music": ["party", "joy", "dance"], "hope": ["dream", "future", "safe"],
    "dream": ["hope", "night"], "friend": ["trust", "party", "share"],
    "heart": ["love", "pain"], "home": ["safe", "family", "garden"],
}

SYLLABLES = ["ba", "lo", "ti", "ren", "ka", "mu", "so", "vel", "dri", "pa", "nor", "zen",
             "qua", "fi", "lem", "ost", "ru", "tan"]


def filler_words(rng, n, taken):
    out = []
    while len(out) < n:
        w = "".join(rng.choice(SYLLABLES) for _ in range(rng.randint(2, 3)))
        if w not in taken:
            taken.add(w)
            out.append(w)
    return out


class Builder:
    """One sentence; tokens are (form, lemma, upos, xpos, head, deprel)."""

    def __init__(self):
        self.toks = []

    def add(self, form, lemma, upos, xpos, head, deprel):
        self.toks.append([form, lemma, upos, xpos, head, deprel])
        return len(self.toks)

    def set_head(self, i, head):
        self.toks[i - 1][4] = head


def pick(rng, items, weights=None):
    return rng.choices(items, weights=weights, k=1)[0]


def choose_subject(rng, topic):
    r = rng.random()
    if r < 0.45:
        return "i", "PRON"
    if r < 0.7:
        return pick(rng, ["you", "we", "they", "he", "she"]), "PRON"
    return pick(rng, topic + NOUNS[:8]), "NOUN"


def add_subject(b, rng, lemma, kind, capital):
    if kind == "PRON":
        form = PRONOUNS[lemma][0]
        if capital:
            form = form[0].upper() + form[1:]
        return b.add(form, lemma, "PRON", "PRP", 0, "nsubj"), PRONOUNS[lemma][1]
    det_idx = None
    if lemma not in ("love", "life", "money", "music", "hope", "fear", "anger", "joy", "work", "death"):
        det_idx = b.add("The" if capital else "the", "the", "DET", "DT", 0, "det")
        capital = False
    form = lemma.capitalize() if capital else lemma
    i = b.add(form, lemma, "NOUN", "NN", 0, "nsubj")
    if det_idx:
        b.set_head(det_idx, i)
    return i, True


def verb_form(lemma, third, past):
    if past:
        return VERBS[lemma][1], "VBD"
    if third:
        return VERBS[lemma][0], "VBZ"
    return lemma, "VBP"


def add_object(b, rng, head, topic, deprel="dobj"):
    if rng.random() < 0.12:
        lemma = pick(rng, list(PRON_OBJ))
        return b.add(PRON_OBJ[lemma], lemma, "PRON", "PRP", head, deprel)
    noun = pick(rng, topic + NOUNS, None)
    det = None
    if rng.random() < 0.6:
        det = b.add(pick(rng, ["the", "a"]), None, "DET", "DT", 0, "det")
        b.toks[det - 1][1] = b.toks[det - 1][0]
    adj = None
    if rng.random() < 0.35:
        a = pick(rng, ADJS)
        adj = b.add(a, a, "ADJ", "JJ", 0, "amod")
    n = b.add(noun, noun, "NOUN", "NN", head, deprel)
    for x in (det, adj):
        if x:
            b.set_head(x, n)
    return n


def sentence(rng, topic):
    b = Builder()
    t = rng.random()
    subj_lemma, kind = choose_subject(rng, topic)
    past = rng.random() < 0.3
    if t < 0.35:  # S V O .
        s, third = add_subject(b, rng, subj_lemma, kind, True)
        v = pick(rng, list(VERBS))
        form, xpos = verb_form(v, third, past)
        vi = b.add(form, v, "VERB", xpos, 0, "ROOT")
        b.set_head(s, vi)
        add_object(b, rng, vi, topic)
        b.add(".", ".", "PUNCT", ".", vi, "punct")
    elif t < 0.5:  # S be ADJ .
        s, third = add_subject(b, rng, subj_lemma, kind, True)
        if subj_lemma == "i" and not past:
            form = "am"
        elif past:
            form = "was" if third or subj_lemma == "i" else "were"
        else:
            form = "is" if third else "are"
        vi = b.add(form, "be", "AUX", "VBZ", 0, "ROOT")
        b.set_head(s, vi)
        if rng.random() < 0.3:
            very = b.add("very", "very", "ADV", "RB", 0, "advmod")
        else:
            very = None
        a = pick(rng, ADJS)
        ai = b.add(a, a, "ADJ", "JJ", vi, "acomp")
        if very:
            b.set_head(very, ai)
        b.add(".", ".", "PUNCT", ".", vi, "punct")
    elif t < 0.62:  # S V O PREP N .
        s, third = add_subject(b, rng, subj_lemma, kind, True)
        v = pick(rng, list(VERBS))
        form, xpos = verb_form(v, third, past)
        vi = b.add(form, v, "VERB", xpos, 0, "ROOT")
        b.set_head(s, vi)
        add_object(b, rng, vi, topic)
        p = pick(rng, PREPS)
        pi = b.add(p, p, "ADP", "IN", vi, "prep")
        add_object(b, rng, pi, topic, "pobj")
        b.add(".", ".", "PUNCT", ".", vi, "punct")
    elif t < 0.74:  # S do not V O .
        s, third = add_subject(b, rng, subj_lemma, kind, True)
        if past:
            do_form = "did"
        else:
            do_form = "does" if third else "do"
        di = b.add(do_form, "do", "AUX", "VBP", 0, "aux")
        ni = b.add("not", "not", "PART", "RB", 0, "neg")
        v = pick(rng, list(VERBS))
        vi = b.add(v, v, "VERB", "VB", 0, "ROOT")
        for x in (s, di, ni):
            b.set_head(x, vi)
        add_object(b, rng, vi, topic)
        b.add(".", ".", "PUNCT", ".", vi, "punct")
    elif t < 0.86:  # S V to V2 O .
        s, third = add_subject(b, rng, subj_lemma, kind, True)
        v = pick(rng, ["want", "need", "love", "hate"])
        form, xpos = verb_form(v, third, past)
        vi = b.add(form, v, "VERB", xpos, 0, "ROOT")
        b.set_head(s, vi)
        ti = b.add("to", "to", "PART", "TO", 0, "aux")
        v2 = pick(rng, list(VERBS))
        v2i = b.add(v2, v2, "VERB", "VB", vi, "xcomp")
        b.set_head(ti, v2i)
        add_object(b, rng, v2i, topic)
        b.add(".", ".", "PUNCT", ".", vi, "punct")
    else:  # S V O , which V2 O2 .
        s, third = add_subject(b, rng, subj_lemma, kind, True)
        v = pick(rng, list(VERBS))
        form, xpos = verb_form(v, third, past)
        vi = b.add(form, v, "VERB", xpos, 0, "ROOT")
        b.set_head(s, vi)
        oi = add_object(b, rng, vi, topic)
        b.add(",", ",", "PUNCT", ",", oi, "punct")
        wi = b.add("which", "which", "PRON", "WDT", 0, "nsubj")
        v2 = pick(rng, list(VERBS))
        form2, xpos2 = verb_form(v2, True, past)
        v2i = b.add(form2, v2, "VERB", xpos2, oi, "relcl")
        b.set_head(wi, v2i)
        add_object(b, rng, v2i, topic)
        b.add(".", ".", "PUNCT", ".", vi, "punct")
    return b.toks


def write_corpus(rng, out):
    lines = []
    for d in range(N_DOCS):
        topic = TOPICS[d % len(TOPICS)]
        lines.append(f"# newdoc id = doc{d + 1:02d}")
        words = 0
        s = 0
        target = rng.randint(100, 130)
        while words < target:
            toks = sentence(rng, topic)
            s += 1
            text = " ".join(t[0] for t in toks)
            lines.append(f"# sent_id = doc{d + 1:02d}-s{s}")
            lines.append(f"# text = {text}")
            for i, (form, lemma, upos, xpos, head, deprel) in enumerate(toks, 1):
                lines.append(f"{i}\t{form}\t{lemma}\t{upos}\t{xpos}\t_\t{head}\t{deprel}\t_\t_")
            lines.append("")
            words += sum(1 for t in toks if t[2] != "PUNCT")
    (out / "corpus.conllu").write_text("\n".join(lines) + "\n")


def write_lexicons(rng, out):
    taken = set(VALENCE) | set(EMOTION_WORDS)
    fillers = filler_words(rng, 240, taken)
    val = dict(VALENCE)
    for w in fillers:
        val[w] = round(rng.uniform(1.5, 8.5), 2)
    with open(out / "valence.tsv", "w") as f:
        f.write("# lemma\tscore\n")
        for w in sorted(val):
            f.write(f"{w}\t{val[w]}\n")

    emo = {w: set(e) for w, e in EMOTION_WORDS.items()}
    for w in fillers:
        emo[w] = {e for e in EMOTIONS if rng.random() < 0.12}
    with open(out / "emotions.tsv", "w") as f:
        for w in sorted(emo):
            for e in ["anger", "anticipation", "disgust", "fear", "joy", "negative",
                      "positive", "sadness", "surprise", "trust"]:
                if e == "positive":
                    flag = int(val.get(w, 5) > 6)
                elif e == "negative":
                    flag = int(val.get(w, 5) < 4)
                else:
                    flag = int(e in emo[w])
                f.write(f"{w}\t{e}\t{flag}\n")

    (out / "stopwords.txt").write_text("\n".join(STOPWORDS) + "\n")


def write_fa(rng, out):
    rows = []
    for cue in sorted(FA_ASSOCIATIONS):
        for resp in FA_ASSOCIATIONS[cue]:
            rows.append(f"{cue}\t{resp}\t{rng.randint(1, 6)}")
    # A few reversed pairs so weights accumulate across directions.
    rows.append("heart\tlove\t2")
    rows.append("death\tlife\t3")
    (out / "fa.tsv").write_text("# cue\tresponse\tcount\n" + "\n".join(rows) + "\n")


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "synthetic"
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    write_corpus(rng, out)
    write_lexicons(rng, out)
    write_fa(rng, out)


if __name__ == "__main__":
    main()
