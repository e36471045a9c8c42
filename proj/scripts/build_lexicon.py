#!/usr/bin/env python3
# Copyright 2026 The causemap Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/lexicon.tsv and data/lemma_exceptions.tsv.

Inputs (all fetched from PyPI, none needed at runtime):
  * Pattern3 3.0.0: en-lexicon.txt (Brill tagger lexicon, MIT license) and
    en-verbs.txt (verb inflection table, BSD license).
  * spacy-lookups-data 1.0.5: en_lemma_exc.json.gz (WordNet 3.0 exception
    lists, WordNet license).
  * wordfreq 3.x: used only to rank entries by frequency.

Usage:
  pip download Pattern3 --no-binary :all: --no-deps -d /tmp/src
  pip download spacy-lookups-data --no-deps -d /tmp/src
  pip install wordfreq
  python3 scripts/build_lexicon.py /tmp/src data/

The suffix rules below mirror src/lemmatizer.cc. Exceptions are emitted only
for forms those rules would get wrong, so the two must be kept in sync.
"""

import gzip
import json
import sys
import tarfile
import zipfile
from pathlib import Path

import wordfreq

VOCAB_SIZE = 25000

PENN_TO_COARSE = {
    "NN": "NOUN", "NNS": "NOUN", "NNP": "NOUN", "NNPS": "NOUN", "FW": "NOUN",
    "VB": "VERB", "VBD": "VERB", "VBG": "VERB", "VBN": "VERB", "VBP": "VERB",
    "VBZ": "VERB",
    "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV", "WRB": "ADV",
    "DT": "DET", "PDT": "DET", "WDT": "DET",
    "PRP": "PRON", "PRP$": "PRON", "WP": "PRON", "WP$": "PRON", "EX": "PRON",
    "IN": "ADP", "TO": "ADP", "RP": "ADP",
    "CC": "CONJ",
    "CD": "NUM",
    "MD": "OTHER", "UH": "OTHER", "SYM": "OTHER", "LS": "OTHER",
    "POS": "OTHER",
}
PUNCT_TAGS = {".", ",", ":", "(", ")", "\"", "``", "''", "#", "$", "-LRB-",
              "-RRB-"}

# Closed-class forms the tagger must see with a fixed tag regardless of the
# frequency ranking.
FORCED = {
    "n't": "ADV", "not": "ADV", "'s": "OTHER", "'re": "VERB", "'m": "VERB",
    "'ve": "VERB", "'ll": "OTHER", "'d": "OTHER", "ca": "OTHER",
    "wo": "OTHER", "due": "ADJ", "because": "ADP",
}

CURATED_EXCEPTIONS = [
    ("am", "VERB", "be"), ("are", "VERB", "be"), ("is", "VERB", "be"),
    ("was", "VERB", "be"), ("were", "VERB", "be"), ("been", "VERB", "be"),
    ("being", "VERB", "be"), ("'s", "VERB", "be"), ("'re", "VERB", "be"),
    ("'m", "VERB", "be"), ("has", "VERB", "have"), ("had", "VERB", "have"),
    ("having", "VERB", "have"), ("'ve", "VERB", "have"),
    ("does", "VERB", "do"), ("did", "VERB", "do"), ("done", "VERB", "do"),
    ("doing", "VERB", "do"), ("led", "VERB", "lead"),
    ("gave", "VERB", "give"), ("given", "VERB", "give"),
    ("n't", "ADV", "not"), ("ca", "OTHER", "can"), ("wo", "OTHER", "will"),
    ("children", "NOUN", "child"), ("people", "NOUN", "people"),
    ("data", "NOUN", "data"), ("media", "NOUN", "media"),
]

VOWELS = set("aeiou")
E_ENDINGS = ("at", "iz", "is", "yz", "v", "c", "g", "ur", "ut", "ud", "bl",
             "pl", "tl", "dl", "gl", "kl", "fl")


def is_alpha(word):
    return word.isascii() and word.isalpha()


def undouble(stem):
    if (len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in VOWELS
            and stem[-1] not in "lsfz"):
        return stem[:-1]
    return None


def strip_candidates(stem):
    out = []
    u = undouble(stem)
    if u:
        out.append(u)
    out.append(stem + "e")
    out.append(stem)
    return out


def fallback_stem(stem):
    u = undouble(stem)
    if u:
        return u
    if stem.endswith(E_ENDINGS):
        return stem + "e"
    return stem


def rule_verb(w, known):
    if len(w) > 4 and w.endswith("ies"):
        return w[:-3] + "y"
    if len(w) > 4 and w.endswith("ied"):
        return w[:-3] + "y"
    for suffix in ("ing", "ed"):
        if len(w) > len(suffix) + 2 and w.endswith(suffix):
            stem = w[:-len(suffix)]
            for c in strip_candidates(stem):
                if c in known:
                    return c
            return fallback_stem(stem)
    if len(w) > 3 and w.endswith("s") and not w.endswith(("ss", "us", "is")):
        if w[:-1] in known:
            return w[:-1]
        if w.endswith("es") and w[:-2] in known:
            return w[:-2]
        if w.endswith(("sses", "xes", "ches", "shes", "zes")):
            return w[:-2]
        return w[:-1]
    return w


def rule_noun(w, known):
    if len(w) > 4 and w.endswith("ies"):
        return w[:-3] + "y"
    if len(w) > 2 and w.endswith("s") and not w.endswith(("ss", "us", "is")):
        if w[:-1] in known:
            return w[:-1]
        if w.endswith("es") and w[:-2] in known:
            return w[:-2]
        if w.endswith(("sses", "xes", "ches", "shes", "zes")):
            return w[:-2]
        return w[:-1]
    return w


def rule_adj(w, known):
    for suffix in ("est", "er"):
        if len(w) > len(suffix) + 2 and w.endswith(suffix):
            stem = w[:-len(suffix)]
            cands = []
            if stem.endswith("i"):
                cands.append(stem[:-1] + "y")
            cands.extend(strip_candidates(stem))
            for c in cands:
                if c in known:
                    return c
            return w
    return w


RULES = {"NOUN": rule_noun, "VERB": rule_verb, "ADJ": rule_adj}


def lemmatize(w, pos, known, exceptions):
    """Same contract as the C++ lemmatizer: an exception entry wins,
    otherwise one application of the suffix rules."""
    hit = exceptions.get((w, pos))
    if hit is not None:
        return hit
    rule = RULES.get(pos)
    return rule(w, known[pos]) if rule and is_alpha(w) else w


# Rows of Pattern's verb table with a mistaken base form. A row whose
# third-person form is the mistaken base plus "s" is a generated duplicate
# and is skipped.
VERB_BASE_FIXES = {"wrapped": "wrap"}


def verb_rows(verbs_text):
    for line in verbs_text.splitlines():
        if not line or line.startswith(";;;"):
            continue
        forms = line.split(",")
        fix = VERB_BASE_FIXES.get(forms[0])
        if fix is not None:
            if len(forms) > 3 and forms[3] == forms[0] + "s":
                continue
            forms[0] = fix
        yield forms


def main(src_dir, out_dir):
    src = Path(src_dir)
    out = Path(out_dir)
    with tarfile.open(src / "pattern3-3.0.0.tar.gz") as tar:
        def read(name):
            return tar.extractfile(
                "pattern3-3.0.0/pattern3/text/en/" + name).read().decode()
        brill_text = read("en-lexicon.txt")
        verbs_text = read("en-verbs.txt")
    whl = next(src.glob("spacy_lookups_data-*.whl"))
    with zipfile.ZipFile(whl) as z:
        exc = json.loads(gzip.decompress(
            z.read("spacy_lookups_data/data/en_lemma_exc.json.gz")))

    brill = {}
    for line in brill_text.splitlines():
        if not line or line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) != 2:
            continue
        brill.setdefault(parts[0], parts[1])

    def penn_for(word):
        if word in brill:
            return brill[word]
        for variant in (word.capitalize(), word.upper()):
            if variant in brill:
                return brill[variant]
        return None

    def coarse(penn):
        if penn in PUNCT_TAGS:
            return "PUNCT"
        return PENN_TO_COARSE.get(penn)

    vocab = []
    for word in wordfreq.top_n_list("en", 60000):
        if len(vocab) >= VOCAB_SIZE:
            break
        if "\t" in word or " " in word:
            continue
        penn = penn_for(word)
        if penn is None or coarse(penn) is None:
            continue
        vocab.append(word)
    vocab_set = set(vocab)
    for word in FORCED:
        if word not in vocab_set:
            vocab.append(word)
            vocab_set.add(word)

    primary = {}
    penn_of = {}
    for word in vocab:
        penn = penn_for(word)
        penn_of[word] = penn
        primary[word] = FORCED.get(word) or coarse(penn)
    alts = {word: [] for word in vocab}

    def add_alt(word, tag):
        if word in vocab_set and tag != primary[word] and tag not in alts[word]:
            alts[word].append(tag)

    # Verb inflection table: every form is a possible verb; the base and the
    # -s form of a noun-capable base are possible nouns; -ing forms are
    # possible gerund nouns.
    for forms in verb_rows(verbs_text):
        base = forms[0]
        third = forms[3] if len(forms) > 3 else ""
        gerund = forms[5] if len(forms) > 5 else ""
        past = forms[10] if len(forms) > 10 else ""
        participle = forms[11] if len(forms) > 11 else ""
        for f in (base, third, gerund, past, participle):
            if f:
                add_alt(f, "VERB")
        base_nounish = base in vocab_set and (
            primary[base] == "NOUN" or "NOUN" in alts[base])
        if base_nounish and third:
            add_alt(third, "NOUN")
        if gerund:
            add_alt(gerund, "NOUN")
        if participle:
            add_alt(participle, "ADJ")
        if third in vocab_set and primary[third] == "NOUN":
            add_alt(base, "NOUN")

    # Words whose primary tag is a verb but that read as nouns after a
    # determiner: add NOUN if a plural form exists in the vocabulary.
    for word in vocab:
        if primary[word] == "VERB" and penn_of[word] in ("VB", "VBP"):
            if word + "s" in vocab_set and primary[word + "s"] == "NOUN":
                add_alt(word, "NOUN")

    known = {"NOUN": set(), "VERB": set(), "ADJ": set()}
    for word in vocab:
        for tag in [primary[word]] + alts[word]:
            if tag in known:
                known[tag].add(word)

    exceptions = {}
    for surface, pos, lemma in CURATED_EXCEPTIONS:
        exceptions[(surface, pos)] = lemma
    pos_map = {"noun": "NOUN", "verb": "VERB", "adj": "ADJ", "adv": "ADV"}
    for key, table in exc.items():
        pos = pos_map[key]
        for surface, lemmas in sorted(table.items()):
            if not is_alpha(surface) or not lemmas:
                continue
            exceptions.setdefault((surface, pos), lemmas[0])
    # Verb-table forms and their bases. A form listed under several bases
    # ("routing" for "route" and "rout") belongs to the most frequent one,
    # and a form that is also a base ("shot") prefers the other bases.
    rank = {word: i for i, word in enumerate(vocab)}
    claims = {}
    for forms in verb_rows(verbs_text):
        base = forms[0]
        if base not in vocab_set:
            continue
        for idx in (3, 5, 10, 11):
            if idx < len(forms) and forms[idx] and is_alpha(forms[idx]):
                claims.setdefault(forms[idx], set()).add(base)
    preferred = {f: min(bases - {f} or bases, key=rank.__getitem__)
                 for f, bases in claims.items()}
    # Irregular or ambiguous verb-table forms.
    for f, base in sorted(preferred.items()):
        hit = exceptions.get((f, "VERB"))
        if hit is not None and (hit == base or hit not in claims[f]):
            continue
        if lemmatize(f, "VERB", known, exceptions) != base or hit is not None:
            exceptions[(f, "VERB")] = base
    # Base forms the suffix rules would mangle ("need", "news", "clever").
    base_tags = {"VB": "VERB", "VBP": "VERB", "NN": "NOUN", "NNP": "NOUN",
                 "JJ": "ADJ"}
    for word in vocab:
        pos = base_tags.get(penn_of[word])
        if pos is None or not is_alpha(word) or (word, pos) in exceptions:
            continue
        if lemmatize(word, pos, known, exceptions) != word:
            exceptions[(word, pos)] = word
    # Verb-table bases are lemmas whatever their most frequent tag.
    for forms in verb_rows(verbs_text):
        base = forms[0]
        if base not in vocab_set or not is_alpha(base) or (base, "VERB") in exceptions:
            continue
        if lemmatize(base, "VERB", known, exceptions) != base:
            exceptions[(base, "VERB")] = base

    with open(out / "lexicon.tsv", "w", encoding="utf-8") as f:
        f.write("# English word/tag lexicon for the causemap tagger.\n")
        f.write("# Format: surface<TAB>TAG. The first line for a surface is\n")
        f.write("# its most frequent tag; further lines list other tags the\n")
        f.write("# contextual rules may choose. Ordered by word frequency.\n")
        f.write("#\n")
        f.write("# Derived from the lexicon of Eric Brill's rule-based tagger\n")
        f.write("# v1.14 (Copyright 1993 MIT and University of Pennsylvania,\n")
        f.write("# MIT license) as redistributed in Pattern 3.0 (BSD), and\n")
        f.write("# Pattern's verb inflection table. Penn tags are mapped to\n")
        f.write("# the coarse tag set. Frequency ranking from wordfreq.\n")
        f.write("# Regenerate with scripts/build_lexicon.py.\n")
        for word in vocab:
            f.write(f"{word}\t{primary[word]}\n")
            for tag in alts[word]:
                f.write(f"{word}\t{tag}\n")

    with open(out / "lemma_exceptions.tsv", "w", encoding="utf-8") as f:
        f.write("# Lemmatizer exception table.\n")
        f.write("# Format: surface<TAB>POS<TAB>lemma.\n")
        f.write("#\n")
        f.write("# Sources: WordNet 3.0 exception lists (Princeton University,\n")
        f.write("# WordNet license) via spacy-lookups-data; irregular forms\n")
        f.write("# from Pattern's verb table; a short curated list for\n")
        f.write("# auxiliaries and clitics; identity entries for base forms\n")
        f.write("# that the suffix rules would otherwise alter.\n")
        f.write("# Regenerate with scripts/build_lexicon.py.\n")
        for (surface, pos), lemma in sorted(exceptions.items()):
            f.write(f"{surface}\t{pos}\t{lemma}\n")

    # A frozen sample of the verb table for the lemmatizer regression test.
    sample = []
    for forms in verb_rows(verbs_text):
        if forms[0] in vocab_set:
            for idx in (3, 5, 10):
                f = forms[idx] if idx < len(forms) else ""
                if not f or not is_alpha(f):
                    continue
                # Skip forms where WordNet and the verb table disagree.
                hit = exceptions.get((f, "VERB"))
                if hit is None or hit in claims[f]:
                    sample.append((f, preferred[f]))
    sample = sorted(set(sample))[::max(1, len(sample) // 600)]
    with open(out / "verb_forms_sample.tsv", "w", encoding="utf-8") as f:
        f.write("# form<TAB>lemma pairs sampled from Pattern's verb table.\n")
        for form, lemma in sample:
            f.write(f"{form}\t{lemma}\n")

    print(f"lexicon: {len(vocab)} words, "
          f"{sum(len(v) for v in alts.values())} alternative tags")
    print(f"exceptions: {len(exceptions)}")
    print(f"verb sample: {len(sample)}")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
