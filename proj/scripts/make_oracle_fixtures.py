#!/usr/bin/env python3
"""Regenerate the frozen test fixtures under tests/fixtures/.

Reference statistics (Welch t, Welch-Satterthwaite df, two-tailed p, Pearson r)
come from scipy and are frozen into JSON so the C++ test suite can check its
own kernels against an independently computed source. The synthetic corpus and
its expected test outcomes are produced by a small standalone re-implementation
of the pipeline's counting rules, kept deliberately separate from the C++ code.

Run from the repository root:  python3 scripts/make_oracle_fixtures.py
"""

import hashlib
import json
import math
import os
import random
import re

import numpy as np
from scipy import stats

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIX = os.path.join(ROOT, "tests", "fixtures")
os.makedirs(FIX, exist_ok=True)
os.makedirs(os.path.join(FIX, "norms"), exist_ok=True)


# ---------------------------------------------------------------- welch oracle

def welch_oracle():
    rng = np.random.default_rng(987654321)
    cases = []
    for i in range(50):
        na = int(rng.integers(5, 201))
        nb = int(rng.integers(5, 201))
        mu_a = float(rng.uniform(-5, 5))
        # half the cases draw both samples from the same location
        mu_b = mu_a if i % 2 == 0 else float(rng.uniform(-5, 5))
        sd_a = float(rng.uniform(0.5, 3.0))
        sd_b = float(rng.uniform(0.5, 3.0))
        a = rng.normal(mu_a, sd_a, na)
        b = rng.normal(mu_b, sd_b, nb)
        res = stats.ttest_ind(a, b, equal_var=False)
        cases.append({
            "a": a.tolist(),
            "b": b.tolist(),
            "t": float(res.statistic),
            "df": float(res.df),
            "p": float(res.pvalue),
        })

    spot_p = []
    for t, df in [(0.0, 5.0), (1.0, 8.0), (-1.0, 8.0), (0.5, 1.0), (2.0, 2.5),
                  (2.0, 30.0), (5.0, 12.0), (10.0, 3.0), (0.25, 120.7),
                  (3.5, 60.0), (8.0, 200.0), (0.01, 7.0)]:
        spot_p.append({"t": t, "df": df,
                       "p": float(2.0 * stats.t.sf(abs(t), df))})

    rng2 = np.random.default_rng(24680)
    pearson_cases = []
    for _ in range(20):
        n = int(rng2.integers(5, 60))
        x = rng2.normal(0, 2, n)
        y = 0.4 * x + rng2.normal(0, 1.5, n)
        r, _ = stats.pearsonr(x, y)
        pearson_cases.append({"x": x.tolist(), "y": y.tolist(), "r": float(r)})

    with open(os.path.join(FIX, "welch_oracle.json"), "w") as f:
        json.dump({"welch": cases, "p_spot": spot_p, "pearson": pearson_cases},
                  f, indent=1)
    print(f"welch_oracle.json: {len(cases)} welch, {len(spot_p)} p-spot, "
          f"{len(pearson_cases)} pearson")


# ------------------------------------------------------------- formula oracle

def formula_oracle():
    def fk(T, S, Syl):
        return 0.39 * (T / S) + 11.8 * (Syl / T) - 15.59

    def nari(T, S, Ch):
        return 5.84 * (Ch / T) + 0.37 * (T / S) - 26.01

    def cl(T, S, Ch):
        return 0.0588 * (100.0 * Ch / T) - 0.296 * (100.0 * S / T) - 15.8

    def smog(S, Poly):
        return 1.0430 * math.sqrt(Poly * 30.0 / S) + 3.1291

    def gf(T, S, Poly):
        return 0.4 * (T / S + 100.0 * Poly / T)

    def linsear(S, easy, hard):
        r = (easy * 1.0 + hard * 3.0) / S
        return r / 2.0 - 1.0 if r <= 20.0 else r / 2.0

    cases = [
        {"formula": "flesch_kincaid", "T": 10, "S": 1, "Syl": 13,
         "expected": fk(10, 1, 13)},
        {"formula": "flesch_kincaid", "T": 24, "S": 2, "Syl": 30,
         "expected": fk(24, 2, 30)},
        {"formula": "new_ari", "T": 10, "S": 2, "Ch": 45,
         "expected": nari(10, 2, 45)},
        {"formula": "coleman_liau", "T": 100, "S": 4, "Ch": 450,
         "expected": cl(100, 4, 450)},
        {"formula": "smog", "S": 3, "Poly": 0, "expected": smog(3, 0)},
        {"formula": "smog", "S": 30, "Poly": 6, "expected": smog(30, 6)},
        {"formula": "gunning_fog", "T": 100, "S": 4, "Poly": 8,
         "expected": gf(100, 4, 8)},
        {"formula": "gunning_fog", "T": 60, "S": 5, "Poly": 0,
         "expected": gf(60, 5, 0)},
        {"formula": "linsear", "S": 2, "easy": 18, "hard": 2,
         "expected": linsear(2, 18, 2)},
        {"formula": "linsear", "S": 1, "easy": 30, "hard": 10,
         "expected": linsear(1, 30, 10)},
    ]
    # cross-check the two fully hand-worked values
    assert abs(cases[0]["expected"] - 3.65) < 1e-12
    assert abs(cases[6]["expected"] - 13.2) < 1e-12
    with open(os.path.join(FIX, "formula_cases.json"), "w") as f:
        json.dump(cases, f, indent=1)
    print(f"formula_cases.json: {len(cases)} cases")


# -------------------------------------------------- synthetic protocol corpus

VOCAB = {
    "det": ["the", "this", "that"],
    "noun": ["dog", "cat", "river", "garden", "story", "window", "teacher",
             "mountain", "village", "morning", "letter", "road", "winter",
             "animal", "festival", "calendar", "visitor", "melody",
             "elephant", "umbrella", "bicycle"],
    "verb": ["ran", "runs", "sits", "finds", "sings", "grows", "opens",
             "follows", "remembers", "imagines"],
    "adj": ["quick", "small", "bright", "green", "happy", "gentle",
            "ancient", "careful"],
    "adv": ["slowly", "quietly", "often", "gently", "always", "never",
            "carefully"],
    "sconj": ["because", "although", "while", "since"],
    "cconj": ["and", "but", "or"],
    "pron": ["he", "she", "they", "it", "we"],
    "adp": ["in", "on", "near", "over", "under", "through"],
    "aux": ["is", "was", "were", "has"],
}

INJECTED = ["zakamino", "belurodi", "mokarela", "tupelani", "vorimalo"]

TEMPLATES = [
    ["det", "adj", "noun", "verb", "adp", "det", "noun"],
    ["pron", "verb", "det", "noun", "cconj", "det", "noun", "verb", "adv"],
    ["det", "noun", "verb", "adv", "sconj", "det", "noun", "aux", "adj"],
    ["adv", "det", "adj", "noun", "verb", "det", "adj", "noun"],
    ["det", "noun", "adp", "det", "noun", "verb", "det", "noun", "adv"],
    ["pron", "aux", "adj", "cconj", "pron", "verb", "adv"],
    ["sconj", "det", "noun", "verb", "det", "noun", "verb", "adp", "det",
     "noun"],
    ["det", "adj", "adj", "noun", "verb", "cconj", "det", "noun", "verb",
     "det", "noun"],
]


def load_exceptions():
    exc = {}
    with open(os.path.join(ROOT, "data", "syllable_exceptions.tsv")) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            word, count = line.split("\t")
            exc[word] = int(count)
    return exc


def syllables(word, exceptions):
    w = word.lower()
    if w in exceptions:
        return exceptions[w]
    if not any(c.isalpha() for c in w):
        return 0
    vowels = "aeiouy"
    groups = len(re.findall(f"[{vowels}]+", w))
    if w.endswith("e"):
        le_after_consonant = (len(w) >= 3 and w[-2] == "l"
                              and w[-3].isalpha() and w[-3] not in vowels)
        if not le_after_consonant:
            groups -= 1
    return max(1, groups)


def make_sentence(rng, first=False):
    tpl = rng.choice(TEMPLATES)
    words = [rng.choice(VOCAB[slot]) for slot in tpl]
    words[0] = words[0].capitalize()
    return words


def make_doc(rng):
    while True:
        nsent = rng.randint(12, 20)
        sents = [make_sentence(rng) for _ in range(nsent)]
        nwords = sum(len(s) for s in sents)
        if 150 <= nwords <= 275:
            return sents


def doc_text(sents):
    parts = []
    for s in sents:
        parts.append(" ".join(s[:-1] + [s[-1] + "."]))
    return " ".join(parts)


def doc_counts(sents, exceptions):
    words = [w for s in sents for w in s]
    T = len(words)
    S = len(sents)
    syl = sum(syllables(w, exceptions) for w in words)
    poly = sum(1 for w in words if syllables(w, exceptions) >= 3)
    return T, S, syl, poly


def synthetic_corpus():
    exceptions = load_exceptions()

    # confirm the probe vocabulary stays disjoint from / inside the shipped
    # tag lexicon as intended
    lex = set()
    with open(os.path.join(ROOT, "data", "builtin_tags.tsv")) as f:
        for line in f:
            if line.startswith("#"):
                continue
            lex.add(line.split("\t")[0])
    for slot, words in VOCAB.items():
        for w in words:
            assert w in lex, f"vocab word missing from tag lexicon: {w}"
    for w in INJECTED:
        assert w not in lex, f"injected word must stay out-of-vocabulary: {w}"
        assert w not in exceptions
        assert syllables(w, exceptions) == 4, w

    rng = random.Random(31415926)
    docs = [make_doc(rng) for _ in range(100)]

    with open(os.path.join(FIX, "synthetic_pairs.jsonl"), "w") as f:
        for i, sents in enumerate(docs):
            text = doc_text(sents)
            rec = {"id": f"pair_{i:03d}", "prompt": text,
                   "continuation": text, "model": "human"}
            f.write(json.dumps(rec) + "\n")

    injected_docs = []
    with open(os.path.join(FIX, "synthetic_pairs_injected.jsonl"), "w") as f:
        for i, sents in enumerate(docs):
            extra = [INJECTED[(i + k) % len(INJECTED)] for k in range(20)]
            inj = [list(s) for s in sents]
            inj[-1] = inj[-1] + extra
            injected_docs.append(inj)
            rec = {"id": f"pair_{i:03d}", "prompt": doc_text(sents),
                   "continuation": doc_text(inj), "model": "human"}
            f.write(json.dumps(rec) + "\n")

    # expected Welch outcomes for the syllable-sensitive features
    def feats(T, S, syl, poly):
        return {
            "avg_syllables_per_token": syl / T,
            "flesch_kincaid": 0.39 * (T / S) + 11.8 * (syl / T) - 15.59,
            "smog": 1.0430 * math.sqrt(poly * 30.0 / S) + 3.1291,
            "gunning_fog": 0.4 * (T / S + 100.0 * poly / T),
        }

    prompt_vals = {k: [] for k in feats(1, 1, 1, 0)}
    cont_vals = {k: [] for k in feats(1, 1, 1, 0)}
    for sents, inj in zip(docs, injected_docs):
        for k, v in feats(*doc_counts(sents, exceptions)).items():
            prompt_vals[k].append(v)
        for k, v in feats(*doc_counts(inj, exceptions)).items():
            cont_vals[k].append(v)

    expected = {}
    for k in prompt_vals:
        res = stats.ttest_ind(np.array(prompt_vals[k]),
                              np.array(cont_vals[k]), equal_var=False)
        expected[k] = {"t": float(res.statistic), "df": float(res.df),
                       "p": float(res.pvalue)}
        assert expected[k]["p"] < 0.0167, (k, expected[k])

    out = {
        "n_pairs": len(docs),
        "injected_words": INJECTED,
        "injected_per_continuation": 20,
        "significant_features": expected,
        # both numerator and denominator of these stay untouched by the
        # injected nouns, so prompt and continuation samples are identical
        "identical_features": [
            "avg_cconj_per_sentence",
            "cconj_to_adj_ratio",
            "cconj_to_verb_ratio",
            "cconj_to_adv_ratio",
            "cconj_to_sconj_ratio",
        ],
    }
    with open(os.path.join(FIX, "sensitivity_expected.json"), "w") as f:
        json.dump(out, f, indent=1)
    print(f"synthetic corpus: {len(docs)} pairs; sensitivity p-values:",
          {k: round(v["p"], 6) for k, v in expected.items()})


# ------------------------------------------------------------- norm lexicons

NORM_LEXICONS = [
    ("aoa_kuperman_word", "surface"),
    ("aoa_lemma", "lemma"),
    ("aoa_bird", "lemma"),
    ("aoa_bristol", "lemma"),
    ("aoa_cortese_khanna", "lemma"),
    ("subtlex_wf", "surface"),
    ("subtlex_cd", "surface"),
    ("subtlex_freq", "surface"),
    ("subtlex_cdl", "surface"),
    ("subtlex_subtl", "surface"),
    ("subtlex_lg10wf", "surface"),
    ("subtlex_sublcd", "surface"),
    ("subtlex_lgcd", "surface"),
]


def norm_value(name, word):
    digest = hashlib.md5(f"{name}:{word}".encode()).hexdigest()
    return 2.0 + (int(digest[:8], 16) % 800) / 100.0


def norm_fixtures():
    vocab = sorted({w for ws in VOCAB.values() for w in ws})
    profiles = []
    for name, kind in NORM_LEXICONS:
        path = os.path.join(FIX, "norms", f"{name}.tsv")
        with open(path, "w") as f:
            f.write("Word\tRating\n")
            for w in vocab:
                f.write(f"{w}\t{norm_value(name, w):.2f}\n")
        profiles.append({"name": name, "path": f"{name}.tsv",
                         "delimiter": "\t", "key_column": "Word",
                         "value_column": "Rating", "key_kind": kind})
    with open(os.path.join(FIX, "norms", "profiles.json"), "w") as f:
        json.dump(profiles, f, indent=1)
    print(f"norms: {len(profiles)} lexicons x {len(vocab)} words")


if __name__ == "__main__":
    welch_oracle()
    formula_oracle()
    synthetic_corpus()
    norm_fixtures()
