#!/usr/bin/env python3
# Copyright 2026 The rdrtag Authors.
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

"""Generates the bundled toy corpus (data/toy_corpus.txt).

A small stochastic grammar over Penn-style tags. Lexical ambiguity is
deliberate (plan/NN vs plan/VB, planned/VBD vs planned/VBN, that/IN vs
that/DT vs that/WDT, ...) so that context rules have something to fix,
and a pool of invented open-class words yields hapaxes and OOV tokens.

Usage: gen_toy_corpus.py [--seed N] [--tokens N] > data/toy_corpus.txt
"""

import argparse
import random

# base, 3sg, past, past participle, gerund
VERBS = [
    ("plan", "plans", "planned", "planned", "planning"),
    ("report", "reports", "reported", "reported", "reporting"),
    ("work", "works", "worked", "worked", "working"),
    ("increase", "increases", "increased", "increased", "increasing"),
    ("change", "changes", "changed", "changed", "changing"),
    ("use", "uses", "used", "used", "using"),
    ("need", "needs", "needed", "needed", "needing"),
    ("call", "calls", "called", "called", "calling"),
    ("offer", "offers", "offered", "offered", "offering"),
    ("support", "supports", "supported", "supported", "supporting"),
    ("control", "controls", "controlled", "controlled", "controlling"),
    ("cut", "cuts", "cut", "cut", "cutting"),
    ("set", "sets", "set", "set", "setting"),
    ("expect", "expects", "expected", "expected", "expecting"),
    ("buy", "buys", "bought", "bought", "buying"),
    ("sell", "sells", "sold", "sold", "selling"),
    ("make", "makes", "made", "made", "making"),
    ("take", "takes", "took", "taken", "taking"),
    ("see", "sees", "saw", "seen", "seeing"),
    ("announce", "announces", "announced", "announced", "announcing"),
    ("acquire", "acquires", "acquired", "acquired", "acquiring"),
    ("approve", "approves", "approved", "approved", "approving"),
]

# Verbs above whose base / 3sg forms double as singular / plural nouns.
NOUN_VERBS = {"plan", "report", "work", "increase", "change", "use", "need",
              "call", "offer", "support", "control", "cut", "set"}

NOUNS = [
    ("company", "companies"), ("market", "markets"), ("price", "prices"),
    ("share", "shares"), ("investor", "investors"), ("bank", "banks"),
    ("year", "years"), ("month", "months"), ("analyst", "analysts"),
    ("rate", "rates"), ("stock", "stocks"), ("profit", "profits"),
    ("government", "governments"), ("official", "officials"),
    ("recovery", "recoveries"), ("deal", "deals"), ("unit", "units"),
    ("quarter", "quarters"), ("bond", "bonds"), ("loan", "loans"),
]

ADJECTIVES = ["new", "big", "strong", "weak", "major", "recent", "small",
              "financial", "annual", "higher", "lower", "early", "federal"]

NAMES = ["Smith", "Jones", "Chicago", "Boston", "Ford", "Sony", "Texas"]

SYLLABLES = ["ka", "lo", "mi", "tre", "van", "dor", "pel", "su", "ri", "bon",
             "zen", "fa", "gu", "mor", "tis", "lu", "nek", "ras", "vo", "quil"]
NOUN_SUFFIXES = ["tion", "ment", "ness", "ity", "ance", "ship"]
ADJ_SUFFIXES = ["al", "ous", "ive", "able", "ic"]


class Generator:
    def __init__(self, rng):
        self.rng = rng
        self.novel_nouns = [self.invent(NOUN_SUFFIXES) for _ in range(120)]
        self.novel_adjs = [self.invent(ADJ_SUFFIXES) for _ in range(70)]
        self.novel_names = [self.invent([""]).capitalize() for _ in range(60)]

    def invent(self, suffixes):
        r = self.rng
        stem = "".join(r.choice(SYLLABLES) for _ in range(r.randint(1, 3)))
        return stem + r.choice(suffixes)

    def zipf(self, items):
        # Heavy head, long tail: the tail produces hapaxes.
        n = len(items)
        idx = int(n * (self.rng.random() ** 2.5))
        return items[min(idx, n - 1)]

    def noun(self, plural):
        r = self.rng
        u = r.random()
        if u < 0.25:
            base = r.choice(sorted(NOUN_VERBS))
            forms = next(v for v in VERBS if v[0] == base)
            return (forms[1], "NNS") if plural else (forms[0], "NN")
        if u < 0.45:
            w = self.zipf(self.novel_nouns)
            return (w + "s", "NNS") if plural else (w, "NN")
        pair = r.choice(NOUNS)
        return (pair[1], "NNS") if plural else (pair[0], "NN")

    def adjective(self):
        if self.rng.random() < 0.35:
            return (self.zipf(self.novel_adjs), "JJ")
        return (self.rng.choice(ADJECTIVES), "JJ")

    def noun_phrase(self, plural, allow_rel=True):
        r = self.rng
        out = []
        if not plural:
            out.append((r.choice(["the", "a", "the", "this", "that"]), "DT"))
        elif r.random() < 0.7:
            out.append((r.choice(["the", "the", "these", "some"]), "DT"))
        if r.random() < 0.4:
            out.append(self.adjective())
        out.append(self.noun(plural))
        if allow_rel and r.random() < 0.12:
            out.append(("that", "WDT"))
            out += self.verb_phrase(plural, depth=1)
        return out

    def subject(self):
        r = self.rng
        u = r.random()
        if u < 0.15:
            w = r.choice(["he", "she", "it"])
            return [(w, "PRP")], False
        if u < 0.25:
            return [(r.choice(["they", "we"]), "PRP")], True
        if u < 0.35:
            name = self.zipf(self.novel_names) if r.random() < 0.5 else r.choice(NAMES)
            return [(name, "NNP")], False
        plural = r.random() < 0.5
        return self.noun_phrase(plural), plural

    def obj(self):
        return self.noun_phrase(self.rng.random() < 0.5)

    def pp(self):
        r = self.rng
        prep = r.choice(["in", "of", "for", "into", "on", "with", "at"])
        return [(prep, "IN")] + self.noun_phrase(r.random() < 0.4, allow_rel=False)

    def verb_phrase(self, plural, depth=0):
        r = self.rng
        v = r.choice(VERBS)
        u = r.random()
        out = []
        if u < 0.25:
            out.append((v[0], "VBP") if plural else (v[1], "VBZ"))
        elif u < 0.45:
            out.append((v[2], "VBD"))
        elif u < 0.6:
            out.append((r.choice(["will", "could", "may", "would"]), "MD"))
            out.append((v[0], "VB"))
        elif u < 0.72:
            aux = "have" if plural else "has"
            out.append((aux, "VBP" if plural else "VBZ"))
            out.append((v[3], "VBN"))
        elif u < 0.82:
            out.append(("were" if plural else "was", "VBD"))
            out.append((v[3], "VBN"))
            if r.random() < 0.5:
                out.append(("by", "IN"))
                out += self.noun_phrase(r.random() < 0.5, allow_rel=False)
            return out
        elif u < 0.92:
            want = r.choice([("want", "wants"), ("plan", "plans"), ("need", "needs")])
            out.append((want[0], "VBP") if plural else (want[1], "VBZ"))
            out.append(("to", "TO"))
            out.append((v[0], "VB"))
        else:
            out.append(("said", "VBD"))
            if depth == 0:
                out.append(("that", "IN"))
                subj, pl = self.subject()
                out += subj
                out += self.verb_phrase(pl, depth + 1)
                return out
            out.append(("so", "RB"))
            return out
        out += self.obj()
        if r.random() < 0.35:
            out += self.pp()
        return out

    def sentence(self):
        subj, plural = self.subject()
        words = subj + self.verb_phrase(plural)
        if self.rng.random() < 0.15:
            words += [("in", "IN"), (str(self.rng.choice([1987, 1988, 1989, 1990])), "CD")]
        words.append((".", "."))
        first = words[0]
        words[0] = (first[0][:1].upper() + first[0][1:], first[1])
        return words


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20150901)
    ap.add_argument("--tokens", type=int, default=5000)
    args = ap.parse_args()
    gen = Generator(random.Random(args.seed))
    total = 0
    while total < args.tokens:
        s = gen.sentence()
        total += len(s)
        print(" ".join(f"{w}/{t}" for w, t in s))


if __name__ == "__main__":
    main()
