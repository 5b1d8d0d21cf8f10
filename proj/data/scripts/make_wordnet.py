#!/usr/bin/env python3
# Copyright 2026 The mgraph Authors.
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

"""Writes a small WordNet-format database (index/data for nouns and verbs).

Synset offsets are real byte offsets into the data files, so the output
reads like the upstream database. Usage: make_wordnet.py OUT_DIR
"""

import os
import sys

HEADER = [
    "  1 Miniature lexical database in WordNet 3.0 file format.",
    "  2 Synsets and pointers are hand-written for tests and the sample corpus.",
]

# (pos, key, words, narrower keys, gloss). Keys are local names for pointers.
SYNSETS = [
    # Verbs.
    ("v", "hurt1", ["hurt", "injure"], ["burn", "wound"], "cause injury"),
    ("v", "hurt2", ["hurt", "ache"], ["throb"], "feel physical pain"),
    ("v", "burn", ["burn"], [], "hurt by fire"),
    ("v", "wound", ["wound"], [], "cause a wound"),
    ("v", "throb", ["throb"], [], "pulsate with pain"),
    ("v", "receive", ["receive", "get"], ["inherit", "accept"], "come into possession"),
    ("v", "inherit", ["inherit"], [], "receive from a predecessor"),
    ("v", "accept", ["accept"], [], "receive willingly"),
    ("v", "kill", ["kill"], ["murder", "strangle"], "cause to die"),
    ("v", "murder", ["murder"], [], "kill intentionally"),
    ("v", "strangle", ["strangle"], [], "kill by squeezing the throat"),
    ("v", "buy", ["buy", "purchase"], ["bribe", "redeem"], "obtain by payment"),
    ("v", "bribe", ["bribe"], [], "buy influence"),
    ("v", "redeem", ["redeem"], [], "buy back"),
    ("v", "sell", ["sell"], ["auction", "retail"], "exchange for money"),
    ("v", "auction", ["auction"], [], "sell at an auction"),
    ("v", "retail", ["retail"], [], "sell in small quantities"),
    ("v", "visit", ["visit"], ["tour", "inspect"], "go to see a place"),
    ("v", "tour", ["tour"], [], "make a tour of"),
    ("v", "inspect", ["inspect"], [], "visit officially"),
    ("v", "defeat", ["defeat", "beat"], ["rout", "trounce"], "win a victory over"),
    ("v", "rout", ["rout"], [], "defeat disastrously"),
    ("v", "trounce", ["trounce"], [], "defeat thoroughly"),
    ("v", "die", ["die"], ["drown", "starve"], "stop living"),
    ("v", "drown", ["drown"], [], "die from immersion"),
    ("v", "starve", ["starve"], [], "die of hunger"),
    ("v", "write", ["write", "compose"], ["draft", "scribble"], "produce a text"),
    ("v", "draft", ["draft"], [], "write a first version"),
    ("v", "scribble", ["scribble"], [], "write carelessly"),
    ("v", "criticize", ["criticize"], ["denounce"], "find fault with"),
    ("v", "denounce", ["denounce"], [], "criticize openly"),
    # Nouns.
    ("n", "winner", ["winner"], ["champion", "medalist"], "the contestant who wins"),
    ("n", "champion", ["champion", "champ"], [], "someone who has won first place"),
    ("n", "medalist", ["medalist"], [], "someone who has won a medal"),
    ("n", "author", ["author", "writer"], ["novelist", "poet"], "writes professionally"),
    ("n", "novelist", ["novelist"], [], "writes novels"),
    ("n", "poet", ["poet"], [], "writes poems"),
    ("n", "victim", ["victim"], ["casualty"], "someone who suffers"),
    ("n", "casualty", ["casualty"], [], "someone injured or killed"),
    ("n", "leader", ["leader"], ["chancellor", "president"], "one who leads"),
    ("n", "chancellor", ["chancellor"], [], "head of government"),
    ("n", "president", ["president"], [], "chief executive"),
    ("n", "tennis_player", ["tennis_player"], ["seed"], "plays tennis"),
    ("n", "seed", ["seed"], [], "a ranked tennis player"),
]


def build(pos):
    synsets = [s for s in SYNSETS if s[0] == pos]
    offsets = {}

    def record(s, offset_of):
        _, key, words, narrower, gloss = s
        parts = [f"{offset_of(key):08d}", "29" if pos == "v" else "18", pos, f"{len(words):02x}"]
        for w in words:
            parts += [w, "0"]
        parts.append(f"{len(narrower):03d}")
        for n in narrower:
            parts += ["~", f"{offset_of(n):08d}", pos, "0000"]
        if pos == "v":
            parts += ["01", "+", "02", "00"]
        return " ".join(parts) + " | " + gloss + "  \n"

    # Record length does not depend on offset values (fixed width), so one
    # pass with zeros gives every offset.
    pos_in_file = sum(len(h) + 1 for h in HEADER)
    for s in synsets:
        offsets[s[1]] = pos_in_file
        pos_in_file += len(record(s, lambda k: 0).encode())
    data = "".join(h + "\n" for h in HEADER) + "".join(record(s, offsets.__getitem__) for s in synsets)

    senses = {}
    for s in synsets:
        for w in s[2]:
            senses.setdefault(w, []).append(offsets[s[1]])
    lines = []
    for lemma in sorted(senses):
        offs = senses[lemma]
        lines.append(f"{lemma} {pos} {len(offs)} 1 ~ {len(offs)} 0 " + " ".join(f"{o:08d}" for o in offs) + "  ")
    index = "".join(h + "\n" for h in HEADER) + "".join(l + "\n" for l in lines)
    return index, data


def main():
    out = sys.argv[1]
    os.makedirs(out, exist_ok=True)
    for pos, name in (("n", "noun"), ("v", "verb")):
        index, data = build(pos)
        with open(os.path.join(out, f"index.{name}"), "w") as f:
            f.write(index)
        with open(os.path.join(out, f"data.{name}"), "w") as f:
            f.write(data)


if __name__ == "__main__":
    main()
