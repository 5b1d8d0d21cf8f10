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

"""Writes the sample proposition corpus (data/sample/corpus.jsonl).

Four three-day windows of 50 extractions each. Every window has one person
mentioned often in unary propositions and one person pair that meets often in
binary ones, so question generation has candidates of both valencies; the
WordNet substitutes of their predicates occur elsewhere in the corpus so that
negatives survive screening. Victims of killings also die, which gives the
local graph its kill.2 -> die.1 edge. Usage: make_sample.py OUT_FILE
"""

import datetime
import json
import random
import sys

SEED = 20260101
WINDOWS = 4
START = datetime.date(2026, 1, 5)

PEOPLE = [
    "Ada Brandt", "Bruno Keller", "Carla Ruiz", "Dmitri Volkov", "Elena Park",
    "Farid Haddad", "Greta Lind", "Hiro Tanaka", "Ines Moreau", "Jonas Berg",
    "Kofi Mensah", "Lena Fischer", "Marco Rossi", "Nadia Petrova", "Omar Aziz",
    "Paula Costa", "Quinn Walsh", "Rosa Diaz", "Sven Olsen", "Tara Singh",
    "Umar Bello", "Vera Novak", "Wen Li", "Yusuf Demir",
]
# Per window: the unary star and the binary pair.
STARS = ["Mayor Hale", "Senator Ortiz", "Judge Okafor", "Coach Reyes"]
PAIRS = [("Ana Silva", "Mia Novak"), ("Leo Grant", "Sam Ford"),
         ("Ana Silva", "Leo Grant"), ("Mia Novak", "Sam Ford")]
COMPANIES = ["Acme Corp", "Globex", "Initech", "Umbrella Group", "Stark Industries",
             "Wayne Enterprises", "Hooli", "Vandelay Industries"]
FOUNDATIONS = ["Nobel Foundation", "Ford Foundation", "Wellcome Trust"]
BOOKS = ["Blue Harbor", "The Long Winter", "Salt Roads", "Glass Tower", "Night Trains"]


def arg(surface, type_, role):
    return {"surface": surface, "type": type_, "is_named": True, "role_index": role}


def main(out_file):
    rng = random.Random(SEED)
    records = []

    def emit(window, predicate, voice, args):
        # The first record of each window sits on its first day.
        offset = 0 if len(records) % 50 == 0 else rng.randrange(3)
        day = START + datetime.timedelta(days=3 * window + offset)
        records.append({
            "article_id": f"w{window}-a{len(records) % 17:02d}",
            "date": day.isoformat(),
            "sentence_idx": len(records) % 5,
            "predicate": predicate,
            "voice": voice,
            "modifiers": [],
            "args": args,
        })

    for w in range(WINDOWS):
        star = STARS[w]
        p, q = PAIRS[w]
        others = [x for x in PEOPLE]
        rng.shuffle(others)
        pick = iter(others)

        for _ in range(4):
            emit(w, "defeated", "active", [arg(p, "person", 1), arg(q, "person", 2)])
        for _ in range(2):
            emit(w, "defeated", "active", [arg(q, "person", 1), arg(p, "person", 2)])
        # In the second window the pair's rout is on record, so that negative
        # is screened out there.
        emit(w, "routed", "active", [arg(next(pick), "person", 1), arg(next(pick), "person", 2)])
        if w == 1:
            emit(w, "routed", "active", [arg(p, "person", 1), arg(q, "person", 2)])
        else:
            emit(w, "routed", "active", [arg(next(pick), "person", 1), arg(next(pick), "person", 2)])

        for _ in range(3):
            emit(w, "was criticized", "passive", [arg(star, "person", 1)])
        for _ in range(3):
            emit(w, "visited", "active", [arg(star, "person", 1)])
        emit(w, "was denounced", "passive", [arg(next(pick), "person", 1)])
        emit(w, "toured", "active", [arg(next(pick), "person", 1)])

        victims = [next(pick) for _ in range(4)]
        for v in victims:
            emit(w, "was killed", "passive", [arg(v, "person", 1)])
        for v in victims:
            emit(w, "died", "active", [arg(v, "person", 1)])
        for _ in range(2):
            emit(w, "died", "active", [arg(next(pick), "person", 1)])
        for v in victims[:2]:
            emit(w, "killed", "active", [arg(next(pick), "person", 1), arg(v, "person", 2)])

        for _ in range(3):
            buyer, target = rng.sample(COMPANIES, 2)
            emit(w, "bought", "active", [arg(buyer, "organization", 1),
                                         arg(target, "organization", 2)])
            emit(w, "sold to", "active", [arg(target, "organization", 1),
                                          arg(buyer, "organization", 3)])

        for _ in range(6):
            emit(w, "received from", "active", [arg(rng.choice(PEOPLE), "person", 1),
                                                arg(rng.choice(FOUNDATIONS), "organization", 3)])
        for _ in range(2):
            emit(w, "inherited from", "active", [arg(rng.choice(PEOPLE), "person", 1),
                                                 arg(rng.choice(FOUNDATIONS), "organization", 3)])
        for _ in range(3):
            emit(w, "was hurt", "passive", [arg(rng.choice(PEOPLE), "person", 1)])
        emit(w, "was wounded", "passive", [arg(rng.choice(PEOPLE), "person", 1)])
        for _ in range(4):
            emit(w, "wrote", "active", [arg(rng.choice(PEOPLE), "person", 1),
                                        arg(rng.choice(BOOKS), "written_work", 2)])

    with open(out_file, "w", encoding="utf-8") as f:
        for r in records:
            f.write(json.dumps(r) + "\n")
    print(f"wrote {len(records)} records to {out_file}")


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    main(sys.argv[1])
