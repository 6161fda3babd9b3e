#!/usr/bin/env python3
"""Builds a character-trigram language profile from a training text.

Trigrams are taken over lowercased words (maximal runs of letters) padded
with one space on each side, matching metacat::enrich. Output lines are
`trigram<TAB>count`, sorted by descending count then trigram.

    build_language_profile.py data/training/de.txt > data/profiles/de.profile
"""
import argparse
import collections
import sys


def words(text):
    cur = []
    for ch in text:
        if ch.isalpha():
            cur.append(ch.lower())
        elif cur:
            yield "".join(cur)
            cur = []
    if cur:
        yield "".join(cur)


def trigrams(text):
    for w in words(text):
        padded = " " + w + " "
        for i in range(len(padded) - 2):
            yield padded[i:i + 3]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("training_text")
    ap.add_argument("--top", type=int, default=600)
    args = ap.parse_args()
    with open(args.training_text, encoding="utf-8") as f:
        counts = collections.Counter(trigrams(f.read()))
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[: args.top]
    out = sys.stdout
    for gram, n in ranked:
        out.write(f"{gram}\t{n}\n")


if __name__ == "__main__":
    main()
