#!/usr/bin/env python3
"""Builds a lexicon for the spelling metric from plain-text sources.

Words are lowercased letter runs (same segmentation as the language
profiles); the output is one word per line, sorted.

    build_wordlist.py data/training/de.txt data/training/de-vocabulary.txt > data/wordlists/de.txt
"""
import argparse
import sys

from build_language_profile import words


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("sources", nargs="+")
    ap.add_argument("--min-length", type=int, default=1)
    args = ap.parse_args()
    vocab = set()
    for path in args.sources:
        with open(path, encoding="utf-8") as f:
            vocab.update(w for w in words(f.read()) if len(w) >= args.min_length)
    sys.stdout.writelines(w + "\n" for w in sorted(vocab))


if __name__ == "__main__":
    main()
