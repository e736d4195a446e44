#!/usr/bin/env python3
"""Generates the synthetic desk-scale task TSVs under data/toy/tasks/.

Four tasks, SentEval probing format (split \\t label \\t sentence):
  toy_marked    binary: does the sentence contain the marker word "zebra"
  toy_sentlen   regression-style: label is the word count
  toy_bshift    O = original word order, I = one adjacent non-initial,
                non-punctuation bigram swapped
  toy_coordinv  O = clause order kept, I = clauses around and/but swapped
"""
import random
import sys
import zlib

MARKER = "zebra"


def pool_words(vocab_path):
    words = []
    for line in open(vocab_path, encoding="utf-8"):
        t = line.strip()
        if t.startswith("##") or t.startswith("[") or not t.isalpha() or len(t) < 3:
            continue
        if t == MARKER:
            continue
        words.append(t)
    return words


def sentence(rng, words, lo=5, hi=12):
    return [rng.choice(words) for _ in range(rng.randint(lo, hi))]


def splits(n_tr, n_va, n_te):
    return [("tr", n_tr), ("va", n_va), ("te", n_te)]


def make_marked(rng, words, f):
    for split, n in splits(400, 100, 120):
        for i in range(n):
            ws = sentence(rng, words)
            if i % 2 == 0:
                ws[rng.randrange(len(ws))] = MARKER
                label = "MARKED"
            else:
                label = "CLEAN"
            f.write(f"{split}\t{label}\t{' '.join(ws)} .\n")


def make_sentlen(rng, words, f):
    for split, n in splits(400, 100, 120):
        for _ in range(n):
            ws = sentence(rng, words, 3, 12)
            f.write(f"{split}\t{len(ws)}\t{' '.join(ws)} .\n")


def eligible_pairs(ws):
    # first word and punctuation-only words are excluded from swaps
    return [i for i in range(1, len(ws) - 1)
            if ws[i].isalpha() and ws[i + 1].isalpha()]


def make_bshift(rng, words, f):
    for split, n in splits(400, 100, 240):
        for i in range(n):
            while True:
                ws = sentence(rng, words, 6, 12)
                if eligible_pairs(ws):
                    break
            if i % 2 == 0:
                label = "O"
            else:
                k = rng.choice(eligible_pairs(ws))
                ws[k], ws[k + 1] = ws[k + 1], ws[k]
                label = "I"
            f.write(f"{split}\t{label}\t{' '.join(ws)} .\n")


def make_coordinv(rng, words, f):
    for split, n in splits(400, 100, 120):
        for i in range(n):
            coord = rng.choice(["and", "but"])
            left = sentence(rng, words, 2, 5)
            right = sentence(rng, words, 2, 5)
            if i % 2 == 0:
                ws, label = left + [coord] + right, "O"
            else:
                ws, label = right + [coord] + left, "I"
            f.write(f"{split}\t{label}\t{' '.join(ws)} .\n")


def main(vocab_path="data/fixtures/vocab.txt", out_dir="data/toy/tasks"):
    words = pool_words(vocab_path)
    words = [w for w in words if w not in ("and", "but")]
    for name, fn in [("toy_marked", make_marked), ("toy_sentlen", make_sentlen),
                     ("toy_bshift", make_bshift), ("toy_coordinv", make_coordinv)]:
        rng = random.Random(zlib.crc32(name.encode()))
        path = f"{out_dir}/{name}.tsv"
        with open(path, "w", encoding="utf-8") as f:
            fn(rng, words, f)
        print(path)


if __name__ == "__main__":
    main(*sys.argv[1:])
