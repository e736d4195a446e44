#!/usr/bin/env python3
"""Generates data/fixtures/tokenizer_fixture.tsv: 200 sentences with their
reference tokenizations (sentence \\t space-joined pieces, no specials).

Reference implementation: HuggingFace `tokenizers` BertWordPieceTokenizer
(lowercase, accent stripping, punctuation splitting, greedy WordPiece) over
the bundled fixture vocabulary. Generated once and checked in.
"""
import random
import sys

from tokenizers.implementations import BertWordPieceTokenizer

ACCENTED = ["Café", "Zürich", "naïve", "résumé", "señor", "crème", "Ångström", "Besançon"]
UNICODE_BITS = ["“quoted”", "— yes —", "it… stopped", "‘single’", "«guillemets»", "café–bar"]
ODD = ["☃", "don't", "o'clock", "U.S.A.", "co-operate", "3.14", "$100", "x+y=z",
       "HELLO", "MiXeD", "якщо", "supercalifragilisticexpialidocious"]


def words_from_vocab(path):
    out = []
    for line in open(path, encoding="utf-8"):
        t = line.strip()
        if t.startswith("##") or t.startswith("["):
            continue
        if len(t) > 2 and t.isalpha():
            out.append(t)
    return out


def main(vocab_path, out_path):
    rng = random.Random(20240917)
    words = words_from_vocab(vocab_path)
    puncts = [".", ",", "!", "?", ";"]

    sentences = []
    for i in range(200):
        n = rng.randint(4, 14)
        ws = [rng.choice(words) for _ in range(n)]
        if i % 3 == 0:
            ws[0] = ws[0].capitalize()
        if i % 7 == 0:
            ws.insert(rng.randrange(1, len(ws)), rng.choice(ACCENTED))
        if i % 11 == 0:
            ws.insert(rng.randrange(1, len(ws)), rng.choice(UNICODE_BITS))
        if i % 13 == 0:
            ws.insert(rng.randrange(1, len(ws)), rng.choice(ODD))
        if i % 5 == 0 and len(ws) > 4:
            ws.insert(rng.randrange(1, len(ws) - 1), rng.choice([",", ";", "-"]))
        sent = " ".join(ws) + " " + rng.choice(puncts)
        sentences.append(sent)
    # edge sentences the generator loops will not hit
    sentences[0] = "The glass broke ."
    sentences[1] = "she walked at the market ."
    sentences[2] = "don't"
    sentences[3] = "i cut myself and the glass broke ."

    tok = BertWordPieceTokenizer(vocab_path, lowercase=True)
    with open(out_path, "w", encoding="utf-8") as f:
        for s in sentences:
            pieces = tok.encode(s, add_special_tokens=False).tokens
            f.write(s + "\t" + " ".join(pieces) + "\n")
    print(f"{len(sentences)} sentences -> {out_path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures/vocab.txt",
         sys.argv[2] if len(sys.argv) > 2 else "data/fixtures/tokenizer_fixture.tsv")
