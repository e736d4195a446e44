#!/usr/bin/env python3
"""Builds the bundled desk-scale encoder plus golden forward traces.

Writes:
  data/toy/config.json            encoder config (HF-style keys)
  data/toy/model.safetensors      random 4-layer encoder weights
  data/toy/golden_trace.safetensors  hidden states + attention weights for a
                                     handful of sentences, computed by the
                                     HuggingFace BertModel (eager attention)
  data/toy/golden_inputs.json     the sentences and their token ids

Generated once with fixed seeds and checked in; tests compare the native
forward pass against these traces.
"""
import json
import struct
import sys

import torch
from tokenizers.implementations import BertWordPieceTokenizer
from transformers import BertConfig, BertModel

CONFIG = dict(
    vocab_size=0,  # filled from the vocab file
    hidden_size=64,
    num_hidden_layers=4,
    num_attention_heads=4,
    intermediate_size=256,
    max_position_embeddings=128,
    type_vocab_size=2,
    layer_norm_eps=1e-12,
)

GOLDEN_SENTENCES = [
    "The glass broke .",
    "she walked at the market .",
    "i cut myself and the glass broke .",
    "strange snow fell over the quiet village yesterday , didn't it ?",
]


def write_safetensors(path, tensors):
    header = {}
    offset = 0
    blobs = []
    for name, t in tensors.items():
        t = t.detach().to(torch.float32).contiguous()
        raw = t.numpy().tobytes()
        header[name] = {
            "dtype": "F32",
            "shape": list(t.shape),
            "data_offsets": [offset, offset + len(raw)],
        }
        offset += len(raw)
        blobs.append(raw)
    hjson = json.dumps(header, sort_keys=True).encode("utf-8")
    with open(path, "wb") as f:
        f.write(struct.pack("<Q", len(hjson)))
        f.write(hjson)
        for b in blobs:
            f.write(b)


def main(vocab_path="data/fixtures/vocab.txt", out_dir="data/toy"):
    vocab_size = sum(1 for _ in open(vocab_path, encoding="utf-8"))
    CONFIG["vocab_size"] = vocab_size

    cfg = BertConfig(hidden_act="gelu", attn_implementation="eager", **CONFIG)
    torch.manual_seed(48151623)
    model = BertModel(cfg).eval()
    # default init zeroes every bias; nudge all parameters so bias and
    # layer-norm paths are exercised by the golden comparison
    with torch.no_grad():
        for p in model.parameters():
            p.add_(torch.randn_like(p) * 0.02)

    sd = {k: v for k, v in model.state_dict().items() if not k.startswith("pooler.")}
    write_safetensors(f"{out_dir}/model.safetensors", sd)
    with open(f"{out_dir}/config.json", "w") as f:
        json.dump(CONFIG, f, indent=2, sort_keys=True)

    tok = BertWordPieceTokenizer(vocab_path, lowercase=True)
    golden = {}
    inputs = []
    for si, sent in enumerate(GOLDEN_SENTENCES):
        enc = tok.encode(sent)  # adds [CLS]/[SEP]
        ids = torch.tensor([enc.ids])
        with torch.no_grad():
            out = model(ids, output_hidden_states=True, output_attentions=True)
        inputs.append({"sentence": sent, "tokens": enc.tokens, "ids": enc.ids})
        for l, h in enumerate(out.hidden_states):
            golden[f"s{si}.hidden.{l}"] = h[0]
        for l, a in enumerate(out.attentions):
            golden[f"s{si}.attn.{l}"] = a[0]

    write_safetensors(f"{out_dir}/golden_trace.safetensors", golden)
    with open(f"{out_dir}/golden_inputs.json", "w") as f:
        json.dump(inputs, f, indent=1)
    print(f"vocab_size={vocab_size}, {len(sd)} weight tensors, "
          f"{len(golden)} golden tensors")


if __name__ == "__main__":
    main(*sys.argv[1:])
