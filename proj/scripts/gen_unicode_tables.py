#!/usr/bin/env python3
"""Regenerates include/probekit/unicode_data.hpp from the Python unicodedata
tables. The header is checked in; rerun this only when the table logic changes.

Covered properties (BMP, Hangul syllables excluded from decompositions):
  - simple lowercase mappings (str.lower per codepoint)
  - accent stripping: canonical decomposition with combining marks (Mn) removed
  - general category P* ranges (punctuation)
  - Mn ranges (combining marks)
  - Cc/Cf ranges (control/format)
  - Zs ranges (space separators)
"""
import sys
import unicodedata

BMP = 0x10000
HANGUL = range(0xAC00, 0xD7A4)


def utf8_escape(s: str) -> str:
    return "".join(f"\\x{b:02x}" for b in s.encode("utf-8"))


def ranges_for(pred):
    out = []
    lo = None
    for cp in range(BMP):
        if pred(cp):
            if lo is None:
                lo = cp
        else:
            if lo is not None:
                out.append((lo, cp - 1))
                lo = None
    if lo is not None:
        out.append((lo, BMP - 1))
    return out


def main(out_path: str) -> None:
    lower_entries = []
    for cp in range(BMP):
        if cp in HANGUL:
            continue
        c = chr(cp)
        low = c.lower()
        if low != c:
            lower_entries.append((cp, low))

    strip_entries = []
    for cp in range(BMP):
        if cp in HANGUL:
            continue
        c = chr(cp)
        d = unicodedata.normalize("NFD", c)
        stripped = "".join(x for x in d if unicodedata.category(x) != "Mn")
        if stripped != c:
            strip_entries.append((cp, stripped))

    punct = ranges_for(lambda cp: unicodedata.category(chr(cp)).startswith("P"))
    marks = ranges_for(lambda cp: unicodedata.category(chr(cp)) == "Mn")
    control = ranges_for(lambda cp: unicodedata.category(chr(cp)) in ("Cc", "Cf"))
    spaces = ranges_for(lambda cp: unicodedata.category(chr(cp)) == "Zs")

    with open(out_path, "w", encoding="utf-8") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.\n")
        w("#pragma once\n\n#include <cstdint>\n\nnamespace probekit::unicode_data {\n\n")
        w("struct MappedChar { uint32_t cp; const char* replacement; };\n")
        w("struct Range { uint32_t lo; uint32_t hi; };\n\n")

        w(f"inline constexpr MappedChar kLowercase[{len(lower_entries)}] = {{\n")
        for cp, s in lower_entries:
            w(f'    {{0x{cp:04X}, "{utf8_escape(s)}"}},\n')
        w("};\n\n")

        w(f"inline constexpr MappedChar kStripMarks[{len(strip_entries)}] = {{\n")
        for cp, s in strip_entries:
            w(f'    {{0x{cp:04X}, "{utf8_escape(s)}"}},\n')
        w("};\n\n")

        for name, rngs in (("kPunctuation", punct), ("kCombiningMarks", marks),
                           ("kControlFormat", control), ("kSpaceSeparators", spaces)):
            w(f"inline constexpr Range {name}[{len(rngs)}] = {{\n")
            for lo, hi in rngs:
                w(f"    {{0x{lo:04X}, 0x{hi:04X}}},\n")
            w("};\n\n")

        w("}  // namespace probekit::unicode_data\n")

    print(f"lowercase entries: {len(lower_entries)}")
    print(f"strip entries:     {len(strip_entries)}")
    print(f"punct ranges:      {len(punct)}")
    print(f"mark ranges:       {len(marks)}")
    print(f"control ranges:    {len(control)}")
    print(f"space ranges:      {len(spaces)}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/probekit/unicode_data.hpp")
