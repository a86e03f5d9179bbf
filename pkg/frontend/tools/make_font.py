#!/usr/bin/env python3
"""Regenerate src/font.ts from DejaVu Sans Mono (bundled with matplotlib).

The PNG backend needs a bitmap font; rasterizing the TTF once at build
time keeps the renderer dependency-free.  Cell is 7x15 px at nominal
size 12, baseline at row 12.  Each glyph is 15 row masks, bit x set =
pixel at column x on.

Usage: python3 tools/make_font.py > src/font.ts
"""

import os
import sys

import matplotlib
from PIL import Image, ImageDraw, ImageFont

SIZE = 12
CELL_W, CELL_H = 7, 15
THRESHOLD = 100

ttf = os.path.join(os.path.dirname(matplotlib.__file__), "mpl-data", "fonts",
                   "ttf", "DejaVuSansMono.ttf")
font = ImageFont.truetype(ttf, SIZE)


def glyph_rows(ch):
    img = Image.new("L", (CELL_W + 4, CELL_H), 0)
    ImageDraw.Draw(img).text((0, 0), ch, font=font, fill=255)
    px = img.load()
    rows = []
    for y in range(CELL_H):
        mask = 0
        for x in range(CELL_W):
            if px[x, y] > THRESHOLD:
                mask |= 1 << x
        rows.append(mask)
    return rows


out = sys.stdout
out.write("// Generated by tools/make_font.py from DejaVu Sans Mono; do not edit.\n")
out.write("// 7x15 cell, baseline at row 12, row masks with bit x = column x.\n\n")
out.write("export const FONT_W = %d;\n" % CELL_W)
out.write("export const FONT_H = %d;\n" % CELL_H)
out.write("export const FONT_BASELINE = 12;\n\n")
out.write("// index = charCode - 32, printable ASCII only\n")
out.write("export const GLYPHS: number[][] = [\n")
for code in range(32, 127):
    rows = glyph_rows(chr(code))
    label = chr(code) if chr(code) != "\\" else "backslash"
    out.write("  [%s], // %s\n" % (", ".join(str(m) for m in rows), label))
out.write("];\n")
