// Generated by tools/make_font.py from DejaVu Sans Mono; do not edit.
// 7x15 cell, baseline at row 12, row masks with bit x = column x.

export const FONT_W = 7;
export const FONT_H = 15;
export const FONT_BASELINE = 12;

// index = charCode - 32, printable ASCII only
export const GLYPHS: number[][] = [
  [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], //  
  [0, 0, 0, 8, 8, 8, 8, 8, 8, 0, 8, 8, 0, 0, 0], // !
  [0, 0, 0, 20, 20, 20, 0, 0, 0, 0, 0, 0, 0, 0, 0], // "
  [0, 0, 0, 0, 40, 40, 126, 52, 20, 127, 18, 10, 0, 0, 0], // #
  [0, 0, 0, 8, 28, 46, 10, 12, 56, 104, 42, 60, 8, 8, 0], // $
  [0, 0, 0, 6, 9, 9, 102, 24, 50, 72, 72, 48, 0, 0, 0], // %
  [0, 0, 0, 28, 6, 6, 4, 14, 91, 115, 34, 126, 0, 0, 0], // &
  [0, 0, 0, 8, 8, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0], // '
  [0, 0, 16, 24, 8, 8, 12, 12, 12, 8, 8, 24, 16, 0, 0], // (
  [0, 0, 4, 8, 8, 24, 24, 24, 24, 24, 8, 8, 4, 0, 0], // )
  [0, 0, 0, 8, 42, 28, 28, 42, 8, 0, 0, 0, 0, 0, 0], // *
  [0, 0, 0, 0, 0, 8, 8, 8, 127, 8, 8, 8, 0, 0, 0], // +
  [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 24, 8, 12, 0, 0], // ,
  [0, 0, 0, 0, 0, 0, 0, 0, 28, 0, 0, 0, 0, 0, 0], // -
  [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 8, 0, 0, 0], // .
  [0, 0, 0, 32, 48, 16, 24, 8, 8, 4, 4, 6, 2, 0, 0], // /
  [0, 0, 0, 28, 54, 34, 98, 106, 98, 34, 54, 28, 0, 0, 0], // 0
  [0, 0, 0, 30, 24, 24, 24, 24, 24, 24, 24, 126, 0, 0, 0], // 1
  [0, 0, 0, 28, 50, 32, 32, 16, 24, 12, 6, 62, 0, 0, 0], // 2
  [0, 0, 0, 28, 50, 32, 48, 28, 32, 32, 34, 30, 0, 0, 0], // 3
  [0, 0, 0, 48, 56, 60, 52, 54, 50, 127, 48, 48, 0, 0, 0], // 4
  [0, 0, 0, 62, 2, 2, 30, 48, 32, 32, 50, 30, 0, 0, 0], // 5
  [0, 0, 0, 28, 38, 2, 30, 38, 34, 34, 38, 28, 0, 0, 0], // 6
  [0, 0, 0, 62, 32, 48, 16, 16, 24, 8, 12, 4, 0, 0, 0], // 7
  [0, 0, 0, 28, 38, 34, 38, 28, 34, 98, 38, 60, 0, 0, 0], // 8
  [0, 0, 0, 28, 54, 34, 34, 54, 60, 32, 50, 28, 0, 0, 0], // 9
  [0, 0, 0, 0, 0, 0, 8, 8, 0, 0, 8, 8, 0, 0, 0], // :
  [0, 0, 0, 0, 0, 0, 8, 8, 0, 0, 24, 8, 12, 0, 0], // ;
  [0, 0, 0, 0, 0, 96, 56, 6, 6, 56, 96, 0, 0, 0, 0], // <
  [0, 0, 0, 0, 0, 0, 0, 127, 0, 127, 0, 0, 0, 0, 0], // =
  [0, 0, 0, 0, 0, 3, 14, 112, 112, 14, 3, 0, 0, 0, 0], // >
  [0, 0, 0, 28, 50, 32, 16, 8, 8, 0, 8, 8, 0, 0, 0], // ?
  [0, 0, 0, 0, 60, 102, 66, 121, 77, 77, 121, 2, 6, 60, 0], // @
  [0, 0, 0, 24, 28, 20, 20, 54, 38, 62, 98, 67, 0, 0, 0], // A
  [0, 0, 0, 30, 34, 34, 34, 62, 34, 98, 98, 62, 0, 0, 0], // B
  [0, 0, 0, 60, 38, 2, 2, 2, 2, 2, 38, 60, 0, 0, 0], // C
  [0, 0, 0, 30, 50, 34, 98, 98, 98, 34, 50, 30, 0, 0, 0], // D
  [0, 0, 0, 62, 2, 2, 2, 62, 2, 2, 2, 126, 0, 0, 0], // E
  [0, 0, 0, 126, 6, 6, 6, 62, 6, 6, 6, 6, 0, 0, 0], // F
  [0, 0, 0, 60, 38, 2, 2, 114, 98, 98, 102, 60, 0, 0, 0], // G
  [0, 0, 0, 98, 98, 98, 98, 126, 98, 98, 98, 98, 0, 0, 0], // H
  [0, 0, 0, 62, 8, 8, 8, 8, 8, 8, 8, 62, 0, 0, 0], // I
  [0, 0, 0, 60, 48, 48, 48, 48, 48, 48, 18, 30, 0, 0, 0], // J
  [0, 0, 0, 98, 50, 26, 14, 14, 26, 50, 34, 98, 0, 0, 0], // K
  [0, 0, 0, 6, 6, 6, 6, 6, 6, 6, 6, 126, 0, 0, 0], // L
  [0, 0, 0, 99, 103, 119, 87, 91, 75, 67, 67, 67, 0, 0, 0], // M
  [0, 0, 0, 102, 102, 102, 106, 106, 122, 114, 114, 98, 0, 0, 0], // N
  [0, 0, 0, 28, 54, 34, 98, 98, 98, 34, 54, 28, 0, 0, 0], // O
  [0, 0, 0, 62, 98, 98, 98, 62, 2, 2, 2, 2, 0, 0, 0], // P
  [0, 0, 0, 28, 54, 34, 98, 98, 98, 34, 54, 28, 48, 32, 0], // Q
  [0, 0, 0, 30, 50, 34, 50, 30, 50, 34, 98, 66, 0, 0, 0], // R
  [0, 0, 0, 28, 38, 2, 6, 28, 32, 96, 34, 60, 0, 0, 0], // S
  [0, 0, 0, 127, 8, 8, 8, 8, 8, 8, 8, 8, 0, 0, 0], // T
  [0, 0, 0, 34, 34, 34, 34, 34, 34, 34, 38, 28, 0, 0, 0], // U
  [0, 0, 0, 99, 98, 34, 38, 52, 20, 20, 28, 24, 0, 0, 0], // V
  [0, 0, 0, 65, 65, 75, 91, 126, 118, 54, 54, 38, 0, 0, 0], // W
  [0, 0, 0, 98, 38, 20, 28, 24, 28, 52, 34, 99, 0, 0, 0], // X
  [0, 0, 0, 99, 34, 52, 28, 24, 8, 8, 8, 8, 0, 0, 0], // Y
  [0, 0, 0, 126, 32, 48, 16, 24, 12, 4, 6, 126, 0, 0, 0], // Z
  [0, 0, 24, 8, 8, 8, 8, 8, 8, 8, 8, 8, 24, 0, 0], // [
  [0, 0, 0, 2, 6, 4, 4, 8, 8, 24, 16, 48, 32, 0, 0], // backslash
  [0, 0, 28, 24, 24, 24, 24, 24, 24, 24, 24, 24, 28, 0, 0], // ]
  [0, 0, 0, 24, 52, 34, 0, 0, 0, 0, 0, 0, 0, 0, 0], // ^
  [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 127], // _
  [0, 0, 4, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], // `
  [0, 0, 0, 0, 0, 30, 32, 32, 60, 34, 50, 62, 0, 0, 0], // a
  [0, 0, 2, 2, 2, 30, 38, 98, 98, 98, 38, 30, 0, 0, 0], // b
  [0, 0, 0, 0, 0, 60, 4, 6, 2, 6, 4, 60, 0, 0, 0], // c
  [0, 0, 32, 32, 32, 60, 54, 34, 34, 34, 54, 60, 0, 0, 0], // d
  [0, 0, 0, 0, 0, 28, 38, 98, 126, 2, 38, 60, 0, 0, 0], // e
  [0, 0, 56, 8, 8, 62, 8, 8, 8, 8, 8, 8, 0, 0, 0], // f
  [0, 0, 0, 0, 0, 60, 54, 34, 34, 34, 54, 60, 32, 50, 28], // g
  [0, 0, 2, 2, 2, 62, 38, 34, 34, 34, 34, 34, 0, 0, 0], // h
  [0, 0, 8, 0, 0, 14, 8, 8, 8, 8, 8, 126, 0, 0, 0], // i
  [0, 0, 24, 0, 0, 28, 24, 24, 24, 24, 24, 24, 24, 24, 14], // j
  [0, 0, 6, 6, 6, 38, 22, 14, 30, 22, 38, 102, 0, 0, 0], // k
  [0, 0, 14, 8, 8, 8, 8, 8, 8, 8, 8, 56, 0, 0, 0], // l
  [0, 0, 0, 0, 0, 62, 106, 74, 74, 74, 74, 74, 0, 0, 0], // m
  [0, 0, 0, 0, 0, 62, 38, 34, 34, 34, 34, 34, 0, 0, 0], // n
  [0, 0, 0, 0, 0, 28, 38, 34, 34, 34, 38, 28, 0, 0, 0], // o
  [0, 0, 0, 0, 0, 30, 38, 34, 98, 34, 38, 30, 2, 2, 2], // p
  [0, 0, 0, 0, 0, 60, 54, 34, 34, 34, 54, 60, 32, 32, 32], // q
  [0, 0, 0, 0, 0, 124, 12, 4, 4, 4, 4, 4, 0, 0, 0], // r
  [0, 0, 0, 0, 0, 28, 38, 6, 28, 32, 34, 28, 0, 0, 0], // s
  [0, 0, 0, 12, 12, 62, 12, 12, 12, 12, 8, 56, 0, 0, 0], // t
  [0, 0, 0, 0, 0, 34, 34, 34, 34, 34, 54, 60, 0, 0, 0], // u
  [0, 0, 0, 0, 0, 98, 34, 38, 52, 20, 28, 24, 0, 0, 0], // v
  [0, 0, 0, 0, 0, 65, 65, 75, 122, 54, 54, 54, 0, 0, 0], // w
  [0, 0, 0, 0, 0, 34, 52, 28, 24, 28, 54, 98, 0, 0, 0], // x
  [0, 0, 0, 0, 0, 98, 34, 38, 52, 20, 28, 24, 8, 12, 6], // y
  [0, 0, 0, 0, 0, 62, 48, 16, 8, 12, 6, 62, 0, 0, 0], // z
  [0, 0, 48, 24, 8, 8, 8, 14, 8, 8, 8, 24, 48, 0, 0], // {
  [0, 0, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 0], // |
  [0, 0, 14, 8, 8, 8, 24, 48, 24, 8, 8, 8, 14, 0, 0], // }
  [0, 0, 0, 0, 0, 0, 0, 78, 56, 0, 0, 0, 0, 0, 0], // ~
];
