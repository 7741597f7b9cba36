#pragma once

#include <cstdint>
#include <string_view>

namespace oodq {

// Physical-line classification of a source region. Every line lands in
// exactly one bucket: blank, comment-only, lone-brace, pure code, or
// mixed (code plus trailing comment).
struct LineTally {
  std::int64_t sline = 0;  // physical lines
  std::int64_t scomm = 0;  // comment lines (comment-only + mixed)
  std::int64_t sblank = 0; // whitespace-only lines
  std::int64_t ssbra = 0;  // lone-brace lines
  std::int64_t sloc = 0;   // code lines (lone braces included)
  std::int64_t eloc = 0;   // effective lines: sloc - ssbra

  LineTally& operator+=(const LineTally& other) {
    sline += other.sline;
    scomm += other.scomm;
    sblank += other.sblank;
    ssbra += other.ssbra;
    sloc += other.sloc;
    eloc += other.eloc;
    return *this;
  }

  friend bool operator==(const LineTally&, const LineTally&) = default;
};

// Classifies every physical line of `text`. A final line without a
// trailing newline still counts. Block comments spanning N lines
// contribute N comment lines; a line holding code and a trailing
// comment counts in both sloc and scomm; a line whose only code is a
// single `{` or `}` (optionally followed by `;`) is a lone brace.
LineTally classify_lines(std::string_view text);

// scomm / sline; 0 when the region is empty.
double comment_rate(const LineTally& tally);

// Tally for a 1-based inclusive line range of `text`.
LineTally classify_line_range(std::string_view text, int first_line, int last_line);

} // namespace oodq
