#include "lines.hpp"

#include <cctype>
#include <string>

namespace oodq {

namespace {

enum class ScanState { Code, BlockComment, String, CharLit };

struct LineFlags {
  bool has_code = false;
  bool has_comment = false;
  std::string code_chars; // non-whitespace code characters on the line
};

bool is_lone_brace(const std::string& code_chars) {
  if (code_chars.empty()) return false;
  if (code_chars[0] != '{' && code_chars[0] != '}') return false;
  if (code_chars.size() == 1) return true;
  return code_chars.size() == 2 && code_chars[1] == ';';
}

void tally_line(LineTally& t, const LineFlags& f) {
  t.sline++;
  if (!f.has_code && !f.has_comment) {
    t.sblank++;
  } else if (!f.has_code) {
    t.scomm++;
  } else if (is_lone_brace(f.code_chars)) {
    t.ssbra++;
    t.sloc++;
  } else {
    t.sloc++;
    if (f.has_comment) t.scomm++;
  }
  t.eloc = t.sloc - t.ssbra;
}

} // namespace

LineTally classify_lines(std::string_view text) {
  LineTally tally;
  ScanState state = ScanState::Code;
  LineFlags flags;
  bool line_has_content = false; // any character seen since last newline

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    char next = i + 1 < text.size() ? text[i + 1] : '\0';

    if (c == '\n') {
      tally_line(tally, flags);
      flags = LineFlags{};
      line_has_content = false;
      // an unterminated block comment keeps marking lines as comment
      if (state == ScanState::BlockComment) flags.has_comment = true;
      continue;
    }
    line_has_content = true;

    switch (state) {
    case ScanState::Code:
      if (c == '/' && next == '/') {
        flags.has_comment = true;
        // skip to end of line
        while (i + 1 < text.size() && text[i + 1] != '\n') ++i;
      } else if (c == '/' && next == '*') {
        flags.has_comment = true;
        state = ScanState::BlockComment;
        ++i;
      } else if (c == '"') {
        flags.has_code = true;
        flags.code_chars.push_back(c);
        state = ScanState::String;
      } else if (c == '\'') {
        flags.has_code = true;
        flags.code_chars.push_back(c);
        state = ScanState::CharLit;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        flags.has_code = true;
        flags.code_chars.push_back(c);
      }
      break;
    case ScanState::BlockComment:
      flags.has_comment = true;
      if (c == '*' && next == '/') {
        ++i;
        state = ScanState::Code;
      }
      break;
    case ScanState::String:
      flags.has_code = true;
      if (c == '\\' && next != '\0') {
        ++i;
      } else if (c == '"') {
        state = ScanState::Code;
      }
      break;
    case ScanState::CharLit:
      flags.has_code = true;
      if (c == '\\' && next != '\0') {
        ++i;
      } else if (c == '\'') {
        state = ScanState::Code;
      }
      break;
    }
  }
  if (line_has_content) tally_line(tally, flags);
  return tally;
}

double comment_rate(const LineTally& tally) {
  if (tally.sline == 0) return 0.0;
  return static_cast<double>(tally.scomm) / static_cast<double>(tally.sline);
}

LineTally classify_line_range(std::string_view text, int first_line, int last_line) {
  // Extract the byte range spanning [first_line, last_line] and classify it.
  if (first_line < 1) first_line = 1;
  int line = 1;
  std::size_t begin = std::string_view::npos;
  std::size_t end = text.size();
  if (first_line == 1) begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\n') continue;
    ++line;
    if (line == first_line) begin = i + 1;
    if (line == last_line + 1) {
      end = i + 1; // include the newline that closes last_line
      break;
    }
  }
  if (begin == std::string_view::npos || begin >= end) return LineTally{};
  return classify_lines(text.substr(begin, end - begin));
}

} // namespace oodq
