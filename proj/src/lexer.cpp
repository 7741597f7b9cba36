#include "lexer.hpp"

#include <array>
#include <cctype>

namespace oodq {

namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",    "boolean",  "break",      "byte",    "case",
    "catch",    "char",      "class",    "const",      "continue", "default",
    "do",       "double",    "else",     "enum",       "extends", "final",
    "finally",  "float",     "for",      "goto",       "if",      "implements",
    "import",   "instanceof", "int",     "interface",  "long",    "native",
    "new",      "package",   "private",  "protected",  "public",  "return",
    "short",    "static",    "strictfp", "super",      "switch",  "synchronized",
    "this",     "throw",     "throws",   "transient",  "try",     "void",
    "volatile", "while",     "true",     "false",      "null",
};

// Multi-character punctuation, checked longest-first.
constexpr std::array<std::string_view, 29> kPuncts = {
    ">>>=", "<<=", ">>=", ">>>", "...", "==", "!=", "<=", ">=", "&&", "||",
    "++",  "--",  "+=",  "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "<<",
    ">>",  "->",  "::",  "+",   "-",   "*",  "/",
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_part(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

} // namespace

bool is_java_keyword(std::string_view word) {
  for (auto kw : kKeywords)
    if (kw == word) return true;
  return false;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto push = [&](TokenKind kind, std::string value) {
    tokens.push_back(Token{kind, std::move(value), line});
  };

  while (i < n) {
    char c = text[i];
    char next = i + 1 < n ? text[i + 1] : '\0';

    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && next == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && next == '*') {
      i += 2;
      while (i < n && !(text[i] == '*' && i + 1 < n && text[i + 1] == '/')) {
        if (text[i] == '\n') ++line;
        ++i;
      }
      i = i + 2 <= n ? i + 2 : n;
      continue;
    }
    if (c == '"') {
      std::size_t start = i++;
      while (i < n && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < n) ++i;
        else if (text[i] == '\n') ++line; // tolerate unterminated strings
        ++i;
      }
      if (i < n) ++i;
      push(TokenKind::String, std::string(text.substr(start, i - start)));
      continue;
    }
    if (c == '\'') {
      std::size_t start = i++;
      while (i < n && text[i] != '\'') {
        if (text[i] == '\\' && i + 1 < n) ++i;
        else if (text[i] == '\n') ++line;
        ++i;
      }
      if (i < n) ++i;
      push(TokenKind::CharLit, std::string(text.substr(start, i - start)));
      continue;
    }
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < n && ident_part(text[i])) ++i;
      std::string word(text.substr(start, i - start));
      TokenKind kind = is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
      push(kind, std::move(word));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(next)))) {
      std::size_t start = i;
      while (i < n && (ident_part(text[i]) || text[i] == '.')) ++i;
      // exponent sign: 1e-5
      if (i < n && (text[i] == '+' || text[i] == '-') && i > start &&
          (text[i - 1] == 'e' || text[i - 1] == 'E')) {
        ++i;
        while (i < n && (ident_part(text[i]) || text[i] == '.')) ++i;
      }
      push(TokenKind::Number, std::string(text.substr(start, i - start)));
      continue;
    }
    bool matched = false;
    for (auto p : kPuncts) {
      if (text.substr(i, p.size()) == p) {
        push(TokenKind::Punct, std::string(p));
        i += p.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      push(TokenKind::Punct, std::string(1, c));
      ++i;
    }
  }
  push(TokenKind::End, "");
  return tokens;
}

} // namespace oodq
