#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oodq {

enum class TokenKind {
  Identifier,
  Keyword,
  Number,
  String,
  CharLit,
  Punct, // operators and punctuation, longest-match
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 0;
};

bool is_java_keyword(std::string_view word);

// Tokenizes Java-style source. Comments and whitespace are dropped;
// string/char literals are kept as single tokens.
std::vector<Token> tokenize(std::string_view text);

} // namespace oodq
