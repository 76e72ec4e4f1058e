#include "neutro/expr.hpp"

#include <cctype>

namespace neutro {

std::vector<ExprToken> expr_lex(const std::string& s) {
  std::vector<ExprToken> out;
  size_t i = 0;
  auto isid = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/' && j + 1 < s.size() &&
          std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({ExprToken::Number, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && isid(s[j])) ++j;
      out.push_back({ExprToken::Ident, s.substr(i, j - i)});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({ExprToken::Plus, "+"}); break;
      case '-': out.push_back({ExprToken::Minus, "-"}); break;
      case '*': out.push_back({ExprToken::Star, "*"}); break;
      case '^': out.push_back({ExprToken::Caret, "^"}); break;
      case '(': out.push_back({ExprToken::LParen, "("}); break;
      case ')': out.push_back({ExprToken::RParen, ")"}); break;
      case '[': {
        size_t j = s.find(']', i);
        if (j == std::string::npos) throw std::invalid_argument("unterminated [label]");
        out.push_back({ExprToken::BracketLabel, s.substr(i + 1, j - i - 1)});
        i = j;
        break;
      }
      default: throw std::invalid_argument(std::string("bad character '") + c + "' in expression");
    }
    ++i;
  }
  out.push_back({ExprToken::End, ""});
  return out;
}

}  // namespace neutro
