#include "csslm/vocab.hpp"

#include <cctype>

#include "csslm/errors.hpp"

namespace csslm {

Vocabulary::Vocabulary() {
  tokens_ = {"[DOMAIN]", "[CLASS]", "[OOV]"};
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    ids_.emplace(tokens_[i], static_cast<std::int32_t>(i));
}

std::int32_t Vocabulary::add(const std::string& token) {
  auto it = ids_.find(token);
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<std::int32_t>(tokens_.size());
  tokens_.push_back(token);
  ids_.emplace(token, id);
  return id;
}

std::int32_t Vocabulary::lookup(const std::string& token) const {
  auto it = ids_.find(token);
  return it == ids_.end() ? kOovId : it->second;
}

Vocabulary Vocabulary::from_tokens(const std::vector<std::string>& tokens) {
  if (tokens.size() < 3 || tokens[0] != "[DOMAIN]" || tokens[1] != "[CLASS]" || tokens[2] != "[OOV]")
    throw ParseError("vocabulary list must start with [DOMAIN], [CLASS], [OOV]");
  Vocabulary v;
  for (std::size_t i = 3; i < tokens.size(); ++i) v.add(tokens[i]);
  if (v.size() != tokens.size()) throw ParseError("vocabulary list contains duplicate tokens");
  return v;
}

namespace {

std::vector<std::string> split_lower(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char ch : text) {
    if (std::isspace(ch)) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(static_cast<char>(std::tolower(ch)));
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

std::vector<std::int32_t> tokenize(Vocabulary& vocab, const std::string& text, bool extend) {
  std::vector<std::int32_t> ids;
  for (const auto& tok : split_lower(text))
    ids.push_back(extend ? vocab.add(tok) : vocab.lookup(tok));
  return ids;
}

std::vector<std::int32_t> tokenize(const Vocabulary& vocab, const std::string& text) {
  std::vector<std::int32_t> ids;
  for (const auto& tok : split_lower(text)) ids.push_back(vocab.lookup(tok));
  return ids;
}

}  // namespace csslm
