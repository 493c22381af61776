#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace csslm {

// Token table with three fixed reserved entries. [DOMAIN] and [CLASS] are the
// read-out positions the encoder realizes with its two heads; [OOV] absorbs
// tokens unseen at vocabulary-build time.
class Vocabulary {
 public:
  static constexpr std::int32_t kDomainId = 0;
  static constexpr std::int32_t kClassId = 1;
  static constexpr std::int32_t kOovId = 2;

  Vocabulary();

  // Returns the token's id, adding it if unseen. Ids are assigned in
  // first-occurrence order, which keeps vocabulary construction deterministic
  // for a fixed ingestion order.
  std::int32_t add(const std::string& token);

  // Returns the token's id or [OOV].
  std::int32_t lookup(const std::string& token) const;

  const std::string& token(std::int32_t id) const { return tokens_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return tokens_.size(); }

  const std::vector<std::string>& tokens() const { return tokens_; }

  // Rebuilds a vocabulary from an id->token list (checkpoint loading).
  static Vocabulary from_tokens(const std::vector<std::string>& tokens);

 private:
  std::unordered_map<std::string, std::int32_t> ids_;
  std::vector<std::string> tokens_;
};

// Lowercases, splits on whitespace and maps through the vocabulary. With
// extend=true unseen tokens are added; otherwise they map to [OOV]. The
// conceptual [DOMAIN]/[CLASS] prefix is supplied by the encoder, not stored.
std::vector<std::int32_t> tokenize(Vocabulary& vocab, const std::string& text, bool extend);
std::vector<std::int32_t> tokenize(const Vocabulary& vocab, const std::string& text);

}  // namespace csslm
