#include "csslm/jsonl.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "csslm/errors.hpp"

namespace csslm {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_line(const std::string& path, const std::string& line, std::size_t line_no) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": malformed JSON line";
    throw ParseError(msg.str());
  }
  return j;
}

std::string require_text(const json& j, const std::string& path, std::size_t line_no) {
  if (!j.contains("text") || !j["text"].is_string()) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": missing string field \"text\"";
    throw ParseError(msg.str());
  }
  return j["text"].get<std::string>();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  return in;
}

std::string detokenize(const Instance& inst, const Vocabulary& vocab) {
  std::string text;
  for (std::size_t i = 0; i < inst.tokens.size(); ++i) {
    if (i) text.push_back(' ');
    text += vocab.token(inst.tokens[i]);
  }
  return text;
}

}  // namespace

LabelMap infer_label_map(const std::string& path) {
  auto in = open_input(path);
  std::set<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = parse_line(path, line, line_no);
    if (j.contains("label") && j["label"].is_string()) names.insert(j["label"].get<std::string>());
  }
  LabelMap map;
  std::int32_t next = 0;
  for (const auto& name : names) map.emplace(name, next++);
  return map;
}

LabeledDataset load_labeled(const std::string& path, const LabelMap& labels, Vocabulary& vocab,
                            bool extend_vocab) {
  auto in = open_input(path);
  LabeledDataset ds;
  ds.class_count = static_cast<std::int32_t>(labels.size());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = parse_line(path, line, line_no);
    const std::string text = require_text(j, path, line_no);
    if (!j.contains("label") || !j["label"].is_string()) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": missing string field \"label\"";
      throw ParseError(msg.str());
    }
    const std::string label_name = j["label"].get<std::string>();
    auto it = labels.find(label_name);
    if (it == labels.end()) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": unknown label \"" << label_name << "\"";
      throw ConfigError(msg.str());
    }
    Instance inst;
    inst.tokens = tokenize(vocab, text, extend_vocab);
    if (inst.tokens.empty()) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": empty text";
      throw ParseError(msg.str());
    }
    inst.label = it->second;
    if (j.contains("hidden_domain")) inst.hidden_domain = j["hidden_domain"].get<std::int32_t>();
    if (j.contains("hidden_class")) inst.hidden_class = j["hidden_class"].get<std::int32_t>();
    ds.instances.push_back(std::move(inst));
  }
  return ds;
}

CorpusStore load_corpus(const std::string& path, Vocabulary& vocab, bool extend_vocab) {
  auto in = open_input(path);
  CorpusStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = parse_line(path, line, line_no);
    const std::string text = require_text(j, path, line_no);
    Instance inst;
    inst.tokens = tokenize(vocab, text, extend_vocab);
    if (inst.tokens.empty()) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": empty text";
      throw ParseError(msg.str());
    }
    if (j.contains("hidden_domain")) inst.hidden_domain = j["hidden_domain"].get<std::int32_t>();
    if (j.contains("hidden_class")) inst.hidden_class = j["hidden_class"].get<std::int32_t>();
    store.instances.push_back(std::move(inst));
  }
  if (store.instances.empty()) throw ConfigError(path + ": empty corpus");
  return store;
}

void write_labeled(const std::string& path, const LabeledDataset& ds, const Vocabulary& vocab,
                   const LabelMap& labels) {
  std::vector<std::string> names(labels.size());
  for (const auto& [name, idx] : labels) names[static_cast<std::size_t>(idx)] = name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  for (const auto& inst : ds.instances) {
    ordered_json j;
    j["text"] = detokenize(inst, vocab);
    j["label"] = names.at(static_cast<std::size_t>(*inst.label));
    if (inst.hidden_domain) j["hidden_domain"] = *inst.hidden_domain;
    if (inst.hidden_class) j["hidden_class"] = *inst.hidden_class;
    out << j.dump() << '\n';
  }
}

void write_corpus(const std::string& path, const CorpusStore& store, const Vocabulary& vocab) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  for (const auto& inst : store.instances) {
    ordered_json j;
    j["text"] = detokenize(inst, vocab);
    if (inst.hidden_domain) j["hidden_domain"] = *inst.hidden_domain;
    if (inst.hidden_class) j["hidden_class"] = *inst.hidden_class;
    out << j.dump() << '\n';
  }
}

}  // namespace csslm
