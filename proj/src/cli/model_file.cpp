// Copyright 2026 The stylemine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stylemine/cli/model_file.hpp"

#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>
#include <zlib.h>

#include "stylemine/errors.hpp"

namespace stylemine::cli {
namespace {

using nlohmann::ordered_json;
constexpr char kMagic[4] = {'S', 'M', 'D', 'L'};
constexpr std::size_t kDigestSize = 32;

// ---- little-endian helpers -------------------------------------------------

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}
  std::uint64_t uint(int width) {
    need(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += static_cast<std::size_t>(width);
    return v;
  }
  std::string_view take(std::size_t n) {
    need(n);
    const auto out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > bytes_.size()) throw Error("model file is truncated");
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::string digest_bytes(std::string_view payload) {
  const auto hex = sha256_hex(payload);
  std::string raw;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    raw += static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16));
  }
  return raw;
}

// ---- documents -------------------------------------------------------------

const char* comparator_text(rules::Comparator op) {
  switch (op) {
    case rules::Comparator::LE:
      return "<=";
    case rules::Comparator::GT:
      return ">";
    case rules::Comparator::InSet:
      return "in";
    case rules::Comparator::NotInSet:
      return "not in";
  }
  return "?";
}

rules::Comparator comparator_from(const std::string& text) {
  if (text == "<=") return rules::Comparator::LE;
  if (text == ">") return rules::Comparator::GT;
  if (text == "in") return rules::Comparator::InSet;
  if (text == "not in") return rules::Comparator::NotInSet;
  throw Error("unknown comparator " + text);
}

features::Slot slot_from(const std::string& text) {
  features::Slot slot;
  if (text == "0") return slot;
  if (text.size() < 2) throw Error("bad slot " + text);
  switch (text[0]) {
    case '-':
      slot.kind = features::SlotKind::Left;
      break;
    case '+':
      slot.kind = features::SlotKind::Right;
      break;
    case '^':
      slot.kind = features::SlotKind::Parent;
      break;
    default:
      throw Error("bad slot " + text);
  }
  slot.index = static_cast<std::uint8_t>(std::stoi(text.substr(1)));
  return slot;
}

features::Attribute attribute_from(const std::string& name) {
  for (std::size_t i = 0; i < features::kAttributeCount; ++i) {
    const auto a = static_cast<features::Attribute>(i);
    if (features::attribute_name(a) == name) return a;
  }
  throw Error("unknown attribute " + name);
}

ordered_json params_json(const forest::HyperParams& p) {
  return {{"model_kind", p.model_kind == forest::ModelKind::Forest ? "forest" : "tree"},
          {"max_depth", p.max_depth},
          {"max_features", p.max_features.text()},
          {"min_samples_split", p.min_samples_split},
          {"min_samples_leaf", p.min_samples_leaf},
          {"n_trees", p.n_trees}};
}

forest::HyperParams params_from(const nlohmann::json& j) {
  forest::HyperParams p;
  p.model_kind = j.at("model_kind") == "forest" ? forest::ModelKind::Forest
                                                 : forest::ModelKind::SingleTree;
  p.max_depth = j.at("max_depth");
  const std::string mf = j.at("max_features");
  if (mf == "sqrt") {
    p.max_features = {forest::MaxFeatures::Kind::Sqrt, 1.0};
  } else {
    p.max_features = {forest::MaxFeatures::Kind::Fraction, std::stod(mf)};
  }
  p.min_samples_split = j.at("min_samples_split");
  p.min_samples_leaf = j.at("min_samples_leaf");
  p.n_trees = j.at("n_trees");
  return p;
}

std::string manifest(const ModelFile& f) {
  const auto& i = f.info;
  ordered_json doc{
      {"format_version", kModelFormatVersion},
      {"language", std::string(syntax::language_name(f.model.language))},
      {"taxonomy_version", syntax::RoleTaxonomy::javascript().version()},
      {"compound_cap", f.model.compound_cap},
      {"has_forest", f.model.forest.has_value()},
      {"training",
       {{"seed", i.seed},
        {"training_byte_cap", i.training_byte_cap},
        {"max_line_length", i.max_line_length},
        {"min_label_occurrences", i.min_label_occurrences},
        {"feature_top_k", i.feature_top_k},
        {"confidence_threshold", i.confidence_threshold},
        {"jaccard_threshold", i.jaccard_threshold},
        {"search_budget", i.search_budget},
        {"corpus_digest", i.corpus_digest},
        {"n_files", i.n_files},
        {"n_bytes", i.n_bytes},
        {"n_samples", i.n_samples},
        {"params", params_json(i.params)},
        {"search_score", i.search_score}}}};
  return doc.dump(2);
}

std::string vocabulary_doc(const features::LabelVocabulary& v) {
  ordered_json labels = ordered_json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    labels.push_back({{"label", v.label(i).to_string()}, {"frequency", v.frequency(i)}});
  }
  return ordered_json{{"min_occurrences", v.min_occurrences()},
                      {"retained_mass", v.retained_mass()},
                      {"labels", labels}}
      .dump(2);
}

std::string scheme_doc(const features::FeatureScheme& s) {
  return ordered_json{{"window",
                       {{"left", s.window().left},
                        {"right", s.window().right},
                        {"parents", s.window().parents}}},
                      {"types", s.types()},
                      {"reserved", s.reserved()},
                      {"roles", s.roles()},
                      {"labels", s.labels()},
                      {"selected", s.selected()}}
      .dump(2);
}

std::string rules_doc(const rules::RuleSet& set, const features::FeatureScheme& scheme) {
  ordered_json list = ordered_json::array();
  for (const auto& r : set.rules) {
    ordered_json clauses = ordered_json::array();
    for (const auto& c : r.clauses) {
      ordered_json j{{"slot", c.slot.text()},
                     {"attribute", std::string(features::attribute_name(c.attribute))},
                     {"op", comparator_text(c.op)}};
      if (c.op == rules::Comparator::LE || c.op == rules::Comparator::GT) {
        j["threshold"] = c.threshold;
      } else {
        j["categories"] = c.categories;
      }
      j["text"] = c.text(scheme);
      clauses.push_back(std::move(j));
    }
    list.push_back({{"hash", rules::hash_hex(r.hash)},
                    {"label", r.label},
                    {"confidence", r.confidence},
                    {"support", r.support},
                    {"tree", r.tree},
                    {"clauses", clauses}});
  }
  const auto& p = set.provenance;
  return ordered_json{{"provenance",
                       {{"seed", p.seed},
                        {"confidence_threshold", p.confidence_threshold},
                        {"jaccard_threshold", p.jaccard_threshold},
                        {"extracted", p.extracted},
                        {"after_filter", p.after_filter},
                        {"after_merge", p.after_merge},
                        {"after_prune", p.after_prune}}},
                      {"rules", list}}
      .dump(2);
}

}  // namespace

std::string encode_model(const ModelFile& file) {
  std::map<std::string, std::string> entries;
  entries["manifest.json"] = manifest(file);
  entries["vocabulary.json"] = vocabulary_doc(file.model.vocabulary);
  entries["scheme.json"] = scheme_doc(file.model.scheme);
  entries["rules.json"] = rules_doc(file.model.rules, file.model.scheme);
  if (file.model.forest) entries["forest.bin"] = forest::serialize(*file.model.forest);

  std::string payload;
  for (const auto& [name, data] : entries) {
    put_u32(payload, static_cast<std::uint32_t>(name.size()));
    payload += name;
    put_u64(payload, data.size());
    payload += data;
  }
  uLongf compressed_size = compressBound(payload.size());
  std::string compressed(compressed_size, '\0');
  if (compress2(reinterpret_cast<Bytef*>(compressed.data()), &compressed_size,
                reinterpret_cast<const Bytef*>(payload.data()), payload.size(),
                Z_BEST_COMPRESSION) != Z_OK) {
    throw Error("model compression failed");
  }
  compressed.resize(compressed_size);

  std::string out(kMagic, sizeof kMagic);
  put_u32(out, kModelFormatVersion);
  out += digest_bytes(payload);
  put_u64(out, payload.size());
  out += compressed;
  return out;
}

ModelFile decode_model(std::string_view bytes) {
  Reader header(bytes);
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error("not a stylemine model file");
  }
  header.take(4);
  const auto version = static_cast<std::uint32_t>(header.uint(4));
  if (version != kModelFormatVersion) {
    throw IncompatibleModelVersion("model format " + std::to_string(version) +
                                   " is not supported (expected " +
                                   std::to_string(kModelFormatVersion) + ")");
  }
  const auto digest = header.take(kDigestSize);
  const auto payload_size = header.uint(8);
  const auto compressed = bytes.substr(4 + 4 + kDigestSize + 8);
  std::string payload(payload_size, '\0');
  uLongf out_size = payload_size;
  if (uncompress(reinterpret_cast<Bytef*>(payload.data()), &out_size,
                 reinterpret_cast<const Bytef*>(compressed.data()), compressed.size()) != Z_OK ||
      out_size != payload_size) {
    throw Error("model payload is corrupt");
  }
  if (digest_bytes(payload) != digest) throw Error("model digest mismatch");

  std::map<std::string, std::string> entries;
  Reader reader(payload);
  while (!reader.done()) {
    const auto name_size = reader.uint(4);
    const std::string name(reader.take(name_size));
    const auto size = reader.uint(8);
    entries[name] = std::string(reader.take(size));
  }
  auto entry = [&](const std::string& name) -> const std::string& {
    const auto it = entries.find(name);
    if (it == entries.end()) throw Error("model file lacks " + name);
    return it->second;
  };

  ModelFile file;
  try {
    const auto m = nlohmann::json::parse(entry("manifest.json"));
    file.model.language = syntax::language_from_name(m.at("language").get<std::string>());
    if (m.at("taxonomy_version").get<int>() != syntax::RoleTaxonomy::javascript().version()) {
      throw IncompatibleModelVersion("model was trained with another role taxonomy version");
    }
    file.model.compound_cap = m.at("compound_cap");
    const auto& t = m.at("training");
    auto& i = file.info;
    i.seed = t.at("seed");
    i.training_byte_cap = t.at("training_byte_cap");
    i.max_line_length = t.at("max_line_length");
    i.min_label_occurrences = t.at("min_label_occurrences");
    i.feature_top_k = t.at("feature_top_k");
    i.confidence_threshold = t.at("confidence_threshold");
    i.jaccard_threshold = t.at("jaccard_threshold");
    i.search_budget = t.at("search_budget");
    i.corpus_digest = t.at("corpus_digest");
    i.n_files = t.at("n_files");
    i.n_bytes = t.at("n_bytes");
    i.n_samples = t.at("n_samples");
    i.params = params_from(t.at("params"));
    i.search_score = t.at("search_score");

    const auto v = nlohmann::json::parse(entry("vocabulary.json"));
    std::vector<features::CompoundLabel> labels;
    std::vector<std::size_t> frequencies;
    for (const auto& l : v.at("labels")) {
      labels.push_back(features::CompoundLabel::parse(l.at("label").get<std::string>()));
      frequencies.push_back(l.at("frequency"));
    }
    file.model.vocabulary = features::LabelVocabulary::from_entries(
        std::move(labels), std::move(frequencies), v.at("min_occurrences"),
        v.at("retained_mass"));

    const auto s = nlohmann::json::parse(entry("scheme.json"));
    features::Window window{s.at("window").at("left"), s.at("window").at("right"),
                            s.at("window").at("parents")};
    file.model.scheme = features::FeatureScheme(window, s.at("types"), s.at("reserved"),
                                                s.at("roles"), s.at("labels"));
    file.model.scheme.set_selected(s.at("selected").get<std::vector<std::uint32_t>>());

    const auto r = nlohmann::json::parse(entry("rules.json"));
    auto& set = file.model.rules;
    const auto& p = r.at("provenance");
    set.provenance.seed = p.at("seed");
    set.provenance.confidence_threshold = p.at("confidence_threshold");
    set.provenance.jaccard_threshold = p.at("jaccard_threshold");
    set.provenance.extracted = p.at("extracted");
    set.provenance.after_filter = p.at("after_filter");
    set.provenance.after_merge = p.at("after_merge");
    set.provenance.after_prune = p.at("after_prune");
    for (const auto& j : r.at("rules")) {
      rules::Rule rule;
      rule.label = j.at("label");
      rule.confidence = j.at("confidence");
      rule.support = j.at("support");
      rule.tree = j.at("tree");
      rule.hash = rules::parse_hash(j.at("hash").get<std::string>());
      for (const auto& c : j.at("clauses")) {
        rules::Clause clause;
        clause.slot = slot_from(c.at("slot"));
        clause.attribute = attribute_from(c.at("attribute"));
        clause.op = comparator_from(c.at("op"));
        if (c.contains("threshold")) clause.threshold = c.at("threshold");
        if (c.contains("categories")) {
          clause.categories = c.at("categories").get<std::vector<std::int32_t>>();
        }
        rule.clauses.push_back(std::move(clause));
      }
      if (rules::hash_rule(rule, file.model.scheme) != rule.hash) {
        throw Error("rule " + rules::hash_hex(rule.hash) + " does not match its hash");
      }
      set.rules.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed model document: ") + e.what());
  }
  if (entries.count("forest.bin")) file.model.forest = forest::deserialize(entries["forest.bin"]);
  return file;
}

void save_model(const ModelFile& file, const std::filesystem::path& path) {
  const auto bytes = encode_model(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("cannot write " + path.string());
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return decode_model(buffer.str());
}

std::string model_digest(const ModelFile& file) { return sha256_hex(encode_model(file)); }

}  // namespace stylemine::cli
