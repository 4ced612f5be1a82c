#include "nashkit/knowledge_base.hpp"

#include <fstream>

#include "json.hpp"

namespace nashkit {

namespace {

KbRecord parse_line(const std::string& line, std::size_t lineno, const std::filesystem::path& path) {
  auto fail = [&](const std::string& why) {
    return InputError(path.string() + ":" + std::to_string(lineno) + ": " + why);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw fail(std::string("not a JSON record (") + e.what() + ")");
  }
  if (!j.is_object()) throw fail("record is not an object");
  if (!j.contains("schema") || !j["schema"].is_number_integer()) throw fail("missing integer field 'schema'");
  if (j["schema"].get<int>() != KnowledgeBase::kSchema)
    throw fail("unsupported schema version " + j["schema"].dump());
  for (const char* field : {"key", "verdict", "provenance"})
    if (!j.contains(field) || !j[field].is_string()) throw fail(std::string("missing string field '") + field + "'");
  try {
    return {CanonicalKey{j["key"].get<std::string>()}, parse_obstruction_status(j["verdict"].get<std::string>()),
            j["provenance"].get<std::string>()};
  } catch (const InputError& e) {
    throw fail(e.what());
  }
}

}  // namespace

KnowledgeBase::KnowledgeBase(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) {
    if (std::filesystem::exists(path_)) throw InputError("cannot read knowledge base " + path_.string());
    return;
  }
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    KbRecord rec = parse_line(line, lineno, path_);
    auto [it, inserted] = records_.emplace(rec.key, rec);
    if (!inserted && it->second.verdict != rec.verdict)
      throw KbConflict(path_.string() + ":" + std::to_string(lineno) + ": key recorded earlier as " +
                       to_string(it->second.verdict) + " is now " + to_string(rec.verdict));
  }
}

std::optional<KbRecord> KnowledgeBase::lookup(const CanonicalKey& key) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

KbRecord KnowledgeBase::store(const CanonicalKey& key, ObstructionStatus verdict, const std::string& provenance) {
  std::lock_guard lock(mutex_);
  if (auto it = records_.find(key); it != records_.end()) {
    if (it->second.verdict != verdict)
      throw KbConflict("knowledge base already holds " + std::string(to_string(it->second.verdict)) + " for key " +
                       key.bytes + "; refusing " + to_string(verdict));
    return it->second;
  }
  KbRecord rec{key, verdict, provenance};
  nlohmann::json j = {{"schema", kSchema}, {"key", key.bytes}, {"verdict", to_string(verdict)}, {"provenance", provenance}};
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << '\n';
  out.flush();
  if (!out) throw InputError("cannot append to knowledge base " + path_.string());
  records_.emplace(key, rec);
  return rec;
}

std::size_t KnowledgeBase::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

}  // namespace nashkit
