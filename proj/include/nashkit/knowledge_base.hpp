#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "nashkit/canonical.hpp"
#include "nashkit/error.hpp"
#include "nashkit/obstructions.hpp"

namespace nashkit {

struct KbRecord {
  CanonicalKey key;
  ObstructionStatus verdict = ObstructionStatus::NotRuledOut;
  std::string provenance;

  friend bool operator==(const KbRecord&, const KbRecord&) = default;
};

/// Append-only file of verdicts keyed by pair-graph canonical keys, one JSON
/// object per line. A verdict once recorded for a key is never replaced:
/// storing a different one is an error. One writer at a time.
class KnowledgeBase {
 public:
  static constexpr int kSchema = 1;

  /// Loads `path` if it exists. Throws InputError for malformed lines or
  /// for a file that already contradicts itself.
  explicit KnowledgeBase(std::filesystem::path path);

  std::optional<KbRecord> lookup(const CanonicalKey& key) const;

  /// Appends a record unless the same verdict is already present. Returns
  /// the record now on file. Throws KbConflict on a different verdict.
  KbRecord store(const CanonicalKey& key, ObstructionStatus verdict, const std::string& provenance);

  std::size_t size() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::map<CanonicalKey, KbRecord> records_;
  mutable std::mutex mutex_;
};

class KbConflict : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace nashkit
