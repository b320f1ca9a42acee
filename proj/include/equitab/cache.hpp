#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equitab/engine.hpp"

namespace equitab {

/// Append-only newline-delimited JSON file of expansion records:
/// {"key":[..],"basis":"s"|"h","terms":[[[..],c],..],"engine_version":".."}.
/// Records from another engine version and malformed lines are skipped.
class NdjsonStore : public ExpansionStore {
public:
    explicit NdjsonStore(std::filesystem::path path);

    std::optional<SchurVector::Terms> load(const Composition& key, BasisKind basis) override;
    void save(const Composition& key, BasisKind basis, const SchurVector::Terms& terms) override;

    const std::filesystem::path& path() const noexcept { return path_; }
    std::size_t size() const noexcept { return records_.size(); }
    /// One message per skipped line, in file order.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    std::filesystem::path path_;
    std::map<std::pair<Composition, BasisKind>, SchurVector::Terms> records_;
    std::vector<std::string> warnings_;
};

std::string to_string(BasisKind basis);

}  // namespace equitab
