#pragma once

#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>

#include "congruent/serialize.hpp"

namespace congruent {

/*
 * Append-only JSON-lines store of witness bundles, one entry per line:
 *   {"key": {...}, "value": <bundle>, "created_at": "<UTC ISO-8601>"}
 * Every hit is revalidated (curve equation and triangle identities) before it
 * is returned; entries that fail are reported as CacheCorrupt on `warnings`
 * and treated as misses. Writes go through a single mutex-guarded writer.
 */
class WitnessCache {
public:
    WitnessCache(std::filesystem::path path, std::ostream& warnings);

    // The newest valid bundle stored under `key`.
    std::optional<json> lookup(const json& key);

    void store(const json& key, const json& value);

    static json make_key(const Integer& n, std::string_view kind, json params = json::object());

private:
    std::filesystem::path path_;
    std::ostream& warnings_;
    std::mutex mutex_;
};

} // namespace congruent
