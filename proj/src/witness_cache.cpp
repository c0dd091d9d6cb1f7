#include "congruent/witness_cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "congruent/errors.hpp"

namespace congruent {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

} // namespace

WitnessCache::WitnessCache(std::filesystem::path path, std::ostream& warnings)
    : path_(std::move(path)), warnings_(warnings) {}

json WitnessCache::make_key(const Integer& n, std::string_view kind, json params) {
    return {{"n", n.get_str()}, {"kind", std::string(kind)}, {"params", std::move(params)}};
}

std::optional<json> WitnessCache::lookup(const json& key) {
    std::lock_guard lock(mutex_);
    std::ifstream in(path_);
    if (!in)
        return std::nullopt;
    std::optional<json> found;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        json entry = json::parse(line, nullptr, false);
        if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") || !entry.contains("value")) {
            warnings_ << "warning: CacheCorrupt: " << path_.string() << ":" << lineno << " is not a cache entry\n";
            continue;
        }
        if (entry["key"] != key)
            continue;
        try {
            revalidate_bundle(entry["value"]);
            found = std::move(entry["value"]);
        } catch (const MathError& e) {
            warnings_ << "warning: " << e.what() << " (" << path_.string() << ":" << lineno
                      << "), recomputing\n";
        }
    }
    return found;
}

void WitnessCache::store(const json& key, const json& value) {
    std::lock_guard lock(mutex_);
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        warnings_ << "warning: cannot write cache " << path_.string() << "\n";
        return;
    }
    json entry{{"key", key}, {"value", value}, {"created_at", utc_timestamp()}};
    out << entry.dump() << "\n";
}

} // namespace congruent
