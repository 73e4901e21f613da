#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "monideal/ideal.hpp"

namespace monideal {

// Memo for ideal powers.  I^s is built incrementally from I^{s-1}, so asking
// for a high power seeds every lower one.  Keys are exact canonical forms;
// the fingerprint is only used to name files in the optional disk store, and
// loaded entries are verified against the full key before use.
class PowerCache {
public:
    PowerCache() = default;
    explicit PowerCache(std::string disk_dir);

    // I^s for s >= 0 (s == 0 gives the unit ideal).
    MonomialIdeal power(const MonomialIdeal& I, std::int64_t s);

    std::size_t memo_size() const;

private:
    std::optional<MonomialIdeal> load_from_disk(const std::string& key,
                                                const MonomialIdeal& I,
                                                std::int64_t s) const;
    void store_to_disk(const std::string& key, const MonomialIdeal& I,
                       std::int64_t s, const MonomialIdeal& value) const;

    mutable std::mutex mu_;
    std::map<std::pair<std::string, std::int64_t>, MonomialIdeal> memo_;
    std::string disk_dir_; // empty: memory only
};

// One-shot power without a shared cache.
MonomialIdeal power(const MonomialIdeal& I, std::int64_t s);

} // namespace monideal
