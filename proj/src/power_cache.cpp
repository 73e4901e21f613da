#include "monideal/power_cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monideal/parser.hpp"

namespace monideal {

namespace fs = std::filesystem;
using nlohmann::json;

PowerCache::PowerCache(std::string disk_dir) : disk_dir_(std::move(disk_dir)) {
    if (!disk_dir_.empty())
        fs::create_directories(disk_dir_);
}

std::size_t PowerCache::memo_size() const {
    std::scoped_lock lock(mu_);
    return memo_.size();
}

MonomialIdeal PowerCache::power(const MonomialIdeal& I, std::int64_t s) {
    if (s < 0)
        throw domain_error("ideal power requires a non-negative exponent");
    if (s == 0)
        return MonomialIdeal::unit(I.ring());
    if (I.is_zero() || I.is_unit())
        return I;
    const std::string key = I.canonical_key();

    std::scoped_lock lock(mu_);
    auto lookup = [&](std::int64_t t) -> std::optional<MonomialIdeal> {
        auto it = memo_.find({key, t});
        if (it != memo_.end())
            return it->second;
        if (!disk_dir_.empty()) {
            if (auto v = load_from_disk(key, I, t)) {
                memo_.emplace(std::make_pair(key, t), *v);
                return v;
            }
        }
        return std::nullopt;
    };

    // Start from the highest power already known and multiply up.
    std::int64_t t = s;
    std::optional<MonomialIdeal> acc;
    for (; t >= 2; --t) {
        acc = lookup(t);
        if (acc)
            break;
    }
    if (!acc) {
        acc = I;
        t = 1;
    }
    while (t < s) {
        acc = product(*acc, I);
        ++t;
        memo_.emplace(std::make_pair(key, t), *acc);
        if (!disk_dir_.empty())
            store_to_disk(key, I, t, *acc);
    }
    return *acc;
}

std::optional<MonomialIdeal>
PowerCache::load_from_disk(const std::string& key, const MonomialIdeal& I,
                           std::int64_t s) const {
    try {
        fs::path path = fs::path(disk_dir_) /
                        (I.fingerprint_hex() + "_p" + std::to_string(s) +
                         ".json");
        std::ifstream in(path);
        if (!in)
            return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        json doc = json::parse(buf.str());
        if (!doc.is_object() || doc.value("format", 0) != 1 ||
            !doc.contains("power") ||
            doc["power"].get<std::int64_t>() != s)
            return std::nullopt;
        MonomialIdeal base = ideal_from_json(doc.at("base").dump());
        // Fingerprints can collide; only the exact base ideal counts.
        if (base.canonical_key() != key)
            return std::nullopt;
        MonomialIdeal value = ideal_from_json(doc.at("value").dump());
        if (!(value.ring() == I.ring()))
            return std::nullopt;
        return value;
    } catch (...) {
        return std::nullopt; // unreadable cache entries are misses
    }
}

void PowerCache::store_to_disk(const std::string& key, const MonomialIdeal& I,
                               std::int64_t s,
                               const MonomialIdeal& value) const {
    (void)key;
    try {
        json doc;
        doc["format"] = 1;
        doc["power"] = s;
        doc["base"] = json::parse(to_json(I));
        doc["value"] = json::parse(to_json(value));
        fs::path final_path =
            fs::path(disk_dir_) /
            (I.fingerprint_hex() + "_p" + std::to_string(s) + ".json");
        fs::path tmp_path = final_path;
        tmp_path += ".tmp";
        {
            std::ofstream out(tmp_path, std::ios::trunc);
            if (!out)
                return;
            out << doc.dump(2) << '\n';
        }
        fs::rename(tmp_path, final_path);
    } catch (...) {
        // best effort; the in-memory memo already holds the value
    }
}

MonomialIdeal power(const MonomialIdeal& I, std::int64_t s) {
    PowerCache cache;
    return cache.power(I, s);
}

} // namespace monideal
