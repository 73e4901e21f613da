#ifndef MONIDEAL_RING_HPP
#define MONIDEAL_RING_HPP

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/errors.hpp"

namespace monideal {

// letter followed by letters, digits or underscores
inline bool is_valid_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

// An ordered list of variable names fixing the ambient polynomial ring.
// Immutable; copies share the name list.
class Ring {
public:
    explicit Ring(std::vector<std::string> variables) {
        if (variables.empty())
            throw domain_error("a ring needs at least one variable");
        for (const auto& v : variables) {
            if (!is_valid_identifier(v))
                throw domain_error("invalid variable name '" + v + "'");
        }
        for (std::size_t i = 0; i < variables.size(); ++i)
            for (std::size_t j = i + 1; j < variables.size(); ++j)
                if (variables[i] == variables[j])
                    throw domain_error("duplicate variable name '" +
                                       variables[i] + "'");
        vars_ = std::make_shared<const std::vector<std::string>>(
            std::move(variables));
    }

    std::size_t size() const noexcept { return vars_->size(); }

    const std::vector<std::string>& variables() const noexcept {
        return *vars_;
    }

    const std::string& name(std::size_t i) const { return (*vars_)[i]; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_->size(); ++i)
            if ((*vars_)[i] == name)
                return i;
        return std::nullopt;
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (!(a == b))
        throw ring_mismatch("objects belong to different rings");
}

} // namespace monideal

#endif
