#ifndef MONIDEAL_PRIME_HPP
#define MONIDEAL_PRIME_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/ring.hpp"

namespace monideal {

// A monomial prime ideal: a non-empty subset of the ring's variables.
class MonomialPrime {
public:
    MonomialPrime(Ring ring, std::vector<std::size_t> vars)
        : ring_(std::move(ring)), vars_(std::move(vars)) {
        if (vars_.empty())
            throw domain_error("a monomial prime needs at least one variable");
        std::sort(vars_.begin(), vars_.end());
        for (std::size_t i = 0; i + 1 < vars_.size(); ++i)
            if (vars_[i] == vars_[i + 1])
                throw domain_error("duplicate variable in monomial prime");
        if (vars_.back() >= ring_.size())
            throw domain_error("variable index out of range in monomial prime");
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<std::size_t>& variables() const noexcept {
        return vars_;
    }

    bool contains_var(std::size_t i) const {
        return std::binary_search(vars_.begin(), vars_.end(), i);
    }

    // q subseteq p as ideals, i.e. q's variables form a subset
    bool contains(const MonomialPrime& q) const {
        require_same_ring(ring_, q.ring_);
        return std::includes(vars_.begin(), vars_.end(), q.vars_.begin(),
                             q.vars_.end());
    }

    MonomialIdeal to_ideal() const {
        std::vector<Monomial> gens;
        gens.reserve(vars_.size());
        for (std::size_t v : vars_) {
            std::vector<std::int64_t> e(ring_.size(), 0);
            e[v] = 1;
            gens.emplace_back(std::move(e));
        }
        return MonomialIdeal::from_generators(ring_, std::move(gens));
    }

    // inverse of to_ideal; nullopt if I is not generated by distinct variables
    static std::optional<MonomialPrime> from_ideal(const MonomialIdeal& I) {
        std::vector<std::size_t> vars;
        for (const auto& g : I.generators()) {
            auto s = g.support();
            if (s.size() != 1 || g[s[0]] != 1)
                return std::nullopt;
            vars.push_back(s[0]);
        }
        if (vars.empty())
            return std::nullopt;
        return MonomialPrime(I.ring(), std::move(vars));
    }

    friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
        return a.ring_ == b.ring_ && a.vars_ == b.vars_;
    }
    friend bool operator!=(const MonomialPrime& a, const MonomialPrime& b) {
        return !(a == b);
    }
    // canonical order for deterministic Ass listings
    friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
        return a.vars_ < b.vars_;
    }

private:
    Ring ring_;
    std::vector<std::size_t> vars_;
};

} // namespace monideal

#endif
