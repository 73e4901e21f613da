#include "monideal/decomposition.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace monideal {

IrreducibleComponent::IrreducibleComponent(
    Ring ring, std::vector<std::pair<std::size_t, std::int64_t>> powers)
    : ring_(std::move(ring)), powers_(std::move(powers)) {
    std::sort(powers_.begin(), powers_.end());
    if (powers_.empty())
        throw domain_error("irreducible component needs at least one "
                           "pure power");
    for (std::size_t i = 0; i < powers_.size(); ++i) {
        if (powers_[i].first >= ring_.size())
            throw domain_error("pure power variable out of range");
        if (powers_[i].second <= 0)
            throw domain_error("pure power exponent must be positive");
        if (i > 0 && powers_[i].first == powers_[i - 1].first)
            throw domain_error("duplicate variable in irreducible component");
    }
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
    std::vector<Monomial> gens;
    for (const auto& [var, exp] : powers_) {
        std::vector<std::int64_t> e(ring_.size(), 0);
        e[var] = exp;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_generators(ring_, std::move(gens));
}

MonomialPrime IrreducibleComponent::radical() const {
    std::vector<std::size_t> vars;
    for (const auto& [var, exp] : powers_)
        vars.push_back(var);
    return MonomialPrime(ring_, std::move(vars));
}

bool IrreducibleComponent::operator==(
    const IrreducibleComponent& other) const {
    return ring_ == other.ring_ && powers_ == other.powers_;
}

bool IrreducibleComponent::operator<(const IrreducibleComponent& other) const {
    return powers_ < other.powers_;
}

namespace {

// All generators are pure powers after minimalization, at most one per
// variable; read them off as a component.
bool is_irreducible(const MonomialIdeal& I,
                    std::vector<std::pair<std::size_t, std::int64_t>>& out) {
    out.clear();
    for (const auto& g : I.generators()) {
        auto supp = g.support();
        if (supp.size() != 1)
            return false;
        out.emplace_back(supp[0], g[supp[0]]);
    }
    return true;
}

void decompose(const MonomialIdeal& I,
               std::map<std::string, std::vector<IrreducibleComponent>>& memo,
               std::vector<IrreducibleComponent>& out) {
    std::string key = I.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        return;
    }

    std::vector<std::pair<std::size_t, std::int64_t>> powers;
    if (is_irreducible(I, powers)) {
        std::vector<IrreducibleComponent> self = {
            IrreducibleComponent(I.ring(), std::move(powers))};
        out.insert(out.end(), self.begin(), self.end());
        memo.emplace(std::move(key), std::move(self));
        return;
    }

    // Split the first mixed generator u = x_i^a * w, gcd(x_i^a, w) = 1:
    // I = (I + (x_i^a)) ∩ (I + (w)).
    const Monomial* mixed = nullptr;
    for (const auto& g : I.generators()) {
        if (g.support().size() >= 2) {
            mixed = &g;
            break;
        }
    }
    std::size_t i = mixed->support().front();
    std::vector<std::int64_t> pure(I.ring().size(), 0);
    pure[i] = (*mixed)[i];
    std::vector<std::int64_t> rest = mixed->exponents();
    rest[i] = 0;

    std::vector<IrreducibleComponent> merged;
    for (auto&& extra : {Monomial(std::move(pure)), Monomial(std::move(rest))}) {
        std::vector<Monomial> gens = I.generators();
        gens.push_back(extra);
        decompose(MonomialIdeal::from_generators(I.ring(), std::move(gens)),
                  memo, merged);
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    out.insert(out.end(), merged.begin(), merged.end());
    memo.emplace(std::move(key), std::move(merged));
}

} // namespace

Decomposition irreducible_decomposition(const MonomialIdeal& I) {
    if (I.is_zero())
        throw domain_error("cannot decompose the zero ideal");
    if (I.is_unit())
        throw domain_error("cannot decompose the unit ideal");

    std::map<std::string, std::vector<IrreducibleComponent>> memo;
    std::vector<IrreducibleComponent> comps;
    decompose(I, memo, comps);
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

    // Drop components containing the intersection of the others.  Once a
    // component survives this test it stays non-redundant as later ones are
    // removed, so a single forward pass reaches the irredundant set.
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(comps.size());
    for (const auto& c : comps)
        ideals.push_back(c.to_ideal());
    std::vector<bool> kept(comps.size(), true);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        MonomialIdeal rest = MonomialIdeal::unit(I.ring());
        for (std::size_t j = 0; j < comps.size(); ++j)
            if (j != i && kept[j])
                rest = intersect(rest, ideals[j]);
        if (contains(ideals[i], rest))
            kept[i] = false;
    }
    std::vector<IrreducibleComponent> pruned;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (kept[i])
            pruned.push_back(comps[i]);
    return Decomposition{I, std::move(pruned)};
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
    Decomposition dec = irreducible_decomposition(I);
    std::vector<MonomialPrime> primes;
    primes.reserve(dec.components.size());
    for (const auto& c : dec.components)
        primes.push_back(c.radical());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
    std::vector<MonomialPrime> ass = associated_primes(I);
    std::vector<MonomialPrime> mins;
    for (const auto& p : ass) {
        bool minimal = true;
        for (const auto& q : ass) {
            if (!(q == p) && p.contains(q)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            mins.push_back(p);
    }
    return mins;
}

} // namespace monideal
