#include "monideal/ideal.hpp"

#include <algorithm>

namespace monideal {

MonomialIdeal MonomialIdeal::from_generators(Ring ring,
                                             std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (g.size() != ring.size())
            throw ring_mismatch("generator does not fit the ring");

    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Hot path at desk scale: O(g^2) divisibility checks, but a retained
    // divisor always has strictly smaller degree than the candidate
    // (equal-degree distinct monomials never divide one another), so the
    // scan stops early. Candidates arrive degree-sorted.
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.total_degree() >= g.total_degree())
                break;
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            kept.push_back(std::move(g));
    }
    return MonomialIdeal(std::move(ring), std::move(kept));
}

std::string MonomialIdeal::canonical_key() const {
    std::string key;
    for (const auto& name : ring_.variables()) {
        key += name;
        key += '\x1f';
    }
    key += '|';
    for (const auto& g : gens_) {
        for (std::int64_t e : g.exponents()) {
            key += std::to_string(e);
            key += ',';
        }
        key += ';';
    }
    return key;
}

std::uint64_t MonomialIdeal::fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical_key()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string MonomialIdeal::fingerprint_hex() const {
    static const char* digits = "0123456789abcdef";
    std::uint64_t v = fingerprint();
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

bool is_member(const Monomial& m, const MonomialIdeal& I) {
    if (m.size() != I.ring().size())
        throw ring_mismatch("monomial does not fit the ideal's ring");
    for (const auto& g : I.generators()) {
        if (g.total_degree() > m.total_degree())
            return false; // generators are degree-sorted
        if (g.divides(m))
            return true;
    }
    return false;
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring());
    for (const auto& g : J.generators())
        if (!is_member(g, I))
            return false;
    return true;
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring());
    return I.generators() == J.generators();
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Monomial> prods;
    prods.reserve(I.generators().size() * J.generators().size());
    for (const auto& u : I.generators())
        for (const auto& v : J.generators())
            prods.push_back(u * v);
    return MonomialIdeal::from_generators(I.ring(), std::move(prods));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Monomial> lcms;
    lcms.reserve(I.generators().size() * J.generators().size());
    for (const auto& u : I.generators())
        for (const auto& v : J.generators())
            lcms.push_back(lcm(u, v));
    return MonomialIdeal::from_generators(I.ring(), std::move(lcms));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m) {
    if (m.size() != I.ring().size())
        throw ring_mismatch("monomial does not fit the ideal's ring");
    std::vector<Monomial> quots;
    quots.reserve(I.generators().size());
    for (const auto& u : I.generators())
        quots.push_back(divide(u, gcd(u, m)));
    return MonomialIdeal::from_generators(I.ring(), std::move(quots));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring());
    if (J.is_zero())
        throw domain_error("colon by the zero ideal is not defined here");
    MonomialIdeal acc = colon_by_monomial(I, J.generators()[0]);
    for (std::size_t i = 1; i < J.generators().size(); ++i) {
        if (acc.is_zero())
            break;
        acc = intersect(acc, colon_by_monomial(I, J.generators()[i]));
    }
    return acc;
}

MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<Monomial> sqfree;
    sqfree.reserve(I.generators().size());
    for (const auto& g : I.generators()) {
        std::vector<std::int64_t> e(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            e[i] = g[i] > 0 ? 1 : 0;
        sqfree.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_generators(I.ring(), std::move(sqfree));
}

std::vector<std::size_t> support(const MonomialIdeal& I) {
    std::vector<bool> seen(I.ring().size(), false);
    for (const auto& g : I.generators())
        for (std::size_t i : g.support())
            seen[i] = true;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i])
            s.push_back(i);
    return s;
}

} // namespace monideal
