#pragma once

// Brute-force reference implementations over bounded exponent boxes, plus
// random instance generators.  Only the data accessors of the library types
// are used here; every algebraic question is re-derived from first
// principles so these can referee the real algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/prime.hpp"

namespace oracles {

using monideal::Monomial;
using monideal::MonomialIdeal;
using monideal::Ring;

using Exps = std::vector<std::int64_t>;

// Membership by raw divisibility: some generator fits under e componentwise.
inline bool raw_member(const Exps& e, const MonomialIdeal& I) {
    for (const auto& g : I.generators()) {
        bool fits = true;
        for (std::size_t i = 0; i < e.size() && fits; ++i)
            fits = g[i] <= e[i];
        if (fits)
            return true;
    }
    return false;
}

// Componentwise max exponent over all generators of all ideals, plus one.
inline Exps box_limits(std::initializer_list<const MonomialIdeal*> ideals) {
    std::size_t n = (*ideals.begin())->ring().size();
    Exps limits(n, 1);
    for (const MonomialIdeal* I : ideals)
        for (const auto& g : I->generators())
            for (std::size_t i = 0; i < n; ++i)
                limits[i] = std::max(limits[i], g[i] + 1);
    return limits;
}

// Visit every exponent vector e with 0 <= e[i] <= limits[i].
inline void for_box(const Exps& limits,
                    const std::function<void(const Exps&)>& visit) {
    Exps e(limits.size(), 0);
    for (;;) {
        visit(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == limits[i])
            e[i++] = 0;
        if (i == e.size())
            return;
        ++e[i];
    }
}

inline Exps plus(const Exps& a, const Monomial& b) {
    Exps out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

// w ∈ (I : J) iff w·v ∈ I for every generator v of J.
inline bool colon_member(const Exps& w, const MonomialIdeal& I,
                         const MonomialIdeal& J) {
    for (const auto& v : J.generators())
        if (!raw_member(plus(w, v), I))
            return false;
    return true;
}

// Two ideals are equal iff they agree as membership predicates on a box
// containing all generators of both.
inline bool equal_on_box(const MonomialIdeal& A, const MonomialIdeal& B) {
    if (A.is_zero() || B.is_zero())
        return A.is_zero() && B.is_zero();
    Exps limits = box_limits({&A, &B});
    bool same = true;
    for_box(limits, [&](const Exps& e) {
        if (raw_member(e, A) != raw_member(e, B))
            same = false;
    });
    return same;
}

// Ass(R/I) by witness search: for every box monomial u ∉ I, the variables
// V = { i : x_i·u ∈ I } form an associated prime exactly when every w with
// w·u ∈ I meets V.  Checking w over the box is enough because a divisor of
// any such w with minimal exponents stays inside it.
inline std::set<std::vector<std::size_t>> ass_oracle(const MonomialIdeal& I) {
    std::set<std::vector<std::size_t>> out;
    Exps limits = box_limits({&I});
    std::size_t n = limits.size();
    for_box(limits, [&](const Exps& u) {
        if (raw_member(u, I))
            return;
        std::vector<std::size_t> vars;
        std::vector<bool> in_v(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            Exps bumped = u;
            ++bumped[i];
            if (raw_member(bumped, I)) {
                vars.push_back(i);
                in_v[i] = true;
            }
        }
        if (vars.empty())
            return;
        bool is_prime_colon = true;
        for_box(limits, [&](const Exps& w) {
            if (!is_prime_colon || !raw_member(plus(w, Monomial(u)), I))
                return;
            bool meets = false;
            for (std::size_t i = 0; i < n && !meets; ++i)
                meets = w[i] > 0 && in_v[i];
            bool w_is_unit = true;
            for (std::size_t i = 0; i < n && w_is_unit; ++i)
                w_is_unit = w[i] == 0;
            if (!meets && !w_is_unit)
                is_prime_colon = false;
        });
        if (is_prime_colon)
            out.insert(vars);
    });
    return out;
}

// ---- random instances ---------------------------------------------------

inline Ring random_ring(std::mt19937_64& rng, int max_vars = 3) {
    static const std::vector<std::string> pool = {"x", "y", "z", "u", "v"};
    std::uniform_int_distribution<int> nvars(1, max_vars);
    std::vector<std::string> names(pool.begin(),
                                   pool.begin() + nvars(rng));
    return Ring(std::move(names));
}

// Nonzero proper ideal: at least one generator, none of them the unit.
inline MonomialIdeal random_proper_ideal(std::mt19937_64& rng,
                                         const Ring& ring, int max_gens = 4,
                                         int max_exp = 4) {
    std::uniform_int_distribution<int> ngens(1, max_gens);
    std::uniform_int_distribution<std::int64_t> expo(0, max_exp);
    std::vector<Monomial> gens;
    int k = ngens(rng);
    for (int g = 0; g < k; ++g) {
        Exps e(ring.size());
        do {
            for (std::size_t i = 0; i < ring.size(); ++i)
                e[i] = expo(rng);
        } while (std::all_of(e.begin(), e.end(),
                             [](std::int64_t v) { return v == 0; }));
        gens.emplace_back(e);
    }
    return MonomialIdeal::from_generators(ring, std::move(gens));
}

} // namespace oracles
