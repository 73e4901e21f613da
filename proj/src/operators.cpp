#include "monideal/operators.hpp"

#include <algorithm>
#include <string>

#include "monideal/decomposition.hpp"

namespace monideal {

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal::from_generators(I.ring(), std::move(gens));
}

namespace {

Ring make_target(const Ring& source, const std::vector<std::int64_t>& tuple,
                 std::vector<std::size_t>& offsets) {
    if (tuple.size() != source.size())
        throw domain_error("expansion tuple length must equal the number of "
                           "ring variables");
    std::vector<std::string> names;
    offsets.clear();
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (tuple[j] < 1)
            throw domain_error("expansion tuple entries must be positive");
        offsets.push_back(names.size());
        for (std::int64_t k = 1; k <= tuple[j]; ++k)
            names.push_back(source.name(j) + "_" + std::to_string(k));
    }
    return Ring(std::move(names));
}

} // namespace

ExpansionSpec::ExpansionSpec(Ring source, std::vector<std::int64_t> tuple)
    : source_(std::move(source)), tuple_(std::move(tuple)),
      target_(make_target(source_, tuple_, offsets_)) {}

namespace {

// All ways to write `total` as an ordered sum of `parts` non-negative
// integers, first coordinate ascending.
void weak_compositions(std::int64_t total, std::size_t parts,
                       std::vector<std::int64_t>& cur,
                       std::vector<std::vector<std::int64_t>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::int64_t first = 0; first <= total; ++first) {
        cur.push_back(first);
        weak_compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

void expand_generator(const Monomial& u, const ExpansionSpec& spec,
                      std::size_t j, std::vector<std::int64_t>& exps,
                      std::vector<Monomial>& out) {
    if (j == spec.source().size()) {
        out.emplace_back(exps);
        return;
    }
    std::vector<std::vector<std::int64_t>> combos;
    std::vector<std::int64_t> cur;
    weak_compositions(u[j], spec.block_size(j), cur, combos);
    std::size_t off = spec.block_offset(j);
    for (const auto& combo : combos) {
        for (std::size_t k = 0; k < combo.size(); ++k)
            exps[off + k] = combo[k];
        expand_generator(u, spec, j + 1, exps, out);
    }
    for (std::size_t k = 0; k < spec.block_size(j); ++k)
        exps[off + k] = 0;
}

} // namespace

MonomialIdeal expand(const MonomialIdeal& I, const ExpansionSpec& spec) {
    require_same_ring(I.ring(), spec.source());
    if (I.is_zero())
        return MonomialIdeal::zero(spec.target());
    std::vector<Monomial> gens;
    std::vector<std::int64_t> exps(spec.target().size(), 0);
    for (const auto& u : I.generators())
        expand_generator(u, spec, 0, exps, gens);
    return MonomialIdeal::from_generators(spec.target(), std::move(gens));
}

Monomial contract_pi(const Monomial& m, const ExpansionSpec& spec) {
    if (m.size() != spec.target().size())
        throw ring_mismatch("monomial does not live in the expansion's "
                            "target ring");
    std::vector<std::int64_t> exps(spec.source().size(), 0);
    for (std::size_t j = 0; j < spec.source().size(); ++j) {
        std::int64_t total = 0;
        for (std::size_t k = 0; k < spec.block_size(j); ++k)
            total = checked_add(total, m[spec.block_offset(j) + k]);
        exps[j] = total;
    }
    return Monomial(std::move(exps));
}

WeightSpec::WeightSpec(std::vector<std::int64_t> w) : weights(std::move(w)) {
    for (std::int64_t wi : weights)
        if (wi < 1)
            throw domain_error("weights must be positive");
}

MonomialIdeal weight(const MonomialIdeal& I, const WeightSpec& spec) {
    if (spec.weights.size() != I.ring().size())
        throw domain_error("weight vector length must equal the number of "
                           "ring variables");
    std::vector<Monomial> gens;
    for (const auto& u : I.generators()) {
        std::vector<std::int64_t> exps(u.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            exps[i] = checked_mul(u[i], spec.weights[i]);
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::from_generators(I.ring(), std::move(gens));
}

MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p) {
    require_same_ring(I.ring(), p.ring());
    const auto& vars = p.variables();
    std::vector<std::string> names;
    for (std::size_t v : vars)
        names.push_back(I.ring().name(v));
    Ring sub(std::move(names));
    if (I.is_zero())
        return MonomialIdeal::zero(sub);
    std::vector<Monomial> gens;
    for (const auto& u : I.generators()) {
        std::vector<std::int64_t> exps(vars.size());
        for (std::size_t k = 0; k < vars.size(); ++k)
            exps[k] = u[vars[k]];
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::from_generators(std::move(sub), std::move(gens));
}

MonomialIdeal embed(const MonomialIdeal& J, const Ring& R) {
    std::vector<std::size_t> where;
    for (std::size_t k = 0; k < J.ring().size(); ++k) {
        auto idx = R.index_of(J.ring().name(k));
        if (!idx)
            throw ring_mismatch("variable '" + J.ring().name(k) +
                                "' is absent from the enclosing ring");
        where.push_back(*idx);
    }
    std::vector<Monomial> gens;
    for (const auto& u : J.generators()) {
        std::vector<std::int64_t> exps(R.size(), 0);
        for (std::size_t k = 0; k < u.size(); ++k)
            exps[where[k]] = u[k];
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::from_generators(R, std::move(gens));
}

bool containment_via_localization(const MonomialIdeal& J,
                                  const MonomialIdeal& I) {
    require_same_ring(I.ring(), J.ring());
    for (const auto& p : associated_primes(I))
        if (!contains(localize(I, p), localize(J, p)))
            return false;
    return true;
}

} // namespace monideal
