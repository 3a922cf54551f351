#include "normtop/ordinals.hpp"

#include "normtop/errors.hpp"

namespace normtop {

CnfOrdinal::CnfOrdinal(std::vector<CnfTerm> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coefficient == 0)
            throw InvalidArgument("CNF coefficients must be positive");
        if (i > 0 && terms_[i - 1].exponent <= terms_[i].exponent)
            throw InvalidArgument("CNF exponents must be strictly decreasing");
    }
}

CnfOrdinal CnfOrdinal::finite(std::uint64_t n) {
    if (n == 0)
        return CnfOrdinal();
    return CnfOrdinal({CnfTerm{0, n}});
}

CnfOrdinal CnfOrdinal::omega() {
    return CnfOrdinal({CnfTerm{1, 1}});
}

Ordering ord_cmp(const CnfOrdinal& a, const CnfOrdinal& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (ta[i].exponent != tb[i].exponent)
            return ta[i].exponent > tb[i].exponent ? Ordering::Greater : Ordering::Less;
        if (ta[i].coefficient != tb[i].coefficient)
            return ta[i].coefficient > tb[i].coefficient ? Ordering::Greater : Ordering::Less;
    }
    if (ta.size() == tb.size())
        return Ordering::Equal;
    // the longer form adds positive lower-order terms
    return ta.size() > tb.size() ? Ordering::Greater : Ordering::Less;
}

namespace {

Nat cantor_pair(const Nat& a, const Nat& b) {
    return (a + b) * (a + b + 1) / 2 + b;
}

// Injective code of a CNF term list: 0 for the empty list, otherwise
// 1 + pair(pair(exponent, coefficient), code of the rest).
Nat encode_terms(const std::vector<CnfTerm>& terms, std::size_t from) {
    if (from == terms.size())
        return Nat(0);
    const Nat head = cantor_pair(Nat(terms[from].exponent), Nat(terms[from].coefficient));
    return cantor_pair(head, encode_terms(terms, from + 1)) + 1;
}

} // namespace

Nat f_alpha(const CnfOrdinal& alpha, const CnfOrdinal& beta) {
    if (ord_cmp(beta, alpha) == Ordering::Greater)
        throw PreconditionFailure("f_alpha is only defined for beta <= alpha");
    if (alpha.is_finite()) {
        // identity on {0..alpha}
        return beta.is_zero() ? Nat(0) : Nat(beta.terms().front().coefficient);
    }
    return encode_terms(beta.terms(), 0);
}

Nat big_F(const CnfOrdinal& alpha, const CnfOrdinal& beta) {
    if (ord_cmp(beta, alpha) == Ordering::Greater)
        return Nat(0);
    return f_alpha(alpha, beta);
}

CountableDemo demo_countable_domination(const std::vector<CnfOrdinal>& ordinals) {
    if (ordinals.empty())
        throw InvalidArgument("need at least one ordinal");
    const std::size_t n = ordinals.size();
    FuncTable table(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.set(i, j, big_F(ordinals[i], ordinals[j]));
    SepDomCert cert = solve_sepdom_table(table);
    if (!check_sepdom(table, cert).ok)
        throw Error("internal: countable demo certificate failed its own check");
    return {std::move(table), std::move(cert)};
}

} // namespace normtop
