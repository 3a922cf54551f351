#ifndef NORMTOP_ORDINALS_HPP
#define NORMTOP_ORDINALS_HPP

#include "normtop/domination.hpp"
#include "normtop/rational.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace normtop {

// One term omega^exponent * coefficient of a Cantor normal form.
struct CnfTerm {
    std::uint32_t exponent = 0;
    std::uint64_t coefficient = 1;
    bool operator==(const CnfTerm&) const = default;
};

// Ordinal below omega^omega in Cantor normal form: a sum of terms with
// strictly decreasing exponents and positive coefficients. The empty sum
// is 0.
class CnfOrdinal {
public:
    CnfOrdinal() = default; // zero
    explicit CnfOrdinal(std::vector<CnfTerm> terms);

    static CnfOrdinal finite(std::uint64_t n);
    static CnfOrdinal omega();

    const std::vector<CnfTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const { return terms_.empty() || terms_.front().exponent == 0; }

    bool operator==(const CnfOrdinal&) const = default;

private:
    std::vector<CnfTerm> terms_;
};

enum class Ordering { Less, Equal, Greater };

// Ordinal order below omega^omega: lexicographic on the term lists.
Ordering ord_cmp(const CnfOrdinal& a, const CnfOrdinal& b);

inline bool ord_le(const CnfOrdinal& a, const CnfOrdinal& b) {
    return ord_cmp(a, b) != Ordering::Greater;
}

// The chosen injection f_alpha : { beta <= alpha } -> omega. For finite
// alpha it is the identity on {0..alpha}; for infinite alpha it encodes
// beta's term list through the iterated Cantor pairing, with 0 reserved
// for the empty list. Throws PreconditionFailure when beta > alpha.
Nat f_alpha(const CnfOrdinal& alpha, const CnfOrdinal& beta);

// F(alpha, beta) = f_alpha(beta) if beta <= alpha, else 0.
Nat big_F(const CnfOrdinal& alpha, const CnfOrdinal& beta);

struct CountableDemo {
    FuncTable table; // F restricted to the list x list grid
    SepDomCert cert; // passes check_sepdom by construction
};

// Materializes F on a finite ordinal list and solves it: every finite
// restriction is separably dominated, so the uncountable obstruction is
// not about the shape of F.
CountableDemo demo_countable_domination(const std::vector<CnfOrdinal>& ordinals);

} // namespace normtop

#endif
