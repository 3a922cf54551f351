#ifndef NORMTOP_DOMINATION_HPP
#define NORMTOP_DOMINATION_HPP

#include "normtop/norms.hpp"
#include "normtop/vectorspace.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace normtop {

// Dense grid of non-negative integers f(x, y), x < rows, y < cols.
class FuncTable {
public:
    FuncTable() = default;
    FuncTable(std::size_t rows, std::size_t cols); // all zeros
    explicit FuncTable(std::vector<std::vector<Nat>> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Nat& at(std::size_t x, std::size_t y) const;
    void set(std::size_t x, std::size_t y, Nat value);
    const std::vector<std::vector<Nat>>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Nat>> entries_;
};

enum class CertForm { Max, Product };

// Witness that f is separably dominated: two one-variable integer
// functions with f(x,y) <= max(G(x),H(y)) or f(x,y) <= G(x)*H(y).
struct SepDomCert {
    CertForm form = CertForm::Max;
    std::vector<Nat> G; // length rows
    std::vector<Nat> H; // length cols
};

// The constructive proof of P(omega,omega): g(n) = max of all entries in
// the leading (n+1)x(n+1) square, G = H = g. Rectangular tables are padded
// with zeros to square first; g is non-decreasing by construction.
SepDomCert solve_sepdom_table(const FuncTable& f);

struct SepDomCheck {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> violation;
};

// Exhaustive verification of the certificate inequality on every entry.
SepDomCheck check_sepdom(const FuncTable& f, const SepDomCert& cert);

// max(a,b) <= (a+1)(b+1): a MAX certificate becomes a PRODUCT one.
SepDomCert max_to_product(const SepDomCert& cert);

// g(x)h(y) <= max(ceil(g(x)^2), ceil(h(y)^2)): rational product bounds
// become a MAX certificate.
SepDomCert product_to_max(const std::vector<Rat>& g, const std::vector<Rat>& h);

struct EquivConstant {
    Rat c;             // least c with Na <= c*Nb on V_J
    FinVector witness; // vertex of the Nb-unit box with Na(witness) = c*Nb(witness)
};

// Least equivalence constant between two norms on the slice V_J. The
// closed form max_k wa(k)/wb(k) is cross-checked against brute-force
// maximization over the 2^|J| vertices of the Nb-unit box whenever
// |J| <= 12.
EquivConstant equivalence_constant_detail(const NormExpr& na, const NormExpr& nb, const IndexSet& J);
Rat equivalence_constant(const NormExpr& na, const NormExpr& nb, const IndexSet& J);

// A dominating norm plus per-member constants: member_i <= constants[i] * dominating,
// verified exactly on every vector in checked_on.
struct DomCert {
    NormExpr dominating;
    std::vector<Rat> constants;
    std::vector<FinVector> checked_on;
};

// Builds the norm x -> max_i members[i](x)/g[i] and certifies that it
// dominates every member with constant g[i]. If g is omitted all constants
// are 1. Basis vectors over the members' explicit indices are always
// included in the checked set.
DomCert dominate_family(const std::vector<NormExpr>& members,
                        const std::optional<std::vector<Rat>>& g,
                        const std::vector<FinVector>& samples);

// Finite table f(i,k) plus implicit zeros outside: the data behind the
// family N_i(x) = max_k (f(i,k)+1)|x_k|.
struct WeightSchema {
    FuncTable table; // rows = index range I, cols = coordinate range
};

// N_i = Diagonal with weight f(i,k)+1 (default 1 beyond the table).
std::vector<NormExpr> schema_norms(const WeightSchema& schema);

// Full record of the truncated converse construction: the equivalence
// constants c(i,J), their ceiled table with its MAX certificate, the
// product split c(i,J) <= f(i)*g(J), and the resulting dominating norm.
struct SchemaDomination {
    std::vector<NormExpr> members;   // N_i
    std::vector<IndexSet> slices;    // enumerated J's, in input order
    FuncTable constant_table;        // ceil(c(i,J))
    SepDomCert table_cert;           // MAX certificate for constant_table
    std::vector<Nat> index_factor;   // f(i)
    std::vector<Nat> slice_factor;   // g(J)
    Rat slice_factor_max;            // max over enumerated slices
    DomCert cert;                    // dominating SupFamily, constants f(i)*max g(J)
};

// The converse direction of the norms-vs-P correspondence, truncated to a
// finite slice enumeration. Every sample's support must lie inside one of
// the enumerated slices. Verifies, exactly, both the defining inequality
// of the certificate and the chain N_i(v) <= f(i) g(J) reference(v).
SchemaDomination dominate_schema(const WeightSchema& schema, const NormExpr& reference,
                                 const std::vector<IndexSet>& slices,
                                 const std::vector<FinVector>& samples);

} // namespace normtop

#endif
