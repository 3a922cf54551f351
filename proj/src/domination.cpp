#include "normtop/domination.hpp"

#include "normtop/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace normtop {

FuncTable::FuncTable(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows, std::vector<Nat>(cols, Nat(0))) {}

FuncTable::FuncTable(std::vector<std::vector<Nat>> entries) : entries_(std::move(entries)) {
    rows_ = entries_.size();
    cols_ = rows_ == 0 ? 0 : entries_.front().size();
    for (const auto& row : entries_) {
        if (row.size() != cols_)
            throw InvalidArgument("table rows have unequal lengths");
        for (const Nat& v : row)
            if (v < 0)
                throw InvalidArgument("table entries must be non-negative");
    }
}

const Nat& FuncTable::at(std::size_t x, std::size_t y) const {
    if (x >= rows_ || y >= cols_)
        throw InvalidArgument("table index out of range");
    return entries_[x][y];
}

void FuncTable::set(std::size_t x, std::size_t y, Nat value) {
    if (x >= rows_ || y >= cols_)
        throw InvalidArgument("table index out of range");
    if (value < 0)
        throw InvalidArgument("table entries must be non-negative");
    entries_[x][y] = std::move(value);
}

SepDomCert solve_sepdom_table(const FuncTable& f) {
    const std::size_t n = std::max(f.rows(), f.cols());
    std::vector<Nat> g(n, Nat(0));
    for (std::size_t m = 0; m < n; ++m) {
        Nat best = m == 0 ? Nat(0) : g[m - 1];
        // new entries of the (m+1)x(m+1) leading square; zero padding
        // outside the rectangle contributes nothing
        if (m < f.rows())
            for (std::size_t y = 0; y <= m && y < f.cols(); ++y)
                best = std::max(best, f.at(m, y));
        if (m < f.cols())
            for (std::size_t x = 0; x <= m && x < f.rows(); ++x)
                best = std::max(best, f.at(x, m));
        g[m] = std::move(best);
    }
    SepDomCert cert;
    cert.form = CertForm::Max;
    cert.G.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(f.rows()));
    cert.H.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(f.cols()));
    return cert;
}

SepDomCheck check_sepdom(const FuncTable& f, const SepDomCert& cert) {
    if (cert.G.size() != f.rows() || cert.H.size() != f.cols())
        throw InvalidArgument("certificate dimensions do not match the table");
    for (std::size_t x = 0; x < f.rows(); ++x)
        for (std::size_t y = 0; y < f.cols(); ++y) {
            const Nat& v = f.at(x, y);
            const bool ok = cert.form == CertForm::Max ? v <= std::max(cert.G[x], cert.H[y])
                                                       : v <= cert.G[x] * cert.H[y];
            if (!ok)
                return {false, std::make_pair(x, y)};
        }
    return {};
}

SepDomCert max_to_product(const SepDomCert& cert) {
    if (cert.form != CertForm::Max)
        throw InvalidArgument("max_to_product expects a MAX certificate");
    SepDomCert out;
    out.form = CertForm::Product;
    out.G.reserve(cert.G.size());
    out.H.reserve(cert.H.size());
    for (const Nat& v : cert.G)
        out.G.push_back(v + 1);
    for (const Nat& v : cert.H)
        out.H.push_back(v + 1);
    return out;
}

SepDomCert product_to_max(const std::vector<Rat>& g, const std::vector<Rat>& h) {
    SepDomCert out;
    out.form = CertForm::Max;
    const auto convert = [](const std::vector<Rat>& src, std::vector<Nat>& dst) {
        dst.reserve(src.size());
        for (const Rat& v : src) {
            if (v < 0)
                throw InvalidArgument("product bounds must be non-negative");
            dst.push_back(rat_ceil(Rat(v * v)));
        }
    };
    convert(g, out.G);
    convert(h, out.H);
    return out;
}

EquivConstant equivalence_constant_detail(const NormExpr& na, const NormExpr& nb, const IndexSet& J) {
    const WeightProfile pa = weight_profile(na);
    const WeightProfile pb = weight_profile(nb);
    if (!pa.defined_on(J) || !pb.defined_on(J))
        throw DomainViolation("equivalence constant needs both norms defined on the whole slice");

    Rat c(0);
    for (const Index k : J)
        c = rat_max(c, Rat(pa.at(k) / pb.at(k)));

    // the all-plus vertex of the Nb-unit box attains the ratio
    const Box unit = ball_box(nb, J, Rat(1), FinVector());
    std::map<Index, Rat> coords;
    std::size_t pos = 0;
    for (const Index k : J) {
        coords.emplace(k, unit.bounds_at(pos).second);
        ++pos;
    }
    FinVector witness(std::move(coords));

    if (!J.empty()) {
        if (eval_norm(na, witness) != c * eval_norm(nb, witness))
            throw Error("internal: equivalence witness is not tight");
    }

    // brute-force oracle over all vertices at desk scale
    if (J.size() <= 12) {
        Rat oracle(0);
        for (const FinVector& vertex : unit.vertices()) {
            const Rat vb = eval_norm(nb, vertex);
            if (vb == 0)
                continue;
            oracle = rat_max(oracle, Rat(eval_norm(na, vertex) / vb));
        }
        if (oracle != c)
            throw Error("internal: closed-form equivalence constant " + rat_string(c) +
                        " disagrees with the vertex oracle " + rat_string(oracle));
    }
    return {std::move(c), std::move(witness)};
}

Rat equivalence_constant(const NormExpr& na, const NormExpr& nb, const IndexSet& J) {
    return equivalence_constant_detail(na, nb, J).c;
}

DomCert dominate_family(const std::vector<NormExpr>& members,
                        const std::optional<std::vector<Rat>>& g,
                        const std::vector<FinVector>& samples) {
    if (members.empty())
        throw InvalidArgument("cannot dominate an empty family");
    std::vector<Rat> constants = g.value_or(std::vector<Rat>(members.size(), Rat(1)));
    if (constants.size() != members.size())
        throw InvalidArgument("need one constant per member");
    for (const Rat& c : constants)
        if (c <= 0)
            throw InvalidArgument("domination constants must be positive");

    std::vector<NormExpr::FamilyMember> fam;
    fam.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        fam.push_back(NormExpr::FamilyMember{members[i], constants[i]});
    NormExpr dominating = NormExpr::sup_family(std::move(fam));

    std::vector<FinVector> checked = samples;
    IndexSet mentioned;
    for (const NormExpr& m : members)
        mentioned = mentioned.unite(explicit_indices(m));
    for (const Index k : mentioned)
        checked.push_back(FinVector::unit(k));

    for (const FinVector& v : checked) {
        const Rat dom = eval_norm(dominating, v);
        for (std::size_t i = 0; i < members.size(); ++i)
            if (eval_norm(members[i], v) > constants[i] * dom)
                throw Error("internal: sup-family certificate violated");
    }
    return {std::move(dominating), std::move(constants), std::move(checked)};
}

std::vector<NormExpr> schema_norms(const WeightSchema& schema) {
    std::vector<NormExpr> out;
    out.reserve(schema.table.rows());
    for (std::size_t i = 0; i < schema.table.rows(); ++i) {
        std::map<Index, Rat> weights;
        for (std::size_t k = 0; k < schema.table.cols(); ++k)
            weights.emplace(static_cast<Index>(k), Rat(schema.table.at(i, k) + 1));
        out.push_back(NormExpr::diagonal(WeightFunction(std::move(weights), Rat(1))));
    }
    return out;
}

SchemaDomination dominate_schema(const WeightSchema& schema, const NormExpr& reference,
                                 const std::vector<IndexSet>& slices,
                                 const std::vector<FinVector>& samples) {
    if (slices.empty())
        throw InvalidArgument("slice enumeration must be nonempty");
    SchemaDomination out;
    out.members = schema_norms(schema);
    out.slices = slices;
    if (out.members.empty())
        throw InvalidArgument("schema has no index range");

    out.constant_table = FuncTable(out.members.size(), slices.size());
    for (std::size_t i = 0; i < out.members.size(); ++i)
        for (std::size_t j = 0; j < slices.size(); ++j) {
            const Rat c = equivalence_constant(out.members[i], reference, slices[j]);
            out.constant_table.set(i, j, rat_ceil(c));
        }

    out.table_cert = solve_sepdom_table(out.constant_table);
    const SepDomCheck check = check_sepdom(out.constant_table, out.table_cert);
    if (!check.ok)
        throw Error("internal: table certificate failed its own exhaustive check");

    const SepDomCert product = max_to_product(out.table_cert);
    out.index_factor = product.G;
    out.slice_factor = product.H;
    out.slice_factor_max = 0;
    for (const Nat& v : out.slice_factor)
        out.slice_factor_max = rat_max(out.slice_factor_max, Rat(v));

    std::vector<Rat> constants;
    constants.reserve(out.members.size());
    for (const Nat& fi : out.index_factor)
        constants.push_back(Rat(fi) * out.slice_factor_max);

    // basis vectors of the schema's coordinate range are always checked
    std::vector<FinVector> checked = samples;
    for (std::size_t k = 0; k < schema.table.cols(); ++k)
        checked.push_back(FinVector::unit(static_cast<Index>(k)));

    for (const FinVector& v : checked) {
        const IndexSet sup = support(v);
        std::size_t slice_pos = slices.size();
        for (std::size_t j = 0; j < slices.size(); ++j)
            if (sup.subset_of(slices[j])) {
                slice_pos = j;
                break;
            }
        if (slice_pos == slices.size())
            throw PreconditionFailure("sample support is not inside any enumerated slice");
        const Rat ref = eval_norm(reference, v);
        for (std::size_t i = 0; i < out.members.size(); ++i) {
            // the paper's chain: N_i(v) <= c(i,J) ref(v) <= f(i) g(J) ref(v)
            const Rat bound = Rat(out.index_factor[i]) * Rat(out.slice_factor[slice_pos]) * ref;
            if (eval_norm(out.members[i], v) > bound)
                throw Error("internal: schema domination chain violated");
        }
    }

    out.cert = dominate_family(out.members, constants, checked);
    return out;
}

} // namespace normtop
