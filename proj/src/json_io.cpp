#include "normtop/json_io.hpp"

#include "normtop/errors.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <variant>

namespace normtop::io {

namespace {

const json& expect(const json& j, const char* key) {
    const auto it = j.find(key);
    if (!j.is_object() || it == j.end())
        throw InvalidArgument(std::string("missing field '") + key + "'");
    return *it;
}

Index index_from_json(const json& j) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() > std::numeric_limits<Index>::max())
        throw InvalidArgument("basis index must be a small non-negative integer");
    return j.get<Index>();
}

Index index_from_key(const std::string& key) {
    if (key.empty())
        throw InvalidArgument("empty index key");
    std::uint64_t value = 0;
    for (const char c : key) {
        if (c < '0' || c > '9')
            throw InvalidArgument("index key must be a decimal string, got '" + key + "'");
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > std::numeric_limits<Index>::max())
            throw InvalidArgument("index key out of range: '" + key + "'");
    }
    return static_cast<Index>(value);
}

} // namespace

json to_json(const Rat& x) {
    return rat_string(x);
}

json to_json(const Nat& n) {
    if (n >= 0 && n <= Nat(std::numeric_limits<std::uint64_t>::max()))
        return n.convert_to<std::uint64_t>();
    return n.str();
}

json to_json(const IndexSet& s) {
    json out = json::array();
    for (const Index k : s)
        out.push_back(k);
    return out;
}

json to_json(const FinVector& v) {
    json out = json::object();
    for (const auto& [k, x] : v.coords())
        out[std::to_string(k)] = rat_string(x);
    return out;
}

json to_json(const Flag& f) {
    json added = json::array();
    for (const Index k : f.added())
        added.push_back(k);
    return {{"base", to_json(f.base())}, {"added", std::move(added)}};
}

json to_json(const NormExpr& n) {
    struct Visitor {
        json operator()(const NormExpr::Diagonal& d) const {
            json weights = json::object();
            for (const auto& [k, w] : d.weights.entries())
                weights[std::to_string(k)] = rat_string(w);
            return {{"type", "diagonal"},
                    {"weights", std::move(weights)},
                    {"default", rat_string(d.weights.default_weight())}};
        }
        json operator()(const NormExpr::Scale& s) const {
            return {{"type", "scale"}, {"c", rat_string(s.factor)}, {"inner", to_json(s.inner)}};
        }
        json operator()(const NormExpr::MaxOf& m) const {
            json members = json::array();
            for (const NormExpr& e : m.members)
                members.push_back(to_json(e));
            return {{"type", "max"}, {"members", std::move(members)}};
        }
        json operator()(const NormExpr::Extension& e) const {
            json eps = json::array();
            for (const Rat& x : e.epsilons)
                eps.push_back(rat_string(x));
            return {{"type", "extension"},
                    {"base", to_json(e.base)},
                    {"flag", to_json(e.flag)},
                    {"epsilons", std::move(eps)}};
        }
        json operator()(const NormExpr::SupFamily& f) const {
            json members = json::array();
            for (const auto& m : f.members)
                members.push_back({{"norm", to_json(m.norm)}, {"g", rat_string(m.divisor)}});
            return {{"type", "supfamily"}, {"members", std::move(members)}};
        }
    };
    return std::visit(Visitor{}, n.node());
}

json to_json(const FuncTable& t) {
    json rows = json::array();
    for (const auto& row : t.entries()) {
        json r = json::array();
        for (const Nat& v : row)
            r.push_back(to_json(v));
        rows.push_back(std::move(r));
    }
    return {{"rows", t.rows()}, {"cols", t.cols()}, {"entries", std::move(rows)}};
}

json to_json(const SepDomCert& c) {
    json g = json::array(), h = json::array();
    for (const Nat& v : c.G)
        g.push_back(to_json(v));
    for (const Nat& v : c.H)
        h.push_back(to_json(v));
    return {{"form", c.form == CertForm::Max ? "max" : "product"},
            {"G", std::move(g)},
            {"H", std::move(h)}};
}

json to_json(const DomCert& c) {
    json constants = json::object();
    for (std::size_t i = 0; i < c.constants.size(); ++i)
        constants[std::to_string(i)] = rat_string(c.constants[i]);
    json checked = json::array();
    for (const FinVector& v : c.checked_on)
        checked.push_back(to_json(v));
    return {{"dominating", to_json(c.dominating)},
            {"constants", std::move(constants)},
            {"checked_on", std::move(checked)}};
}

json to_json(const BallSpec& b) {
    return {{"center", to_json(b.center)},
            {"radius", rat_string(b.radius)},
            {"norm", to_json(b.norm)},
            {"open", b.open}};
}

json to_json(const BallCover& c) {
    json levels = json::object();
    for (const auto& [level, balls] : c.levels()) {
        json list = json::array();
        for (const BallSpec& b : balls)
            list.push_back(to_json(b));
        levels[std::to_string(level)] = std::move(list);
    }
    return {{"flag", to_json(c.flag())}, {"levels", std::move(levels)}};
}

json to_json(const CnfOrdinal& o) {
    json out = json::array();
    for (const CnfTerm& t : o.terms())
        out.push_back(json::array({t.exponent, t.coefficient}));
    return out;
}

json to_json(const EpsilonCert& c) {
    return {{"epsilon", rat_string(c.epsilon)},
            {"separation", rat_string(c.separation)},
            {"slice", to_json(c.extended_slice)},
            {"nearest_outside", to_json(c.nearest_outside)}};
}

json to_json(const DisjointnessCert& c) {
    return {{"k", c.k},
            {"l", c.l},
            {"base_separation", rat_string(c.base_separation)},
            {"radius_sum", rat_string(c.radius_sum)},
            {"norms_dominate_base", c.norms_dominate_base},
            {"holds", c.holds()}};
}

Rat rat_from_json(const json& j) {
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    if (j.is_number_unsigned())
        return Rat(Nat(j.get<std::uint64_t>()));
    if (j.is_number_integer())
        return Rat(Nat(j.get<std::int64_t>()));
    throw InvalidArgument("expected a rational as \"p/q\" or an integer");
}

Nat nat_from_json(const json& j) {
    Nat out;
    if (j.is_number_unsigned())
        out = Nat(j.get<std::uint64_t>());
    else if (j.is_number_integer())
        out = Nat(j.get<std::int64_t>());
    else if (j.is_string())
        out = Nat(j.get<std::string>());
    else
        throw InvalidArgument("expected a non-negative integer");
    if (out < 0)
        throw InvalidArgument("expected a non-negative integer, got " + out.str());
    return out;
}

IndexSet index_set_from_json(const json& j) {
    if (!j.is_array())
        throw InvalidArgument("index set must be an array");
    std::vector<Index> ids;
    ids.reserve(j.size());
    for (const json& e : j)
        ids.push_back(index_from_json(e));
    return IndexSet(std::move(ids));
}

FinVector vector_from_json(const json& j) {
    if (!j.is_object())
        throw InvalidArgument("vector must be an object of index -> rational");
    std::map<Index, Rat> coords;
    for (const auto& [key, value] : j.items())
        coords[index_from_key(key)] = rat_from_json(value);
    return FinVector(std::move(coords));
}

Flag flag_from_json(const json& j) {
    const json& added = expect(j, "added");
    if (!added.is_array())
        throw InvalidArgument("flag 'added' must be an array");
    std::vector<Index> ids;
    ids.reserve(added.size());
    for (const json& e : added)
        ids.push_back(index_from_json(e));
    return Flag(index_set_from_json(expect(j, "base")), std::move(ids));
}

NormExpr norm_from_json(const json& j) {
    const std::string type = expect(j, "type").get<std::string>();
    if (type == "diagonal") {
        std::map<Index, Rat> weights;
        for (const auto& [key, value] : expect(j, "weights").items())
            weights[index_from_key(key)] = rat_from_json(value);
        return NormExpr::diagonal(WeightFunction(std::move(weights), rat_from_json(expect(j, "default"))));
    }
    if (type == "scale")
        return NormExpr::scale(rat_from_json(expect(j, "c")), norm_from_json(expect(j, "inner")));
    if (type == "max") {
        std::vector<NormExpr> members;
        for (const json& e : expect(j, "members"))
            members.push_back(norm_from_json(e));
        return NormExpr::max_of(std::move(members));
    }
    if (type == "extension") {
        std::vector<Rat> eps;
        for (const json& e : expect(j, "epsilons"))
            eps.push_back(rat_from_json(e));
        return NormExpr::extension(norm_from_json(expect(j, "base")), flag_from_json(expect(j, "flag")),
                                   std::move(eps));
    }
    if (type == "supfamily") {
        std::vector<NormExpr::SupFamily::Member> members;
        for (const json& e : expect(j, "members"))
            members.push_back({norm_from_json(expect(e, "norm")), rat_from_json(expect(e, "g"))});
        return NormExpr::sup_family(std::move(members));
    }
    throw InvalidArgument("unknown norm type '" + type + "'");
}

FuncTable table_from_json(const json& j) {
    const json& entries = expect(j, "entries");
    if (!entries.is_array())
        throw InvalidArgument("table 'entries' must be an array of rows");
    std::vector<std::vector<Nat>> rows;
    rows.reserve(entries.size());
    for (const json& row : entries) {
        if (!row.is_array())
            throw InvalidArgument("table row must be an array");
        std::vector<Nat> r;
        r.reserve(row.size());
        for (const json& e : row)
            r.push_back(nat_from_json(e));
        rows.push_back(std::move(r));
    }
    FuncTable table(std::move(rows));
    if (expect(j, "rows").get<std::size_t>() != table.rows() ||
        expect(j, "cols").get<std::size_t>() != table.cols())
        throw InvalidArgument("table dimensions do not match the entry grid");
    return table;
}

SepDomCert sepdom_cert_from_json(const json& j) {
    SepDomCert cert;
    const std::string form = expect(j, "form").get<std::string>();
    if (form == "max")
        cert.form = CertForm::Max;
    else if (form == "product")
        cert.form = CertForm::Product;
    else
        throw InvalidArgument("certificate form must be 'max' or 'product'");
    for (const json& e : expect(j, "G"))
        cert.G.push_back(nat_from_json(e));
    for (const json& e : expect(j, "H"))
        cert.H.push_back(nat_from_json(e));
    return cert;
}

BallSpec ball_from_json(const json& j) {
    return BallSpec(vector_from_json(expect(j, "center")), rat_from_json(expect(j, "radius")),
                    norm_from_json(expect(j, "norm")),
                    j.contains("open") ? expect(j, "open").get<bool>() : true);
}

BallCover cover_from_json(const json& j) {
    std::map<std::size_t, std::vector<BallSpec>> levels;
    for (const auto& [key, list] : expect(j, "levels").items()) {
        std::vector<BallSpec> balls;
        for (const json& e : list)
            balls.push_back(ball_from_json(e));
        levels[static_cast<std::size_t>(index_from_key(key))] = std::move(balls);
    }
    return BallCover(flag_from_json(expect(j, "flag")), std::move(levels));
}

CnfOrdinal ordinal_from_json(const json& j) {
    if (!j.is_array())
        throw InvalidArgument("ordinal must be an array of [exponent, coefficient] pairs");
    std::vector<CnfTerm> terms;
    terms.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw InvalidArgument("ordinal term must be an [exponent, coefficient] pair");
        if (!e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw InvalidArgument("ordinal term entries must be non-negative integers");
        terms.push_back({e[0].get<std::uint32_t>(), e[1].get<std::uint64_t>()});
    }
    return CnfOrdinal(std::move(terms));
}

} // namespace normtop::io
