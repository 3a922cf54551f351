#include "normtop/cli.hpp"

#include "normtop/errors.hpp"
#include "normtop/json_io.hpp"
#include "normtop/sampling.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace normtop {

namespace {

using io::json;

struct Options {
    std::string input_path;
    std::string output_path; // empty: stdout
    std::size_t depth = 0;
    bool depth_set = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t denominator_bound = 64;
    bool summary = false;
};

json load_input(const Options& opt) {
    if (opt.input_path.empty())
        throw InvalidArgument("--input is required for this command");
    std::ifstream in(opt.input_path);
    if (!in)
        throw InvalidArgument("cannot open input file '" + opt.input_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("input is not valid JSON: ") + e.what());
    }
    return j;
}

void write_output(const Options& opt, const json& payload) {
    const std::string text = payload.dump(2) + "\n";
    if (opt.output_path.empty()) {
        std::cout << text;
        return;
    }
    const std::string tmp = opt.output_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw InvalidArgument("cannot open output file '" + tmp + "'");
        out << text;
    }
    std::filesystem::rename(tmp, opt.output_path);
}

std::vector<FinVector> vectors_field(const json& j, const char* key) {
    std::vector<FinVector> out;
    if (j.contains(key))
        for (const json& e : j.at(key))
            out.push_back(io::vector_from_json(e));
    return out;
}

// Seeded extras on top of the explicit sample list, supported in `slice`.
void add_seeded(std::vector<FinVector>& samples, const Options& opt, const IndexSet& slice) {
    if (opt.samples == 0 || slice.empty())
        return;
    SampleGen gen(opt.seed);
    for (std::size_t i = 0; i < opt.samples; ++i)
        samples.push_back(gen.next_vector(slice, std::max<std::size_t>(1, slice.size() / 2 + 1),
                                          opt.denominator_bound, opt.denominator_bound));
}

struct CommandResult {
    json payload;
    std::string summary;
};

CommandResult cmd_sepdom_solve(const json& in) {
    const FuncTable table = io::table_from_json(in);
    const SepDomCert cert = solve_sepdom_table(table);
    return {{{"cert", io::to_json(cert)}},
            "solved " + std::to_string(table.rows()) + "x" + std::to_string(table.cols()) +
                " table; g(n-1) = " + (cert.G.empty() ? std::string("-") : cert.G.back().str())};
}

CommandResult cmd_sepdom_check(const json& in) {
    const FuncTable table = io::table_from_json(in.at("table"));
    const SepDomCert cert = io::sepdom_cert_from_json(in.at("cert"));
    const SepDomCheck check = check_sepdom(table, cert);
    json payload{{"valid", check.ok}};
    payload["violation"] = check.violation
                               ? json::array({check.violation->first, check.violation->second})
                               : json();
    return {std::move(payload), check.ok ? "certificate valid on every entry" : "violation found"};
}

CommandResult cmd_sepdom_convert(const json& in) {
    const std::string direction = in.at("direction").get<std::string>();
    if (direction == "max-to-product") {
        const SepDomCert cert = max_to_product(io::sepdom_cert_from_json(in.at("cert")));
        return {{{"cert", io::to_json(cert)}}, "converted to product form"};
    }
    if (direction == "product-to-max") {
        std::vector<Rat> g, h;
        for (const json& e : in.at("g"))
            g.push_back(io::rat_from_json(e));
        for (const json& e : in.at("h"))
            h.push_back(io::rat_from_json(e));
        const SepDomCert cert = product_to_max(g, h);
        return {{{"cert", io::to_json(cert)}}, "converted to max form"};
    }
    throw InvalidArgument("direction must be 'max-to-product' or 'product-to-max'");
}

CommandResult cmd_norm_eval(const json& in) {
    const NormExpr norm = io::norm_from_json(in.at("norm"));
    const FinVector v = io::vector_from_json(in.at("vector"));
    const Rat value = eval_norm(norm, v);
    return {{{"value", rat_string(value)}}, "norm value " + rat_string(value)};
}

CommandResult cmd_norm_axioms(const json& in, const Options& opt) {
    const NormExpr norm = io::norm_from_json(in.at("norm"));
    std::vector<FinVector> samples = vectors_field(in, "samples");
    add_seeded(samples, opt, explicit_indices(norm));
    for (const Index k : explicit_indices(norm))
        samples.push_back(FinVector::unit(k));
    const AxiomReport report = check_norm_axioms(norm, samples);
    return {{{"passed", report.passed}, {"first_violation", report.first_violation}},
            report.passed ? "norm axioms hold on all " + std::to_string(samples.size()) + " samples"
                          : report.first_violation};
}

CommandResult cmd_equiv_constant(const json& in) {
    const NormExpr na = io::norm_from_json(in.at("na"));
    const NormExpr nb = io::norm_from_json(in.at("nb"));
    const IndexSet J = io::index_set_from_json(in.at("J"));
    const EquivConstant result = equivalence_constant_detail(na, nb, J);
    return {{{"c", rat_string(result.c)}, {"witness", io::to_json(result.witness)}},
            "equivalence constant " + rat_string(result.c)};
}

CommandResult cmd_dominate(const json& in, const Options& opt) {
    std::vector<NormExpr> members;
    for (const json& e : in.at("members"))
        members.push_back(io::norm_from_json(e));
    std::optional<std::vector<Rat>> g;
    if (in.contains("g")) {
        g.emplace();
        for (const json& e : in.at("g"))
            g->push_back(io::rat_from_json(e));
    }
    std::vector<FinVector> samples = vectors_field(in, "samples");
    IndexSet slice;
    for (const NormExpr& m : members)
        slice = slice.unite(explicit_indices(m));
    add_seeded(samples, opt, slice);
    const DomCert cert = dominate_family(members, g, samples);
    return {{{"cert", io::to_json(cert)}},
            "dominating norm built over " + std::to_string(members.size()) + " members, checked on " +
                std::to_string(cert.checked_on.size()) + " vectors"};
}

CommandResult cmd_schema_build(const json& in) {
    const WeightSchema schema{io::table_from_json(in.at("schema"))};
    json norms = json::array();
    for (const NormExpr& n : schema_norms(schema))
        norms.push_back(io::to_json(n));
    return {{{"norms", std::move(norms)}},
            "built " + std::to_string(schema.table.rows()) + " schema norms"};
}

CommandResult cmd_schema_dominate(const json& in, const Options& opt) {
    const WeightSchema schema{io::table_from_json(in.at("schema"))};
    const NormExpr reference =
        in.contains("reference") ? io::norm_from_json(in.at("reference")) : NormExpr::uniform();
    std::vector<IndexSet> slices;
    for (const json& e : in.at("slices"))
        slices.push_back(io::index_set_from_json(e));
    std::vector<FinVector> samples = vectors_field(in, "samples");
    if (opt.samples > 0 && !slices.empty()) {
        SampleGen gen(opt.seed);
        for (std::size_t i = 0; i < opt.samples; ++i) {
            const IndexSet& J = slices[gen.next_below(slices.size())];
            if (!J.empty())
                samples.push_back(gen.next_vector(J, J.size(), opt.denominator_bound,
                                                  opt.denominator_bound));
        }
    }
    const SchemaDomination result = dominate_schema(schema, reference, slices, samples);
    json slices_json = json::array();
    for (const IndexSet& J : result.slices)
        slices_json.push_back(io::to_json(J));
    json fi = json::array(), gj = json::array();
    for (const Nat& v : result.index_factor)
        fi.push_back(io::to_json(v));
    for (const Nat& v : result.slice_factor)
        gj.push_back(io::to_json(v));
    return {{{"constant_table", io::to_json(result.constant_table)},
             {"table_cert", io::to_json(result.table_cert)},
             {"index_factor", std::move(fi)},
             {"slice_factor", std::move(gj)},
             {"slice_factor_max", rat_string(result.slice_factor_max)},
             {"slices", std::move(slices_json)},
             {"cert", io::to_json(result.cert)}},
            "schema domination certificate over " + std::to_string(result.members.size()) +
                " norms and " + std::to_string(result.slices.size()) + " slices"};
}

CommandResult cmd_extend_step(const json& in) {
    const NormExpr base = io::norm_from_json(in.at("base"));
    const BallCover cover = io::cover_from_json(in.at("cover"));
    const Index j = in.at("new_index").get<Index>();
    const ExtensionStep step = extend_norm_step(base, cover, j);
    return {{{"cert", io::to_json(step.cert)}, {"norm", io::to_json(step.norm)}},
            "extended across e_" + std::to_string(j) + " with epsilon " + rat_string(step.cert.epsilon)};
}

CommandResult cmd_extend_flag(const json& in, const Options& opt) {
    const NormExpr base = io::norm_from_json(in.at("base"));
    const BallCover cover = io::cover_from_json(in.at("cover"));
    const std::size_t depth = opt.depth_set ? opt.depth : cover.flag().depth();
    const ExtensionChain chain = extend_norm_flag(base, cover, depth);
    json steps = json::array();
    for (const EpsilonCert& c : chain.steps)
        steps.push_back(io::to_json(c));
    return {{{"norm", io::to_json(chain.norm)}, {"steps", std::move(steps)}},
            "extension chain of depth " + std::to_string(depth)};
}

CommandResult cmd_counterexample(const json& in) {
    std::vector<NormExpr> norms;
    for (const json& e : in.at("norms"))
        norms.push_back(io::norm_from_json(e));
    const Rat radius = in.contains("radius") ? io::rat_from_json(in.at("radius")) : make_rat(1, 3);
    const BallCover cover = counterexample_balls(norms, radius);
    return {{{"cover", io::to_json(cover)}},
            "counterexample cover with " + std::to_string(cover.ball_count()) + " balls of radius " +
                rat_string(radius)};
}

CommandResult cmd_disjoint_cert(const json& in) {
    const BallCover cover = io::cover_from_json(in.at("cover"));
    const DisjointnessCert cert =
        disjointness_certificate(cover, in.at("k").get<Index>(), in.at("l").get<Index>());
    return {{{"cert", io::to_json(cert)}},
            cert.holds() ? "balls " + std::to_string(cert.k) + " and " + std::to_string(cert.l) +
                               " are disjoint: " + rat_string(cert.base_separation) + " > " +
                               rat_string(cert.radius_sum)
                         : "certificate does not hold"};
}

CommandResult cmd_absorb(const json& in, const Options& opt) {
    const BallCover cover = io::cover_from_json(in.at("cover"));
    const NormExpr candidate = io::norm_from_json(in.at("candidate"));
    const Index k = in.at("k").get<Index>();
    const Rat r = io::rat_from_json(in.at("r"));
    std::vector<FinVector> directions = vectors_field(in, "directions");
    add_seeded(directions, opt, cover.flag().slice(cover.flag().depth()));
    const AbsorptionResult result = absorption_domination(candidate, k, r, cover, directions);
    if (const auto* dom = std::get_if<AbsorptionDomination>(&result)) {
        json dirs = json::array();
        for (const FinVector& u : dom->directions)
            dirs.push_back(io::to_json(u));
        return {{{"outcome", "domination"},
                 {"constant", rat_string(dom->constant)},
                 {"directions", std::move(dirs)}},
                "ball absorbed: domination constant " + rat_string(dom->constant) + " over " +
                    std::to_string(dom->directions.size()) + " directions"};
    }
    const auto& w = std::get<AbsorptionWitness>(result);
    return {{{"outcome", "witness"},
             {"direction", io::to_json(w.direction)},
             {"t", rat_string(w.t)},
             {"point", io::to_json(w.point)},
             {"candidate_value", rat_string(w.candidate_value)},
             {"ball_value", rat_string(w.ball_value)}},
            "candidate ball is not inside O: witness with ball norm value " + rat_string(w.ball_value)};
}

CommandResult cmd_build_opening(const json& in, const Options& opt) {
    const BallCover cover = io::cover_from_json(in.at("cover"));
    const std::size_t depth = opt.depth_set ? opt.depth : cover.flag().depth();
    const std::vector<FinVector> samples = vectors_field(in, "samples");
    const OpeningResult result = build_opening_norm(cover, depth, samples);
    json chains = json::array();
    for (std::size_t i = 0; i < result.chain_norms.size(); ++i)
        chains.push_back({{"norm", io::to_json(result.chain_norms[i])},
                          {"constant", rat_string(result.chain_constants[i])}});
    json certs = json::array();
    for (const OpeningCertEntry& c : result.certificates)
        certs.push_back({{"sample", io::to_json(c.sample)}, {"rho", rat_string(c.rho)}});
    return {{{"norm", io::to_json(result.norm)},
             {"chains", std::move(chains)},
             {"certificates", std::move(certs)}},
            "opening norm from " + std::to_string(result.chain_norms.size()) + " chains; " +
                std::to_string(result.certificates.size()) + " sample certificates"};
}

CommandResult cmd_ord_cmp(const json& in) {
    const Ordering o = ord_cmp(io::ordinal_from_json(in.at("a")), io::ordinal_from_json(in.at("b")));
    const std::string name =
        o == Ordering::Less ? "less" : (o == Ordering::Equal ? "equal" : "greater");
    return {{{"order", name}}, "a is " + name + (o == Ordering::Equal ? " to b" : " than b")};
}

CommandResult cmd_ord_inject(const json& in) {
    const Nat value = f_alpha(io::ordinal_from_json(in.at("alpha")), io::ordinal_from_json(in.at("beta")));
    return {{{"value", io::to_json(value)}}, "f_alpha(beta) = " + value.str()};
}

CommandResult cmd_ord_F(const json& in) {
    const Nat value = big_F(io::ordinal_from_json(in.at("alpha")), io::ordinal_from_json(in.at("beta")));
    return {{{"value", io::to_json(value)}}, "F(alpha, beta) = " + value.str()};
}

CommandResult cmd_ord_demo(const json& in) {
    std::vector<CnfOrdinal> ordinals;
    for (const json& e : in.at("ordinals"))
        ordinals.push_back(io::ordinal_from_json(e));
    const CountableDemo demo = demo_countable_domination(ordinals);
    return {{{"table", io::to_json(demo.table)}, {"cert", io::to_json(demo.cert)}},
            "finite restriction of F dominated; grid " + std::to_string(ordinals.size()) + "x" +
                std::to_string(ordinals.size())};
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"normtop: exact certificates for norm domination and finite-topology constructions"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    using Handler = std::function<CommandResult(const json&, const Options&)>;
    std::map<std::string, Handler> handlers = {
        {"sepdom-solve", [](const json& in, const Options&) { return cmd_sepdom_solve(in); }},
        {"sepdom-check", [](const json& in, const Options&) { return cmd_sepdom_check(in); }},
        {"sepdom-convert", [](const json& in, const Options&) { return cmd_sepdom_convert(in); }},
        {"norm-eval", [](const json& in, const Options&) { return cmd_norm_eval(in); }},
        {"norm-axioms", cmd_norm_axioms},
        {"equiv-constant", [](const json& in, const Options&) { return cmd_equiv_constant(in); }},
        {"dominate", cmd_dominate},
        {"schema-build", [](const json& in, const Options&) { return cmd_schema_build(in); }},
        {"schema-dominate", cmd_schema_dominate},
        {"extend-step", [](const json& in, const Options&) { return cmd_extend_step(in); }},
        {"extend-flag", cmd_extend_flag},
        {"counterexample", [](const json& in, const Options&) { return cmd_counterexample(in); }},
        {"disjoint-cert", [](const json& in, const Options&) { return cmd_disjoint_cert(in); }},
        {"absorb", cmd_absorb},
        {"build-opening", cmd_build_opening},
        {"ord-cmp", [](const json& in, const Options&) { return cmd_ord_cmp(in); }},
        {"ord-inject", [](const json& in, const Options&) { return cmd_ord_inject(in); }},
        {"ord-F", [](const json& in, const Options&) { return cmd_ord_F(in); }},
        {"ord-demo", [](const json& in, const Options&) { return cmd_ord_demo(in); }},
    };

    static const std::map<std::string, std::string> descriptions = {
        {"sepdom-solve", "solve a function table for a MAX separable-domination certificate"},
        {"sepdom-check", "exhaustively re-validate a certificate against its table"},
        {"sepdom-convert", "convert between MAX and PRODUCT certificate forms"},
        {"norm-eval", "evaluate a norm expression at a vector, exactly"},
        {"norm-axioms", "check the norm axioms on a sample set"},
        {"equiv-constant", "least equivalence constant between two norms on a slice"},
        {"dominate", "build a dominating norm for a finite family"},
        {"schema-build", "the weighted supremum norms of a weight schema"},
        {"schema-dominate", "truncated converse construction for a schema family"},
        {"extend-step", "extend a norm across one new basis vector, inside a cover"},
        {"extend-flag", "iterate extension steps along the cover's flag"},
        {"counterexample", "build the pairwise-disjoint ball family at the basis vectors"},
        {"disjoint-cert", "exact disjointness certificate for two counterexample balls"},
        {"absorb", "segment test: is the candidate ball inside the cover, and what follows"},
        {"build-opening", "build a norm opening the covered set, with per-sample certificates"},
        {"ord-cmp", "compare two ordinals in Cantor normal form"},
        {"ord-inject", "the chosen injection f_alpha at beta"},
        {"ord-F", "the two-variable function F(alpha, beta)"},
        {"ord-demo", "solve F restricted to a finite ordinal list"},
    };

    for (const auto& [name, handler] : handlers) {
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--input", opt.input_path, "input JSON path");
        sub->add_option("--output", opt.output_path, "output JSON path (default: stdout)");
        sub->add_option("--depth", opt.depth, "flag depth for extension commands")
            ->each([&opt](const std::string&) { opt.depth_set = true; });
        sub->add_option("--samples", opt.samples, "number of seeded sample vectors to add");
        sub->add_option("--seed", opt.seed, "seed for sample generation");
        sub->add_option("--denominator-bound", opt.denominator_bound,
                        "denominator bound for seeded rationals");
        sub->add_flag("--summary", opt.summary, "print a human-readable digest");
        sub->callback([&command, name = name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const json input = load_input(opt);
        CommandResult result = handlers.at(command)(input, opt);
        result.payload["ok"] = true;
        write_output(opt, result.payload);
        if (opt.summary)
            std::cout << result.summary << "\n";
        return 0;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // checked preconditions and domain violations produce diagnostics
        json payload{{"ok", false}, {"error", e.what()}};
        try {
            write_output(opt, payload);
        } catch (...) {
            std::cerr << payload.dump(2) << "\n";
        }
        if (opt.summary)
            std::cout << "failed: " << e.what() << "\n";
        return 1;
    }
}

} // namespace normtop
