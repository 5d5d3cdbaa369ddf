#include "autocf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "autocf/cfalg.hpp"
#include "autocf/errors.hpp"
#include "autocf/finder.hpp"
#include "autocf/json_io.hpp"
#include "autocf/laurent.hpp"
#include "autocf/riccati.hpp"

namespace autocf::cli {

namespace {

using cfalg::Depth;
using io::json;
using seqcore::EpsSpec;

struct Config {
    std::string command;
    std::string eps;
    std::optional<long long> prec;
    std::size_t len = 0;
    int n = 0;
    int index = 0;
    std::string letter;
    bool predicted = false;
    std::string target;
    int ydeg = 0;
    int coeff_deg = 0;
    int z_deg = 0;
    std::string relation_file;
    std::string write_relation;
    std::size_t count = 16;
    int weight = 1;
    int contract = 1;
    int r = 0;
    std::string pattern;
    std::string a;
    std::string b;
    std::string quotients;
    std::string tail;
    bool json = false;
};

bool is_z_target(const std::string& t) {
    return t == "F" || t == "R" || t == "F0" || t == "Fn" || t == "f";
}

cfalg::InvProvider inv_provider(const EpsSpec& spec, const std::string& target, int index) {
    if (target == "G") {
        return [spec](Depth p) { return cfalg::compute_G(spec, p); };
    }
    if (target == "Gn") {
        return [spec, index](Depth p) { return cfalg::compute_Gn(spec, index, p); };
    }
    if (target == "CF") {
        return [spec](Depth p) { return cfalg::compute_cf(spec, p); };
    }
    if (target == "invCF") {
        return [spec](Depth p) { return cfalg::compute_inv_cf(spec, p); };
    }
    throw std::invalid_argument("unknown series target '" + target + "' (G, Gn, CF, invCF)");
}

cfalg::ZProvider z_provider(const EpsSpec& spec, const std::string& target, int index) {
    if (target == "F") {
        return [spec](std::size_t p) { return zseries::compute_F(spec, p); };
    }
    if (target == "R") {
        return [spec](std::size_t p) { return zseries::compute_R(spec, p); };
    }
    if (target == "F0") {
        return [spec](std::size_t p) { return zseries::compute_F0(spec, p); };
    }
    if (target == "Fn") {
        return [spec, index](std::size_t p) {
            return zseries::compute_Fn(spec, static_cast<std::size_t>(index), p);
        };
    }
    if (target == "f") {
        return [spec](std::size_t p) { return zseries::compute_f(spec.period_length(), p); };
    }
    throw std::invalid_argument("unknown power-series target '" + target + "' (F, R, F0, Fn, f)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write " + path);
    }
    out << text;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        out.push_back(item);
    }
    return out;
}

std::string join_indices(const std::vector<std::uint64_t>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(xs[i]);
    }
    return out + "}";
}

std::string depth_text(Depth d) {
    return d >= invseries::kInfinite ? "inf" : std::to_string(d);
}

class Runner {
public:
    Runner(const Config& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

    int dispatch() {
        const std::string& c = cfg_.command;
        if (c == "seq prefix") return seq_prefix();
        if (c == "seq word") return seq_word();
        if (c == "seq positions") return seq_positions();
        if (c == "seq kernel") return seq_kernel();
        if (c == "cf convergents") return cf_convergents();
        if (c == "cf series") return cf_series();
        if (c == "cf verify") return cf_verify();
        if (c == "cf find-relation") return find_relation(false);
        if (c == "cf min-degree") return min_degree();
        if (c == "cf expand") return cf_expand();
        if (c == "ps series") return ps_series(cfg_.target);
        if (c == "ps f0") return ps_series("F0");
        if (c == "ps verify") return ps_verify();
        if (c == "ps find-relation") return find_relation(true);
        if (c == "ps cartier") return ps_cartier();
        if (c == "riccati check") return riccati_check();
        if (c == "riccati baum-sweet") return baum_sweet();
        throw std::invalid_argument("no command given");
    }

private:
    EpsSpec spec() const { return EpsSpec::parse(cfg_.eps); }

    Depth prec(Depth fallback) const {
        const Depth p = cfg_.prec ? static_cast<Depth>(*cfg_.prec) : fallback;
        if (p < 1) {
            throw std::invalid_argument("--prec must be >= 1");
        }
        return p;
    }

    void emit(const json& j) { out_ << j.dump(2) << "\n"; }

    int seq_prefix() {
        const auto word = seqcore::stream_prefix(spec(), cfg_.len);
        cfg_.json ? emit({{"prefix", seqcore::to_string(word)}}) : void(out_ << seqcore::to_string(word) << "\n");
        return kOk;
    }

    int seq_word() {
        const auto word = seqcore::build_word(spec(), cfg_.n);
        cfg_.json ? emit({{"n", cfg_.n}, {"word", seqcore::to_string(word)}})
                  : void(out_ << seqcore::to_string(word) << "\n");
        return kOk;
    }

    int seq_positions() {
        const EpsSpec s = spec();
        seqcore::PositionSet set;
        if (cfg_.predicted) {
            set = seqcore::positions_predicted(s, static_cast<std::size_t>(cfg_.index), cfg_.len);
        } else {
            if (cfg_.letter.size() != 1) {
                throw std::invalid_argument("--letter takes a single letter");
            }
            set = seqcore::positions(s, s.letter(cfg_.letter[0]), cfg_.len);
        }
        cfg_.json ? emit({{"horizon", set.horizon}, {"indices", set.indices}})
                  : void(out_ << join_indices(set.indices) << "\n");
        return kOk;
    }

    int seq_kernel() {
        const auto elements = seqcore::kernel(spec());
        std::vector<std::string> names;
        for (const auto& e : elements) {
            names.push_back(seqcore::to_string(e));
        }
        if (cfg_.json) {
            emit({{"kernel", names}, {"size", names.size()}});
        } else {
            out_ << "{";
            for (std::size_t i = 0; i < names.size(); ++i) {
                out_ << (i ? ", " : "") << names[i];
            }
            out_ << "}\n";
        }
        return kOk;
    }

    int cf_convergents() {
        const EpsSpec s = spec();
        json rows = json::array();
        for (int k = 1; k <= cfg_.n; ++k) {
            const auto pair = cfalg::continuants(s, k);
            if (cfg_.json) {
                rows.push_back({{"n", k}, {"u", io::to_json(pair.u)}, {"v", io::to_json(pair.v)}});
            } else {
                out_ << "n=" << k << "  u=" << gf2poly::to_string(pair.u)
                     << "  v=" << gf2poly::to_string(pair.v) << "\n";
            }
        }
        if (cfg_.json) {
            emit(rows);
        }
        return kOk;
    }

    int cf_series() {
        const auto s = inv_provider(spec(), cfg_.target, cfg_.index)(prec(64));
        cfg_.json ? emit(io::to_json(s)) : void(out_ << invseries::to_string(s) << "\n");
        return kOk;
    }

    int report_identities(const std::vector<cfalg::IdentityCheck>& checks) {
        bool all = true;
        json rows = json::array();
        for (const auto& c : checks) {
            all = all && c.report.vanished;
            if (cfg_.json) {
                json row = io::to_json(c.report);
                row["identity"] = c.name;
                rows.push_back(row);
            } else {
                out_ << (c.report.vanished ? "ok    " : "FAIL  ") << c.name;
                if (!c.report.vanished) {
                    out_ << "  (residual at " << c.report.residual_depth << ")";
                }
                out_ << "  [prec " << depth_text(c.report.precision) << "]\n";
            }
        }
        if (cfg_.json) {
            emit(rows);
        }
        return all ? kOk : kVerificationFailed;
    }

    int report_residual(const cfalg::ResidualReport& r) {
        if (cfg_.json) {
            emit(io::to_json(r));
        } else if (r.vanished) {
            out_ << "vanished below precision " << depth_text(r.precision) << "\n";
        } else {
            out_ << "residual at " << r.residual_depth << " (precision " << depth_text(r.precision) << ")\n";
        }
        return r.vanished ? kOk : kVerificationFailed;
    }

    int cf_verify() {
        if (cfg_.relation_file.empty()) {
            return report_identities(cfalg::series_identities(spec(), prec(64)));
        }
        const auto rel = cfalg::parse_relation_file(read_file(cfg_.relation_file));
        const auto target = inv_provider(spec(), cfg_.target.empty() ? "G" : cfg_.target, cfg_.index);
        return report_residual(cfalg::verify_relation(rel, target, prec(64)));
    }

    int ps_verify() {
        if (cfg_.relation_file.empty()) {
            return report_identities(cfalg::power_series_identities(spec(), static_cast<std::size_t>(prec(64))));
        }
        const auto rel = cfalg::parse_relation_file(read_file(cfg_.relation_file));
        const auto target = z_provider(spec(), cfg_.target.empty() ? "F" : cfg_.target, cfg_.index)(
            static_cast<std::size_t>(prec(64)));
        return report_residual(cfalg::verify_relation(rel, target));
    }

    cfalg::FindOptions find_options() const {
        cfalg::FindOptions o;
        o.max_ydeg = cfg_.ydeg;
        o.coeff_deg_bound = cfg_.coeff_deg;
        o.z_deg_bound = cfg_.z_deg;
        o.precision = prec(256);
        return o;
    }

    int report_find(const cfalg::FindResult& r, const std::string& bounds) {
        for (const auto& w : r.warnings) {
            err_ << "warning: " << w << "\n";
        }
        if (cfg_.json) {
            json rels = json::array();
            for (const auto& rel : r.relations) {
                rels.push_back(io::to_json(rel));
            }
            emit({{"relations", rels},
                  {"bounds", bounds},
                  {"unknowns", r.unknowns},
                  {"equations", r.equations},
                  {"rank", r.rank},
                  {"precision", r.precision},
                  {"warnings", r.warnings}});
        } else if (r.relations.empty()) {
            out_ << "no relation within bounds (" << bounds << ")\n";
        } else {
            for (const auto& rel : r.relations) {
                out_ << cfalg::to_string(rel) << "\n";
            }
        }
        if (!r.relations.empty() && !cfg_.write_relation.empty()) {
            write_file(cfg_.write_relation, cfalg::to_file_text(r.relations.front()));
        }
        return r.relations.empty() ? kVerificationFailed : kOk;
    }

    int find_relation(bool power_series) {
        const auto options = find_options();
        const EpsSpec s = spec();
        if (power_series) {
            const auto target = cfg_.target.empty() ? "F" : cfg_.target;
            return report_find(cfalg::find_relation(z_provider(s, target, cfg_.index), options),
                               cfalg::bounds_text(options, true));
        }
        const auto target = cfg_.target.empty() ? "G" : cfg_.target;
        return report_find(cfalg::find_relation(inv_provider(s, target, cfg_.index), options),
                           cfalg::bounds_text(options, false));
    }

    int min_degree() {
        const auto options = find_options();
        const EpsSpec s = spec();
        const std::string target = cfg_.target.empty() ? "G" : cfg_.target;
        cfalg::DegreeReport report;
        if (is_z_target(target)) {
            report = cfalg::minimal_degree_report(z_provider(s, target, cfg_.index), cfg_.ydeg, options);
        } else {
            report = cfalg::minimal_degree_report(inv_provider(s, target, cfg_.index), cfg_.ydeg, options);
        }
        for (const auto& w : report.result.warnings) {
            err_ << "warning: " << w << "\n";
        }
        if (cfg_.json) {
            emit({{"degree", report.degree ? json(*report.degree) : json(nullptr)},
                  {"relation", report.degree ? io::to_json(report.relation) : json(nullptr)},
                  {"bounds", report.bounds}});
        } else if (report.degree) {
            out_ << "minimal degree " << *report.degree << " within bounds (" << report.bounds << ")\n"
                 << cfalg::to_string(report.relation) << "\n";
        } else {
            out_ << "no relation within bounds (" << report.bounds << ")\n";
        }
        return report.degree ? kOk : kVerificationFailed;
    }

    int cf_expand() {
        const auto series = inv_provider(spec(), cfg_.target.empty() ? "G" : cfg_.target, cfg_.index)(prec(64));
        const auto laurent = cfalg::specialize_uniform(series, cfg_.weight).contracted(cfg_.contract);
        const auto expansion = cfalg::cf_expand(laurent, cfg_.count);
        std::vector<std::string> quotients;
        for (const auto& q : expansion.quotients) {
            quotients.push_back(gf2poly::to_string(q));
        }
        if (cfg_.json) {
            emit({{"quotients", quotients}, {"stop", cfalg::to_string(expansion.stop)}});
        } else {
            out_ << "[";
            for (std::size_t i = 0; i < quotients.size(); ++i) {
                out_ << (i ? ", " : "") << quotients[i];
            }
            out_ << "]\nstop: " << cfalg::to_string(expansion.stop) << "\n";
        }
        return kOk;
    }

    int ps_series(const std::string& target) {
        const auto s = z_provider(spec(), target.empty() ? "F" : target, cfg_.index)(
            static_cast<std::size_t>(prec(64)));
        cfg_.json ? emit(io::to_json(s)) : void(out_ << zseries::to_string(s) << "\n");
        return kOk;
    }

    int ps_cartier() {
        const auto s = z_provider(spec(), cfg_.target.empty() ? "F" : cfg_.target, cfg_.index)(
            static_cast<std::size_t>(prec(64)));
        const auto c = zseries::cartier_z(s, cfg_.r);
        cfg_.json ? emit(io::to_json(c)) : void(out_ << zseries::to_string(c) << "\n");
        return kOk;
    }

    int riccati_check() {
        if (cfg_.pattern.empty()) {
            throw std::invalid_argument("--pattern must not be empty");
        }
        std::string pattern;
        while (pattern.size() < static_cast<std::size_t>(cfg_.n) + 1) {
            pattern += cfg_.pattern;
        }
        const auto q = riccati::QuotientSeq::parse(pattern, gf2poly::parse_unipoly(cfg_.a),
                                                   gf2poly::parse_unipoly(cfg_.b));
        bool ok = true;
        json rows = json::array();
        for (int k = -1; k <= cfg_.n; ++k) {
            riccati::RiccatiWitness w;
            try {
                w = riccati::fn_witness(q, k);
            } catch (const InvariantViolation& e) {
                err_ << "n=" << k << ": " << e.what() << "\n";
                ok = false;
                continue;
            }
            const bool residual_ok = k < 0 || riccati::riccati_residual(q, k).matches_closed_form;
            ok = ok && residual_ok;
            if (cfg_.json) {
                rows.push_back({{"n", k},
                                {"F", gf2poly::to_string(w.f)},
                                {"g", gf2poly::to_string(w.g)},
                                {"residual_valuation", k < 0 ? json(nullptr) : json(w.residual_valuation)},
                                {"residual_matches", residual_ok}});
            } else {
                out_ << "n=" << k << "  F=" << gf2poly::to_string(w.f) << "  g=" << gf2poly::to_string(w.g);
                if (k >= 0) {
                    out_ << "  val=" << depth_text(w.residual_valuation)
                         << (residual_ok ? "  residual ok" : "  residual MISMATCH");
                }
                out_ << "\n";
            }
        }
        if (cfg_.json) {
            emit(rows);
        }
        return ok ? kOk : kVerificationFailed;
    }

    int baum_sweet() {
        std::vector<gf2poly::UniPoly> head;
        std::vector<gf2poly::UniPoly> tail;
        for (const auto& item : split_list(cfg_.quotients)) {
            head.push_back(gf2poly::parse_unipoly(item));
        }
        for (const auto& item : split_list(cfg_.tail)) {
            tail.push_back(gf2poly::parse_unipoly(item));
        }
        const Depth p = prec(128);
        const auto alpha = cfalg::cf_value(head, tail, p + 2);
        const auto report = riccati::baum_sweet_check(alpha, p);
        if (cfg_.json) {
            emit({{"holds", report.holds()},
                  {"residual_vanishes", report.residual_vanishes},
                  {"square_form_holds", report.square_form_holds},
                  {"residual_valuation", depth_text(report.residual_valuation)},
                  {"precision", report.precision}});
        } else {
            out_ << "differential form: " << (report.residual_vanishes ? "holds" : "fails") << "\n"
                 << "square form: " << (report.square_form_holds ? "holds" : "fails") << "\n"
                 << "precision: " << report.precision << "\n";
        }
        return report.holds() ? kOk : kVerificationFailed;
    }

    const Config& cfg_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Continued fractions of automatic sequences over F2"};
    app.name("autocf");
    app.require_subcommand(1);

    auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
        CLI::App* sub = group->add_subcommand(name, help);
        const std::string key = group->get_name() + " " + name;
        sub->callback([&cfg, key] { cfg.command = key; });
        sub->add_flag("--json", cfg.json, "JSON output");
        return sub;
    };
    auto with_eps = [&](CLI::App* sub) {
        sub->add_option("--eps", cfg.eps, "seed, e.g. a(bc)")->required();
        return sub;
    };
    auto with_bounds = [&](CLI::App* sub) {
        sub->add_option("--ydeg", cfg.ydeg, "maximal y-degree")->required();
        sub->add_option("--coeff-deg", cfg.coeff_deg, "bound on coefficient letter degree")->required();
        sub->add_option("--z-deg", cfg.z_deg, "bound on coefficient z-degree");
        sub->add_option("--prec", cfg.prec, "working precision (default 256)");
        sub->add_option("--write-relation", cfg.write_relation, "write the first relation to this file");
    };
    auto with_target = [&](CLI::App* sub, const std::string& fallback, const std::string& choices) {
        sub->add_option("--target", cfg.target, choices + " (default " + fallback + ")");
        sub->add_option("--index", cfg.index, "n for Gn / Fn");
    };

    CLI::App* seq = app.add_subcommand("seq", "the sequence s(eps)");
    seq->require_subcommand(1);
    with_eps(leaf(seq, "prefix", "first letters of s(eps)"))->add_option("--len", cfg.len)->required();
    with_eps(leaf(seq, "word", "the word W_n"))->add_option("--n", cfg.n)->required();
    {
        auto* sub = with_eps(leaf(seq, "positions", "positions of a letter"));
        sub->add_option("--len", cfg.len, "horizon")->required();
        sub->add_option("--letter", cfg.letter);
        sub->add_flag("--predicted", cfg.predicted, "use the slot recursion for period slot --slot");
        sub->add_option("--slot", cfg.index);
    }
    with_eps(leaf(seq, "kernel", "the 2-kernel"));

    CLI::App* cf = app.add_subcommand("cf", "continued fraction series");
    cf->require_subcommand(1);
    with_eps(leaf(cf, "convergents", "u_n, v_n"))->add_option("--n", cfg.n)->required();
    {
        auto* sub = with_eps(leaf(cf, "series", "G, G_n, CF or 1/CF"));
        with_target(sub, "G", "G | Gn | CF | invCF");
        sub->add_option("--prec", cfg.prec, "depth (default 64)");
    }
    {
        auto* sub = with_eps(leaf(cf, "verify", "check a relation file, or the built-in identities"));
        with_target(sub, "G", "G | Gn | CF | invCF");
        sub->add_option("--relation-file", cfg.relation_file);
        sub->add_option("--prec", cfg.prec, "depth (default 64)");
    }
    {
        auto* sub = with_eps(leaf(cf, "find-relation", "search for a relation"));
        with_target(sub, "G", "G | Gn | CF | invCF");
        with_bounds(sub);
    }
    {
        auto* sub = with_eps(leaf(cf, "min-degree", "smallest y-degree with a relation"));
        with_target(sub, "G", "G | Gn | CF | invCF | F | R | F0 | Fn | f");
        with_bounds(sub);
    }
    {
        auto* sub = with_eps(leaf(cf, "expand", "continued fraction expansion after letters -> t^weight"));
        with_target(sub, "G", "G | Gn | CF | invCF");
        sub->add_option("--prec", cfg.prec, "depth (default 64)");
        sub->add_option("--count", cfg.count, "number of partial quotients");
        sub->add_option("--weight", cfg.weight, "every letter becomes t^weight");
        sub->add_option("--contract", cfg.contract, "then replace t^K by t");
    }

    CLI::App* ps = app.add_subcommand("ps", "power series in z");
    ps->require_subcommand(1);
    {
        auto* sub = with_eps(leaf(ps, "series", "F, R, F_n or f"));
        with_target(sub, "F", "F | R | F0 | Fn | f");
        sub->add_option("--prec", cfg.prec, "number of coefficients (default 64)");
    }
    with_eps(leaf(ps, "f0", "indicator of the first period slot"))->add_option("--prec", cfg.prec);
    {
        auto* sub = with_eps(leaf(ps, "verify", "check a relation file, or the built-in identities"));
        with_target(sub, "F", "F | R | F0 | Fn | f");
        sub->add_option("--relation-file", cfg.relation_file);
        sub->add_option("--prec", cfg.prec, "number of coefficients (default 64)");
    }
    {
        auto* sub = with_eps(leaf(ps, "find-relation", "search for a relation"));
        with_target(sub, "F", "F | R | F0 | Fn | f");
        with_bounds(sub);
    }
    {
        auto* sub = with_eps(leaf(ps, "cartier", "Cartier operator Lambda_r"));
        with_target(sub, "F", "F | R | F0 | Fn | f");
        sub->add_option("--r", cfg.r)->check(CLI::Range(0, 1));
        sub->add_option("--prec", cfg.prec, "number of coefficients (default 64)");
    }

    CLI::App* ric = app.add_subcommand("riccati", "quotients in {a, b, a+b} over F2[t]");
    ric->require_subcommand(1);
    {
        auto* sub = leaf(ric, "check", "F_n = ab + g_n^2 and the Riccati residual");
        sub->add_option("--pattern", cfg.pattern, "over {a,b,c}, c = a+b; repeated as needed")->required();
        sub->add_option("--a", cfg.a)->required();
        sub->add_option("--b", cfg.b)->required();
        sub->add_option("--n", cfg.n)->required();
    }
    {
        auto* sub = leaf(ric, "baum-sweet", "differential test for [q_0; q_1, ...]");
        sub->add_option("--quotients", cfg.quotients, "comma-separated head, e.g. 0,t,t^2")->required();
        sub->add_option("--tail", cfg.tail, "comma-separated period repeated forever");
        sub->add_option("--prec", cfg.prec, "depth in 1/t (default 128)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        return Runner(cfg, out, err).dispatch();
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace autocf::cli
