#include "dessin/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dessin/error.hpp"
#include "dessin/filtration.hpp"
#include "dessin/io.hpp"
#include "dessin/rational.hpp"
#include "dessin/sampling.hpp"

namespace dessin::cli {

namespace {

using nlohmann::json;

void emit_json(std::ostream& out, const json& j) {
    out << j.dump(2) << '\n';
}

std::string joined(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

void check_bound(bool ok, const std::string& what) {
    if (!ok) throw BoundError(what);
}

EnumerationOptions enum_options(const RunConfig& cfg) {
    EnumerationOptions opts;
    opts.max_edges = cfg.bound_enum_edges;
    opts.threads = cfg.threads;
    return opts;
}

BasisWindow make_window(const RunConfig& cfg) {
    return enumerate_window_cached(cfg.window, Mode::All, cfg.include_empty, cfg.cache_dir,
                                   enum_options(cfg));
}

void print_dessin_text(std::ostream& out, const Dessin& d) {
    out << "edges: " << d.edge_count() << '\n';
    out << "sigma0: " << json(d.sigma0().images()).dump() << '\n';
    out << "sigma1: " << json(d.sigma1().images()).dump() << '\n';
}

void print_dessin_csv(std::ostream& out, const Dessin& d) {
    out << "edges,sigma0,sigma1\n";
    out << d.edge_count() << ',' << joined(d.sigma0().images(), ';') << ','
        << joined(d.sigma1().images(), ';') << '\n';
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    check_bound(cfg.edges >= 0 && cfg.edges <= cfg.bound_enum_edges,
                "edge count out of bounds (0.." + std::to_string(cfg.bound_enum_edges) + ")");
    std::vector<DessinKey> keys;
    if (!cfg.cache_dir.empty()) {
        if (auto cached = load_enumeration(cfg.cache_dir, cfg.edges, cfg.mode)) {
            keys = std::move(*cached);
        } else {
            keys = enumerate_exact(cfg.edges, cfg.mode, enum_options(cfg));
            save_enumeration(cfg.cache_dir, cfg.edges, cfg.mode, keys);
        }
    } else {
        keys = enumerate_exact(cfg.edges, cfg.mode, enum_options(cfg));
    }
    switch (cfg.format) {
        case Format::Json: {
            json texts = json::array();
            for (const auto& k : keys) texts.push_back(k.text());
            emit_json(out, json{{"edges", cfg.edges},
                                {"mode", to_string(cfg.mode)},
                                {"count", keys.size()},
                                {"keys", std::move(texts)}});
            break;
        }
        case Format::Csv:
            out << "key\n";
            for (const auto& k : keys) out << k.text() << '\n';
            break;
        case Format::Text:
            for (const auto& k : keys) out << k.text() << '\n';
            break;
    }
    return 0;
}

int cmd_canon(const RunConfig& cfg, std::ostream& out) {
    const auto cf = canonical_form(read_dessin_file(cfg.files[0]));
    switch (cfg.format) {
        case Format::Json:
            emit_json(out, json{{"key", cf.key.text()},
                                {"dessin", dessin_to_json(cf.representative)}});
            break;
        case Format::Csv:
            out << "key\n" << cf.key.text() << '\n';
            break;
        case Format::Text:
            out << cf.key.text() << '\n';
            break;
    }
    return 0;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
    const Dessin d = read_dessin_file(cfg.files[0]);
    const Passport p = passport(d);
    const bool connected = p.component_count == 1;
    const bool with_order = connected && d.edge_count() <= 8;
    switch (cfg.format) {
        case Format::Json: {
            json j{{"edges", d.edge_count()},
                   {"connected", connected},
                   {"passport", passport_to_json(p)}};
            if (with_order) j["monodromy_order"] = monodromy_order(d);
            emit_json(out, j);
            break;
        }
        case Format::Csv:
            out << "edges,component_count,black_degrees,white_degrees,face_degrees,genus_list\n"
                << d.edge_count() << ',' << p.component_count << ','
                << joined(p.black_degrees, ';') << ',' << joined(p.white_degrees, ';') << ','
                << joined(p.face_degrees, ';') << ',' << joined(p.genus_list, ';') << '\n';
            break;
        case Format::Text:
            out << "edges: " << d.edge_count() << '\n';
            out << "components: " << p.component_count << '\n';
            out << "black_degrees: " << json(p.black_degrees).dump() << '\n';
            out << "white_degrees: " << json(p.white_degrees).dump() << '\n';
            out << "face_degrees: " << json(p.face_degrees).dump() << '\n';
            out << "genus_list: " << json(p.genus_list).dump() << '\n';
            if (with_order) out << "monodromy_order: " << monodromy_order(d) << '\n';
            break;
    }
    return 0;
}

json survivor_map_json(const EdgeDeletion& del) {
    json m = json::object();
    for (const auto& [old_index, new_index] : del.survivor_pairs()) {
        m[std::to_string(old_index)] = new_index;
    }
    return m;
}

int cmd_delete(const RunConfig& cfg, std::ostream& out) {
    const Dessin d = read_dessin_file(cfg.files[0]);
    const EdgeDeletion del = delete_edges(d, cfg.edge_list);
    switch (cfg.format) {
        case Format::Json:
            emit_json(out, json{{"dessin", dessin_to_json(del.dessin)},
                                {"survivor_map", survivor_map_json(del)}});
            break;
        case Format::Csv: {
            std::string survivors;
            for (const auto& [o, n] : del.survivor_pairs()) {
                if (!survivors.empty()) survivors += ';';
                survivors += std::to_string(o) + "->" + std::to_string(n);
            }
            out << "edges,sigma0,sigma1,survivors\n";
            out << del.dessin.edge_count() << ',' << joined(del.dessin.sigma0().images(), ';')
                << ',' << joined(del.dessin.sigma1().images(), ';') << ',' << survivors << '\n';
            break;
        }
        case Format::Text: {
            print_dessin_text(out, del.dessin);
            out << "survivors:";
            for (const auto& [o, n] : del.survivor_pairs()) out << ' ' << o << "->" << n;
            out << '\n';
            break;
        }
    }
    return 0;
}

void print_vector_text(std::ostream& out, const SparseVector& v) {
    if (v.is_zero()) {
        out << "0\n";
        return;
    }
    for (const auto& [key, coeff] : v.terms()) {
        out << to_fraction_string(coeff) << " * " << key.text() << '\n';
    }
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
    const Dessin d = read_dessin_file(cfg.files[0]);
    check_bound(static_cast<int>(cfg.edge_list.size()) <= 16, "more than 16 optional edges");
    const SparseVector v = expansion(d, cfg.edge_list);
    switch (cfg.format) {
        case Format::Json:
            emit_json(out, vector_to_json(v));
            break;
        case Format::Csv:
            out << "key,coeff\n";
            for (const auto& [key, coeff] : v.terms()) {
                out << key.text() << ',' << to_fraction_string(coeff) << '\n';
            }
            break;
        case Format::Text:
            print_vector_text(out, v);
            break;
    }
    return 0;
}

int cmd_product(const RunConfig& cfg, std::ostream& out) {
    const Dessin a = read_dessin_file(cfg.files[0]);
    const Dessin b = read_dessin_file(cfg.files[1]);
    check_bound(static_cast<long long>(a.edge_count()) * b.edge_count() <=
                    cfg.bound_product_edges,
                "product size exceeds " + std::to_string(cfg.bound_product_edges) + " edges");
    const Dessin p = product(a, b);
    switch (cfg.format) {
        case Format::Json:
            emit_json(out, dessin_to_json(p));
            break;
        case Format::Csv:
            print_dessin_csv(out, p);
            break;
        case Format::Text:
            print_dessin_text(out, p);
            break;
    }
    return 0;
}

int cmd_filtration(const RunConfig& cfg, std::ostream& out) {
    check_bound(cfg.window >= 1 && cfg.window <= cfg.bound_window, "window out of bounds");
    check_bound(cfg.level >= 0 && cfg.level <= cfg.bound_level, "level out of bounds");
    const BasisWindow w = make_window(cfg);
    SpanOptions opts{cfg.threads};
    const SpanBuild build = cfg.kind == "dessin" ? build_dessin_level(w, cfg.level, opts)
                                                 : build_belyi_level_inner(w, cfg.level, opts);
    switch (cfg.format) {
        case Format::Json:
            emit_json(out, json{{"window", cfg.window},
                                {"level", cfg.level},
                                {"kind", cfg.kind},
                                {"dim", w.keys.size()},
                                {"rank", build.span.rank()},
                                {"generators", build.generators.size()}});
            break;
        case Format::Csv:
            out << "window,level,kind,dim,rank,generators\n";
            out << cfg.window << ',' << cfg.level << ',' << cfg.kind << ',' << w.keys.size()
                << ',' << build.span.rank() << ',' << build.generators.size() << '\n';
            break;
        case Format::Text:
            out << "window: " << cfg.window << '\n';
            out << "level: " << cfg.level << '\n';
            out << "kind: " << cfg.kind << '\n';
            out << "dim: " << w.keys.size() << '\n';
            out << "rank: " << build.span.rank() << '\n';
            out << "generators: " << build.generators.size() << '\n';
            break;
    }
    return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    check_bound(cfg.window >= 1 && cfg.window <= cfg.bound_window, "window out of bounds");
    check_bound(cfg.level >= 1 && cfg.level <= cfg.bound_level, "level out of bounds");
    const BasisWindow w = make_window(cfg);
    const ComparisonReport r = compare_levels(w, cfg.level, SpanOptions{cfg.threads});
    switch (cfg.format) {
        case Format::Json:
            emit_json(out, report_to_json(r));
            break;
        case Format::Csv:
            out << "window,level,dim,rank_dessin,rank_belyi_inner,belyi_in_dessin,"
                   "dessin_in_belyi_inner,stable_at_prev_window,dessin_generators,"
                   "belyi_generators\n";
            out << r.window << ',' << r.level << ',' << r.dim << ',' << r.rank_dessin << ','
                << r.rank_belyi_inner << ',' << (r.belyi_in_dessin ? "true" : "false") << ','
                << (r.dessin_in_belyi_inner ? "true" : "false") << ','
                << (r.stable_at_prev_window ? "true" : "false") << ','
                << r.dessin_generator_count << ',' << r.belyi_generator_count << '\n';
            break;
        case Format::Text:
            out << "window: " << r.window << '\n';
            out << "level: " << r.level << '\n';
            out << "dim: " << r.dim << '\n';
            out << "rank_dessin: " << r.rank_dessin << '\n';
            out << "rank_belyi_inner: " << r.rank_belyi_inner << '\n';
            out << "belyi_in_dessin: " << (r.belyi_in_dessin ? "true" : "false") << '\n';
            out << "dessin_in_belyi_inner: " << (r.dessin_in_belyi_inner ? "true" : "false")
                << '\n';
            out << "stable_at_prev_window: " << (r.stable_at_prev_window ? "true" : "false")
                << '\n';
            out << "witnesses: " << r.witnesses.size() << '\n';
            break;
    }
    return 0;
}

int cmd_quotients(const RunConfig& cfg, std::ostream& out) {
    check_bound(cfg.window >= 1 && cfg.window <= cfg.bound_window, "window out of bounds");
    check_bound(cfg.max_level >= 0 && cfg.max_level <= cfg.bound_level,
                "max level out of bounds");
    const BasisWindow w = make_window(cfg);
    SpanOptions opts{cfg.threads};
    std::vector<QuotientReport> reports;
    for (int level = 0; level <= cfg.max_level; ++level) {
        reports.push_back(quotient_report(w, level, opts));
    }
    switch (cfg.format) {
        case Format::Json: {
            json levels = json::array();
            for (const auto& q : reports) levels.push_back(quotient_to_json(q));
            emit_json(out, json{{"window", cfg.window}, {"levels", std::move(levels)}});
            break;
        }
        case Format::Csv:
            out << "level,rank_level,rank_next,dimension,class_count_at_level,"
                   "spanning_verified\n";
            for (const auto& q : reports) {
                out << q.level << ',' << q.rank_level << ',' << q.rank_next << ',' << q.dimension
                    << ',' << q.class_count_at_level << ','
                    << (q.spanning_verified ? "true" : "false") << '\n';
            }
            break;
        case Format::Text:
            for (const auto& q : reports) {
                out << "level " << q.level << ": rank " << q.rank_level << " -> " << q.rank_next
                    << ", dimension " << q.dimension << ", classes " << q.class_count_at_level
                    << ", spanning " << (q.spanning_verified ? "ok" : "FAILED") << '\n';
            }
            break;
    }
    return 0;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& out) {
    out << export_dot(read_dessin_file(cfg.files[0]));
    return 0;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    std::mt19937 rng(cfg.seed);
    const int trials = cfg.trials;

    for (int t = 0; t < trials; ++t) {
        const Dessin d = random_dessin(rng, 1, 7);
        const Permutation relabel = random_permutation(rng, d.edge_count());
        const Dessin conjugated(relabel.compose(d.sigma0()).compose(relabel.inverse()),
                                relabel.compose(d.sigma1()).compose(relabel.inverse()));
        if (canonical_key(d) != canonical_key(conjugated)) {
            throw Error("canonical key changed under relabeling (trial " + std::to_string(t) +
                        ")");
        }
    }
    out << "canonical conjugation invariance: " << trials << " trials ok\n";

    for (int t = 0; t < trials; ++t) {
        const Dessin d = random_dessin(rng, 1, 6);
        std::vector<int> s = random_subset(rng, d.edge_count());
        if (s.empty()) s.push_back(0);
        const int e = s[0];
        std::vector<int> rest(s.begin() + 1, s.end());
        const EdgeDeletion without = delete_edges(d, {e});
        const SparseVector lhs = expansion(d, s);
        const SparseVector rhs = vector_combine(
            Rational(1), expansion(d, rest), Rational(-1),
            expansion(without.dessin, without.map_surviving(rest)));
        if (lhs != rhs) {
            throw Error("expansion recurrence failed (trial " + std::to_string(t) + ")");
        }
    }
    out << "expansion recurrence: " << trials << " trials ok\n";

    for (int t = 0; t < trials; ++t) {
        const Dessin d = random_dessin(rng, 1, 7);
        const std::vector<int> t1 = random_subset(rng, d.edge_count());
        std::vector<int> t2;
        for (int e = 0; e < d.edge_count(); ++e) {
            const bool in_t1 = std::find(t1.begin(), t1.end(), e) != t1.end();
            if (!in_t1 && (rng() & 1u)) t2.push_back(e);
        }
        const EdgeDeletion first = delete_edges(d, t1);
        const EdgeDeletion second = delete_edges(first.dessin, first.map_surviving(t2));
        std::vector<int> both = t1;
        both.insert(both.end(), t2.begin(), t2.end());
        const EdgeDeletion direct = delete_edges(d, both);
        if (!(second.dessin == direct.dessin)) {
            throw Error("sequential deletion mismatch (trial " + std::to_string(t) + ")");
        }
    }
    out << "delete composition: " << trials << " trials ok\n";

    out << "selftest passed (seed=" << cfg.seed << ", trials=" << trials << ")\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Combinatorial workbench for dessins d'enfants and their filtrations"};
    app.name("dessin");
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache-dir", cfg.cache_dir,
                   "Enumeration cache directory (DESSIN_CACHE_DIR overrides)");
    app.add_flag("--no-empty{false},--include-empty{true}", cfg.include_empty,
                 "Include the empty dessin as a basis class (default on)");
    app.add_option("--threads", cfg.threads, "Worker threads for generator production")
        ->check(CLI::Range(1, 64));

    auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes with n edges");
    enumerate->add_option("--edges", cfg.edges, "Edge count")->required();
    bool connected = false;
    enumerate->add_flag("--connected", connected, "Restrict to connected dessins");

    auto* canon = app.add_subcommand("canon", "Canonical key and representative of a dessin");
    canon->add_option("file", cfg.files, "Dessin JSON file")->required()->expected(1);

    auto* invariants = app.add_subcommand("invariants", "Passport, genus and group order");
    invariants->add_option("file", cfg.files, "Dessin JSON file")->required()->expected(1);

    auto* del = app.add_subcommand("delete", "Remove edges and relabel");
    del->add_option("file", cfg.files, "Dessin JSON file")->required()->expected(1);
    del->add_option("--edges", cfg.edge_list, "Edges to remove (comma separated)")
        ->delimiter(',');

    auto* expand = app.add_subcommand("expand", "Optional-edge inclusion-exclusion expansion");
    expand->add_option("file", cfg.files, "Dessin JSON file")->required()->expected(1);
    expand->add_option("--optional", cfg.edge_list, "Optional edges (comma separated)")
        ->delimiter(',');

    auto* prod = app.add_subcommand("product", "Product of two covers");
    prod->add_option("files", cfg.files, "Two dessin JSON files")->required()->expected(2);

    auto* filtration = app.add_subcommand("filtration", "Rank of one filtration level");
    filtration->add_option("--window", cfg.window, "Window size N")->required();
    filtration->add_option("--level", cfg.level, "Filtration level")->required();
    filtration->add_option("--kind", cfg.kind, "dessin or belyi")
        ->check(CLI::IsMember({"dessin", "belyi"}));

    auto* compare = app.add_subcommand("compare", "Compare the two filtrations at one level");
    compare->add_option("--window", cfg.window, "Window size N")->required();
    compare->add_option("--level", cfg.level, "Filtration level")->required();

    auto* quotients = app.add_subcommand("quotients", "Successive quotient dimensions");
    quotients->add_option("--window", cfg.window, "Window size N")->required();
    quotients->add_option("--max-level", cfg.max_level, "Highest level to report")->required();

    auto* export_dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a dessin");
    export_dot_cmd->add_option("file", cfg.files, "Dessin JSON file")->required()->expected(1);

    auto* selftest = app.add_subcommand("selftest", "Randomized property checks");
    selftest->add_option("--seed", cfg.seed, "Random seed");
    selftest->add_option("--trials", cfg.trials, "Trials per property")
        ->check(CLI::Range(1, 100000));

    std::vector<const char*> argv;
    argv.push_back("dessin");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (format == "json") cfg.format = Format::Json;
    else if (format == "csv") cfg.format = Format::Csv;
    else cfg.format = Format::Text;
    cfg.mode = connected ? Mode::Connected : Mode::All;
    if (const char* env = std::getenv("DESSIN_CACHE_DIR"); env && *env) cfg.cache_dir = env;

    try {
        if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg, out);
        if (app.got_subcommand(canon)) return cmd_canon(cfg, out);
        if (app.got_subcommand(invariants)) return cmd_invariants(cfg, out);
        if (app.got_subcommand(del)) return cmd_delete(cfg, out);
        if (app.got_subcommand(expand)) return cmd_expand(cfg, out);
        if (app.got_subcommand(prod)) return cmd_product(cfg, out);
        if (app.got_subcommand(filtration)) return cmd_filtration(cfg, out);
        if (app.got_subcommand(compare)) return cmd_compare(cfg, out);
        if (app.got_subcommand(quotients)) return cmd_quotients(cfg, out);
        if (app.got_subcommand(export_dot_cmd)) return cmd_export_dot(cfg, out);
        if (app.got_subcommand(selftest)) return cmd_selftest(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace dessin::cli
