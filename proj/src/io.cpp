#include "dessin/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dessin/error.hpp"
#include "dessin/rational.hpp"

namespace dessin {

using nlohmann::json;

namespace {

std::vector<int> int_list(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_array()) {
        throw ValidationError("missing or non-array field \"" + field + "\"");
    }
    std::vector<int> out;
    for (const auto& v : j[field]) {
        if (!v.is_number_integer()) throw ValidationError("non-integer entry in \"" + field + "\"");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

json dessin_to_json(const Dessin& d) {
    return json{{"edges", d.edge_count()},
                {"sigma0", d.sigma0().images()},
                {"sigma1", d.sigma1().images()}};
}

Dessin dessin_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("dessin JSON must be an object");
    if (!j.contains("edges") || !j["edges"].is_number_integer()) {
        throw ValidationError("missing integer field \"edges\"");
    }
    return Dessin::validate(j["edges"].get<int>(), int_list(j, "sigma0"), int_list(j, "sigma1"));
}

Dessin read_dessin_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return dessin_from_json(j);
}

json passport_to_json(const Passport& p) {
    return json{{"black_degrees", p.black_degrees},
                {"white_degrees", p.white_degrees},
                {"face_degrees", p.face_degrees},
                {"component_count", p.component_count},
                {"genus_list", p.genus_list}};
}

json vector_to_json(const SparseVector& v) {
    json terms = json::array();
    for (const auto& [key, coeff] : v.terms()) {
        terms.push_back(json{{"key", key.text()}, {"coeff", to_fraction_string(coeff)}});
    }
    return json{{"terms", std::move(terms)}};
}

SparseVector vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw ValidationError("vector JSON must be an object with a \"terms\" array");
    }
    SparseVector v;
    for (const auto& t : j["terms"]) {
        if (!t.contains("key") || !t.contains("coeff")) {
            throw ValidationError("vector term needs \"key\" and \"coeff\"");
        }
        v.add_term(DessinKey::from_text(t["key"].get<std::string>()),
                   rational_from_string(t["coeff"].get<std::string>()));
    }
    return v;
}

json report_to_json(const ComparisonReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(vector_to_json(w));
    return json{{"window", r.window},
                {"level", r.level},
                {"dim", r.dim},
                {"rank_dessin", r.rank_dessin},
                {"rank_belyi_inner", r.rank_belyi_inner},
                {"belyi_in_dessin", r.belyi_in_dessin},
                {"dessin_in_belyi_inner", r.dessin_in_belyi_inner},
                {"stable_at_prev_window", r.stable_at_prev_window},
                {"witnesses", std::move(witnesses)},
                {"dessin_generators", r.dessin_generator_count},
                {"belyi_generators", r.belyi_generator_count}};
}

json quotient_to_json(const QuotientReport& q) {
    return json{{"level", q.level},
                {"rank_level", q.rank_level},
                {"rank_next", q.rank_next},
                {"dimension", q.dimension},
                {"spanning_verified", q.spanning_verified},
                {"class_count_at_level", q.class_count_at_level}};
}

std::string export_dot(const Dessin& d) {
    std::ostringstream out;
    out << "graph dessin {\n";
    const auto black = d.sigma0().cycles();
    const auto white = d.sigma1().cycles();
    std::vector<int> black_of(d.edge_count()), white_of(d.edge_count());
    for (std::size_t v = 0; v < black.size(); ++v) {
        for (int e : black[v]) black_of[e] = static_cast<int>(v);
    }
    for (std::size_t v = 0; v < white.size(); ++v) {
        for (int e : white[v]) white_of[e] = static_cast<int>(v);
    }
    for (std::size_t v = 0; v < black.size(); ++v) {
        out << "  b" << v << " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
    }
    for (std::size_t v = 0; v < white.size(); ++v) {
        out << "  w" << v << " [shape=circle];\n";
    }
    for (int e = 0; e < d.edge_count(); ++e) {
        out << "  b" << black_of[e] << " -- w" << white_of[e] << " [label=\"" << e << "\"];\n";
    }
    // Embeddings are part of the structure but most renderers ignore port
    // order, so the cyclic orders ride along as comments.
    for (std::size_t v = 0; v < black.size(); ++v) {
        out << "  // cyclic order at b" << v << ":";
        for (int e : black[v]) out << ' ' << e;
        out << '\n';
    }
    for (std::size_t v = 0; v < white.size(); ++v) {
        out << "  // cyclic order at w" << v << ":";
        for (int e : white[v]) out << ' ' << e;
        out << '\n';
    }
    out << "}\n";
    return out.str();
}

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int edges, Mode mode) {
    return dir / ("dessins_n" + std::to_string(edges) + "_" + to_string(mode) + ".jsonl");
}

void save_enumeration(const std::filesystem::path& dir, int edges, Mode mode,
                      const std::vector<DessinKey>& keys) {
    std::filesystem::create_directories(dir);
    const auto path = cache_file_path(dir, edges, mode);
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << json{{"format", kCacheFormatVersion}}.dump() << '\n';
    for (const auto& key : keys) {
        const Dessin rep = dessin_from_key(key);
        json record = dessin_to_json(rep);
        record["key"] = key.text();
        record["passport"] = passport_to_json(passport(rep));
        out << record.dump() << '\n';
    }
}

std::optional<std::vector<DessinKey>> load_enumeration(const std::filesystem::path& dir,
                                                       int edges, Mode mode) {
    const auto path = cache_file_path(dir, edges, mode);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    auto fail = [&](int line, const std::string& what) -> ValidationError {
        return ValidationError(path.string() + ":" + std::to_string(line) + ": " + what);
    };
    std::string line;
    int line_no = 0;
    auto next_json = [&](json& j) {
        if (!std::getline(in, line)) return false;
        ++line_no;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw fail(line_no, std::string("malformed JSON: ") + e.what());
        }
        return true;
    };
    json header;
    if (!next_json(header) || !header.is_object() || !header.contains("format")) {
        throw fail(line_no, "missing cache header");
    }
    if (header["format"] != kCacheFormatVersion) {
        throw fail(line_no, "cache format version mismatch: expected " +
                                std::to_string(kCacheFormatVersion) + ", found " +
                                header["format"].dump());
    }
    std::vector<DessinKey> keys;
    json record;
    while (next_json(record)) {
        try {
            const Dessin d = dessin_from_json(record);
            if (!record.contains("key") || !record["key"].is_string()) {
                throw ValidationError("missing \"key\"");
            }
            const CanonicalForm cf = canonical_form(d);
            if (cf.key.text() != record["key"].get<std::string>()) {
                throw ValidationError("stored key does not match recanonicalized dessin");
            }
            if (record.contains("passport") &&
                record["passport"] != passport_to_json(passport(d))) {
                throw ValidationError("stored passport does not match recomputed passport");
            }
            if (d.edge_count() != edges) {
                throw ValidationError("record edge count differs from file edge count");
            }
            keys.push_back(cf.key);
        } catch (const Error& e) {
            throw fail(line_no, e.what());
        }
    }
    return keys;
}

BasisWindow enumerate_window_cached(int max_edges, Mode mode, bool include_empty,
                                    const std::filesystem::path& cache_dir,
                                    const EnumerationOptions& opts) {
    if (cache_dir.empty()) return enumerate_window(max_edges, mode, include_empty, opts);
    std::vector<DessinKey> keys;
    for (int n = 0; n <= max_edges; ++n) {
        if (n == 0 && (mode != Mode::All || !include_empty)) continue;
        std::vector<DessinKey> block;
        if (auto cached = load_enumeration(cache_dir, n, mode)) {
            block = std::move(*cached);
        } else {
            block = enumerate_exact(n, mode, opts);
            save_enumeration(cache_dir, n, mode, block);
        }
        for (auto& k : block) keys.push_back(std::move(k));
    }
    return window_from_keys(max_edges, mode, include_empty, std::move(keys));
}

}  // namespace dessin
