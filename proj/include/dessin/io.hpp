#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dessin/dessin.hpp"
#include "dessin/filtration.hpp"

namespace dessin {

// --- JSON object forms ----------------------------------------------------

/// {"edges": n, "sigma0": [...], "sigma1": [...]}, 0-based images.
nlohmann::json dessin_to_json(const Dessin& d);
Dessin dessin_from_json(const nlohmann::json& j);
Dessin read_dessin_file(const std::filesystem::path& path);

nlohmann::json passport_to_json(const Passport& p);

/// {"terms": [{"key": ..., "coeff": "p/q"}...]} in basis order.
nlohmann::json vector_to_json(const SparseVector& v);
SparseVector vector_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ComparisonReport& r);
nlohmann::json quotient_to_json(const QuotientReport& q);

// --- Graph export ----------------------------------------------------------

/// DOT rendering: one node per black/white vertex, one edge per dessin edge
/// (parallel edges preserved), cyclic orders recorded as comments.
std::string export_dot(const Dessin& d);

// --- Enumeration cache -----------------------------------------------------

inline constexpr int kCacheFormatVersion = 1;

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int edges, Mode mode);

/// Writes the header line {"format": 1} followed by one JSON record per
/// class: the dessin object plus "key" and "passport".
void save_enumeration(const std::filesystem::path& dir, int edges, Mode mode,
                      const std::vector<DessinKey>& keys);

/// nullopt when the file does not exist. Every record is revalidated
/// (permutations checked, key recanonicalized and compared); corrupt lines
/// and format mismatches raise ValidationError naming file and line.
std::optional<std::vector<DessinKey>> load_enumeration(const std::filesystem::path& dir,
                                                       int edges, Mode mode);

/// enumerate_window backed by a JSON-lines cache directory: per edge count,
/// loads when present, computes and saves otherwise. An empty dir disables
/// caching.
BasisWindow enumerate_window_cached(int max_edges, Mode mode, bool include_empty,
                                    const std::filesystem::path& cache_dir,
                                    const EnumerationOptions& opts = {});

}  // namespace dessin
