#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dessin/enumeration.hpp"

namespace dessin::cli {

enum class Format { Text, Json, Csv };

/// Everything a run depends on besides the cache contents. Equal configs
/// with equal cache state produce byte-identical output.
struct RunConfig {
    std::string subcommand;
    Format format = Format::Text;
    Mode mode = Mode::All;
    bool include_empty = true;
    std::string cache_dir;  // empty disables caching; DESSIN_CACHE_DIR overrides
    int threads = 1;
    unsigned seed = 1;
    int trials = 200;

    int edges = 1;
    int window = 3;
    int level = 1;
    int max_level = 2;
    std::string kind = "dessin";
    std::vector<int> edge_list;
    std::vector<std::string> files;

    // Enforced at this layer with exit code 2.
    int bound_window = 6;
    int bound_level = 4;
    int bound_product_edges = 64;
    int bound_enum_edges = 7;
};

/// Parses argv-style arguments (without the program name), dispatches, and
/// writes results to `out`. Exit status: 0 success, 1 usage error,
/// 2 bound or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dessin::cli
