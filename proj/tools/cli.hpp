#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/report_json.hpp"

namespace critgraph::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCatalogEnv = "CRITGRAPH_CATALOG_DIR";
inline constexpr const char* kR39CatalogFile = "r39_35.g6";

enum ExitCode : int { kAllPass = 0, kClauseFailed = 1, kUsageError = 2 };

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Flag, then the environment variable, then ./catalog.
std::filesystem::path resolve_catalog_dir(const std::optional<std::string>& flag);

/// Tool version, input digest, UTC timestamp and payload.
Json envelope(const Json& payload, const std::optional<std::string>& graph6_line);

/// Runs one command line. args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace critgraph::cli
