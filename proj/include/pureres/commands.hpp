#pragma once

#include "pureres/hilbert_options.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace pureres {

inline constexpr int kExitPure = 0;
inline constexpr int kExitNotPure = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitError = 3;

struct CommandOptions {
    HilbertOptions hilbert;
    /// Compare with the minimal graded resolution of coker(in(phi_1)).
    bool oracle = false;
    /// Run 5 basis-change trials seeded seed, seed + 1, ...
    std::optional<std::uint64_t> seed;
};

struct CommandResult {
    int exit_code = kExitError;
    /// Human-readable report.
    std::string text;
    /// Report document as serialized JSON.
    std::string json;
};

CommandResult cmd_check(const std::filesystem::path& path, const CommandOptions& options = {});
CommandResult cmd_initial(const std::filesystem::path& path);
CommandResult cmd_hilbert(const std::filesystem::path& path, const CommandOptions& options = {});
CommandResult cmd_betti(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of the file contents.
std::string file_digest(const std::filesystem::path& path);

} // namespace pureres
