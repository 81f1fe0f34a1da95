#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace runcorr {

enum class errc {
    invalid_input,
    period_mismatch,
    invalid_shift,
    degenerate_sequence,
    invalid_index,
    not_in_image,
    too_large,
};

inline const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::invalid_input: return "InvalidInput";
        case errc::period_mismatch: return "PeriodMismatch";
        case errc::invalid_shift: return "InvalidShift";
        case errc::degenerate_sequence: return "DegenerateSequence";
        case errc::invalid_index: return "InvalidIndex";
        case errc::not_in_image: return "NotInImage";
        case errc::too_large: return "TooLarge";
    }
    return "Unknown";
}

/// All library failures are reported through this type. `position()` is set
/// for parse errors and names the offending character offset.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code),
          position_(position) {}

    errc code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    errc code_;
    std::optional<std::size_t> position_;
};

}  // namespace runcorr
