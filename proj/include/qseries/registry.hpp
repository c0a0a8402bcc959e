#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <qseries/series.hpp>

namespace qseries {

struct IdentityRecord {
    std::string id;
    std::string lhs;
    std::string rhs;
    std::string source;
    Exponent default_order = 200;
};

// Product texts of the four headline series and the Richmond-Szekeres product.
namespace series_text {
// nu(q^2) = sum alpha(n) q^n
inline constexpr std::string_view alpha =
    "(q,q^4;q^5)_inf^2 * (-q^4,-q^6;q^10)_inf / ((q^2,q^3;q^5)_inf^2 * (-q^2,-q^8;q^10)_inf)";
// 1/nu(q^2) = sum beta(n) q^n
inline constexpr std::string_view beta =
    "(q^2,q^3;q^5)_inf^2 * (-q^2,-q^8;q^10)_inf / ((q,q^4;q^5)_inf^2 * (-q^4,-q^6;q^10)_inf)";
inline constexpr std::string_view gamma =
    "(-q,-q^4;q^5)_inf^2 * (q^4,q^6;q^10)_inf / ((-q^2,-q^3;q^5)_inf^2 * (q^3,q^7;q^10)_inf)";
inline constexpr std::string_view delta =
    "(-q^2,-q^3;q^5)_inf^2 * (q^2,q^8;q^10)_inf / ((-q,-q^4;q^5)_inf^2 * (q,q^9;q^10)_inf)";
inline constexpr std::string_view richmond_szekeres = "(q^3,q^5;q^8)_inf / (q,q^7;q^8)_inf";
} // namespace series_text

// The built-in identity table, validated on first use.
const std::vector<IdentityRecord> &builtin_registry();

// Throws DomainError naming the offending record when a side fails to parse,
// an id repeats, or an order is below 2.
void validate_registry(std::span<const IdentityRecord> records);

// One record per line: id TAB lhs TAB rhs TAB source TAB order (UTF-8).
// Blank lines and lines starting with '#' are skipped.
std::vector<IdentityRecord> parse_registry(std::string_view text);
std::vector<IdentityRecord> load_registry_file(const std::filesystem::path &path);

// Built-in table followed by the records of `extra`; validated as a whole.
std::vector<IdentityRecord> merged_registry(std::span<const IdentityRecord> extra);

} // namespace qseries
