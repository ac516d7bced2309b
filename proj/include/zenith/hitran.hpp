#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace zenith {

/// One molecular transition, decoded from a 160-character 2004-format record.
///
/// Fixed-width columns (1-based): molecule 1-2, isotopologue 3, line center
/// 4-15, intensity 16-25, Einstein-A 26-35 (ignored), air HWHM 36-40, self
/// HWHM 41-45, lower-state energy 46-55, temperature exponent 56-59, pressure
/// shift 60-67. Columns 68-160 are carried opaquely so records can be
/// re-emitted without loss.
struct LineRecord {
    int molecule_id = 0;
    int isotopologue_id = 0;
    double nu0_cm1 = 0.0;        // line center [cm^-1]
    double s_ref = 0.0;          // intensity at T_ref [cm^-1 / (molecule cm^-2)]
    double gamma_air = 0.0;      // air-broadened HWHM [cm^-1/atm]
    double gamma_self = 0.0;     // self-broadened HWHM [cm^-1/atm]
    double e_lower_cm1 = 0.0;    // lower-state energy [cm^-1]
    double n_air = 0.0;          // temperature exponent of gamma_air
    double delta_air = 0.0;      // pressure shift [cm^-1/atm]
    std::string tail;            // columns 68-160 verbatim (93 chars)

    bool operator==(const LineRecord&) const = default;
};

inline constexpr std::size_t record_width = 160;

/// Parses one record. The row must be exactly 160 characters (line
/// terminators already stripped). Field decoding is locale-independent;
/// all-blank numeric fields read as zero where the format allows it.
LineRecord parse_record(std::string_view row);

/// Renders a record back into the fixed-width layout. parse_record of the
/// result reproduces the record field-for-field.
std::string format_record(const LineRecord& rec);

struct LineList {
    std::vector<LineRecord> records;  // sorted ascending by nu0, input-stable
    std::size_t kept = 0;
    std::size_t dropped = 0;        // filtered out (molecule/window/strength)
    std::size_t skipped_rows = 0;   // unparsable rows tolerated in lenient mode
};

struct LineFilter {
    int molecule_id = 1;
    double nu_lo_cm1 = 0.0;
    double nu_hi_cm1 = 0.0;
    double strength_floor = 1e-28;  // drop weaker lines; 0 disables
    double window_pad_cm1 = 25.0;   // wing cutoff padding around the window
    bool lenient = false;           // skip-and-count instead of failing
};

/// Streams records, keeping those that match the filter. In strict mode the
/// first unparsable row raises a ParseError with its 1-based line number.
LineList load_line_list(std::istream& in, const LineFilter& filter,
                        const std::string& source_name = "line list");

}  // namespace zenith
