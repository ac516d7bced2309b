#include "zenith/hitran.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <string>

#include "zenith/errors.hpp"

namespace zenith {
namespace {

// 0-based [begin, end) column spans of the 2004 fixed-width layout.
struct Span {
    std::size_t begin, end;
    const char* name;
};
constexpr Span col_molecule{0, 2, "molecule"};
constexpr Span col_isotopologue{2, 3, "isotopologue"};
constexpr Span col_nu0{3, 15, "nu0"};
constexpr Span col_s{15, 25, "intensity"};
constexpr Span col_gamma_air{35, 40, "gamma_air"};
constexpr Span col_gamma_self{40, 45, "gamma_self"};
constexpr Span col_e_lower{45, 55, "e_lower"};
constexpr Span col_n_air{55, 59, "n_air"};
constexpr Span col_delta_air{59, 67, "delta_air"};
constexpr std::size_t tail_begin = 67;

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

[[noreturn]] void field_error(const Span& span, std::string_view content) {
    throw ParseError("record", 0,
                     "columns " + std::to_string(span.begin + 1) + "-" +
                         std::to_string(span.end) + " (" + span.name +
                         "): not a number: '" + std::string(content) + "'");
}

// Fortran-style fields: sign may be glued to a bare decimal point, blanks
// read as zero. Locale-independent via from_chars.
double read_double(std::string_view row, const Span& span) {
    std::string_view field = trim(row.substr(span.begin, span.end - span.begin));
    if (field.empty()) return 0.0;

    std::string buf;
    std::string_view body = field;
    if (body.front() == '+') body.remove_prefix(1);
    if (!body.empty() && body.front() == '.') {
        buf = (field.front() == '-') ? "-0" : "0";
        buf.append(body);
    } else if (!body.empty() && body.size() >= 2 && body[0] == '-' && body[1] == '.') {
        buf = "-0";
        buf.append(body.substr(1));
    } else {
        buf.assign(body);
        if (field.front() == '-' && buf.front() != '-') buf.insert(buf.begin(), '-');
    }

    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{} || ptr != buf.data() + buf.size()) field_error(span, field);
    return value;
}

int read_int(std::string_view row, const Span& span) {
    const std::string_view field = trim(row.substr(span.begin, span.end - span.begin));
    if (field.empty()) return 0;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) field_error(span, field);
    return value;
}

// Fortran F-edit rendering: drop the leading zero of |v| < 1 when the
// value would not otherwise fit the field width.
std::string fixed_field(double value, int width, int precision, const Span& span) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%*.*f", width, precision, value);
    std::string s(buf);
    if (s.size() > static_cast<std::size_t>(width)) {
        if (s.rfind("0.", 0) == 0)
            s.erase(0, 1);
        else if (s.rfind("-0.", 0) == 0)
            s.erase(1, 1);
    }
    if (s.size() > static_cast<std::size_t>(width))
        throw DomainError(std::string(span.name) + " value " + std::to_string(value) +
                          " does not fit a " + std::to_string(width) + "-wide field");
    if (s.size() < static_cast<std::size_t>(width))
        s.insert(0, static_cast<std::size_t>(width) - s.size(), ' ');
    return s;
}

void validate(const LineRecord& rec) {
    if (!(rec.nu0_cm1 > 0.0))
        throw ParseError("record", 0, "validation: nu0 must be positive, got " +
                                          std::to_string(rec.nu0_cm1));
    if (rec.s_ref < 0.0) throw ParseError("record", 0, "validation: negative intensity");
    if (!(rec.gamma_air > 0.0))
        throw ParseError("record", 0, "validation: gamma_air must be positive");
    if (rec.gamma_self < 0.0)
        throw ParseError("record", 0, "validation: negative gamma_self");
    if (rec.e_lower_cm1 < 0.0)
        throw ParseError("record", 0, "validation: negative lower-state energy");
}

}  // namespace

LineRecord parse_record(std::string_view row) {
    if (row.size() != record_width)
        throw ParseError("record", 0,
                         "format: expected " + std::to_string(record_width) +
                             " characters, got " + std::to_string(row.size()));

    LineRecord rec;
    rec.molecule_id = read_int(row, col_molecule);
    rec.isotopologue_id = read_int(row, col_isotopologue);
    rec.nu0_cm1 = read_double(row, col_nu0);
    rec.s_ref = read_double(row, col_s);
    rec.gamma_air = read_double(row, col_gamma_air);
    rec.gamma_self = read_double(row, col_gamma_self);
    rec.e_lower_cm1 = read_double(row, col_e_lower);
    rec.n_air = read_double(row, col_n_air);
    rec.delta_air = read_double(row, col_delta_air);
    rec.tail = std::string(row.substr(tail_begin));
    validate(rec);
    return rec;
}

std::string format_record(const LineRecord& rec) {
    char head[8];
    std::snprintf(head, sizeof head, "%2d%1d", rec.molecule_id, rec.isotopologue_id);

    char sci[16];
    std::snprintf(sci, sizeof sci, "%10.3E", rec.s_ref);

    std::string row(head);
    row += fixed_field(rec.nu0_cm1, 12, 6, col_nu0);
    row += sci;
    row.append(10, ' ');  // Einstein-A column, not modeled
    row += fixed_field(rec.gamma_air, 5, 4, col_gamma_air);
    row += fixed_field(rec.gamma_self, 5, 3, col_gamma_self);
    row += fixed_field(rec.e_lower_cm1, 10, 4, col_e_lower);
    row += fixed_field(rec.n_air, 4, 2, col_n_air);
    row += fixed_field(rec.delta_air, 8, 6, col_delta_air);

    std::string tail = rec.tail;
    tail.resize(record_width - tail_begin, ' ');
    row += tail;
    return row;
}

LineList load_line_list(std::istream& in, const LineFilter& filter,
                        const std::string& source_name) {
    if (!(filter.nu_lo_cm1 <= filter.nu_hi_cm1))
        throw DomainError("line filter window is inverted");
    if (filter.strength_floor < 0.0)
        throw DomainError("strength floor must be non-negative");

    const double lo = filter.nu_lo_cm1 - filter.window_pad_cm1;
    const double hi = filter.nu_hi_cm1 + filter.window_pad_cm1;

    LineList list;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.find_first_not_of(" \t") == std::string::npos) continue;

        LineRecord rec;
        try {
            rec = parse_record(raw);
        } catch (const ParseError& err) {
            if (filter.lenient) {
                ++list.skipped_rows;
                continue;
            }
            throw ParseError(source_name, line_no, err.what());
        }

        if (rec.molecule_id != filter.molecule_id || rec.nu0_cm1 < lo ||
            rec.nu0_cm1 > hi || rec.s_ref < filter.strength_floor) {
            ++list.dropped;
            continue;
        }
        list.records.push_back(std::move(rec));
    }

    std::stable_sort(list.records.begin(), list.records.end(),
                     [](const LineRecord& a, const LineRecord& b) {
                         return a.nu0_cm1 < b.nu0_cm1;
                     });
    list.kept = list.records.size();
    return list;
}

}  // namespace zenith
