#include "volclust/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "volclust/errors.hpp"
#include "volclust/output.hpp"

namespace volclust {

namespace {

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

double parse_close(std::string_view field, std::size_t line_no) {
    if (field.empty()) throw ParseError("blank close field", line_no);
    double value = 0.0;
    const auto* begin = field.data();
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("malformed close '" + std::string(field) + "'", line_no);
    }
    return value;
}

}  // namespace

PriceSeries parse_price_csv(std::string_view text, std::string symbol) {
    std::vector<PriceObservation> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header_seen = false;

    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = strip_cr(
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (!header_seen) {
            if (line != "date,close") {
                throw ParseError("expected header 'date,close', got '" + std::string(line) + "'",
                                 line_no);
            }
            header_seen = true;
            continue;
        }
        if (line.empty()) {
            // A trailing newline is fine; a blank row in the middle is not.
            if (pos <= text.size()) throw ParseError("blank row", line_no);
            break;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError("expected exactly two fields 'date,close'", line_no);
        }
        Date date;
        try {
            date = Date::parse(line.substr(0, comma));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        const double close = parse_close(line.substr(comma + 1), line_no);
        if (!(close > 0.0)) {
            throw ParseError("non-positive close " + std::string(line.substr(comma + 1)), line_no);
        }
        rows.push_back(PriceObservation{date, close});
    }

    if (rows.size() < 2) {
        throw ParseError("price series needs at least 2 rows, got " + std::to_string(rows.size()));
    }
    return PriceSeries(std::move(symbol), std::move(rows));
}

PriceSeries load_price_csv(const std::filesystem::path& file, std::string symbol) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_price_csv(buf.str(), std::move(symbol));
}

std::string to_price_csv(const PriceSeries& series) {
    std::string out = "date,close\n";
    for (const auto& obs : series.observations()) {
        out += obs.date.to_string();
        out += ',';
        out += format_double(obs.close);
        out += '\n';
    }
    return out;
}

std::string to_return_csv(const ReturnSeries& series) {
    std::string out = "date,value\n";
    for (const auto& obs : series.observations()) {
        out += obs.date.to_string();
        out += ',';
        out += format_double(obs.value);
        out += '\n';
    }
    return out;
}

}  // namespace volclust
