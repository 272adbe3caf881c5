#include "portes/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "portes/errors.hpp"

namespace portes {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

}  // namespace

std::string format_table(const TestReport& rep) {
    const bool with_df = rep.mode == PvalueMode::Asymptotic;
    std::vector<std::vector<std::string>> cells;
    for (const TestRow& r : rep.rows) {
        std::vector<std::string> row;
        row.push_back(std::to_string(r.lag));
        row.push_back(fixed(r.statistic, 6));
        if (with_df) row.push_back(fixed(std::max(r.df.value_or(0.0), 0.0), 7));
        row.push_back(r.pvalue ? fixed(*r.pvalue, 9) : "NA");
        cells.push_back(std::move(row));
    }
    std::vector<std::string> head{"lags", "statistic"};
    if (with_df) head.push_back("df");
    head.push_back("p-value");

    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        width[c] = head[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << ' ' << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << '\n';
    };
    emit(head);
    for (const auto& row : cells) emit(row);
    return out.str();
}

std::string format_json(const TestReport& rep) {
    nlohmann::ordered_json j;
    j["method"] = rep.method;
    j["mode"] = rep.mode == PvalueMode::MonteCarlo ? "montecarlo" : "asymptotic";
    if (rep.nrep) j["nrep"] = *rep.nrep;
    if (rep.seed) j["seed"] = *rep.seed;
    j["rows"] = nlohmann::ordered_json::array();
    for (const TestRow& r : rep.rows) {
        nlohmann::ordered_json row;
        row["lag"] = r.lag;
        row["statistic"] = r.statistic;
        if (r.df) row["df"] = *r.df;
        row["pvalue"] = r.pvalue ? nlohmann::ordered_json(*r.pvalue)
                                 : nlohmann::ordered_json(nullptr);
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

SeriesMatrix read_csv(std::istream& in, bool header) {
    std::vector<double> values;
    std::size_t k = 0;
    std::size_t line_no = 0;
    std::string line;
    bool skip = header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (skip) {
            skip = false;
            continue;
        }
        std::vector<double> row;
        std::size_t pos = 0;
        std::size_t col = 0;
        while (pos <= line.size()) {
            ++col;
            std::string field;
            if (pos < line.size() && line[pos] == '"') {
                // quoted field per RFC 4180
                ++pos;
                while (pos < line.size()) {
                    if (line[pos] == '"') {
                        if (pos + 1 < line.size() && line[pos + 1] == '"') {
                            field += '"';
                            pos += 2;
                        } else {
                            ++pos;
                            break;
                        }
                    } else {
                        field += line[pos++];
                    }
                }
                if (pos < line.size() && line[pos] == ',') ++pos;
                else pos = line.size() + 1;
            } else {
                const std::size_t comma = line.find(',', pos);
                if (comma == std::string::npos) {
                    field = line.substr(pos);
                    pos = line.size() + 1;
                } else {
                    field = line.substr(pos, comma - pos);
                    pos = comma + 1;
                }
            }
            try {
                std::size_t used = 0;
                const double v = std::stod(field, &used);
                while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
                    ++used;
                if (used != field.size()) throw std::invalid_argument(field);
                row.push_back(v);
            } catch (const std::exception&) {
                throw DomainError("csv parse error at row " + std::to_string(line_no) +
                                  ", column " + std::to_string(col) + ": '" + field + "'");
            }
        }
        if (k == 0) k = row.size();
        if (row.size() != k)
            throw DomainError("csv parse error at row " + std::to_string(line_no) +
                              ": expected " + std::to_string(k) + " columns, got " +
                              std::to_string(row.size()));
        values.insert(values.end(), row.begin(), row.end());
    }
    if (values.empty()) throw DomainError("csv input contains no data rows");
    return SeriesMatrix(Matrix(values.size() / k, k, std::move(values)));
}

void write_csv(std::ostream& out, const SeriesMatrix& z, bool header) {
    if (header) {
        for (std::size_t i = 0; i < z.k(); ++i) out << (i ? "," : "") << 'V' << (i + 1);
        out << '\n';
    }
    char buf[64];
    for (std::size_t t = 0; t < z.n(); ++t) {
        for (std::size_t i = 0; i < z.k(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", z(t, i));
            out << (i ? "," : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace portes
