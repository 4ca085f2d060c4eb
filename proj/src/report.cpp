#include "paradot/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "paradot/errors.hpp"

namespace paradot
{
void Table::add_row(std::vector<Json> row)
{
    if (row.size() != columns.size())
        throw DimensionMismatch("row width does not match table '" + name + "'");
    rows.push_back(std::move(row));
}

Table& Report::table(std::string name, std::vector<std::string> columns)
{
    tables.push_back(Table{std::move(name), std::move(columns), {}});
    return tables.back();
}

void Report::note(std::string key, Json value)
{
    summary.emplace_back(std::move(key), std::move(value));
}

void Report::check(std::string key, bool ok)
{
    summary.emplace_back(std::move(key), ok ? "pass" : "fail");
    passed = passed && ok;
}

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto const res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace
{
std::string csv_cell(Json const& v)
{
    if (v.is_number_float())
        return format_number(v.get<double>());
    if (v.is_string())
    {
        auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string quoted = "\"";
        for (char c : s)
        {
            if (c == '"')
                quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    if (v.is_array())
    {
        std::string joined;
        for (auto const& item : v)
        {
            if (!joined.empty())
                joined += ' ';
            joined += csv_cell(item);
        }
        return joined;
    }
    return v.dump();
}

void write_table(Table const& t, std::ostream& out)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (auto const& row : t.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
}

// JSON has no literal for non-finite doubles; spell them as in the CSV form.
Json normalize(Json const& v)
{
    if (v.is_number_float() && !std::isfinite(v.get<double>()))
        return format_number(v.get<double>());
    if (v.is_array())
    {
        Json out = Json::array();
        for (auto const& item : v)
            out.push_back(normalize(item));
        return out;
    }
    return v;
}
}  // namespace

void write_report(Report const& report, ReportFormat format, std::ostream& out)
{
    if (format == ReportFormat::csv)
    {
        for (std::size_t i = 0; i < report.tables.size(); ++i)
        {
            if (i > 0)
                out << "# table=" << report.tables[i].name << '\n';
            write_table(report.tables[i], out);
        }
        out << "# command=" << report.command << '\n';
        for (auto const& [key, value] : report.summary)
            out << "# " << key << '=' << csv_cell(value) << '\n';
        out << "# status=" << (report.passed ? "pass" : "fail") << '\n';
        return;
    }

    Json doc;
    doc["command"] = report.command;
    Json tables = Json::array();
    for (auto const& t : report.tables)
    {
        Json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        Json rows = Json::array();
        for (auto const& row : t.rows)
        {
            Json r = Json::array();
            for (auto const& cell : row)
                r.push_back(normalize(cell));
            rows.push_back(std::move(r));
        }
        jt["rows"] = std::move(rows);
        tables.push_back(std::move(jt));
    }
    doc["tables"] = std::move(tables);
    Json summary = Json::object();
    for (auto const& [key, value] : report.summary)
        summary[key] = normalize(value);
    doc["summary"] = std::move(summary);
    doc["status"] = report.passed ? "pass" : "fail";
    out << doc.dump(2) << '\n';
}

}  // namespace paradot
