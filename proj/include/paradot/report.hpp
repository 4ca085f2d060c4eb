#pragma once

#include <deque>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace paradot
{
using Json = nlohmann::ordered_json;

//! Column-labelled table; cells are JSON scalars.
struct Table
{
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;

    void add_row(std::vector<Json> row);
};

/*!
 * Deterministic experiment output.
 *
 * The first table is the primary one; its header row opens the CSV form.
 * Summary entries follow as "# key=value" lines.
 */
struct Report
{
    std::string command;
    std::deque<Table> tables;
    std::vector<std::pair<std::string, Json>> summary;
    bool passed = true;

    Table& table(std::string name, std::vector<std::string> columns);
    void note(std::string key, Json value);
    //! Record a named check; a false outcome fails the report.
    void check(std::string key, bool ok);
};

enum class ReportFormat
{
    csv,
    json,
};

//! Shortest round-trip text for a double, fixed across platforms.
std::string format_number(double value);

void write_report(Report const& report, ReportFormat format, std::ostream& out);

}  // namespace paradot
