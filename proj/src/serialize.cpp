#include "su3coh/serialize.hpp"

#include <sstream>

namespace su3coh {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& s) {
    if (s == "markdown") return OutputFormat::Markdown;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw ParseError("unknown output format '" + s + "'");
}

json to_json(const CountTable& t) {
    json named = json::array();
    for (const auto& ex : t.named_examples)
        named.push_back({{"row", ex.row}, {"col", ex.col}, {"name", ex.name}});
    return {{"table_id", t.id},
            {"caption", t.caption},
            {"row_labels", t.row_labels},
            {"col_labels", t.col_labels},
            {"cells", t.cells},
            {"named_examples", named}};
}

json to_json(const InfoTable& t) {
    return {{"table_id", t.id},
            {"caption", t.caption},
            {"row_labels", t.row_labels},
            {"col_labels", t.col_labels},
            {"cells", t.cells},
            {"named_examples", json::array()}};
}

json to_json(const TableSet& t) {
    return json::array({to_json(t.slice_table), to_json(t.connected), to_json(t.torus),
                        to_json(t.quotient)});
}

json to_json(const VerificationReport& r) {
    return {{"check_name", r.check_name},
            {"samples", r.samples},
            {"max_deviation", r.max_deviation},
            {"tolerance", r.tolerance},
            {"passed", r.passed}};
}

json to_json(const std::vector<VerificationReport>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(to_json(r));
    return out;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <typename Cell>
void render_csv_block(std::ostringstream& out, const std::string& id,
                      const std::vector<std::string>& rows,
                      const std::vector<std::string>& cols,
                      const std::vector<std::vector<Cell>>& cells) {
    out << csv_quote(id);
    for (const auto& c : cols) out << "," << csv_quote(c);
    out << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        out << csv_quote(rows[i]);
        for (size_t j = 0; j < cols.size(); ++j) {
            out << ",";
            if constexpr (std::is_same_v<Cell, int>)
                out << cells[i][j];
            else
                out << csv_quote(cells[i][j]);
        }
        out << "\n";
    }
}

void render_csv_named(std::ostringstream& out, const CountTable& t) {
    if (t.named_examples.empty()) return;
    out << "named-examples,row,col,name\n";
    for (const auto& ex : t.named_examples)
        out << "," << csv_quote(ex.row) << "," << csv_quote(ex.col) << ","
            << csv_quote(ex.name) << "\n";
}

template <typename Cell>
void render_md_block(std::ostringstream& out, const std::string& caption,
                     const std::vector<std::string>& rows,
                     const std::vector<std::string>& cols,
                     const std::vector<std::vector<Cell>>& cells) {
    out << "### " << caption << "\n\n";
    if (rows.empty()) {
        out << "(empty within this bound)\n\n";
        return;
    }
    out << "| |";
    for (const auto& c : cols) out << " " << c << " |";
    out << "\n|---|";
    for (size_t j = 0; j < cols.size(); ++j) out << "---|";
    out << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        out << "| " << rows[i] << " |";
        for (size_t j = 0; j < cols.size(); ++j) {
            out << " ";
            if constexpr (std::is_same_v<Cell, int>)
                out << cells[i][j];
            else
                out << cells[i][j];
            out << " |";
        }
        out << "\n";
    }
    out << "\n";
}

void render_md_named(std::ostringstream& out, const CountTable& t) {
    if (t.named_examples.empty()) return;
    for (const auto& ex : t.named_examples)
        out << "- (" << ex.row << ", " << ex.col << "): " << ex.name << "\n";
    out << "\n";
}

} // namespace

std::string render(const TableSet& t, OutputFormat f) {
    if (f == OutputFormat::Json) return to_json(t).dump(2) + "\n";
    std::ostringstream out;
    if (f == OutputFormat::Csv) {
        render_csv_block(out, t.slice_table.id, t.slice_table.row_labels,
                         t.slice_table.col_labels, t.slice_table.cells);
        for (const CountTable* ct : {&t.connected, &t.torus, &t.quotient}) {
            out << "\n";
            render_csv_block(out, ct->id, ct->row_labels, ct->col_labels, ct->cells);
            render_csv_named(out, *ct);
        }
        return out.str();
    }
    render_md_block(out, t.slice_table.caption, t.slice_table.row_labels,
                    t.slice_table.col_labels, t.slice_table.cells);
    for (const CountTable* ct : {&t.connected, &t.torus, &t.quotient}) {
        render_md_block(out, ct->caption, ct->row_labels, ct->col_labels, ct->cells);
        render_md_named(out, *ct);
    }
    return out.str();
}

std::string render_reports(const std::vector<VerificationReport>& rs, OutputFormat f,
                           unsigned long long seed) {
    if (f == OutputFormat::Json) {
        json out = {{"seed", seed}, {"reports", to_json(rs)}};
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    if (f == OutputFormat::Csv) {
        out << "check_name,samples,max_deviation,tolerance,passed\n";
        for (const auto& r : rs)
            out << csv_quote(r.check_name) << "," << r.samples << "," << r.max_deviation
                << "," << r.tolerance << "," << (r.passed ? "true" : "false") << "\n";
        out << "seed," << seed << "\n";
        return out.str();
    }
    out << "seed: " << seed << "\n\n";
    out << "| check | samples | max deviation | tolerance | result |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& r : rs) {
        std::ostringstream dev;
        dev.precision(3);
        dev << std::scientific << r.max_deviation << " | " << r.tolerance;
        out << "| " << r.check_name << " | " << r.samples << " | " << dev.str() << " | "
            << (r.passed ? "pass" : "FAIL") << " |\n";
    }
    return out.str();
}

} // namespace su3coh
