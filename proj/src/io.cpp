#include "cexkit/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cexkit {

using json = nlohmann::ordered_json;

namespace {

json scalar_json(const Rat& q) { return rat_to_string(q); }

Rat scalar_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    throw FormatError("scalar entries must be strings like \"num/den\"");
}

json parse(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw FormatError("malformed document (not valid JSON)");
    return j;
}

} // namespace

std::string algebra_to_text(const Algebra& a)
{
    json j;
    j["dim"] = a.dim();
    j["table"] = json::array();
    for (const auto& [ijk, c] : a.table())
        j["table"].push_back(json::array({ijk[0], ijk[1], ijk[2], scalar_json(c)}));
    return j.dump(2) + "\n";
}

Algebra algebra_from_text(const std::string& text)
{
    const json j = parse(text);
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw FormatError("algebra document needs an integer 'dim'");
    Algebra a(j["dim"].get<int>());
    if (j.contains("table")) {
        if (!j["table"].is_array())
            throw FormatError("'table' must be a list of [i, j, k, scalar]");
        for (const auto& row : j["table"]) {
            if (!row.is_array() || row.size() != 4)
                throw FormatError("table entries must be [i, j, k, scalar]");
            try {
                a.set(row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                      scalar_from_json(row[3]));
            } catch (const std::invalid_argument& e) {
                throw FormatError(std::string("bad table entry: ") + e.what());
            }
        }
    }
    return a;
}

std::string cocycle_to_text(const Cocycle& c)
{
    json j;
    j["dim"] = c.source_dim;
    j["components"] = json::array();
    for (const auto& comp : c.components) {
        json entries = json::array();
        for (int i = 0; i < comp.rows(); ++i)
            for (int k = 0; k < comp.cols(); ++k)
                if (sgn(comp.at(i, k)) != 0)
                    entries.push_back(json::array({i + 1, k + 1, scalar_json(comp.at(i, k))}));
        j["components"].push_back(entries);
    }
    return j.dump(2) + "\n";
}

Cocycle cocycle_from_text(const std::string& text)
{
    const json j = parse(text);
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw FormatError("cocycle document needs an integer 'dim'");
    Cocycle c;
    c.source_dim = j["dim"].get<int>();
    if (c.source_dim < 0)
        throw FormatError("cocycle 'dim' must be nonnegative");
    if (!j.contains("components") || !j["components"].is_array())
        throw FormatError("cocycle document needs a 'components' list");
    for (const auto& comp : j["components"]) {
        BilinearForm m(c.source_dim, c.source_dim);
        if (!comp.is_array())
            throw FormatError("each component must be a list of [i, j, scalar]");
        for (const auto& row : comp) {
            if (!row.is_array() || row.size() != 3)
                throw FormatError("component entries must be [i, j, scalar]");
            const int i = row[0].get<int>(), k = row[1].get<int>();
            if (i < 1 || i > c.source_dim || k < 1 || k > c.source_dim)
                throw FormatError("component index out of range");
            m.at(i - 1, k - 1) = scalar_from_json(row[2]);
        }
        c.components.push_back(std::move(m));
    }
    return c;
}

std::string matrix_to_text(const Mat& m)
{
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k)
            row.push_back(scalar_json(m.at(i, k)));
        j["entries"].push_back(row);
    }
    return j.dump(2) + "\n";
}

Mat matrix_from_text(const std::string& text)
{
    const json j = parse(text);
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw FormatError("matrix document needs 'rows', 'cols', 'entries'");
    Mat m(j["rows"].get<int>(), j["cols"].get<int>());
    const auto& entries = j["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != m.rows())
        throw FormatError("matrix 'entries' row count mismatch");
    for (int i = 0; i < m.rows(); ++i) {
        if (!entries[i].is_array() || static_cast<int>(entries[i].size()) != m.cols())
            throw FormatError("matrix 'entries' column count mismatch");
        for (int k = 0; k < m.cols(); ++k)
            m.at(i, k) = scalar_from_json(entries[i][k]);
    }
    return m;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write file '" + path + "'");
    out << content;
}

Algebra load_algebra_arg(const std::string& arg)
{
    // Catalog specs contain ':'; treat anything else (or a parse failure
    // mentioning an existing file) as a path.
    if (arg.find(':') != std::string::npos) {
        try {
            return make_algebra(parse_family_spec(arg));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("bad catalog spec '") + arg + "': " + e.what());
        }
    }
    return algebra_from_text(read_file(arg));
}

} // namespace cexkit
