#include "rotsys/corpus_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace rotsys {

void write_corpus_record(std::ostream& out, const RotationSystem& rs, const std::string& name) {
    nlohmann::json rec;
    if (!name.empty()) rec["name"] = name;
    rec["n"] = rs.n();
    rec["rows"] = rs.rows();
    out << rec.dump() << "\n";
}

void read_corpus(std::istream& in,
                 const std::function<void(RotationSystem, const std::string&)>& fn) {
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
        int n = rec.at("n").get<int>();
        auto rows = rec.at("rows").get<std::vector<std::vector<Vertex>>>();
        std::string name = rec.value("name", "");
        fn(RotationSystem::from_rows(n, std::move(rows)), name);
    }
}

std::vector<RotationSystem> read_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ToolError("cannot open corpus file " + path);
    std::vector<RotationSystem> out;
    read_corpus(in, [&](RotationSystem rs, const std::string&) { out.push_back(std::move(rs)); });
    return out;
}

void write_corpus_file(const std::string& path, const std::vector<RotationSystem>& systems) {
    std::ofstream out(path);
    if (!out) throw ToolError("cannot open corpus file " + path + " for writing");
    for (const auto& rs : systems) write_corpus_record(out, rs);
}

}  // namespace rotsys
