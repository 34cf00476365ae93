#include "dicke/golden.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

std::vector<GoldenRecord> read_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("golden: cannot open " + path);

    std::vector<GoldenRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        GoldenRecord rec;
        std::istringstream ss(line);
        std::string token;
        bool has_value = false;
        while (ss >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos) {
                throw Error("golden: malformed token '" + token + "' in " + path);
            }
            const std::string key = token.substr(0, eq);
            const std::string val = token.substr(eq + 1);
            if (key == "id") {
                rec.id = val;
            } else if (key == "value") {
                const char* first = val.data();
                const char* last = val.data() + val.size();
                const auto res = std::from_chars(first, last, rec.value);
                if (res.ec != std::errc{} || res.ptr != last) {
                    throw Error("golden: bad value '" + val + "' in " + path);
                }
                has_value = true;
            } else {
                rec.meta[key] = val;
            }
        }
        if (rec.id.empty() || !has_value) {
            throw Error("golden: record missing id or value in " + path);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

void write_golden_file(const std::string& path, const std::string& header_comment,
                       const std::vector<GoldenRecord>& records) {
    std::ofstream out(path);
    if (!out) throw Error("golden: cannot write " + path);
    out << "# " << header_comment << "\n";
    out.precision(17);
    for (const GoldenRecord& rec : records) {
        out << "id=" << rec.id << " value=" << rec.value;
        for (const auto& [k, v] : rec.meta) out << ' ' << k << '=' << v;
        out << '\n';
    }
}

const GoldenRecord* find_record(const std::vector<GoldenRecord>& records, const std::string& id) {
    for (const auto& r : records) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

} // namespace dicke
