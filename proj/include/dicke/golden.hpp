// golden.hpp — Flat-text golden-value records pinned from the oracles.
//
// One record per line, whitespace-separated key=value tokens; `id` and `value`
// are required, everything else is provenance (parameters, cutoffs,
// convergence estimates). Lines starting with '#' are comments.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace dicke {

struct GoldenRecord {
    std::string id;
    double value = 0.0;
    std::map<std::string, std::string> meta;
};

std::vector<GoldenRecord> read_golden_file(const std::string& path);
void write_golden_file(const std::string& path, const std::string& header_comment,
                       const std::vector<GoldenRecord>& records);

// nullptr when the id is absent.
const GoldenRecord* find_record(const std::vector<GoldenRecord>& records, const std::string& id);

} // namespace dicke
