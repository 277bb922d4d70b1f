#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rotsys/rotation_system.hpp"

namespace rotsys {

// One JSON object per line: {"n": int, "rows": [[...],...]} with an optional
// "name". Unnormalized rows are accepted and normalized on read.

void write_corpus_record(std::ostream& out, const RotationSystem& rs,
                         const std::string& name = "");

void read_corpus(std::istream& in,
                 const std::function<void(RotationSystem, const std::string&)>& fn);

std::vector<RotationSystem> read_corpus_file(const std::string& path);
void write_corpus_file(const std::string& path, const std::vector<RotationSystem>& systems);

}  // namespace rotsys
