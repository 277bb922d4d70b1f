#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotsys {
namespace drat {

struct CheckReport {
    bool verified = false;
    std::string detail;
    std::size_t steps_checked = 0;
};

/// Forward DRAT check: every addition step must be RUP against the current
/// clause database, or RAT on its first literal; deletions shrink the
/// database. Verification succeeds once the empty clause is derived.
/// Independent of the solver that produced the proof.
CheckReport check(const std::vector<std::vector<int>>& formula, std::istream& proof);

CheckReport check_files(const std::string& cnf_path, const std::string& proof_path);

}  // namespace drat
}  // namespace rotsys
