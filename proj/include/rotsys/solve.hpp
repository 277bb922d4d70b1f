#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "rotsys/cnf.hpp"
#include "rotsys/rotation_system.hpp"
#include "rotsys/sat_solver.hpp"

namespace rotsys {
namespace solve {

enum class Status { Sat, Unsat, Limit };

struct SolveStats {
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    double seconds = 0;
};

struct SolveResult {
    Status status = Status::Limit;
    // Polarity per registered variable (index 0 unused), present iff sat.
    std::vector<bool> model;
    SolveStats stats;
};

struct Budget {
    std::int64_t max_conflicts = -1;
    double max_seconds = -1;
};

/// Solver backend behind a common interface: the embedded incremental CDCL
/// solver, or an external DIMACS process selected via environment variables.
class Backend {
  public:
    virtual ~Backend() = default;
    virtual SolveResult solve(const CnfInstance& inst, const Budget& budget,
                              const std::string& proof_path = "") = 0;
};

class EmbeddedBackend : public Backend {
  public:
    SolveResult solve(const CnfInstance& inst, const Budget& budget,
                      const std::string& proof_path = "") override;
};

/// Runs "$cmd cnf-file proof-file" and parses the s/v output lines.
class ExternalBackend : public Backend {
  public:
    explicit ExternalBackend(std::string command) : command_(std::move(command)) {}
    SolveResult solve(const CnfInstance& inst, const Budget& budget,
                      const std::string& proof_path = "") override;

  private:
    std::string command_;
};

// Environment variable names for the external tool hookup.
inline constexpr const char* kEnvSolver = "ROTSYS_EXT_SOLVER";
inline constexpr const char* kEnvDratChecker = "ROTSYS_EXT_DRAT_CHECKER";

// External backend if ROTSYS_EXT_SOLVER is set, otherwise the embedded one.
std::unique_ptr<Backend> default_backend();

SolveResult solve_instance(const CnfInstance& inst, const Budget& budget = {});

void write_dimacs_file(const CnfInstance& inst, const std::string& path);
void write_varmap_file(const CnfInstance& inst, const std::string& path);

// Rows read off the true X literals; validated.
RotationSystem decode(const CnfInstance& inst, const std::vector<bool>& model);

struct EnumerationReport {
    std::uint64_t total = 0;      // decoded solutions
    std::uint64_t canonical = 0;  // survivors of the canonical filter
    double seconds = 0;
};

/// All-solutions loop: solve, decode, optionally filter on canonicity, invoke
/// the callback, block the X-assignment, repeat until unsat. The callback may
/// return false to stop early.
EnumerationReport enumerate_all(
    const CnfInstance& inst, bool canonical_only,
    const std::function<bool(const RotationSystem&, const std::vector<bool>&)>& callback,
    const Budget& per_call_budget = {});

struct CertificateReport {
    bool verified = false;
    std::string cnf_path;
    std::string proof_path;
    std::string detail;
};

/// Writes the instance and a DRAT proof of its unsatisfiability, then runs an
/// independent check. Uses the embedded proof-emitting solver and checker
/// unless external tools are configured in the environment. Throws ToolError
/// if a configured tool is missing and ValidationError if the instance is
/// satisfiable.
CertificateReport unsat_certificate(const CnfInstance& inst, const std::string& dir,
                                    const std::string& stem);

}  // namespace solve
}  // namespace rotsys
