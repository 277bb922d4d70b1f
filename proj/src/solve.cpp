#include "rotsys/solve.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "rotsys/canonical.hpp"
#include "rotsys/drat.hpp"
#include "rotsys/encode.hpp"

namespace rotsys {
namespace solve {

namespace {

std::vector<bool> extract_model(const sat::Solver& s, int var_count) {
    std::vector<bool> model(var_count + 1, false);
    for (int v = 1; v <= var_count; ++v)
        model[v] = v <= s.num_vars() && s.model_value(v);
    return model;
}

}  // namespace

SolveResult EmbeddedBackend::solve(const CnfInstance& inst, const Budget& budget,
                                   const std::string& proof_path) {
    sat::Solver s;
    std::ofstream proof;
    if (!proof_path.empty()) {
        proof.open(proof_path);
        if (!proof) throw ToolError("cannot open proof file " + proof_path);
        s.set_proof_stream(&proof);
    }
    s.ensure_var(inst.var_count());
    for (const auto& c : inst.clauses()) s.add_clause(c);

    auto t0 = std::chrono::steady_clock::now();
    sat::Result r = s.solve({budget.max_conflicts, budget.max_seconds});
    SolveResult out;
    out.stats.conflicts = s.stats().conflicts;
    out.stats.decisions = s.stats().decisions;
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    switch (r) {
        case sat::Result::Sat:
            out.status = Status::Sat;
            out.model = extract_model(s, inst.var_count());
            break;
        case sat::Result::Unsat:
            out.status = Status::Unsat;
            break;
        default:
            out.status = Status::Limit;
    }
    return out;
}

SolveResult ExternalBackend::solve(const CnfInstance& inst, const Budget&,
                                   const std::string& proof_path) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    fs::path cnf = dir / ("rotsys_ext_" + std::to_string(::getpid()) + ".cnf");
    fs::path out = dir / ("rotsys_ext_" + std::to_string(::getpid()) + ".out");
    write_dimacs_file(inst, cnf.string());

    std::string cmd = command_ + " " + cnf.string();
    if (!proof_path.empty()) cmd += " " + proof_path;
    cmd += " > " + out.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());

    std::ifstream in(out.string());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    fs::remove(cnf);
    fs::remove(out);

    SolveResult result;
    if (text.find("s SATISFIABLE") != std::string::npos) {
        result.status = Status::Sat;
        auto parsed = read_model(text, inst.var_count());
        result.model.assign(inst.var_count() + 1, false);
        for (int v = 1; v <= inst.var_count(); ++v) result.model[v] = parsed[v] > 0;
    } else if (text.find("s UNSATISFIABLE") != std::string::npos) {
        result.status = Status::Unsat;
    } else if (rc != 0 && text.empty()) {
        throw ToolError("external solver failed: " + command_);
    } else {
        result.status = Status::Limit;
    }
    return result;
}

std::unique_ptr<Backend> default_backend() {
    const char* cmd = std::getenv(kEnvSolver);
    if (cmd && *cmd) return std::make_unique<ExternalBackend>(cmd);
    return std::make_unique<EmbeddedBackend>();
}

SolveResult solve_instance(const CnfInstance& inst, const Budget& budget) {
    return default_backend()->solve(inst, budget);
}

void write_dimacs_file(const CnfInstance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ToolError("cannot write " + path);
    inst.write_dimacs(out);
}

void write_varmap_file(const CnfInstance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ToolError("cannot write " + path);
    inst.write_varmap(out);
}

RotationSystem decode(const CnfInstance& inst, const std::vector<bool>& model) {
    int n = inst.n();
    std::vector<std::vector<Vertex>> rows(n, std::vector<Vertex>(n - 1, 0));
    for (Vertex a = 1; a <= n; ++a)
        for (int i = 1; i <= n - 1; ++i) {
            int found = 0;
            for (Vertex b = 1; b <= n; ++b) {
                if (b == a) continue;
                if (model[encode::x_lit(inst, a, i, b)]) {
                    rows[a - 1][i - 1] = b;
                    ++found;
                }
            }
            if (found != 1)
                throw ValidationError("model does not assign exactly one vertex per position");
        }
    return RotationSystem::from_rows(n, std::move(rows));
}

EnumerationReport enumerate_all(
    const CnfInstance& inst, bool canonical_only,
    const std::function<bool(const RotationSystem&, const std::vector<bool>&)>& callback,
    const Budget& per_call_budget) {
    if (canonical_only && inst.meta_value("natural") != "1")
        throw ValidationError("canonical filtering requires the natural-labeling block");

    auto t0 = std::chrono::steady_clock::now();
    sat::Solver s;
    s.ensure_var(inst.var_count());
    for (const auto& c : inst.clauses()) s.add_clause(c);

    EnumerationReport rep;
    while (true) {
        sat::Result r = s.solve({per_call_budget.max_conflicts, per_call_budget.max_seconds});
        if (r == sat::Result::Unsat) break;
        if (r == sat::Result::Unknown) throw ToolError("enumeration hit the solver budget");
        std::vector<bool> model = extract_model(s, inst.var_count());
        RotationSystem rs = decode(inst, model);
        ++rep.total;
        bool keep = !canonical_only || is_canonical(rs);
        if (keep) {
            ++rep.canonical;
            if (!callback(rs, model)) break;
        }
        // Block exactly the X-assignment; the other families are functionally
        // determined by it.
        std::vector<int> blocking;
        for (Vertex a = 1; a <= inst.n(); ++a)
            for (int i = 1; i <= inst.n() - 1; ++i)
                blocking.push_back(-encode::x_lit(inst, a, i, rs.row(a)[i - 1]));
        s.add_clause(blocking);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CertificateReport unsat_certificate(const CnfInstance& inst, const std::string& dir,
                                    const std::string& stem) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    CertificateReport rep;
    rep.cnf_path = (fs::path(dir) / (stem + ".cnf")).string();
    rep.proof_path = (fs::path(dir) / (stem + ".drat")).string();
    write_dimacs_file(inst, rep.cnf_path);

    const char* ext_solver = std::getenv(kEnvSolver);
    SolveResult res;
    if (ext_solver && *ext_solver) {
        ExternalBackend backend(ext_solver);
        res = backend.solve(inst, {}, rep.proof_path);
    } else {
        EmbeddedBackend backend;
        res = backend.solve(inst, {}, rep.proof_path);
    }
    if (res.status == Status::Sat)
        throw ValidationError("instance is satisfiable; nothing to certify");
    if (res.status == Status::Limit) throw ToolError("solver gave up before a verdict");

    const char* ext_checker = std::getenv(kEnvDratChecker);
    if (ext_checker && *ext_checker) {
        std::string cmd = std::string(ext_checker) + " " + rep.cnf_path + " " + rep.proof_path +
                          " > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        rep.verified = rc == 0;
        rep.detail = rep.verified ? "external checker accepted the proof"
                                  : "external checker rejected the proof";
    } else {
        drat::CheckReport chk = drat::check_files(rep.cnf_path, rep.proof_path);
        rep.verified = chk.verified;
        rep.detail = chk.detail;
    }
    return rep;
}

}  // namespace solve
}  // namespace rotsys
