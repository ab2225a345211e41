// Command line front end. All computation happens behind the C API in
// libvoa; this file only maps flags onto task descriptions.

#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "voa.h"

using nlohmann::json;

namespace {

struct SubState {
    std::string format = "text";
    std::string algebra;
    std::string builtin;
    json task;
    std::vector<std::function<void(json&)>> fills;
};

int run_task(SubState& st) {
    json task = st.task;
    for (auto& f : st.fills) f(task);
    task["format"] = st.format;
    if (!st.algebra.empty()) task["algebra"] = st.algebra;
    if (!st.builtin.empty()) task["builtin"] = st.builtin;
    int code = 0;
    char* out = voa_run_task(task.dump().c_str(), &code);
    if (!out) {
        std::fprintf(stderr, "error: %s\n", voa_last_error());
        return 2;
    }
    std::fputs(out, stdout);
    voa_string_free(out);
    return code;
}

struct Cli {
    CLI::App app{"exact vertex algebra computations over the rationals"};
    int exit_code = 0;

    std::pair<CLI::App*, std::shared_ptr<SubState>> sub(const std::string& name,
                                                        const std::string& desc,
                                                        bool needs_algebra) {
        auto* cmd = app.add_subcommand(name, desc);
        auto st = std::make_shared<SubState>();
        st->task["cmd"] = name;
        cmd->add_option("--format", st->format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (needs_algebra) {
            cmd->add_option("--algebra", st->algebra, "algebra spec file (JSON)");
            cmd->add_option("--builtin", st->builtin, "builtin algebra name, e.g. heisenberg:1");
        }
        cmd->callback([this, st]() { exit_code = run_task(*st); });
        return {cmd, st};
    }

    static CLI::Option* opt_str(CLI::App* cmd, const std::shared_ptr<SubState>& st,
                                const std::string& flag, const std::string& key,
                                const std::string& desc) {
        auto holder = std::make_shared<std::string>();
        CLI::Option* o = cmd->add_option(flag, *holder, desc);
        st->fills.push_back([holder, key, o](json& t) {
            if (o->count()) t[key] = *holder;
        });
        return o;
    }

    static CLI::Option* opt_int(CLI::App* cmd, const std::shared_ptr<SubState>& st,
                                const std::string& flag, const std::string& key,
                                const std::string& desc) {
        auto holder = std::make_shared<long>(0);
        CLI::Option* o = cmd->add_option(flag, *holder, desc);
        st->fills.push_back([holder, key, o](json& t) {
            if (o->count()) t[key] = *holder;
        });
        return o;
    }

    static void opt_flag(CLI::App* cmd, const std::shared_ptr<SubState>& st,
                         const std::string& flag, const std::string& key,
                         const std::string& desc) {
        auto holder = std::make_shared<bool>(false);
        CLI::Option* o = cmd->add_flag(flag, *holder, desc);
        st->fills.push_back([holder, key, o](json& t) {
            if (o->count()) t[key] = *holder;
        });
    }
};

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    cli.app.require_subcommand(1);

    {
        auto [cmd, st] = cli.sub("ope", "n-th product of two state expressions", true);
        Cli::opt_str(cmd, st, "--a", "a", "left state expression")->required();
        Cli::opt_str(cmd, st, "--b", "b", "right state expression")->required();
        Cli::opt_int(cmd, st, "--n", "n", "product index (default -1)");
    }
    {
        auto [cmd, st] = cli.sub("wick", "normally ordered product", true);
        Cli::opt_str(cmd, st, "--a", "a", "left state")->required();
        Cli::opt_str(cmd, st, "--b", "b", "right state")->required();
    }
    {
        auto [cmd, st] = cli.sub("identities", "verify the five structural identities", true);
        Cli::opt_str(cmd, st, "--a", "a", "first state")->required();
        Cli::opt_str(cmd, st, "--b", "b", "second state")->required();
        Cli::opt_str(cmd, st, "--c", "c", "third state")->required();
        Cli::opt_int(cmd, st, "--nmax", "nmax", "index bound (default 4)");
    }
    {
        auto [cmd, st] = cli.sub("charge", "central charge of a conformal vector", true);
        Cli::opt_str(cmd, st, "--expr", "expr", "state expression for L")->required();
    }
    {
        auto [cmd, st] = cli.sub("sugawara", "Sugawara vector of an affine builtin", true);
        Cli::opt_str(cmd, st, "--hvee", "hvee", "dual Coxeter number (default 2)");
    }
    {
        auto [cmd, st] = cli.sub("shapovalov", "Gram matrix and determinant at a weight", true);
        Cli::opt_str(cmd, st, "--weight", "weight", "conformal weight, e.g. 2 or 3/2")
            ->required();
    }
    {
        auto [cmd, st] = cli.sub("limit", "large-level limit of a deformable family", true);
        Cli::opt_str(cmd, st, "--check-weight", "check_weight",
                     "verify functoriality of the limit map through this weight");
    }
    {
        auto [cmd, st] = cli.sub("invariants", "invariant subspace basis at a weight", true);
        Cli::opt_str(cmd, st, "--weight", "weight", "conformal weight")->required();
        Cli::opt_str(cmd, st, "--invariant", "invariant", "diagonal action: z2 or zN:c1,c2,...");
        Cli::opt_str(cmd, st, "--family", "family",
                     "sev-sp, oodd-o, sodd-sp, oev-o, sev-gl, oev-gl, sodd-gl, oodd-gl");
        Cli::opt_int(cmd, st, "--n", "n", "family rank");
        Cli::opt_int(cmd, st, "--k", "k", "family pole order");
    }
    {
        auto [cmd, st] = cli.sub("decouple", "solve for a decoupling relation", true);
        Cli::opt_str(cmd, st, "--target", "target", "target state expression")->required();
        Cli::opt_str(cmd, st, "--generators", "generators",
                     "semicolon-separated expressions (default omega(0,0);omega(2,0))");
        Cli::opt_str(cmd, st, "--names", "names", "semicolon-separated generator names");
        Cli::opt_int(cmd, st, "--bootstrap", "bootstrap",
                     "continue the ladder this many more steps");
        Cli::opt_str(cmd, st, "--pump", "pump", "pump state (default second generator)");
        Cli::opt_str(cmd, st, "--invariant", "invariant", "accepted for symmetry with strong");
    }
    {
        auto [cmd, st] = cli.sub("strong", "verify strong generation weight by weight", true);
        Cli::opt_str(cmd, st, "--maxweight", "maxweight", "top conformal weight")->required();
        Cli::opt_str(cmd, st, "--generators", "generators", "generator expressions");
        Cli::opt_str(cmd, st, "--invariant", "invariant", "diagonal action");
        Cli::opt_str(cmd, st, "--family", "family", "quadratic family");
        Cli::opt_int(cmd, st, "--n", "n", "family rank");
        Cli::opt_int(cmd, st, "--k", "k", "family pole order");
    }
    {
        auto [cmd, st] = cli.sub("pfaffian", "expand a Pfaffian p_I", false);
        Cli::opt_str(cmd, st, "--list", "list", "entries, e.g. 0,1,2,3")->required();
    }
    {
        auto [cmd, st] = cli.sub("rn", "R_n(I): closed formula vs recursion", false);
        Cli::opt_str(cmd, st, "--list", "list", "entries, e.g. 0,1,2,3")->required();
    }
    {
        auto [cmd, st] = cli.sub("zhu", "Zhu commutative algebra data", true);
        Cli::opt_str(cmd, st, "--maxweight", "maxweight", "top conformal weight");
        Cli::opt_str(cmd, st, "--selector", "selector",
                     "full, z2, zN:c1,..., or generated (default full)");
        Cli::opt_str(cmd, st, "--generators", "generators", "generators when selector=generated");
        Cli::opt_str(cmd, st, "--expr", "expr", "test membership of this state in C2");
    }
    {
        auto [cmd, st] = cli.sub("jet", "emit a jet-ring presentation", false);
        Cli::opt_str(cmd, st, "--file", "file", "presentation JSON file")->required();
        Cli::opt_int(cmd, st, "--m", "m", "jet order")->required();
        Cli::opt_flag(cmd, st, "--zero-base", "zero_base",
                      "use the bare arc-space weights wt(y_i) = i");
    }
    {
        auto [cmd, st] = cli.sub("hilbert", "truncated Hilbert function", false);
        Cli::opt_str(cmd, st, "--file", "file", "presentation JSON file")->required();
        Cli::opt_str(cmd, st, "--maxweight", "maxweight", "top weight")->required();
        Cli::opt_flag(cmd, st, "--arc", "arc", "arc ring with the weight cutoff");
    }
    {
        auto [cmd, st] = cli.sub("probe", "arc ring vs subalgebra graded dimensions", true);
        Cli::opt_str(cmd, st, "--file", "file", "presentation of R")->required();
        Cli::opt_str(cmd, st, "--maxweight", "maxweight", "top weight")->required();
        Cli::opt_str(cmd, st, "--selector", "selector", "subalgebra selector");
        Cli::opt_str(cmd, st, "--generators", "generators", "generators when selector=generated");
    }
    {
        auto [cmd, st] = cli.sub("curve", "truncation curve parametrization", false);
        Cli::opt_str(cmd, st, "--family", "family", "C or D")->required();
        Cli::opt_int(cmd, st, "--n", "n", "label n")->required();
        Cli::opt_int(cmd, st, "--m", "m", "label m")->required();
    }
    {
        auto [cmd, st] = cli.sub("triality", "verify the triality identities", false);
        Cli::opt_int(cmd, st, "--n", "n", "label n")->required();
        Cli::opt_int(cmd, st, "--m", "m", "label m")->required();
    }
    {
        auto [cmd, st] = cli.sub("coincide", "intersection with a principal curve", false);
        Cli::opt_int(cmd, st, "--n", "n", "label n")->required();
        Cli::opt_int(cmd, st, "--m", "m", "label m")->required();
        Cli::opt_int(cmd, st, "--s", "s", "principal rank")->required();
    }
    {
        auto [cmd, st] = cli.sub("bootstrap", "Jacobi bootstrap of the curve data", false);
        Cli::opt_int(cmd, st, "--n", "n", "label n")->required();
        Cli::opt_int(cmd, st, "--m", "m", "label m")->required();
        Cli::opt_str(cmd, st, "--stage", "stage", "alpha or lambda (default lambda)");
    }
    { cli.sub("bcd", "B/C/D triality parameter-map consistency", false); }
    {
        auto [cmd, st] = cli.sub("basis", "PBW basis at a weight", true);
        Cli::opt_str(cmd, st, "--weight", "weight", "conformal weight")->required();
    }

    CLI11_PARSE(cli.app, argc, argv);
    return cli.exit_code;
}
