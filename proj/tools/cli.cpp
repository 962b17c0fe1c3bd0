#include "cli.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "fsc/errors.hpp"

namespace fsc::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

int parse_int(std::string_view text, std::string_view what) {
    const std::string t = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw UsageError("invalid integer '" + t + "' in " + std::string(what));
    }
    return value;
}

double parse_real(std::string_view text, std::string_view what) {
    const std::string t = trim(text);
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE) {
        throw UsageError("invalid number '" + t + "' in " + std::string(what));
    }
    return value;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string format_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::ios_base::failure("cannot open '" + path + "' for writing");
    }
    file << text;
    if (!file) {
        throw std::ios_base::failure("failed writing '" + path + "'");
    }
}

// key=value lines become "--key value" tokens.
std::vector<std::string> config_tokens(const std::string& path) {
    std::vector<std::string> tokens;
    const std::string text = read_file(path);
    int line_no = 0;
    for (const auto& raw : split(text, '\n')) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = trim(std::string_view(line).substr(0, eq));
        while (!key.empty() && key.front() == '-') {
            key.erase(key.begin());
        }
        if (key.empty()) {
            throw UsageError(path + ":" + std::to_string(line_no) + ": empty key");
        }
        tokens.push_back("--" + key);
        tokens.push_back(trim(std::string_view(line).substr(eq + 1)));
    }
    return tokens;
}

std::vector<std::string> expand_config(std::vector<std::string> args) {
    // args[0] is the program, args[1] the subcommand (when present).
    std::optional<std::string> config;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config = args[i].substr(9);
        }
    }
    if (!config || args.size() < 2) {
        return args;
    }
    auto tokens = config_tokens(*config);
    args.insert(args.begin() + 2, tokens.begin(), tokens.end());
    return args;
}

struct Args {
    std::optional<int> example;
    std::optional<std::string> problem;
    std::optional<double> nu;
    std::optional<int> n;
    std::optional<std::string> n_list;
    std::string scheme;
    std::string solver = "bicgstab";
    std::optional<double> tol;
    std::optional<int> maxit;
    std::string out;
    std::string nodes = "auto";
    std::string config;
    std::string in;
};

void add_problem_options(CLI::App* cmd, Args& args) {
    cmd->add_option("--example", args.example, "Built-in example (1: IVP nu=0.8, 2: BVP nu=1.9)")
        ->check(CLI::IsMember({1, 2}));
    cmd->add_option("--problem", args.problem, "Problem class with built-in coefficients")
        ->check(CLI::IsMember({"ivp", "bvp"}));
    cmd->add_option("--nu", args.nu, "Fractional order (with --problem)");
    cmd->add_option("--scheme", args.scheme, "fsc, pfsc or both")
        ->check(CLI::IsMember({"fsc", "pfsc", "both"}));
    cmd->add_option("--solver", args.solver, "direct or bicgstab")
        ->check(CLI::IsMember({"direct", "bicgstab"}));
    cmd->add_option("--tol", args.tol, "BiCGSTAB relative tolerance (default 1e-9 IVP, 1e-11 BVP)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--maxit", args.maxit, "BiCGSTAB iteration limit (default N)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--nodes", args.nodes, "Collocation nodes: auto, gauss-jacobi or chebyshev")
        ->check(CLI::IsMember({"auto", "gauss-jacobi", "chebyshev"}));
    cmd->add_option("--out", args.out, "Output path (default standard output)");
    cmd->add_option("--config", args.config, "key=value file; command-line flags take precedence");
}

ProblemSpec resolve_problem(const Args& args) {
    if (args.example && args.problem) {
        throw UsageError("--example and --problem are mutually exclusive");
    }
    if (args.example) {
        if (args.nu) {
            throw UsageError("--nu requires --problem (the examples fix nu)");
        }
        return *args.example == 1 ? example1_spec() : example2_spec();
    }
    if (args.problem) {
        if (*args.problem == "ivp") {
            return ivp_spec(args.nu.value_or(0.8));
        }
        return bvp_spec(args.nu.value_or(1.9));
    }
    throw UsageError("one of --example or --problem is required");
}

NodeFamily resolve_nodes(const std::string& name) {
    if (name == "gauss-jacobi") {
        return NodeFamily::gauss_jacobi;
    }
    if (name == "chebyshev") {
        return NodeFamily::chebyshev;
    }
    return NodeFamily::automatic;
}

double default_tol(const ProblemSpec& spec) { return spec.kind == ProblemKind::ivp ? 1e-9 : 1e-11; }

std::string describe_nodes(const ProblemSpec& spec, NodeFamily family) {
    const bool ivp = spec.kind == ProblemKind::ivp;
    std::string x;
    if (family == NodeFamily::automatic) {
        x = ivp ? "gauss-jacobi" : "chebyshev";
    } else {
        x = family == NodeFamily::gauss_jacobi ? "gauss-jacobi" : "chebyshev";
    }
    return "x=" + x + ", y=" + (ivp ? "gauss-legendre" : "gauss-jacobi(1,1)");
}

int cmd_solve(const Args& args, std::ostream& out) {
    if (!args.n) {
        throw UsageError("solve requires --N");
    }
    if (args.n_list) {
        throw UsageError("solve takes a single --N; use sweep for --N-list");
    }
    const ProblemSpec spec = resolve_problem(args);
    const int n = *args.n;
    const NodeFamily family = resolve_nodes(args.nodes);
    const double tol = args.tol.value_or(default_tol(spec));
    const int maxit = args.maxit.value_or(n);
    const std::string scheme = args.scheme.empty() ? "pfsc" : args.scheme;

    std::vector<Scheme> schemes;
    if (scheme != "pfsc") {
        schemes.push_back(Scheme::fsc);
    }
    if (scheme != "fsc") {
        schemes.push_back(Scheme::pfsc);
    }

    std::ostringstream report;
    report << "problem: " << spec.name << " ("
           << (spec.kind == ProblemKind::ivp ? "ivp" : "bvp") << ", nu=" << spec.nu << ")\n";
    report << "N: " << n << "\n";
    report << "nodes: " << describe_nodes(spec, family) << "\n";

    bool nonconverged = false;
    for (Scheme s : schemes) {
        const AssembledSystem sys = assemble(spec, n, s, family);
        report << "scheme: " << (s == Scheme::fsc ? "fsc" : "pfsc") << "\n";
        report << "  dimension: " << sys.dimension() << "\n";
        report << "  cond2: " << format_short(cond2(sys.matrix)) << "\n";
        Vector solution;
        if (args.solver == "direct") {
            solution = lu_solve(sys.matrix, sys.rhs);
            report << "  solver: direct\n";
            report << "  relative_residual: "
                   << format_short((sys.rhs - sys.matrix * solution).norm() / sys.rhs.norm())
                   << "\n";
        } else {
            const IterReport it = bicgstab(sys.matrix, sys.rhs, tol, maxit);
            solution = it.solution;
            nonconverged = nonconverged || !it.converged();
            report << "  solver: bicgstab (tol=" << format_short(tol) << ", maxit=" << maxit
                   << ")\n";
            report << "  status: " << to_string(it.status) << "\n";
            report << "  iterations: " << it.iterations << "\n";
            report << "  relative_residual: " << format_short(it.relative_residual) << "\n";
        }
        const Vector u = nodal_solution(sys, solution);
        if (spec.exact) {
            report << "  max_error_nodes: "
                   << format_short(max_error({u.data(), static_cast<std::size_t>(u.size())}, spec,
                                             sys.x_nodes))
                   << "\n";
            report << "  max_error_grid: " << format_short(max_error_on_grid(sys, u, spec))
                   << "\n";
        }
    }
    write_output(args.out, report.str(), out);
    return nonconverged ? kExitNonConvergence : kExitOk;
}

int cmd_sweep(const Args& args, std::ostream& out) {
    if (args.n && args.n_list) {
        throw UsageError("--N and --N-list are mutually exclusive");
    }
    if (!args.scheme.empty() && args.scheme != "both") {
        throw UsageError("sweep always covers both schemes; omit --scheme or pass 'both'");
    }
    const ProblemSpec spec = resolve_problem(args);
    std::vector<int> ns;
    if (args.n) {
        ns = {*args.n};
    } else {
        ns = parse_n_list(args.n_list.value_or("8:1024:x2"));
    }
    SweepOptions options;
    options.solver = args.solver == "direct" ? SolverKind::direct : SolverKind::bicgstab;
    options.tol = args.tol.value_or(default_tol(spec));
    options.maxit = args.maxit.value_or(0);
    options.nodes = resolve_nodes(args.nodes);

    std::vector<SweepRow> rows;
    rows.reserve(ns.size());
    for (int n : ns) {
        rows.push_back(compute_sweep_row(spec, n, options));
    }
    write_output(args.out, format_csv(rows), out);
    for (const auto& row : rows) {
        if (!row.iters_fsc || !row.iters_pfsc) {
            return kExitNonConvergence;
        }
    }
    return kExitOk;
}

int cmd_plot(const Args& args, std::ostream& out) {
    if (args.in.empty()) {
        throw UsageError("plot requires an input CSV (--in <path>)");
    }
    parse_csv(read_file(args.in));
    write_output(args.out, plot_script(args.in), out);
    return kExitOk;
}

} // namespace

std::vector<int> parse_n_list(std::string_view text) {
    std::vector<int> ns;
    if (trim(text).empty()) {
        throw UsageError("empty N list");
    }
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            ns.push_back(parse_int(parts[0], "N list"));
            continue;
        }
        if (parts.size() != 3) {
            throw UsageError("N-list range must be start:stop:step, got '" + item + "'");
        }
        const int start = parse_int(parts[0], "N list");
        const int stop = parse_int(parts[1], "N list");
        const std::string step = trim(parts[2]);
        if (start < 1 || stop < start) {
            throw UsageError("N-list range '" + item + "' is empty or non-positive");
        }
        if (!step.empty() && step.front() == 'x') {
            const int factor = parse_int(std::string_view(step).substr(1), "N list");
            if (factor < 2) {
                throw UsageError("geometric N-list factor must be at least 2");
            }
            for (long long v = start; v <= stop; v *= factor) {
                ns.push_back(static_cast<int>(v));
            }
        } else {
            const int inc = parse_int(!step.empty() && step.front() == '+'
                                          ? std::string_view(step).substr(1)
                                          : std::string_view(step),
                                      "N list");
            if (inc < 1) {
                throw UsageError("arithmetic N-list step must be positive");
            }
            for (int v = start; v <= stop; v += inc) {
                ns.push_back(v);
            }
        }
    }
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1 || (i > 0 && ns[i] <= ns[i - 1])) {
            throw UsageError("N values must be positive and strictly increasing");
        }
    }
    return ns;
}

SweepRow compute_sweep_row(const ProblemSpec& spec, int n, const SweepOptions& options) {
    const AssembledSystem fsc_sys = assemble(spec, n, Scheme::fsc, options.nodes);
    const AssembledSystem pfsc_sys = assemble(spec, n, Scheme::pfsc, options.nodes);
    const int maxit = options.maxit > 0 ? options.maxit : n;

    SweepRow row;
    row.n = n;
    row.cond_fsc = cond2(fsc_sys.matrix);
    row.cond_pfsc = cond2(pfsc_sys.matrix);

    const IterReport it_fsc = bicgstab(fsc_sys.matrix, fsc_sys.rhs, options.tol, maxit);
    const IterReport it_pfsc = bicgstab(pfsc_sys.matrix, pfsc_sys.rhs, options.tol, maxit);
    if (it_fsc.converged()) {
        row.iters_fsc = it_fsc.iterations;
    }
    if (it_pfsc.converged()) {
        row.iters_pfsc = it_pfsc.iterations;
    }

    Vector u_fsc;
    Vector u_pfsc;
    if (options.solver == SolverKind::bicgstab) {
        u_fsc = it_fsc.solution;
        u_pfsc = recover(pfsc_sys, it_pfsc.solution);
    } else {
        u_fsc = lu_solve(fsc_sys.matrix, fsc_sys.rhs);
        u_pfsc = recover(pfsc_sys, lu_solve(pfsc_sys.matrix, pfsc_sys.rhs));
    }
    if (spec.exact) {
        row.err_fsc = max_error({u_fsc.data(), static_cast<std::size_t>(u_fsc.size())}, spec,
                                fsc_sys.x_nodes);
        row.err_pfsc = max_error({u_pfsc.data(), static_cast<std::size_t>(u_pfsc.size())}, spec,
                                 pfsc_sys.x_nodes);
    } else {
        row.err_fsc = std::nan("");
        row.err_pfsc = std::nan("");
    }
    return row;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
    std::string text(kCsvHeader);
    text += '\n';
    auto iters = [](const std::optional<double>& v) { return v ? format_real(*v) : "nc"; };
    for (const auto& row : rows) {
        text += std::to_string(row.n) + ',' + format_real(row.cond_fsc) + ',' +
                format_real(row.cond_pfsc) + ',' + iters(row.iters_fsc) + ',' +
                iters(row.iters_pfsc) + ',' + format_real(row.err_fsc) + ',' +
                format_real(row.err_pfsc) + '\n';
    }
    return text;
}

std::vector<SweepRow> parse_csv(std::string_view text) {
    auto lines = split(text, '\n');
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw UsageError("sweep CSV is empty");
    }
    if (trim(lines.front()) != kCsvHeader) {
        throw UsageError("sweep CSV header mismatch: expected '" + std::string(kCsvHeader) + "'");
    }
    if (lines.size() == 1) {
        throw UsageError("sweep CSV has no data rows");
    }
    std::vector<SweepRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(trim(lines[i]), ',');
        if (fields.size() != 7) {
            throw UsageError("sweep CSV line " + std::to_string(i + 1) + ": expected 7 fields");
        }
        auto iters = [&](const std::string& f) -> std::optional<double> {
            if (trim(f) == "nc") {
                return std::nullopt;
            }
            return parse_real(f, "sweep CSV");
        };
        SweepRow row;
        row.n = parse_int(fields[0], "sweep CSV");
        row.cond_fsc = parse_real(fields[1], "sweep CSV");
        row.cond_pfsc = parse_real(fields[2], "sweep CSV");
        row.iters_fsc = iters(fields[3]);
        row.iters_pfsc = iters(fields[4]);
        row.err_fsc = parse_real(fields[5], "sweep CSV");
        row.err_pfsc = parse_real(fields[6], "sweep CSV");
        if (!rows.empty() && row.n <= rows.back().n) {
            throw UsageError("sweep CSV: N values must be strictly increasing");
        }
        rows.push_back(row);
    }
    return rows;
}

std::string plot_script(std::string_view csv_path) {
    std::string image(csv_path);
    const auto dot = image.find_last_of('.');
    const auto slash = image.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
        image.erase(dot);
    }
    image += ".png";
    const std::string data = "'" + std::string(csv_path) + "'";

    std::ostringstream s;
    s << "# gnuplot script generated by `fsc plot`\n"
      << "set datafile separator ','\n"
      << "set datafile missing 'nc'\n"
      << "set terminal pngcairo size 1500,450\n"
      << "set output '" << image << "'\n"
      << "set multiplot layout 1,3\n"
      << "set key top left\n"
      << "set xlabel 'N'\n"
      << "\n"
      << "set title 'Condition number'\n"
      << "set logscale xy\n"
      << "plot " << data << " using \"N\":\"cond_fsc\" with linespoints title 'FSC', \\\n"
      << "     " << data << " using \"N\":\"cond_pfsc\" with linespoints title 'PFSC'\n"
      << "\n"
      << "set title 'BiCGSTAB iterations'\n"
      << "unset logscale\n"
      << "set logscale x\n"
      << "plot " << data << " using \"N\":\"iters_fsc\" with linespoints title 'FSC', \\\n"
      << "     " << data << " using \"N\":\"iters_pfsc\" with linespoints title 'PFSC'\n"
      << "\n"
      << "set title 'Maximum point-wise error'\n"
      << "unset logscale\n"
      << "set logscale y\n"
      << "plot " << data << " using \"N\":\"err_fsc\" with linespoints title 'FSC', \\\n"
      << "     " << data << " using \"N\":\"err_pfsc\" with linespoints title 'PFSC'\n"
      << "\n"
      << "unset multiplot\n";
    return s.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> raw(argv, argv + argc);
    if (raw.empty()) {
        raw.emplace_back("fsc");
    }

    CLI::App app{"Fractional spectral collocation with Birkhoff preconditioning"};
    app.name("fsc");
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    Args args;
    auto* solve = app.add_subcommand("solve", "Solve one instance and report conditioning/error");
    add_problem_options(solve, args);
    solve->add_option("--N", args.n, "Number of collocation points")->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("sweep", "Sweep N for both schemes and write CSV");
    add_problem_options(sweep, args);
    sweep->add_option("--N", args.n, "Single N")->check(CLI::PositiveNumber);
    sweep->add_option("--N-list", args.n_list, "N values, e.g. 8,16,32 or 8:1024:x2");

    auto* plot = app.add_subcommand("plot", "Emit a gnuplot script for a sweep CSV");
    plot->add_option("--in,in", args.in, "Sweep CSV produced by `fsc sweep`");
    plot->add_option("--out", args.out, "Script path (default standard output)");
    plot->add_option("--config", args.config, "key=value file");

    try {
        std::vector<std::string> expanded = expand_config(raw);
        std::vector<const char*> cargv;
        cargv.reserve(expanded.size());
        for (const auto& a : expanded) {
            cargv.push_back(a.c_str());
        }
        try {
            app.parse(static_cast<int>(cargv.size()), cargv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? kExitOk : kExitUsage;
        }

        if (solve->parsed()) {
            return cmd_solve(args, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(args, out);
        }
        return cmd_plot(args, out);
    } catch (const UsageError& e) {
        err << "fsc: usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError& e) {
        err << "fsc: invalid parameter: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        err << "fsc: I/O error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "fsc: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace fsc::cli
