#include "smp/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "smp/bench.hpp"
#include "smp/decompose.hpp"
#include "smp/generate.hpp"
#include "smp/instance.hpp"
#include "smp/inverse.hpp"
#include "smp/oracle.hpp"

namespace smp::cli {

namespace {

/// Shortest representation that parses back to the same double.
std::string num(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

struct Options {
    std::string path;
    std::string out_path;
    std::string inverse_path;
    double eps = default_eps_min;
    double tol = 1e-8;
    Eigen::Index K = 8;
    Eigen::Index period = 2;
    double margin = 0.1;
    std::uint64_t seed = 1;
    int reps = 3;
    std::vector<Eigen::Index> K_list{4, 8, 16, 32, 64};
};

void print_membership(std::ostream& out, const SmpCoefficients<double>& c, const MembershipReport<double>& rep)
{
    for (Eigen::Index n = 0; n < rep.d.period(); n += 2)
        out << "d[" << n << "] = " << num(rep.d.values()[n]) << "\n";
    out << "margin = " << num(rep.margin) << "\n";
    out << "eta = " << num(c.eta) << "\n";
    out << "q_even consistent: " << (rep.q_even_consistent ? "yes" : "no") << "\n";
}

int cmd_validate(const Options& o, std::ostream& out)
{
    const auto c = to_coefficients(load_instance(o.path));
    const auto structure = validate_structure(c);
    if (structure.ok()) {
        out << "structure: ok\n";
    } else {
        out << "structure: " << structure.violations.size() << " violation(s)\n";
        for (const auto& v : structure.violations)
            out << "  " << v.message << "\n";
    }
    const auto rep = membership(c, o.eps);
    print_membership(out, c, rep);
    out << "verdict: " << (rep.verdict ? "SMP" : "not SMP") << "\n";
    return rep.verdict ? ok : rejected;
}

int cmd_invert(const Options& o, std::ostream& out)
{
    const auto c = to_coefficients(load_instance(o.path));
    const auto inv = invert(c, o.eps);
    const std::string text = dump_inverse(inv);
    if (o.out_path.empty())
        out << text;
    else
        write_file(o.out_path, text);
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.K < 3)
        throw KTooSmall("--K must be >= 3, got " + std::to_string(o.K));
    const auto c = to_coefficients(load_instance(o.path));
    const auto inv = o.inverse_path.empty() ? invert(c, o.eps) : parse_inverse(read_file(o.inverse_path));

    const double residual = max_residual(residual_bands(c, inv));
    out << "max residual = " << num(residual) << "\n";

    const auto emb = oracle::embed(c, o.K);
    const auto dense = oracle::dense_inverse(emb);
    out << "oracle self residual = " << num(oracle::self_residual(emb.matrix, dense)) << "\n";
    const auto bands = oracle::extract_bands(dense, c.period());
    const auto cmp = oracle::compare(inv, bands.bands, o.tol);
    out << "max deviation = " << num(cmp.max_dev()) << " (rho " << num(cmp.rho_dev) << ", pi " << num(cmp.pi_dev)
        << ", sigma " << num(cmp.sigma_dev) << ")\n";
    out << "far band max = " << num(bands.far_band_max) << "\n";
    const bool pass = residual <= o.tol && cmp.pass;
    out << (pass ? "verified" : "FAILED") << "\n";
    return pass ? ok : rejected;
}

int cmd_decompose(const Options& o, std::ostream& out)
{
    const auto c = to_coefficients(load_instance(o.path));
    const auto structure = validate_structure(c);
    if (!structure.ok()) {
        out << "structure: " << structure.violations.front().message << "\n";
        return rejected;
    }
    const auto d = split(c);
    const Eigen::Index size = 4 * c.period();
    const std::int64_t origin = -2 * std::int64_t(c.period());
    const auto rec = reconstruct(c, d, origin, size);
    const auto full = window(c, origin, size);
    out << "a0 = " << num(d.a0) << "\n";
    out << "e0_tilde = (" << num(d.e0_tilde[0]) << ", " << num(d.e0_tilde[1]) << ")\n";
    out << "split_index = " << d.split_index << "\n";
    out << "reconstruction residual = " << num((rec.entries - full.entries).cwiseAbs().maxCoeff()) << " (window ["
        << origin << ", " << origin + std::int64_t(size) << "))\n";
    return ok;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err)
{
    try {
        const auto g = generate(o.period, o.margin, o.seed);
        auto inst = from_coefficients(g.coefficients);
        inst.eta.reset();
        inst.prng = prng_name;
        inst.seed = o.seed;
        const std::string text = dump_instance(inst);
        if (o.out_path.empty())
            out << text;
        else
            write_file(o.out_path, text);
        err << "accepted after " << g.attempts << " draw(s), margin " << num(g.margin) << "\n";
        return ok;
    } catch (const GaveUp& e) {
        err << "gave up: " << e.what() << "\n";
        return rejected;
    }
}

int cmd_bench(const Options& o, std::ostream& out)
{
    if (o.reps < 1)
        throw Error("--reps must be >= 1");
    for (const auto K : o.K_list)
        if (K < 3)
            throw KTooSmall("every K must be >= 3");
    const auto g = generate(o.period, o.margin, o.seed);
    const auto rows = run_bench(g.coefficients, o.K_list, o.reps, o.tol);

    std::ostringstream csv;
    csv << bench_csv_header << "\n";
    out << std::setw(7) << "period" << std::setw(6) << "K" << std::setw(7) << "N" << std::setw(14) << "closed_ns"
        << std::setw(16) << "dense_ns" << std::setw(14) << "max_dev" << "  check\n";
    bool all_ok = true;
    for (const auto& r : rows) {
        csv << r.period << "," << r.K << "," << r.N << "," << num(r.closed_ns) << "," << num(r.dense_ns) << ","
            << num(r.max_dev) << "\n";
        out << std::setw(7) << r.period << std::setw(6) << r.K << std::setw(7) << r.N << std::setw(14)
            << std::fixed << std::setprecision(1) << r.closed_ns << std::setw(16) << r.dense_ns
            << std::scientific << std::setprecision(2) << std::setw(14) << r.max_dev << "  "
            << (r.ok ? "ok" : "FAIL") << "\n"
            << std::defaultfloat;
        all_ok = all_ok && r.ok;
    }
    out << "\n" << csv.str();
    if (!o.out_path.empty())
        write_file(o.out_path, csv.str());
    return all_ok ? ok : rejected;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"SMP-structured periodic pentadiagonal operators: membership, closed-form inverse, verification"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "check structure and the membership criterion");
    validate->add_option("path", o.path, "instance JSON")->required();
    validate->add_option("--eps", o.eps, "membership floor eps_min");

    auto* inv = app.add_subcommand("invert", "closed-form inverse coefficients");
    inv->add_option("path", o.path, "instance JSON")->required();
    inv->add_option("--out", o.out_path, "output JSON (default stdout)");
    inv->add_option("--eps", o.eps, "membership floor eps_min");

    auto* verify = app.add_subcommand("verify", "residual bands and circulant-oracle comparison");
    verify->add_option("path", o.path, "instance JSON")->required();
    verify->add_option("--K", o.K, "number of periods in the circulant embedding");
    verify->add_option("--tol", o.tol, "tolerance for residual and relative deviation");
    verify->add_option("--eps", o.eps, "membership floor eps_min");
    verify->add_option("--inverse", o.inverse_path, "check this inverse JSON instead of recomputing");

    auto* decompose = app.add_subcommand("decompose", "rank-2 block decomposition");
    decompose->add_option("path", o.path, "instance JSON")->required();

    auto* gen = app.add_subcommand("gen", "random valid instance");
    gen->add_option("--period", o.period, "even period");
    gen->add_option("--margin", o.margin, "minimum membership margin");
    gen->add_option("--seed", o.seed, "64-bit seed");
    gen->add_option("--out", o.out_path, "output JSON (default stdout)");

    auto* bench = app.add_subcommand("bench", "closed-form vs dense oracle timing");
    bench->add_option("--period", o.period, "even period")->default_val(8);
    bench->add_option("--K-list", o.K_list, "comma-separated K values")->delimiter(',');
    bench->add_option("--reps", o.reps, "repetitions per timing");
    bench->add_option("--seed", o.seed, "instance seed");
    bench->add_option("--margin", o.margin, "instance margin");
    bench->add_option("--tol", o.tol, "cross-check tolerance");
    bench->add_option("--out", o.out_path, "CSV output path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return input_error;
    }

    try {
        if (*validate)
            return cmd_validate(o, out);
        if (*inv)
            return cmd_invert(o, out);
        if (*verify)
            return cmd_verify(o, out);
        if (*decompose)
            return cmd_decompose(o, out);
        if (*gen)
            return cmd_gen(o, out, err);
        if (*bench)
            return cmd_bench(o, out);
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return io_error;
    } catch (const ParseError& e) {
        err << "parse error in " << o.path << ": " << e.what() << "\n";
        return input_error;
    } catch (const NotSmp& e) {
        err << e.what() << "\n";
        return rejected;
    } catch (const SingularMatrix& e) {
        err << "oracle: " << e.what() << "\n";
        return rejected;
    } catch (const NotCirculant& e) {
        err << "oracle: " << e.what() << "\n";
        return rejected;
    } catch (const PeriodMismatch& e) {
        err << e.what() << "\n";
        return input_error;
    } catch (const GaveUp& e) {
        err << "gave up: " << e.what() << "\n";
        return rejected;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

} // namespace smp::cli
