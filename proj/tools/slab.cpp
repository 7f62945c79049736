// Command-line front end: norms, window builders, measure experiments,
// self-checks, and config-driven sweeps.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slab/io.hpp"
#include "slab/lab.hpp"

namespace {

using namespace slab;

double parse_q(const std::string& text) {
    if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--q", "expected a positive real or 'inf'");
    }
}

// Recover the defining antidiagonals; fail when they disagree.
AnalyticSymbol symbol_from_hankel(const ComplexMatrix& a) {
    if (a.empty()) throw std::invalid_argument("matrix is empty");
    std::vector<cpx> coeffs(a.rows() + a.cols() - 1, cpx(0.0));
    std::vector<bool> seen(coeffs.size(), false);
    double scale = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) scale = std::max(scale, std::abs(a(i, j)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::size_t k = i + j;
            if (!seen[k]) {
                coeffs[k] = a(i, j);
                seen[k] = true;
            } else if (std::abs(coeffs[k] - a(i, j)) > 1e-12 * std::max(scale, 1.0)) {
                throw std::invalid_argument(
                    "matrix entries vary along antidiagonal " + std::to_string(k) +
                    "; the window-size certificate needs constant antidiagonals");
            }
        }
    return AnalyticSymbol(std::move(coeffs));
}

std::vector<std::size_t> read_cuts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cuts file '" + path + "'");
    std::vector<std::size_t> cuts;
    long v = 0;
    while (in >> v) {
        if (v < 0) throw std::invalid_argument("cuts must be nonnegative");
        cuts.push_back(static_cast<std::size_t>(v));
    }
    if (cuts.empty()) throw std::invalid_argument("cuts file '" + path + "' is empty");
    return cuts;
}

void write_witness_vector(const std::string& path, const std::vector<double>& v) {
    ComplexMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = cpx(v[i], 0.0);
    write_matrix_file(path, m);
}

int run_schatten(const std::string& matrix_path, double p) {
    ComplexMatrix a = read_matrix_file(matrix_path);
    SchattenValue v = schatten_norm(a, p);
    std::cout << format_double(v.value) << "\n";
    if (v.floored > 0)
        std::cerr << "note: " << v.floored
                  << " singular value(s) under the relative floor were dropped\n";
    return 0;
}

int run_multnorm(const std::string& matrix_path, double p, int restarts, std::uint64_t seed,
                 const std::string& upper_mode, const std::string& blocks_path,
                 const std::string& witness_prefix) {
    ComplexMatrix a = read_matrix_file(matrix_path);
    PExponent pe(p);
    MultiplierEstimate est = mult_lower_rank1(a, pe, restarts, seed);
    bool want_hadamard = upper_mode == "all" || upper_mode == "hadamard";
    bool want_poly = upper_mode == "all" || upper_mode == "hankel-poly";
    bool want_strips = upper_mode == "all" || upper_mode == "strips";
    if (upper_mode != "all" && upper_mode != "hadamard" && upper_mode != "hankel-poly" &&
        upper_mode != "strips")
        throw std::invalid_argument("--upper must be all, hadamard, hankel-poly, or strips");
    if (want_hadamard) merge_upper(est, mult_upper_hadamard(a, pe), "schatten-sharp");
    if (want_poly) {
        if (upper_mode == "hankel-poly") {
            merge_upper(est, mult_upper_hankel_poly(symbol_from_hankel(a), pe), "window-size");
        } else {
            try {
                merge_upper(est, mult_upper_hankel_poly(symbol_from_hankel(a), pe), "window-size");
            } catch (const std::invalid_argument&) {
                // not constant along antidiagonals; certificate does not apply
            }
        }
    }
    if (want_strips && !blocks_path.empty()) {
        std::vector<std::size_t> cuts = read_cuts_file(blocks_path);
        std::vector<double> values;
        for (std::size_t l = 0; l + 1 < cuts.size(); ++l) {
            if (cuts[l + 1] > a.rows() || cuts[l] >= cuts[l + 1])
                throw std::invalid_argument("cuts must increase and end within the matrix");
            ComplexMatrix strip(cuts[l + 1] - cuts[l], a.cols());
            for (std::size_t i = cuts[l]; i < cuts[l + 1]; ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) strip(i - cuts[l], j) = a(i, j);
            values.push_back(mult_upper_hadamard(strip, pe));
        }
        merge_upper(est, strip_upper_bound(a, cuts, values, pe), "strips");
    } else if (upper_mode == "strips") {
        throw std::invalid_argument("--upper strips needs --blocks FILE with row cuts");
    }
    std::cout << "lower,upper,lower_method,upper_method,restarts,seed\n";
    std::cout << format_double(est.lower) << ',' << format_double(est.upper) << ','
              << est.lower_method << ',' << est.upper_method << ',' << est.restarts_used << ','
              << est.seed << "\n";
    if (!witness_prefix.empty()) {
        write_witness_vector(witness_prefix + ".x", est.witness_x);
        write_witness_vector(witness_prefix + ".y", est.witness_y);
    }
    return 0;
}

int run_hankel(const std::string& symbol_path, long rows, long cols, const std::string& out) {
    AnalyticSymbol psi = read_analytic_symbol_file(symbol_path);
    if (rows < 1 || cols < 1) throw std::invalid_argument("--rows/--cols must be >= 1");
    ComplexMatrix m = hankel_matrix(psi, static_cast<std::size_t>(rows),
                                    static_cast<std::size_t>(cols));
    if (out.empty())
        write_matrix(std::cout, m);
    else
        write_matrix_file(out, m);
    return 0;
}

int run_toeplitz_measure(const std::string& measure_path, double p, long window,
                         double witness_arc, int restarts, std::uint64_t seed) {
    DiscreteMeasure mu = read_measure_file(measure_path);
    PExponent pe(p);
    if (window < 1) throw std::invalid_argument("--window must be >= 1");
    ComplexMatrix t = toeplitz_window(mu, static_cast<std::size_t>(window));
    MultiplierEstimate est;
    if (witness_arc > 0.0) {
        ArcWitness aw = arc_witness(mu, static_cast<std::size_t>(window), witness_arc);
        AscentOptions opt;
        opt.max_sweeps = 0;
        opt.coordinate_starts = false;
        opt.warm_starts.push_back({aw.x, aw.x});
        est = mult_lower_rank1(t, pe, 0, 0, opt);
    } else {
        est = mult_lower_rank1(t, pe, restarts, seed);
    }
    double exact = measure_mp_norm(mu, p);
    std::cout << "N,lower,upper,ratio\n";
    std::cout << window << ',' << format_double(est.lower) << ',' << format_double(exact) << ','
              << format_double(est.lower / exact) << "\n";
    return 0;
}

int run_besov(const std::string& symbol_path, double s, double p, const std::string& q_text) {
    TrigPolynomial f = read_symbol_file(symbol_path);
    BesovParams params(s, p, parse_q(q_text));
    double norm = besov_norm(f, params);
    std::cout << "norm," << format_double(norm) << "\n";
    std::cout << "n,block_lp,weighted\n";
    for (const BesovBlockRow& r : besov_block_table(f, params))
        std::cout << r.n << ',' << format_double(r.block_lp) << ',' << format_double(r.weighted)
                  << "\n";
    return 0;
}

int run_verify(const std::string& suite) {
    VerifyReport rep = verify(suite);
    std::cout << rep.summary();
    int failures = 0;
    for (const VerifyCheck& c : rep.checks)
        if (!c.pass) ++failures;
    return failures;
}

int run_sweep(const std::string& config_path, const std::string& out_path) {
    ExperimentConfig cfg = ExperimentConfig::parse_file(config_path);
    ExperimentResult res = run_experiment(cfg);
    std::string csv = res.csv();
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        out << csv;
    }
    return 0;
}

int run_kernel(const std::string& type, long n, long power) {
    TrigPolynomial out;
    if (type == "dirichlet") {
        out = dirichlet_kernel(n);
    } else if (type == "fejer-square") {
        out = fejer_square(n);
    } else if (type == "phi") {
        out = TrigPolynomial(phi_witness(static_cast<int>(n), static_cast<int>(power)));
    } else {
        throw std::invalid_argument("--type must be dirichlet, fejer-square, or phi");
    }
    write_symbol(std::cout, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    slab::init_numerics();
    CLI::App app{"numerical laboratory for entrywise matrix multipliers"};
    app.require_subcommand(1);

    std::string matrix_path, symbol_path, measure_path, config_path;
    std::string out_path, blocks_path, witness_prefix;
    std::string upper_mode = "all", suite = "all", q_text = "1", kernel_type = "dirichlet";
    double p = 0.5, s = 0.0, witness_arc = 0.0;
    long rows = 0, cols = 0, window = 0, n_param = 1, power = 1;
    int restarts = 8;
    std::uint64_t seed = 2026;

    CLI::App* schatten = app.add_subcommand("schatten", "singular-value p-norm of a matrix");
    schatten->add_option("--matrix", matrix_path, "matrix file")->required();
    schatten->add_option("--p", p, "exponent p > 0")->required();

    CLI::App* multnorm =
        app.add_subcommand("multnorm", "entrywise-multiplier norm bracket of a matrix");
    multnorm->add_option("--matrix", matrix_path, "matrix file")->required();
    multnorm->add_option("--p", p, "exponent in (0, 1]")->required();
    multnorm->add_option("--restarts", restarts, "random restarts (default 8)");
    multnorm->add_option("--seed", seed, "restart seed (default 2026)");
    multnorm->add_option("--upper", upper_mode, "all|hadamard|hankel-poly|strips");
    multnorm->add_option("--blocks", blocks_path, "row-cut file for the strips certificate");
    multnorm->add_option("--witness", witness_prefix,
                         "write the best scaling pair to <prefix>.x and <prefix>.y");

    CLI::App* hankel = app.add_subcommand("hankel", "matrix with entries psi-hat(j+k)");
    hankel->add_option("--symbol", symbol_path, "symbol file (nonnegative frequencies)")
        ->required();
    hankel->add_option("--rows", rows, "row count")->required();
    hankel->add_option("--cols", cols, "column count")->required();
    hankel->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* toep = app.add_subcommand("toeplitz-measure",
                                        "window norms of a discrete measure's Toeplitz matrix");
    toep->add_option("--measure", measure_path, "measure file")->required();
    toep->add_option("--p", p, "exponent in (0, 1]")->required();
    toep->add_option("--window", window, "window size N")->required();
    toep->add_option("--witness-arc", witness_arc,
                     "arc width for the bump witness (default: coordinate ascent)");
    toep->add_option("--restarts", restarts, "random restarts when no arc is given");
    toep->add_option("--seed", seed, "restart seed");

    CLI::App* besov = app.add_subcommand("besov", "weighted dyadic-block norm of a symbol");
    besov->add_option("--symbol", symbol_path, "symbol file")->required();
    besov->add_option("--s", s, "weight exponent")->required();
    besov->add_option("--p", p, "block norm exponent")->required();
    besov->add_option("--q", q_text, "aggregation exponent or 'inf'")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a self-check suite");
    verify_cmd->add_option("suite", suite, "core|symbols|besov|multiplier|measures|all");

    CLI::App* sweep = app.add_subcommand("sweep", "run a config-driven experiment, emit CSV");
    sweep->add_option("--config", config_path, "key = value config file")->required();
    sweep->add_option("--out", out_path, "output CSV file (default stdout)");

    CLI::App* kernel = app.add_subcommand("kernel", "emit a named kernel as a symbol file");
    kernel->add_option("--type", kernel_type, "dirichlet|fejer-square|phi");
    kernel->add_option("--n", n_param, "kernel order")->required();
    kernel->add_option("--power", power, "normalized power for type=phi (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (schatten->parsed()) return run_schatten(matrix_path, p);
        if (multnorm->parsed())
            return run_multnorm(matrix_path, p, restarts, seed, upper_mode, blocks_path,
                                witness_prefix);
        if (hankel->parsed()) return run_hankel(symbol_path, rows, cols, out_path);
        if (toep->parsed())
            return run_toeplitz_measure(measure_path, p, window, witness_arc, restarts, seed);
        if (besov->parsed()) return run_besov(symbol_path, s, p, q_text);
        if (verify_cmd->parsed()) return run_verify(suite);
        if (sweep->parsed()) return run_sweep(config_path, out_path);
        if (kernel->parsed()) return run_kernel(kernel_type, n_param, power);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
