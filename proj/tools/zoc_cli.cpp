#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "zoc/function_spec.hpp"
#include "zoc/mobius.hpp"
#include "zoc/rmt.hpp"
#include "zoc/roots.hpp"

namespace fs = std::filesystem;
using namespace zoc;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num(Complex v) { return num(v.real()) + (v.imag() < 0 ? "" : "+") + num(v.imag()) + "i"; }

class Reporter {
  public:
    explicit Reporter(const std::string& out_flag) {
        const char* env = std::getenv("ZOC_OUT_DIR");
        dir_ = !out_flag.empty() ? out_flag : (env ? env : ".");
        fs::create_directories(dir_);
    }

    const fs::path& dir() const { return dir_; }

    void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
    void add(const std::string& key, double value) { add(key, num(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }

    void write_report() const {
        std::ofstream f(dir_ / "report.txt");
        for (const auto& [k, v] : lines_) f << k << "=" << v << "\n";
    }

    void write_csv(const std::string& name, const std::string& header,
                   const std::vector<std::vector<double>>& rows) const {
        std::ofstream f(dir_ / name);
        f << header << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << num(row[i]);
            f << "\n";
        }
    }

  private:
    fs::path dir_;
    std::vector<std::pair<std::string, std::string>> lines_;
};

struct GridSummary {
    double max_err = 0.0;
    double mean_err = 0.0;
    int points = 0;
};

// Polar error grid over D(center, radius); fills rows re_z, im_z, abs_error.
template <typename Approx>
GridSummary error_grid(const AnalyticFn& f, const Approx& approx, Complex center, double radius,
                       std::vector<std::vector<double>>& rows) {
    GridSummary s;
    double total = 0.0;
    for (int ir = 1; ir <= 12; ++ir) {
        double rr = 0.98 * radius * ir / 12.0;
        for (int ia = 0; ia < 24; ++ia) {
            Complex z = center + std::polar(rr, kTwoPi * ia / 24.0);
            double e = std::abs(f(z) - approx(z));
            rows.push_back({z.real(), z.imag(), e});
            s.max_err = std::max(s.max_err, e);
            total += e;
            ++s.points;
        }
    }
    s.mean_err = s.points ? total / s.points : 0.0;
    return s;
}

void write_zeros(const Reporter& rep, const std::vector<Complex>& zeros, Complex center) {
    std::vector<std::vector<double>> rows;
    rows.reserve(zeros.size());
    for (Complex z : zeros) rows.push_back({z.real(), z.imag(), std::abs(z - center)});
    rep.write_csv("zeros.csv", "re,im,modulus", rows);
}

int run_approx_poly(const std::string& fn_text, Complex center, double radius, double eps,
                    const std::string& out) {
    Reporter rep(out);
    FunctionSpec spec = parse_function_spec(fn_text);
    DiscSpec disc = to_disc_spec(center, radius);
    auto f = spec.evaluator();

    auto t0 = std::chrono::steady_clock::now();
    PolyOnDiscResult res = approx_poly_on_disc(f, disc, eps);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);

    std::vector<std::vector<double>> rows;
    GridSummary g = error_grid(f, [&](Complex z) { return evaluate_product(res.q, z); },
                               center, radius, rows);
    rep.write_csv("error_grid.csv", "re_z,im_z,abs_error", rows);
    write_zeros(rep, product_zeros(res.q), Complex{0.0});

    rep.add("command", "approx-poly");
    rep.add("fn", fn_text);
    rep.add("center", num(center));
    rep.add("radius", radius);
    rep.add("eps", eps);
    rep.add("J_stage1", res.J_stage1);
    rep.add("J_stage2", res.J_stage2);
    rep.add("target_radius", 1.0);
    rep.add("zero_count", static_cast<int>(product_zeros(res.q).size()));
    rep.add("grid_error_max", g.max_err);
    rep.add("grid_error_mean", g.mean_err);
    rep.add("grid_points", g.points);
    rep.add("elapsed_ms", ms.count());
    rep.write_report();
    return 0;
}

int run_approx_blaschke(const std::string& fn_text, Complex center, double r, double delta,
                        double eps, const std::string& out) {
    Reporter rep(out);
    FunctionSpec spec = parse_function_spec(fn_text);
    DiscSpec disc = to_disc_spec(center, r);
    auto f = spec.evaluator();

    auto t0 = std::chrono::steady_clock::now();
    // --delta is relative: the measured region is |w - center| <= r (1 - delta).
    BlaschkeOnDiscResult res = approx_blaschke_on_disc(f, disc, delta * r, eps);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);

    std::vector<std::vector<double>> rows;
    GridSummary g = error_grid(f, [&](Complex w) { return res.eval(w); },
                               center, r * (1.0 - delta), rows);
    rep.write_csv("error_grid.csv", "re_z,im_z,abs_error", rows);
    std::vector<Complex> zeros = res.zeros();
    write_zeros(rep, zeros, center);

    rep.add("command", "approx-blaschke");
    rep.add("fn", fn_text);
    rep.add("center", num(center));
    rep.add("r", r);
    rep.add("delta", delta);
    rep.add("eps", eps);
    rep.add("J", res.J);
    rep.add("target_radius", r);
    rep.add("zero_count", static_cast<int>(zeros.size()));
    rep.add("grid_error_max", g.max_err);
    rep.add("grid_error_mean", g.mean_err);
    rep.add("grid_points", g.points);
    rep.add("elapsed_ms", ms.count());
    rep.write_report();
    return 0;
}

int run_transport(Complex center, double radius, const std::string& out) {
    Reporter rep(out);
    DiscSpec d = to_disc_spec(center, radius);
    rep.add("command", "transport");
    rep.add("center", num(center));
    rep.add("radius", radius);
    rep.add("pseudo_a", num(d.pseudo_a));
    rep.add("pseudo_r", d.pseudo_r);
    rep.add("rotation", num(d.rotation));

    // Boundary mapping samples: theta on the pullback circle vs the image.
    MobiusMap T = d.transport();
    std::vector<std::vector<double>> rows;
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
        Complex z = std::polar(d.pseudo_r, kTwoPi * k / 64.0);
        Complex w = T.apply(z);
        worst = std::max(worst, std::abs(std::abs(w - center) - radius));
        rows.push_back({z.real(), z.imag(), w.real(), w.imag()});
    }
    rep.write_csv("boundary.csv", "re_z,im_z,re_w,im_w", rows);
    rep.add("boundary_max_defect", worst);
    rep.write_report();
    return 0;
}

int run_rubinstein(const std::string& poly_text, int k, const std::string& out) {
    Reporter rep(out);
    std::vector<Complex> p;
    for (Complex c : parse_function_spec(poly_text).numerator) p.push_back(c);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<Complex> q = rubinstein_approx(p, k);
    std::vector<Complex> roots = poly_roots(q);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);

    std::vector<std::vector<double>> crow;
    for (Complex c : q) crow.push_back({c.real(), c.imag()});
    rep.write_csv("coeffs.csv", "re,im", crow);
    write_zeros(rep, roots, Complex{0.0});

    double worst = 0.0;
    for (Complex r : roots) worst = std::max(worst, std::abs(std::abs(r) - 1.0));
    rep.add("command", "rubinstein");
    rep.add("poly", poly_text);
    rep.add("k", k);
    rep.add("degree", static_cast<int>(q.size()) - 1);
    rep.add("target_radius", 1.0);
    rep.add("zero_count", static_cast<int>(roots.size()));
    rep.add("max_modulus_defect", worst);
    rep.add("elapsed_ms", ms.count());
    rep.write_report();
    return 0;
}

int run_rmt_sample(int N, uint64_t seed, const std::string& out) {
    Reporter rep(out);
    EigenphaseSample s = sample_haar(N, seed);
    CharPoly p = char_poly(s);

    std::vector<std::vector<double>> ph;
    for (double t : s.phases) ph.push_back({t});
    rep.write_csv("phases.csv", "theta", ph);
    std::vector<std::vector<double>> crow;
    for (int n = 0; n <= p.coeffs.order(); ++n)
        crow.push_back({p.coeffs[n].real(), p.coeffs[n].imag()});
    rep.write_csv("coeffs.csv", "re,im", crow);

    double worst = 0.0;
    for (Complex r : poly_roots(p.coeffs.coeffs()))
        worst = std::max(worst, std::abs(std::abs(r) - 1.0));
    rep.add("command", "rmt-sample");
    rep.add("N", N);
    rep.add("seed", std::to_string(seed));
    rep.add("lambda_at_zero", num(p.coeffs[0]));
    rep.add("leading_modulus", std::abs(p.coeffs[N]));
    rep.add("target_radius", 1.0);
    rep.add("max_root_modulus_defect", worst);
    rep.write_report();
    return 0;
}

int run_rmt_prob(const std::string& fn_text, double r, double eps, int N, int trials,
                 uint64_t seed, const std::string& out) {
    Reporter rep(out);
    FunctionSpec spec = parse_function_spec(fn_text);

    auto t0 = std::chrono::steady_clock::now();
    ApproxProbability res = approx_probability(spec.evaluator(), r, eps, N, trials, seed);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);

    rep.write_csv("probability.csv", "epsilon,probability,wilson_low,wilson_high,successes,trials",
                  {{eps, res.probability, res.wilson_low, res.wilson_high,
                    static_cast<double>(res.successes), static_cast<double>(res.trials)}});
    rep.add("command", "rmt-prob");
    rep.add("fn", fn_text);
    rep.add("r", r);
    rep.add("eps", eps);
    rep.add("N", N);
    rep.add("trials", trials);
    rep.add("seed", std::to_string(seed));
    rep.add("probability", res.probability);
    rep.add("wilson_low", res.wilson_low);
    rep.add("wilson_high", res.wilson_high);
    rep.add("successes", res.successes);
    rep.add("elapsed_ms", ms.count());
    rep.write_report();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructive approximants with all zeros on a circle"};
    app.require_subcommand(1);

    std::string fn, out, poly, center_text = "0";
    double radius = 0.2, r = 0.5, delta = 0.1, eps = 1e-2;
    int k = 12, N = 6, trials = 200;
    uint64_t seed = 1;

    auto* ap = app.add_subcommand("approx-poly", "Polynomial with unimodular zeros on a disc");
    ap->add_option("--fn", fn, "target function spec")->required();
    ap->add_option("--center", center_text, "disc center (complex)");
    ap->add_option("--radius", radius, "disc radius")->required();
    ap->add_option("--eps", eps, "error budget");
    ap->add_option("--out", out, "output directory");

    auto* ab = app.add_subcommand("approx-blaschke", "Blaschke-type approximant, zeros on a circle");
    ab->add_option("--fn", fn, "target function spec")->required();
    ab->add_option("--center", center_text, "disc center (complex)");
    ab->add_option("--r", r, "disc radius; zeros land on |w - center| = r")->required();
    ab->add_option("--delta", delta, "relative margin: error measured up to r (1 - delta)");
    ab->add_option("--eps", eps, "error budget");
    ab->add_option("--out", out, "output directory");

    auto* tr = app.add_subcommand("transport", "Euclidean disc -> pseudohyperbolic parameters");
    tr->add_option("--center", center_text, "disc center (complex)")->required();
    tr->add_option("--radius", radius, "disc radius")->required();
    tr->add_option("--out", out, "output directory");

    auto* ru = app.add_subcommand("rubinstein", "p + z^k p* with unimodular roots");
    ru->add_option("--poly", poly, "coefficients of p, ascending")->required();
    ru->add_option("--k", k, "shift exponent")->required();
    ru->add_option("--out", out, "output directory");

    auto* rs = app.add_subcommand("rmt-sample", "Haar eigenphases and characteristic polynomial");
    rs->add_option("--n", N, "matrix size")->required();
    rs->add_option("--seed", seed, "RNG seed");
    rs->add_option("--out", out, "output directory");

    auto* rp = app.add_subcommand("rmt-prob", "Probability of epsilon-approximation by CUE samples");
    rp->add_option("--fn", fn, "target function spec")->required();
    rp->add_option("--r", r, "grid radius")->required();
    rp->add_option("--eps", eps, "error budget");
    rp->add_option("--n", N, "matrix size");
    rp->add_option("--trials", trials, "Monte Carlo trials");
    rp->add_option("--seed", seed, "base RNG seed");
    rp->add_option("--out", out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Complex center = parse_complex(center_text);
        if (ap->parsed()) return run_approx_poly(fn, center, radius, eps, out);
        if (ab->parsed()) return run_approx_blaschke(fn, center, r, delta, eps, out);
        if (tr->parsed()) return run_transport(center, radius, out);
        if (ru->parsed()) return run_rubinstein(poly, k, out);
        if (rs->parsed()) return run_rmt_sample(N, seed, out);
        if (rp->parsed()) return run_rmt_prob(fn, r, eps, N, trials, seed, out);
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
