/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bosonspec/fock.hpp"
#include "bosonspec/forms.hpp"
#include "bosonspec/json_io.hpp"
#include "bosonspec/multimode.hpp"
#include "bosonspec/normal_modes.hpp"
#include "bosonspec/quadrature.hpp"
#include "bosonspec/sweep.hpp"
#include "bosonspec/verify.hpp"
#include "bosonspec/wavefunctions.hpp"

namespace {

using namespace bosonspec;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNonDiag = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return j;
}

json bogoliubov_to_json(const BogoliubovCoeffs& c) {
    return json{{"u", complex_to_json(c.u)},
                {"v", complex_to_json(c.v)},
                {"ubar_star", complex_to_json(c.ubar_star)},
                {"vbar_star", complex_to_json(c.vbar_star)},
                {"lambda", complex_to_json(c.lambda)}};
}

int cmd_classify(const std::string& input, const std::string& out, double tol) {
    const OneModeForm f = one_mode_from_json(parse_json(read_input(input)));
    const RegionClass rc = classify(f, tol);
    json rep{{"form", one_mode_to_json(f)},
             {"region", region_name(rc.label)},
             {"code", region_code(rc.label)},
             {"ratio_v", rc.ratio_v},
             {"ratio_vbar", rc.ratio_vbar},
             {"conditional_convergence", rc.conditional_note},
             {"lambda", complex_to_json(lambda_of(f))}};
    try {
        rep["bogoliubov"] = bogoliubov_to_json(bogoliubov(f, tol));
    } catch (const NonDiagonalizableError&) {
        rep["bogoliubov"] = nullptr;
    }
    write_output(out, rep.dump(2) + "\n");
    return kExitOk;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out) {
    const SweepResult res = run_sweep(cfg);
    std::ostringstream csv;
    csv << "bp,bm,code,lambda_re,lambda_im\n";
    for (const SweepCell& c : res.cells) {
        csv << format_double(c.bp) << ',' << format_double(c.bm) << ',' << c.code << ','
            << format_double(c.lambda.real()) << ',' << format_double(c.lambda.imag()) << '\n';
    }
    write_output(out, csv.str());
    return kExitOk;
}

int cmd_spectrum(const std::string& input, const std::string& out, int k, int cutoff,
                 double tol) {
    const OneModeForm f = one_mode_from_json(parse_json(read_input(input)));
    const Region r = classify(f, tol).label;
    json rep{{"form", one_mode_to_json(f)}, {"region", region_name(r)}};
    if (r == Region::NonDiagII || r == Region::NonDiagIII || r == Region::CriticalHermitian ||
        r == Region::ZeroForm) {
        rep["spectrum"] = "lambda = 0: H is the square of a single linear combination; "
                          "no normal-mode ladder";
        write_output(out, rep.dump(2) + "\n");
        return kExitOk;
    }
    const cplx lam = lambda_of(f);
    json ladder = json::array(), ladder_adj = json::array();
    for (int n = 0; n < k; ++n) {
        ladder.push_back(complex_to_json(lam * (n + 0.5)));
        ladder_adj.push_back(complex_to_json(std::conj(lam) * (n + 0.5)));
    }
    switch (r) {
        case Region::I:
        case Region::BorderI_II: {
            rep["spectrum"] = "discrete";
            rep["levels"] = ladder;
            rep["adjoint_levels"] = ladder_adj;
            const SpectrumComparison cmp = compare_spectrum(f, cutoff, k);
            json matched = json::array();
            for (cplx e : cmp.matched) matched.push_back(complex_to_json(e));
            rep["oracle"] = json{{"cutoff", cutoff},
                                 {"matched", matched},
                                 {"max_abs_diff", cmp.max_abs_diff},
                                 {"doubling_shift", cmp.doubling_shift},
                                 {"stable", cmp.stable}};
            break;
        }
        case Region::II: {
            rep["spectrum"] =
                "continuous two-fold degenerate complex spectrum lambda(nu + 1/2); "
                "discrete positive and negative bands embedded";
            rep["levels"] = ladder;
            json neg = json::array();
            for (int n = 0; n < k; ++n) neg.push_back(complex_to_json(-lam * (n + 0.5)));
            rep["negative_band"] = neg;
            break;
        }
        case Region::III:
        case Region::BorderI_III: {
            rep["spectrum"] =
                "no convergent eigenstates of H; the adjoint carries the continuous spectrum";
            rep["adjoint_levels"] = ladder_adj;
            break;
        }
        default:
            break;
    }
    write_output(out, rep.dump(2) + "\n");
    return kExitOk;
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::VacuumB, Family::VacuumBbar, Family::ExcitedB, Family::ExcitedBbar,
                     Family::ContinuousB, Family::ContinuousBbarDag, Family::NegativeBand,
                     Family::Border, Family::Coherent}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown family: " + name);
}

int cmd_wavefunction(const std::string& input, const std::string& out,
                     const std::string& family, int n, cplx nu, cplx alpha, int grid,
                     double xmax, double tol) {
    const OneModeForm f = one_mode_from_json(parse_json(read_input(input)));
    const Family fam = family_from_name(family);
    WaveSpec spec{fam, n, nu, alpha};
    if ((fam == Family::ContinuousB || fam == Family::ContinuousBbarDag ||
         fam == Family::Border) &&
        nu == cplx(0.0, 0.0) && n != 0) {
        spec.nu = cplx(static_cast<double>(n), 0.0);
    }
    const Wavefunction wf = make_wavefunction(f, spec, true, tol);
    const ResidualReport res = schrodinger_residual(wf, xmax, grid);
    json header{{"form", one_mode_to_json(f)},
                {"family", family},
                {"n", spec.n},
                {"nu", complex_to_json(spec.nu)},
                {"alpha", complex_to_json(spec.alpha_c)},
                {"energy", complex_to_json(wf.energy())},
                {"adjoint_equation", wf.adjoint()},
                {"max_rel_residual", res.max_rel_residual}};
    std::ostringstream s;
    s << header.dump() << "\n" << "x,re,im\n";
    for (int i = 0; i < grid; ++i) {
        const double x = -xmax + 2.0 * xmax * i / (grid - 1);
        const cplx psi = wf(x);
        s << format_double(x) << ',' << format_double(psi.real()) << ','
          << format_double(psi.imag()) << '\n';
    }
    write_output(out, s.str());
    return kExitOk;
}

json jordan_to_json(const JordanInfo& info) {
    json clusters = json::array();
    for (const JordanCluster& c : info.clusters) {
        clusters.push_back(json{{"eigenvalue", complex_to_json(c.eigenvalue)},
                                {"algebraic", c.algebraic},
                                {"geometric", c.geometric},
                                {"block_sizes", c.block_sizes}});
    }
    return json{{"diagonalizable", info.diagonalizable},
                {"largest_block", info.largest_block},
                {"clusters", clusters}};
}

int cmd_nd(const std::string& input, const std::string& out, double tol) {
    const MultiModeForm f = multimode_from_json(parse_json(read_input(input)));
    const NormalModeDecomposition dec = decompose(f, tol);
    json rep{{"form", multimode_to_json(f)},
             {"diagonalizable", dec.diagonalizable},
             {"jordan", jordan_to_json(dec.jordan)}};
    if (dec.diagonalizable) {
        json lambdas = json::array();
        for (int i = 0; i < dec.lambdas.size(); ++i) {
            lambdas.push_back(complex_to_json(dec.lambdas(i)));
        }
        rep["lambdas"] = lambdas;
        const auto res = dec.w.constraint_residuals();
        rep["w"] = json{{"U", matrix_to_json(dec.w.u)},
                        {"V", matrix_to_json(dec.w.v)},
                        {"Vbar_star", matrix_to_json(dec.w.vbar_star)},
                        {"Ubar_star", matrix_to_json(dec.w.ubar_star)}};
        rep["residuals"] = json{{"symplectic", res[0]},
                                {"ws2", res[1]},
                                {"ws3", res[2]},
                                {"ws3_bar", res[3]},
                                {"offdiag", dec.offdiag_residual},
                                {"diag", dec.diag_residual}};
        rep["vacuum"] = json{{"b_vacuum_exists", dec.vacuum.b_vacuum_exists},
                             {"bbar_vacuum_exists", dec.vacuum.bbar_vacuum_exists},
                             {"u_singular", dec.vacuum.u_singular},
                             {"ubar_singular", dec.vacuum.ubar_singular}};
        json sig = json::array(), sigb = json::array();
        for (int i = 0; i < dec.vacuum.sigma.size(); ++i) sig.push_back(dec.vacuum.sigma(i));
        for (int i = 0; i < dec.vacuum.sigma_bar.size(); ++i) {
            sigb.push_back(dec.vacuum.sigma_bar(i));
        }
        rep["vacuum"]["sigma"] = sig;
        rep["vacuum"]["sigma_bar"] = sigb;
    }
    write_output(out, rep.dump(2) + "\n");
    return dec.diagonalizable ? kExitOk : kExitNonDiag;
}

int cmd_verify(const std::string& input, const std::string& out, double tol) {
    const OneModeForm f = one_mode_from_json(parse_json(read_input(input)));
    const auto results = verify_point(f, tol);
    bool all_pass = true;
    json items = json::array();
    for (const InvariantResult& r : results) {
        items.push_back(json{{"name", r.name}, {"pass", r.pass}, {"residual", r.residual}});
        all_pass = all_pass && r.pass;
    }
    json rep{{"form", one_mode_to_json(f)}, {"all_pass", all_pass}, {"invariants", items}};
    write_output(out, rep.dump(2) + "\n");
    return all_pass ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bosonspec: spectral analysis of quadratic boson forms"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input = "-", out = "-";
    double tol = 1e-9;
    app.add_option("--input", input, "input file or - for stdin")->capture_default_str();
    app.add_option("--out", out, "output file or - for stdout")->capture_default_str();
    app.add_option("--tol", tol, "classification tolerance")->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "classify one parameter point");

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "grid sweep; CSV codes: 1/2/3 regions, -1 border I-II, -2 border I-III, "
                 "-3/-4 nondiagonalizable (II/III side), -5 critical hermitian, 0 zero form");
    SweepConfig cfg;
    std::string plane = "real";
    int grid = 201;
    double theta = 0.0;
    sweep_cmd->add_option("--plane", plane, "real | modulus")->capture_default_str();
    sweep_cmd->add_option("--a", cfg.a, "A coefficient")->capture_default_str();
    sweep_cmd->add_option("--bp-min", cfg.bp_min)->capture_default_str();
    sweep_cmd->add_option("--bp-max", cfg.bp_max)->capture_default_str();
    sweep_cmd->add_option("--bm-min", cfg.bm_min)->capture_default_str();
    sweep_cmd->add_option("--bm-max", cfg.bm_max)->capture_default_str();
    sweep_cmd->add_option("--grid", grid, "points per axis")->capture_default_str();
    sweep_cmd->add_option("--theta", theta, "common B± phase (modulus plane)")
        ->capture_default_str();
    sweep_cmd->add_option("--workers", cfg.workers, "worker threads (0 = auto)")
        ->capture_default_str();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "analytic ladder + Fock oracle");
    int k = 5, cutoff = 300;
    spectrum_cmd->add_option("--levels", k, "number of levels")->capture_default_str();
    spectrum_cmd->add_option("--cutoff", cutoff, "Fock truncation")->capture_default_str();

    auto* wf_cmd = app.add_subcommand("wavefunction", "sample an eigenfunction family");
    std::string family = "vacuum_b";
    int qn = 0, wf_grid = 201;
    double nu_re = 0.0, nu_im = 0.0, alpha_re = 0.0, alpha_im = 0.0, xmax = 5.0;
    wf_cmd->add_option("--family", family,
                       "vacuum_b|vacuum_bbar|excited_b|excited_bbar|continuous_b|"
                       "continuous_bbar_dag|negative_band|border|coherent")
        ->capture_default_str();
    wf_cmd->add_option("--n", qn, "integer quantum number")->capture_default_str();
    wf_cmd->add_option("--nu-re", nu_re, "Re nu")->capture_default_str();
    wf_cmd->add_option("--nu-im", nu_im, "Im nu")->capture_default_str();
    wf_cmd->add_option("--alpha-re", alpha_re, "Re alpha (coherent)")->capture_default_str();
    wf_cmd->add_option("--alpha-im", alpha_im, "Im alpha (coherent)")->capture_default_str();
    wf_cmd->add_option("--grid", wf_grid, "sample count")->capture_default_str();
    wf_cmd->add_option("--xmax", xmax, "half-width of the sample range")->capture_default_str();

    auto* nd_cmd = app.add_subcommand("nd", "N-mode normal-mode decomposition");
    auto* verify_cmd = app.add_subcommand("verify", "invariant suite at one point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(input, out, tol);
        if (sweep_cmd->parsed()) {
            cfg.plane = (plane == "modulus") ? SweepPlane::Modulus : SweepPlane::RealBpm;
            if (plane != "real" && plane != "modulus") {
                throw std::invalid_argument("plane must be real or modulus");
            }
            if (cfg.plane == SweepPlane::Modulus && cfg.bp_min < 0.0) {
                cfg.bp_min = 0.0;
                cfg.bm_min = 0.0;
            }
            cfg.resolution = grid;
            cfg.theta = theta;
            cfg.tol = tol;
            return cmd_sweep(cfg, out);
        }
        if (spectrum_cmd->parsed()) return cmd_spectrum(input, out, k, cutoff, tol);
        if (wf_cmd->parsed()) {
            return cmd_wavefunction(input, out, family, qn, cplx(nu_re, nu_im),
                                    cplx(alpha_re, alpha_im), wf_grid, xmax, tol);
        }
        if (nd_cmd->parsed()) return cmd_nd(input, out, tol);
        if (verify_cmd->parsed()) return cmd_verify(input, out, tol);
    } catch (const RegionMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const NonDiagonalizableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonDiag;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitInput;
}
