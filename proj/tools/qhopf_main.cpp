#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qhopf/density.hpp"
#include "qhopf/evolution.hpp"
#include "qhopf/io.hpp"

namespace {

using namespace qhopf;

struct Options {
    bool json = false;
    unsigned long seed = 0;  // reproducibility hook for randomized tooling
};

void emit(const Record& rec, const Options& opt) {
    std::cout << (opt.json ? rec.as_json() + "\n" : rec.as_kv());
}

void put_point(Record& rec, const std::string& prefix, const S4Point& p) {
    for (int i = 0; i < 5; ++i) rec.put(prefix + std::to_string(i), p.xi[i]);
}

void put_quaternion(Record& rec, const std::string& prefix, const Quaternion& q) {
    rec.put(prefix + "_1", q.w);
    rec.put(prefix + "_i", q.x);
    rec.put(prefix + "_j", q.y);
    rec.put(prefix + "_k", q.z);
}

void put_matrix(Record& rec, const std::string& prefix, const Eigen::Matrix2cd& m) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            rec.put(prefix + std::to_string(r) + std::to_string(c), cplx(m(r, c)));
}

void put_frame(Record& rec, const std::string& prefix, const SchmidtFrame& f) {
    rec.put(prefix + "sigma", f.sigma);
    rec.put(prefix + "phi", f.phi);
    rec.put(prefix + "tau", f.tau);
    rec.put(prefix + "epsilon", f.epsilon);
    rec.put(prefix + "d_plus", f.D[0]);
    rec.put(prefix + "d_minus", f.D[1]);
    put_matrix(rec, prefix + "u", f.U);
    put_matrix(rec, prefix + "v", f.V);
    put_quaternion(rec, prefix + "q", f.Q.value());
    put_quaternion(rec, prefix + "p", f.P_phase.value());
    rec.put(prefix + "degenerate", static_cast<long>(f.degenerate ? 1 : 0));
}

int cmd_analyze(const std::string& path, const Options& opt) {
    const StateFile file = load_state_file(path);
    const auto inv = invariants(file.state);
    const S4Point xi = hopf_map(spinor_of_state(file.state));
    const S4Point eta = hopf_map_swapped(file.state);

    Record rec;
    rec.put("command", std::string("analyze"));
    if (file.label) rec.put("label", *file.label);
    rec.put("z", inv.z);
    rec.put("w", inv.w);
    rec.put("zeta", inv.zeta);
    rec.put("concurrence", inv.concurrence);
    rec.put("lambda_plus", inv.lambda_plus);
    rec.put("lambda_minus", inv.lambda_minus);
    rec.put("entropy", inv.entropy);
    rec.put("chi", inv.chi);
    put_point(rec, "xi", xi);
    put_point(rec, "eta", eta);
    emit(rec, opt);
    return 0;
}

double frame_deviation(const SchmidtFrame& a, const SchmidtFrame& b) {
    double dev = std::max(std::abs(a.D[0] - b.D[0]), std::abs(a.D[1] - b.D[1]));
    // columns agree up to the per-column phase convention
    for (int col = 0; col < 2; ++col) {
        const cplx cu = a.U.col(col).adjoint() * b.U.col(col);
        const cplx cv = a.V.col(col).adjoint() * b.V.col(col);
        dev = std::max(dev, std::abs(1.0 - std::abs(cu)));
        dev = std::max(dev, std::abs(1.0 - std::abs(cv)));
    }
    return dev;
}

int cmd_schmidt(const std::string& path, const std::string& method, const Options& opt) {
    const StateFile file = load_state_file(path);
    Record rec;
    rec.put("command", std::string("schmidt"));
    rec.put("method", method);
    std::optional<SchmidtFrame> svd_frame, transport_frame;
    if (method == "svd" || method == "both") {
        svd_frame = schmidt_svd(file.state);
        put_frame(rec, "svd_", *svd_frame);
    }
    if (method == "transport" || method == "both") {
        transport_frame = schmidt_transport(file.state);
        put_frame(rec, "transport_", *transport_frame);
    }
    if (method == "both") rec.put("deviation", frame_deviation(*svd_frame, *transport_frame));
    emit(rec, opt);
    return 0;
}

int cmd_holonomy(const std::string& path, bool compare, int steps_override, const Options& opt) {
    LoopFile file = load_loop_file(path);
    const int steps = steps_override > 0 ? steps_override : file.n_steps;

    Record rec;
    rec.put("command", std::string("holonomy"));
    rec.put("kind", file.kind);
    const HolonomyResult num = transport_loop(file.loop, steps);
    rec.put("n_steps", num.n_steps);  // sampled loops run at their own resolution
    put_quaternion(rec, "q", num.q.value());
    rec.put("residual", num.residual);
    if (compare) {
        if (file.loop.kind != LoopSpec::Kind::generator_orbit)
            raise(ErrorCode::ParseError, "--compare needs a generator loop");
        const Projector p = projector_of(file.loop.base);
        const auto [mat, closed] = holonomy_closed_form(p, file.loop.generator, file.t_end);
        put_quaternion(rec, "closed_form_q", closed.q.value());
        rec.put("distance", distance(num.q.value(), closed.q.value()));
    }
    emit(rec, opt);
    return 0;
}

int cmd_evolve(const std::string& path, const std::string& mode, double ramp, long steps_flag,
               const Options& opt) {
    LoopFile file = load_loop_file(path);

    PathFn fn;
    if (file.loop.kind == LoopSpec::Kind::generator_orbit) {
        // Exact orbit through the eigendecomposition of the 5x5 rotation.
        const Eigen::Matrix<double, 5, 5> rot = rotation_of_generator(file.loop.generator);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(rot.cast<cplx>());
        const Eigen::MatrixXcd vecs = eig.eigenvectors();
        const Eigen::VectorXcd vals = eig.eigenvalues();
        Eigen::VectorXcd base_coeff = vecs.colPivHouseholderQr().solve(
            Eigen::Map<const Eigen::Matrix<double, 5, 1>>(file.loop.base.xi.data()).cast<cplx>());
        const double t_end = file.t_end;
        fn = [vecs, vals, base_coeff, t_end](double s) {
            const Eigen::VectorXcd xi =
                vecs * (vals.array() * (s * t_end)).exp().matrix().asDiagonal() * base_coeff;
            std::array<double, 5> out{};
            for (int i = 0; i < 5; ++i) out[i] = xi(i).real();
            return S4Point(out);
        };
    } else {
        // Piecewise-linear interpolation of the samples, renormalized.
        const auto pts = file.loop.points;
        fn = [pts](double s) {
            const double pos = std::clamp(s, 0.0, 1.0) * (pts.size() - 1);
            const std::size_t lo = std::min<std::size_t>(static_cast<std::size_t>(pos),
                                                         pts.size() - 2);
            const double frac = pos - static_cast<double>(lo);
            std::array<double, 5> out{};
            for (int i = 0; i < 5; ++i)
                out[i] = (1.0 - frac) * pts[lo].xi[i] + frac * pts[lo + 1].xi[i];
            return S4Point(out, 1.0);  // renormalizing constructor, loose tolerance
        };
    }

    Record rec;
    rec.put("command", std::string("evolve"));
    rec.put("mode", mode);
    std::optional<EvolutionReport> report;
    if (mode == "adiabatic") {
        const double T = ramp > 0 ? ramp : 50.0 * 2.0 * M_PI;
        const long steps = steps_flag > 0 ? steps_flag : std::max<long>(20000, std::lround(T * 200));
        report = adiabatic_evolve(fn, T, steps);
    } else if (mode == "cyclic") {
        const long steps = steps_flag > 0 ? steps_flag : file.n_steps;
        report = cyclic_evolve(fn, file.t_end, steps);
    } else {
        raise(ErrorCode::ParseError, "unknown evolve mode: " + mode);
    }
    put_quaternion(rec, "geometric_phase", report->geometric_phase.value());
    rec.put("dynamical_phase_bound", report->dynamical_phase_bound);
    rec.put("transport_distance", report->transport_distance);
    rec.put("ramp_time", report->ramp_time);
    rec.put("steps", report->steps);
    rec.put("unitarity_residual", report->unitarity_residual);
    emit(rec, opt);
    return 0;
}

int cmd_fidelity(const std::string& path1, const std::string& path2,
                 std::vector<std::string> formulas, const Options& opt) {
    if (formulas.empty()) formulas = {"hopf"};
    const StateFile f1 = load_state_file(path1);
    const StateFile f2 = load_state_file(path2);
    const QSpinor u = spinor_of_state(f1.state);
    const QSpinor v = spinor_of_state(f2.state);

    Record rec;
    rec.put("command", std::string("fidelity"));
    std::vector<std::pair<std::string, double>> values;
    for (const auto& f : formulas) {
        double val = 0.0;
        if (f == "matrix") {
            val = bures_fidelity(reduced_densities(f1.state).first,
                                 reduced_densities(f2.state).first);
        } else if (f == "hopf") {
            val = fidelity_hopf(u, v);
        } else if (f == "hyperbolic") {
            val = fidelity_hyperbolic(u, v);
        } else {
            raise(ErrorCode::ParseError, "unknown fidelity formula: " + f);
        }
        values.emplace_back(f, val);
        rec.put("fidelity_" + f, val);
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            rec.put("deviation_" + values[i].first + "_" + values[j].first,
                    std::abs(values[i].second - values[j].second));
    emit(rec, opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit entanglement geometry toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a single JSON object instead of key/value lines");
    app.add_option("--seed", opt.seed, "seed for randomized tooling (reproducibility)");

    std::string state_path, state_path2, loop_path;
    std::string method = "svd", mode = "cyclic";
    std::vector<std::string> formulas;
    bool compare = false;
    int steps = 0;
    double ramp = 0.0;

    auto* analyze = app.add_subcommand("analyze", "entanglement invariants and Hopf coordinates");
    analyze->add_option("state", state_path, "state file")->required();

    auto* schmidt = app.add_subcommand("schmidt", "Schmidt decomposition");
    schmidt->add_option("state", state_path, "state file")->required();
    schmidt->add_option("--method", method, "svd | transport | both")
        ->check(CLI::IsMember({"svd", "transport", "both"}));

    auto* holonomy = app.add_subcommand("holonomy", "loop anholonomy");
    holonomy->add_option("loop", loop_path, "loop file")->required();
    holonomy->add_flag("--compare", compare, "also evaluate the closed form (generator loops)");
    holonomy->add_option("--steps", steps, "override the sample count");

    auto* evolve = app.add_subcommand("evolve", "Schroedinger evolution along a loop");
    evolve->add_option("loop", loop_path, "loop file")->required();
    evolve->add_option("--mode", mode, "adiabatic | cyclic")
        ->check(CLI::IsMember({"adiabatic", "cyclic"}));
    evolve->add_option("--ramp", ramp, "adiabatic ramp time");
    evolve->add_option("--steps", steps, "integration steps");

    auto* fidelity = app.add_subcommand("fidelity", "state fidelities");
    fidelity->add_option("state1", state_path, "first state file")->required();
    fidelity->add_option("state2", state_path2, "second state file")->required();
    fidelity->add_option("--formula", formulas, "matrix | hopf | hyperbolic (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(state_path, opt);
        if (*schmidt) return cmd_schmidt(state_path, method, opt);
        if (*holonomy) return cmd_holonomy(loop_path, compare, steps, opt);
        if (*evolve) return cmd_evolve(loop_path, mode, ramp, steps, opt);
        if (*fidelity) return cmd_fidelity(state_path, state_path2, formulas, opt);
    } catch (const qhopf::Error& e) {
        std::cerr << "error " << to_string(e.code()) << " " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error Internal " << e.what() << "\n";
        return 1;
    }
    return 0;
}
