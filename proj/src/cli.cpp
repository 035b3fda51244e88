#include "qsegre/cli.hpp"

#include "qsegre/conifold.hpp"
#include "qsegre/hopf.hpp"
#include "qsegre/oracle.hpp"
#include "qsegre/segre.hpp"
#include "qsegre/state_file.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

namespace qsegre::cli {

namespace {

using json = nlohmann::ordered_json;

/// Largest |coordinate| treated as zero when reporting the hopf2 j sector.
constexpr double kJSectorZero = 1e-10;

struct Options {
    bool json_output = false;
    bool normalize = false;
    std::string path;
};

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

std::string complex_text(Complex c) { return fmt::format("({}, {})", c.real(), c.imag()); }

template <class Range>
json complex_list_json(const Range& values) {
    json out = json::array();
    for (const Complex& c : values) out.push_back(complex_json(c));
    return out;
}

template <class Range>
std::string complex_list_text(const Range& values) {
    std::vector<std::string> parts;
    for (const Complex& c : values) parts.push_back(complex_text(c));
    return fmt::format("{}", fmt::join(parts, " "));
}

json generator_json(const MinorDescriptor& g) {
    return {{"coordinate", g.coordinate},
            {"k", g.k.entries},
            {"l", g.l.entries},
            {"polynomial", render_generator(g)}};
}

PureState load_state(const Options& opt) {
    StateFile file = read_state_file(opt.path);
    return opt.normalize ? file.state.normalized() : std::move(file.state);
}

std::array<Complex, 4> parse_complex4(const std::vector<double>& values, const std::string& flag) {
    if (values.size() != 8)
        throw std::invalid_argument(flag + " expects 8 comma-separated reals (re,im pairs), got " +
                                    std::to_string(values.size()));
    std::array<Complex, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = {values[2 * i], values[2 * i + 1]};
    return out;
}

void emit(std::ostream& out, const Options& opt, const json& report, const std::string& text) {
    if (opt.json_output)
        out << report.dump(2) << '\n';
    else
        out << text;
}

int cmd_separable(const Options& opt, double tol, bool all, std::ostream& out) {
    const PureState state = load_state(opt);
    const SeparabilityVerdict v = is_separable(state, tol);
    const auto worst = v.report.worst();

    json report{{"command", "separable"},
                {"dims", state.dims()},
                {"separable", v.separable},
                {"max_residual", v.report.max_modulus},
                {"tolerance", tol},
                {"threshold", v.threshold},
                {"generator_count", v.report.generator_count}};
    report["worst_generator"] = worst ? generator_json(v.report.per_generator[*worst].generator) : json();
    if (all) {
        json residuals = json::array();
        for (const auto& r : v.report.per_generator) {
            json entry = generator_json(r.generator);
            entry["residual"] = complex_json(r.residual);
            residuals.push_back(std::move(entry));
        }
        report["residuals"] = std::move(residuals);
    }

    std::string text = fmt::format("verdict: {}\nmax residual: {}\nthreshold: {}\ngenerators: {}\n",
                                   v.separable ? "separable" : "entangled", v.report.max_modulus,
                                   v.threshold, v.report.generator_count);
    if (worst)
        text += fmt::format("worst generator: {}\n", render_generator(v.report.per_generator[*worst].generator));
    if (all)
        for (const auto& r : v.report.per_generator)
            text += fmt::format("  {} = {}\n", render_generator(r.generator), complex_text(r.residual));
    emit(out, opt, report, text);
    return v.separable ? kSeparable : kEntangled;
}

int cmd_concurrence(const Options& opt, double normalization, std::ostream& out) {
    const PureState state = load_state(opt);
    const double c = concurrence_bipartite(state, normalization);
    const double residual_norm = segre_residual_norm(state);
    json report{{"command", "concurrence"},
                {"dims", state.dims()},
                {"normalization", normalization},
                {"concurrence", c},
                {"segre_residual_norm", residual_norm}};
    emit(out, opt, report,
         fmt::format("concurrence: {}\nnormalization: {}\nsegre residual norm (diagnostic): {}\n", c,
                     normalization, residual_norm));
    return kOk;
}

int cmd_hopf(const Options& opt, int order, std::ostream& out) {
    const PureState state = load_state(opt);
    BasePoint point;
    switch (order) {
    case 1: point = hopf1(state); break;
    case 2: point = hopf2(state); break;
    case 3: point = hopf3(state); break;
    default: throw UnsupportedOrder("order must be 1, 2 or 3");
    }
    json report{{"command", "hopf"},
                {"order", order},
                {"coords", point.coords},
                {"squared_norm", point.squared_norm()}};
    std::string text = fmt::format("order: {}\nbase point: {}\nsquared norm: {}\n", order,
                                   fmt::join(point.coords, " "), point.squared_norm());
    if (order == 2) {
        const auto js = j_sector(point);
        const double magnitude = std::hypot(js[0], js[1]);
        const bool vanishes = std::abs(js[0]) < kJSectorZero && std::abs(js[1]) < kJSectorZero;
        report["j_sector"] = js;
        report["j_sector_magnitude"] = magnitude;
        report["j_sector_vanishes"] = vanishes;
        text += fmt::format("j-sector: {} {} (magnitude {})\n", js[0], js[1], magnitude);
        text += vanishes ? "j-sector ≈ 0: separable\n" : "j-sector nonzero: entangled\n";
    }
    emit(out, opt, report, text);
    return kOk;
}

int cmd_generators(const Options& opt, const std::vector<std::size_t>& dims, std::ostream& out) {
    const auto generators = generate_generators(dims);
    json list = json::array();
    for (const auto& g : generators) list.push_back(generator_json(g));
    json report{{"command", "generators"},
                {"dims", dims},
                {"count", generators.size()},
                {"generators", std::move(list)}};
    emit(out, opt, report, render_generators_text(generators));
    return kOk;
}

json conifold_json(const std::string& command, const AlphaCoords& alpha, const ConifoldPoint& p) {
    return {{"command", command},
            {"alpha", complex_list_json(alpha)},
            {"z", complex_list_json(p.z)},
            {"sum_z_squared", complex_json(p.quadric())},
            {"segre_quadric", complex_json(segre_quadric(alpha))},
            {"on_variety", p.on_variety()}};
}

std::string conifold_text(const AlphaCoords& alpha, const ConifoldPoint& p) {
    return fmt::format("alpha': {}\nz: {}\nsum z^2: {}\nalpha'11 alpha'22 - alpha'12 alpha'21: {}\non conifold: {}\n",
                       complex_list_text(alpha), complex_list_text(p.z), complex_text(p.quadric()),
                       complex_text(segre_quadric(alpha)), p.on_variety() ? "yes" : "no");
}

int cmd_conifold(const Options& opt, const std::string& mode, const std::vector<double>& values,
                 std::ostream& out) {
    if (mode == "to-z") {
        const AlphaCoords alpha = parse_complex4(values, "--alpha");
        const ConifoldPoint p = z_from_alpha(alpha);
        json report = conifold_json("conifold to-z", alpha, p);
        emit(out, opt, report, conifold_text(alpha, p));
        return kOk;
    }
    const ConifoldPoint p{parse_complex4(values, "--z")};
    const AlphaCoords alpha = alpha_from_z(p);
    json report = conifold_json("conifold " + mode, alpha, p);
    std::string text = conifold_text(alpha, p);
    if (mode == "check") {
        std::array<double, 4> x{}, y{};
        for (std::size_t i = 0; i < 4; ++i) {
            x[i] = p.z[i].real();
            y[i] = p.z[i].imag();
        }
        const RealFormResiduals f = real_form_residuals(x, y);
        report["f1"] = f.f1;
        report["f2"] = f.f2;
        text += fmt::format("f1: {}\nf2: {}\n", f.f1, f.f2);
    }
    emit(out, opt, report, text);
    return kOk;
}

int cmd_bell(const Options& opt, std::ostream& out) {
    const PureState state = load_state(opt);
    const BellRewrite b = bell_coefficients(state);
    json report{{"command", "bell"},
                {"basis", {"Psi+", "Psi-", "Phi+", "Phi-"}},
                {"coefficients", complex_list_json(b.coefficients)},
                {"reconstructed", complex_list_json(b.reconstructed)},
                {"norm_ratio", b.norm_ratio}};
    emit(out, opt, report,
         fmt::format("Psi+: {}\nPsi-: {}\nPhi+: {}\nPhi-: {}\nalpha': {}\nnorm ratio: {}\n",
                     complex_text(b.coefficients[0]), complex_text(b.coefficients[1]),
                     complex_text(b.coefficients[2]), complex_text(b.coefficients[3]),
                     complex_list_text(b.reconstructed), b.norm_ratio));
    return kOk;
}

template <class Matrix>
json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class Matrix>
std::string matrix_text(const Matrix& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::vector<double> row(m.cols());
        for (Eigen::Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
        out += fmt::format("  {}\n", fmt::join(row, " "));
    }
    return out;
}

int cmd_t11(const Options& opt, const std::string& mode, const T11Coords& c, std::ostream& out) {
    if (mode == "point") {
        const T11Point p = t11_point(c);
        json report = conifold_json("t11 point", p.alpha, p.z);
        report["sum_abs_alpha_squared"] = std::norm(p.alpha[0]) + std::norm(p.alpha[1]) +
                                          std::norm(p.alpha[2]) + std::norm(p.alpha[3]);
        report["sum_abs_z_squared"] = p.z.squared_norm();
        emit(out, opt, report,
             conifold_text(p.alpha, p.z) +
                 fmt::format("sum |alpha'|^2: {}\nsum |z|^2: {}\n", report["sum_abs_alpha_squared"].get<double>(),
                             p.z.squared_norm()));
        return kOk;
    }
    const T11Metric m = t11_metric(c);
    json report{{"command", "t11 metric"},
                {"angular_order", {"psi", "theta1", "phi1", "theta2", "phi2"}},
                {"angular", matrix_json(m.angular)},
                {"cone_order", {"r", "psi", "theta1", "phi1", "theta2", "phi2"}},
                {"cone", matrix_json(m.cone)}};
    emit(out, opt, report,
         "angular (psi theta1 phi1 theta2 phi2):\n" + matrix_text(m.angular) +
             "cone (r psi theta1 phi1 theta2 phi2):\n" + matrix_text(m.cone));
    return kOk;
}

int cmd_gen(const std::vector<std::size_t>& dims, std::uint64_t seed, bool product,
            const std::optional<std::string>& label, const std::string& output, std::ostream& out) {
    StateFile file{product ? random_product_state(dims, seed) : random_state(dims, seed), label};
    const std::string text = format_state_file(file);
    if (output.empty() || output == "-") {
        out << text;
    } else {
        std::ofstream f(output);
        if (!f) throw std::runtime_error("cannot write " + output);
        f << text;
    }
    return kOk;
}

int cmd_oracle(const Options& opt, double tol, std::ostream& out) {
    const PureState state = load_state(opt);
    json cuts = json::array();
    std::string text;
    if (state.factor_count() >= 2) {
        for (std::size_t j = 1; j <= state.factor_count(); ++j) {
            const std::size_t cut[] = {j};
            const auto spectrum = schmidt(state, cut);
            cuts.push_back({{"factor", j}, {"singular_values", spectrum.singular_values}});
            text += fmt::format("cut {{{}}}|rest: {}\n", j, fmt::join(spectrum.singular_values, " "));
        }
    }
    const bool separable = full_separability(state, tol);
    json report{{"command", "oracle"},
                {"dims", state.dims()},
                {"tolerance", tol},
                {"cuts", std::move(cuts)},
                {"fully_separable", separable}};
    text += fmt::format("fully separable: {}\n", separable ? "yes" : "no");
    emit(out, opt, report, text);
    return separable ? kSeparable : kEntangled;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Separability, concurrence, Hopf maps and conifold coordinates for pure states", "qsegre"};
    app.require_subcommand(1);

    Options opt;
    std::function<int()> action;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json_output, "JSON report on stdout"); };
    auto add_state = [&](CLI::App* sub) {
        sub->add_option("file", opt.path, "state file")->required();
        sub->add_flag("--normalize", opt.normalize, "rescale the input to unit norm first");
        add_json(sub);
    };

    double tol = kDefaultSeparabilityTolerance;
    bool all = false;
    auto* separable = app.add_subcommand("separable", "decide full separability from the Segre minors");
    add_state(separable);
    separable->add_option("--tol", tol, "relative threshold on the largest minor")->capture_default_str();
    separable->add_flag("--all", all, "list every generator residual");
    separable->callback([&] { action = [&] { return cmd_separable(opt, tol, all, out); }; });

    double normalization = 1.0;
    auto* concurrence = app.add_subcommand("concurrence", "generalized concurrence of a bipartite state");
    add_state(concurrence);
    concurrence->add_option("--normalization", normalization, "normalization constant N")->capture_default_str();
    concurrence->callback([&] { action = [&] { return cmd_concurrence(opt, normalization, out); }; });

    int order = 1;
    auto* hopf = app.add_subcommand("hopf", "first, second or third Hopf map");
    add_state(hopf);
    hopf->add_option("--order", order, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    hopf->callback([&] { action = [&] { return cmd_hopf(opt, order, out); }; });

    std::vector<std::size_t> dims;
    auto* generators = app.add_subcommand("generators", "list the quadric generators of the Segre ideal");
    generators->add_option("--dims", dims, "factor dimensions, e.g. 2,2,2")->required()->delimiter(',');
    add_json(generators);
    generators->callback([&] { action = [&] { return cmd_generators(opt, dims, out); }; });

    std::vector<double> values;
    auto* conifold = app.add_subcommand("conifold", "conifold coordinate changes");
    conifold->require_subcommand(1);
    std::string conifold_mode;
    for (const char* mode : {"to-alpha", "check"}) {
        auto* sub = conifold->add_subcommand(mode, std::string(mode) == "check"
                                                       ? "z to alpha', plus the conifold and real-form residuals"
                                                       : "z to alpha' and the conifold equation");
        sub->add_option("--z", values, "z1..z4 as re,im,re,im,...")->required()->delimiter(',');
        add_json(sub);
        sub->callback([&, mode] {
            conifold_mode = mode;
            action = [&] { return cmd_conifold(opt, conifold_mode, values, out); };
        });
    }
    auto* to_z = conifold->add_subcommand("to-z", "alpha' to z");
    to_z->add_option("--alpha", values, "a'11,a'12,a'21,a'22 as re,im pairs")->required()->delimiter(',');
    add_json(to_z);
    to_z->callback([&] {
        conifold_mode = "to-z";
        action = [&] { return cmd_conifold(opt, conifold_mode, values, out); };
    });

    auto* bell = app.add_subcommand("bell", "rewrite a two-qubit state in the Bell-type basis");
    add_state(bell);
    bell->callback([&] { action = [&] { return cmd_bell(opt, out); }; });

    T11Coords t11c;
    std::string t11_mode;
    auto* t11 = app.add_subcommand("t11", "T^{1,1} parameterization and metric");
    t11->require_subcommand(1);
    for (const char* mode : {"point", "metric"}) {
        auto* sub = t11->add_subcommand(mode, mode == std::string("point") ? "alpha' and z for given angles"
                                                                           : "metric components");
        sub->add_option("--r", t11c.r)->capture_default_str();
        sub->add_option("--psi", t11c.psi)->capture_default_str();
        sub->add_option("--theta1", t11c.theta1)->capture_default_str();
        sub->add_option("--phi1", t11c.phi1)->capture_default_str();
        sub->add_option("--theta2", t11c.theta2)->capture_default_str();
        sub->add_option("--phi2", t11c.phi2)->capture_default_str();
        add_json(sub);
        sub->callback([&, mode] {
            t11_mode = mode;
            action = [&] { return cmd_t11(opt, t11_mode, t11c, out); };
        });
    }

    std::uint64_t seed = 0;
    bool product = false;
    std::optional<std::string> label;
    std::string output;
    auto* gen = app.add_subcommand("gen", "write a random state file");
    gen->add_option("--dims", dims, "factor dimensions")->required()->delimiter(',');
    gen->add_option("--seed", seed, "PRNG seed; equal seeds give identical files")->capture_default_str();
    gen->add_flag("--product", product, "draw a product state");
    gen->add_option("--label", label, "optional label stored in the file");
    gen->add_option("-o,--output", output, "output path (default stdout)");
    gen->callback([&] { action = [&] { return cmd_gen(dims, seed, product, label, output, out); }; });

    double rank_tol = kDefaultRankTolerance;
    auto* oracle = app.add_subcommand("oracle", "Schmidt spectra of single-factor cuts");
    add_state(oracle);
    oracle->add_option("--tol", rank_tol, "relative rank threshold")->capture_default_str();
    oracle->callback([&] { action = [&] { return cmd_oracle(opt, rank_tol, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        return action();
    } catch (const StateFileError& e) {
        err << "error: invalid state file: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

} // namespace qsegre::cli
