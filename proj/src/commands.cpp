#include "iqfrac/commands.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "iqfrac/density.hpp"
#include "iqfrac/errors.hpp"
#include "iqfrac/modular.hpp"

namespace iqfrac {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

json rational_json(const Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}, {"value", r.to_double()}};
}

json ideal_json(const Ideal& i) {
    return json::array({i.a, i.b, i.c});
}

struct FieldBundle {
    QuadraticField k;
    ClassGroup cg;
    RepSystem rs;
};

FieldBundle load_field(std::int64_t d, bool with_structure = false) {
    FieldBundle fb;
    fb.k = make_field(d);
    fb.cg = reduced_forms(fb.k.disc);
    if (with_structure) group_structure(fb.k, fb.cg);
    fb.rs = minimal_norm_reps(fb.k, fb.cg);
    return fb;
}

OutputFormat effective_format(const RunConfig& cfg) {
    if (cfg.format != OutputFormat::unset) return cfg.format;
    if (cfg.command == "eta" || cfg.command == "density" || cfg.command == "baseline")
        return OutputFormat::csv;
    return OutputFormat::json;
}

void require_format(const RunConfig& cfg, std::initializer_list<OutputFormat> allowed) {
    const OutputFormat f = effective_format(cfg);
    for (const OutputFormat a : allowed)
        if (f == a) return;
    throw std::invalid_argument("unsupported --format for command '" + cfg.command + "'");
}

std::string cmd_classgroup(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::json});
    const QuadraticField k = make_field(cfg.d);
    const ClassGroup cg = reduced_forms(k.disc);
    json forms = json::array();
    for (const QuadForm& f : cg.classes) forms.push_back(json::array({f.A, f.B, f.C}));
    const json out{{"d", k.n}, {"d_K", k.disc}, {"h", cg.h}, {"forms", forms}};
    return out.dump(2) + "\n";
}

std::string cmd_reps(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::json});
    const FieldBundle fb = load_field(cfg.d);
    json out = json::array();
    for (const RepEntry& r : fb.rs.reps)
        out.push_back(json{{"ideal", ideal_json(r.ideal)},
                           {"norm", ideal_norm(r.ideal)},
                           {"class", r.class_index}});
    return out.dump(2) + "\n";
}

std::string cmd_eta(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::csv});
    if (cfg.norm_max > kResidueBudget)
        throw budget_exceeded("eta: denominators of norm up to " + std::to_string(cfg.norm_max) +
                              " exceed the residue budget " + std::to_string(kResidueBudget));
    const FieldBundle fb = load_field(cfg.d);
    std::ostringstream os;
    os << "b,N(b),phi,eta,eta_oracle\n";
    for (const AlgebraicInt& b : enumerate_by_norm(fb.k, cfg.norm_max)) {
        os << to_string(b) << ',' << norm(fb.k, b) << ',' << coprime_count(fb.k, b) << ','
           << eta(fb.k, fb.rs, b) << ',' << eta_oracle(fb.k, fb.rs, b) << '\n';
    }
    return os.str();
}

std::string density_csv(const FieldBundle& fb, const DensityTable& t) {
    std::ostringstream os;
    os << "b,N(b),phi";
    for (std::size_t g = 1; g < fb.rs.reps.size(); ++g) os << ",phi_div_g" << g;
    os << ",eta,phi_over_eta,cum_phi,cum_eta,cum_ratio_num,cum_ratio_den,cum_ratio_float\n";
    for (const DensityRow& row : t.rows) {
        os << to_string(row.b) << ',' << row.norm << ',' << row.phi;
        for (std::size_t g = 1; g < row.phi_by_rep.size(); ++g) os << ',' << row.phi_by_rep[g];
        const Rational per_b(row.phi, row.eta);
        os << ',' << row.eta << ',' << per_b.str() << ',' << row.cum_phi << ',' << row.cum_eta;
        if (row.level_end) {
            const Rational r(row.cum_phi, row.cum_eta);
            os << ',' << r.num() << ',' << r.den() << ',' << fmt_double(r.to_double());
        } else {
            os << ",,,";
        }
        os << '\n';
    }
    return os.str();
}

std::string density_svg(const DensityTable& t) {
    // Self-contained polyline chart of the cumulative ratio per norm level.
    const double width = 800, height = 400;
    const double left = 50, right = 10, top = 10, bottom = 30;
    const double x0 = left, x1 = width - right, y0 = height - bottom, y1 = top;
    const double xmax = static_cast<double>(t.report.series.empty()
                                                ? 1
                                                : t.report.series.back().cutoff);
    auto sx = [&](double cutoff) { return x0 + (x1 - x0) * cutoff / xmax; };
    auto sy = [&](double ratio) { return y0 + (y1 - y0) * ratio; };  // ratio in [0, 1]

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
       << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
       << "\" stroke=\"black\"/>\n";
    const double delta = t.report.theoretical.to_double();
    os << "<line x1=\"" << x0 << "\" y1=\"" << fmt_double(sy(delta)) << "\" x2=\"" << x1
       << "\" y2=\"" << fmt_double(sy(delta))
       << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
    for (const DensitySeriesPoint& p : t.report.series)
        os << fmt_double(sx(static_cast<double>(p.cutoff))) << ',' << fmt_double(sy(p.ratio.to_double()))
           << ' ';
    os << "\"/>\n";
    os << "<text x=\"" << x0 << "\" y=\"" << height - 8 << "\" font-size=\"12\">N(b) up to "
       << (t.report.series.empty() ? 0 : t.report.series.back().cutoff) << "</text>\n";
    os << "<text x=\"" << 4 << "\" y=\"" << fmt_double(sy(delta) - 4)
       << "\" font-size=\"12\">delta=" << t.report.theoretical.str() << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

json report_json(const DensityReport& r) {
    json series = json::array();
    for (const DensitySeriesPoint& p : r.series)
        series.push_back(json{{"cutoff", p.cutoff},
                              {"count", p.count},
                              {"cum_phi", p.cum_phi},
                              {"cum_eta", p.cum_eta},
                              {"ratio", rational_json(p.ratio)}});
    return json{{"d", r.field_n},
                {"d_K", r.disc},
                {"h", r.h},
                {"rep_norms", r.rep_norms},
                {"series", series},
                {"theoretical", rational_json(r.theoretical)},
                {"lower", rational_json(r.lower)},
                {"improved_lower", rational_json(r.improved_lower)},
                {"B_scan", r.b_gap},
                {"upper", r.upper},
                {"minkowski", r.minkowski},
                {"phi_growth_over_x2", r.phi_growth},
                {"uniformity_max", r.uniformity_max}};
}

std::string cmd_density(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::csv, OutputFormat::json, OutputFormat::svg});
    const FieldBundle fb = load_field(cfg.d);
    const DensityTable t = density_table(fb.k, fb.cg, fb.rs, cfg.norm_max);
    switch (effective_format(cfg)) {
        case OutputFormat::svg:
            return density_svg(t);
        case OutputFormat::json:
            return report_json(t.report).dump(2) + "\n";
        default:
            return density_csv(fb, t);
    }
}

std::string cmd_bounds(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::json});
    const FieldBundle fb = load_field(cfg.d);
    const Rational theo = theoretical_density(fb.rs);
    const std::int64_t gap = nonprincipal_norm_gap(fb.k, fb.cg);
    const Rational improved = fb.cg.h == 1 ? Rational(1) : lower_bound(fb.cg.h, gap);
    const json out{{"d", fb.k.n},
                   {"d_K", fb.k.disc},
                   {"h", fb.cg.h},
                   {"B_scan", gap},
                   {"lower", rational_json(lower_bound(fb.cg.h, 1))},
                   {"improved_lower", rational_json(improved)},
                   {"theoretical", rational_json(theo)},
                   {"upper", upper_bound(fb.k.disc, fb.cg.h)},
                   {"minkowski", minkowski_bound(fb.k)},
                   {"sharp", improved == theo}};
    return out.dump(2) + "\n";
}

std::string cmd_lcheck(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::json});
    FieldBundle fb = load_field(cfg.d, /*with_structure=*/true);
    json chars = json::array();
    for (int chi = 0; chi < fb.cg.h; ++chi) {
        const LQuotient q = l_quotient_check(fb.k, fb.cg, chi, cfg.s, cfg.x_ideal, cfg.p_prime);
        chars.push_back(json{{"chi", chi},
                             {"lhs", {{"re", q.lhs.real()}, {"im", q.lhs.imag()}}},
                             {"rhs", {{"re", q.rhs.real()}, {"im", q.rhs.imag()}}},
                             {"gap", q.gap}});
    }
    const json out{{"d", fb.k.n},       {"d_K", fb.k.disc},       {"h", fb.cg.h},
                   {"s", cfg.s},        {"x_ideal", cfg.x_ideal}, {"p_prime", cfg.p_prime},
                   {"characters", chars}};
    return out.dump(2) + "\n";
}

std::string cmd_baseline(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::csv});
    std::ostringstream os;
    os << "n,cum_phi_p,cum_phi,ratio_num,ratio_den,ratio_float\n";
    for (const BaselineRow& row : rational_baseline(cfg.p_prime, cfg.norm_max)) {
        os << row.n << ',' << row.cum_restricted << ',' << row.cum_total << ','
           << row.ratio.num() << ',' << row.ratio.den() << ','
           << fmt_double(row.ratio.to_double()) << '\n';
    }
    return os.str();
}

CMPoint parse_tau(const QuadraticField& k, const std::string& text) {
    std::int64_t ax, ay, bx, by;
    if (std::sscanf(text.c_str(),
                    "(%" SCNd64 ",%" SCNd64 ")/(%" SCNd64 ",%" SCNd64 ")",
                    &ax, &ay, &bx, &by) != 4)
        throw std::invalid_argument("cmcheck: tau must look like (a_x,a_y)/(b_x,b_y)");
    return make_cm_point(k, {ax, ay}, {bx, by});
}

std::string cmd_cmcheck(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::json});
    const FieldBundle fb = load_field(cfg.d);
    const CMPoint tau = parse_tau(fb.k, cfg.tau);
    const CmVerdict v = cm_check(fb.k, fb.cg, tau);
    const json out{{"tau", cfg.tau},
                   {"d", fb.k.n},
                   {"d_K", fb.k.disc},
                   {"form", json::array({v.form.A, v.form.B, v.form.C})},
                   {"disc", v.disc},
                   {"conductor", v.conductor},
                   {"check", v.used_order_route ? "order" : "fundamental"},
                   {"class_xi", v.class_xi},
                   {"class_gcd", v.class_gcd},
                   {"match", v.match}};
    return out.dump(2) + "\n";
}

}  // namespace

std::string run_to_string(const RunConfig& cfg) {
    if (cfg.command == "classgroup") return cmd_classgroup(cfg);
    if (cfg.command == "reps") return cmd_reps(cfg);
    if (cfg.command == "eta") return cmd_eta(cfg);
    if (cfg.command == "density") return cmd_density(cfg);
    if (cfg.command == "bounds") return cmd_bounds(cfg);
    if (cfg.command == "lcheck") return cmd_lcheck(cfg);
    if (cfg.command == "baseline") return cmd_baseline(cfg);
    if (cfg.command == "cmcheck") return cmd_cmcheck(cfg);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int code = 0;
    std::string kind, message;
    try {
        out << run_to_string(cfg);
        return 0;
    } catch (const budget_exceeded& e) {
        code = 3;
        kind = "budget_exceeded";
        message = e.what();
    } catch (const std::overflow_error& e) {
        code = 4;
        kind = "overflow";
        message = e.what();
    } catch (const non_integral_quotient& e) {
        code = 5;
        kind = "non_integral_quotient";
        message = e.what();
    } catch (const precondition_error& e) {
        code = 5;
        kind = "precondition";
        message = e.what();
    } catch (const std::domain_error& e) {
        code = 5;
        kind = "domain";
        message = e.what();
    } catch (const std::invalid_argument& e) {
        code = 2;
        kind = "invalid_argument";
        message = e.what();
    } catch (const std::exception& e) {
        code = 1;
        kind = "error";
        message = e.what();
    }
    const json jerr{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
    err << jerr.dump() << "\n";
    return code;
}

}  // namespace iqfrac
