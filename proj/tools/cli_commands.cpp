#include "cli_commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "netenergy/h2.hpp"
#include "netenergy/lure.hpp"
#include "netenergy/node_io.hpp"

namespace netenergy::cli {

std::string format_number(double v, Precision p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), p == Precision::Table ? "%.6g" : "%.12g", v);
    return buf;
}

CouplingKind parse_coupling_option(const std::string& text) {
    if (text == "constructed") return CouplingKind::constructed();
    if (text == "diffusive") return CouplingKind::diffusive();
    if (text == "antisym" || text == "antisymmetric") return CouplingKind::antisymmetric();
    if (text.rfind("custom:", 0) == 0)
        return CouplingKind::custom_matrix(parse_coupling_file(text.substr(7)));
    throw Error("unknown coupling '" + text +
                "' (expected constructed|diffusive|antisym|custom:<path>)");
}

CouplingKind table_coupling(int table_id) {
    switch (table_id) {
        case 1:
        case 3: return CouplingKind::constructed();
        case 4: return CouplingKind::diffusive();
        case 2:
        case 5: return CouplingKind::antisymmetric();
        default: throw Error("table id must be 1..5");
    }
}

IoShape table_io_shape(int table_id) {
    if (table_id < 1 || table_id > 5) throw Error("table id must be 1..5");
    return table_id <= 2 ? IoShape::ColumnRow : IoShape::BlockDiagonal;
}

void run_table(const TableSpec& spec, const NodeSystem& node, Precision precision,
               std::ostream& out) {
    const CouplingKind kind =
        spec.override_coupling ? *spec.override_coupling : table_coupling(spec.table_id);
    const IoShape shape = spec.override_io ? *spec.override_io : table_io_shape(spec.table_id);
    out << "N,h2_norm,status\n";
    for (std::size_t n : spec.n_list) {
        const RealMatrix gamma = coupling_matrix(kind, n);
        if (!stable_by_coupling_spectrum(node, gamma)) {
            out << n << ",,unstable\n";
            continue;
        }
        const double norm = h2_norm(assemble(node, gamma, shape)).norm;
        out << n << ',' << format_number(norm, precision) << ",ok\n";
    }
}

namespace {

std::string format_eigenvalue(std::complex<double> z, Precision p) {
    if (z.imag() == 0.0) return format_number(z.real(), p);
    const std::string im = format_number(std::abs(z.imag()), p);
    return format_number(z.real(), p) + (z.imag() < 0.0 ? "-" : "+") + im + "j";
}

}  // namespace

void run_spectrum(const CouplingKind& kind, std::size_t n, bool force_computed,
                  Precision precision, std::ostream& out) {
    Spectrum sp;
    const bool closed_form = !force_computed && (kind.family == CouplingFamily::Constructed ||
                                                 kind.family == CouplingFamily::Diffusive) &&
                             n >= 2;
    if (closed_form)
        sp = predicted_spectrum(kind, n);
    else
        sp = eigenvalues(coupling_matrix(kind, n));
    std::sort(sp.values.begin(), sp.values.end(), [](auto a, auto b) {
        if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (std::size_t i = 0; i < sp.values.size(); ++i)
        out << (i ? "," : "") << format_eigenvalue(sp.values[i], precision);
    out << '\n';
}

void run_stability(const NodeSystem& node, const CouplingKind& kind, std::size_t n,
                   std::ostream& out) {
    const RealMatrix gamma = coupling_matrix(kind, n);
    out << (stable_by_coupling_spectrum(node, gamma) ? "stable" : "unstable") << '\n';
}

void run_reduce(const NodeSystem& node, std::size_t n, Precision precision, std::ostream& out) {
    if (n < 4) throw Error("reduce: n must be at least 4 (reductions exist for even n >= 4 and odd n >= 5)");
    const NetworkRealization reduced =
        n % 2 == 0 ? reduce_even(node, n) : reduce_odd(node, n);
    const double red = h2_norm(reduced).norm;
    const double full =
        h2_norm(assemble(node, build_constructed(n), IoShape::ColumnRow)).norm;
    out << "n,h2_full,h2_reduced,rel_err\n";
    out << n << ',' << format_number(full, precision) << ',' << format_number(red, precision)
        << ',' << format_number(std::abs(full - red) / full, precision) << '\n';
}

void run_lure(const NodeSystem& node, const RealMatrix& b01, const RealMatrix& c01,
              const LureOptions& opts, std::ostream& out, std::ostream& summary) {
    if (opts.scales.empty() || opts.scales.size() > 2)
        throw Error("lure: --scales takes one or two values");
    LureConfig cfg;
    cfg.node = node;
    cfg.b01 = b01;
    cfg.c01 = c01;
    cfg.coupling = opts.coupling;
    cfg.n_nodes = opts.n_nodes;
    cfg.dt = opts.dt;
    cfg.t_end = opts.t_end;

    cfg.ic_scale = opts.scales[0];
    const Trajectory primary = simulate(cfg);
    if (opts.scales.size() == 1) {
        write_trajectory_csv(out, primary, opts.stride);
    } else {
        cfg.ic_scale = opts.scales[1];
        const Trajectory perturbed = simulate(cfg);
        out << "t,z,z_perturbed,err\n";
        char buf[64];
        const std::size_t stride = opts.stride == 0 ? 1 : opts.stride;
        for (std::size_t i = 0; i < primary.times.size(); i += stride) {
            auto cell = [&](double v) {
                std::snprintf(buf, sizeof(buf), "%.12g", v);
                return std::string(buf);
            };
            out << cell(primary.times[i]) << ',' << cell(primary.z_values[i]) << ','
                << cell(perturbed.z_values[i]) << ','
                << cell(primary.z_values[i] - perturbed.z_values[i]) << '\n';
        }
        summary << "l2_error=" << format_number(output_error(primary, perturbed), Precision::Full)
                << '\n';
    }
    if (opts.report_energy) {
        cfg.ic_scale = opts.scales[0];
        summary << "linearized_energy="
                << format_number(linearized_output_energy(cfg), Precision::Full) << '\n';
    }
}

}  // namespace netenergy::cli
