#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netenergy/coupling.hpp"
#include "netenergy/network.hpp"

namespace netenergy::cli {

enum class Precision { Table, Full };  // 6 vs 12 significant digits

std::string format_number(double v, Precision p);

/// "constructed" | "diffusive" | "antisym[metric]" | "custom:<path>"
CouplingKind parse_coupling_option(const std::string& text);

/// Which coupling family and I/O shape each published table uses. The
/// overrides allow combinations outside the five presets (for example
/// diffusive coupling with the column/row shape).
struct TableSpec {
    int table_id = 1;                  // 1..5
    std::string example_id = "ex1";    // ex1 | ex2
    std::vector<std::size_t> n_list;
    std::optional<CouplingKind> override_coupling;
    std::optional<IoShape> override_io;
};

CouplingKind table_coupling(int table_id);
IoShape table_io_shape(int table_id);

/// One CSV row per N: "N,h2_norm,status" with status ok|unstable (unstable
/// rows carry an empty norm field).
void run_table(const TableSpec& spec, const NodeSystem& node, Precision precision,
               std::ostream& out);

/// Closed-form spectrum where one exists (constructed/diffusive), computed
/// eigenvalues otherwise or when force_computed is set. One CSV line sorted
/// ascending by real part, then imaginary part.
void run_spectrum(const CouplingKind& kind, std::size_t n, bool force_computed,
                  Precision precision, std::ostream& out);

/// Prints "stable" or "unstable".
void run_stability(const NodeSystem& node, const CouplingKind& kind, std::size_t n,
                   std::ostream& out);

/// CSV "n,h2_full,h2_reduced,rel_err" for the ColumnRow constructed network.
void run_reduce(const NodeSystem& node, std::size_t n, Precision precision, std::ostream& out);

struct LureOptions {
    CouplingKind coupling = CouplingKind::diffusive();
    std::size_t n_nodes = 16;
    std::vector<double> scales = {1.0};
    double dt = 1e-3;
    double t_end = 10.0;
    std::size_t stride = 1;
    bool report_energy = false;
};

/// CSV "t,z" (one scale) or "t,z,z_perturbed,err" (two scales) to `out`;
/// summary lines ("l2_error=", "linearized_energy=") to `summary`.
void run_lure(const NodeSystem& node, const RealMatrix& b01, const RealMatrix& c01,
              const LureOptions& opts, std::ostream& out, std::ostream& summary);

}  // namespace netenergy::cli
