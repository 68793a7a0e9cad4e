#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cli_commands.hpp"
#include "netenergy/node_io.hpp"

namespace {

using namespace netenergy;
using namespace netenergy::cli;

std::vector<std::size_t> parse_n_list(const std::string& csv) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        const long v = std::stol(tok);
        if (v < 1) throw Error("--n-list entries must be positive");
        out.push_back(static_cast<std::size_t>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw Error("--n-list must not be empty");
    return out;
}

std::vector<double> parse_scales(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        out.push_back(std::stod(csv.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Writes CSV to --out when given, stdout otherwise.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"H2-norm energy analysis of linearly coupled dynamical networks"};
    app.require_subcommand(1);

    std::string node_path, coupling_text = "constructed", out_path, precision_text = "table";
    std::string example_id = "ex1", n_list_text, scales_text = "1.0";
    std::size_t n = 2;
    int table_id = 1;
    bool computed = false, energy = false;
    double dt = 1e-3, t_end = 10.0;
    std::size_t stride = 1;

    std::string table_coupling_text, table_io_text;
    auto* table = app.add_subcommand("table", "reproduce one of the published norm tables");
    table->add_option("--id", table_id, "table number 1..5")->required();
    table->add_option("--example", example_id, "built-in node: ex1 or ex2");
    table->add_option("--node", node_path, "node-system file overriding --example");
    table->add_option("--n-list", n_list_text, "comma-separated node counts")->required();
    table->add_option("--coupling", table_coupling_text, "override the table's coupling family");
    table->add_option("--io", table_io_text, "override the table's shape: columnrow|blockdiag");
    table->add_option("--out", out_path, "write CSV here instead of stdout");
    table->add_option("--precision", precision_text, "table (6 digits) or full (12)");

    auto* spectrum = app.add_subcommand("spectrum", "coupling spectrum (closed form when known)");
    spectrum->add_option("--coupling", coupling_text, "constructed|diffusive|antisym|custom:<path>")
        ->required();
    spectrum->add_option("--n", n, "coupling size")->required();
    spectrum->add_flag("--computed", computed, "force the numeric eigensolver");
    spectrum->add_option("--out", out_path);
    spectrum->add_option("--precision", precision_text);

    auto* stability = app.add_subcommand("stability", "coupling-spectrum stability verdict");
    stability->add_option("--node", node_path, "node-system file")->required();
    stability->add_option("--coupling", coupling_text)->required();
    stability->add_option("--n", n)->required();
    stability->add_option("--out", out_path);

    auto* reduce = app.add_subcommand("reduce", "reduced equivalent vs full network norm");
    reduce->add_option("--node", node_path)->required();
    reduce->add_option("--n", n)->required();
    reduce->add_option("--out", out_path);
    reduce->add_option("--precision", precision_text);

    auto* lure = app.add_subcommand("lure", "simulate the piecewise-linear Lur'e network");
    lure->add_option("--node", node_path)->required();
    lure->add_option("--coupling", coupling_text);
    lure->add_option("--n", n)->required();
    lure->add_option("--scales", scales_text, "one or two initial-condition scales");
    lure->add_option("--dt", dt, "step size in seconds");
    lure->add_option("--t-end", t_end, "horizon in seconds");
    lure->add_option("--stride", stride, "emit every k-th sample");
    lure->add_flag("--energy", energy, "also print the linearized output energy");
    lure->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        const Precision precision = precision_text == "full" ? Precision::Full : Precision::Table;
        OutputTarget target(out_path);

        if (*table) {
            NodeSystem node;
            if (!node_path.empty())
                node = parse_node_file(node_path);
            else if (example_id == "ex1")
                node = example_node_1();
            else if (example_id == "ex2")
                node = example_node_2();
            else
                throw Error("--example must be ex1 or ex2");
            TableSpec spec;
            spec.table_id = table_id;
            spec.example_id = example_id;
            spec.n_list = parse_n_list(n_list_text);
            if (!table_coupling_text.empty())
                spec.override_coupling = parse_coupling_option(table_coupling_text);
            if (!table_io_text.empty()) {
                if (table_io_text == "columnrow")
                    spec.override_io = IoShape::ColumnRow;
                else if (table_io_text == "blockdiag")
                    spec.override_io = IoShape::BlockDiagonal;
                else
                    throw Error("--io must be columnrow or blockdiag");
            }
            run_table(spec, node, precision, target.stream());
        } else if (*spectrum) {
            run_spectrum(parse_coupling_option(coupling_text), n, computed, precision,
                         target.stream());
        } else if (*stability) {
            run_stability(parse_node_file(node_path), parse_coupling_option(coupling_text), n,
                          target.stream());
        } else if (*reduce) {
            run_reduce(parse_node_file(node_path), n, precision, target.stream());
        } else if (*lure) {
            const NodeSystem node = parse_node_file(node_path);
            if (node.b1.cols() != 1 || node.c1.rows() != 1)
                throw Error("lure: the node must be single-input single-output");
            LureOptions opts;
            opts.coupling = parse_coupling_option(coupling_text);
            opts.n_nodes = n;
            opts.scales = parse_scales(scales_text);
            opts.dt = dt;
            opts.t_end = t_end;
            opts.stride = stride;
            opts.report_energy = energy;
            run_lure(node, node.b1, node.c1, opts, target.stream(), std::cout);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
