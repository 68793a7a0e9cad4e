#include "netenergy/node_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace netenergy {

namespace {

// Token reader that tracks line numbers and strips '#' comments.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    int line() const { return line_; }

    bool next(std::string& tok) {
        while (true) {
            if (pos_ >= current_.size()) {
                if (!std::getline(in_, current_)) return false;
                ++line_;
                const auto hash = current_.find('#');
                if (hash != std::string::npos) current_.erase(hash);
                pos_ = 0;
            }
            while (pos_ < current_.size() && std::isspace(static_cast<unsigned char>(current_[pos_])))
                ++pos_;
            if (pos_ >= current_.size()) continue;
            const std::size_t start = pos_;
            while (pos_ < current_.size() && !std::isspace(static_cast<unsigned char>(current_[pos_])))
                ++pos_;
            tok = current_.substr(start, pos_ - start);
            return true;
        }
    }

    double read_real(const char* what) {
        std::string tok;
        if (!next(tok)) throw ParseError(std::string("unexpected end of input reading ") + what, line_);
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &consumed);
        } catch (const std::exception&) {
            throw ParseError(std::string("expected a number for ") + what + ", got '" + tok + "'", line_);
        }
        if (consumed != tok.size())
            throw ParseError(std::string("trailing characters in number '") + tok + "'", line_);
        if (!std::isfinite(v))
            throw ParseError(std::string("non-finite value for ") + what, line_);
        return v;
    }

    std::size_t read_dim(const char* what) {
        const double v = read_real(what);
        if (v < 1.0 || v != std::floor(v) || v > 4096.0)
            throw ParseError(std::string("invalid dimension for ") + what, line_);
        return static_cast<std::size_t>(v);
    }

private:
    std::istream& in_;
    std::string current_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

RealMatrix read_matrix(TokenReader& r, std::size_t rows, std::size_t cols, const char* what) {
    RealMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = r.read_real(what);
    return m;
}

void write_matrix(std::ostream& out, const RealMatrix& m) {
    char buf[64];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            out << (j ? " " : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace

NodeSystem parse_node_stream(std::istream& in, const std::string& name) {
    TokenReader r(in);
    const std::size_t n = r.read_dim("state dimension n");
    const std::size_t m = r.read_dim("input dimension m");
    const std::size_t l = r.read_dim("output dimension l");
    RealMatrix a1 = read_matrix(r, n, n, "A1");
    RealMatrix b1 = read_matrix(r, n, m, "B1");
    RealMatrix c1 = read_matrix(r, l, n, "C1");
    std::string extra;
    if (r.next(extra))
        throw ParseError("unexpected trailing data in " + name + ": '" + extra + "'", r.line());
    return make_node_system(std::move(a1), std::move(b1), std::move(c1));
}

NodeSystem parse_node_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open node file: " + path);
    return parse_node_stream(in, path);
}

void write_node_stream(std::ostream& out, const NodeSystem& node) {
    out << node.a1.rows() << ' ' << node.b1.cols() << ' ' << node.c1.rows() << '\n';
    write_matrix(out, node.a1);
    write_matrix(out, node.b1);
    write_matrix(out, node.c1);
}

void write_node_file(const std::string& path, const NodeSystem& node) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open node file for writing: " + path);
    write_node_stream(out, node);
}

RealMatrix parse_coupling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open coupling file: " + path);
    TokenReader r(in);
    const std::size_t n = r.read_dim("coupling dimension n");
    RealMatrix g = read_matrix(r, n, n, "coupling matrix");
    std::string extra;
    if (r.next(extra)) throw ParseError("unexpected trailing data: '" + extra + "'", r.line());
    return g;
}

NodeSystem example_node_1() {
    return make_node_system(RealMatrix{{-4.5}}, RealMatrix{{1.0}}, RealMatrix{{3.0}});
}

NodeSystem example_node_2() {
    return make_node_system(RealMatrix{{0.0, 1.0}, {-4.0, -2.5}}, RealMatrix{{0.0}, {1.0}},
                            RealMatrix{{2.0, 2.0}});
}

}  // namespace netenergy
