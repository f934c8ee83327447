#ifndef COVERMETRIC_IO_HPP
#define COVERMETRIC_IO_HPP

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "covermetric/code.hpp"
#include "covermetric/errors.hpp"
#include "covermetric/field.hpp"
#include "covermetric/mat.hpp"
#include "covermetric/reduction.hpp"

namespace covermetric {

// Plain-text, line-oriented instance formats. '#' starts a comment; blank
// lines are ignored. Serialization is canonical: reading a written file and
// writing it again reproduces the bytes.
//
// covermetric v1
// field p e [c_e ... c_0]     (modulus high to low, omitted when e = 1)
// dims m n k
// k*m generator rows, entries as decimal element indices
// received                    (optional, followed by m rows)
// radius t                    (optional)
struct InstanceFile {
    FieldPtr f;
    int m = 0, n = 0, k = 0;
    std::vector<Mat> generators;
    std::optional<Mat> received;
    std::optional<int> radius;
};

namespace detail {

class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-empty line with comments stripped; nullopt at end of input.
    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in_, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return tokens;
        }
        return std::nullopt;
    }

  private:
    std::istream& in_;
};

inline long parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw ParseError(std::string("bad ") + what + ": " + s);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError(std::string("bad ") + what + ": " + s);
    }
}

inline FieldPtr parse_field_line(const std::vector<std::string>& tokens) {
    if (tokens.size() < 3 || tokens[0] != "field") throw ParseError("expected 'field p e ...' line");
    long p = parse_int(tokens[1], "p");
    long e = parse_int(tokens[2], "e");
    if (p < 2 || e < 1) throw ParseError("bad field parameters");
    FieldPtr f = make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
    if (e == 1) {
        if (tokens.size() != 3) throw ParseError("field line for e=1 carries no modulus");
        return f;
    }
    if (tokens.size() != 3 + static_cast<std::size_t>(e) + 1)
        throw ParseError("field line: expected e+1 modulus coefficients");
    for (long i = 0; i <= e; ++i) {
        long c = parse_int(tokens[3 + i], "modulus coefficient");
        if (c != f->modulus()[e - i]) throw ParseError("field line: modulus is not the canonical one");
    }
    return f;
}

inline std::vector<Elem> parse_row(const std::vector<std::string>& tokens, int n, std::uint32_t q) {
    if (static_cast<int>(tokens.size()) != n) throw ParseError("matrix row: wrong number of entries");
    std::vector<Elem> row(n);
    for (int j = 0; j < n; ++j) {
        long v = parse_int(tokens[j], "entry");
        if (v < 0 || v >= static_cast<long>(q)) throw ParseError("entry out of range for the field");
        row[j] = static_cast<Elem>(v);
    }
    return row;
}

inline Mat parse_matrix(LineReader& reader, const FieldPtr& f, int m, int n) {
    std::vector<std::vector<Elem>> rows;
    for (int i = 0; i < m; ++i) {
        auto tokens = reader.next();
        if (!tokens) throw ParseError("unexpected end of file inside a matrix");
        rows.push_back(parse_row(*tokens, n, f->q()));
    }
    return Mat::from_rows(f, rows);
}

inline void write_field_line(std::ostream& out, const FieldSpec& f) {
    out << "field " << f.p() << ' ' << f.e();
    if (f.e() > 1)
        for (int i = static_cast<int>(f.e()); i >= 0; --i) out << ' ' << f.modulus()[i];
    out << '\n';
}

inline void write_matrix(std::ostream& out, const Mat& a) {
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << a.at(i, j);
        }
        out << '\n';
    }
}

}  // namespace detail

inline InstanceFile read_instance(std::istream& in) {
    detail::LineReader reader(in);
    auto header = reader.next();
    if (!header || header->size() != 2 || (*header)[0] != "covermetric" || (*header)[1] != "v1")
        throw ParseError("expected header 'covermetric v1'");
    auto field_line = reader.next();
    if (!field_line) throw ParseError("missing field line");
    InstanceFile inst;
    inst.f = detail::parse_field_line(*field_line);
    auto dims = reader.next();
    if (!dims || dims->size() != 4 || (*dims)[0] != "dims") throw ParseError("expected 'dims m n k'");
    inst.m = static_cast<int>(detail::parse_int((*dims)[1], "m"));
    inst.n = static_cast<int>(detail::parse_int((*dims)[2], "n"));
    inst.k = static_cast<int>(detail::parse_int((*dims)[3], "k"));
    if (inst.m < 1 || inst.n < 1 || inst.k < 0 || inst.k > inst.m * inst.n) throw ParseError("bad dims");
    for (int i = 0; i < inst.k; ++i) inst.generators.push_back(detail::parse_matrix(reader, inst.f, inst.m, inst.n));
    for (auto tokens = reader.next(); tokens; tokens = reader.next()) {
        if ((*tokens)[0] == "received" && tokens->size() == 1) {
            if (inst.received) throw ParseError("duplicate received block");
            inst.received = detail::parse_matrix(reader, inst.f, inst.m, inst.n);
        } else if ((*tokens)[0] == "radius" && tokens->size() == 2) {
            if (inst.radius) throw ParseError("duplicate radius line");
            inst.radius = static_cast<int>(detail::parse_int((*tokens)[1], "radius"));
        } else {
            throw ParseError("unexpected line: " + (*tokens)[0]);
        }
    }
    return inst;
}

inline void write_instance(std::ostream& out, const InstanceFile& inst) {
    out << "covermetric v1\n";
    detail::write_field_line(out, *inst.f);
    out << "dims " << inst.m << ' ' << inst.n << ' ' << inst.k << '\n';
    for (const Mat& g : inst.generators) detail::write_matrix(out, g);
    if (inst.received) {
        out << "received\n";
        detail::write_matrix(out, *inst.received);
    }
    if (inst.radius) out << "radius " << *inst.radius << '\n';
}

// hamming v1
// field p e [c_e ... c_0]
// dims k n t
// k generator rows
// received                    (optional, followed by 1 row)
inline HammingInstance read_hamming(std::istream& in) {
    detail::LineReader reader(in);
    auto header = reader.next();
    if (!header || header->size() != 2 || (*header)[0] != "hamming" || (*header)[1] != "v1")
        throw ParseError("expected header 'hamming v1'");
    auto field_line = reader.next();
    if (!field_line) throw ParseError("missing field line");
    HammingInstance h;
    h.f = detail::parse_field_line(*field_line);
    auto dims = reader.next();
    if (!dims || dims->size() != 4 || (*dims)[0] != "dims") throw ParseError("expected 'dims k n t'");
    int k = static_cast<int>(detail::parse_int((*dims)[1], "k"));
    int n = static_cast<int>(detail::parse_int((*dims)[2], "n"));
    h.t = static_cast<int>(detail::parse_int((*dims)[3], "t"));
    if (k < 1 || n < 1 || h.t < 0 || h.t > n) throw ParseError("bad dims");
    for (int i = 0; i < k; ++i) {
        auto tokens = reader.next();
        if (!tokens) throw ParseError("unexpected end of file inside the generator matrix");
        h.gen_rows.push_back(detail::parse_row(*tokens, n, h.f->q()));
    }
    auto tokens = reader.next();
    if (tokens) {
        if ((*tokens)[0] != "received" || tokens->size() != 1) throw ParseError("unexpected line: " + (*tokens)[0]);
        auto row = reader.next();
        if (!row) throw ParseError("missing received row");
        h.received = detail::parse_row(*row, n, h.f->q());
        if (reader.next()) throw ParseError("trailing content after received row");
    }
    return h;
}

inline void write_hamming(std::ostream& out, const HammingInstance& h) {
    out << "hamming v1\n";
    detail::write_field_line(out, *h.f);
    out << "dims " << h.k() << ' ' << h.n() << ' ' << h.t << '\n';
    for (const auto& row : h.gen_rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << row[j];
        }
        out << '\n';
    }
    if (h.received) {
        out << "received\n";
        for (std::size_t j = 0; j < h.received->size(); ++j) {
            if (j) out << ' ';
            out << (*h.received)[j];
        }
        out << '\n';
    }
}

inline InstanceFile read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return read_instance(in);
}

inline void write_instance_file(const std::string& path, const InstanceFile& inst) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    write_instance(out, inst);
}

inline HammingInstance read_hamming_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return read_hamming(in);
}

inline void write_hamming_file(const std::string& path, const HammingInstance& h) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    write_hamming(out, h);
}

inline MatrixCode instance_code(const InstanceFile& inst) {
    return MatrixCode::make(inst.f, inst.m, inst.n, inst.generators);
}

}  // namespace covermetric

#endif  // COVERMETRIC_IO_HPP
