#include "matdom/io.hpp"

#include <fstream>
#include <sstream>

namespace matdom::io {

namespace {

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_comment(const std::string& line) {
    return !line.empty() && line[0] == '#';
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

// Reads the next non-comment line; returns false at EOF.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        line = strip_cr(std::move(line));
        if (!is_comment(line)) {
            return true;
        }
    }
    return false;
}

} // namespace

Instance read_instance(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) {
        throw ValidationError("instance file: missing header line");
    }
    std::istringstream header(line);
    int rows = 0;
    int cols = 0;
    if (!(header >> rows >> cols)) {
        throw ValidationError("instance file: header must be \"n m\", got \"" + line + "\"");
    }
    std::string trailing;
    if (header >> trailing) {
        throw ValidationError("instance file: unexpected token \"" + trailing + "\" in header");
    }
    if (rows < 1 || cols < 1) {
        throw ValidationError("instance file: dimensions must be positive");
    }

    std::vector<std::uint8_t> entries;
    entries.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        if (!next_data_line(in, line)) {
            throw ValidationError("instance file: expected " + std::to_string(rows) +
                                  " rows, got " + std::to_string(r));
        }
        if (static_cast<int>(line.size()) != cols) {
            throw ValidationError("instance file: row " + std::to_string(r) + " has " +
                                  std::to_string(line.size()) + " characters, expected " +
                                  std::to_string(cols));
        }
        for (char ch : line) {
            if (ch != '0' && ch != '1') {
                throw ValidationError("instance file: row " + std::to_string(r) +
                                      " contains character '" + std::string(1, ch) +
                                      "', expected '0' or '1'");
            }
            entries.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    while (next_data_line(in, line)) {
        if (!is_blank(line)) {
            throw ValidationError("instance file: unexpected content after last row: \"" + line +
                                  "\"");
        }
    }
    return Instance(rows, cols, std::move(entries));
}

void write_instance(std::ostream& out, const Instance& instance) {
    out << instance.rows() << ' ' << instance.cols() << '\n';
    for (int r = 0; r < instance.rows(); ++r) {
        for (int c = 0; c < instance.cols(); ++c) {
            out << (instance.at(r, c) ? '1' : '0');
        }
        out << '\n';
    }
}

Placement read_placement(std::istream& in) {
    std::vector<Coord> coords;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (is_comment(line) || is_blank(line)) {
            continue;
        }
        std::istringstream fields(line);
        Coord c;
        std::string trailing;
        if (!(fields >> c.row >> c.col) || (fields >> trailing)) {
            throw ValidationError("placement file: line " + std::to_string(line_no) +
                                  " must be \"i j\", got \"" + line + "\"");
        }
        coords.push_back(c);
    }
    return Placement(std::move(coords));
}

void write_placement(std::ostream& out, const Placement& placement) {
    for (Coord c : placement.coords()) {
        out << c.row << ' ' << c.col << '\n';
    }
}

std::string instance_to_text(const Instance& instance) {
    std::ostringstream out;
    write_instance(out, instance);
    return out.str();
}

std::string placement_to_text(const Placement& placement) {
    std::ostringstream out;
    write_placement(out, placement);
    return out.str();
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open instance file: " + path);
    }
    return read_instance(in);
}

void write_instance_file(const std::string& path, const Instance& instance) {
    write_text_file(path, instance_to_text(instance));
}

Placement read_placement_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open placement file: " + path);
    }
    return read_placement(in);
}

void write_placement_file(const std::string& path, const Placement& placement) {
    write_text_file(path, placement_to_text(placement));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open file for writing: " + path);
    }
    out << text;
    if (!out) {
        throw ValidationError("failed writing file: " + path);
    }
}

} // namespace matdom::io
