#include "epsfront/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "epsfront/errors.hpp"

namespace epsfront {

namespace {
constexpr std::int64_t kLehmerModulus = 2147483647;  // 2^31 - 1
constexpr std::int64_t kLehmerMultiplier = 16807;
}  // namespace

LehmerStream::LehmerStream(std::int64_t seed) : state_(seed) {
    if (seed <= 0 || seed >= kLehmerModulus)
        throw std::invalid_argument("LehmerStream: seed must be in (0, 2^31-1)");
}

std::int64_t LehmerStream::next_raw() {
    state_ = (kLehmerMultiplier * state_) % kLehmerModulus;
    return state_;
}

std::int64_t LehmerStream::next_in(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("LehmerStream: lo > hi");
    const std::int64_t raw = next_raw();
    const std::int64_t width = hi - lo + 1;
    const std::int64_t value = lo + raw * width / kLehmerModulus;
    return std::min(value, hi);
}

void GeneratorSpec::validate() const {
    if (num_objectives < 2)
        throw std::invalid_argument("GeneratorSpec: need at least 2 objectives");
    if (num_vars < 1 || num_constraints < 1)
        throw std::invalid_argument("GeneratorSpec: need variables and constraints");
    if (coeff_lo > coeff_hi)
        throw std::invalid_argument("GeneratorSpec: empty coefficient range");
    if (objective_seeds.size() != static_cast<std::size_t>(num_objectives))
        throw std::invalid_argument("GeneratorSpec: one seed per objective required");
    if (constraint_seeds.size() != static_cast<std::size_t>(num_constraints))
        throw std::invalid_argument("GeneratorSpec: one seed per constraint required");
    if (instance_index < 0)
        throw std::invalid_argument("GeneratorSpec: instance_index must be >= 0");
}

MoilpProblem generate(const GeneratorSpec& spec) {
    spec.validate();
    MoilpProblem problem;
    problem.num_vars = spec.num_vars;
    problem.num_objectives = spec.num_objectives;
    problem.num_constraints = spec.num_constraints;
    problem.name = "gen-p" + std::to_string(spec.num_objectives) + "-n" +
                   std::to_string(spec.num_vars) + "-m" +
                   std::to_string(spec.num_constraints) + "-i" +
                   std::to_string(spec.instance_index);

    const std::int64_t offset = spec.seed_increment * spec.instance_index;
    for (int k = 0; k < spec.num_objectives; ++k) {
        LehmerStream stream(spec.objective_seeds[k] + offset);
        std::vector<std::int64_t> row(spec.num_vars);
        for (int j = 0; j < spec.num_vars; ++j)
            row[j] = stream.next_in(spec.coeff_lo, spec.coeff_hi);
        problem.objective_coeffs.push_back(std::move(row));
    }
    for (int i = 0; i < spec.num_constraints; ++i) {
        LehmerStream stream(spec.constraint_seeds[i] + offset);
        std::vector<std::int64_t> row(spec.num_vars);
        std::int64_t sum = 0;
        for (int j = 0; j < spec.num_vars; ++j) {
            row[j] = stream.next_in(spec.coeff_lo, spec.coeff_hi);
            sum += row[j];
        }
        problem.constraint_coeffs.push_back(std::move(row));
        problem.rhs.push_back(sum / 2);  // rhs bounded by half the row sum
    }
    problem.var_lower.assign(spec.num_vars, 0);
    if (spec.var_kind == VarKind::Binary)
        problem.var_upper.assign(spec.num_vars, std::optional<std::int64_t>(1));
    else
        problem.var_upper.assign(spec.num_vars, std::nullopt);
    problem.validate();
    return problem;
}

MoilpProblem illustrative_fixture() {
    MoilpProblem problem;
    problem.name = "illustrative";
    problem.num_vars = 7;
    problem.num_objectives = 3;
    problem.num_constraints = 7;
    problem.objective_coeffs = {
        {2, 0, 0, -2, 0, -2, -2},
        {-2, 1, 2, -1, 1, 2, -1},
        {-1, -2, 0, -2, 3, 1, 0},
    };
    problem.constraint_coeffs = {
        {1, 1, 3, 0, 3, 2, 0},
        {0, 3, 2, 4, 0, 0, 0},
        {5, 3, 0, 0, 5, 4, 4},
        {4, 2, 0, 4, 0, 4, 0},
        {5, 2, 0, 3, 1, 4, 0},
        {2, 2, 0, 4, 4, 4, 5},
        {3, 0, 2, 0, 5, 1, 2},
    };
    problem.rhs = {61, 72, 76, 51, 66, 59, 77};
    problem.var_lower.assign(7, 0);
    problem.var_upper.assign(7, std::nullopt);
    problem.validate();
    return problem;
}

namespace {

constexpr const char* kMagic = "epsfront-instance";
constexpr int kFormatVersion = 1;

struct LineReader {
    std::istream& in;
    int line_no = 0;

    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("instance parse error at line " + std::to_string(line_no) +
                         ": " + message);
    }

    std::string expect(const std::string& what) {
        std::string line;
        if (!next(line)) fail("unexpected end of file, expected " + what);
        return line;
    }
};

std::vector<std::int64_t> parse_ints(LineReader& reader, const std::string& line,
                                     int count, const std::string& what) {
    std::istringstream ss(line);
    std::vector<std::int64_t> values;
    std::int64_t v;
    while (ss >> v) values.push_back(v);
    if (static_cast<int>(values.size()) != count)
        reader.fail("expected " + std::to_string(count) + " values in " + what +
                    ", got " + std::to_string(values.size()));
    return values;
}

}  // namespace

void write_instance(const MoilpProblem& problem, std::ostream& out) {
    out << kMagic << " v" << kFormatVersion << "\n";
    if (!problem.name.empty()) out << "name " << problem.name << "\n";
    out << "vars " << problem.num_vars << "\n"
        << "objectives " << problem.num_objectives << "\n"
        << "constraints " << problem.num_constraints << "\n";
    auto dump = [&](const std::vector<std::int64_t>& row) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << "\n";
    };
    out << "objective_matrix\n";
    for (const auto& row : problem.objective_coeffs) dump(row);
    out << "constraint_matrix\n";
    for (const auto& row : problem.constraint_coeffs) dump(row);
    out << "rhs\n";
    dump(problem.rhs);
    out << "lower\n";
    dump(problem.var_lower);
    out << "upper\n";
    for (int j = 0; j < problem.num_vars; ++j) {
        if (j) out << " ";
        if (problem.var_upper[j]) out << *problem.var_upper[j];
        else out << "*";  // implied
    }
    out << "\nend\n";
}

MoilpProblem read_instance(std::istream& in) {
    LineReader reader{in};
    MoilpProblem problem;

    {
        std::string header = reader.expect("format header");
        std::istringstream ss(header);
        std::string magic, version;
        ss >> magic >> version;
        if (magic != kMagic) reader.fail("not an instance file (bad magic)");
        if (version != "v" + std::to_string(kFormatVersion))
            reader.fail("unsupported format version '" + version + "'");
    }

    std::string line = reader.expect("problem sizes");
    if (line.rfind("name ", 0) == 0) {
        problem.name = line.substr(5);
        line = reader.expect("problem sizes");
    }
    auto read_count = [&](std::string current, const std::string& key) {
        std::istringstream ss(current);
        std::string k;
        int value = 0;
        if (!(ss >> k >> value) || k != key)
            reader.fail("expected '" + key + " <count>'");
        return value;
    };
    problem.num_vars = read_count(line, "vars");
    problem.num_objectives = read_count(reader.expect("objectives"), "objectives");
    problem.num_constraints = read_count(reader.expect("constraints"), "constraints");

    auto expect_section = [&](const std::string& section) {
        const std::string got = reader.expect("section '" + section + "'");
        if (got != section) reader.fail("expected section '" + section + "', got '" + got + "'");
    };

    expect_section("objective_matrix");
    for (int k = 0; k < problem.num_objectives; ++k)
        problem.objective_coeffs.push_back(parse_ints(
            reader, reader.expect("objective row"), problem.num_vars, "objective row"));
    expect_section("constraint_matrix");
    for (int i = 0; i < problem.num_constraints; ++i)
        problem.constraint_coeffs.push_back(parse_ints(
            reader, reader.expect("constraint row"), problem.num_vars, "constraint row"));
    expect_section("rhs");
    problem.rhs = parse_ints(reader, reader.expect("rhs"), problem.num_constraints, "rhs");
    expect_section("lower");
    problem.var_lower =
        parse_ints(reader, reader.expect("lower bounds"), problem.num_vars, "lower");
    expect_section("upper");
    {
        std::istringstream ss(reader.expect("upper bounds"));
        std::string token;
        while (ss >> token) {
            if (token == "*") problem.var_upper.push_back(std::nullopt);
            else problem.var_upper.push_back(std::stoll(token));
        }
        if (problem.var_upper.size() != static_cast<std::size_t>(problem.num_vars))
            reader.fail("expected " + std::to_string(problem.num_vars) + " upper bounds");
    }
    expect_section("end");
    problem.validate();
    return problem;
}

void save_instance(const MoilpProblem& problem, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_instance(problem, out);
}

MoilpProblem load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    try {
        return read_instance(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_front_csv(const std::vector<OutcomeVector>& points,
                     const std::string& path, const std::string& strategy_label) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const std::size_t p = points.empty() ? 0 : points.front().size();
    for (std::size_t k = 0; k < p; ++k) out << (k ? "," : "") << "z_" << (k + 1);
    out << ",strategy,iteration\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t k = 0; k < p; ++k) out << (k ? "," : "") << points[i][k];
        out << "," << strategy_label << "," << i << "\n";
    }
}

std::vector<OutcomeVector> read_front_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty CSV");
    int p = 0;
    {
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            if (cell.rfind("z_", 0) == 0) ++p;
    }
    if (p == 0) throw ParseError(path + ": no z_* columns in header");
    std::vector<OutcomeVector> points;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        OutcomeVector z;
        for (int k = 0; k < p; ++k) {
            if (!std::getline(ss, cell, ','))
                throw ParseError(path + ": short row '" + line + "'");
            z.push_back(std::stoll(cell));
        }
        points.push_back(std::move(z));
    }
    return points;
}

}  // namespace epsfront
