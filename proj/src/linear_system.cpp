#include "lsg/linear_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lsg {

std::string_view to_string(SystemErrorKind kind) {
    switch (kind) {
        case SystemErrorKind::Syntax: return "syntax";
        case SystemErrorKind::NonPrimeModulus: return "non-prime-modulus";
        case SystemErrorKind::EntryOutOfRange: return "entry-out-of-range";
        case SystemErrorKind::VariableOutOfRange: return "variable-out-of-range";
        case SystemErrorKind::EmptyEquation: return "empty-equation";
        case SystemErrorKind::OrphanVariable: return "orphan-variable";
    }
    return "unknown";
}

namespace {

std::string located(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    return os.str();
}

}  // namespace

SystemError::SystemError(SystemErrorKind kind, const std::string& what, std::size_t line,
                         std::size_t column)
    : std::runtime_error(located(what, line, column)), kind_(kind), line_(line), column_(column) {}

LinearSystem::LinearSystem(Residue p, std::vector<std::vector<Residue>> matrix,
                           std::vector<Residue> rhs)
    : p_(p), n_(matrix.empty() ? 0 : matrix.front().size()), matrix_(std::move(matrix)),
      rhs_(std::move(rhs)) {
    if (!is_prime(p_)) {
        throw SystemError(SystemErrorKind::NonPrimeModulus,
                          "modulus " + std::to_string(p_) + " is not prime");
    }
    if (matrix_.empty() || n_ == 0) {
        throw SystemError(SystemErrorKind::Syntax, "system must have at least one equation and one variable");
    }
    if (rhs_.size() != matrix_.size()) {
        throw SystemError(SystemErrorKind::Syntax, "right-hand side length does not match equation count");
    }
    for (std::size_t eq = 0; eq < matrix_.size(); ++eq) {
        const auto& row = matrix_[eq];
        if (row.size() != n_) {
            throw SystemError(SystemErrorKind::Syntax, "ragged coefficient matrix");
        }
        Support s{eq, {}};
        for (std::size_t k = 0; k < n_; ++k) {
            if (row[k] >= p_) {
                throw SystemError(SystemErrorKind::EntryOutOfRange,
                                  "coefficient of x" + std::to_string(k + 1) + " in equation " +
                                      std::to_string(eq + 1) + " is not a residue mod " +
                                      std::to_string(p_));
            }
            if (row[k] != 0) s.variables.push_back(k);
        }
        if (rhs_[eq] >= p_) {
            throw SystemError(SystemErrorKind::EntryOutOfRange,
                              "right-hand side of equation " + std::to_string(eq + 1) +
                                  " is not a residue mod " + std::to_string(p_));
        }
        if (s.variables.empty()) {
            throw SystemError(SystemErrorKind::EmptyEquation,
                              "equation " + std::to_string(eq + 1) + " has no variables");
        }
        supports_.push_back(std::move(s));
    }
    for (std::size_t k = 0; k < n_; ++k) {
        const bool used = std::any_of(matrix_.begin(), matrix_.end(),
                                      [k](const auto& row) { return row[k] != 0; });
        if (!used) {
            throw SystemError(SystemErrorKind::OrphanVariable,
                              "variable x" + std::to_string(k + 1) + " appears in no equation");
        }
    }
}

const Support& LinearSystem::support(std::size_t eq) const {
    if (eq >= supports_.size()) {
        throw std::out_of_range("equation index " + std::to_string(eq + 1) + " out of range 1.." +
                                std::to_string(supports_.size()));
    }
    return supports_[eq];
}

std::vector<std::pair<std::size_t, std::size_t>> LinearSystem::question_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& s : supports_) {
        for (auto t : s.variables) pairs.emplace_back(s.equation, t);
    }
    return pairs;
}

bool LinearSystem::equation_satisfied(std::size_t eq, const Assignment& x) const {
    Residue acc = 0;
    for (auto k : supports_[eq].variables) acc = mod_add(acc, mod_mul(matrix_[eq][k], x[k], p_), p_);
    return acc == rhs_[eq];
}

bool LinearSystem::satisfies(const Assignment& x) const {
    if (x.size() != n_) return false;
    for (std::size_t eq = 0; eq < matrix_.size(); ++eq) {
        if (!equation_satisfied(eq, x)) return false;
    }
    return true;
}

Support support(const LinearSystem& sys, std::size_t ell) {
    if (ell == 0 || ell > sys.equations()) {
        throw std::out_of_range("equation index " + std::to_string(ell) + " out of range 1.." +
                                std::to_string(sys.equations()));
    }
    return sys.support(ell - 1);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(SystemErrorKind kind, const std::string& what) const {
        throw SystemError(kind, what, line_, column());
    }

    void expect(char c) {
        if (peek() != c) fail(SystemErrorKind::Syntax, std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) {
            fail(SystemErrorKind::Syntax, "expected '" + std::string(word) + "'");
        }
        pos_ += word.size();
    }

    std::uint64_t number() {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) {
            pos_ = start;
            fail(SystemErrorKind::Syntax, "expected a nonnegative integer");
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{}) {
            pos_ = start;
            fail(SystemErrorKind::EntryOutOfRange, "integer too large");
        }
        return value;
    }

    void set_column(std::size_t col) { pos_ = col - 1; }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

}  // namespace

LinearSystem parse_system(std::string_view text) {
    Residue p = 0;
    std::size_t n = 0;
    int header = 0;
    std::vector<std::vector<Residue>> matrix;
    std::vector<Residue> rhs;
    std::vector<std::size_t> equation_lines;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        const auto line = strip_comment(raw);
        if (is_blank(line)) {
            if (end == text.size()) break;
            continue;
        }
        LineCursor cur(line, line_no);

        if (header == 0) {
            cur.expect_word("p");
            const auto col = cur.column();
            const auto value = cur.number();
            if (value > (1u << 30) || !is_prime(value)) {
                cur.set_column(col + 1);
                cur.fail(SystemErrorKind::NonPrimeModulus, "modulus " + std::to_string(value) + " is not prime");
            }
            p = static_cast<Residue>(value);
            if (!cur.at_end()) cur.fail(SystemErrorKind::Syntax, "trailing characters after modulus");
            header = 1;
        } else if (header == 1) {
            cur.expect_word("vars");
            const auto value = cur.number();
            if (value == 0 || value > (1u << 20)) {
                cur.fail(SystemErrorKind::EntryOutOfRange, "variable count must be in 1..2^20");
            }
            n = static_cast<std::size_t>(value);
            if (!cur.at_end()) cur.fail(SystemErrorKind::Syntax, "trailing characters after variable count");
            header = 2;
        } else {
            std::vector<Residue> row(n, 0);
            std::vector<bool> seen(n, false);
            bool first = true;
            bool any_nonzero = false;
            while (true) {
                if (!first) {
                    if (cur.peek() == '=') break;
                    cur.expect('+');
                }
                first = false;
                Residue coefficient = 1;
                if (cur.peek() != 'x') {
                    const auto col = cur.column();
                    const auto c = cur.number();
                    if (c >= p) {
                        cur.set_column(col + 1);
                        cur.fail(SystemErrorKind::EntryOutOfRange,
                                 "coefficient " + std::to_string(c) + " is not a residue mod " + std::to_string(p));
                    }
                    coefficient = static_cast<Residue>(c);
                }
                cur.expect('x');
                const auto var_col = cur.column();
                const auto k = cur.number();
                if (k == 0 || k > n) {
                    cur.set_column(var_col);
                    cur.fail(SystemErrorKind::VariableOutOfRange,
                             "variable x" + std::to_string(k) + " outside 1.." + std::to_string(n));
                }
                if (seen[k - 1]) {
                    cur.set_column(var_col);
                    cur.fail(SystemErrorKind::Syntax, "variable x" + std::to_string(k) + " repeated in equation");
                }
                seen[k - 1] = true;
                row[k - 1] = coefficient;
                any_nonzero = any_nonzero || coefficient != 0;
            }
            cur.expect('=');
            const auto rhs_col = cur.column();
            const auto value = cur.number();
            if (value >= p) {
                cur.set_column(rhs_col + 1);
                cur.fail(SystemErrorKind::EntryOutOfRange,
                         "right-hand side " + std::to_string(value) + " is not a residue mod " + std::to_string(p));
            }
            if (!cur.at_end()) cur.fail(SystemErrorKind::Syntax, "trailing characters after right-hand side");
            if (!any_nonzero) {
                throw SystemError(SystemErrorKind::EmptyEquation, "equation has no variables with nonzero coefficient",
                                  line_no, 1);
            }
            matrix.push_back(std::move(row));
            rhs.push_back(static_cast<Residue>(value));
            equation_lines.push_back(line_no);
        }
        if (end == text.size()) break;
    }

    if (header < 2) {
        throw SystemError(SystemErrorKind::Syntax,
                          header == 0 ? "missing 'p <prime>' header" : "missing 'vars <n>' header", line_no, 1);
    }
    if (matrix.empty()) {
        throw SystemError(SystemErrorKind::Syntax, "no equations", line_no, 1);
    }
    return LinearSystem(p, std::move(matrix), std::move(rhs));
}

LinearSystem parse_system(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_system(std::string_view(buffer.str()));
}

LinearSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_system(in);
}

std::string serialize(const LinearSystem& sys) {
    std::ostringstream os;
    os << "p " << sys.modulus() << "\n";
    os << "vars " << sys.variables() << "\n";
    for (const auto& s : sys.supports()) {
        bool first = true;
        for (auto k : s.variables) {
            if (!first) os << " + ";
            first = false;
            os << sys.coefficient(s.equation, k) << " x" << (k + 1);
        }
        os << " = " << sys.rhs(s.equation) << "\n";
    }
    return os.str();
}

std::string system_hash(const LinearSystem& sys) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : serialize(sys)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

// ---------------------------------------------------------------------------
// Elimination

std::optional<Assignment> classical_solve(const LinearSystem& sys) {
    const Residue p = sys.modulus();
    const std::size_t m = sys.equations();
    const std::size_t n = sys.variables();

    // Augmented matrix [M | b].
    std::vector<std::vector<Residue>> a(m, std::vector<Residue>(n + 1));
    for (std::size_t r = 0; r < m; ++r) {
        std::copy(sys.matrix()[r].begin(), sys.matrix()[r].end(), a[r].begin());
        a[r][n] = sys.rhs(r);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(a[pivot], a[rank]);

        const Residue inv = mod_inverse(a[rank][col], p);
        for (auto& v : a[rank]) v = mod_mul(v, inv, p);

        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Residue factor = a[r][col];
            for (std::size_t c = col; c <= n; ++c) {
                a[r][c] = mod_sub(a[r][c], mod_mul(factor, a[rank][c], p), p);
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }

    // A zero row with nonzero right-hand side means 0 = b.
    for (std::size_t r = rank; r < m; ++r) {
        if (a[r][n] != 0) return std::nullopt;
    }

    // Free variables set to zero; pivots read off the reduced rows.
    Assignment x(n, 0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][n];
    return x;
}

LinearSystem magic_square() {
    std::vector<std::vector<Residue>> m(6, std::vector<Residue>(9, 0));
    for (std::size_t row = 0; row < 3; ++row) {
        for (std::size_t col = 0; col < 3; ++col) {
            m[row][3 * row + col] = 1;
            m[3 + col][3 * row + col] = 1;
        }
    }
    return LinearSystem(2, std::move(m), {0, 0, 0, 0, 0, 1});
}

}  // namespace lsg
