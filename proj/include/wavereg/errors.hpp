#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavereg {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- dataset ingestion ----

class FileNotFoundError : public Error {
public:
    explicit FileNotFoundError(const std::string& path)
        : Error("file not found: " + path) {}
};

class MissingColumnError : public Error {
public:
    explicit MissingColumnError(const std::string& column)
        : Error("missing column: " + column), column_(column) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

class UnparseableCellError : public Error {
public:
    UnparseableCellError(std::size_t row, const std::string& column, const std::string& cell)
        : Error("cell \"" + cell + "\" at data row " + std::to_string(row) + ", column \"" +
                column + "\" is not a finite number"),
          row_(row), column_(column) {}
    std::size_t row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

class NonContiguousYearsError : public Error {
public:
    NonContiguousYearsError(std::size_t row, long long expected, long long got)
        : Error("non-contiguous year at data row " + std::to_string(row) + ": expected " +
                std::to_string(expected) + ", got " + std::to_string(got)),
          row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class EmptySelectionError : public Error {
public:
    EmptySelectionError() : Error("selection contains zero data rows") {}
};

class IndexMismatchError : public Error {
public:
    explicit IndexMismatchError(const std::string& name)
        : Error("series \"" + name + "\" has a different index axis"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DuplicateNameError : public Error {
public:
    explicit DuplicateNameError(const std::string& name)
        : Error("duplicate series name: " + name), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// ---- wavelet transform ----

class UnknownWaveletError : public Error {
public:
    explicit UnknownWaveletError(const std::string& name)
        : Error("unknown wavelet: \"" + name + "\" (supported: haar, db4, sym8)") {}
};

class LevelTooDeepError : public Error {
public:
    LevelTooDeepError(int requested, int j_max)
        : Error("decomposition level " + std::to_string(requested) +
                " exceeds j_max = " + std::to_string(j_max)),
          requested_(requested), j_max_(j_max) {}
    int requested() const noexcept { return requested_; }
    int j_max() const noexcept { return j_max_; }

private:
    int requested_;
    int j_max_;
};

class EmptySignalError : public Error {
public:
    EmptySignalError() : Error("signal is empty") {}
};

class BankMismatchError : public Error {
public:
    explicit BankMismatchError(const std::string& what) : Error("bank mismatch: " + what) {}
};

// ---- regression ----

class RankDeficientError : public Error {
public:
    explicit RankDeficientError(std::vector<std::string> columns)
        : Error("design matrix is rank deficient; implicated columns: " + join(columns)),
          columns_(std::move(columns)) {}
    const std::vector<std::string>& columns() const noexcept { return columns_; }

private:
    static std::string join(const std::vector<std::string>& cols) {
        std::string out;
        for (const auto& c : cols) {
            if (!out.empty()) out += ", ";
            out += c;
        }
        return out;
    }
    std::vector<std::string> columns_;
};

class TooFewSamplesError : public Error {
public:
    TooFewSamplesError(std::size_t n, std::size_t m)
        : Error("too few samples: n = " + std::to_string(n) + " with m = " + std::to_string(m) +
                " predictors (need n >= m + 2)") {}
};

class DegenerateVarianceError : public Error {
public:
    DegenerateVarianceError() : Error("response is constant (TSS = 0, R^2 undefined)") {}
};

class SchemaMismatchError : public Error {
public:
    explicit SchemaMismatchError(const std::string& what) : Error("schema mismatch: " + what) {}
};

class UnknownColumnError : public Error {
public:
    explicit UnknownColumnError(const std::string& name)
        : Error("unknown column: " + name), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DuplicateDerivedColumnError : public Error {
public:
    explicit DuplicateDerivedColumnError(const std::string& name)
        : Error("derived column already exists: " + name) {}
};

// ---- statistics ----

class DegenerateFitError : public Error {
public:
    DegenerateFitError() : Error("R^2 = 1: F statistic unbounded (exact fit)") {}
};

class ZeroRssError : public Error {
public:
    ZeroRssError() : Error("RSS = 0: AIC undefined (exact fit)") {}
};

class InsufficientSamplesError : public Error {
public:
    InsufficientSamplesError(std::size_t n, std::size_t k)
        : Error("AICc undefined for n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                " (need n > k + 1)"),
          n_(n), k_(k) {}
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }

private:
    std::size_t n_;
    std::size_t k_;
};

class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& what)
        : Error("iteration did not converge: " + what) {}
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// ---- pipeline ----

class AllRowsFailedError : public Error {
public:
    AllRowsFailedError() : Error("every scale failed; nothing to rank") {}
};

class InvalidSpecError : public Error {
public:
    explicit InvalidSpecError(const std::string& what) : Error("invalid generator spec: " + what) {}
};

}  // namespace wavereg
