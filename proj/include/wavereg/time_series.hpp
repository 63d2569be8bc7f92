#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavereg/errors.hpp"

namespace wavereg {

/// An ordered sequence of annual observations.  The index axis is a run of
/// consecutive years; units are opaque metadata (never interpreted).
/// Immutable after construction.
class TimeSeries {
public:
    TimeSeries(std::string name, std::vector<long long> index, std::vector<double> values,
               std::string units = {})
        : name_(std::move(name)), index_(std::move(index)), values_(std::move(values)),
          units_(std::move(units)) {
        validate();
    }

    /// Convenience: index running start_year .. start_year + n - 1.
    /// (Members initialize in declaration order, so the index is built
    /// from values.size() before `values` is moved from.)
    TimeSeries(std::string name, long long start_year, std::vector<double> values,
               std::string units = {})
        : name_(std::move(name)), index_(make_index(start_year, values.size())),
          values_(std::move(values)), units_(std::move(units)) {
        validate();
    }

    const std::string& name() const noexcept { return name_; }
    const std::vector<long long>& index() const noexcept { return index_; }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& units() const noexcept { return units_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    void validate() const {
        if (index_.size() != values_.size())
            throw LengthMismatchError(index_.size(), values_.size());
        if (index_.empty()) throw EmptySelectionError();
        for (std::size_t i = 1; i < index_.size(); ++i)
            if (index_[i] != index_[i - 1] + 1)
                throw NonContiguousYearsError(i, index_[i - 1] + 1, index_[i]);
        for (double v : values_)
            if (!std::isfinite(v))
                throw Error("series \"" + name_ + "\" contains a non-finite value");
    }

    static std::vector<long long> make_index(long long start, std::size_t n) {
        std::vector<long long> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = start + static_cast<long long>(i);
        return idx;
    }

    std::string name_;
    std::vector<long long> index_;
    std::vector<double> values_;
    std::string units_;
};

/// One dependent series plus at least one independent, all on an identical
/// index axis and with pairwise distinct names.
class AlignedDataset {
public:
    AlignedDataset(TimeSeries dependent, std::vector<TimeSeries> independents)
        : dependent_(std::move(dependent)), independents_(std::move(independents)) {
        if (independents_.empty()) throw Error("dataset needs at least one independent series");
        for (const auto& s : independents_) {
            if (s.name() == dependent_.name()) throw DuplicateNameError(s.name());
            if (s.index() != dependent_.index()) throw IndexMismatchError(s.name());
        }
        for (std::size_t i = 0; i < independents_.size(); ++i)
            for (std::size_t j = i + 1; j < independents_.size(); ++j)
                if (independents_[i].name() == independents_[j].name())
                    throw DuplicateNameError(independents_[i].name());
    }

    const TimeSeries& dependent() const noexcept { return dependent_; }
    const std::vector<TimeSeries>& independents() const noexcept { return independents_; }
    std::size_t n() const noexcept { return dependent_.size(); }

private:
    TimeSeries dependent_;
    std::vector<TimeSeries> independents_;
};

/// Build an AlignedDataset from programmatically constructed series.
/// `dependent_name` must match exactly one entry; everything else becomes
/// an independent, in the given order.
inline AlignedDataset validate_align(const std::vector<TimeSeries>& series,
                                     const std::string& dependent_name) {
    if (series.empty()) throw EmptySelectionError();
    const TimeSeries* dep = nullptr;
    for (const auto& s : series) {
        if (s.name() == dependent_name) {
            if (dep != nullptr) throw DuplicateNameError(dependent_name);
            dep = &s;
        }
    }
    if (dep == nullptr) throw MissingColumnError(dependent_name);
    std::vector<TimeSeries> indeps;
    indeps.reserve(series.size() - 1);
    for (const auto& s : series)
        if (&s != dep) indeps.push_back(s);
    return AlignedDataset(*dep, std::move(indeps));
}

}  // namespace wavereg
