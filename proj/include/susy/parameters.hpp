#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace susy {

struct Parameter {
    std::string name;
    double value = 0.0;
};

/// Ordered, named coupling constants of one system, e.g. (omega, g).
class ParameterVector {
public:
    ParameterVector() = default;
    ParameterVector(std::initializer_list<Parameter> entries) : entries_(entries) {}
    explicit ParameterVector(std::vector<Parameter> entries) : entries_(std::move(entries)) {}

    /// Value of the named entry; throws ParameterError when absent.
    double operator[](std::string_view name) const;
    double at(std::size_t index) const { return entries_.at(index).value; }
    bool contains(std::string_view name) const;
    void set(std::string_view name, double value);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    const std::vector<Parameter>& entries() const noexcept { return entries_; }
    std::vector<std::string> names() const;
    std::vector<double> values() const;

    /// Entry-wise sum with a shift vector of the same length.
    ParameterVector shifted(const std::vector<double>& delta) const;

    /// "name=value, ..." with full round-trip precision.
    std::string to_string() const;

    friend bool operator==(const ParameterVector&, const ParameterVector&) = default;

private:
    std::vector<Parameter> entries_;
};

/// Interval (lo, hi); infinite endpoints allowed.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains_open(double x) const noexcept { return x > lo && x < hi; }
    bool contains_closed(double x) const noexcept { return x >= lo && x <= hi; }
    double length() const noexcept { return hi - lo; }
    bool finite() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }
};

}  // namespace susy
