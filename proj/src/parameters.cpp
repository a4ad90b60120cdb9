#include "susy/parameters.hpp"

#include <algorithm>
#include <sstream>

#include "susy/errors.hpp"

namespace susy {

namespace {

auto find_entry(const std::vector<Parameter>& entries, std::string_view name) {
    return std::find_if(entries.begin(), entries.end(),
                        [&](const Parameter& p) { return p.name == name; });
}

}  // namespace

double ParameterVector::operator[](std::string_view name) const {
    auto it = find_entry(entries_, name);
    if (it == entries_.end()) {
        throw ParameterError("missing parameter '" + std::string(name) + "'");
    }
    return it->value;
}

bool ParameterVector::contains(std::string_view name) const {
    return find_entry(entries_, name) != entries_.end();
}

void ParameterVector::set(std::string_view name, double value) {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const Parameter& p) { return p.name == name; });
    if (it == entries_.end()) {
        entries_.push_back({std::string(name), value});
    } else {
        it->value = value;
    }
}

std::vector<std::string> ParameterVector::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
}

std::vector<double> ParameterVector::values() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.value);
    return out;
}

ParameterVector ParameterVector::shifted(const std::vector<double>& delta) const {
    if (delta.size() != entries_.size()) {
        throw ParameterError("shift vector length does not match parameter count");
    }
    ParameterVector out = *this;
    for (std::size_t i = 0; i < delta.size(); ++i) out.entries_[i].value += delta[i];
    return out;
}

std::string ParameterVector::to_string() const {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i].name << '=' << entries_[i].value;
    }
    return os.str();
}

}  // namespace susy
