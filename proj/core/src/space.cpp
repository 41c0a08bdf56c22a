#include "monadforge/space.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "monadforge/errors.hpp"

namespace monadforge {

MultiDegree& MultiDegree::operator+=(const MultiDegree& other) {
    if (size() != other.size()) throw StructuralError("multidegree lengths differ");
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& other) {
    if (size() != other.size()) throw StructuralError("multidegree lengths differ");
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

MultiDegree operator-(const MultiDegree& a) {
    MultiDegree out = a;
    for (auto& e : out.entries_) e = -e;
    return out;
}

MultiDegree operator*(std::int64_t s, const MultiDegree& a) {
    MultiDegree out = a;
    for (auto& e : out.entries_) e *= s;
    return out;
}

std::string MultiDegree::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

SpaceSpec::SpaceSpec(std::vector<int> dims, std::vector<std::string> group_labels) {
    if (dims.empty()) throw DomainError("a space needs at least one projective factor");
    for (int a : dims) {
        if (a < 1) throw DomainError("factor dimensions must be >= 1, got " + std::to_string(a));
    }
    if (group_labels.empty()) {
        for (int a : dims) group_labels.push_back("P" + std::to_string(a));
    }
    if (group_labels.size() != dims.size()) {
        throw DomainError("expected one group label per factor (" + std::to_string(dims.size()) + "), got " +
                          std::to_string(group_labels.size()));
    }
    Data d;
    d.dims = std::move(dims);
    d.labels = std::move(group_labels);
    for (int a : d.dims) {
        d.offsets.push_back(d.variable_count);
        d.variable_count += static_cast<std::size_t>(a) + 1;
        d.dimension += a;
    }
    data_ = std::make_shared<const Data>(std::move(d));
}

SpaceSpec SpaceSpec::from_groups(int l, int m, int n) {
    if (l < 0 || m < 0 || n < 0 || l + m + n == 0) throw DomainError("need l, m, n >= 0 and not all zero");
    std::vector<int> dims;
    std::vector<std::string> labels;
    for (int i = 0; i < l; ++i) dims.push_back(1), labels.push_back("f");
    for (int i = 0; i < m; ++i) dims.push_back(3), labels.push_back("g");
    for (int i = 0; i < n; ++i) dims.push_back(5), labels.push_back("h");
    return SpaceSpec(std::move(dims), std::move(labels));
}

std::size_t SpaceSpec::flat_index(Variable v) const {
    if (v.factor >= factor_count() || v.coord > static_cast<std::size_t>(dim(v.factor))) {
        throw StructuralError("variable " + std::to_string(v.factor) + "_" + std::to_string(v.coord) +
                              " is outside " + to_string());
    }
    return data_->offsets[v.factor] + v.coord;
}

Variable SpaceSpec::variable_at(std::size_t flat) const {
    if (flat >= variable_count()) throw StructuralError("flat variable index out of range");
    const auto& off = data_->offsets;
    const auto it = std::upper_bound(off.begin(), off.end(), flat);
    const auto factor = static_cast<std::size_t>(it - off.begin()) - 1;
    return Variable{factor, flat - off[factor]};
}

std::vector<std::vector<std::size_t>> SpaceSpec::groups() const {
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < factor_count(); ++i) {
        const auto& label = data_->labels[i];
        if (!members.count(label)) order.push_back(label);
        members[label].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto& label : order) out.push_back(members[label]);
    return out;
}

std::string SpaceSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factor_count(); ++i) {
        if (i) s += 'x';
        s += "P" + std::to_string(data_->dims[i]);
    }
    return s;
}

bool operator==(const SpaceSpec& a, const SpaceSpec& b) noexcept {
    return a.data_ == b.data_ || (a.data_->dims == b.data_->dims && a.data_->labels == b.data_->labels);
}

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto end = comma == std::string::npos ? text.size() : comma;
        std::string item = text.substr(pos, end - pos);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty() && item.front() == '+') item.erase(0, 1);
        std::int64_t v = 0;
        const auto* first = item.data();
        const auto* last = item.data() + item.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (item.empty() || ec != std::errc() || ptr != last) {
            throw ParseError("expected a comma-separated integer list, got '" + text + "'");
        }
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    for (auto v : parse_int_list(text)) {
        if (v < 1 || v > 1000) throw ParseError("factor dimensions must lie in 1..1000, got " + std::to_string(v));
        dims.push_back(static_cast<int>(v));
    }
    return dims;
}

MultiDegree parse_multidegree(const std::string& text) { return MultiDegree(parse_int_list(text)); }

} // namespace monadforge
