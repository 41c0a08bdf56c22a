#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace monadforge {

/// A homogeneous coordinate: coordinate `coord` of projective factor `factor`.
struct Variable {
    std::size_t factor = 0;
    std::size_t coord = 0;

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Integer vector with one entry per projective factor: twists, divisors,
/// first Chern classes and multidegrees of forms.
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
    MultiDegree(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

    static MultiDegree uniform(std::size_t r, std::int64_t value) {
        return MultiDegree(std::vector<std::int64_t>(r, value));
    }

    std::size_t size() const noexcept { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    std::int64_t& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    MultiDegree& operator+=(const MultiDegree& other);
    MultiDegree& operator-=(const MultiDegree& other);
    friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
    friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
    friend MultiDegree operator-(const MultiDegree& a);
    friend MultiDegree operator*(std::int64_t s, const MultiDegree& a);

    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

    /// "(1,-2,0)"
    std::string to_string() const;

private:
    std::vector<std::int64_t> entries_;
};

/// The product P^{a_1} x ... x P^{a_r}. Cheap to copy; the dimension vector is
/// shared and immutable.
class SpaceSpec {
public:
    /// Group labels default to "P<a_i>", so equal-dimension factors form one group.
    explicit SpaceSpec(std::vector<int> dims, std::vector<std::string> group_labels = {});

    /// l copies of P^1, m copies of P^3 and n copies of P^5, labelled "f", "g", "h".
    static SpaceSpec from_groups(int l, int m, int n);

    const std::vector<int>& dims() const noexcept { return data_->dims; }
    int dim(std::size_t factor) const { return data_->dims.at(factor); }
    std::size_t factor_count() const noexcept { return data_->dims.size(); }
    int picard_rank() const noexcept { return static_cast<int>(data_->dims.size()); }
    /// dim X = sum of a_i.
    int dimension() const noexcept { return data_->dimension; }

    /// Total number of homogeneous coordinates, sum of (a_i + 1).
    std::size_t variable_count() const noexcept { return data_->variable_count; }
    /// Flat index of the first coordinate of `factor`.
    std::size_t variable_offset(std::size_t factor) const { return data_->offsets.at(factor); }
    std::size_t flat_index(Variable v) const;
    Variable variable_at(std::size_t flat) const;

    const std::vector<std::string>& group_labels() const noexcept { return data_->labels; }
    /// Factor indices grouped by label, groups in order of first appearance.
    std::vector<std::vector<std::size_t>> groups() const;

    /// "P1xP3xP5"
    std::string to_string() const;

    friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) noexcept;

private:
    struct Data {
        std::vector<int> dims;
        std::vector<std::string> labels;
        std::vector<std::size_t> offsets;
        std::size_t variable_count = 0;
        int dimension = 0;
    };
    std::shared_ptr<const Data> data_;
};

/// Parses "1,3,5" into a dimension vector.
std::vector<int> parse_dims(const std::string& text);
/// Parses "-2,-4,-6" into a MultiDegree.
MultiDegree parse_multidegree(const std::string& text);

} // namespace monadforge
