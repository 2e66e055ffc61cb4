#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace verdad {

// Dot-separated namespace address. Segments are non-empty and never contain
// the '.' separator; a KeyPath has at least one segment.
class KeyPath {
public:
    KeyPath() = default;
    explicit KeyPath(std::vector<std::string> segments);

    // Parses "a.b.c". Throws InvalidValue on empty input or empty segments.
    static KeyPath parse(std::string_view dotted);

    // Validates a single segment without constructing.
    static bool valid_segment(std::string_view segment) noexcept;

    const std::vector<std::string>& segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }
    bool empty() const noexcept { return segments_.empty(); }
    const std::string& operator[](std::size_t i) const { return segments_[i]; }

    std::string str() const;

    KeyPath child(std::string_view segment) const;
    KeyPath concat(const KeyPath& tail) const;

    // First `n` segments.
    KeyPath prefix(std::size_t n) const;
    // Segments from `n` to the end.
    KeyPath suffix(std::size_t n) const;

    // True when `this` is a prefix of `other` (equality included).
    bool is_prefix_of(const KeyPath& other) const noexcept;

    auto operator<=>(const KeyPath&) const = default;

private:
    std::vector<std::string> segments_;
};

}  // namespace verdad
