#include "verdad/keypath.hpp"

#include "verdad/errors.hpp"

namespace verdad {

KeyPath::KeyPath(std::vector<std::string> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw InvalidValue("key path needs at least one segment");
    for (const auto& s : segments_) {
        if (!valid_segment(s))
            throw InvalidValue("invalid key path segment: '" + s + "'");
    }
}

KeyPath KeyPath::parse(std::string_view dotted) {
    std::vector<std::string> segs;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = dotted.find('.', start);
        if (dot == std::string_view::npos) {
            segs.emplace_back(dotted.substr(start));
            break;
        }
        segs.emplace_back(dotted.substr(start, dot - start));
        start = dot + 1;
    }
    return KeyPath(std::move(segs));
}

bool KeyPath::valid_segment(std::string_view segment) noexcept {
    return !segment.empty() && segment.find('.') == std::string_view::npos;
}

std::string KeyPath::str() const {
    std::string out;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (i) out += '.';
        out += segments_[i];
    }
    return out;
}

KeyPath KeyPath::child(std::string_view segment) const {
    auto segs = segments_;
    segs.emplace_back(segment);
    return KeyPath(std::move(segs));
}

KeyPath KeyPath::concat(const KeyPath& tail) const {
    auto segs = segments_;
    segs.insert(segs.end(), tail.segments_.begin(), tail.segments_.end());
    return KeyPath(std::move(segs));
}

KeyPath KeyPath::prefix(std::size_t n) const {
    return KeyPath(std::vector<std::string>(segments_.begin(), segments_.begin() + n));
}

KeyPath KeyPath::suffix(std::size_t n) const {
    return KeyPath(std::vector<std::string>(segments_.begin() + n, segments_.end()));
}

bool KeyPath::is_prefix_of(const KeyPath& other) const noexcept {
    if (segments_.size() > other.segments_.size()) return false;
    for (std::size_t i = 0; i < segments_.size(); ++i)
        if (segments_[i] != other.segments_[i]) return false;
    return true;
}

}  // namespace verdad
