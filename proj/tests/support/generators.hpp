#pragma once

// Seeded random generators for property-style tests. Everything here is
// deterministic for a fixed seed.

#include <random>
#include <string>
#include <vector>

#include "verdad/unit.hpp"
#include "verdad/value.hpp"

namespace verdad::testgen {

inline std::string random_ident(std::mt19937& rng, std::size_t min_len = 1,
                                std::size_t max_len = 8) {
    static constexpr char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789_";
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> first(0, 25);
    std::uniform_int_distribution<std::size_t> rest(0, sizeof(alphabet) - 2);
    std::string out;
    const std::size_t n = len(rng);
    out += alphabet[first(rng)];
    while (out.size() < n) out += alphabet[rest(rng)];
    return out;
}

inline UnitExpr random_unit(std::mt19937& rng) {
    static const std::vector<std::string> pool = {
        "m",  "km",    "s",   "kg", "g",  "N",   "kN",  "W",  "J",
        "ft", "in",    "nmi", "AU", "hr", "min", "day", "Pa", "deg",
        "rad", "m/s",  "km/s", "kg*m/s^2", "W/m^2", "J/kg", "1/s"};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return parse_unit(pool[pick(rng)]);
}

inline double random_magnitude(std::mt19937& rng) {
    std::uniform_real_distribution<double> mant(-1000.0, 1000.0);
    std::uniform_int_distribution<int> exp(-6, 6);
    return mant(rng) * std::pow(10.0, exp(rng));
}

// Random value tree for serialization/coercion properties. Depth-bounded.
inline Value random_value(std::mt19937& rng, int depth = 3) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 9 : 6);
    switch (kind(rng)) {
        case 0: return Value::null();
        case 1: return Value::boolean(rng() & 1);
        case 2: {
            std::uniform_int_distribution<std::int64_t> d(-1'000'000, 1'000'000);
            return Value::integer(d(rng));
        }
        case 3: return Value::real(random_magnitude(rng));
        case 4: return Value::text(random_ident(rng, 0, 12));
        case 5: return Value::quantity(Quantity(random_magnitude(rng), random_unit(rng)));
        case 6: {
            std::uniform_real_distribution<double> d(-10000.0, 10000.0);
            return Value::epoch({rng() & 1 ? TimeScale::UTC : TimeScale::TDB, d(rng)});
        }
        case 7: {
            std::uniform_int_distribution<std::size_t> n(0, 4);
            std::vector<Value> elems;
            const std::size_t count = n(rng);
            for (std::size_t i = 0; i < count; ++i)
                elems.push_back(random_value(rng, depth - 1));
            return Value::sequence(std::move(elems));
        }
        case 8: {
            std::uniform_int_distribution<std::size_t> n(0, 4);
            std::vector<std::pair<std::string, Value>> items;
            const std::size_t count = n(rng);
            for (std::size_t i = 0; i < count; ++i) {
                std::string key;
                do {
                    key = random_ident(rng);
                } while ([&] {
                    for (const auto& [k, v] : items)
                        if (k == key) return true;
                    return false;
                }());
                items.emplace_back(key, random_value(rng, depth - 1));
            }
            return Value::map(std::move(items));
        }
        default: {
            std::vector<std::uint8_t> bytes;
            std::uniform_int_distribution<std::size_t> n(0, 8);
            std::uniform_int_distribution<int> byte(0, 255);
            const std::size_t count = n(rng);
            for (std::size_t i = 0; i < count; ++i)
                bytes.push_back(static_cast<std::uint8_t>(byte(rng)));
            return Value::bytes(std::move(bytes));
        }
    }
}

}  // namespace verdad::testgen
