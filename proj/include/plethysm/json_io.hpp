#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "plethysm/border_matrix.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/rational.hpp"
#include "plethysm/strips.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

inline constexpr int kFormatVersion = 1;

inline nlohmann::json partition_to_json(const Partition& p) {
    nlohmann::json a = nlohmann::json::array();
    for (int part : p.parts()) a.push_back(part);
    return a;
}

inline Partition partition_from_json(const nlohmann::json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition{std::move(parts)};
}

// Integers small enough for a JSON number stay numeric; anything wider is a
// decimal string.
inline nlohmann::json bigint_to_json(const BigInt& v) {
    if (v.fits_int64()) return v.to_int64();
    return v.to_string();
}

// {"basis":"p"|"s"|"e","terms":[{"key":[...],"num":...,"den":...}]}
template <typename Coeff>
nlohmann::json expansion_to_json(const Expansion<Coeff>& f, const std::string& basis) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : f.terms()) {
        Rational r{c};
        terms.push_back({{"key", partition_to_json(key)},
                         {"num", bigint_to_json(r.numerator())},
                         {"den", bigint_to_json(r.denominator())}});
    }
    return {{"basis", basis}, {"terms", terms}};
}

inline std::pair<Expansion<Rational>, std::string> expansion_from_json(const nlohmann::json& j) {
    Expansion<Rational> f;
    auto read_int = [](const nlohmann::json& v) {
        if (v.is_string()) {
            // decimal string fallback used for values beyond int64
            const std::string& s = v.get_ref<const std::string&>();
            BigInt acc;
            bool negative = !s.empty() && s[0] == '-';
            for (size_t i = negative ? 1 : 0; i < s.size(); ++i)
                acc = acc * BigInt{10} + BigInt{s[i] - '0'};
            return negative ? -acc : acc;
        }
        return BigInt{v.get<long long>()};
    };
    for (const auto& term : j.at("terms"))
        f.add(partition_from_json(term.at("key")),
              Rational{read_int(term.at("num")), read_int(term.at("den"))});
    return {std::move(f), j.at("basis").get<std::string>()};
}

inline nlohmann::json chain_to_json(const StripChain& c) {
    nlohmann::json stages = nlohmann::json::array();
    for (const Partition& s : c.stages) stages.push_back(partition_to_json(s));
    return {{"stages", stages}, {"weights", c.weights}};
}

// Row-major nested arrays.
inline nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace plethysm
