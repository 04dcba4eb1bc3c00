#pragma once

#include "dejean/conjugacy.hpp"
#include "dejean/substitution.hpp"
#include "dejean/verifier.hpp"

#include <json.hpp>

namespace dejean {

/// Text format: letters a..z for n <= 26, whitespace-separated integers above.
std::string format_word(const Word& w);
Word parse_word(int n, const std::string& text);

/// Code text: one character per symbol over "-0+".
std::string format_code(const Code& c);
Code parse_code(int n, const std::string& text);

std::string format_bc(const BcWord& u);
BcWord parse_bc(const std::string& text);

char flavor_flag(Flavor f);        // r | n | l
Flavor parse_flavor(char flag);

Ratio parse_ratio(const std::string& text);  // "a/b" or "a"

nlohmann::json witness_json(const FactorWitness& w);
nlohmann::json check_result_json(const CheckResult& r);
nlohmann::json report_json(const VerificationReport& r);
nlohmann::json growth_report_json(const GrowthReport& r);

/// Family dump {n, parity, k, roots, images, L}; flat order is all of W^-,
/// then W^0, then W^+.
nlohmann::json family_json(const RootFamily& fam, const Materialized& m);

struct LoadedFamily {
    int n = 0;
    int k = 0;
    bool odd = false;
    Index L = 0;
    std::vector<BcWord> roots;
    std::vector<Word> images;
};

LoadedFamily family_from_json(const nlohmann::json& j);

/// Per-letter assignment of a loaded construction dump: one conjugacy class
/// of three images per letter, leftover class spare (same rule as
/// make_three_valued_family).
ThreeValuedFamily assign_letters(const LoadedFamily& f);

}  // namespace dejean
