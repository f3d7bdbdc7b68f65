#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "greensim/types.hpp"

namespace greensim::control {

// Triangular membership function with vertices a <= b <= c. a == b or b == c
// gives a shoulder (vertical edge at full membership).
struct Triangle {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double membership(double x) const;
    void validate() const;
    bool operator==(const Triangle&) const = default;
};

struct FuzzyTerm {
    std::string name;
    Triangle shape;

    bool operator==(const FuzzyTerm&) const = default;
};

struct FuzzyVariable {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<FuzzyTerm> terms;

    void validate() const;  // includes universe coverage
    const FuzzyTerm* find_term(std::string_view term) const;
    bool operator==(const FuzzyVariable&) const = default;
};

struct FuzzyRule {
    // conjunction of (input variable, term), all must hold (min)
    std::vector<std::pair<std::string, std::string>> antecedent;
    std::pair<std::string, std::string> consequent;  // (output variable, term)

    bool operator==(const FuzzyRule&) const = default;
};

struct FuzzyRuleBase {
    std::vector<FuzzyVariable> inputs;
    std::vector<FuzzyVariable> outputs;
    std::vector<FuzzyRule> rules;

    void validate() const;
    const FuzzyVariable* find_input(std::string_view name) const;
    const FuzzyVariable* find_output(std::string_view name) const;
    bool operator==(const FuzzyRuleBase&) const = default;
};

struct FuzzyOutput {
    double value = 0.0;
    bool no_rule_fired = false;  // neutral midpoint fallback was used
};

// Mamdani inference: antecedents via min, implication via min, aggregation
// via max. Inputs outside a variable's universe are clamped. Defuzzification
// is the exact centroid of the piecewise-linear aggregate (analytic segment
// integration; see the module tests for the fine-grid oracle it is checked
// against). When no rule fires with nonzero strength, the output is the
// midpoint of its universe with no_rule_fired set.
std::map<std::string, FuzzyOutput> fuzzy_eval(const FuzzyRuleBase& rb,
                                              const std::map<std::string, double>& inputs);

// x where the membership of `left_term` and `right_term` cross, used by the
// supervisor for the humidity "low" boundary. Bisection on the difference.
double term_crossover(const FuzzyVariable& var, std::string_view left_term,
                      std::string_view right_term);

// The shipped 9-rule irrigation base over temp_trend x humidity.
FuzzyRuleBase default_irrigation_rules();

// JSON file form (External Interface); unknown keys rejected.
FuzzyRuleBase load_rule_base(const std::filesystem::path& path);
std::string rule_base_to_json_text(const FuzzyRuleBase& rb);

}  // namespace greensim::control
