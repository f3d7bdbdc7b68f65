#include "greensim/control/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

namespace greensim::control {

using nlohmann::ordered_json;

double Triangle::membership(double x) const {
    if (x < a || x > c) return 0.0;
    if (x == b) return 1.0;
    if (x < b) return b > a ? (x - a) / (b - a) : 1.0;
    return c > b ? (c - x) / (c - b) : 1.0;
}

void Triangle::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        fail_validation("fuzzy triangle vertices must be finite");
    }
    if (!(a <= b && b <= c)) fail_validation("fuzzy triangle requires a <= b <= c");
    if (a == c) fail_validation("fuzzy triangle has zero width");
}

void FuzzyVariable::validate() const {
    if (name.empty()) fail_validation("fuzzy variable name must be non-empty");
    if (!(lo < hi)) fail_validation("fuzzy variable '" + name + "': universe requires lo < hi");
    if (terms.empty()) fail_validation("fuzzy variable '" + name + "' has no terms");
    std::set<std::string> seen;
    for (const auto& t : terms) {
        if (!seen.insert(t.name).second) {
            fail_validation("fuzzy variable '" + name + "': duplicate term '" + t.name + "'");
        }
        t.shape.validate();
    }
    // coverage: every point of the universe carries nonzero membership in at
    // least one term (checked on a dense grid plus the endpoints)
    const int probes = 2001;
    for (int i = 0; i < probes; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (probes - 1);
        double best = 0.0;
        for (const auto& t : terms) best = std::max(best, t.shape.membership(x));
        if (best <= 0.0) {
            fail_validation("fuzzy variable '" + name + "': universe not covered near " +
                            std::to_string(x));
        }
    }
}

const FuzzyTerm* FuzzyVariable::find_term(std::string_view term) const {
    for (const auto& t : terms) {
        if (t.name == term) return &t;
    }
    return nullptr;
}

const FuzzyVariable* FuzzyRuleBase::find_input(std::string_view name) const {
    for (const auto& v : inputs) {
        if (v.name == name) return &v;
    }
    return nullptr;
}

const FuzzyVariable* FuzzyRuleBase::find_output(std::string_view name) const {
    for (const auto& v : outputs) {
        if (v.name == name) return &v;
    }
    return nullptr;
}

void FuzzyRuleBase::validate() const {
    for (const auto& v : inputs) v.validate();
    for (const auto& v : outputs) v.validate();
    if (rules.empty()) fail_validation("fuzzy rule base has no rules");
    for (const auto& r : rules) {
        if (r.antecedent.empty()) fail_validation("fuzzy rule with empty antecedent");
        for (const auto& [var, term] : r.antecedent) {
            const auto* v = find_input(var);
            if (v == nullptr) fail_validation("fuzzy rule references unknown input '" + var + "'");
            if (v->find_term(term) == nullptr) {
                fail_validation("fuzzy rule references unknown term '" + var + "." + term + "'");
            }
        }
        const auto* ov = find_output(r.consequent.first);
        if (ov == nullptr) {
            fail_validation("fuzzy rule references unknown output '" + r.consequent.first + "'");
        }
        if (ov->find_term(r.consequent.second) == nullptr) {
            fail_validation("fuzzy rule references unknown term '" + r.consequent.first + "." +
                            r.consequent.second + "'");
        }
    }
}

namespace {

struct Segment {
    double x0, y0, x1, y1;  // x0 < x1
};

// nonzero-region segments of min(alpha, triangle), clipped to [lo, hi]
void clipped_segments(const Triangle& t, double alpha, double lo, double hi,
                      std::vector<Segment>& out) {
    auto add = [&](double x0, double y0, double x1, double y1) {
        // clip to universe
        if (x1 <= lo || x0 >= hi) return;
        if (x0 < lo) {
            y0 = y0 + (y1 - y0) * (lo - x0) / (x1 - x0);
            x0 = lo;
        }
        if (x1 > hi) {
            y1 = y0 + (y1 - y0) * (hi - x0) / (x1 - x0);
            x1 = hi;
        }
        if (x1 > x0) out.push_back({x0, y0, x1, y1});
    };

    if (alpha <= 0.0) return;
    const double plateau_start = t.b > t.a ? t.a + alpha * (t.b - t.a) : t.a;
    const double plateau_end = t.c > t.b ? t.c - alpha * (t.c - t.b) : t.c;
    if (t.b > t.a) add(t.a, 0.0, plateau_start, alpha);
    if (plateau_end > plateau_start) add(plateau_start, alpha, plateau_end, alpha);
    if (t.c > t.b) add(plateau_end, alpha, t.c, 0.0);
}

double aggregate_at(const std::vector<std::pair<double, const Triangle*>>& fired, double x) {
    double m = 0.0;
    for (const auto& [alpha, tri] : fired) {
        m = std::max(m, std::min(alpha, tri->membership(x)));
    }
    return m;
}

// Exact centroid of max over fired terms of min(alpha, mu). The aggregate is
// piecewise linear; breakpoints are segment endpoints plus pairwise segment
// crossings, and between consecutive breakpoints the aggregate is linear.
FuzzyOutput defuzzify(const std::vector<std::pair<double, const Triangle*>>& fired,
                      double lo, double hi) {
    FuzzyOutput out;
    std::vector<Segment> segs;
    for (const auto& [alpha, tri] : fired) clipped_segments(*tri, alpha, lo, hi, segs);

    if (segs.empty()) {
        out.value = 0.5 * (lo + hi);
        out.no_rule_fired = true;
        return out;
    }

    std::vector<double> xs{lo, hi};
    for (const auto& s : segs) {
        xs.push_back(s.x0);
        xs.push_back(s.x1);
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto& p = segs[i];
            const auto& q = segs[j];
            const double left = std::max(p.x0, q.x0);
            const double right = std::min(p.x1, q.x1);
            if (right <= left) continue;
            const double sp = (p.y1 - p.y0) / (p.x1 - p.x0);
            const double sq = (q.y1 - q.y0) / (q.x1 - q.x0);
            if (sp == sq) continue;
            const double xc = ((q.y0 - sq * q.x0) - (p.y0 - sp * p.x0)) / (sp - sq);
            if (xc > left && xc < right) xs.push_back(xc);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    double area = 0.0;
    double moment = 0.0;
    double prev_x = xs.front();
    double prev_y = aggregate_at(fired, prev_x);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double x = xs[i];
        if (x <= prev_x) continue;
        const double y = aggregate_at(fired, x);
        const double d = x - prev_x;
        area += 0.5 * (prev_y + y) * d;
        moment += d * (prev_x * (2.0 * prev_y + y) + x * (prev_y + 2.0 * y)) / 6.0;
        prev_x = x;
        prev_y = y;
    }

    if (area <= 0.0) {
        out.value = 0.5 * (lo + hi);
        out.no_rule_fired = true;
        return out;
    }
    out.value = moment / area;
    out.value = std::clamp(out.value, lo, hi);
    return out;
}

}  // namespace

std::map<std::string, FuzzyOutput> fuzzy_eval(const FuzzyRuleBase& rb,
                                              const std::map<std::string, double>& inputs) {
    rb.validate();
    for (const auto& [name, value] : inputs) {
        if (rb.find_input(name) == nullptr) {
            fail_validation("fuzzy_eval: unknown input variable '" + name + "'");
        }
        if (!std::isfinite(value)) fail_validation("fuzzy_eval: input '" + name + "' not finite");
    }

    // rule strengths
    std::vector<double> strength(rb.rules.size(), 0.0);
    for (std::size_t i = 0; i < rb.rules.size(); ++i) {
        double alpha = 1.0;
        for (const auto& [var_name, term_name] : rb.rules[i].antecedent) {
            const auto it = inputs.find(var_name);
            if (it == inputs.end()) {
                fail_validation("fuzzy_eval: missing input '" + var_name + "'");
            }
            const auto* var = rb.find_input(var_name);
            const double x = std::clamp(it->second, var->lo, var->hi);
            alpha = std::min(alpha, var->find_term(term_name)->shape.membership(x));
        }
        strength[i] = alpha;
    }

    std::map<std::string, FuzzyOutput> result;
    for (const auto& ov : rb.outputs) {
        std::vector<std::pair<double, const Triangle*>> fired;
        for (std::size_t i = 0; i < rb.rules.size(); ++i) {
            if (rb.rules[i].consequent.first != ov.name || strength[i] <= 0.0) continue;
            fired.emplace_back(strength[i], &ov.find_term(rb.rules[i].consequent.second)->shape);
        }
        result[ov.name] = defuzzify(fired, ov.lo, ov.hi);
    }
    return result;
}

double term_crossover(const FuzzyVariable& var, std::string_view left_term,
                      std::string_view right_term) {
    const auto* l = var.find_term(left_term);
    const auto* r = var.find_term(right_term);
    if (l == nullptr || r == nullptr) {
        fail_validation("term_crossover: unknown term on variable '" + var.name + "'");
    }
    auto diff = [&](double x) { return l->shape.membership(x) - r->shape.membership(x); };
    double lo = var.lo;
    double hi = var.hi;
    // scan for a sign change, then bisect
    const int steps = 512;
    double x0 = lo;
    double f0 = diff(x0);
    for (int i = 1; i <= steps; ++i) {
        const double x1 = lo + (hi - lo) * static_cast<double>(i) / steps;
        const double f1 = diff(x1);
        if ((f0 > 0.0 && f1 <= 0.0) || (f0 < 0.0 && f1 >= 0.0)) {
            double a = x0;
            double b = x1;
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a + b);
                if ((diff(a) > 0.0) == (diff(m) > 0.0)) {
                    a = m;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        }
        x0 = x1;
        f0 = f1;
    }
    fail_validation("term_crossover: memberships of '" + std::string(left_term) + "' and '" +
                    std::string(right_term) + "' never cross on '" + var.name + "'");
}

FuzzyRuleBase default_irrigation_rules() {
    FuzzyRuleBase rb;
    rb.inputs = {
        {"temp_trend", -2.0, 2.0,
         {{"falling", {-2.0, -2.0, 0.0}}, {"steady", {-2.0, 0.0, 2.0}}, {"rising", {0.0, 2.0, 2.0}}}},
        {"humidity", 0.0, 100.0,
         {{"low", {0.0, 0.0, 40.0}}, {"medium", {20.0, 50.0, 80.0}}, {"high", {60.0, 100.0, 100.0}}}},
    };
    rb.outputs = {
        {"irrigation", 0.0, 1.0,
         {{"decrease", {0.0, 0.0, 0.5}}, {"hold", {0.0, 0.5, 1.0}}, {"increase", {0.5, 1.0, 1.0}}}},
    };
    auto rule = [](std::string trend, std::string hum, std::string out) {
        return FuzzyRule{{{"temp_trend", std::move(trend)}, {"humidity", std::move(hum)}},
                         {"irrigation", std::move(out)}};
    };
    rb.rules = {
        rule("rising", "low", "increase"),   rule("rising", "medium", "increase"),
        rule("rising", "high", "hold"),      rule("steady", "low", "increase"),
        rule("steady", "medium", "hold"),    rule("steady", "high", "decrease"),
        rule("falling", "low", "hold"),      rule("falling", "medium", "decrease"),
        rule("falling", "high", "decrease"),
    };
    return rb;
}

namespace {

void check_keys(const ordered_json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end()) {
            fail_parse("unknown key '" + key + "' in " + where);
        }
    }
}

FuzzyVariable variable_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_object()) fail_parse(where + " must be an object");
    check_keys(j, {"name", "universe", "terms"}, where);
    FuzzyVariable v;
    if (!j.contains("name") || !j["name"].is_string()) fail_parse(where + ": 'name' missing");
    v.name = j["name"].get<std::string>();
    if (!j.contains("universe") || !j["universe"].is_array() || j["universe"].size() != 2) {
        fail_parse(where + ": 'universe' must be [lo, hi]");
    }
    v.lo = j["universe"][0].get<double>();
    v.hi = j["universe"][1].get<double>();
    if (!j.contains("terms") || !j["terms"].is_array()) fail_parse(where + ": 'terms' missing");
    for (const auto& tj : j["terms"]) {
        check_keys(tj, {"name", "triangle"}, where + " term");
        FuzzyTerm t;
        t.name = tj.at("name").get<std::string>();
        const auto& tri = tj.at("triangle");
        if (!tri.is_array() || tri.size() != 3) fail_parse(where + ": 'triangle' must be [a,b,c]");
        t.shape = {tri[0].get<double>(), tri[1].get<double>(), tri[2].get<double>()};
        v.terms.push_back(std::move(t));
    }
    return v;
}

ordered_json variable_to_json(const FuzzyVariable& v) {
    ordered_json j;
    j["name"] = v.name;
    j["universe"] = {v.lo, v.hi};
    j["terms"] = ordered_json::array();
    for (const auto& t : v.terms) {
        j["terms"].push_back({{"name", t.name}, {"triangle", {t.shape.a, t.shape.b, t.shape.c}}});
    }
    return j;
}

}  // namespace

FuzzyRuleBase load_rule_base(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail_io("cannot open fuzzy rule base '" + path.string() + "'");
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        fail_parse("fuzzy rule base '" + path.string() + "': " + e.what());
    }
    check_keys(j, {"inputs", "outputs", "rules"}, "rule base");

    FuzzyRuleBase rb;
    for (const auto& vj : j.at("inputs")) rb.inputs.push_back(variable_from_json(vj, "input"));
    for (const auto& vj : j.at("outputs")) rb.outputs.push_back(variable_from_json(vj, "output"));
    for (const auto& rj : j.at("rules")) {
        check_keys(rj, {"if", "then"}, "rule");
        FuzzyRule r;
        for (const auto& [var, term] : rj.at("if").items()) {
            r.antecedent.emplace_back(var, term.get<std::string>());
        }
        const auto& then = rj.at("then");
        if (!then.is_object() || then.size() != 1) {
            fail_parse("rule 'then' must contain exactly one output assignment");
        }
        for (const auto& [var, term] : then.items()) {
            r.consequent = {var, term.get<std::string>()};
        }
        rb.rules.push_back(std::move(r));
    }
    rb.validate();
    return rb;
}

std::string rule_base_to_json_text(const FuzzyRuleBase& rb) {
    ordered_json j;
    j["inputs"] = ordered_json::array();
    for (const auto& v : rb.inputs) j["inputs"].push_back(variable_to_json(v));
    j["outputs"] = ordered_json::array();
    for (const auto& v : rb.outputs) j["outputs"].push_back(variable_to_json(v));
    j["rules"] = ordered_json::array();
    for (const auto& r : rb.rules) {
        ordered_json rj;
        rj["if"] = ordered_json::object();
        for (const auto& [var, term] : r.antecedent) rj["if"][var] = term;
        rj["then"] = ordered_json::object();
        rj["then"][r.consequent.first] = r.consequent.second;
        j["rules"].push_back(std::move(rj));
    }
    return j.dump(2) + "\n";
}

}  // namespace greensim::control
