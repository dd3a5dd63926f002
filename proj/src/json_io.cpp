#include <fuzzylt/json_io.hpp>

#include <cmath>
#include <fstream>

namespace fuzzylt
{

using nlohmann::json;

namespace
{

double get_number(const json &j, const std::string &path)
{
    if (!j.is_number()) {
        throw schema_error(path, "expected a number");
    }
    return j.get<double>();
}

int get_int(const json &j, const std::string &path)
{
    if (!j.is_number_integer()) {
        throw schema_error(path, "expected an integer");
    }
    return j.get<int>();
}

std::vector<double> get_numbers(const json &j, const std::string &path)
{
    if (!j.is_array()) {
        throw schema_error(path, "expected an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(get_number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

const json &require(const json &j, const char *key, const std::string &path)
{
    if (!j.is_object() || !j.contains(key)) {
        throw schema_error(path + "." + key, "missing required field");
    }
    return j.at(key);
}

json complex_to_json(std::complex<double> z)
{
    return json{{"re", z.real()}, {"im", z.imag()}};
}

const char *phase_name(phase p)
{
    switch (p) {
        case phase::cos:
            return "cos";
        case phase::sin:
            return "sin";
        case phase::none:
            break;
    }
    return "none";
}

} // namespace

json fuzzy_to_json(const fuzzy_number &x)
{
    return std::visit(
        [](const auto &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, triangular_spec>) {
                return json::array({v.l, v.c, v.u});
            } else if constexpr (std::is_same_v<T, affine_endpoints>) {
                return json{{"lower", {v.a, v.b}}, {"upper", {v.g, v.h}}};
            } else {
                return json{{"r", v.r}, {"lower", v.lower}, {"upper", v.upper}};
            }
        },
        x.repr());
}

fuzzy_number fuzzy_from_json(const json &j, const std::string &path)
{
    if (j.is_array()) {
        const auto v = get_numbers(j, path);
        if (v.size() != 3) {
            throw schema_error(path, "triangular number needs exactly 3 entries [l, c, u]");
        }
        try {
            return make_triangular({v[0], v[1], v[2]});
        } catch (const invalid_spec &e) {
            throw schema_error(path, e.what());
        }
    }
    if (j.is_object() && j.contains("r")) {
        sampled_endpoints s{get_numbers(j.at("r"), path + ".r"), get_numbers(require(j, "lower", path), path + ".lower"),
                            get_numbers(require(j, "upper", path), path + ".upper")};
        try {
            return fuzzy_number(std::move(s));
        } catch (const invalid_spec &e) {
            throw schema_error(path, e.what());
        }
    }
    if (j.is_object()) {
        const auto lo = get_numbers(require(j, "lower", path), path + ".lower");
        const auto up = get_numbers(require(j, "upper", path), path + ".upper");
        if (lo.size() != 2) {
            throw schema_error(path + ".lower", "affine endpoint needs [a, b] meaning a + b*r");
        }
        if (up.size() != 2) {
            throw schema_error(path + ".upper", "affine endpoint needs [g, h] meaning g + h*r");
        }
        return fuzzy_number(affine_endpoints{lo[0], lo[1], up[0], up[1]});
    }
    throw schema_error(path, "expected a triangular [l, c, u] array or an affine {lower, upper} record");
}

json signal_to_json(const closed_form_signal &s)
{
    json out = json::array();
    for (const auto &t : s.terms()) {
        out.push_back({{"c", t.c}, {"m", t.m}, {"alpha", t.alpha}, {"beta", t.beta}, {"phase", phase_name(t.ph)}});
    }
    return out;
}

closed_form_signal signal_from_json(const json &j, const std::string &path)
{
    if (!j.is_array()) {
        throw schema_error(path, "expected a list of signal terms");
    }
    std::vector<signal_term> terms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto p = path + "[" + std::to_string(i) + "]";
        const auto &rec = j[i];
        signal_term t;
        t.c = get_number(require(rec, "c", p), p + ".c");
        t.m = rec.contains("m") ? get_int(rec.at("m"), p + ".m") : 0;
        if (t.m < 0) {
            throw schema_error(p + ".m", "power must be nonnegative");
        }
        t.alpha = rec.contains("alpha") ? get_number(rec.at("alpha"), p + ".alpha") : 0.0;
        t.beta = rec.contains("beta") ? get_number(rec.at("beta"), p + ".beta") : 0.0;
        const std::string ph = rec.contains("phase") && rec.at("phase").is_string() ? rec.at("phase").get<std::string>()
                                                                                    : "none";
        if (ph == "none") {
            t.ph = phase::none;
        } else if (ph == "cos") {
            t.ph = phase::cos;
        } else if (ph == "sin") {
            t.ph = phase::sin;
        } else {
            throw schema_error(p + ".phase", "expected one of none, cos, sin");
        }
        terms.push_back(t);
    }
    return closed_form_signal(std::move(terms));
}

json rational_to_json(const rational_function &f)
{
    return json{{"num", f.numerator().coefficients()}, {"den", f.denominator().coefficients()}};
}

rational_function rational_from_json(const json &j, const std::string &path)
{
    auto num = get_numbers(require(j, "num", path), path + ".num");
    auto den = get_numbers(require(j, "den", path), path + ".den");
    try {
        return {polynomial(std::move(num)), polynomial(std::move(den))};
    } catch (const invalid_spec &e) {
        throw schema_error(path + ".den", e.what());
    }
}

problem_file problem_from_json(const json &j)
{
    if (!j.is_object()) {
        throw schema_error("$", "problem file must be a JSON object");
    }
    problem_file pf;
    auto &pr = pf.problem;
    pr.order = get_int(require(j, "order", "$"), "$.order");
    if (pr.order < 1) {
        throw schema_error("$.order", "order must be at least 1");
    }
    pr.coefficients = get_numbers(require(j, "coefficients", "$"), "$.coefficients");
    if (pr.coefficients.size() != static_cast<std::size_t>(pr.order)) {
        throw schema_error("$.coefficients", "expected " + std::to_string(pr.order) + " entries (one per derivative "
                                                 "below the order), got " + std::to_string(pr.coefficients.size()));
    }
    if (j.contains("forcing")) {
        pr.forcing = signal_from_json(j.at("forcing"), "$.forcing");
    }
    const auto &ics = require(j, "initial_conditions", "$");
    if (!ics.is_array()) {
        throw schema_error("$.initial_conditions", "expected an array");
    }
    if (ics.size() != static_cast<std::size_t>(pr.order)) {
        throw schema_error("$.initial_conditions", "expected " + std::to_string(pr.order) + " initial conditions, got "
                                                       + std::to_string(ics.size()));
    }
    for (std::size_t i = 0; i < ics.size(); ++i) {
        pr.initial_conditions.push_back(fuzzy_from_json(ics[i], "$.initial_conditions[" + std::to_string(i) + "]"));
    }

    if (j.contains("r_grid")) {
        const auto &g = j.at("r_grid");
        const double start = get_number(require(g, "start", "$.r_grid"), "$.r_grid.start");
        const double end = get_number(require(g, "end", "$.r_grid"), "$.r_grid.end");
        const int steps = get_int(require(g, "steps", "$.r_grid"), "$.r_grid.steps");
        if (steps < 0) {
            throw schema_error("$.r_grid.steps", "must be nonnegative");
        }
        try {
            pf.grid = r_grid::range(start, end, static_cast<std::size_t>(steps));
        } catch (const invalid_spec &e) {
            throw schema_error("$.r_grid", e.what());
        }
    }
    for (std::size_t i = 0; i < pr.initial_conditions.size(); ++i) {
        const auto rep = is_valid(pr.initial_conditions[i], pf.grid);
        if (!rep) {
            throw schema_error("$.initial_conditions[" + std::to_string(i) + "]",
                               "not a valid fuzzy number: " + rep.violation);
        }
    }

    const json cases = j.contains("cases") ? j.at("cases") : json("all");
    if (cases.is_string() && cases.get<std::string>() == "all") {
        pf.cases = enumerate_cases(pr.order);
    } else if (cases.is_array()) {
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto p = "$.cases[" + std::to_string(i) + "]";
            case_vector cs;
            if (cases[i].is_string()) {
                try {
                    cs = parse_case(cases[i].get<std::string>());
                } catch (const invalid_spec &e) {
                    throw schema_error(p, e.what());
                }
            } else if (cases[i].is_array()) {
                for (std::size_t k = 0; k < cases[i].size(); ++k) {
                    const int v = get_int(cases[i][k], p + "[" + std::to_string(k) + "]");
                    if (v != 1 && v != 2) {
                        throw schema_error(p + "[" + std::to_string(k) + "]", "case entries must be 1 or 2");
                    }
                    cs.push_back(v == 1 ? diff_type::one : diff_type::two);
                }
            } else {
                throw schema_error(p, "expected a case vector");
            }
            if (cs.size() != static_cast<std::size_t>(pr.order)) {
                throw schema_error(p, "case vector length must equal the order");
            }
            pf.cases.push_back(std::move(cs));
        }
    } else {
        throw schema_error("$.cases", "expected \"all\" or a list of case vectors");
    }

    if (j.contains("t_end")) {
        pf.t_end = get_number(j.at("t_end"), "$.t_end");
        if (!(pf.t_end > 0)) {
            throw schema_error("$.t_end", "must be positive");
        }
    }
    if (j.contains("t_steps")) {
        pf.t_steps = get_int(j.at("t_steps"), "$.t_steps");
        if (pf.t_steps < 1) {
            throw schema_error("$.t_steps", "must be at least 1");
        }
    }
    return pf;
}

json problem_to_json(const problem_file &pf)
{
    json ics = json::array();
    for (const auto &ic : pf.problem.initial_conditions) {
        ics.push_back(fuzzy_to_json(ic));
    }
    json cases = json::array();
    for (const auto &cs : pf.cases) {
        cases.push_back(to_string(cs));
    }
    const auto &pts = pf.grid.points;
    return json{{"order", pf.problem.order},
                {"coefficients", pf.problem.coefficients},
                {"forcing", signal_to_json(pf.problem.forcing)},
                {"initial_conditions", ics},
                {"cases", cases},
                {"r_grid", {{"start", pts.front()}, {"end", pts.back()}, {"steps", pts.size() - 1}}},
                {"t_end", pf.t_end},
                {"t_steps", pf.t_steps}};
}

problem_file load_problem(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw schema_error("$", "cannot open problem file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error &e) {
        throw schema_error("$", std::string("malformed JSON: ") + e.what());
    }
    return problem_from_json(j);
}

json solution_to_json(const fuzzy_solution &sol)
{
    json roots = json::array();
    for (const auto &r : sol.denominator_roots.roots) {
        json rec = complex_to_json(r.value);
        rec["multiplicity"] = r.multiplicity;
        roots.push_back(rec);
    }
    json levels = json::array();
    for (std::size_t i = 0; i < sol.r.size(); ++i) {
        levels.push_back({{"r", sol.r[i]}, {"lower", signal_to_json(sol.lower[i])}, {"upper", signal_to_json(sol.upper[i])}});
    }
    return json{{"case", to_string(sol.cs)},
                {"denominator_roots", roots},
                {"validity_T", sol.validity_T},
                {"validity_unbounded", sol.validity_unbounded},
                {"levels", levels}};
}

fuzzy_solution solution_from_json(const json &j)
{
    fuzzy_solution sol;
    const auto &cs = require(j, "case", "$");
    if (!cs.is_string()) {
        throw schema_error("$.case", "expected a case label such as \"1212\"");
    }
    try {
        sol.cs = parse_case(cs.get<std::string>());
    } catch (const invalid_spec &e) {
        throw schema_error("$.case", e.what());
    }
    if (j.contains("denominator_roots")) {
        const auto &roots = j.at("denominator_roots");
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const auto p = "$.denominator_roots[" + std::to_string(i) + "]";
            sol.denominator_roots.roots.push_back(
                {{get_number(require(roots[i], "re", p), p + ".re"), get_number(require(roots[i], "im", p), p + ".im")},
                 get_int(require(roots[i], "multiplicity", p), p + ".multiplicity")});
        }
    }
    sol.validity_T = get_number(require(j, "validity_T", "$"), "$.validity_T");
    sol.validity_unbounded = j.value("validity_unbounded", false);
    const auto &levels = require(j, "levels", "$");
    if (!levels.is_array()) {
        throw schema_error("$.levels", "expected an array");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto p = "$.levels[" + std::to_string(i) + "]";
        sol.r.push_back(get_number(require(levels[i], "r", p), p + ".r"));
        sol.lower.push_back(signal_from_json(require(levels[i], "lower", p), p + ".lower"));
        sol.upper.push_back(signal_from_json(require(levels[i], "upper", p), p + ".upper"));
    }
    return sol;
}

} // namespace fuzzylt
