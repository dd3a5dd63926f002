#ifndef FUZZYLT_JSON_IO_HPP
#define FUZZYLT_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <fuzzylt/errors.hpp>
#include <fuzzylt/fde_solver.hpp>
#include <fuzzylt/fuzzy_number.hpp>
#include <fuzzylt/polynomial.hpp>
#include <fuzzylt/signal.hpp>

namespace fuzzylt
{

// Input document that does not match the expected shape. path() names the
// offending field, e.g. "initial_conditions[2]".
class schema_error : public invalid_spec
{
public:
    schema_error(std::string path, const std::string &msg)
        : invalid_spec(path + ": " + msg), m_path(std::move(path))
    {
    }

    const std::string &path() const noexcept
    {
        return m_path;
    }

private:
    std::string m_path;
};

// Triangular -> [l, c, u]; affine -> {"lower":[a,b],"upper":[g,h]};
// sampled -> {"r":[...],"lower":[...],"upper":[...]}.
nlohmann::json fuzzy_to_json(const fuzzy_number &x);
fuzzy_number fuzzy_from_json(const nlohmann::json &j, const std::string &path = "$");

// List of {"c","m","alpha","beta","phase"} records.
nlohmann::json signal_to_json(const closed_form_signal &s);
closed_form_signal signal_from_json(const nlohmann::json &j, const std::string &path = "$");

// {"num":[...],"den":[...]}, ascending coefficients.
nlohmann::json rational_to_json(const rational_function &f);
rational_function rational_from_json(const nlohmann::json &j, const std::string &path = "$");

struct problem_file {
    fivp_problem problem;
    std::vector<case_vector> cases;
    r_grid grid = r_grid::uniform();
    double t_end = 1.0;
    int t_steps = 100;
};

problem_file problem_from_json(const nlohmann::json &j);
nlohmann::json problem_to_json(const problem_file &pf);
// Throws schema_error for unreadable or malformed files.
problem_file load_problem(const std::string &path);

nlohmann::json solution_to_json(const fuzzy_solution &sol);
fuzzy_solution solution_from_json(const nlohmann::json &j);

} // namespace fuzzylt

#endif
