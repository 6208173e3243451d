#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liequad/checks.hpp"

namespace liequad {

/**
 * One CLI invocation: construction, verification, membership and equation
 * export with machine-readable output. All output is byte-deterministic
 * for identical inputs; rationals serialize as exact "p/q" strings.
 */
struct JobSpec {
    std::string command;       // describe|rep|projector|equations|member|inner-ideal|orbit-sample|verify
    std::string type_string;   // e.g. "A3"
    std::string weight_string; // e.g. "0,1,0"
    std::string vector_csv;    // member: comma-separated rationals
    std::string subspace_path; // inner-ideal: one column per line
    std::string word_spec;     // orbit-sample: e.g. "f1:1/2,e2:-1"
    std::optional<std::uint64_t> seed;  // orbit-sample alternative
    std::size_t max_dim = 64;
    std::string format = "text";  // text | json
};

struct JobReport {
    int exit_status = 0;
    std::string command, type, weight;
    nlohmann::json results = nlohmann::json::object();
    std::vector<NamedCheck> checks;
    std::vector<std::string> notes;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["type"] = type;
        j["weight"] = weight;
        j["results"] = results;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }

    std::string render_json() const { return to_json().dump(2) + "\n"; }

    std::string render_text() const {
        std::ostringstream out;
        out << command;
        if (!type.empty()) out << " " << type;
        if (!weight.empty()) out << " [" << weight << "]";
        out << "\n";
        render_value(out, results, "");
        for (const auto& c : checks)
            out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& n : notes) out << "note: " << n << "\n";
        return out.str();
    }

private:
    static void render_value(std::ostringstream& out, const nlohmann::json& j,
                             const std::string& prefix) {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
                render_value(out, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else if (j.is_array()) {
            for (std::size_t i = 0; i < j.size(); ++i)
                render_value(out, j[i], prefix + "[" + std::to_string(i) + "]");
        } else if (!prefix.empty()) {
            out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
        }
    }
};

namespace jobs_detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline RMatrix parse_vector(const std::string& csv, std::size_t dim) {
    auto parts = split(csv, ',');
    if (parts.size() != dim)
        throw ParseError("vector has " + std::to_string(parts.size()) + " slots, expected " +
                         std::to_string(dim));
    RMatrix v(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) v.set(i, 0, parse_rational(parts[i]));
    return v;
}

inline SubspaceData read_subspace(const std::string& path, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open subspace file '" + path + "'");
    SubspaceData M;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        M.columns.push_back(parse_vector(line, dim));
    }
    if (M.columns.empty()) throw ParseError("subspace file '" + path + "' is empty");
    return M;
}

/// Word steps like "f1:1/2" or "e2:-1", comma separated; indices 1-based.
inline std::vector<WordStep> parse_word(const std::string& spec, int rank) {
    std::vector<WordStep> word;
    if (spec.empty()) return word;
    for (const auto& token : split(spec, ',')) {
        if (token.size() < 2 || (token[0] != 'f' && token[0] != 'e'))
            throw ParseError("bad word step '" + token + "'");
        const auto colon = token.find(':');
        WordStep step;
        step.lowering = token[0] == 'f';
        const std::string idx = token.substr(1, colon == std::string::npos ? std::string::npos
                                                                           : colon - 1);
        for (char ch : idx)
            if (ch < '0' || ch > '9') throw ParseError("bad generator index in '" + token + "'");
        if (idx.empty()) throw ParseError("bad word step '" + token + "'");
        step.index = std::stoi(idx) - 1;
        if (step.index < 0 || step.index >= rank)
            throw ParseError("generator index out of range in '" + token + "'");
        if (colon != std::string::npos) step.amount = parse_rational(token.substr(colon + 1));
        word.push_back(step);
    }
    return word;
}

inline std::string vector_csv(const RMatrix& v) {
    std::string out;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        if (i) out += ",";
        out += rational_str(v.get(i, 0));
    }
    return out;
}

/// Term list of one quadratic form: (i, j, coefficient) with i <= j,
/// 1-based, row-major order; the coefficient is the polynomial coefficient
/// of x_i x_j (off-diagonal entries are doubled).
inline nlohmann::json form_terms(const RMatrix& q) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ij, v] : q.entries()) {
        if (ij.first > ij.second) continue;
        const Rational coeff = ij.first == ij.second ? v : v * 2;
        terms.push_back({ij.first + 1, ij.second + 1, rational_str(coeff)});
    }
    return terms;
}

inline std::string form_terms_text(const RMatrix& q) {
    std::string out;
    bool first = true;
    for (const auto& [ij, v] : q.entries()) {
        if (ij.first > ij.second) continue;
        const Rational coeff = ij.first == ij.second ? v : v * 2;
        if (!first) out += "; ";
        out += "(" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) + ") " +
               rational_str(coeff);
        first = false;
    }
    return out;
}

} // namespace jobs_detail

/// Executes one job. Exit status: 0 on success with all checks passing,
/// 1 on an internal invariant failure or failed check, 2 on parse errors,
/// 3 when the dimension cap is exceeded.
inline JobReport run(const JobSpec& spec) {
    JobReport report;
    report.command = spec.command;
    try {
        if (spec.command == "describe") {
            auto rs = build_root_system(spec.type_string);
            report.type = type_str(rs);
            report.results["positive_roots"] = rs.positive_roots.size();
            report.results["dim_g"] = rs.dim_g();
            report.results["rank"] = rs.rank;
            report.results["delta"] = weight_str(rs.delta);
            report.results["highest_root_weight"] = weight_str(rs.root_to_weight(rs.highest_root()));
            return report;
        }

        auto rs = build_root_system(spec.type_string);
        const Weight lambda = parse_weight(spec.weight_string, rs.rank);
        report.type = type_str(rs);
        report.weight = weight_str(lambda);

        if (spec.command == "rep") {
            auto rep = build_module(rs, lambda, spec.max_dim);
            report.results["dim"] = rep.dim;
            nlohmann::json mults = nlohmann::json::array();
            for (const auto& [w, m] : freudenthal_multiplicities(rs, lambda))
                mults.push_back({{"weight", weight_str(w)}, {"multiplicity", m}});
            report.results["weight_multiplicities"] = mults;
            return report;
        }

        const MatrixLieAlgebra L = bracket_closure(build_module(rs, lambda, spec.max_dim));

        if (spec.command == "projector") {
            const ProjectorData P = make_projector(L);
            report.results["c"] = rational_str(P.c);
            report.results["casimir_eigenvalue"] = rational_str(P.casimir_eigenvalue);
            report.results["lichtenstein_constant"] = rational_str(lichtenstein_constant(L));
            report.checks.push_back(
                {"pi_squared_is_c_pi", checks::projector_idempotent_on_endv(L, P.c)});
        } else if (spec.command == "equations") {
            const QuadraticSystem sys = emit_equations(L);
            report.results["dim"] = sys.dim;
            report.results["ambient_constant"] = rational_str(sys.ambient_constant);
            report.results["form_count"] = sys.forms.size();
            nlohmann::json forms = nlohmann::json::array();
            std::vector<std::string> text_forms;
            for (const auto& q : sys.forms) {
                forms.push_back(jobs_detail::form_terms(q));
                text_forms.push_back(jobs_detail::form_terms_text(q));
            }
            if (spec.format == "json")
                report.results["forms"] = forms;
            else
                report.results["forms"] = text_forms;
        } else if (spec.command == "member") {
            const RMatrix v = jobs_detail::parse_vector(spec.vector_csv, L.rep.dim);
            const MembershipResult r = membership_test(L, v);
            report.results["is_member"] = r.is_member;
            report.results["residual_norm_is_zero"] = r.residual.is_zero();
        } else if (spec.command == "inner-ideal") {
            const SubspaceData M = jobs_detail::read_subspace(spec.subspace_path, L.rep.dim);
            report.results["columns"] = M.columns.size();
            report.results["is_inner_ideal"] = inner_ideal_test(L, M);
        } else if (spec.command == "orbit-sample") {
            std::vector<WordStep> word;
            if (spec.seed)
                word = sample_word(rs, *spec.seed);
            else
                word = jobs_detail::parse_word(spec.word_spec, rs.rank);
            const RMatrix v = orbit_sample(L, word);
            report.results["vector"] = jobs_detail::vector_csv(v);
            report.results["is_member"] = membership_test(L, v).is_member;
            std::string rendered;
            for (std::size_t j = 0; j < word.size(); ++j) {
                if (j) rendered += ",";
                rendered += (word[j].lowering ? "f" : "e") + std::to_string(word[j].index + 1) +
                            ":" + rational_str(word[j].amount);
            }
            report.results["word"] = rendered;
        } else if (spec.command == "verify") {
            VerifyReport vr = run_invariant_suite(rs, lambda, spec.max_dim);
            report.checks = vr.checks;
            report.notes = vr.notes;
        } else {
            throw ParseError("unknown command '" + spec.command + "'");
        }
    } catch (const ParseError& e) {
        report.results["error"] = e.what();
        report.exit_status = 2;
        return report;
    } catch (const DimensionCapError& e) {
        report.results["error"] = e.what();
        report.exit_status = 3;
        return report;
    } catch (const Error& e) {
        report.results["error"] = e.what();
        report.exit_status = 1;
        return report;
    }
    for (const auto& c : report.checks)
        if (!c.pass) report.exit_status = 1;
    return report;
}

} // namespace liequad
