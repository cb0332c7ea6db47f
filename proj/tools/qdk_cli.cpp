#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdk/cocycle.hpp"
#include "qdk/format.hpp"
#include "qdk/json_io.hpp"
#include "qdk/parse.hpp"
#include "qdk/qmod.hpp"
#include "qdk/qop.hpp"

using namespace qdk;

namespace {

std::string modulus_string(const FieldPtr& f) {
    const auto& m = f->modulus();
    std::string s;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string c = mpq_class(m[i]).get_str();
        if (i == 0) {
            s += c;
        } else {
            if (c != "1") s += c + "*";
            s += "q";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

int emit_reports(const std::vector<Report>& reps, const std::string& format,
                 const std::string& out_path) {
    bool ok = true;
    for (const auto& r : reps) ok = ok && r.all_pass();
    std::string payload;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : reps) arr.push_back(report_to_json(r));
        payload = arr.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& r : reps) r.print(os);
        os << (ok ? "all checks passed\n" : "FAILURES present\n");
        payload = os.str();
    }
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        f << payload;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for iterative q-difference operators at a root of unity"};
    app.require_subcommand(1);

    unsigned long p = 0, N = 2, nmax = 4, trials = 25, kbound = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text", out_path, suite, expr, func, denom_str = "1";
    long deg = 3;
    std::vector<std::string> files;

    auto add_field_opts = [&](CLI::App* c) {
        c->add_option("--p", p, "characteristic (0 or a prime not dividing N)");
        c->add_option("--N", N, "order of q (>= 2)")->check(CLI::Range(2ul, 1000ul));
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* c_field = app.add_subcommand("field", "describe the coefficient field");
    add_field_opts(c_field);

    CLI::App* c_apply = app.add_subcommand("apply", "apply an operator word to a rational function");
    add_field_opts(c_apply);
    c_apply->add_option("expr", expr, "operator word")->required();
    c_apply->add_option("func", func, "rational function")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    add_field_opts(c_verify);
    c_verify->add_option("suite", suite, "qop|hopf|hscript|dprime|all")->required();
    c_verify->add_option("--nmax", nmax, "filtration bound");
    c_verify->add_option("--trials", trials, "random trials");
    c_verify->add_option("--seed", seed, "RNG seed");
    c_verify->add_option("--out", out_path, "write report here instead of stdout");

    CLI::App* c_dprime = app.add_subcommand("dprime", "print the d'_n basis elements");
    add_field_opts(c_dprime);
    c_dprime->add_option("--nmax", nmax, "highest n");

    CLI::App* c_module = app.add_subcommand("module", "operations on module files");
    c_module->require_subcommand(1);
    CLI::App* m_validate = c_module->add_subcommand("validate", "check the defining relations");
    m_validate->add_option("file", files, "module JSON file")->required()->expected(1);
    m_validate->add_option("--kbound", kbound, "operator identity depth (default N+1)");
    m_validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    CLI::App* m_tensor = c_module->add_subcommand("tensor", "tensor product of two modules");
    m_tensor->add_option("files", files, "two module JSON files")->required()->expected(2);
    m_tensor->add_option("-o,--out", out_path, "output module file")->required();
    CLI::App* m_dual = c_module->add_subcommand("dual", "dual module");
    m_dual->add_option("file", files, "module JSON file")->required()->expected(1);
    m_dual->add_option("-o,--out", out_path, "output module file")->required();
    CLI::App* m_solve = c_module->add_subcommand("solve", "polynomial solution space");
    m_solve->add_option("file", files, "module JSON file")->required()->expected(1);
    m_solve->add_option("--deg", deg, "numerator degree bound");
    m_solve->add_option("--denom", denom_str, "denominator polynomial (default 1)");
    m_solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    CLI::App* m_fundmat = c_module->add_subcommand("fundmat", "verify a fundamental matrix");
    m_fundmat->add_option("files", files, "module JSON file and matrix JSON file")
        ->required()
        ->expected(2);
    m_fundmat->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*c_field) {
            auto f = Field::make(p, N);
            if (format == "json") {
                Json j;
                j["schema"] = 1;
                j["characteristic"] = f->characteristic();
                j["N"] = f->order();
                j["degree"] = f->degree();
                j["modulus"] = modulus_string(f);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "characteristic " << f->characteristic() << ", q of order "
                          << f->order() << ", [k : k0] = " << f->degree()
                          << ", modulus " << modulus_string(f) << "\n";
            }
            return 0;
        }

        if (*c_apply) {
            auto f = Field::make(p, N);
            RatFunc result = parse_operator(f, expr).act(parse_ratfunc(f, func));
            if (format == "json") {
                Json j;
                j["schema"] = 1;
                j["result"] = to_string(result);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << to_string(result) << "\n";
            }
            return 0;
        }

        if (*c_verify) {
            auto f = Field::make(p, N);
            std::vector<Report> reps;
            bool known = false;
            if (suite == "qop" || suite == "all") {
                known = true;
                reps.push_back(verify_operator_axioms(f, 5, N + 2, trials, seed));
            }
            if (suite == "hopf" || suite == "all") {
                known = true;
                reps.push_back(verify_hopf_axioms(f, 2 * N));
            }
            if (suite == "hscript" || suite == "all") {
                known = true;
                reps.push_back(verify_hscript(f, nmax, trials, seed));
                reps.push_back(check_cocommutative(f, std::min(nmax, 4ul)));
                reps.push_back(separation_check(f, 2, 3 * N));
            }
            if (suite == "dprime" || suite == "all") {
                known = true;
                reps.push_back(verify_dprime(f, nmax, seed));
            }
            if (!known) {
                std::cerr << "unknown suite '" << suite
                          << "': expected qop|hopf|hscript|dprime|all\n";
                return 2;
            }
            return emit_reports(reps, format, out_path);
        }

        if (*c_dprime) {
            auto f = Field::make(p, N);
            DPrimeTable t = d_prime(f, nmax);
            if (format == "json") {
                Json arr = Json::array();
                for (unsigned long n = 0; n <= nmax; ++n) arr.push_back(t.d[n].str());
                Json j;
                j["schema"] = 1;
                j["dprime"] = std::move(arr);
                std::cout << j.dump(2) << "\n";
            } else {
                for (unsigned long n = 0; n <= nmax; ++n)
                    std::cout << "d'_" << n << " = " << t.d[n].str() << "\n";
            }
            return 0;
        }

        if (*m_validate) {
            QDiffModule v = module_load(files[0]);
            Report rep = module_validate(v, kbound ? kbound : v.field()->order() + 1);
            return emit_reports({rep}, format, "");
        }
        if (*m_tensor) {
            module_save(module_tensor(module_load(files[0]), module_load(files[1])), out_path);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (*m_dual) {
            module_save(module_dual(module_load(files[0])), out_path);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (*m_solve) {
            QDiffModule v = module_load(files[0]);
            Poly den = parse_ratfunc(v.field(), denom_str).num();
            if (parse_ratfunc(v.field(), denom_str).den().degree() != 0)
                throw std::invalid_argument("denominator must be a polynomial");
            SolutionSpace s = module_solve(v, deg, den);
            if (format == "json") {
                Json arr = Json::array();
                for (const auto& vec : s.basis) {
                    Json row = Json::array();
                    for (const auto& e : vec) row.push_back(to_string(e));
                    arr.push_back(std::move(row));
                }
                Json j;
                j["schema"] = 1;
                j["dimension"] = s.basis.size();
                j["basis"] = std::move(arr);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "dimension " << s.basis.size() << "\n";
                for (const auto& vec : s.basis) {
                    std::cout << "(";
                    for (std::size_t i = 0; i < vec.size(); ++i)
                        std::cout << (i ? ", " : "") << to_string(vec[i]);
                    std::cout << ")\n";
                }
            }
            return 0;
        }
        if (*m_fundmat) {
            QDiffModule v = module_load(files[0]);
            std::ifstream in(files[1]);
            if (!in) throw std::invalid_argument("cannot open " + files[1]);
            Json j = Json::parse(in);
            if (!j.contains("X")) throw std::invalid_argument("matrix file: missing X");
            const auto& rows = j["X"];
            RMat x = mat_zero(v.field(), v.rank(), v.rank());
            if (!rows.is_array() || rows.size() != v.rank())
                throw std::invalid_argument("matrix file: wrong shape");
            for (std::size_t i = 0; i < v.rank(); ++i) {
                if (!rows[i].is_array() || rows[i].size() != v.rank())
                    throw std::invalid_argument("matrix file: wrong shape");
                for (std::size_t k = 0; k < v.rank(); ++k)
                    x.at(i, k) = parse_ratfunc(v.field(), rows[i][k].get<std::string>());
            }
            return emit_reports({verify_fundamental_matrix(v, x)}, format, "");
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
