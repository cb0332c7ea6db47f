// Acceptance battery: one printed line per criterion, exit 0 iff all pass.
// Scales: N in {2,3,4,6} in characteristic 0, plus the finite-field instance
// p = 5, N = 3.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qdk/cocycle.hpp"
#include "qdk/parse.hpp"
#include "qdk/qmod.hpp"
#include "qdk/qop.hpp"
#include "qdk/random.hpp"

using namespace qdk;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_time(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1fs", s);
    return buf;
}

struct Tally {
    int failures = 0;
    void line(int idx, const std::string& name, bool pass, const std::string& note) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name;
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << "\n" << std::flush;
        if (!pass) ++failures;
    }
};

std::vector<FieldPtr> instances() {
    std::vector<FieldPtr> fs;
    for (unsigned long N : {2ul, 3ul, 4ul, 6ul}) fs.push_back(Field::make(0, N));
    fs.push_back(Field::make(5, 3));
    return fs;
}

std::string tag(const FieldPtr& f) {
    std::string s = "N=" + std::to_string(f->order());
    if (f->characteristic()) s += ",p=" + std::to_string(f->characteristic());
    return s;
}

bool action_agreement(const FieldPtr& f, std::string& note) {
    const unsigned long N = f->order();
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 50; ++i) {
        RatFunc x = rng.ratfunc(f, 5);
        unsigned long pick = rng.uniform(0, 2);
        bool ok = true;
        if (pick == 0) {
            unsigned long a = rng.uniform(0, N - 1);
            ok = ScriptHElem::sigma(f, a).act(x) == x.sigma(static_cast<long>(a));
        } else if (pick == 1) {
            unsigned long k = rng.uniform(0, N + 2);
            ok = ScriptHElem::delta_image(f, k).act(x) == delta_ratfunc(k, x);
        } else {
            unsigned long n = rng.uniform(0, 2);
            ok = ScriptHElem::d(f, n).act(x) == delta_ratfunc(n * N, x);
        }
        if (!ok) {
            note = tag(f) + " trial " + std::to_string(i);
            return false;
        }
    }
    for (unsigned long n = 0; n <= 4; ++n)
        if (ScriptHElem::d(f, n).act(RatFunc(Poly::monomial(f, n * N, f->one()))) !=
            RatFunc::constant(f->one())) {
            note = tag(f) + " d_" + std::to_string(n) + " on t^(nN)";
            return false;
        }
    return true;
}

bool module_battery(const FieldPtr& f, std::string& note) {
    const unsigned long N = f->order();
    const Poly one_p = Poly::constant(f->one());
    auto fail = [&](const std::string& what) {
        note = tag(f) + " " + what;
        return false;
    };

    auto unit = QDiffModule::unit(f);
    auto vt = QDiffModule::v_t(f);
    if (!module_validate(unit, N + 1).all_pass()) return fail("unit validate");
    if (!module_validate(vt, N + 1).all_pass()) return fail("V_t validate");

    auto su = module_solve(unit, 3, one_p);
    if (su.basis.size() != 1 || su.basis[0][0] != RatFunc::constant(f->one()))
        return fail("solve(unit)");
    auto sv = module_solve(vt, 3, one_p);
    if (sv.basis.size() != 1 || sv.basis[0][0] != RatFunc::t(f)) return fail("solve(V_t)");

    auto tt = module_tensor(vt, vt);
    if (!module_validate(tt, N + 1).all_pass()) return fail("tensor validate");
    auto stt = module_solve(tt, 3, one_p);
    if (stt.basis.size() != 1 || stt.basis[0][0] != sv.basis[0][0] * sv.basis[0][0])
        return fail("tensor-of-solutions");

    auto dv = module_dual(vt);
    if (!module_validate(dv, N + 1).all_pass()) return fail("dual validate");
    auto sd = module_solve(dv, 0, Poly::t(f));
    if (sd.basis.size() != 1) return fail("solve(dual V_t)");
    RatFunc pairing = sd.basis[0][0] * sv.basis[0][0];
    if (pairing.den().degree() != 0 || pairing.num().degree() > 0)
        return fail("dual-evaluation-constant");

    RMat ms = mat_zero(f, 2, 2);
    ms.at(0, 0) = RatFunc::constant(f->q());
    ms.at(1, 1) = RatFunc::constant(f->one());
    QDiffModule w(f, ms, mat_zero(f, 2, 2));
    Rng rng(kDefaultSeed);
    for (int trial = 0; trial < 10; ++trial) {
        RMat p = mat_zero(f, 2, 2);
        do {
            for (auto& e : p.data) e = rng.ratfunc(f, 1);
        } while (!mat_inverse(p));
        QDiffModule tw = gauge_twist(w, p);
        if (!module_validate(tw, N + 1).all_pass())
            return fail("twist " + std::to_string(trial) + " validate");
        if (module_solve(tw, 3, Poly::t(f)).basis.size() > 2)
            return fail("twist " + std::to_string(trial) + " dim bound");
    }
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    Tally tally;
    auto fields = instances();

    {
        bool pass = true;
        std::string note;
        for (const auto& f : fields) {
            auto t0 = Clock::now();
            Report rep = verify_operator_axioms(f, 5, f->order() + 2, 50);
            double dt = seconds_since(t0);
            if (!note.empty()) note += ", ";
            note += tag(f) + " " + fmt_time(dt);
            if (!rep.all_pass()) {
                pass = false;
                note += " CHECKS FAILED";
            }
            if (dt >= 30.0) {
                pass = false;
                note += " OVER BUDGET";
            }
        }
        tally.line(1, "operator axioms, 50 random functions, exact, < 30s per N", pass, note);
    }

    {
        bool pass = true;
        std::string note;
        for (const auto& f : fields) {
            const unsigned long N = f->order();
            for (unsigned long r = 0; r <= 6 && pass; ++r)
                for (unsigned long s = 0; s <= r && pass; ++s)
                    if (q_binom(f, r * N, s * N) != f->binom(r, s)) {
                        pass = false;
                        note = tag(f) + " rN,sN at r=" + std::to_string(r) +
                               ",s=" + std::to_string(s);
                    }
            for (unsigned long a = 0; a <= 5 && pass; ++a)
                for (unsigned long c = 0; c <= a && pass; ++c)
                    for (unsigned long b = 0; b < N && pass; ++b)
                        for (unsigned long d = 0; d < N && pass; ++d) {
                            if (c * N + d > a * N + b) continue;
                            Scalar want = d <= b ? f->binom(a, c) * q_binom(f, b, d)
                                                 : f->zero();
                            if (q_binom(f, a * N + b, c * N + d) != want) {
                                pass = false;
                                note = tag(f) + " q-Lucas at a=" + std::to_string(a) +
                                       ",b=" + std::to_string(b) + ",c=" +
                                       std::to_string(c) + ",d=" + std::to_string(d);
                            }
                        }
        }
        tally.line(2, "q-binomial collapse at multiples of N and q-Lucas", pass, note);
    }

    {
        bool pass = true;
        std::string note;
        for (const auto& f : fields) {
            Report rep = verify_hopf_axioms(f, 2 * f->order());
            if (!rep.all_pass()) {
                pass = false;
                for (const auto& r : rep.results)
                    if (!r.pass) note = tag(f) + " " + r.identity;
            }
        }
        tally.line(3, "Hopf axioms on sigma^a delta^(i), i <= 2N, with non-cocommutativity witness",
                   pass, note);
    }

    {
        bool pass = true;
        std::string note;
        for (const auto& f : fields) {
            // xi = delta - u(sigma - 1) reduces to zero, and delta sigma = q sigma delta
            SmashWord xi = SmashWord::delta(1);
            ScriptHElem u_part =
                ScriptHElem::from_ratfunc(RatFunc::u(f)) *
                (ScriptHElem::sigma(f) - ScriptHElem::one(f));
            if (!(reduce(f, xi) - u_part).is_zero()) {
                pass = false;
                note = tag(f) + " reduce(xi) != 0";
                continue;
            }
            ScriptHElem lhs = reduce(f, SmashWord::delta(1) * SmashWord::sigma());
            ScriptHElem rhs = reduce(f, SmashWord::sigma() * SmashWord::delta(1))
                                  .scaled(f->q());
            if (!(lhs - rhs).is_zero()) {
                pass = false;
                note = tag(f) + " xi sigma != q sigma xi";
                continue;
            }
            Report rep = check_cocommutative(f, 4);
            if (!rep.all_pass()) {
                pass = false;
                for (const auto& r : rep.results)
                    if (!r.pass) note = tag(f) + " " + r.identity;
            }
        }
        tally.line(4, "ScriptH coalgebra: cocommutative, coassociative, counital, centralizer, n <= 4",
                   pass, note);
    }

    {
        bool pass = true;
        std::string note;
        for (const auto& f : fields) {
            auto t0 = Clock::now();
            Report rep = verify_dprime(f, 4);
            double dt = seconds_since(t0);
            if (!note.empty()) note += ", ";
            note += tag(f) + " " + fmt_time(dt);
            if (!rep.all_pass()) {
                pass = false;
                note += " CHECKS FAILED";
            }
            if (dt >= 60.0) {
                pass = false;
                note += " OVER BUDGET";
            }
        }
        tally.line(5, "cocycle pipeline and d' basis, n <= 4, exact, < 60s per N", pass, note);
    }

    {
        bool pass = true;
        std::string note;
        for (const auto& f : fields)
            if (!action_agreement(f, note)) {
                pass = false;
                break;
            }
        tally.line(6, "action coherence: d_n on t^(nN) and 50 random generator/function pairs",
                   pass, note);
    }

    {
        bool pass = true;
        std::string note;
        for (const auto& f : fields) {
            Report rep = separation_check(f, 2, 3 * f->order());
            if (!rep.all_pass()) {
                pass = false;
                note = tag(f);
            }
        }
        tally.line(7, "separation: action matrix of {sigma^a d_n, n <= 2} on {t^m, m <= 3N} has full rank",
                   pass, note);
    }

    {
        bool pass = true;
        std::string note;
        for (const auto& f : fields)
            if (!module_battery(f, note)) {
                pass = false;
                break;
            }
        tally.line(8, "modules: unit/V_t/tensor/dual validate and solve; 10 random gauge twists",
                   pass, note);
    }

    {
        bool pass = false;
        std::string note;
        if (cli_path.empty()) {
            note = "no --cli path given";
        } else {
            std::string out1 = "acceptance_verify_1.json";
            std::string out2 = "acceptance_verify_2.json";
            std::string base = "\"" + cli_path +
                               "\" verify all --N 2 --nmax 3 --trials 10 --format json --out ";
            int r1 = std::system((base + out1).c_str());
            int r2 = std::system((base + out2).c_str());
            std::string a = read_file(out1), b = read_file(out2);
            if (r1 != 0 || r2 != 0) {
                note = "verify all exited nonzero";
            } else if (a.empty() || a != b) {
                note = "reports differ";
            } else {
                pass = true;
                note = std::to_string(a.size()) + " bytes, identical";
            }
            std::remove(out1.c_str());
            std::remove(out2.c_str());
        }
        tally.line(9, "determinism: two `verify all` runs produce byte-identical JSON", pass, note);
    }

    std::cout << (tally.failures == 0 ? "acceptance: all criteria pass"
                                      : "acceptance: FAILURES") << "\n";
    return tally.failures == 0 ? 0 : 1;
}
