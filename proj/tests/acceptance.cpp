// Acceptance gate: twelve exact property suites, one PASS/FAIL line each.
// Usage: acceptance CLI_BINARY GOLDEN_DIR

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tauforms/engine.hpp"
#include "tauforms/testkit.hpp"

using namespace tauforms;
using testkit::Rng;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

void line(const char* name, bool ok) {
    auto now = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(now - mark).count();
    mark = now;
    std::printf("[%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", name, secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

void demand(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error(msg);
}

template <class Body>
bool holds(Body&& body) {
    try {
        body();
        return true;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "  violated: %s\n", e.what());
        return false;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    demand(static_cast<bool>(in), "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliRun {
    std::string out;
    int status = -1;
};

CliRun run_cli(const std::string& bin, const std::string& args) {
    std::string cmd = "\"" + bin + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    demand(pipe != nullptr, "failed to launch " + cmd);
    CliRun r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    if (rc != -1 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}

bool epsilon_derivation() {
    return holds([] {
        Rng rng(101);
        demand(testkit::suite_derivation(rng, 500) == 500, "derivation count");
    });
}

bool cone_slices() {
    return holds([] {
        Rng rng(102);
        demand(testkit::suite_cone_slices(rng, 10) == 10, "cone slice count");
    });
}

bool constants_collapse() {
    return holds([] {
        Rng rng(103);
        demand(testkit::suite_constants_collapse(rng, 10) == 11, "collapse count");
    });
}

bool leibniz_and_chain_rule() {
    return holds([] {
        Rng rng(104);
        demand(testkit::suite_tau_leibniz(rng, 5, 200, 50) == 1050, "leibniz count");
    });
}

bool exact_sequence() {
    return holds([] {
        Rng rng(105);
        demand(testkit::suite_exact_sequence(rng, 100) == 100, "sequence count");
        // The linear part vanishes exactly when decomposition against a
        // non-trivial base has zero leading coefficient.
        for (int i = 0; i < 100; ++i) {
            CurvePtr c = rng.curve();
            TauForm base = rng.tau_form(c, true);
            CurveFn g = rng.curve_fn(c);
            auto [f0, g0] = decompose(iota(g), base);
            demand(f0.is_zero(), "trivial forms must decompose with f = 0");
            demand(lambda_map(iota(g)).coeff.is_zero(), "lambda must kill trivial forms");
            demand(base.scaled(f0) + iota(g0) == iota(g), "decomposition must reconstruct");
            CurveFn f1 = rng.curve_fn(c, true);
            TauForm w1 = base.scaled(f1) + iota(g);
            auto [f2, g2] = decompose(w1, base);
            demand(f2 == f1 && !f2.is_zero(), "non-trivial forms must decompose with f != 0");
            demand(!lambda_map(w1).coeff.is_zero(), "lambda must see a non-zero linear part");
        }
    });
}

bool decompose_uniqueness() {
    return holds([] {
        Rng rng(106);
        demand(testkit::suite_decompose_roundtrip(rng, 100) == 100, "roundtrip count");
    });
}

bool equivalence_classes() {
    return holds([] {
        Rng rng(107);
        demand(testkit::suite_equivalence(rng, 100, 50) == 150, "equivalence count");
    });
}

bool pullback_functoriality() {
    return holds([] {
        Rng rng(108);
        demand(testkit::suite_pullback(rng, 50, 50) == 100, "pullback count");
    });
}

bool xi_systems() {
    return holds([] {
        Rng rng(109);
        demand(testkit::suite_xi(rng, 50) == 55, "xi count");
    });
}

bool primitive_sections() {
    return holds([] {
        Rng rng(110);
        demand(testkit::suite_primitive_section(rng, 200) == 200, "section count");
        // Independent coprimality witness through the univariate gcd.
        for (int i = 0; i < 100; ++i) {
            MPoly a = rng.mpoly({"x"}, 3, true, true);
            MPoly b = rng.mpoly({"x"}, 3, true, true);
            auto [content, a1, b1] = primitive_section(a, b);
            demand(content * a1 == a && content * b1 == b, "section must recompose");
            XPoly g = XPoly::gcd_monic(a1.extended({"x"}).to_xpoly("x"),
                                       b1.extended({"x"}).to_xpoly("x"));
            demand(g == XPoly(BaseElem(1)), "primitive parts must be coprime");
        }
    });
}

bool global_dimensions() {
    return holds([] { demand(testkit::suite_globals() == 2, "globals count"); });
}

bool cli_determinism(const std::string& bin, const std::string& golden) {
    return holds([&] {
        demand(!bin.empty() && !golden.empty(),
               "usage: acceptance CLI_BINARY GOLDEN_DIR");
        CliRun text = run_cli(bin, "\"" + golden + "/tour.tf\"");
        demand(text.status == 0, "tour run must exit 0");
        demand(text.out == slurp(golden + "/tour.txt"),
               "text output must match the golden file byte for byte");
        CliRun js = run_cli(bin, "--json \"" + golden + "/tour.tf\"");
        demand(js.status == 0, "tour --json run must exit 0");
        demand(js.out == slurp(golden + "/tour.json"),
               "json output must match the golden file byte for byte");

        // Print -> parse -> evaluate -> print is the identity on randomly
        // generated declarations of every kind.
        Rng rng(112);
        Session session;
        auto declare = [&](const std::string& src) -> Value {
            Script sc = parse_script(src);
            demand(sc.statements.size() == 1, "expected one declaration: " + src);
            Report rep = session.execute(sc.statements[0]);
            demand(rep.ok, "declaration failed: " + rep.message + " in: " + src);
            const auto& d = std::get<Declaration>(sc.statements[0]);
            return session.symbols().at(d.name);
        };
        for (int i = 0; i < 100; ++i) {
            std::string tag = std::to_string(i);
            Value original;
            std::string clause;
            switch (i % 6) {
                case 0: original = rng.base_elem(); break;
                case 1: {
                    MPoly p = rng.mpoly({"x", "y"}, 3, true, true);
                    original = p;
                    break;
                }
                case 2: original = rng.curve(); break;
                case 3: {
                    CurvePtr c = rng.curve();
                    declare("let C" + tag + " : curve = " + c->poly().str() + ";");
                    original = rng.curve_fn(c);
                    clause = " on C" + tag;
                    break;
                }
                case 4: {
                    CurvePtr c = rng.curve();
                    declare("let C" + tag + " : curve = " + c->poly().str() + ";");
                    original = rng.tau_form(c);
                    clause = " on C" + tag;
                    break;
                }
                default: {
                    declare("let P" + tag + " : curve = y;");
                    original = std::make_shared<const CurveMorphism>(
                        rng.line_self_map(projective_line()));
                    clause = " from P" + tag + " to P" + tag;
                    break;
                }
            }
            std::string printed = value_str(original);
            Value reread = declare("let a" + tag + " : " + kind_name(original) + " = " +
                                   printed + clause + ";");
            demand(value_str(reread) == printed,
                   "round trip must be the identity, got " + value_str(reread) +
                       " from " + printed);
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    std::string bin = argc > 1 ? argv[1] : "";
    std::string golden = argc > 2 ? argv[2] : "";
    line("epsilon-derivation", epsilon_derivation());
    line("cone-slices", cone_slices());
    line("constants-collapse", constants_collapse());
    line("leibniz-and-chain-rule", leibniz_and_chain_rule());
    line("exact-sequence", exact_sequence());
    line("decompose-uniqueness", decompose_uniqueness());
    line("equivalence-classes", equivalence_classes());
    line("pullback-functoriality", pullback_functoriality());
    line("xi-systems", xi_systems());
    line("primitive-sections", primitive_sections());
    line("global-dimensions", global_dimensions());
    line("cli-determinism", cli_determinism(bin, golden));
    return failures == 0 ? 0 : 1;
}
