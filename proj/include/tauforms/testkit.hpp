#pragma once

#include <random>
#include <string>
#include <vector>

#include "tauforms/prolong.hpp"
#include "tauforms/smset.hpp"

namespace tauforms::testkit {

// Deterministic source of random algebraic objects.  All draws go through
// one mt19937_64 stream, so a fixed seed fixes every generated object.
class Rng {
public:
    explicit Rng(unsigned long long seed) : gen_(seed) {}

    long integer(long lo, long hi);
    BaseElem rational(bool nonzero = false);
    BaseElem base_elem(bool nonzero = false, bool allow_t = true);
    MPoly mpoly(const std::vector<std::string>& vars, int max_degree, bool allow_t = true,
                bool nonzero = false);
    EmbeddedVariety variety(bool allow_t = true);

    // Curves drawn from a pool of shapes the constructor certifies: lines
    // over Q(t), conics, hyperbolas, and cubics (some moving with t).
    CurvePtr curve();
    CurveFn curve_fn(const CurvePtr& c, bool nonzero = false);
    TauForm tau_form(const CurvePtr& c, bool nontrivial = false);

    // Non-constant self-map of the line p = y.
    CurveMorphism line_self_map(const CurvePtr& line);

private:
    std::mt19937_64 gen_;
};

// One property suite: a human-readable name and the number of identities
// checked.  Suites throw std::logic_error on the first violated identity,
// so a completed run certifies every check listed.
struct SuiteResult {
    std::string name;
    long checks = 0;
};

long suite_derivation(Rng& rng, int pairs);
long suite_cone_slices(Rng& rng, int count);
long suite_constants_collapse(Rng& rng, int count);
long suite_tau_leibniz(Rng& rng, int curves, int pairs_per_curve, int chain_count);
long suite_exact_sequence(Rng& rng, int count);
long suite_decompose_roundtrip(Rng& rng, int count);
long suite_equivalence(Rng& rng, int count, int intersection_count);
long suite_pullback(Rng& rng, int compositions, int squares);
long suite_xi(Rng& rng, int checks);
long suite_primitive_section(Rng& rng, int count);
long suite_globals();

// The bundled reduced run used by the command-line selftest.
std::vector<SuiteResult> run_selftest(unsigned long long seed);

}  // namespace tauforms::testkit
