#pragma once

#include "hecke/report.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// Named verification suites. Each one is deterministic given its
/// parameters; random sampling inside a suite runs off fixed seeds.
SuiteReport run_coxeter_suite(int n);
SuiteReport run_hecke_suite(int n, const ScalarField* f, int assoc_samples = 2500);
SuiteReport run_injective_words_suite(int n, const ScalarField* f);
SuiteReport run_d_complex_suite(int n, const ScalarField* f, bool guard_override = false);
SuiteReport run_tor_suite(int n, const ScalarField* f, int d_max, bool guard_override = false);
SuiteReport run_ext_suite(int n, const ScalarField* f, int d_max, bool guard_override = false);
SuiteReport run_stability_suite(int n, const ScalarField* f, int d_max,
                                bool guard_override = false);

}  // namespace hecke
