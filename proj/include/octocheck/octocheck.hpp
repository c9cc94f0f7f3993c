#pragma once

// Umbrella header: exact-arithmetic verification of octonion and Clifford
// algebra identities, with deterministic text/JSON reporting.

#include "octocheck/actions.hpp"
#include "octocheck/check.hpp"
#include "octocheck/clifford.hpp"
#include "octocheck/linalg.hpp"
#include "octocheck/octonion.hpp"
#include "octocheck/orbit.hpp"
#include "octocheck/proof_steps.hpp"
#include "octocheck/rational.hpp"
#include "octocheck/report.hpp"
#include "octocheck/representations.hpp"
#include "octocheck/sampling.hpp"
#include "octocheck/suites.hpp"
