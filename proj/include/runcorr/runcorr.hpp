#pragma once

#include "runcorr/applications.hpp"
#include "runcorr/compositions.hpp"
#include "runcorr/dual_set.hpp"
#include "runcorr/error.hpp"
#include "runcorr/parallel.hpp"
#include "runcorr/report.hpp"
#include "runcorr/run_formula.hpp"
#include "runcorr/sequence.hpp"
#include "runcorr/verify.hpp"
