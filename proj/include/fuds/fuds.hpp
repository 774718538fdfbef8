#pragma once

// Umbrella header: the steady-state engine with fitness-uniform deletion,
// the four bundled problem families, instance IO, run statistics, and the
// experiment grid runner.

#include "fuds/engine.hpp"
#include "fuds/level_table.hpp"
#include "fuds/population.hpp"
#include "fuds/problem.hpp"
#include "fuds/rng.hpp"
#include "fuds/run_trace.hpp"
#include "fuds/schemes.hpp"

#include "fuds/problems/deceptive2d.hpp"
#include "fuds/problems/max3sat.hpp"
#include "fuds/problems/scp.hpp"
#include "fuds/problems/tsp.hpp"

#include "fuds/io/dimacs.hpp"
#include "fuds/io/orlib_scp.hpp"
#include "fuds/io/parse_error.hpp"
#include "fuds/io/tsp_io.hpp"

#include "fuds/stats/aggregate.hpp"
#include "fuds/stats/curve.hpp"
#include "fuds/stats/diversity.hpp"
#include "fuds/stats/histogram.hpp"

#include "fuds/bench/config.hpp"
#include "fuds/bench/csv.hpp"
#include "fuds/bench/experiment.hpp"
