#ifndef TWINLAB_TWINLAB_HPP
#define TWINLAB_TWINLAB_HPP

#include "twinlab/errors.hpp"

#include "twinlab/harness/parallel.hpp"
#include "twinlab/harness/report.hpp"
#include "twinlab/harness/rng.hpp"
#include "twinlab/harness/stats.hpp"

#include "twinlab/words/bounds.hpp"
#include "twinlab/words/experiment.hpp"
#include "twinlab/words/io.hpp"
#include "twinlab/words/scan.hpp"
#include "twinlab/words/word.hpp"

#include "twinlab/perms/bruteforce.hpp"
#include "twinlab/perms/experiment.hpp"
#include "twinlab/perms/geometry.hpp"
#include "twinlab/perms/greedy.hpp"
#include "twinlab/perms/io.hpp"
#include "twinlab/perms/partition.hpp"
#include "twinlab/perms/permutation.hpp"
#include "twinlab/perms/points.hpp"

#include "twinlab/alternating/extrema.hpp"
#include "twinlab/alternating/formula.hpp"
#include "twinlab/alternating/patterns.hpp"
#include "twinlab/alternating/rational.hpp"
#include "twinlab/alternating/simulate.hpp"

#endif  // TWINLAB_TWINLAB_HPP
