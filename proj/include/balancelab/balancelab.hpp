#pragma once

#include "balancelab/amoeba.hpp"
#include "balancelab/cache.hpp"
#include "balancelab/canonical.hpp"
#include "balancelab/checks.hpp"
#include "balancelab/colouring.hpp"
#include "balancelab/edge_set.hpp"
#include "balancelab/enumerator.hpp"
#include "balancelab/errors.hpp"
#include "balancelab/graph.hpp"
#include "balancelab/graph6.hpp"
#include "balancelab/oracles.hpp"
#include "balancelab/pattern.hpp"
#include "balancelab/pattern_match.hpp"
#include "balancelab/report.hpp"
#include "balancelab/solver.hpp"
#include "balancelab/table.hpp"
