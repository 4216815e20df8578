#pragma once

#include "bench.hpp"
#include "chain.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "reductions.hpp"
#include "sequences.hpp"
#include "sweeps.hpp"
