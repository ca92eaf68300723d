#pragma once

#include "benchmarks.hpp"
#include "crossover.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "genome.hpp"
#include "mutation.hpp"
#include "rng.hpp"
#include "selection.hpp"
#include "variety.hpp"
