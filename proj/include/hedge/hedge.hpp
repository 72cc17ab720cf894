#pragma once

#include "hedge/connectivity.hpp"
#include "hedge/exact.hpp"
#include "hedge/experiments.hpp"
#include "hedge/generators.hpp"
#include "hedge/graph.hpp"
#include "hedge/io.hpp"
#include "hedge/maximizer.hpp"
#include "hedge/sampling.hpp"
#include "hedge/shortest_paths.hpp"
