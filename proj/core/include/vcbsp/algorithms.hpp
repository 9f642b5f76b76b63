#pragma once

#include "vcbsp/algorithms/connected_components.hpp"
#include "vcbsp/algorithms/pagerank.hpp"
#include "vcbsp/algorithms/shortest_paths.hpp"
