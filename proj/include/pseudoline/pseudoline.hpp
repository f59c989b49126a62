#pragma once

#include "coloring.hpp"
#include "constructions.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "report.hpp"
#include "render.hpp"
#include "topology.hpp"
#include "wiring_diagram.hpp"
