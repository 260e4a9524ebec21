#pragma once

#include "choosy/approx.hpp"
#include "choosy/choosability.hpp"
#include "choosy/errors.hpp"
#include "choosy/exact.hpp"
#include "choosy/graph.hpp"
#include "choosy/reductions/artifact.hpp"
#include "choosy/reductions/constraint_graph.hpp"
#include "choosy/reductions/formula.hpp"
#include "choosy/reductions/g_phi_p.hpp"
#include "choosy/reductions/h_phi.hpp"
#include "choosy/reductions/vertex_cover.hpp"
