#pragma once

#include "wturan/clique.hpp"
#include "wturan/error.hpp"
#include "wturan/graph.hpp"
#include "wturan/graph6.hpp"
#include "wturan/graph_io.hpp"
#include "wturan/harness.hpp"
#include "wturan/lagrangian.hpp"
#include "wturan/linear_solve.hpp"
#include "wturan/random.hpp"
#include "wturan/rational.hpp"
#include "wturan/serialize.hpp"
#include "wturan/vertex_set.hpp"
#include "wturan/weights.hpp"
