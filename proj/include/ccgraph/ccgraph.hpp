#pragma once

#include "ccgraph/automorphism.hpp"
#include "ccgraph/colorflow.hpp"
#include "ccgraph/compose_join.hpp"
#include "ccgraph/gf2.hpp"
#include "ccgraph/graph.hpp"
#include "ccgraph/io.hpp"
#include "ccgraph/join.hpp"
#include "ccgraph/mapping.hpp"
#include "ccgraph/named.hpp"
#include "ccgraph/search.hpp"
#include "ccgraph/structure.hpp"
#include "ccgraph/tree_snark.hpp"
