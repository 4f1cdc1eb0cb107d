#pragma once

#include "weakiasi/bipartite.hpp"
#include "weakiasi/constructions.hpp"
#include "weakiasi/error.hpp"
#include "weakiasi/graph.hpp"
#include "weakiasi/integer_set.hpp"
#include "weakiasi/labeling.hpp"
#include "weakiasi/products.hpp"
#include "weakiasi/sidon.hpp"
#include "weakiasi/sparing.hpp"
