#pragma once

#include "hookcal/binary_trees.hpp"
#include "hookcal/capacity.hpp"
#include "hookcal/identities.hpp"
#include "hookcal/labeled_trees.hpp"
#include "hookcal/moon.hpp"
#include "hookcal/prufer.hpp"
#include "hookcal/rational.hpp"
#include "hookcal/report.hpp"
#include "hookcal/sequences.hpp"
