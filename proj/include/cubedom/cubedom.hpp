#pragma once

// Convenience include for the whole library.

#include "cubedom/constructions.hpp"
#include "cubedom/core.hpp"
#include "cubedom/domination.hpp"
#include "cubedom/exact.hpp"
#include "cubedom/hamming.hpp"
#include "cubedom/io.hpp"
#include "cubedom/spanning_tree.hpp"
#include "cubedom/table.hpp"
