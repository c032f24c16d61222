#pragma once

// Umbrella header for the library. The CLI lives in datrtag/cli.hpp and
// additionally needs CLI11.

#include "datrtag/engine.hpp"
#include "datrtag/error.hpp"
#include "datrtag/fragments.hpp"
#include "datrtag/golden.hpp"
#include "datrtag/syntax.hpp"
#include "datrtag/theory.hpp"
#include "datrtag/tree.hpp"
