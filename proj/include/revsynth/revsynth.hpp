#pragma once

#include "revsynth/benchmarks.hpp"
#include "revsynth/bit_columns.hpp"
#include "revsynth/chromosome.hpp"
#include "revsynth/circuit.hpp"
#include "revsynth/circuit_io.hpp"
#include "revsynth/cost.hpp"
#include "revsynth/embedding.hpp"
#include "revsynth/evolution.hpp"
#include "revsynth/fitness.hpp"
#include "revsynth/function_spec.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/oracle.hpp"
#include "revsynth/rng.hpp"
