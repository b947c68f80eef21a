#pragma once

#include "kshr/baselines.hpp"
#include "kshr/format.hpp"
#include "kshr/generate.hpp"
#include "kshr/graph.hpp"
#include "kshr/metrics.hpp"
#include "kshr/ranking.hpp"
#include "kshr/rng.hpp"
#include "kshr/shell.hpp"
#include "kshr/sir.hpp"
#include "kshr/spring.hpp"
